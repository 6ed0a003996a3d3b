/*
 * topology.hpp -- node placement, geometry, neighbor tables and the
 * favorable-forwarder sets used by every routing policy.
 */
#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lrthr/rng.hpp"

namespace lrthr {

using NodeId = std::uint32_t;

struct Position {
    double x = 0.0;
    double y = 0.0;
};

inline double dist(const Position& a, const Position& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

struct TopologyNode {
    NodeId id;
    Position pos;
};

class Topology {
  public:
    Topology() = default;
    Topology(std::vector<TopologyNode> nodes, double field_width, double field_height,
             double radio_range, NodeId destination);

    const std::vector<TopologyNode>& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }
    double field_width() const { return field_width_; }
    double field_height() const { return field_height_; }
    double radio_range() const { return radio_range_; }
    NodeId destination() const { return destination_; }

    bool has(NodeId id) const { return index_.count(id) != 0; }
    const Position& position(NodeId id) const;
    double dist_between(NodeId a, NodeId b) const { return dist(position(a), position(b)); }
    double dist_to_destination(NodeId id) const { return dist(position(id), position(destination_)); }

  private:
    std::vector<TopologyNode> nodes_;
    std::unordered_map<NodeId, std::size_t> index_;
    double field_width_ = 0.0;
    double field_height_ = 0.0;
    double radio_range_ = 0.0;
    NodeId destination_ = 0;
};

// One-hop and two-hop neighbor sets, symmetric under the uniform radio range.
struct NeighborTables {
    std::unordered_map<NodeId, std::vector<NodeId>> n1; // sorted by id
    std::unordered_map<NodeId, std::vector<NodeId>> n2; // sorted by id

    const std::vector<NodeId>& one_hop(NodeId id) const;
    const std::vector<NodeId>& two_hop(NodeId id) const;
};

// Uniform placement of `count` nodes in the field; node count-1 is the
// destination. Deterministic for a fixed seed.
Topology place_nodes(std::uint64_t seed, std::size_t count, double field_width,
                     double field_height, double radio_range);

NeighborTables build_neighbor_tables(const Topology& t);

// Neighbors of x strictly closer to the destination than x.
std::vector<NodeId> favorable_one_hop(NodeId x, const NeighborTables& tables,
                                      const Topology& t);

// (via, relay) pairs: via favorable from x, relay a neighbor of via strictly
// closer to the destination than via. The destination itself qualifies as a
// relay (distance zero beats any favorable via).
std::vector<std::pair<NodeId, NodeId>> favorable_two_hop(NodeId x, const NeighborTables& tables,
                                                         const Topology& t);

// Plain-text fixture format: header lines "field W H", "range R",
// "destination ID", then one "id x y" line per node. '#' starts a comment.
Topology load_topology(std::istream& in);
Topology load_topology_file(const std::string& path);
void save_topology(const Topology& t, std::ostream& out);

} // namespace lrthr
