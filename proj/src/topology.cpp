#include "lrthr/topology.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lrthr {

Topology::Topology(std::vector<TopologyNode> nodes, double field_width, double field_height,
                   double radio_range, NodeId destination)
    : nodes_(std::move(nodes)),
      field_width_(field_width),
      field_height_(field_height),
      radio_range_(radio_range),
      destination_(destination) {
    if (field_width_ <= 0.0 || field_height_ <= 0.0)
        throw std::invalid_argument("topology: field dimensions must be positive");
    if (radio_range_ <= 0.0)
        throw std::invalid_argument("topology: radio range must be positive");
    index_.reserve(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const auto& n = nodes_[i];
        if (!index_.emplace(n.id, i).second)
            throw std::invalid_argument("topology: duplicate node id " + std::to_string(n.id));
        if (n.pos.x < 0.0 || n.pos.x > field_width_ || n.pos.y < 0.0 || n.pos.y > field_height_)
            throw std::invalid_argument("topology: node " + std::to_string(n.id) +
                                        " outside the field");
    }
    if (!has(destination_))
        throw std::invalid_argument("topology: destination is not a member node");
}

const Position& Topology::position(NodeId id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw std::out_of_range("topology: unknown node id " + std::to_string(id));
    return nodes_[it->second].pos;
}

const std::vector<NodeId>& NeighborTables::one_hop(NodeId id) const {
    static const std::vector<NodeId> kEmpty;
    auto it = n1.find(id);
    return it == n1.end() ? kEmpty : it->second;
}

const std::vector<NodeId>& NeighborTables::two_hop(NodeId id) const {
    static const std::vector<NodeId> kEmpty;
    auto it = n2.find(id);
    return it == n2.end() ? kEmpty : it->second;
}

Topology place_nodes(std::uint64_t seed, std::size_t count, double field_width,
                     double field_height, double radio_range) {
    if (count < 2)
        throw std::invalid_argument("place_nodes: need at least 2 nodes");
    if (field_width <= 0.0 || field_height <= 0.0)
        throw std::invalid_argument("place_nodes: zero-area field");
    Rng rng(seed);
    std::vector<TopologyNode> nodes;
    nodes.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Position p{rng.uniform(0.0, field_width), rng.uniform(0.0, field_height)};
        nodes.push_back({static_cast<NodeId>(i), p});
    }
    return Topology(std::move(nodes), field_width, field_height, radio_range,
                    static_cast<NodeId>(count - 1));
}

NeighborTables build_neighbor_tables(const Topology& t) {
    NeighborTables tables;
    const auto& nodes = t.nodes();
    const double range = t.radio_range();
    for (const auto& n : nodes) tables.n1[n.id]; // ensure entries exist
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            if (dist(nodes[i].pos, nodes[j].pos) <= range) {
                tables.n1[nodes[i].id].push_back(nodes[j].id);
                tables.n1[nodes[j].id].push_back(nodes[i].id);
            }
        }
    }
    for (auto& [id, neigh] : tables.n1) std::sort(neigh.begin(), neigh.end());
    for (const auto& n : nodes) {
        std::set<NodeId> two;
        for (NodeId y : tables.n1[n.id])
            for (NodeId z : tables.n1[y])
                if (z != n.id) two.insert(z);
        tables.n2[n.id].assign(two.begin(), two.end());
    }
    return tables;
}

std::vector<NodeId> favorable_one_hop(NodeId x, const NeighborTables& tables, const Topology& t) {
    std::vector<NodeId> out;
    const double dx = t.dist_to_destination(x);
    for (NodeId y : tables.one_hop(x))
        if (dx - t.dist_to_destination(y) > 0.0) out.push_back(y);
    return out;
}

std::vector<std::pair<NodeId, NodeId>> favorable_two_hop(NodeId x, const NeighborTables& tables,
                                                         const Topology& t) {
    std::vector<std::pair<NodeId, NodeId>> out;
    for (NodeId y : favorable_one_hop(x, tables, t)) {
        const double dy = t.dist_to_destination(y);
        for (NodeId z : tables.one_hop(y))
            if (dy - t.dist_to_destination(z) > 0.0) out.emplace_back(y, z);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw std::runtime_error("topology fixture line " + std::to_string(line) + ": " + what);
}

} // namespace

Topology load_topology(std::istream& in) {
    double fw = -1.0, fh = -1.0, range = -1.0;
    bool have_dest = false;
    NodeId dest = 0;
    std::vector<TopologyNode> nodes;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "field") {
            if (!(ls >> fw >> fh)) parse_fail(lineno, "expected 'field W H'");
        } else if (first == "range") {
            if (!(ls >> range)) parse_fail(lineno, "expected 'range R'");
        } else if (first == "destination") {
            if (!(ls >> dest)) parse_fail(lineno, "expected 'destination ID'");
            have_dest = true;
        } else {
            NodeId id;
            double x, y;
            std::istringstream ns(line);
            if (!(ns >> id >> x >> y)) parse_fail(lineno, "expected 'id x y'");
            nodes.push_back({id, {x, y}});
        }
    }
    if (fw <= 0.0 || fh <= 0.0) throw std::runtime_error("topology fixture: missing field header");
    if (range <= 0.0) throw std::runtime_error("topology fixture: missing range header");
    if (!have_dest) throw std::runtime_error("topology fixture: missing destination header");
    return Topology(std::move(nodes), fw, fh, range, dest);
}

Topology load_topology_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open topology fixture: " + path);
    return load_topology(in);
}

void save_topology(const Topology& t, std::ostream& out) {
    out.precision(17);
    out << "field " << t.field_width() << ' ' << t.field_height() << '\n';
    out << "range " << t.radio_range() << '\n';
    out << "destination " << t.destination() << '\n';
    for (const auto& n : t.nodes()) out << n.id << ' ' << n.pos.x << ' ' << n.pos.y << '\n';
}

} // namespace lrthr
