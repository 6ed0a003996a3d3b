/*
 * forwarding.hpp -- per-packet next-hop selection.
 *
 * Three policies behind one context type: the two-hop
 * reliability/velocity/energy policy, a two-hop velocity+energy baseline,
 * and a one-hop velocity-threshold baseline. All are pure functions of the
 * context (the velocity-threshold baseline additionally consumes a seeded
 * stream for its proportional draw).
 */
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lrthr/rng.hpp"
#include "lrthr/topology.hpp"

namespace lrthr {

struct NeighborInfo {
    NodeId id = 0;
    double dist_to_dest = 0.0; // meters
    double prr = 1.0;          // reported reception ratio of the link self->id
    double delay = 0.0;        // estimated hop delay self->id, seconds
    double energy_ratio = 1.0; // E/E0 of the neighbor
};

struct RelayPair {
    NodeId via = 0;   // favorable one-hop neighbor
    NodeId relay = 0; // favorable neighbor of via
    double relay_dist_to_dest = 0.0;
    double second_hop_delay = 0.0; // via's advertised delay toward relay

    friend bool operator<(const RelayPair& a, const RelayPair& b) {
        return a.via != b.via ? a.via < b.via : a.relay < b.relay;
    }
};

struct ForwardingContext {
    NodeId self = 0;
    NodeId destination = 0;
    double dist_to_dest = 0.0;
    double lag_time = 0.0; // remaining deadline budget, seconds
    int hops_travelled = 0;
    bool destination_in_one_hop = false;
    std::vector<NeighborInfo> one_hop;    // favorable only, sorted by id
    std::vector<RelayPair> two_hop_pairs; // sorted by (via, relay)

    const NeighborInfo* find_neighbor(NodeId id) const;
};

struct ForwardingWeights {
    double a = 0.1; // reliability
    double b = 0.8; // velocity
    double c = 0.1; // energy

    void validate() const;
};

enum class DecisionReason { Selected, NoCandidate, VelocityUnreachable };

struct Decision {
    std::optional<NodeId> next_hop; // empty means drop
    DecisionReason reason = DecisionReason::NoCandidate;
    double chosen_metric = 0.0;

    bool is_drop() const { return !next_hop.has_value(); }
};

// dist/lag: the minimum sustained geographic speed that still meets the
// deadline. lag must be positive (expired packets are dropped upstream).
double required_velocity(double dist_to_dest, double lag_time);

// progress over one hop divided by its delay estimate
double one_hop_velocity(const ForwardingContext& ctx, const NeighborInfo& y);

// progress to the relay divided by the two-hop delay sum
double two_hop_velocity(const ForwardingContext& ctx, const RelayPair& pair);

// Header renewal at a transmitter: subtract the hold time plus the packet's
// own air time from the remaining budget. A non-positive result means the
// deadline expired in transit.
double update_lag_time(double lag_prev, double t_rx, double t_tx, double packet_size_bytes,
                       double bandwidth);

// Normalized weighted scores over the qualifying pairs; each term's
// denominator is the sum over the candidates, and a zero denominator mutes
// that term for everyone. Scores align with `candidates` by index.
std::vector<double> rve_scores(const ForwardingContext& ctx,
                               const std::vector<RelayPair>& candidates,
                               const ForwardingWeights& weights);

struct LrthrOptions {
    ForwardingWeights weights;
    bool strict_drop = false; // drop instead of best-effort when nothing meets V_req
};

Decision decide_lrthr(const ForwardingContext& ctx, const LrthrOptions& opts);

struct ThvrOptions {
    double energy_weight_c = 0.9;   // weight on velocity; 1-C goes to energy
    double velocity_setpoint = 0.0; // fixed qualifying threshold, m/s
    bool drop_control = true;       // drop near-source packets that cannot meet V_req
    int near_source_hops = 2;
};

Decision decide_thvr(const ForwardingContext& ctx, const ThvrOptions& opts);

// One-hop candidates at or above the setpoint, picked with probability
// proportional to velocity; drops when none qualify.
Decision decide_speed(const ForwardingContext& ctx, double setpoint, Rng& rng);

} // namespace lrthr
