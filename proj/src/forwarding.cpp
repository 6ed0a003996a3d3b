#include "lrthr/forwarding.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lrthr {

const NeighborInfo* ForwardingContext::find_neighbor(NodeId id) const {
    auto it = std::lower_bound(one_hop.begin(), one_hop.end(), id,
                               [](const NeighborInfo& n, NodeId v) { return n.id < v; });
    return (it != one_hop.end() && it->id == id) ? &*it : nullptr;
}

void ForwardingWeights::validate() const {
    if (a < 0.0 || b < 0.0 || c < 0.0)
        throw std::invalid_argument("forwarding weights must be non-negative");
    if (std::abs(a + b + c - 1.0) > 1e-9)
        throw std::invalid_argument("forwarding weights must sum to 1");
}

double required_velocity(double dist_to_dest, double lag_time) {
    if (dist_to_dest == 0.0) return 0.0;
    if (lag_time <= 0.0) throw std::invalid_argument("required_velocity: packet expired");
    return dist_to_dest / lag_time;
}

double one_hop_velocity(const ForwardingContext& ctx, const NeighborInfo& y) {
    if (y.delay <= 0.0) throw std::logic_error("one_hop_velocity: non-positive delay estimate");
    return (ctx.dist_to_dest - y.dist_to_dest) / y.delay;
}

double two_hop_velocity(const ForwardingContext& ctx, const RelayPair& pair) {
    const NeighborInfo* via = ctx.find_neighbor(pair.via);
    if (via == nullptr) throw std::logic_error("two_hop_velocity: pair's via not in one-hop set");
    const double total = via->delay + pair.second_hop_delay;
    if (via->delay <= 0.0 || pair.second_hop_delay <= 0.0 || total <= 0.0)
        throw std::logic_error("two_hop_velocity: non-positive delay estimate");
    return (ctx.dist_to_dest - pair.relay_dist_to_dest) / total;
}

double update_lag_time(double lag_prev, double t_rx, double t_tx, double packet_size_bytes,
                       double bandwidth) {
    if (t_tx < t_rx) throw std::logic_error("update_lag_time: transmit before receive");
    if (bandwidth <= 0.0) throw std::invalid_argument("update_lag_time: bandwidth must be positive");
    return lag_prev - (t_tx - t_rx + packet_size_bytes / bandwidth);
}

std::vector<double> rve_scores(const ForwardingContext& ctx,
                               const std::vector<RelayPair>& candidates,
                               const ForwardingWeights& weights) {
    weights.validate();
    const std::size_t n = candidates.size();
    std::vector<double> prr(n), vel(n), energy(n);
    double prr_sum = 0.0, vel_sum = 0.0, energy_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const NeighborInfo* via = ctx.find_neighbor(candidates[i].via);
        if (via == nullptr) throw std::logic_error("rve_scores: pair's via not in one-hop set");
        prr[i] = via->prr;
        vel[i] = two_hop_velocity(ctx, candidates[i]);
        energy[i] = via->energy_ratio;
        prr_sum += prr[i];
        vel_sum += vel[i];
        energy_sum += energy[i];
    }
    std::vector<double> scores(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        if (prr_sum > 0.0) s += weights.a * (prr[i] / prr_sum);
        if (vel_sum > 0.0) s += weights.b * (vel[i] / vel_sum);
        if (energy_sum > 0.0) s += weights.c * (energy[i] / energy_sum);
        scores[i] = s;
    }
    return scores;
}

namespace {

// Pairs with a usable two-hop delay, preserving (via, relay) order.
std::vector<RelayPair> usable_pairs(const ForwardingContext& ctx) {
    std::vector<RelayPair> out;
    out.reserve(ctx.two_hop_pairs.size());
    for (const auto& p : ctx.two_hop_pairs) {
        const NeighborInfo* via = ctx.find_neighbor(p.via);
        if (via == nullptr || via->delay <= 0.0 || p.second_hop_delay <= 0.0) continue;
        out.push_back(p);
    }
    return out;
}

Decision best_effort_pair(const ForwardingContext& ctx, const std::vector<RelayPair>& pairs) {
    const RelayPair* best = nullptr;
    double best_v = 0.0;
    for (const auto& p : pairs) {
        const double v = two_hop_velocity(ctx, p);
        if (best == nullptr || v > best_v) {
            best = &p;
            best_v = v;
        }
    }
    if (best == nullptr) return {std::nullopt, DecisionReason::NoCandidate, 0.0};
    return {best->via, DecisionReason::Selected, best_v};
}

Decision terminal_hop(const ForwardingContext& ctx) {
    return {ctx.destination, DecisionReason::Selected, 0.0};
}

} // namespace

Decision decide_lrthr(const ForwardingContext& ctx, const LrthrOptions& opts) {
    if (ctx.destination_in_one_hop) return terminal_hop(ctx);

    const std::vector<RelayPair> pairs = usable_pairs(ctx);
    if (pairs.empty()) return {std::nullopt, DecisionReason::NoCandidate, 0.0};

    const double v_req = required_velocity(ctx.dist_to_dest, ctx.lag_time);
    std::vector<RelayPair> qualifying;
    qualifying.reserve(pairs.size());
    for (const auto& p : pairs)
        if (two_hop_velocity(ctx, p) >= v_req) qualifying.push_back(p);

    if (qualifying.empty()) {
        if (opts.strict_drop) return {std::nullopt, DecisionReason::VelocityUnreachable, 0.0};
        return best_effort_pair(ctx, pairs);
    }
    if (qualifying.size() == 1)
        return {qualifying.front().via, DecisionReason::Selected,
                two_hop_velocity(ctx, qualifying.front())};

    const std::vector<double> scores = rve_scores(ctx, qualifying, opts.weights);
    std::size_t best = 0;
    for (std::size_t i = 1; i < scores.size(); ++i)
        if (scores[i] > scores[best]) best = i; // ties keep the smaller (via, relay)
    return {qualifying[best].via, DecisionReason::Selected, scores[best]};
}

Decision decide_thvr(const ForwardingContext& ctx, const ThvrOptions& opts) {
    if (ctx.destination_in_one_hop) return terminal_hop(ctx);

    const std::vector<RelayPair> pairs = usable_pairs(ctx);
    if (pairs.empty()) return {std::nullopt, DecisionReason::NoCandidate, 0.0};

    std::vector<RelayPair> qualifying;
    double max_velocity = 0.0;
    for (const auto& p : pairs) {
        const double v = two_hop_velocity(ctx, p);
        max_velocity = std::max(max_velocity, v);
        if (v >= opts.velocity_setpoint) qualifying.push_back(p);
    }

    if (opts.drop_control && ctx.hops_travelled <= opts.near_source_hops) {
        const double v_req = required_velocity(ctx.dist_to_dest, ctx.lag_time);
        if (max_velocity < v_req)
            return {std::nullopt, DecisionReason::VelocityUnreachable, 0.0};
    }

    if (qualifying.empty()) return best_effort_pair(ctx, pairs);

    const double c = opts.energy_weight_c;
    double vel_sum = 0.0, energy_sum = 0.0;
    std::vector<double> vel(qualifying.size()), energy(qualifying.size());
    for (std::size_t i = 0; i < qualifying.size(); ++i) {
        vel[i] = two_hop_velocity(ctx, qualifying[i]);
        energy[i] = ctx.find_neighbor(qualifying[i].via)->energy_ratio;
        vel_sum += vel[i];
        energy_sum += energy[i];
    }
    std::size_t best = 0;
    double best_score = -1.0;
    for (std::size_t i = 0; i < qualifying.size(); ++i) {
        double s = 0.0;
        if (vel_sum > 0.0) s += c * (vel[i] / vel_sum);
        if (energy_sum > 0.0) s += (1.0 - c) * (energy[i] / energy_sum);
        if (s > best_score) {
            best_score = s;
            best = i;
        }
    }
    return {qualifying[best].via, DecisionReason::Selected, best_score};
}

Decision decide_speed(const ForwardingContext& ctx, double setpoint, Rng& rng) {
    if (ctx.destination_in_one_hop) return terminal_hop(ctx);

    std::vector<const NeighborInfo*> qualifying;
    std::vector<double> velocity;
    double total = 0.0;
    for (const auto& y : ctx.one_hop) {
        if (y.delay <= 0.0) continue;
        const double v = one_hop_velocity(ctx, y);
        if (v >= setpoint) {
            qualifying.push_back(&y);
            velocity.push_back(v);
            total += v;
        }
    }
    if (qualifying.empty()) {
        return {std::nullopt,
                ctx.one_hop.empty() ? DecisionReason::NoCandidate
                                    : DecisionReason::VelocityUnreachable,
                0.0};
    }
    if (qualifying.size() == 1 || total <= 0.0)
        return {qualifying.front()->id, DecisionReason::Selected, velocity.front()};

    const double draw = rng.uniform() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < qualifying.size(); ++i) {
        acc += velocity[i];
        if (draw < acc) return {qualifying[i]->id, DecisionReason::Selected, velocity[i]};
    }
    return {qualifying.back()->id, DecisionReason::Selected, velocity.back()};
}

} // namespace lrthr
