/*
 * link_estimation.hpp -- per-link reception-ratio and delay estimators.
 *
 * PRR uses a windowed-mean EWMA updated at the receiver: a window of w
 * send events is reduced to r/(r+m) and blended with history by alpha.
 * Delay uses a plain per-sample EWMA on ACK round trips measured at the
 * sender. Both updates are O(1).
 */
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lrthr/topology.hpp"

namespace lrthr {

enum class PacketOutcome { Received, Missed };

class PrrEstimator {
  public:
    PrrEstimator() = default;
    PrrEstimator(double alpha, int window_size, double initial = 1.0)
        : alpha_(alpha), window_size_(window_size), current_(initial) {
        if (alpha_ < 0.0 || alpha_ > 1.0) throw std::invalid_argument("prr: alpha outside [0,1]");
        if (window_size_ <= 0) throw std::invalid_argument("prr: window must be positive");
        if (current_ < 0.0 || current_ > 1.0) throw std::invalid_argument("prr: initial outside [0,1]");
    }

    // Counts one send event toward the current window; applies the blend and
    // resets the counters exactly when the window fills.
    void record(PacketOutcome outcome) {
        if (outcome == PacketOutcome::Received)
            ++received_;
        else
            ++missed_;
        if (received_ + missed_ == window_size_) {
            const double measured = static_cast<double>(received_) / window_size_;
            current_ = alpha_ * current_ + (1.0 - alpha_) * measured;
            received_ = 0;
            missed_ = 0;
        }
    }

    double value() const { return current_; }
    int received_in_window() const { return received_; }
    int missed_in_window() const { return missed_; }
    int window_size() const { return window_size_; }

  private:
    double alpha_ = 0.6;
    int window_size_ = 30;
    double current_ = 1.0;
    int received_ = 0;
    int missed_ = 0;
};

class DelayEstimator {
  public:
    DelayEstimator() = default;
    DelayEstimator(double beta, double fallback_initial)
        : beta_(beta), fallback_(fallback_initial) {
        if (beta_ < 0.0 || beta_ > 1.0) throw std::invalid_argument("delay: beta outside [0,1]");
        if (fallback_ < 0.0) throw std::invalid_argument("delay: negative initial");
    }

    // Sample the service-to-ACK interval, net of the ACK's own air time.
    // The first sample seeds the estimate; later ones blend by beta.
    void record(double t_s, double t_ack, double ack_size_bytes, double bandwidth) {
        if (bandwidth <= 0.0) throw std::invalid_argument("delay: bandwidth must be positive");
        if (t_ack < t_s) throw std::logic_error("delay: ACK before send (simulator bug)");
        double sample = t_ack - ack_size_bytes / bandwidth - t_s;
        if (sample < 0.0) sample = 0.0;
        current_ = current_ ? beta_ * *current_ + (1.0 - beta_) * sample : sample;
    }

    bool has_sample() const { return current_.has_value(); }
    double value() const { return current_ ? *current_ : fallback_; }

  private:
    double beta_ = 0.5;
    double fallback_ = 0.0;
    std::optional<double> current_;
};

// Directional link state as seen from `from`: its own delay estimator plus
// the reception ratio last reported back by `to`.
struct LinkState {
    NodeId from = 0;
    NodeId to = 0;
    double reported_prr = 1.0;
    DelayEstimator delay;
    double last_hello = -1.0;
};

struct LinkSnapshotEntry {
    NodeId to;
    double prr;
    double delay;
};

// Point-in-time copy of a node's outgoing link estimates, sorted by id.
std::vector<LinkSnapshotEntry> snapshot_links(const std::map<NodeId, LinkState>& out_links);

} // namespace lrthr
