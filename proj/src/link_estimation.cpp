#include "lrthr/link_estimation.hpp"

namespace lrthr {

std::vector<LinkSnapshotEntry> snapshot_links(const std::map<NodeId, LinkState>& out_links) {
    std::vector<LinkSnapshotEntry> snap;
    snap.reserve(out_links.size());
    for (const auto& [to, state] : out_links)
        snap.push_back({to, state.reported_prr, state.delay.value()});
    return snap;
}

} // namespace lrthr
