// The reach-a-self-winning-node labeling: a node is certified for its owner
// when a path inside the owner's subgraph leads from it to a self-winning
// node. Certification is a sound one-sided winner test (the owner walks the
// path and then loops), used as cheap ground truth in the dense regime where
// nearly every node is certified.
#pragma once

#include <cstdint>
#include <vector>

#include "parity/core.hpp"
#include "parity/swcp.hpp"

namespace parity {

enum class SelfReachLabel : std::uint8_t { Unknown = 0, OwnerCertified = 1 };

// Multi-source reachability on the transposed owner subgraphs: for each
// player, walk backward from that player's self-winning nodes along edges
// whose endpoints both belong to the player. O(|V| + |E|).
inline std::vector<SelfReachLabel> self_reach_labels(const ParityGame& g,
                                                     const SelfWinningReport& report) {
    const int n = g.node_count();
    const Transposed rev = transpose(g);
    std::vector<SelfReachLabel> label(static_cast<std::size_t>(n), SelfReachLabel::Unknown);

    std::vector<std::int32_t> queue;
    for (int v = 0; v < n; ++v) {
        if (report.self_winning[v]) {
            label[v] = SelfReachLabel::OwnerCertified;
            queue.push_back(v);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::int32_t u = queue[head];
        for (std::int32_t w : rev.predecessors(u)) {
            if (label[w] == SelfReachLabel::Unknown && g.owner[w] == g.owner[u]) {
                label[w] = SelfReachLabel::OwnerCertified;
                queue.push_back(w);
            }
        }
    }
    return label;
}

inline std::vector<SelfReachLabel> self_reach_labels(const ParityGame& g) {
    return self_reach_labels(g, find_self_winning(g));
}

}  // namespace parity
