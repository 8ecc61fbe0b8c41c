// Attractor computation: the least set of nodes from which a player can force
// the token into a target set. The standard linear-time subroutine of
// Zielonka's algorithm, implemented over a node mask so recursive subgames
// need no re-indexing.
#pragma once

#include <cstdint>
#include <vector>

#include "parity/core.hpp"
#include "parity/solution.hpp"

namespace parity {

// Least superset A of (targets ∩ alive) such that an alive node joins A when
// its owner is `player` and some alive successor is in A, or its owner is the
// opponent and every alive successor is in A. O(|V| + |E|) via per-node
// out-degree counters over the precomputed transpose.
//
// If `strategy` is non-null, each player-owned node pulled into A (targets
// excluded) records the successor edge it joined through - an edge that moves
// play strictly closer to the targets.
inline std::vector<std::uint8_t> attractor_mask(const ParityGame& g, const Transposed& rev,
                                                Player player,
                                                const std::vector<std::int32_t>& targets,
                                                const std::vector<std::uint8_t>& alive,
                                                std::vector<std::int32_t>* strategy = nullptr) {
    const int n = g.node_count();
    std::vector<std::uint8_t> in_set(static_cast<std::size_t>(n), 0);
    std::vector<std::int32_t> escapes(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        int deg = 0;
        for (std::int32_t w : g.successors(v)) deg += alive[w];
        escapes[v] = deg;
    }

    std::vector<std::int32_t> queue;
    for (std::int32_t t : targets) {
        if (alive[t] && !in_set[t]) {
            in_set[t] = 1;
            queue.push_back(t);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::int32_t u = queue[head];
        for (std::int32_t w : rev.predecessors(u)) {
            if (!alive[w] || in_set[w]) continue;
            if (g.owner[w] == player) {
                in_set[w] = 1;
                if (strategy) (*strategy)[w] = u;
                queue.push_back(w);
            } else if (--escapes[w] == 0) {
                in_set[w] = 1;
                queue.push_back(w);
            }
        }
    }
    return in_set;
}

// Whole-game convenience wrapper returning the attracted ids in ascending order.
inline std::vector<std::int32_t> attractor(const ParityGame& g, Player player,
                                           const std::vector<std::int32_t>& targets) {
    const Transposed rev = transpose(g);
    const std::vector<std::uint8_t> alive(static_cast<std::size_t>(g.node_count()), 1);
    const auto mask = attractor_mask(g, rev, player, targets, alive);
    std::vector<std::int32_t> out;
    for (int v = 0; v < g.node_count(); ++v) {
        if (mask[v]) out.push_back(v);
    }
    return out;
}

}  // namespace parity
