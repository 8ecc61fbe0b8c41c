// Conversion to an ownership-bipartite game: every edge between two nodes of
// the same owner is routed through a fresh intermediate node of the opposite
// owner. Winners of the original nodes are preserved because the intermediate
// node has exactly one move (no real choice) and its priority never raises
// any cycle maximum.
#pragma once

#include <cstdint>
#include <vector>

#include "parity/core.hpp"

namespace parity {

// Replaces each same-owner edge (v,v') by v -> w -> v' with owner(w) the
// opponent of owner(v). The intermediate priority must not exceed
// min(p(v), p(v')) so that no cycle maximum changes; 0 always satisfies that
// and is canonical, so p(w) = 0 when min > 0 and min otherwise (i.e. 0).
// Adds one node and one edge per same-owner edge; all other edges unchanged.
inline ParityGame to_bipartite(const ParityGame& g) {
    const int n = g.node_count();
    std::vector<std::vector<std::int32_t>> lists(static_cast<std::size_t>(n));
    std::vector<Player> owners(g.owner);
    std::vector<std::int32_t> prios(g.prio);

    std::int32_t next_id = n;
    for (int v = 0; v < n; ++v) {
        // Row is built locally: appending middle nodes to `lists` inside the
        // loop may reallocate it, so no reference into it can be held here.
        std::vector<std::int32_t> row;
        row.reserve(static_cast<std::size_t>(g.out_degree(v)));
        for (std::int32_t w : g.successors(v)) {
            if (g.owner[w] != g.owner[v]) {
                row.push_back(w);
                continue;
            }
            const std::int32_t mid = next_id++;
            row.push_back(mid);
            lists.push_back({w});
            owners.push_back(opponent(g.owner[v]));
            const std::int32_t low = std::min(g.prio[v], g.prio[w]);
            prios.push_back(low > 0 ? 0 : low);
        }
        lists[v] = std::move(row);
    }
    return ParityGame::from_lists(lists, std::move(owners), std::move(prios));
}

}  // namespace parity
