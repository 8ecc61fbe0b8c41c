// Solver for out-degree-1 games. With a single successor everywhere there is
// exactly one play from each start: a path into a cycle, whose maximal
// priority decides the winner. The straightforward walk-per-start reference
// costs O(|V|^2) overall.
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "parity/core.hpp"
#include "parity/solution.hpp"

namespace parity {

inline Solution solve_d1(const ParityGame& g) {
    const int n = g.node_count();
    for (int v = 0; v < n; ++v) {
        if (g.out_degree(v) != 1) {
            throw std::invalid_argument("solve_d1: node " + std::to_string(v) +
                                        " has out-degree != 1");
        }
    }

    Solution sol(n);
    std::vector<std::int32_t> seen_at(static_cast<std::size_t>(n), -1);
    std::vector<std::int32_t> path;
    for (int s = 0; s < n; ++s) {
        path.clear();
        std::int32_t u = s;
        while (seen_at[u] != s) {
            seen_at[u] = s;
            path.push_back(u);
            u = g.successors(u)[0];
        }
        // u is the first repeated node: the cycle is the path suffix from u.
        std::int32_t max_prio = 0;
        for (auto it = std::find(path.begin(), path.end(), u); it != path.end(); ++it) {
            max_prio = std::max(max_prio, g.prio[*it]);
        }
        sol.winner[s] = par(static_cast<std::uint64_t>(max_prio));
        if (sol.winner[s] == g.owner[s]) sol.strategy[s] = g.successors(s)[0];
    }
    return sol;
}

}  // namespace parity
