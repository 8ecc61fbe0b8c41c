// Zielonka's recursive algorithm: the exact solver used as ground truth
// throughout the test suite. Recurses on the maximal priority, removing
// attractors; subgames are node masks over the original arena. Exponential in
// the worst case, comfortably fast at the scales used here.
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "parity/attractor.hpp"
#include "parity/core.hpp"
#include "parity/solution.hpp"

namespace parity {

namespace detail {

inline void zielonka_rec(const ParityGame& g, const Transposed& rev,
                         std::vector<std::uint8_t> alive, Solution& sol) {
    const int n = g.node_count();
    std::int32_t top = -1;
    for (int v = 0; v < n; ++v) {
        if (alive[v]) top = std::max(top, g.prio[v]);
    }
    if (top < 0) return;  // empty subgame

    const Player i = par(static_cast<std::uint64_t>(top));
    std::vector<std::int32_t> tops;
    for (int v = 0; v < n; ++v) {
        if (alive[v] && g.prio[v] == top) tops.push_back(v);
    }

    std::vector<std::int32_t> pull(static_cast<std::size_t>(n), kNoWitness);
    const auto head = attractor_mask(g, rev, i, tops, alive, &pull);

    // Solve the subgame without the head attractor. Removing an attractor
    // leaves the rest closed (an i-attractor's complement keeps a non-head
    // successor for every node), so the subgame is again sink-free.
    std::vector<std::uint8_t> rest = alive;
    bool rest_empty = true;
    for (int v = 0; v < n; ++v) {
        if (head[v]) rest[v] = 0;
        rest_empty = rest_empty && !rest[v];
    }
    if (!rest_empty) zielonka_rec(g, rev, rest, sol);

    std::vector<std::int32_t> opp_won;
    for (int v = 0; v < n; ++v) {
        if (rest[v] && sol.winner[v] == opponent(i)) opp_won.push_back(v);
    }

    if (opp_won.empty()) {
        // i wins the whole subgame: attractor pulls toward the top-priority
        // nodes, which in turn may move anywhere alive; the rest keeps its
        // recursive strategy.
        for (int v = 0; v < n; ++v) {
            if (!alive[v] || !head[v]) continue;
            sol.winner[v] = i;
            if (g.owner[v] != i) {
                sol.strategy[v] = kNoWitness;
                continue;
            }
            if (g.prio[v] == top) {
                for (std::int32_t w : g.successors(v)) {
                    if (alive[w]) {
                        sol.strategy[v] = w;
                        break;
                    }
                }
            } else {
                sol.strategy[v] = pull[v];
            }
        }
        return;
    }

    // The opponent keeps its subgame win set and attracts toward it.
    std::vector<std::int32_t> opp_pull(static_cast<std::size_t>(n), kNoWitness);
    const auto trap = attractor_mask(g, rev, opponent(i), opp_won, alive, &opp_pull);

    std::vector<std::uint8_t> remainder = alive;
    bool remainder_empty = true;
    for (int v = 0; v < n; ++v) {
        if (trap[v]) remainder[v] = 0;
        remainder_empty = remainder_empty && !remainder[v];
    }
    if (!remainder_empty) zielonka_rec(g, rev, remainder, sol);

    std::vector<std::uint8_t> in_opp_won(static_cast<std::size_t>(n), 0);
    for (std::int32_t v : opp_won) in_opp_won[v] = 1;
    for (int v = 0; v < n; ++v) {
        if (!alive[v] || !trap[v]) continue;
        sol.winner[v] = opponent(i);
        if (in_opp_won[v]) continue;  // recursive strategy already recorded
        sol.strategy[v] = (g.owner[v] == opponent(i)) ? opp_pull[v] : kNoWitness;
    }
}

}  // namespace detail

// Exact winners and playable strategies for every node.
inline Solution zielonka_solve(const ParityGame& g) {
    const int n = g.node_count();
    for (int v = 0; v < n; ++v) {
        if (g.out_degree(v) == 0) {
            throw std::invalid_argument("zielonka_solve: sink node " + std::to_string(v));
        }
    }
    Solution sol(n);
    detail::zielonka_rec(g, transpose(g), std::vector<std::uint8_t>(static_cast<std::size_t>(n), 1), sol);
    return sol;
}

}  // namespace parity
