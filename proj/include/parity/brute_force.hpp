// Brute-force oracle for tiny games: enumerate every pair of memoryless
// strategies, play each pair out (every play is a rho: a path into a cycle),
// and take the winner by the exists/forall rule. Memoryless enumeration is
// exhaustive here because parity games admit memoryless optimal strategies.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "parity/core.hpp"
#include "parity/solution.hpp"

namespace parity {

// Enumeration bound: product of Odd-owned out-degrees times product of
// Even-owned out-degrees, i.e. the number of strategy pairs examined.
inline constexpr std::uint64_t kBruteForceLimit = 1000000;

namespace detail {

// Mixed-radix counter over the strategy choices of one player's nodes.
struct StrategyIter {
    std::vector<std::int32_t> nodes;    // nodes owned by the player
    std::vector<std::int32_t> choice;   // current successor index per node

    explicit StrategyIter(const ParityGame& g, Player p) {
        for (int v = 0; v < g.node_count(); ++v) {
            if (g.owner[v] == p) nodes.push_back(v);
        }
        choice.assign(nodes.size(), 0);
    }

    void apply(const ParityGame& g, std::vector<std::int32_t>& next) const {
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            next[nodes[k]] = g.successors(nodes[k])[choice[k]];
        }
    }

    bool advance(const ParityGame& g) {
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            if (++choice[k] < g.out_degree(nodes[k])) return true;
            choice[k] = 0;
        }
        return false;  // wrapped around
    }

    void reset() { choice.assign(nodes.size(), 0); }
};

// Winners at every node under one fixed joint strategy. Follows next[] from
// each start; the walk enters a cycle or reaches an already-settled node, and
// the cycle's maximal priority decides. O(|V|) per pair via path memoization.
inline void play_all(const ParityGame& g, const std::vector<std::int32_t>& next,
                     std::vector<std::int8_t>& result, std::vector<std::int32_t>& visit_pos,
                     std::vector<std::int32_t>& path) {
    const int n = g.node_count();
    result.assign(static_cast<std::size_t>(n), 0);
    visit_pos.assign(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (result[s] != 0) continue;
        path.clear();
        std::int32_t u = s;
        while (result[u] == 0 && visit_pos[u] < 0) {
            visit_pos[u] = static_cast<std::int32_t>(path.size());
            path.push_back(u);
            u = next[u];
        }
        std::int8_t verdict;
        if (result[u] != 0) {
            verdict = result[u];
        } else {
            std::int32_t max_prio = 0;
            for (std::size_t k = static_cast<std::size_t>(visit_pos[u]); k < path.size(); ++k) {
                max_prio = std::max(max_prio, g.prio[path[k]]);
            }
            verdict = static_cast<std::int8_t>(embed(par(static_cast<std::uint64_t>(max_prio))));
        }
        for (std::int32_t v : path) {
            result[v] = verdict;
            visit_pos[v] = -1;  // reset for the next start
        }
    }
}

// win_all[v] = 1 iff `mover`'s current strategy wins at v against every
// opposing strategy.
inline void forall_opponent(const ParityGame& g, Player mover, StrategyIter& mine,
                            StrategyIter& theirs, std::vector<std::int32_t>& next,
                            std::vector<std::uint8_t>& win_all) {
    const int n = g.node_count();
    const auto target = static_cast<std::int8_t>(embed(mover));
    win_all.assign(static_cast<std::size_t>(n), 1);
    std::vector<std::int8_t> result;
    std::vector<std::int32_t> visit_pos, path;
    theirs.reset();
    mine.apply(g, next);
    do {
        theirs.apply(g, next);
        play_all(g, next, result, visit_pos, path);
        bool any_left = false;
        for (int v = 0; v < n; ++v) {
            if (win_all[v] && result[v] != target) win_all[v] = 0;
            any_left = any_left || win_all[v];
        }
        if (!any_left) break;
    } while (theirs.advance(g));
}

}  // namespace detail

inline std::uint64_t strategy_pair_count(const ParityGame& g) {
    std::uint64_t pairs = 1;
    for (int v = 0; v < g.node_count(); ++v) {
        const auto deg = static_cast<std::uint64_t>(g.out_degree(v));
        if (pairs > kBruteForceLimit / (deg ? deg : 1)) return kBruteForceLimit + 1;
        pairs *= deg;
    }
    return pairs;
}

// Exact winners by strategy enumeration; refuses games whose strategy-pair
// space exceeds kBruteForceLimit. Also extracts, for each player, a single
// memoryless strategy winning from that player's whole win set (one exists
// by memoryless determinacy; the enumeration finds the first).
inline Solution brute_force_solve(const ParityGame& g) {
    const int n = g.node_count();
    for (int v = 0; v < n; ++v) {
        if (g.out_degree(v) == 0) {
            throw std::invalid_argument("brute_force_solve: sink node " + std::to_string(v));
        }
    }
    if (strategy_pair_count(g) > kBruteForceLimit) {
        throw std::invalid_argument("brute_force_solve: strategy space exceeds limit");
    }

    Solution sol(n);
    std::vector<std::int32_t> next(static_cast<std::size_t>(n), 0);
    std::vector<std::uint8_t> win_all;
    std::vector<std::uint8_t> odd_wins, even_wins;

    for (Player mover : {Player::Odd, Player::Even}) {
        detail::StrategyIter mine(g, mover);
        detail::StrategyIter theirs(g, opponent(mover));

        // Pass 1: mover wins at v iff some strategy beats all replies.
        std::vector<std::uint8_t> wins(static_cast<std::size_t>(n), 0);
        mine.reset();
        do {
            detail::forall_opponent(g, mover, mine, theirs, next, win_all);
            for (int v = 0; v < n; ++v) wins[v] |= win_all[v];
        } while (mine.advance(g));

        for (int v = 0; v < n; ++v) {
            if (wins[v]) sol.winner[v] = mover;
        }
        (mover == Player::Odd ? odd_wins : even_wins) = wins;

        // Pass 2: first strategy winning the entire win set at once.
        mine.reset();
        do {
            detail::forall_opponent(g, mover, mine, theirs, next, win_all);
            bool uniform = true;
            for (int v = 0; v < n && uniform; ++v) uniform = (win_all[v] == wins[v]);
            if (uniform) {
                mine.apply(g, next);
                for (std::int32_t v : mine.nodes) {
                    if (wins[v]) sol.strategy[v] = next[v];
                }
                break;
            }
        } while (mine.advance(g));
    }

    // Determinacy cross-check: the two exhaustive passes must partition the
    // nodes; a violation would mean the play-out logic is broken.
    for (int v = 0; v < n; ++v) {
        if (odd_wins[v] == even_wins[v]) {
            throw std::logic_error("brute_force_solve: determinacy violated at node " +
                                   std::to_string(v));
        }
    }
    return sol;
}

}  // namespace parity
