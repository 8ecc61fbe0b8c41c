// Solution containers: the partial per-node values produced by SWCP and the
// total winner maps produced by the exact solvers.
#pragma once

#include <cstdint>
#include <vector>

#include "parity/core.hpp"

namespace parity {

// Sentinel for "no witness / no strategy edge recorded".
inline constexpr std::int32_t kNoWitness = -1;

// Per-node value e(v) in {-1, 0, +1}: Even wins, undecided, Odd wins.
// Decided nodes whose owner equals their value carry a witness successor —
// an edge that stays inside the region already decided for that player.
struct PartialSolution {
    std::vector<std::int8_t> value;     // -1 Even, 0 undecided, +1 Odd
    std::vector<std::int32_t> witness;  // successor id or kNoWitness

    explicit PartialSolution(int node_count = 0)
        : value(static_cast<std::size_t>(node_count), 0),
          witness(static_cast<std::size_t>(node_count), kNoWitness) {}

    bool decided(int v) const { return value[v] != 0; }

    int decided_count() const {
        int c = 0;
        for (std::int8_t x : value) c += (x != 0);
        return c;
    }

    bool fully_solved() const {
        for (std::int8_t x : value) {
            if (x == 0) return false;
        }
        return true;
    }
};

// Total solution: every node has a winner b(v); nodes whose owner wins carry
// a strategy edge that stays inside that player's winning region.
struct Solution {
    std::vector<Player> winner;
    std::vector<std::int32_t> strategy;  // successor id or kNoWitness

    explicit Solution(int node_count = 0)
        : winner(static_cast<std::size_t>(node_count), Player::Even),
          strategy(static_cast<std::size_t>(node_count), kNoWitness) {}
};

// View of a total solution as a (trivially fully decided) partial one.
inline PartialSolution to_partial(const Solution& s) {
    PartialSolution p(static_cast<int>(s.winner.size()));
    for (std::size_t v = 0; v < s.winner.size(); ++v) {
        p.value[v] = static_cast<std::int8_t>(embed(s.winner[v]));
        p.witness[v] = s.strategy[v];
    }
    return p;
}

}  // namespace parity
