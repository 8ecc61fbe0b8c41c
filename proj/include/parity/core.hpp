// Core parity-game representation: players, priorities, adjacency, transpose,
// and structural validation.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace parity {

// The two players. The integer embedding (Even = -1, Odd = +1) makes
// "winning parity" arithmetic convenient: par(p) * owner == +1 iff the
// priority's parity favours the owner.
enum class Player : std::int8_t { Even = -1, Odd = +1 };

constexpr Player opponent(Player p) {
    return p == Player::Even ? Player::Odd : Player::Even;
}

constexpr int embed(Player p) { return static_cast<int>(p); }

// Player favoured by a priority: odd priorities favour Odd, even favour Even.
constexpr Player par(std::uint64_t priority) {
    return (priority % 2 == 0) ? Player::Even : Player::Odd;
}

// A parity game: a finite directed graph where every node has at least one
// successor, an owner, and a non-negative priority. Node ids are dense
// integers [0, node_count). Edges are stored in compressed adjacency form
// (offset + flat successor array), the canonical representation for the
// linear-time graph passes used throughout.
//
// Games are immutable after construction; every algorithm in this library
// takes them by const reference and is safe to run concurrently on the
// same instance.
struct ParityGame {
    std::vector<std::int32_t> offset;  // size node_count + 1
    std::vector<std::int32_t> succ;    // flat successor ids
    std::vector<Player> owner;         // a(v)
    std::vector<std::int32_t> prio;    // p(v), non-negative

    int node_count() const { return static_cast<int>(owner.size()); }
    int edge_count() const { return static_cast<int>(succ.size()); }

    std::span<const std::int32_t> successors(int v) const {
        return {succ.data() + offset[v],
                static_cast<std::size_t>(offset[v + 1] - offset[v])};
    }

    int out_degree(int v) const { return offset[v + 1] - offset[v]; }

    // Builds the compressed form from per-node successor lists.
    static ParityGame from_lists(const std::vector<std::vector<std::int32_t>>& lists,
                                 std::vector<Player> owners,
                                 std::vector<std::int32_t> priorities) {
        ParityGame g;
        g.owner = std::move(owners);
        g.prio = std::move(priorities);
        g.offset.reserve(lists.size() + 1);
        g.offset.push_back(0);
        for (const auto& l : lists) {
            g.offset.push_back(g.offset.back() + static_cast<std::int32_t>(l.size()));
        }
        g.succ.reserve(static_cast<std::size_t>(g.offset.back()));
        for (const auto& l : lists) g.succ.insert(g.succ.end(), l.begin(), l.end());
        return g;
    }

    bool operator==(const ParityGame& other) const = default;
};

// Predecessor lists of a game, in the same compressed form. Owners and
// priorities are those of the original game; only the edges are reversed.
struct Transposed {
    std::vector<std::int32_t> offset;
    std::vector<std::int32_t> pred;

    std::span<const std::int32_t> predecessors(int v) const {
        return {pred.data() + offset[v],
                static_cast<std::size_t>(offset[v + 1] - offset[v])};
    }
};

// Reverses every edge: (u,v) is in the result iff (v,u) is in the game.
// Counting sort over target ids, O(|V| + |E|).
inline Transposed transpose(const ParityGame& g) {
    const int n = g.node_count();
    Transposed t;
    t.offset.assign(static_cast<std::size_t>(n) + 1, 0);
    for (std::int32_t w : g.succ) t.offset[static_cast<std::size_t>(w) + 1]++;
    for (int v = 0; v < n; ++v) t.offset[v + 1] += t.offset[v];
    t.pred.resize(g.succ.size());
    std::vector<std::int32_t> cursor(t.offset.begin(), t.offset.end() - 1);
    for (int v = 0; v < n; ++v) {
        for (std::int32_t w : g.successors(v)) t.pred[cursor[w]++] = v;
    }
    return t;
}

// First structural violation found, if any.
struct Violation {
    int node = -1;
    std::string message;
};

// Checks the representation invariants: no sink nodes, successor ids in
// range, no duplicate successors, non-negative priorities, consistent
// array sizes. Reports the first violation instead of aborting.
inline std::optional<Violation> validate(const ParityGame& g) {
    const int n = g.node_count();
    if (g.prio.size() != static_cast<std::size_t>(n) ||
        g.offset.size() != static_cast<std::size_t>(n) + 1) {
        return Violation{-1, "inconsistent array sizes"};
    }
    if (g.offset.front() != 0 ||
        g.offset.back() != static_cast<std::int32_t>(g.succ.size())) {
        return Violation{-1, "offset table does not cover successor array"};
    }
    std::vector<std::int32_t> last_seen(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        if (g.offset[v + 1] < g.offset[v]) return Violation{v, "negative out-degree"};
        if (g.out_degree(v) == 0) return Violation{v, "sink node"};
        if (g.prio[v] < 0) return Violation{v, "negative priority"};
        for (std::int32_t w : g.successors(v)) {
            if (w < 0 || w >= n) return Violation{v, "successor id out of range"};
            if (last_seen[w] == v) return Violation{v, "duplicate successor"};
            last_seen[w] = v;
        }
    }
    return std::nullopt;
}

}  // namespace parity
