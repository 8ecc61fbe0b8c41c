// The SWCP solver. Phase 1 finds every self-winning node: a node lying on a
// cycle that stays inside its owner's subgraph and whose maximal priority has
// the owner's parity. Phase 2 propagates those seeds by backwards induction:
// a node is won by its owner as soon as one successor is, and lost as soon as
// all successors are. The result may be partial; every decided value is exact.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "parity/core.hpp"
#include "parity/solution.hpp"

namespace parity {

enum class Direction { Forward, Backward };

// Nodes reachable from start inside the filtered node set, following edges
// forward or backward; start must satisfy the filter and is always included.
// Runs in O(|V| + |E|) including the on-demand transpose. Returns ids in
// ascending order.
template <class Filter>
std::vector<std::int32_t> dfs_reachable(const ParityGame& g, Filter&& keep, int start,
                                        Direction dir) {
    const int n = g.node_count();
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::int32_t> stack{static_cast<std::int32_t>(start)};
    seen[start] = 1;

    Transposed rev;
    if (dir == Direction::Backward) rev = transpose(g);

    while (!stack.empty()) {
        const std::int32_t u = stack.back();
        stack.pop_back();
        const auto edges = (dir == Direction::Forward) ? g.successors(u) : rev.predecessors(u);
        for (std::int32_t w : edges) {
            if (!seen[w] && keep(w)) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    std::vector<std::int32_t> out;
    for (int v = 0; v < n; ++v) {
        if (seen[v]) out.push_back(v);
    }
    return out;
}

// Phase-1 result. A marked node is won by its owner (by looping forever on
// its cycle), so the winner at a marked node is simply the owner.
struct SelfWinningReport {
    std::vector<std::uint8_t> self_winning;
    // A successor inside the same detected cycle cluster; every marked node
    // has one, and it keeps play inside the marked region of the same player.
    std::vector<std::int32_t> witness;

    std::optional<Player> winner_if_self_winning(const ParityGame& g, int v) const {
        if (!self_winning[v]) return std::nullopt;
        return g.owner[v];
    }

    int marked_count() const {
        int c = 0;
        for (std::uint8_t b : self_winning) c += b;
        return c;
    }
};

struct SelfWinningOptions {
    // Anchor processing order; empty means ascending node id. The marked set
    // is independent of this order (witnesses may differ).
    std::vector<std::int32_t> anchor_order;
    // Skip anchors that are already marked. Sound because an anchor marked
    // while processing an earlier anchor w has p(anchor) <= p(w), so the
    // anchor's own filtered subgraph - and with it its whole intersection -
    // is contained in the one that was already marked. Off by default to keep
    // the reference cost profile; results are identical either way.
    bool skip_marked_anchors = false;
};

// Finds all self-winning nodes. For each anchor node whose priority parity
// matches its owner, both DFS directions run inside the subgraph of nodes
// with the same owner and priority at most the anchor's; the intersection of
// the two reachable sets is marked when it witnesses a cycle through the
// anchor (size two or more, or an anchor self-loop inside it). Total cost
// O(|V|^2 + |V||E|).
inline SelfWinningReport find_self_winning(const ParityGame& g,
                                           const SelfWinningOptions& opts = {}) {
    const int n = g.node_count();
    const Transposed rev = transpose(g);

    SelfWinningReport report;
    report.self_winning.assign(static_cast<std::size_t>(n), 0);
    report.witness.assign(static_cast<std::size_t>(n), kNoWitness);

    std::vector<std::int32_t> anchors;
    if (opts.anchor_order.empty()) {
        for (int v = 0; v < n; ++v) anchors.push_back(v);
    } else {
        anchors = opts.anchor_order;
    }

    // Epoch-stamped visit marks so per-anchor state clears in O(1).
    std::vector<std::int32_t> fwd_mark(static_cast<std::size_t>(n), -1);
    std::vector<std::int32_t> bwd_mark(static_cast<std::size_t>(n), -1);
    std::vector<std::int32_t> stack;
    std::vector<std::int32_t> fwd_nodes;
    std::int32_t epoch = -1;

    for (std::int32_t anchor : anchors) {
        if (par(static_cast<std::uint64_t>(g.prio[anchor])) != g.owner[anchor]) continue;
        if (opts.skip_marked_anchors && report.self_winning[anchor]) continue;
        ++epoch;

        const Player side = g.owner[anchor];
        const std::int32_t cap = g.prio[anchor];
        const auto keep = [&](std::int32_t v) { return g.owner[v] == side && g.prio[v] <= cap; };

        stack.assign(1, anchor);
        fwd_nodes.assign(1, anchor);
        fwd_mark[anchor] = epoch;
        while (!stack.empty()) {
            const std::int32_t u = stack.back();
            stack.pop_back();
            for (std::int32_t w : g.successors(u)) {
                if (fwd_mark[w] != epoch && keep(w)) {
                    fwd_mark[w] = epoch;
                    fwd_nodes.push_back(w);
                    stack.push_back(w);
                }
            }
        }

        stack.assign(1, anchor);
        bwd_mark[anchor] = epoch;
        while (!stack.empty()) {
            const std::int32_t u = stack.back();
            stack.pop_back();
            for (std::int32_t w : rev.predecessors(u)) {
                if (bwd_mark[w] != epoch && keep(w)) {
                    bwd_mark[w] = epoch;
                    stack.push_back(w);
                }
            }
        }

        // The intersection is one cluster of cycles through the anchor; it is
        // a genuine cycle witness unless it degenerates to the lone anchor
        // with no self-loop.
        int inter_size = 0;
        for (std::int32_t u : fwd_nodes) inter_size += (bwd_mark[u] == epoch);
        bool cyclic = inter_size >= 2;
        if (!cyclic) {
            for (std::int32_t w : g.successors(anchor)) {
                if (fwd_mark[w] == epoch && bwd_mark[w] == epoch) {
                    cyclic = true;
                    break;
                }
            }
        }
        if (!cyclic) continue;

        for (std::int32_t u : fwd_nodes) {
            if (bwd_mark[u] != epoch) continue;
            report.self_winning[u] = 1;
            if (report.witness[u] == kNoWitness) {
                for (std::int32_t w : g.successors(u)) {
                    if (fwd_mark[w] == epoch && bwd_mark[w] == epoch) {
                        report.witness[u] = w;
                        break;
                    }
                }
            }
        }
    }
    return report;
}

// Seeds for phase 2: every self-winning node starts decided for its owner.
inline PartialSolution seeds_from(const ParityGame& g, const SelfWinningReport& report) {
    PartialSolution s(g.node_count());
    for (int v = 0; v < g.node_count(); ++v) {
        if (report.self_winning[v]) {
            s.value[v] = static_cast<std::int8_t>(embed(g.owner[v]));
            s.witness[v] = report.witness[v];
        }
    }
    return s;
}

// Backwards induction from the seeds, round-robin over nodes until a full
// pass changes nothing. An undecided node becomes decided for its owner as
// soon as one successor is (that successor recorded as witness), and decided
// for the opponent once every successor is. Decided nodes are never revised,
// so the decided set grows monotonically and the fixpoint - the attractor
// closure of the seeds - is reached within |V| passes. max_passes caps the
// number of passes actually run (used to observe intermediate states).
inline PartialSolution propagate(const ParityGame& g, const PartialSolution& seeds,
                                 int max_passes = -1) {
    const int n = g.node_count();
    PartialSolution s = seeds;
    if (max_passes < 0) max_passes = n + 1;

    for (int pass = 0; pass < max_passes; ++pass) {
        bool changed = false;
        for (int v = 0; v < n; ++v) {
            if (s.value[v] != 0) continue;
            const auto me = static_cast<std::int8_t>(embed(g.owner[v]));
            bool all_opponent = true;
            std::int32_t won_via = kNoWitness;
            for (std::int32_t w : g.successors(v)) {
                if (s.value[w] == me && won_via == kNoWitness) won_via = w;
                if (s.value[w] != -me) all_opponent = false;
            }
            if (won_via != kNoWitness) {
                s.value[v] = me;
                s.witness[v] = won_via;
                changed = true;
            } else if (all_opponent) {
                s.value[v] = static_cast<std::int8_t>(-me);
                changed = true;
            }
        }
        if (!changed) break;
    }
    return s;
}

// The full algorithm: detect self-winning seeds, then propagate. Partial in
// general; on the random model it solves the whole game with probability
// approaching one once the degree clears the phase-transition threshold.
inline PartialSolution swcp_solve(const ParityGame& g, const SelfWinningOptions& opts = {}) {
    return propagate(g, seeds_from(g, find_self_winning(g, opts)));
}

}  // namespace parity
