// Branching-process numerics behind the phase transition: extinction
// probabilities of Binomial(d,q) offspring processes, the sufficient-degree
// threshold condition in both of its published forms, a Monte-Carlo
// simulator, and the exploration process of the favourable subgraph.
#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "parity/core.hpp"
#include "parity/rng.hpp"

namespace parity {

struct BranchingSpec {
    int trials_d = 1;          // Binomial trial count per individual
    double q = 0.5;            // Binomial success probability
    double tolerance = 1e-12;  // fixed-point stopping threshold

    static BranchingSpec of(int d, double q) { return {d, q, 1e-12}; }
};

struct ExtinctionResult {
    double eta = 1.0;
    long iterations = 0;
    bool converged = false;
};

inline constexpr long kExtinctionIterationCap = 1000000;

// Extinction probability of the branching process with Binomial(d,q)
// offspring: the smallest root of (1 - q + q*eta)^d = eta.
//
// When the mean offspring d*q is at most 1 (and q < 1 so extinction is
// possible at all), the process dies out almost surely and the smallest root
// is exactly 1; that value is returned directly, since at criticality the
// fixed-point iteration slows from geometric to O(1/k) and cannot reach it
// within any practical cap. Otherwise the iteration eta_{k+1} = f(eta_k)
// starting from 0 increases monotonically to the smallest fixed point.
inline ExtinctionResult extinction_probability(const BranchingSpec& spec) {
    if (spec.trials_d < 1) throw std::invalid_argument("offspring trial count must be positive");
    if (spec.q < 0.0 || spec.q > 1.0) throw std::invalid_argument("q must be in [0,1]");
    if (!(spec.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");

    const double d = spec.trials_d;
    if (spec.q < 1.0 && d * spec.q <= 1.0) return {1.0, 0, true};

    ExtinctionResult r{0.0, 0, false};
    double eta = 0.0;
    for (long k = 0; k < kExtinctionIterationCap; ++k) {
        const double next = std::pow(1.0 - spec.q + spec.q * eta, spec.trials_d);
        r.iterations = k + 1;
        if (std::abs(next - eta) < spec.tolerance) {
            eta = next;
            r.converged = true;
            break;
        }
        eta = next;
    }
    r.eta = std::min(1.0, std::max(0.0, eta));
    return r;
}

struct ThresholdCheck {
    bool condition_holds = false;
    double lhs_fixed_point = 0.0;  // d * eta(d-1, 1/4)
    double lhs_closed_form = 0.0;  // d * (3/4 + 1/(4d))^(d-1)
};

// The sufficient-degree condition in both forms; the verdict is keyed to the
// fixed-point form (threshold: value strictly below 1), and the closed form
// is reported alongside so any disagreement between the two is visible.
inline ThresholdCheck threshold_check(int d) {
    if (d < 2) throw std::invalid_argument("threshold_check needs d >= 2");
    ThresholdCheck c;
    c.lhs_fixed_point = d * extinction_probability(BranchingSpec::of(d - 1, 0.25)).eta;
    c.lhs_closed_form = d * std::pow(0.75 + 0.25 / d, d - 1);
    c.condition_holds = c.lhs_fixed_point < 1.0;
    return c;
}

// Smallest degree satisfying the threshold condition, by direct scan.
inline int min_sufficient_degree(int max_scan = 64) {
    for (int d = 2; d <= max_scan; ++d) {
        if (threshold_check(d).condition_holds) return d;
    }
    throw std::runtime_error("no sufficient degree found up to " + std::to_string(max_scan));
}

// Populations above this size are recorded as surviving without simulating
// further: a supercritical line this large has vanishing extinction chance,
// and the truncation only biases the estimate further below eta (which the
// estimate already approaches from below in the horizon).
inline constexpr std::int64_t kSimulationPopulationCap = 4096;

// Monte-Carlo estimate of the extinction probability: fraction of seeded
// trials whose population Z (Z_0 = 1, offspring i.i.d. Binomial(d,q)) hits 0
// within the generation horizon.
inline double simulate_branching(const BranchingSpec& spec, int generations, int trials,
                                 std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    long extinct = 0;
    for (int t = 0; t < trials; ++t) {
        SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        std::int64_t z = 1;
        for (int gen = 0; gen < generations && z > 0 && z <= kSimulationPopulationCap; ++gen) {
            std::int64_t next = 0;
            const std::int64_t draws = z * spec.trials_d;
            for (std::int64_t k = 0; k < draws; ++k) next += rng.next_bernoulli(spec.q);
            z = next;
        }
        extinct += (z == 0);
    }
    return static_cast<double>(extinct) / trials;
}

struct ExplorationResult {
    long explored = 0;
    long active_at_stop = 0;
    std::optional<long> first_cycle_step;
};

// Exploration process of the favourable subgraph: the nodes whose priority
// parity matches their owner. Starting from the given set (silently reduced
// to its members of that subgraph), active nodes are explored in FIFO order;
// exploring a node activates its unseen successors. A cycle is witnessed the
// first time an explored node has a successor among its own forest ancestors
// (itself included), and that step index is recorded. Runs until the active
// set empties or step_budget explorations have been performed.
inline ExplorationResult explore_self_winning_subgraph(const ParityGame& g,
                                                       const std::vector<std::int32_t>& start,
                                                       long step_budget) {
    const int n = g.node_count();
    const auto favourable = [&](std::int32_t v) {
        return par(static_cast<std::uint64_t>(g.prio[v])) == g.owner[v];
    };

    // 0 = unseen, 1 = active, 2 = explored
    std::vector<std::uint8_t> status(static_cast<std::size_t>(n), 0);
    std::vector<std::int32_t> parent(static_cast<std::size_t>(n), -1);
    std::vector<std::int32_t> queue;
    for (std::int32_t s : start) {
        if (favourable(s) && status[s] == 0) {
            status[s] = 1;
            queue.push_back(s);
        }
    }

    ExplorationResult res;
    std::size_t head = 0;
    while (head < queue.size() && res.explored < step_budget) {
        const std::int32_t u = queue[head++];
        status[u] = 2;
        ++res.explored;
        for (std::int32_t w : g.successors(u)) {
            if (!favourable(w)) continue;
            if (status[w] == 0) {
                status[w] = 1;
                parent[w] = u;
                queue.push_back(w);
            } else if (!res.first_cycle_step) {
                // w was already seen: a cycle closes if w is an ancestor of u
                // in the exploration forest (or u itself via a self-loop).
                for (std::int32_t a = u; a != -1; a = parent[a]) {
                    if (a == w) {
                        res.first_cycle_step = res.explored;
                        break;
                    }
                }
            }
        }
    }
    res.active_at_stop = static_cast<long>(queue.size() - head);
    return res;
}

}  // namespace parity
