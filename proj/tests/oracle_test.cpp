#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "parity/attractor.hpp"
#include "parity/brute_force.hpp"
#include "parity/core.hpp"
#include "parity/degree_one.hpp"
#include "parity/generate.hpp"
#include "parity/self_reach.hpp"
#include "parity/zielonka.hpp"
#include "test_util.hpp"

using namespace parity;
using parity::testing::nine_node_game;
using parity::testing::strategy_wins;

namespace {

ParityGame random_game(int n, int d, int c, std::uint64_t seed) {
    GenConfig cfg;
    cfg.node_count = n;
    cfg.degree = DegreeSpec::constant(d);
    cfg.priority_count = c;
    cfg.seed = seed;
    return generate(cfg);
}

}  // namespace

TEST(Attractor, PullsOwnedAndForcedNodes) {
    // 0 (Even) -> {1,2}, 1 (Odd) -> {0}, 2 (Odd) -> {2}.
    const ParityGame g = ParityGame::from_lists({{1, 2}, {0}, {2}},
                                                {Player::Even, Player::Odd, Player::Odd},
                                                {0, 0, 0});
    // Even can move 0 -> 2; Odd at 1 has 0 as its only move, so 1 is forced.
    EXPECT_EQ(attractor(g, Player::Even, {2}), (std::vector<std::int32_t>{0, 1, 2}));
    // Odd cannot force 0 into {2}: node 0 keeps the escape to 1.
    EXPECT_EQ(attractor(g, Player::Odd, {2}), (std::vector<std::int32_t>{2}));
}

TEST(Attractor, RecordsPullStrategy) {
    const ParityGame g = ParityGame::from_lists({{1, 2}, {0}, {2}},
                                                {Player::Even, Player::Odd, Player::Odd},
                                                {0, 0, 0});
    const Transposed rev = transpose(g);
    const std::vector<std::uint8_t> alive(3, 1);
    std::vector<std::int32_t> pull(3, kNoWitness);
    const auto mask = attractor_mask(g, rev, Player::Even, {2}, alive, &pull);
    EXPECT_TRUE(mask[0] && mask[1] && mask[2]);
    EXPECT_EQ(pull[0], 2);           // Even joined through the edge 0 -> 2
    EXPECT_EQ(pull[1], kNoWitness);  // Odd-owned nodes record nothing
    EXPECT_EQ(pull[2], kNoWitness);  // targets record nothing
}

TEST(Attractor, RespectsAliveMask) {
    // 0 -> {1,2}; with node 2 dead, Odd at 0 has only the alive successor 1,
    // so 0 is forced into {1} even though 2 would be an escape.
    const ParityGame g = ParityGame::from_lists({{1, 2}, {1}, {2}},
                                                {Player::Odd, Player::Even, Player::Even},
                                                {0, 0, 0});
    const Transposed rev = transpose(g);
    std::vector<std::uint8_t> alive = {1, 1, 0};
    const auto mask = attractor_mask(g, rev, Player::Even, {1}, alive);
    EXPECT_TRUE(mask[0]);
    EXPECT_TRUE(mask[1]);
    EXPECT_FALSE(mask[2]);
}

TEST(Zielonka, SolvesNineNodeGame) {
    const ParityGame g = nine_node_game();
    const Solution sol = zielonka_solve(g);
    const std::vector<Player> expected = {Player::Odd,  Player::Odd,  Player::Odd,
                                          Player::Odd,  Player::Even, Player::Even,
                                          Player::Even, Player::Even, Player::Odd};
    EXPECT_EQ(sol.winner, expected);
    EXPECT_TRUE(strategy_wins(g, sol, Player::Even));
    EXPECT_TRUE(strategy_wins(g, sol, Player::Odd));
}

TEST(Zielonka, RejectsSinks) {
    const ParityGame g = ParityGame::from_lists({{1}, {}}, {Player::Even, Player::Odd}, {0, 1});
    EXPECT_THROW(zielonka_solve(g), std::invalid_argument);
}

TEST(BruteForce, SolvesNineNodeGame) {
    const ParityGame g = nine_node_game();
    EXPECT_EQ(strategy_pair_count(g), 128u);
    const Solution sol = brute_force_solve(g);
    EXPECT_EQ(sol.winner, zielonka_solve(g).winner);
    EXPECT_TRUE(strategy_wins(g, sol, Player::Even));
    EXPECT_TRUE(strategy_wins(g, sol, Player::Odd));
}

TEST(BruteForce, RefusesOversizedGames) {
    const ParityGame g = random_game(40, 3, 2, 1);  // 3^40 strategy pairs
    EXPECT_GT(strategy_pair_count(g), kBruteForceLimit);
    EXPECT_THROW(brute_force_solve(g), std::invalid_argument);
}

TEST(BruteForce, TwoCycleWithMixedOwners) {
    // 0 (Even, priority 2) <-> 1 (Odd, priority 1): the only play is the
    // 2-cycle, maximum 2, Even wins everywhere; neither player has a choice.
    const ParityGame g = ParityGame::from_lists({{1}, {0}}, {Player::Even, Player::Odd}, {2, 1});
    const Solution sol = brute_force_solve(g);
    EXPECT_EQ(sol.winner[0], Player::Even);
    EXPECT_EQ(sol.winner[1], Player::Even);
    EXPECT_EQ(sol.strategy[0], 1);           // Even wins at its own node
    EXPECT_EQ(sol.strategy[1], kNoWitness);  // Odd loses, no strategy recorded
}

TEST(Oracles, AgreeOnSmallRandomGames) {
    // Dense mini-sweep of the regime where both solvers are exact; the
    // recorded strategies are verified independently as well.
    int games = 0;
    for (int n = 2; n <= 6; ++n) {
        for (int c : {2, 4}) {
            for (std::uint64_t seed = 0; seed < 25; ++seed) {
                const int d = std::min(2, n - 1);
                const ParityGame g = random_game(n, d, c, 1000 + seed);
                const Solution bf = brute_force_solve(g);
                const Solution zi = zielonka_solve(g);
                ASSERT_EQ(bf.winner, zi.winner)
                    << "n=" << n << " c=" << c << " seed=" << 1000 + seed;
                ASSERT_TRUE(strategy_wins(g, zi, Player::Even));
                ASSERT_TRUE(strategy_wins(g, zi, Player::Odd));
                ASSERT_TRUE(strategy_wins(g, bf, Player::Even));
                ASSERT_TRUE(strategy_wins(g, bf, Player::Odd));
                ++games;
            }
        }
    }
    EXPECT_EQ(games, 250);
}

TEST(Zielonka, StrategiesVerifyOnMediumGames) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const ParityGame g = random_game(60, 3, 4, 50 + seed);
        const Solution sol = zielonka_solve(g);
        ASSERT_TRUE(strategy_wins(g, sol, Player::Even)) << "seed " << 50 + seed;
        ASSERT_TRUE(strategy_wins(g, sol, Player::Odd)) << "seed " << 50 + seed;
    }
}

TEST(DegreeOne, CycleWinnerByMaximum) {
    // 4-cycle with priorities 3,0,2,1: maximum 3, Odd wins everywhere.
    const ParityGame g = ParityGame::from_lists(
        {{1}, {2}, {3}, {0}},
        {Player::Odd, Player::Even, Player::Even, Player::Odd}, {3, 0, 2, 1});
    const Solution sol = solve_d1(g);
    for (int v = 0; v < 4; ++v) EXPECT_EQ(sol.winner[v], Player::Odd) << v;
    EXPECT_EQ(sol.strategy[0], 1);           // Odd-owned, winning
    EXPECT_EQ(sol.strategy[1], kNoWitness);  // Even-owned, losing
}

TEST(DegreeOne, TailPriorityDoesNotCount) {
    // 0 -> 1 -> 2 -> 1: node 0's huge priority is off-cycle; the reachable
    // cycle {1,2} has maximum 2, so Even wins from every start.
    const ParityGame g = ParityGame::from_lists(
        {{1}, {2}, {1}}, {Player::Odd, Player::Even, Player::Even}, {9, 0, 2});
    const Solution sol = solve_d1(g);
    EXPECT_EQ(sol.winner[0], Player::Even);
    EXPECT_EQ(sol.winner[1], Player::Even);
    EXPECT_EQ(sol.winner[2], Player::Even);
}

TEST(DegreeOne, RejectsBranchingNodes) {
    const ParityGame g = ParityGame::from_lists({{1, 0}, {0}}, {Player::Even, Player::Odd}, {0, 1});
    EXPECT_THROW(solve_d1(g), std::invalid_argument);
}

TEST(DegreeOne, AgreesWithZielonka) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const int n = 10 + static_cast<int>(seed % 7) * 15;
        const ParityGame g = random_game(n, 1, 2 + 2 * static_cast<int>(seed % 2), 300 + seed);
        const Solution d1 = solve_d1(g);
        const Solution zi = zielonka_solve(g);
        ASSERT_EQ(d1.winner, zi.winner) << "seed " << 300 + seed;
        ASSERT_TRUE(strategy_wins(g, d1, Player::Even));
        ASSERT_TRUE(strategy_wins(g, d1, Player::Odd));
    }
}

TEST(DegreeOne, HandlesLargeInstance) {
    // At this size nearly every cycle of the functional graph carries an odd
    // maximum (an Even cycle needs every one of its priorities to be 0), so
    // the meaningful check is agreement with the exact solver, not balance.
    const ParityGame g = random_game(2000, 1, 2, 77);
    const Solution sol = solve_d1(g);
    int odd = 0;
    for (Player p : sol.winner) odd += (p == Player::Odd);
    EXPECT_GT(odd, 0);
    EXPECT_EQ(sol.winner, zielonka_solve(g).winner);
}

TEST(SelfReach, LabelsNineNodeGame) {
    // Every node has a same-owner path to a self-winning node here, so the
    // whole game is certified, and indeed winner == owner at every node.
    const ParityGame g = nine_node_game();
    const auto labels = self_reach_labels(g);
    const Solution sol = zielonka_solve(g);
    for (int v = 0; v < g.node_count(); ++v) {
        EXPECT_EQ(labels[v], SelfReachLabel::OwnerCertified) << v;
        EXPECT_EQ(sol.winner[v], g.owner[v]) << v;
    }
}

TEST(SelfReach, UncertifiedNodeStaysUnknown) {
    // 1 loops on itself with even priority (self-winning for Even); node 0 is
    // Odd-owned, so its path to node 1 leaves its owner's subgraph.
    const ParityGame g =
        ParityGame::from_lists({{1}, {1}}, {Player::Odd, Player::Even}, {0, 0});
    const auto labels = self_reach_labels(g);
    EXPECT_EQ(labels[0], SelfReachLabel::Unknown);
    EXPECT_EQ(labels[1], SelfReachLabel::OwnerCertified);
}

TEST(SelfReach, CertificationIsSound) {
    // OwnerCertified must imply the owner really wins the node.
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const ParityGame g = random_game(80, 3, 4, 500 + seed);
        const auto labels = self_reach_labels(g);
        const Solution sol = zielonka_solve(g);
        for (int v = 0; v < g.node_count(); ++v) {
            if (labels[v] == SelfReachLabel::OwnerCertified) {
                ASSERT_EQ(sol.winner[v], g.owner[v]) << "seed " << 500 + seed << " node " << v;
            }
        }
    }
}

TEST(SelfReach, DenseGamesAreAlmostFullyCertified) {
    GenConfig cfg;
    cfg.node_count = 2000;
    cfg.degree = DegreeSpec::frac(0.5);
    cfg.seed = 9090;
    const ParityGame g = generate(cfg);
    // Anchor skipping yields the identical marked set and keeps this dense
    // instance cheap.
    SelfWinningOptions opts;
    opts.skip_marked_anchors = true;
    const auto labels = self_reach_labels(g, find_self_winning(g, opts));
    int certified = 0;
    for (auto l : labels) certified += (l == SelfReachLabel::OwnerCertified);
    EXPECT_GE(certified / 2000.0, 0.95);
}
