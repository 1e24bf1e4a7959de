#include "fixtures.hpp"
#include "oracles.hpp"

#include "tilecheck/oracle.hpp"
#include "tilecheck/star.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace tilecheck;
using namespace tilecheck::testing;

TEST_CASE("three-letter example keeps the whole alphabet")
{
    const auto graphs = three_letter_graphs();
    CHECK(prune_star(graphs) == std::vector<std::size_t>{0, 1, 2});
    const auto check = check_star(graphs);
    REQUIRE(check.holds());
    const auto& w = *check.witness;
    CHECK(w.subalphabet == std::vector<std::size_t>{0, 1, 2});
    for (std::size_t a = 0; a < 3; ++a) CHECK(w.forward[a][0] == (a + 1) % 3);
    CHECK(is_valid_witness(w, graphs));
    CHECK(check.removal_round == std::vector<int>{0, 0, 0});
}

TEST_CASE("a letter without successor is pruned, then its predecessor")
{
    // Γ_1: 0 -> 1 -> 2, 2 -> 2; Γ_2 full. Letter 0 has no predecessor in Γ_1.
    GraphFamily f = make_family(3, {{{0, 1}, {1, 2}, {2, 2}},
                                    {{0, 0}, {1, 1}, {2, 2}}});
    CHECK(prune_star(f) == std::vector<std::size_t>{2});
    const auto check = check_star(f);
    CHECK(check.removal_round == std::vector<int>{1, 2, 0});
    CHECK(prune_star_forward(f) == std::vector<std::size_t>{0, 1, 2});
    REQUIRE(check.holds());
    CHECK(check.witness->forward[0][0] == no_letter);
}

TEST_CASE("empty alphabet and graphs without edges fail")
{
    GraphFamily empty = make_family(0, {{}, {}});
    CHECK_FALSE(check_star(empty).holds());
    CHECK_FALSE(check_star(make_family(3, {{{0, 1}, {1, 0}}, {}})).holds());
}

TEST_CASE("a single self-loop tile satisfies the criterion")
{
    for (int d = 1; d <= 3; ++d) {
        GraphFamily f = make_family(1, std::vector<Edges>(static_cast<std::size_t>(d), Edges{{0, 0}}));
        CHECK(check_star(f).holds());
    }
}

TEST_CASE("pruning matches the brute-force greatest closed subset")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 400; ++trial) {
        const auto f = random_family(rng, 1 + trial % 8, 1 + trial % 3, 0.1 + 0.05 * (trial % 7));
        const auto expected = brute_force_closed_subset(f);
        CHECK(prune_star(f) == expected);
        const auto forward = prune_star_forward(f);
        CHECK(std::includes(forward.begin(), forward.end(), expected.begin(), expected.end()));
        const auto check = check_star(f);
        CHECK(check.holds() == !expected.empty());
        if (check.holds()) CHECK(is_valid_witness(*check.witness, f));
    }
}

TEST_CASE("forward-only pruning can keep letters that no configuration uses")
{
    // Every letter has a successor in both graphs, but 1 has no predecessor in Γ_1
    // and 0 has none in Γ_2.
    const auto f = make_family(2, {{{0, 0}, {1, 0}}, {{1, 1}, {0, 1}}});
    CHECK(prune_star_forward(f) == std::vector<std::size_t>{0, 1});
    CHECK(prune_star(f).empty());
    CHECK(brute_force_closed_subset(f).empty());
    CHECK_FALSE(tile_free_ball(f, 2).has_value());
}

TEST_CASE("witness validation rejects tampering")
{
    const auto graphs = three_letter_graphs();
    auto w = *check_star(graphs).witness;
    w.forward[0][0] = 2;  // 0 -> 2 is not in Γ_1
    CHECK_FALSE(is_valid_witness(w, graphs));
    w = *check_star(graphs).witness;
    w.backward[1][1] = no_letter;
    CHECK_FALSE(is_valid_witness(w, graphs));
}

TEST_CASE("free ball sizes")
{
    CHECK(free_ball_size(1, 0) == 1);
    CHECK(free_ball_size(1, 3) == 7);
    CHECK(free_ball_size(2, 1) == 5);
    CHECK(free_ball_size(2, 2) == 17);
    CHECK(free_ball_size(3, 2) == 1 + 6 + 30);
    CHECK(free_ball_skeleton(2, 3).nodes.size() == 53);
}

TEST_CASE("labeled balls built from witnesses are valid")
{
    const auto graphs = three_letter_graphs();
    const auto check = check_star(graphs);
    for (int r = 0; r <= 5; ++r) {
        const auto ball = build_free_ball(*check.witness, graphs, r);
        CHECK(ball.nodes.size() == free_ball_size(2, r));
        CHECK(is_valid_labeling(ball, graphs));
        CHECK(ball_labeling_ok(ball, graphs, r));
    }
    auto ball = build_free_ball(*check.witness, graphs, 3);
    ball.nodes[1].label = (ball.nodes[1].label + 1) % 3;
    CHECK_FALSE(ball_labeling_ok(ball, graphs, 3));
}

TEST_CASE("tile_free_ball agrees with pruning at radius |A|")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const int d = 1 + trial % 2;
        const auto f = random_family(rng, n, d, 0.15 + 0.05 * (trial % 5));
        const auto ball = tile_free_ball(f, static_cast<int>(n));
        CHECK(ball.has_value() == !prune_star(f).empty());
        if (ball) CHECK(ball_labeling_ok(*ball, f, static_cast<int>(n)));
    }
}
