#include "fixtures.hpp"
#include "oracles.hpp"

#include "tilecheck/conditions.hpp"
#include "tilecheck/errors.hpp"

#include <doctest.h>

#include <random>

using namespace tilecheck;
using namespace tilecheck::testing;

namespace {

std::map<std::string, std::int64_t> named(const LinearSystem& sys, std::size_t e)
{
    std::map<std::string, std::int64_t> out;
    for (const auto& t : sys.equations[e]) out[sys.variables[t.variable]] += t.coefficient;
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

} // namespace

TEST_CASE("cycle balance system of the three-letter example")
{
    const auto b = build_cycle_balance_system(three_letter_graphs());
    CHECK(b.system.variables == std::vector<std::string>{"x_1_1", "x_2_1", "x_2_2"});
    REQUIRE(b.system.equations.size() == 3);
    CHECK(named(b.system, 0) == std::map<std::string, std::int64_t>{{"x_1_1", 1}});
    CHECK(named(b.system, 1) == std::map<std::string, std::int64_t>{{"x_1_1", 1}, {"x_2_1", -1}});
    CHECK(named(b.system, 2) == std::map<std::string, std::int64_t>{{"x_1_1", 1}, {"x_2_2", -1}});

    const auto check = check_starstar(three_letter_graphs());
    CHECK_FALSE(check.holds());
    REQUIRE(check.certificate);
    CHECK(certifies_infeasible(check.balance->system, *check.certificate));
}

TEST_CASE("tile balance system of the three-letter example is infeasible")
{
    const auto check = check_starstar_prime(three_letter_tiles());
    CHECK_FALSE(check.holds());
    REQUIRE(check.certificate);
    CHECK(certifies_infeasible(check.balance.system, *check.certificate));
    CHECK(check.balance.system.variables == std::vector<std::string>{"x_0", "x_1", "x_2"});
    const auto report = check_equivalence(three_letter_tiles());
    CHECK_FALSE(report.holds());
    CHECK_FALSE(report.ssp_from_ss);
}

TEST_CASE("a graph without cycles fails immediately")
{
    const auto f = make_family(2, {{{0, 1}, {1, 0}}, {{0, 1}}});
    const auto check = check_starstar(f);
    CHECK_FALSE(check.holds());
    CHECK(check.reason.find("g2") != std::string::npos);
}

TEST_CASE("single tile: both conditions hold with weight one")
{
    for (int d = 1; d <= 3; ++d) {
        const auto tiles = single_tile(d);
        const auto report = check_equivalence(tiles);
        CHECK(report.holds());
        REQUIRE(report.starstar_prime.solution);
        CHECK(report.starstar_prime.solution->weights == std::vector<Rational>{1});
        REQUIRE(report.ss_from_ssp);
        CHECK(is_valid_ss_solution(wang_to_graphs(tiles), *report.ss_from_ssp));
    }
}

TEST_CASE("commutator tiles satisfy both conditions; uniform weights are a solution")
{
    const auto tiles = commutator_tiles();
    const auto report = check_equivalence(tiles);
    CHECK(report.holds());
    CHECK(report.starstar_prime.holds());
    SSPSolution uniform{std::vector<Rational>(5, Rational(1, 5))};
    CHECK(is_valid_ssp_solution(tiles, uniform));
    const auto ss = ssp_to_ss(SSPSolution{std::vector<Rational>(5, 1)}, tiles);
    CHECK(is_valid_ss_solution(commutator_graphs(), ss));
    CHECK(ss_to_ssp(ss, commutator_graphs(), tiles).weights == std::vector<Rational>(5, 1));
}

TEST_CASE("translation preconditions")
{
    const auto tiles = commutator_tiles();
    CHECK_THROWS_AS(ssp_to_ss(SSPSolution{std::vector<Rational>(5, Rational(1, 5))}, tiles),
                    NonIntegerSolution);
    const auto ss = *check_starstar(commutator_graphs()).solution;
    CHECK_THROWS_AS(ss_to_ssp(ss, three_letter_graphs(), tiles), MismatchedInstance);
}

TEST_CASE("letter totals agree across generators in valid solutions")
{
    const auto check = check_starstar(commutator_graphs());
    REQUIRE(check.solution);
    const auto t1 = letter_totals(*check.solution, 0, 5);
    const auto t2 = letter_totals(*check.solution, 1, 5);
    CHECK(t1 == t2);
    auto broken = *check.solution;
    broken.weights[0][0] += 1;
    CHECK_FALSE(is_valid_ss_solution(commutator_graphs(), broken));
}

TEST_CASE("equivalence and translations on random tile sets")
{
    std::mt19937 rng(41);
    int feasible = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto tiles = random_tile_set(rng, 1 + trial % 5, 1 + trial % 3, 1 + trial % 3);
        const auto report = check_equivalence(tiles);
        CHECK(report.starstar.holds() == report.starstar_prime.holds());
        CHECK(report.starstar_prime.holds() ==
              vertex_enumeration_feasible(report.starstar_prime.balance.system));
        if (report.holds()) {
            ++feasible;
            CHECK(is_valid_ssp_solution(tiles, *report.ssp_from_ss));
            CHECK(is_valid_ss_solution(wang_to_graphs(tiles), *report.ss_from_ssp));
        }
    }
    CHECK(feasible > 0);
}
