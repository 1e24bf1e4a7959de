#include "fixtures.hpp"
#include "oracles.hpp"

#include "tilecheck/errors.hpp"
#include "tilecheck/oracle.hpp"

#include <doctest.h>

#include <random>

using namespace tilecheck;
using namespace tilecheck::testing;

namespace {

// Direct count of each tile over [-k, k]^2 of the periodic configuration.
std::vector<Rational> naive_frequencies(const WangTileSet& tiles, const TilingGrid& g, int k)
{
    std::vector<long long> counts(tiles.tiles.size(), 0);
    for (int x = -k; x <= k; ++x)
        for (int y = -k; y <= k; ++y)
            ++counts[g.at(((x % g.width) + g.width) % g.width, ((y % g.height) + g.height) % g.height)];
    const long long box = (2LL * k + 1) * (2LL * k + 1);
    std::vector<Rational> out;
    for (auto c : counts) out.emplace_back(c, box);
    return out;
}

} // namespace

TEST_CASE("rectangles for the three-letter example")
{
    const auto tiles = three_letter_tiles();
    for (int k = 1; k <= 3; ++k) {
        const auto grid = tile_rectangle(tiles, k, k);
        CHECK(grid.has_value() == (count_grid_tilings(tiles, k, k, false) > 0));
        if (grid) CHECK(is_valid_tiling(tiles, *grid));
    }
    CHECK(tile_rectangle(tiles, 2, 2).has_value());
    CHECK_FALSE(tile_rectangle(tiles, 3, 3).has_value());
    CHECK_FALSE(tile_torus(tiles, 1, 1).has_value());
}

TEST_CASE("single tile tiles everything")
{
    const auto tiles = single_tile(2);
    const auto torus = tile_torus(tiles, 3, 2);
    REQUIRE(torus);
    CHECK(torus->cells == std::vector<std::size_t>(6, 0));
    CHECK(torus->topology == Topology::torus);
}

TEST_CASE("search agrees with exhaustive enumeration on tiny grids")
{
    std::mt19937 rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        const auto tiles = random_tile_set(rng, 1 + trial % 4, 1 + trial % 3, 2);
        for (int w = 1; w <= 3; ++w) {
            for (int h = 1; h <= 2; ++h) {
                for (bool wrap : {false, true}) {
                    const auto grid = wrap ? tile_torus(tiles, w, h) : tile_rectangle(tiles, w, h);
                    CHECK(grid.has_value() == (count_grid_tilings(tiles, w, h, wrap) > 0));
                    if (grid) CHECK(is_valid_tiling(tiles, *grid));
                }
            }
        }
    }
}

TEST_CASE("tiling validity catches wrong neighbours")
{
    const auto tiles = three_letter_tiles();
    auto grid = *tile_rectangle(tiles, 2, 2);
    CHECK(is_valid_tiling(tiles, grid));
    grid.topology = Topology::torus;
    CHECK_FALSE(is_valid_tiling(tiles, grid));
}

TEST_CASE("budget exhaustion is reported, not mistaken for none")
{
    const auto tiles = commutator_tiles();
    CHECK_THROWS_AS(tile_rectangle(tiles, 4, 4, 3), ResourceLimit);
    try {
        tile_torus(tiles, 4, 4, 10);
    } catch (const ResourceLimit& e) {
        CHECK(e.nodes() <= 10);
    }
    CHECK_THROWS_AS(tile_rectangle(single_tile(3), 2, 2), std::invalid_argument);
}

TEST_CASE("free ball search")
{
    const auto ball = tile_free_ball(three_letter_graphs(), 3);
    REQUIRE(ball);
    CHECK(ball_labeling_ok(*ball, three_letter_graphs(), 3));
    CHECK(tile_free_ball(three_letter_graphs(), 0)->nodes.size() == 1);
    CHECK_FALSE(tile_free_ball(make_family(2, {{{0, 1}}, {{0, 0}, {1, 1}}}), 2).has_value());
    CHECK_THROWS_AS(tile_free_ball(three_letter_graphs(), 12, 1000), ResourceLimit);
}

TEST_CASE("box measures")
{
    CHECK(box_cardinality(0, 2) == 1);
    CHECK(box_cardinality(3, 2) == 49);
    CHECK(box_shift_difference(3, 2) == 14);
    for (int k = 1; k <= 20; ++k) {
        CHECK(Rational(2 * box_shift_difference(k, 2), box_cardinality(k, 2)) == Rational(4, 2 * k + 1));
    }
}

TEST_CASE("frequency audit on random torus tilings")
{
    std::mt19937 rng(59);
    int audited = 0;
    for (int trial = 0; trial < 200 && audited < 25; ++trial) {
        const auto tiles = random_tile_set(rng, 1 + trial % 4, 2, 2);
        std::uniform_int_distribution<int> side(1, 4);
        const int w = side(rng);
        const int h = side(rng);
        const auto torus = tile_torus(tiles, w, h);
        if (!torus) continue;
        ++audited;
        std::vector<int> radii;
        for (int k = 1; k <= 20; ++k) radii.push_back(k);
        const auto report = folner_audit(tiles, *torus, radii);
        for (const auto& level : report.levels) {
            CHECK(level.frequencies == naive_frequencies(tiles, *torus, level.radius));
            for (const auto& d : level.defects) {
                CHECK(d.within_bound);
                CHECK(d.defect <= Rational(4, 2 * level.radius + 1));
                if (level.period_aligned[static_cast<std::size_t>(d.generator - 1)]) CHECK(d.defect == 0);
            }
        }
    }
    CHECK(audited > 0);
}
