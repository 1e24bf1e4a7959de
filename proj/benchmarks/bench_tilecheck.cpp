#include "tilecheck/conditions.hpp"
#include "tilecheck/counterexample.hpp"
#include "tilecheck/cycles.hpp"
#include "tilecheck/oracle.hpp"
#include "tilecheck/star.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace tilecheck;

namespace {

Digraph random_digraph(std::mt19937& rng, std::size_t n, double p)
{
    std::bernoulli_distribution edge(p);
    Digraph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (edge(rng)) g.add_edge(u, v);
    return g;
}

WangTileSet random_tiles(std::mt19937& rng, std::size_t count, std::size_t colors, int generators)
{
    WangTileSet s;
    s.generators = generators;
    for (std::size_t c = 0; c < colors; ++c) s.colors.push_back(std::string(1, char('a' + c)));
    std::uniform_int_distribution<std::size_t> pick(0, colors - 1);
    for (std::size_t t = 0; t < count; ++t) {
        WangTile tile{"t" + std::to_string(t), {}};
        for (std::size_t k = 0; k < s.side_count(); ++k) tile.sides.push_back(s.colors[pick(rng)]);
        s.tiles.push_back(tile);
    }
    return s;
}

const Word commutator{{1, false}, {2, false}, {1, true}, {2, true}};

} // namespace

static void BM_SimpleCycles(benchmark::State& state)
{
    std::mt19937 rng(1);
    const auto g = random_digraph(rng, static_cast<std::size_t>(state.range(0)), 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_simple_cycles(g));
}
BENCHMARK(BM_SimpleCycles)->Arg(6)->Arg(8)->Arg(10)->Arg(12);

static void BM_PruneStar(benchmark::State& state)
{
    std::mt19937 rng(2);
    GraphFamily f;
    const auto n = static_cast<std::size_t>(state.range(0));
    for (std::size_t a = 0; a < n; ++a) f.alphabet.push_back(std::to_string(a));
    for (int i = 0; i < 3; ++i) f.graphs.push_back(random_digraph(rng, n, 2.0 / static_cast<double>(n)));
    for (auto _ : state) benchmark::DoNotOptimize(prune_star(f));
}
BENCHMARK(BM_PruneStar)->Arg(16)->Arg(64)->Arg(256);

static void BM_TileBalanceSimplex(benchmark::State& state)
{
    std::mt19937 rng(3);
    const auto tiles = random_tiles(rng, static_cast<std::size_t>(state.range(0)), 3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(check_starstar_prime(tiles));
}
BENCHMARK(BM_TileBalanceSimplex)->Arg(5)->Arg(10)->Arg(20);

static void BM_Equivalence(benchmark::State& state)
{
    std::mt19937 rng(4);
    const auto tiles = random_tiles(rng, static_cast<std::size_t>(state.range(0)), 2, 2);
    for (auto _ : state) benchmark::DoNotOptimize(check_equivalence(tiles));
}
BENCHMARK(BM_Equivalence)->Arg(3)->Arg(5);

static void BM_TorusSearchCommutator(benchmark::State& state)
{
    const auto ce = build_counterexample(Presentation{2, {commutator}}, 0);
    const int side = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tile_torus(ce.tiles, side, side));
}
BENCHMARK(BM_TorusSearchCommutator)->Arg(2)->Arg(4)->Arg(8);

static void BM_FreeBallSearch(benchmark::State& state)
{
    GraphFamily f;
    f.alphabet = {"0", "1", "2"};
    Digraph g1(3);
    g1.add_edge(0, 1);
    g1.add_edge(1, 2);
    g1.add_edge(2, 0);
    Digraph g2(3);
    g2.add_edge(1, 0);
    g2.add_edge(0, 2);
    g2.add_edge(1, 1);
    g2.add_edge(2, 2);
    f.graphs = {g1, g2};
    const int radius = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tile_free_ball(f, radius));
}
BENCHMARK(BM_FreeBallSearch)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
