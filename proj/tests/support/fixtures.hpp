#pragma once

// Shared instances and random generators for the test suites.

#include "tilecheck/model.hpp"

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace tilecheck::testing {

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

inline GraphFamily make_family(std::size_t letters, const std::vector<Edges>& graphs)
{
    GraphFamily f;
    for (std::size_t a = 0; a < letters; ++a) f.alphabet.push_back(std::to_string(a));
    for (const auto& edges : graphs) {
        Digraph g(letters);
        for (auto [u, v] : edges) g.add_edge(u, v);
        f.graphs.push_back(std::move(g));
    }
    return f;
}

// Sides given by name, e.g. {{"right", "b"}, {"left", "a"}, ...}.
inline WangTile make_tile(const std::string& id, int generators,
                          const std::map<std::string, std::string>& sides)
{
    WangTile t{id, std::vector<std::string>(2 * static_cast<std::size_t>(generators))};
    for (const auto& [name, color] : sides) {
        t.sides.at(side_slot(*parse_side(name, generators))) = color;
    }
    return t;
}

// Square tile: left, top, right, bottom.
inline WangTile square(const std::string& id, const std::string& left, const std::string& top,
                       const std::string& right, const std::string& bottom)
{
    return make_tile(id, 2, {{"left", left}, {"top", top}, {"right", right}, {"bottom", bottom}});
}

// Γ_1 = 0→1→2→0, Γ_2 = {1→0, 0→2, 1→1, 2→2}.
inline GraphFamily three_letter_graphs()
{
    return make_family(3, {{{0, 1}, {1, 2}, {2, 0}}, {{1, 0}, {0, 2}, {1, 1}, {2, 2}}});
}

// The three tiles conjugate to three_letter_graphs(); ids match the letters.
inline WangTileSet three_letter_tiles()
{
    WangTileSet s;
    s.generators = 2;
    s.colors = {"a", "b", "c"};
    s.tiles = {square("0", "a", "b", "b", "a"), square("1", "b", "a", "c", "a"),
               square("2", "c", "b", "a", "b")};
    return s;
}

// Completion Γ_1 = (0 1 4 3 2), Γ_2 = (0 1 2 4 3) of the commutator edges.
inline GraphFamily commutator_graphs()
{
    return make_family(5, {{{0, 1}, {1, 4}, {4, 3}, {3, 2}, {2, 0}},
                           {{0, 1}, {1, 2}, {2, 4}, {4, 3}, {3, 0}}});
}

// Tiles τ_0..τ_4 for commutator_graphs(), as left/top/right/bottom.
inline WangTileSet commutator_tiles()
{
    WangTileSet s;
    s.generators = 2;
    s.colors = {"0", "1", "2", "3", "4"};
    s.tiles = {square("0", "0", "1", "1", "0"), square("1", "1", "2", "4", "1"),
               square("2", "2", "4", "0", "2"), square("3", "3", "0", "2", "3"),
               square("4", "4", "3", "3", "4")};
    return s;
}

inline WangTileSet single_tile(int generators)
{
    WangTileSet s;
    s.generators = generators;
    s.colors = {"c"};
    s.tiles = {WangTile{"t", std::vector<std::string>(2 * static_cast<std::size_t>(generators), "c")}};
    return s;
}

inline Digraph random_digraph(std::mt19937& rng, std::size_t n, double p)
{
    std::bernoulli_distribution edge(p);
    Digraph g(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (edge(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

inline GraphFamily random_family(std::mt19937& rng, std::size_t letters, int generators, double p)
{
    GraphFamily f;
    for (std::size_t a = 0; a < letters; ++a) f.alphabet.push_back(std::to_string(a));
    for (int i = 0; i < generators; ++i) f.graphs.push_back(random_digraph(rng, letters, p));
    return f;
}

inline WangTileSet random_tile_set(std::mt19937& rng, std::size_t tiles, std::size_t colors,
                                   int generators)
{
    WangTileSet s;
    s.generators = generators;
    for (std::size_t c = 0; c < colors; ++c) s.colors.push_back(std::string(1, char('a' + c)));
    std::uniform_int_distribution<std::size_t> pick(0, colors - 1);
    for (std::size_t t = 0; t < tiles; ++t) {
        WangTile tile{"t" + std::to_string(t), {}};
        for (std::size_t slot = 0; slot < s.side_count(); ++slot) {
            tile.sides.push_back(s.colors[pick(rng)]);
        }
        s.tiles.push_back(std::move(tile));
    }
    return s;
}

inline Word random_reduced_word(std::mt19937& rng, std::size_t length, int generators)
{
    std::uniform_int_distribution<int> gen(1, generators);
    std::bernoulli_distribution inv(0.5);
    Word w;
    while (w.size() < length) {
        Generator g{gen(rng), inv(rng)};
        if (!w.empty() && g == w.back().inverted()) continue;
        w.push_back(g);
    }
    return w;
}

} // namespace tilecheck::testing
