#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tilecheck {

// A generator g_i (inverse == false) or its inverse g_i^{-1}. Indices are 1-based.
// Also used to address tile sides: side g of a tile meets side g^{-1} of the
// neighbouring tile in direction g.
struct Generator {
    int index = 1;
    bool inverse = false;

    Generator inverted() const { return {index, !inverse}; }
    auto operator<=>(const Generator&) const = default;
};

using Word = std::vector<Generator>;

// Sides are stored in the order g1, g1_inv, g2, g2_inv, ...
std::size_t side_slot(Generator g);
Generator side_at(std::size_t slot);
std::string side_name(Generator g);

// Accepts "g<i>" and "g<i>_inv"; for two generators also right/left/top/bottom.
std::optional<Generator> parse_side(std::string_view name, int generators);

struct WangTile {
    std::string id;
    // Color per side, indexed by side_slot. An empty string marks a missing side.
    std::vector<std::string> sides;

    const std::string& color(Generator g) const { return sides.at(side_slot(g)); }
};

struct WangTileSet {
    int generators = 0;
    std::vector<std::string> colors;
    std::vector<WangTile> tiles;

    std::size_t side_count() const { return 2 * static_cast<std::size_t>(generators); }
    std::optional<std::size_t> tile_index(std::string_view id) const;
    std::optional<std::size_t> color_index(std::string_view color) const;
};

// Directed graph on vertices 0..size()-1. Parallel edges collapse; self-loops allowed.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(std::size_t vertices) : succ_(vertices) {}

    std::size_t size() const { return succ_.size(); }
    void add_edge(std::size_t from, std::size_t to);
    bool has_edge(std::size_t from, std::size_t to) const;
    // Sorted, without duplicates.
    const std::vector<std::size_t>& successors(std::size_t v) const { return succ_.at(v); }
    std::vector<std::vector<std::size_t>> predecessor_lists() const;
    std::size_t edge_count() const;
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    bool operator==(const Digraph&) const = default;

private:
    std::vector<std::vector<std::size_t>> succ_;
};

// One graph per generator, all on the same alphabet. graphs[i] is Γ_{i+1}.
struct GraphFamily {
    std::vector<std::string> alphabet;
    std::vector<Digraph> graphs;

    int generators() const { return static_cast<int>(graphs.size()); }
    std::optional<std::size_t> letter_index(std::string_view name) const;

    bool operator==(const GraphFamily&) const = default;
};

struct Presentation {
    int generators = 0;
    std::vector<Word> relators;
};

struct Violation {
    std::string invariant;
    std::string element;

    bool operator==(const Violation&) const = default;
};

std::vector<Violation> validate(const WangTileSet& tiles);
std::vector<Violation> validate(const GraphFamily& graphs);
std::vector<Violation> validate(const Presentation& presentation);

bool is_freely_reduced(const Word& word);
std::string word_to_string(const Word& word);

// Letter-to-letter conjugacy: the alphabet is the tile ids, and Γ_g has an edge
// τ → σ whenever τ(g) = σ(g^{-1}).
GraphFamily wang_to_graphs(const WangTileSet& tiles);

// Inverse of wang_to_graphs for permutation families: tile a shows color a on every
// g_j^{-1} side and its Γ_j-successor on the g_j side. Throws NotFunctional.
WangTileSet graphs_to_wang_functional(const GraphFamily& graphs);

// Indices of the tiles τ with τ(side) == color. Throws UnknownName.
std::vector<std::size_t> color_class(const WangTileSet& tiles, std::string_view color,
                                     Generator side);

// Dense color indices, [tile][side slot]. Requires a valid tile set.
std::vector<std::vector<std::size_t>> side_color_indices(const WangTileSet& tiles);

} // namespace tilecheck
