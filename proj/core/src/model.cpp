#include "tilecheck/model.hpp"

#include "tilecheck/errors.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace tilecheck {

std::size_t side_slot(Generator g)
{
    if (g.index < 1) {
        throw std::out_of_range("generator index must be at least 1");
    }
    return 2 * static_cast<std::size_t>(g.index - 1) + (g.inverse ? 1 : 0);
}

Generator side_at(std::size_t slot)
{
    return {static_cast<int>(slot / 2) + 1, slot % 2 == 1};
}

std::string side_name(Generator g)
{
    std::string name = "g" + std::to_string(g.index);
    if (g.inverse) {
        name += "_inv";
    }
    return name;
}

std::optional<Generator> parse_side(std::string_view name, int generators)
{
    if (generators == 2) {
        if (name == "right") return Generator{1, false};
        if (name == "left") return Generator{1, true};
        if (name == "top") return Generator{2, false};
        if (name == "bottom") return Generator{2, true};
    }
    if (name.size() < 2 || name.front() != 'g') {
        return std::nullopt;
    }
    name.remove_prefix(1);
    bool inverse = false;
    constexpr std::string_view suffix = "_inv";
    if (name.size() > suffix.size() && name.substr(name.size() - suffix.size()) == suffix) {
        inverse = true;
        name.remove_suffix(suffix.size());
    }
    int index = 0;
    auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), index);
    if (ec != std::errc{} || ptr != name.data() + name.size() || index < 1 || index > generators) {
        return std::nullopt;
    }
    return Generator{index, inverse};
}

std::optional<std::size_t> WangTileSet::tile_index(std::string_view id) const
{
    for (std::size_t i = 0; i < tiles.size(); ++i) {
        if (tiles[i].id == id) return i;
    }
    return std::nullopt;
}

std::optional<std::size_t> WangTileSet::color_index(std::string_view color) const
{
    auto it = std::find(colors.begin(), colors.end(), color);
    if (it == colors.end()) return std::nullopt;
    return static_cast<std::size_t>(it - colors.begin());
}

void Digraph::add_edge(std::size_t from, std::size_t to)
{
    auto& out = succ_.at(from);
    auto it = std::lower_bound(out.begin(), out.end(), to);
    if (it == out.end() || *it != to) {
        out.insert(it, to);
    }
}

bool Digraph::has_edge(std::size_t from, std::size_t to) const
{
    if (from >= succ_.size()) return false;
    const auto& out = succ_[from];
    return std::binary_search(out.begin(), out.end(), to);
}

std::vector<std::vector<std::size_t>> Digraph::predecessor_lists() const
{
    std::vector<std::vector<std::size_t>> pred(succ_.size());
    for (std::size_t v = 0; v < succ_.size(); ++v) {
        for (std::size_t w : succ_[v]) {
            if (w < pred.size()) pred[w].push_back(v);
        }
    }
    return pred;
}

std::size_t Digraph::edge_count() const
{
    std::size_t count = 0;
    for (const auto& out : succ_) count += out.size();
    return count;
}

std::vector<std::pair<std::size_t, std::size_t>> Digraph::edges() const
{
    std::vector<std::pair<std::size_t, std::size_t>> result;
    for (std::size_t v = 0; v < succ_.size(); ++v) {
        for (std::size_t w : succ_[v]) result.emplace_back(v, w);
    }
    return result;
}

std::optional<std::size_t> GraphFamily::letter_index(std::string_view name) const
{
    auto it = std::find(alphabet.begin(), alphabet.end(), name);
    if (it == alphabet.end()) return std::nullopt;
    return static_cast<std::size_t>(it - alphabet.begin());
}

std::vector<Violation> validate(const WangTileSet& tiles)
{
    std::vector<Violation> out;
    if (tiles.generators < 1) {
        out.push_back({"generator count", "generators = " + std::to_string(tiles.generators)});
        return out;
    }
    std::set<std::string> colors;
    for (const auto& c : tiles.colors) {
        if (c.empty()) {
            out.push_back({"empty identifier", "colors"});
        } else if (!colors.insert(c).second) {
            out.push_back({"duplicate color", c});
        }
    }
    std::set<std::string> ids;
    for (const auto& tile : tiles.tiles) {
        if (tile.id.empty()) {
            out.push_back({"empty identifier", "tile id"});
        } else if (!ids.insert(tile.id).second) {
            out.push_back({"duplicate tile id", tile.id});
        }
        if (tile.sides.size() != tiles.side_count()) {
            out.push_back({"incomplete side map", tile.id + ": expected " +
                                                      std::to_string(tiles.side_count()) +
                                                      " sides"});
        }
        for (std::size_t slot = 0; slot < tiles.side_count(); ++slot) {
            if (slot >= tile.sides.size() || tile.sides[slot].empty()) {
                out.push_back({"incomplete side map", tile.id + " side " + side_name(side_at(slot))});
            } else if (!colors.count(tile.sides[slot])) {
                out.push_back({"unknown color", tile.id + " side " + side_name(side_at(slot)) +
                                                    " = " + tile.sides[slot]});
            }
        }
    }
    return out;
}

std::vector<Violation> validate(const GraphFamily& graphs)
{
    std::vector<Violation> out;
    if (graphs.graphs.empty()) {
        out.push_back({"generator count", "no graphs"});
    }
    std::set<std::string> letters;
    for (const auto& a : graphs.alphabet) {
        if (a.empty()) {
            out.push_back({"empty identifier", "alphabet"});
        } else if (!letters.insert(a).second) {
            out.push_back({"duplicate letter", a});
        }
    }
    const std::size_t n = graphs.alphabet.size();
    for (std::size_t i = 0; i < graphs.graphs.size(); ++i) {
        const auto& g = graphs.graphs[i];
        const std::string name = "graph g" + std::to_string(i + 1);
        if (g.size() != n) {
            out.push_back({"vertex set mismatch", name + " has " + std::to_string(g.size()) +
                                                      " vertices, alphabet has " +
                                                      std::to_string(n)});
        }
        for (auto [from, to] : g.edges()) {
            if (to >= n || from >= n) {
                out.push_back({"unknown vertex", name + " edge " + std::to_string(from) + " -> " +
                                                     std::to_string(to)});
            }
        }
    }
    return out;
}

bool is_freely_reduced(const Word& word)
{
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        if (word[i + 1] == word[i].inverted()) return false;
    }
    return true;
}

std::string word_to_string(const Word& word)
{
    std::string s;
    for (const auto& g : word) {
        if (!s.empty()) s += ' ';
        s += side_name(g);
    }
    return s;
}

std::vector<Violation> validate(const Presentation& presentation)
{
    std::vector<Violation> out;
    if (presentation.generators < 1) {
        out.push_back({"generator count", "generators = " + std::to_string(presentation.generators)});
    }
    for (std::size_t r = 0; r < presentation.relators.size(); ++r) {
        const auto& word = presentation.relators[r];
        const std::string name = "relator " + std::to_string(r);
        if (word.empty()) {
            out.push_back({"empty relator", name});
            continue;
        }
        for (const auto& g : word) {
            if (g.index < 1 || g.index > presentation.generators) {
                out.push_back({"unknown generator", name + ": index " + std::to_string(g.index)});
            }
        }
        if (!is_freely_reduced(word)) {
            out.push_back({"not freely reduced", name + ": " + word_to_string(word)});
        }
    }
    return out;
}

GraphFamily wang_to_graphs(const WangTileSet& tiles)
{
    const auto colors = side_color_indices(tiles);
    const std::size_t n = tiles.tiles.size();
    GraphFamily family;
    for (const auto& t : tiles.tiles) family.alphabet.push_back(t.id);
    for (int g = 1; g <= tiles.generators; ++g) {
        const std::size_t out_slot = side_slot({g, false});
        const std::size_t in_slot = side_slot({g, true});
        Digraph graph(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (colors[i][out_slot] == colors[j][in_slot]) graph.add_edge(i, j);
            }
        }
        family.graphs.push_back(std::move(graph));
    }
    return family;
}

WangTileSet graphs_to_wang_functional(const GraphFamily& graphs)
{
    const std::size_t n = graphs.alphabet.size();
    WangTileSet tiles;
    tiles.generators = graphs.generators();
    tiles.colors = graphs.alphabet;
    for (int g = 1; g <= graphs.generators(); ++g) {
        const auto& graph = graphs.graphs[g - 1];
        std::vector<int> in_degree(n, 0);
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t w : graph.successors(v)) ++in_degree.at(w);
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (graph.successors(v).size() != 1 || in_degree[v] != 1) {
                throw NotFunctional("graph g" + std::to_string(g) + " is not a permutation at '" +
                                    graphs.alphabet[v] + "'");
            }
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        WangTile tile{graphs.alphabet[v], std::vector<std::string>(tiles.side_count())};
        for (int g = 1; g <= graphs.generators(); ++g) {
            tile.sides[side_slot({g, true})] = graphs.alphabet[v];
            tile.sides[side_slot({g, false})] =
                graphs.alphabet[graphs.graphs[g - 1].successors(v).front()];
        }
        tiles.tiles.push_back(std::move(tile));
    }
    return tiles;
}

std::vector<std::size_t> color_class(const WangTileSet& tiles, std::string_view color,
                                     Generator side)
{
    if (!tiles.color_index(color)) {
        throw UnknownName("unknown color '" + std::string(color) + "'");
    }
    if (side.index < 1 || side.index > tiles.generators) {
        throw UnknownName("unknown side " + side_name(side));
    }
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < tiles.tiles.size(); ++i) {
        if (tiles.tiles[i].color(side) == color) members.push_back(i);
    }
    return members;
}

std::vector<std::vector<std::size_t>> side_color_indices(const WangTileSet& tiles)
{
    std::vector<std::vector<std::size_t>> out;
    out.reserve(tiles.tiles.size());
    for (const auto& tile : tiles.tiles) {
        std::vector<std::size_t> row(tiles.side_count());
        for (std::size_t slot = 0; slot < row.size(); ++slot) {
            auto c = slot < tile.sides.size() ? tiles.color_index(tile.sides[slot]) : std::nullopt;
            if (!c) {
                throw UnknownName("tile '" + tile.id + "' has no valid color on side " +
                                  side_name(side_at(slot)));
            }
            row[slot] = *c;
        }
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace tilecheck
