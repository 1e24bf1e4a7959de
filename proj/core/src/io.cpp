#include "tilecheck/io.hpp"

#include "tilecheck/errors.hpp"

#include <fstream>
#include <sstream>

namespace tilecheck {

namespace {

[[noreturn]] void field_error(const std::string& path, const std::string& what)
{
    throw ParseError("field '" + path + "': " + what);
}

const Json& require(const Json& obj, const char* key, const std::string& path)
{
    if (!obj.is_object()) field_error(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) field_error(path.empty() ? key : path + "." + key, "missing");
    return *it;
}

std::string require_string(const Json& value, const std::string& path)
{
    if (!value.is_string()) field_error(path, "expected a string identifier");
    return value.get<std::string>();
}

int require_generator_count(const Json& doc)
{
    const Json& d = require(doc, "generators", "");
    if (!d.is_number_integer() || d.get<long long>() < 1 || d.get<long long>() > 1000) {
        field_error("generators", "expected a positive integer");
    }
    return d.get<int>();
}

void reject_self_inverse(const Json& doc)
{
    auto it = doc.find("self_inverse");
    if (it != doc.end() && !(it->is_array() && it->empty())) {
        field_error("self_inverse",
                    "generators equal to their own inverse are not supported");
    }
}

Generator parse_letter(const Json& value, int generators, const std::string& path)
{
    const std::string name = require_string(value, path);
    auto g = parse_side(name, generators);
    if (!g) field_error(path, "unknown generator '" + name + "'");
    return *g;
}

} // namespace

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": invalid JSON");
    }
}

InputKind detect_kind(const Json& doc)
{
    if (!doc.is_object()) throw ParseError("top level: expected an object");
    if (doc.contains("tiles")) return InputKind::tile_set;
    if (doc.contains("graphs")) return InputKind::graph_family;
    if (doc.contains("relators")) return InputKind::presentation;
    throw ParseError("top level: expected one of 'tiles', 'graphs', 'relators'");
}

WangTileSet tile_set_from_json(const Json& doc)
{
    if (!doc.is_object()) throw ParseError("top level: expected an object");
    reject_self_inverse(doc);
    WangTileSet tiles;
    tiles.generators = require_generator_count(doc);

    const Json& colors = require(doc, "colors", "");
    if (!colors.is_array()) field_error("colors", "expected an array");
    for (std::size_t i = 0; i < colors.size(); ++i) {
        tiles.colors.push_back(require_string(colors[i], "colors[" + std::to_string(i) + "]"));
    }

    const Json& list = require(doc, "tiles", "");
    if (!list.is_array()) field_error("tiles", "expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string path = "tiles[" + std::to_string(i) + "]";
        WangTile tile;
        tile.id = require_string(require(list[i], "id", path), path + ".id");
        tile.sides.assign(tiles.side_count(), std::string{});
        const Json& sides = require(list[i], "sides", path);
        if (!sides.is_object()) field_error(path + ".sides", "expected an object");
        for (const auto& [key, value] : sides.items()) {
            const std::string side_path = path + ".sides." + key;
            auto side = parse_side(key, tiles.generators);
            if (!side) field_error(side_path, "unknown side");
            auto& slot = tile.sides[side_slot(*side)];
            if (!slot.empty()) field_error(side_path, "side given twice");
            slot = require_string(value, side_path);
            if (slot.empty()) field_error(side_path, "empty color");
        }
        tiles.tiles.push_back(std::move(tile));
    }
    return tiles;
}

GraphFamily graph_family_from_json(const Json& doc)
{
    if (!doc.is_object()) throw ParseError("top level: expected an object");
    reject_self_inverse(doc);
    GraphFamily family;
    const Json& alphabet = require(doc, "alphabet", "");
    if (!alphabet.is_array()) field_error("alphabet", "expected an array");
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        family.alphabet.push_back(
            require_string(alphabet[i], "alphabet[" + std::to_string(i) + "]"));
    }
    const Json& graphs = require(doc, "graphs", "");
    if (!graphs.is_array() || graphs.empty()) field_error("graphs", "expected a nonempty array");
    const std::size_t d = graphs.size();
    std::vector<std::optional<Digraph>> slots(d);
    for (std::size_t i = 0; i < d; ++i) {
        const std::string path = "graphs[" + std::to_string(i) + "]";
        const Json& gen = require(graphs[i], "generator", path);
        if (!gen.is_number_integer() || gen.get<long long>() < 1 ||
            gen.get<long long>() > static_cast<long long>(d)) {
            field_error(path + ".generator", "expected an integer in 1.." + std::to_string(d));
        }
        const auto index = gen.get<std::size_t>() - 1;
        if (slots[index]) field_error(path + ".generator", "generator listed twice");
        Digraph graph(family.alphabet.size());
        const Json& edges = require(graphs[i], "edges", path);
        if (!edges.is_array()) field_error(path + ".edges", "expected an array");
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const std::string edge_path = path + ".edges[" + std::to_string(e) + "]";
            if (!edges[e].is_array() || edges[e].size() != 2) {
                field_error(edge_path, "expected a pair [from, to]");
            }
            std::size_t ends[2];
            for (int k = 0; k < 2; ++k) {
                const std::string name = require_string(edges[e][k], edge_path);
                auto v = family.letter_index(name);
                if (!v) field_error(edge_path, "unknown vertex '" + name + "'");
                ends[k] = *v;
            }
            graph.add_edge(ends[0], ends[1]);
        }
        slots[index] = std::move(graph);
    }
    for (auto& g : slots) family.graphs.push_back(std::move(*g));
    return family;
}

Presentation presentation_from_json(const Json& doc)
{
    if (!doc.is_object()) throw ParseError("top level: expected an object");
    reject_self_inverse(doc);
    Presentation pres;
    pres.generators = require_generator_count(doc);
    const Json& relators = require(doc, "relators", "");
    if (!relators.is_array()) field_error("relators", "expected an array");
    for (std::size_t r = 0; r < relators.size(); ++r) {
        const std::string path = "relators[" + std::to_string(r) + "]";
        if (!relators[r].is_array()) field_error(path, "expected an array of generator names");
        Word word;
        for (std::size_t k = 0; k < relators[r].size(); ++k) {
            word.push_back(parse_letter(relators[r][k], pres.generators,
                                        path + "[" + std::to_string(k) + "]"));
        }
        pres.relators.push_back(std::move(word));
    }
    return pres;
}

WangTileSet parse_tile_set(std::string_view text)
{
    return tile_set_from_json(parse_json(text));
}

GraphFamily parse_graph_family(std::string_view text)
{
    return graph_family_from_json(parse_json(text));
}

Presentation parse_presentation(std::string_view text)
{
    return presentation_from_json(parse_json(text));
}

Json to_json(const WangTileSet& tiles)
{
    Json doc;
    doc["generators"] = tiles.generators;
    doc["colors"] = tiles.colors;
    Json list = Json::array();
    for (const auto& tile : tiles.tiles) {
        Json sides = Json::object();
        for (std::size_t slot = 0; slot < tile.sides.size(); ++slot) {
            sides[side_name(side_at(slot))] = tile.sides[slot];
        }
        list.push_back(Json{{"id", tile.id}, {"sides", std::move(sides)}});
    }
    doc["tiles"] = std::move(list);
    return doc;
}

Json to_json(const GraphFamily& graphs)
{
    Json doc;
    doc["alphabet"] = graphs.alphabet;
    Json list = Json::array();
    for (std::size_t i = 0; i < graphs.graphs.size(); ++i) {
        Json edges = Json::array();
        for (auto [from, to] : graphs.graphs[i].edges()) {
            edges.push_back(Json::array({graphs.alphabet.at(from), graphs.alphabet.at(to)}));
        }
        list.push_back(Json{{"generator", i + 1}, {"edges", std::move(edges)}});
    }
    doc["graphs"] = std::move(list);
    return doc;
}

Json to_json(const Presentation& presentation)
{
    Json doc;
    doc["generators"] = presentation.generators;
    Json relators = Json::array();
    for (const auto& word : presentation.relators) {
        Json letters = Json::array();
        for (const auto& g : word) letters.push_back(side_name(g));
        relators.push_back(std::move(letters));
    }
    doc["relators"] = std::move(relators);
    return doc;
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace tilecheck
