#pragma once

#include "tilecheck/model.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace tilecheck {

using Json = nlohmann::ordered_json;

// File formats (UTF-8 JSON, all identifiers are strings):
//   tile set:     {"generators": d, "colors": [...],
//                  "tiles": [{"id": "...", "sides": {"g1": c, "g1_inv": c, ...}}]}
//   graph family: {"alphabet": [...], "graphs": [{"generator": 1, "edges": [["a","b"], ...]}]}
//   presentation: {"generators": d, "relators": [["g1", "g2", "g1_inv", "g2_inv"]]}
//
// The parsers throw ParseError with line or field context for malformed input.
// Semantic problems that validate() can describe (missing sides, unknown colors)
// are left in the returned value.

enum class InputKind { tile_set, graph_family, presentation };

Json parse_json(std::string_view text);
InputKind detect_kind(const Json& doc);

WangTileSet tile_set_from_json(const Json& doc);
GraphFamily graph_family_from_json(const Json& doc);
Presentation presentation_from_json(const Json& doc);

WangTileSet parse_tile_set(std::string_view text);
GraphFamily parse_graph_family(std::string_view text);
Presentation parse_presentation(std::string_view text);

Json to_json(const WangTileSet& tiles);
Json to_json(const GraphFamily& graphs);
Json to_json(const Presentation& presentation);

// Throws std::runtime_error if the file cannot be read.
std::string read_text_file(const std::filesystem::path& path);

} // namespace tilecheck
