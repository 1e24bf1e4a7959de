#include "fixtures.hpp"

#include "tilecheck/errors.hpp"
#include "tilecheck/io.hpp"

#include <doctest.h>

#include <string>

using namespace tilecheck;
using namespace tilecheck::testing;

namespace {

std::string error_of(auto&& fn)
{
    try {
        fn();
    } catch (const ParseError& e) {
        return e.what();
    }
    return {};
}

const char* sample_json = R"({
  "generators": 2,
  "colors": ["a", "b", "c"],
  "tiles": [
    {"id": "0", "sides": {"left": "a", "top": "b", "right": "b", "bottom": "a"}},
    {"id": "1", "sides": {"left": "b", "top": "a", "right": "c", "bottom": "a"}},
    {"id": "2", "sides": {"g1_inv": "c", "g2": "b", "g1": "a", "g2_inv": "b"}}
  ]
})";

} // namespace

TEST_CASE("tile set parses with aliases and generator names")
{
    const auto tiles = parse_tile_set(sample_json);
    CHECK(tiles.generators == 2);
    REQUIRE(tiles.tiles.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(tiles.tiles[i].sides == three_letter_tiles().tiles[i].sides);
    CHECK(detect_kind(parse_json(sample_json)) == InputKind::tile_set);
}

TEST_CASE("json round trips")
{
    const auto tiles = three_letter_tiles();
    const auto back = tile_set_from_json(parse_json(to_json(tiles).dump()));
    CHECK(back.colors == tiles.colors);
    for (std::size_t i = 0; i < 3; ++i) CHECK(back.tiles[i].sides == tiles.tiles[i].sides);

    const auto graphs = commutator_graphs();
    CHECK(graph_family_from_json(parse_json(to_json(graphs).dump())) == graphs);
    CHECK(detect_kind(to_json(graphs)) == InputKind::graph_family);

    Presentation p{2, {{{1, false}, {2, false}, {1, true}, {2, true}}}};
    const auto pb = presentation_from_json(parse_json(to_json(p).dump()));
    CHECK(pb.generators == 2);
    CHECK(pb.relators == p.relators);
    CHECK(detect_kind(to_json(p)) == InputKind::presentation);
}

TEST_CASE("malformed JSON reports a line")
{
    const auto msg = error_of([] { parse_json("{\n  \"generators\": 2,\n  oops\n}"); });
    CHECK(msg.find("line 3") != std::string::npos);
}

TEST_CASE("unknown side names are rejected with a field path")
{
    const auto msg = error_of([] {
        parse_tile_set(R"({"generators": 2, "colors": ["a"],
                           "tiles": [{"id": "t", "sides": {"g3": "a"}}]})");
    });
    CHECK(msg.find("tiles[0]") != std::string::npos);
    CHECK(msg.find("g3") != std::string::npos);
}

TEST_CASE("wrong types are parse errors")
{
    CHECK_THROWS_AS(parse_tile_set(R"({"generators": "two", "colors": [], "tiles": []})"), ParseError);
    CHECK_THROWS_AS(parse_graph_family(R"({"alphabet": ["a"], "graphs": [{"generator": 1, "edges": [["a"]]}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_graph_family(R"({"alphabet": ["a"], "graphs": [{"generator": 1, "edges": [["a", "q"]]}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_presentation(R"({"generators": 2, "relators": [["g1", "h"]]})"), ParseError);
    CHECK_THROWS_AS(detect_kind(parse_json("[]")), ParseError);
}

TEST_CASE("missing sides survive parsing and show up in validate")
{
    const auto tiles = parse_tile_set(R"({"generators": 2, "colors": ["a"],
                                          "tiles": [{"id": "t", "sides": {"left": "a"}}]})");
    const auto vs = validate(tiles);
    CHECK_FALSE(vs.empty());
    CHECK(vs.front().invariant == "incomplete side map");
}

TEST_CASE("presentations keep unreduced relators for validate")
{
    const auto p = parse_presentation(R"({"generators": 1, "relators": [["g1", "g1_inv"]]})");
    CHECK_FALSE(validate(p).empty());
}
