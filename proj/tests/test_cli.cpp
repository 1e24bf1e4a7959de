#include "cli.hpp"
#include "fixtures.hpp"

#include "tilecheck/io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

using namespace tilecheck;
using namespace tilecheck::testing;
using tilecheck::cli::run;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir()
    {
        std::random_device rd;
        path = std::filesystem::temp_directory_path() / ("tilecheck-test-" + std::to_string(rd()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string write(const std::string& name, const std::string& text) const
    {
        std::ofstream(path / name) << text;
        return (path / name).string();
    }
};

Json output(const cli::Outcome& o) { return parse_json(o.out); }

} // namespace

TEST_CASE("audit of the three-letter example fails the balance conditions")
{
    TempDir dir;
    const auto file = dir.write("tiles.json", to_json(three_letter_tiles()).dump());
    const auto o = run({"audit", file});
    CHECK(o.exit_code == cli::exit_condition_failed);
    const auto j = output(o);
    CHECK(j["valid"] == true);
    CHECK(j["star"] == true);
    CHECK(j["ss"] == false);
    CHECK(j["ssp"] == false);
    CHECK(j["consistent"] == true);
    CHECK(j["oracle"]["rectangles"].back()["status"] == "none");
}

TEST_CASE("single tile audit passes")
{
    TempDir dir;
    const auto file = dir.write("one.json", to_json(single_tile(2)).dump());
    const auto o = run({"audit", file});
    CHECK(o.exit_code == cli::exit_ok);
    const auto j = output(o);
    CHECK(j["ss"] == true);
    CHECK(j["oracle"]["torus"]["status"] == "found");
}

TEST_CASE("counterexample then audit")
{
    TempDir dir;
    const auto pres = dir.write("z2.json", R"({"generators": 2, "relators": [["g1", "g2", "g1_inv", "g2_inv"]]})");
    const auto out = (dir.path / "ce.json").string();
    const auto o = run({"counterexample", pres, "--relator", "0", "--out", out});
    REQUIRE(o.exit_code == cli::exit_ok);
    const auto j = output(o);
    CHECK(j["verification"]["rectangle_2x2"] == "none");
    CHECK(j["verification"]["torus_up_to_4x4"] == "none");
    CHECK(j["tiles"]["tiles"].size() == 5);

    const auto audit = run({"audit", out});
    CHECK(audit.exit_code == cli::exit_ok);
    const auto a = output(audit);
    CHECK(a["star"] == true);
    CHECK(a["ss"] == true);
    CHECK(a["ssp"] == true);
    CHECK(a["oracle"]["rectangles"].back()["w"] == 2);
    CHECK(a["oracle"]["rectangles"].back()["status"] == "none");
}

TEST_CASE("individual subcommands")
{
    TempDir dir;
    const auto tiles = dir.write("tiles.json", to_json(three_letter_tiles()).dump());
    const auto graphs = dir.write("graphs.json", to_json(three_letter_graphs()).dump());

    auto o = run({"star", graphs});
    CHECK(o.exit_code == cli::exit_ok);
    CHECK(output(o)["psi"]["0"]["g1"] == "1");

    o = run({"cycles", graphs});
    CHECK(o.exit_code == cli::exit_ok);

    o = run({"ss", graphs});
    CHECK(o.exit_code == cli::exit_condition_failed);
    CHECK(output(o).contains("certificate"));

    o = run({"ssp", tiles});
    CHECK(o.exit_code == cli::exit_condition_failed);

    o = run({"equiv", tiles});
    CHECK(o.exit_code == cli::exit_condition_failed);

    o = run({"tile", "--shape", "rect", "--w", "2", "--h", "2", tiles});
    CHECK(o.exit_code == cli::exit_ok);
    CHECK(output(o)["grid"].size() == 2);

    o = run({"tile", "--shape", "rect", "--w", "3", "--h", "3", tiles});
    CHECK(o.exit_code == cli::exit_condition_failed);

    o = run({"tile", "--shape", "torus", "--w", "2", "--h", "2", tiles});
    CHECK(o.exit_code == cli::exit_ok);
    CHECK(output(o)["status"] == "none");

    o = run({"--format", "text", "star", graphs});
    CHECK(o.exit_code == cli::exit_ok);
    CHECK(o.out.find("holds") != std::string::npos);
}

TEST_CASE("frequency audit reports exact fractions")
{
    TempDir dir;
    const auto file = dir.write("one.json", to_json(single_tile(2)).dump());
    const auto o = run({"freq", "--max-radius", "3", file, "--w", "1", "--h", "1"});
    REQUIRE(o.exit_code == cli::exit_ok);
    const auto j = output(o);
    CHECK(j["levels"].size() == 3);
    CHECK(j["all_within_bound"] == true);
}

TEST_CASE("usage and input errors exit with 1")
{
    TempDir dir;
    CHECK(run({}).exit_code == cli::exit_usage);
    CHECK(run({"bogus"}).exit_code == cli::exit_usage);
    CHECK(run({"star", (dir.path / "missing.json").string()}).exit_code == cli::exit_usage);
    const auto bad = dir.write("bad.json", "{ not json");
    const auto o = run({"star", bad});
    CHECK(o.exit_code == cli::exit_usage);
    CHECK(o.err.find("line") != std::string::npos);
    const auto unreduced = dir.write("p.json", R"({"generators": 1, "relators": [["g1", "g1_inv"]]})");
    CHECK(run({"counterexample", unreduced}).exit_code == cli::exit_usage);
    CHECK(run({"--help"}).exit_code == cli::exit_ok);
}

TEST_CASE("node budget limits are reported with status")
{
    TempDir dir;
    const auto file = dir.write("tiles.json", to_json(commutator_tiles()).dump());
    const auto o = run({"--node-budget", "5", "tile", "--shape", "torus", "--w", "4", "--h", "4", file});
    CHECK(o.exit_code == cli::exit_ok);
    CHECK(output(o)["status"] == "resource_limit");

    setenv("TILECHECK_NODE_BUDGET", "5", 1);
    const auto env = run({"tile", "--shape", "torus", "--w", "4", "--h", "4", file});
    unsetenv("TILECHECK_NODE_BUDGET");
    CHECK(output(env)["status"] == "resource_limit");
}

TEST_CASE("reports are byte-identical across runs")
{
    TempDir dir;
    const auto file = dir.write("tiles.json", to_json(commutator_tiles()).dump());
    for (const char* cmd : {"audit", "equiv", "cycles"}) {
        const auto first = run({cmd, file});
        const auto second = run({cmd, file});
        CHECK(first.out == second.out);
        CHECK(first.exit_code == second.exit_code);
    }
}
