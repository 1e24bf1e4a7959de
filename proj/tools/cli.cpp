#include "cli.hpp"

#include "tilecheck/conditions.hpp"
#include "tilecheck/counterexample.hpp"
#include "tilecheck/cycles.hpp"
#include "tilecheck/errors.hpp"
#include "tilecheck/io.hpp"
#include "tilecheck/oracle.hpp"
#include "tilecheck/star.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

namespace tilecheck::cli {

namespace {

// Thrown for bad input files and arguments; maps to exit code 1.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Settings {
    std::string format = "json";
    long long node_budget = default_node_budget;
};

struct Loaded {
    InputKind kind;
    Json doc;
};

Loaded load(const std::string& path)
{
    std::string text;
    try {
        text = read_text_file(path);
    } catch (const std::runtime_error& e) {
        throw UsageError(e.what());
    }
    try {
        Json doc = parse_json(text);
        return {detect_kind(doc), std::move(doc)};
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

template <typename T>
void require_valid(const T& value, const std::string& path)
{
    const auto violations = validate(value);
    if (violations.empty()) return;
    std::string message = path + ": invalid input";
    for (const auto& v : violations) message += "\n  " + v.invariant + ": " + v.element;
    throw UsageError(message);
}

WangTileSet load_tiles(const std::string& path)
{
    auto loaded = load(path);
    if (loaded.kind != InputKind::tile_set) throw UsageError(path + ": expected a tile set");
    WangTileSet tiles;
    try {
        tiles = tile_set_from_json(loaded.doc);
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
    require_valid(tiles, path);
    return tiles;
}

// Tile sets are converted through the letter-to-letter conjugacy.
GraphFamily load_graphs(const std::string& path)
{
    auto loaded = load(path);
    try {
        if (loaded.kind == InputKind::tile_set) {
            auto tiles = tile_set_from_json(loaded.doc);
            require_valid(tiles, path);
            return wang_to_graphs(tiles);
        }
        if (loaded.kind == InputKind::graph_family) {
            auto graphs = graph_family_from_json(loaded.doc);
            require_valid(graphs, path);
            return graphs;
        }
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
    throw UsageError(path + ": expected a tile set or a graph family");
}

Presentation load_presentation(const std::string& path)
{
    auto loaded = load(path);
    if (loaded.kind != InputKind::presentation) throw UsageError(path + ": expected a presentation");
    try {
        auto pres = presentation_from_json(loaded.doc);
        require_valid(pres, path);
        return pres;
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& doc)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << doc.dump(2) << '\n';
    if (!out) throw UsageError("cannot write '" + path + "'");
}

Json names(const std::vector<std::size_t>& letters, const std::vector<std::string>& alphabet)
{
    Json list = Json::array();
    for (auto v : letters) list.push_back(alphabet.at(v));
    return list;
}

Json fractions(const std::vector<Rational>& values)
{
    Json list = Json::array();
    for (const auto& v : values) list.push_back(to_string(v));
    return list;
}

Json form_to_json(const LinearSystem& system, const LinearForm& form)
{
    std::vector<Integer> dense(system.variables.size());
    for (const auto& term : form) dense[term.variable] += term.coefficient;
    Json terms = Json::object();
    for (std::size_t v = 0; v < dense.size(); ++v) {
        if (dense[v] != 0) terms[system.variables[v]] = dense[v].str();
    }
    return terms;
}

Json cycle_list_json(const std::vector<CycleClass>& cycles, const std::vector<std::string>& alphabet,
                     const std::vector<Rational>* weights = nullptr)
{
    Json list = Json::array();
    for (std::size_t j = 0; j < cycles.size(); ++j) {
        Json entry;
        entry["cycle"] = names(cycles[j].vertices, alphabet);
        Json counts = Json::object();
        for (auto [letter, count] : abundance(cycles[j])) counts[alphabet.at(letter)] = count;
        entry["abundance"] = std::move(counts);
        if (weights) entry["weight"] = to_string((*weights)[j]);
        list.push_back(std::move(entry));
    }
    return list;
}

Json ss_solution_json(const SSSolution& sol, const std::vector<std::string>& alphabet)
{
    Json list = Json::array();
    for (std::size_t i = 0; i < sol.cycles.size(); ++i) {
        list.push_back(Json{{"generator", i + 1},
                            {"cycles", cycle_list_json(sol.cycles[i], alphabet, &sol.weights[i])}});
    }
    return list;
}

Json ssp_solution_json(const SSPSolution& sol, const WangTileSet& tiles)
{
    Json weights = Json::object();
    for (std::size_t t = 0; t < tiles.tiles.size(); ++t) {
        weights[tiles.tiles[t].id] = to_string(sol.weights[t]);
    }
    return weights;
}

Json star_json(const StarCheck& check, const GraphFamily& graphs)
{
    Json report;
    report["holds"] = check.holds();
    Json subalphabet = Json::array();
    Json psi = Json::object();
    Json psi_inverse = Json::object();
    if (check.witness) {
        const auto& w = *check.witness;
        subalphabet = names(w.subalphabet, graphs.alphabet);
        for (auto a : w.subalphabet) {
            Json fwd = Json::object();
            Json bwd = Json::object();
            for (int i = 1; i <= graphs.generators(); ++i) {
                fwd[side_name({i, false})] = graphs.alphabet[w.forward[a][i - 1]];
                bwd[side_name({i, false})] = graphs.alphabet[w.backward[a][i - 1]];
            }
            psi[graphs.alphabet[a]] = std::move(fwd);
            psi_inverse[graphs.alphabet[a]] = std::move(bwd);
        }
    }
    report["subalphabet"] = std::move(subalphabet);
    report["psi"] = std::move(psi);
    report["psi_inverse"] = std::move(psi_inverse);
    std::vector<std::size_t> removed;
    for (std::size_t a = 0; a < check.removal_round.size(); ++a) {
        if (check.removal_round[a] > 0) removed.push_back(a);
    }
    std::stable_sort(removed.begin(), removed.end(), [&](std::size_t a, std::size_t b) {
        return check.removal_round[a] < check.removal_round[b];
    });
    Json trace = Json::array();
    for (auto a : removed) {
        trace.push_back(Json{{"letter", graphs.alphabet[a]}, {"round", check.removal_round[a]}});
    }
    report["pruning_trace"] = std::move(trace);
    return report;
}

Json starstar_json(const StarStarCheck& check, const GraphFamily& graphs)
{
    Json report;
    report["holds"] = check.holds();
    if (!check.reason.empty()) report["reason"] = check.reason;
    Json cycles = Json::array();
    for (std::size_t i = 0; i < check.cycles.size(); ++i) {
        cycles.push_back(
            Json{{"generator", i + 1}, {"cycles", cycle_list_json(check.cycles[i], graphs.alphabet)}});
    }
    report["cycles"] = std::move(cycles);
    if (check.balance) {
        const auto& sys = check.balance->system;
        report["variables"] = sys.variables;
        Json equations = Json::array();
        for (std::size_t e = 0; e < sys.equations.size(); ++e) {
            auto [letter, gen] = check.balance->equation_source[e];
            equations.push_back(Json{{"letter", graphs.alphabet[letter]},
                                     {"generator", gen + 1},
                                     {"terms", form_to_json(sys, sys.equations[e])}});
        }
        report["equations"] = std::move(equations);
    }
    if (check.solution) report["solution"] = ss_solution_json(*check.solution, graphs.alphabet);
    if (check.certificate) report["certificate"] = fractions(*check.certificate);
    return report;
}

Json starstar_prime_json(const StarStarPrimeCheck& check, const WangTileSet& tiles)
{
    Json report;
    report["holds"] = check.holds();
    const auto& sys = check.balance.system;
    Json equations = Json::array();
    for (std::size_t e = 0; e < sys.equations.size(); ++e) {
        const auto& [gen, color] = check.balance.equation_source[e];
        equations.push_back(Json{{"generator", gen},
                                 {"color", color},
                                 {"terms", form_to_json(sys, sys.equations[e])}});
    }
    report["equations"] = std::move(equations);
    if (check.solution) report["solution"] = ssp_solution_json(*check.solution, tiles);
    if (check.certificate) report["certificate"] = fractions(*check.certificate);
    return report;
}

Json grid_json(const TilingGrid& grid, const WangTileSet& tiles)
{
    Json rows = Json::array();
    for (int r = 0; r < grid.height; ++r) {
        Json row = Json::array();
        for (int c = 0; c < grid.width; ++c) row.push_back(tiles.tiles[grid.at(c, r)].id);
        rows.push_back(std::move(row));
    }
    return rows;
}

const char* shape_name(Topology t)
{
    return t == Topology::torus ? "torus" : "rect";
}

struct Probe {
    std::string status;
    std::optional<TilingGrid> grid;
};

Probe probe(const WangTileSet& tiles, Topology shape, int w, int h, long long budget)
{
    try {
        auto grid = shape == Topology::torus ? tile_torus(tiles, w, h, budget)
                                             : tile_rectangle(tiles, w, h, budget);
        return {grid ? "found" : "none", std::move(grid)};
    } catch (const ResourceLimit&) {
        return {"resource_limit", std::nullopt};
    }
}

Json audit_oracle(const WangTileSet& tiles, int max_size, long long budget)
{
    Json oracle;
    oracle["max_size"] = max_size;
    Json rects = Json::array();
    for (int k = 1; k <= max_size; ++k) {
        auto p = probe(tiles, Topology::rectangle, k, k, budget);
        rects.push_back(Json{{"w", k}, {"h", k}, {"status", p.status}});
        if (p.status != "found") break;
    }
    oracle["rectangles"] = std::move(rects);
    Json torus = nullptr;
    bool truncated = false;
    for (int w = 1; w <= max_size && torus.is_null(); ++w) {
        for (int h = 1; h <= max_size && torus.is_null(); ++h) {
            auto p = probe(tiles, Topology::torus, w, h, budget);
            if (p.status == "found") {
                torus = Json{{"w", w}, {"h", h}, {"status", "found"}, {"grid", grid_json(*p.grid, tiles)}};
            }
            truncated = truncated || p.status == "resource_limit";
        }
    }
    oracle["torus"] = std::move(torus);
    oracle["resource_limit"] = truncated;
    return oracle;
}

void render_text(const Json& value, const std::string& indent, std::ostringstream& out)
{
    if (value.is_object()) {
        for (const auto& [key, item] : value.items()) {
            if (item.is_structured() && !item.empty()) {
                out << indent << key << ":\n";
                render_text(item, indent + "  ", out);
            } else {
                out << indent << key << ": " << (item.is_string() ? item.get<std::string>() : item.dump())
                    << '\n';
            }
        }
    } else if (value.is_array()) {
        const bool flat = std::none_of(value.begin(), value.end(),
                                       [](const Json& v) { return v.is_structured(); });
        if (flat) {
            out << indent;
            for (std::size_t i = 0; i < value.size(); ++i) {
                if (i) out << ' ';
                out << (value[i].is_string() ? value[i].get<std::string>() : value[i].dump());
            }
            out << '\n';
            return;
        }
        for (const auto& item : value) {
            out << indent << "-\n";
            render_text(item, indent + "  ", out);
        }
    } else {
        out << indent << value.dump() << '\n';
    }
}

std::string render(const Json& report, const Settings& settings)
{
    if (settings.format == "text") {
        std::ostringstream out;
        render_text(report, "", out);
        return out.str();
    }
    return report.dump(2) + "\n";
}

long long budget_from_environment()
{
    const char* env = std::getenv("TILECHECK_NODE_BUDGET");
    if (!env || !*env) return default_node_budget;
    char* end = nullptr;
    const long long value = std::strtoll(env, &end, 10);
    if (*end != '\0' || value <= 0) {
        throw UsageError("TILECHECK_NODE_BUDGET must be a positive integer");
    }
    return value;
}

} // namespace

Outcome run(const std::vector<std::string>& args)
{
    Outcome outcome;
    Settings settings;
    std::optional<long long> budget_flag;

    CLI::App app{"Necessary-condition checks for Wang tile sets and nearest-neighbour SFTs",
                 "tilecheck"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--format", settings.format, "Report format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--node-budget", budget_flag, "Search node budget (default 10^7)")
        ->check(CLI::PositiveNumber);

    std::string input;
    std::function<Json(int&)> action;
    auto add_input = [&](CLI::App* sub, const char* what) {
        sub->add_option("file", input, what)->required()->check(CLI::ExistingFile);
    };

    auto* star = app.add_subcommand("star", "Free-group criterion: pruned subalphabet and witness");
    add_input(star, "Graph family or tile set");
    star->callback([&] {
        action = [&](int& code) {
            const auto graphs = load_graphs(input);
            const auto check = check_star(graphs);
            if (!check.holds()) code = exit_condition_failed;
            return star_json(check, graphs);
        };
    });

    auto* cycles = app.add_subcommand("cycles", "Simple cycle classes and abundance vectors");
    add_input(cycles, "Graph family or tile set");
    cycles->callback([&] {
        action = [&](int&) {
            const auto graphs = load_graphs(input);
            Json list = Json::array();
            for (int i = 1; i <= graphs.generators(); ++i) {
                list.push_back(Json{{"generator", i},
                                    {"cycles", cycle_list_json(enumerate_simple_cycles(
                                                                   graphs.graphs[i - 1]),
                                                               graphs.alphabet)}});
            }
            return Json{{"alphabet", graphs.alphabet}, {"graphs", std::move(list)}};
        };
    });

    auto* ss = app.add_subcommand("ss", "Cycle balance condition on a graph family");
    add_input(ss, "Graph family or tile set");
    ss->callback([&] {
        action = [&](int& code) {
            const auto graphs = load_graphs(input);
            const auto check = check_starstar(graphs);
            if (!check.holds()) code = exit_condition_failed;
            return starstar_json(check, graphs);
        };
    });

    auto* ssp = app.add_subcommand("ssp", "Tile balance condition on a tile set");
    add_input(ssp, "Tile set");
    ssp->callback([&] {
        action = [&](int& code) {
            const auto tiles = load_tiles(input);
            const auto check = check_starstar_prime(tiles);
            if (!check.holds()) code = exit_condition_failed;
            return starstar_prime_json(check, tiles);
        };
    });

    auto* equiv = app.add_subcommand("equiv", "Both balance conditions and their translations");
    add_input(equiv, "Tile set");
    equiv->callback([&] {
        action = [&](int& code) {
            const auto tiles = load_tiles(input);
            const auto graphs = wang_to_graphs(tiles);
            const auto report = check_equivalence(tiles);
            if (!report.holds()) code = exit_condition_failed;
            Json out;
            out["holds"] = report.holds();
            out["consistent"] = true;
            out["ss"] = starstar_json(report.starstar, graphs);
            out["ssp"] = starstar_prime_json(report.starstar_prime, tiles);
            if (report.holds()) {
                out["translations"] =
                    Json{{"ss_to_ssp", ssp_solution_json(*report.ssp_from_ss, tiles)},
                         {"ssp_to_ss", ss_solution_json(*report.ss_from_ssp, graphs.alphabet)}};
            }
            return out;
        };
    });

    std::string shape = "rect";
    int width = 0;
    int height = 0;
    auto* tile = app.add_subcommand("tile", "Search a rectangle or torus tiling of Z^2");
    tile->add_option("--shape", shape, "rect or torus")->check(CLI::IsMember({"rect", "torus"}));
    tile->add_option("--w", width, "Width")->required()->check(CLI::PositiveNumber);
    tile->add_option("--h", height, "Height")->required()->check(CLI::PositiveNumber);
    add_input(tile, "Tile set with two generators");
    tile->callback([&] {
        action = [&](int& code) {
            const auto tiles = load_tiles(input);
            if (tiles.generators != 2) throw UsageError("tile needs a tile set with two generators");
            const Topology topology = shape == "torus" ? Topology::torus : Topology::rectangle;
            auto p = probe(tiles, topology, width, height, settings.node_budget);
            if (p.status == "none" && topology == Topology::rectangle) code = exit_condition_failed;
            Json out{{"shape", shape_name(topology)}, {"w", width}, {"h", height},
                     {"status", p.status}};
            out["grid"] = p.grid ? grid_json(*p.grid, tiles) : Json(nullptr);
            return out;
        };
    });

    int max_radius = 20;
    int freq_w = 0;
    int freq_h = 0;
    auto* freq = app.add_subcommand("freq", "Følner-box frequency audit of a torus tiling");
    freq->add_option("--max-radius", max_radius, "Largest box radius k")
        ->check(CLI::NonNegativeNumber);
    freq->add_option("--w", freq_w, "Torus width")->required()->check(CLI::PositiveNumber);
    freq->add_option("--h", freq_h, "Torus height")->required()->check(CLI::PositiveNumber);
    add_input(freq, "Tile set with two generators");
    freq->callback([&] {
        action = [&](int&) {
            const auto tiles = load_tiles(input);
            if (tiles.generators != 2) throw UsageError("freq needs a tile set with two generators");
            auto p = probe(tiles, Topology::torus, freq_w, freq_h, settings.node_budget);
            Json out{{"w", freq_w}, {"h", freq_h}, {"status", p.status}};
            out["grid"] = p.grid ? grid_json(*p.grid, tiles) : Json(nullptr);
            if (!p.grid) return out;
            std::vector<int> radii(static_cast<std::size_t>(max_radius));
            std::iota(radii.begin(), radii.end(), 1);
            const auto report = folner_audit(tiles, *p.grid, radii);
            bool all_within = true;
            Json levels = Json::array();
            for (const auto& level : report.levels) {
                Json freqs = Json::object();
                for (std::size_t t = 0; t < tiles.tiles.size(); ++t) {
                    freqs[tiles.tiles[t].id] = to_string(level.frequencies[t]);
                }
                Json defects = Json::array();
                for (const auto& d : level.defects) {
                    all_within = all_within && d.within_bound;
                    defects.push_back(Json{{"generator", d.generator},
                                           {"color", d.color},
                                           {"defect", to_string(d.defect)},
                                           {"bound", to_string(d.bound)},
                                           {"within_bound", d.within_bound}});
                }
                levels.push_back(Json{{"k", level.radius},
                                      {"box_size", level.box_size.str()},
                                      {"frequencies", std::move(freqs)},
                                      {"defects", std::move(defects)},
                                      {"period_aligned", level.period_aligned}});
            }
            out["levels"] = std::move(levels);
            out["all_within_bound"] = all_within;
            return out;
        };
    });

    std::size_t relator_index = 0;
    std::string tiles_out;
    std::string graphs_out;
    auto* counter = app.add_subcommand("counterexample",
                                       "Tile set satisfying every condition that cannot tile the group");
    add_input(counter, "Presentation");
    counter->add_option("--relator", relator_index, "Index of the relator to use");
    counter->add_option("--out", tiles_out, "Write the tile set here");
    counter->add_option("--graphs-out", graphs_out, "Write the graph family here");
    counter->callback([&] {
        action = [&](int&) {
            const auto pres = load_presentation(input);
            if (relator_index >= pres.relators.size()) {
                throw UsageError("presentation has no relator with index " +
                                 std::to_string(relator_index));
            }
            Counterexample instance;
            try {
                instance = build_counterexample(pres, relator_index);
            } catch (const NotReduced& e) {
                throw UsageError(e.what());
            }
            CounterexampleOptions options;
            options.node_budget = settings.node_budget;
            const auto report = verify_counterexample(instance, options);
            if (!tiles_out.empty()) write_json_file(tiles_out, to_json(instance.tiles));
            if (!graphs_out.empty()) write_json_file(graphs_out, to_json(instance.graphs));
            Json relator = Json::array();
            for (const auto& g : instance.relator) relator.push_back(side_name(g));
            Json verification{{"star_full_alphabet", report.star_full_alphabet},
                              {"ss", report.starstar},
                              {"ssp", report.starstar_prime},
                              {"uniform_weights", report.uniform_weights},
                              {"hamiltonian_cycles", report.hamiltonian_cycles},
                              {"forced_walk", names(report.walk, instance.graphs.alphabet)},
                              {"walk_contradiction", report.walk_contradiction}};
            if (report.rectangle_2x2_exists) {
                verification["rectangle_2x2"] = *report.rectangle_2x2_exists ? "found" : "none";
            }
            if (report.torus_exists) {
                verification["torus_up_to_4x4"] = *report.torus_exists ? "found" : "none";
            }
            return Json{{"relator", std::move(relator)},
                        {"graphs", to_json(instance.graphs)},
                        {"tiles", to_json(instance.tiles)},
                        {"verification", std::move(verification)}};
        };
    });

    int oracle_max = 4;
    bool no_oracle = false;
    auto* audit = app.add_subcommand("audit", "Run every check on a tile set");
    add_input(audit, "Tile set");
    audit->add_option("--oracle-max", oracle_max, "Largest square and torus side probed")
        ->check(CLI::NonNegativeNumber);
    audit->add_flag("--no-oracle", no_oracle, "Skip the Z^2 search probes");
    audit->callback([&] {
        action = [&](int& code) {
            const auto tiles = load_tiles(input);
            const auto graphs = wang_to_graphs(tiles);
            Json out;
            out["valid"] = true;
            out["star"] = check_star(graphs).holds();
            const bool ssp_holds = check_starstar_prime(tiles).holds();
            const bool ss_holds = check_starstar(graphs).holds();
            out["ss"] = ss_holds;
            out["ssp"] = ssp_holds;
            bool consistent = ss_holds == ssp_holds;
            if (consistent) {
                try {
                    check_equivalence(tiles);
                } catch (const Error&) {
                    consistent = false;
                }
            }
            out["consistent"] = consistent;
            out["oracle"] = (tiles.generators == 2 && !no_oracle && oracle_max > 0)
                                ? audit_oracle(tiles, oracle_max, settings.node_budget)
                                : Json(nullptr);
            if (!consistent) {
                code = exit_usage;
            } else if (!out["star"].get<bool>() || !ss_holds || !ssp_holds) {
                code = exit_condition_failed;
            }
            return out;
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    std::ostringstream cli_out;
    std::ostringstream cli_err;
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        outcome.exit_code = app.exit(e, cli_out, cli_err) == 0 ? exit_ok : exit_usage;
        outcome.out = cli_out.str();
        outcome.err = cli_err.str();
        return outcome;
    }

    try {
        settings.node_budget = budget_flag ? *budget_flag : budget_from_environment();
        int code = exit_ok;
        const Json report = action(code);
        outcome.exit_code = code;
        outcome.out = render(report, settings);
    } catch (const UsageError& e) {
        outcome.exit_code = exit_usage;
        outcome.err = std::string("error: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        outcome.exit_code = exit_usage;
        outcome.err = std::string("internal error: ") + e.what() + "\n";
    }
    return outcome;
}

} // namespace tilecheck::cli
