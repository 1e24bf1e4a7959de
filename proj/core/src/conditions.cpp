#include "tilecheck/conditions.hpp"

#include "tilecheck/errors.hpp"

#include <algorithm>
#include <set>

namespace tilecheck {

namespace {

bool is_cycle_of(const CycleClass& cycle, const Digraph& graph)
{
    const auto& v = cycle.vertices;
    if (v.empty()) return false;
    std::set<std::size_t> distinct(v.begin(), v.end());
    if (distinct.size() != v.size()) return false;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (!graph.has_edge(v[k], v[(k + 1) % v.size()])) return false;
    }
    return true;
}

} // namespace

CycleBalanceSystem build_cycle_balance_system(const GraphFamily& graphs)
{
    CycleBalanceSystem out;
    const std::size_t d = graphs.graphs.size();
    const std::size_t n = graphs.alphabet.size();
    // abundance_of[i][j][a]
    std::vector<std::vector<std::vector<std::size_t>>> counts(d);
    std::vector<std::vector<std::size_t>> var_index(d);
    for (std::size_t i = 0; i < d; ++i) {
        out.cycles.push_back(enumerate_simple_cycles(graphs.graphs[i]));
        for (std::size_t j = 0; j < out.cycles[i].size(); ++j) {
            std::vector<std::size_t> row(n, 0);
            for (auto [letter, count] : abundance(out.cycles[i][j])) row[letter] = count;
            counts[i].push_back(std::move(row));
            var_index[i].push_back(out.system.add_variable("x_" + std::to_string(i + 1) + "_" +
                                                           std::to_string(j + 1)));
            out.variable_cycle.emplace_back(i, j);
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t i = 1; i < d; ++i) {
            LinearForm form;
            for (std::size_t j = 0; j < counts[0].size(); ++j) {
                if (counts[0][j][a] != 0) {
                    form.push_back({var_index[0][j], static_cast<std::int64_t>(counts[0][j][a])});
                }
            }
            for (std::size_t j = 0; j < counts[i].size(); ++j) {
                if (counts[i][j][a] != 0) {
                    form.push_back({var_index[i][j], -static_cast<std::int64_t>(counts[i][j][a])});
                }
            }
            if (form.empty()) continue;
            out.system.equations.push_back(std::move(form));
            out.equation_source.emplace_back(a, i);
        }
    }
    return out;
}

StarStarCheck check_starstar(const GraphFamily& graphs)
{
    StarStarCheck check;
    for (std::size_t i = 0; i < graphs.graphs.size(); ++i) {
        check.cycles.push_back(enumerate_simple_cycles(graphs.graphs[i]));
        if (check.cycles.back().empty() && check.reason.empty()) {
            check.reason = "graph g" + std::to_string(i + 1) + " has no cycle";
        }
    }
    if (graphs.graphs.empty()) check.reason = "no graphs";
    if (!check.reason.empty()) return check;

    auto balance = build_cycle_balance_system(graphs);
    auto result = solve_nonneg_nontrivial(balance.system);
    if (result.feasible()) {
        SSSolution sol;
        sol.cycles = balance.cycles;
        for (const auto& list : sol.cycles) sol.weights.emplace_back(list.size());
        for (std::size_t v = 0; v < balance.variable_cycle.size(); ++v) {
            auto [i, j] = balance.variable_cycle[v];
            sol.weights[i][j] = (*result.solution)[v];
        }
        check.solution = std::move(sol);
    } else {
        check.certificate = std::move(result.certificate);
        check.reason = "cycle balance system has no nontrivial nonnegative solution";
    }
    check.balance = std::move(balance);
    return check;
}

TileBalanceSystem build_tile_balance_system(const WangTileSet& tiles)
{
    TileBalanceSystem out;
    for (const auto& tile : tiles.tiles) out.system.add_variable("x_" + tile.id);
    for (int g = 1; g <= tiles.generators; ++g) {
        for (const auto& c : tiles.colors) {
            const auto plus = color_class(tiles, c, {g, false});
            const auto minus = color_class(tiles, c, {g, true});
            if (plus.empty() && minus.empty()) continue;
            LinearForm form;
            for (std::size_t t : plus) form.push_back({t, 1});
            for (std::size_t t : minus) form.push_back({t, -1});
            out.system.equations.push_back(std::move(form));
            out.equation_source.emplace_back(g, c);
        }
    }
    return out;
}

StarStarPrimeCheck check_starstar_prime(const WangTileSet& tiles)
{
    StarStarPrimeCheck check{build_tile_balance_system(tiles), std::nullopt, std::nullopt};
    auto result = solve_nonneg_nontrivial(check.balance.system);
    if (result.feasible()) {
        check.solution = SSPSolution{std::move(*result.solution)};
    } else {
        check.certificate = std::move(result.certificate);
    }
    return check;
}

std::vector<Rational> letter_totals(const SSSolution& solution, std::size_t generator,
                                    std::size_t letters)
{
    std::vector<Rational> totals(letters);
    const auto& cycles = solution.cycles.at(generator);
    const auto& weights = solution.weights.at(generator);
    for (std::size_t j = 0; j < cycles.size(); ++j) {
        if (weights[j].is_zero()) continue;
        for (std::size_t v : cycles[j].vertices) totals.at(v) += weights[j];
    }
    return totals;
}

bool is_valid_ss_solution(const GraphFamily& graphs, const SSSolution& solution)
{
    const std::size_t d = graphs.graphs.size();
    if (d == 0 || solution.cycles.size() != d || solution.weights.size() != d) return false;
    bool nonzero = false;
    for (std::size_t i = 0; i < d; ++i) {
        if (solution.cycles[i].size() != solution.weights[i].size()) return false;
        for (std::size_t j = 0; j < solution.cycles[i].size(); ++j) {
            if (!is_cycle_of(solution.cycles[i][j], graphs.graphs[i])) return false;
            if (solution.weights[i][j] < 0) return false;
            if (!solution.weights[i][j].is_zero()) nonzero = true;
        }
    }
    if (!nonzero) return false;
    const auto reference = letter_totals(solution, 0, graphs.alphabet.size());
    for (std::size_t i = 1; i < d; ++i) {
        if (letter_totals(solution, i, graphs.alphabet.size()) != reference) return false;
    }
    return true;
}

bool is_valid_ssp_solution(const WangTileSet& tiles, const SSPSolution& solution)
{
    return satisfies(build_tile_balance_system(tiles).system, solution.weights);
}

SSPSolution ss_to_ssp(const SSSolution& solution, const GraphFamily& graphs,
                      const WangTileSet& tiles)
{
    if (!(graphs == wang_to_graphs(tiles))) {
        throw MismatchedInstance("graph family is not the one obtained from the tile set");
    }
    if (!is_valid_ss_solution(graphs, solution)) {
        throw std::invalid_argument("not a solution of the cycle balance system");
    }
    SSPSolution out{letter_totals(solution, 0, tiles.tiles.size())};
    if (!is_valid_ssp_solution(tiles, out)) {
        throw VerificationFailed("tile weights derived from cycle weights are unbalanced");
    }
    return out;
}

SSSolution ssp_to_ss(const SSPSolution& solution, const WangTileSet& tiles)
{
    const std::size_t n = tiles.tiles.size();
    if (solution.weights.size() != n) {
        throw std::invalid_argument("expected one weight per tile");
    }
    std::vector<std::size_t> copies(n);
    for (std::size_t t = 0; t < n; ++t) {
        const Rational& w = solution.weights[t];
        if (boost::multiprecision::denominator(w) != 1) {
            throw NonIntegerSolution("weight of tile '" + tiles.tiles[t].id + "' is " +
                                     to_string(w));
        }
        if (w < 0) throw std::invalid_argument("negative tile weight");
        copies[t] = static_cast<std::size_t>(boost::multiprecision::numerator(w));
    }
    if (!is_valid_ssp_solution(tiles, solution)) {
        throw std::invalid_argument("not a solution of the tile balance system");
    }

    // Copy k of tile t is vertex offset[t] + k; copies are ordered by (tile, copy).
    std::vector<std::size_t> offset(n + 1, 0);
    for (std::size_t t = 0; t < n; ++t) offset[t + 1] = offset[t] + copies[t];
    const std::size_t total = offset[n];
    std::vector<std::size_t> tile_of(total);
    for (std::size_t t = 0; t < n; ++t) {
        std::fill(tile_of.begin() + static_cast<std::ptrdiff_t>(offset[t]),
                  tile_of.begin() + static_cast<std::ptrdiff_t>(offset[t + 1]), t);
    }

    const auto colors = side_color_indices(tiles);
    const GraphFamily graphs = wang_to_graphs(tiles);
    SSSolution out;
    for (int g = 1; g <= tiles.generators; ++g) {
        const std::size_t out_slot = side_slot({g, false});
        const std::size_t in_slot = side_slot({g, true});
        std::vector<std::size_t> next(total);
        for (std::size_t c = 0; c < tiles.colors.size(); ++c) {
            std::vector<std::size_t> sources;
            std::vector<std::size_t> targets;
            for (std::size_t t = 0; t < n; ++t) {
                for (std::size_t k = 0; k < copies[t]; ++k) {
                    if (colors[t][out_slot] == c) sources.push_back(offset[t] + k);
                    if (colors[t][in_slot] == c) targets.push_back(offset[t] + k);
                }
            }
            if (sources.size() != targets.size()) {
                throw VerificationFailed("color classes of unequal weight");
            }
            for (std::size_t k = 0; k < sources.size(); ++k) next[sources[k]] = targets[k];
        }

        const Digraph& graph = graphs.graphs[g - 1];
        std::map<CycleClass, std::size_t> multiplicity;
        std::vector<bool> visited(total, false);
        for (std::size_t start = 0; start < total; ++start) {
            if (visited[start]) continue;
            std::vector<std::size_t> walk;
            std::size_t v = start;
            while (!visited[v]) {
                visited[v] = true;
                walk.push_back(tile_of[v]);
                v = next[v];
            }
            if (v != start) throw VerificationFailed("copy graph is not a union of cycles");
            walk.push_back(tile_of[start]);
            for (const auto& [cycle, count] : decompose_cycle(walk, graph)) {
                multiplicity[cycle] += count;
            }
        }

        auto classes = enumerate_simple_cycles(graph);
        std::vector<Rational> weights(classes.size());
        for (const auto& [cycle, count] : multiplicity) {
            auto it = std::lower_bound(classes.begin(), classes.end(), cycle);
            if (it == classes.end() || *it != cycle) {
                throw VerificationFailed("decomposition produced an unknown cycle class");
            }
            weights[static_cast<std::size_t>(it - classes.begin())] =
                Rational(static_cast<long long>(count));
        }
        out.cycles.push_back(std::move(classes));
        out.weights.push_back(std::move(weights));

        if (letter_totals(out, static_cast<std::size_t>(g - 1), n) != solution.weights) {
            throw VerificationFailed("cycle weights do not reproduce the tile weights");
        }
    }
    if (!is_valid_ss_solution(graphs, out)) {
        throw VerificationFailed("reconstructed cycle weights are not a solution");
    }
    return out;
}

EquivalenceReport check_equivalence(const WangTileSet& tiles)
{
    const GraphFamily graphs = wang_to_graphs(tiles);
    EquivalenceReport report{check_starstar(graphs), check_starstar_prime(tiles), std::nullopt,
                             std::nullopt};
    if (report.starstar.holds() != report.starstar_prime.holds()) {
        throw EquivalenceViolation(std::string("cycle balance ") +
                                   (report.starstar.holds() ? "holds" : "fails") +
                                   " but tile balance " +
                                   (report.starstar_prime.holds() ? "holds" : "fails"));
    }
    if (!report.holds()) return report;

    report.ssp_from_ss = ss_to_ssp(*report.starstar.solution, graphs, tiles);
    const auto scaled = integer_scale(report.starstar_prime.solution->weights);
    SSPSolution integral{std::vector<Rational>(scaled.begin(), scaled.end())};
    report.ss_from_ssp = ssp_to_ss(integral, tiles);
    if (!is_valid_ssp_solution(tiles, *report.ssp_from_ss) ||
        !is_valid_ss_solution(graphs, *report.ss_from_ssp)) {
        throw EquivalenceViolation("translated solution failed re-validation");
    }
    return report;
}

} // namespace tilecheck
