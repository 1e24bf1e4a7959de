#include "tilecheck/counterexample.hpp"

#include "tilecheck/conditions.hpp"
#include "tilecheck/cycles.hpp"
#include "tilecheck/errors.hpp"
#include "tilecheck/star.hpp"

#include <algorithm>

namespace tilecheck {

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> relator_edges(const Word& relator,
                                                                             int generators)
{
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> edges(
        static_cast<std::size_t>(generators));
    for (std::size_t k = 1; k <= relator.size(); ++k) {
        const Generator g = relator[k - 1];
        if (g.index < 1 || g.index > generators) {
            throw std::out_of_range("relator uses unknown generator " + side_name(g));
        }
        auto& list = edges[static_cast<std::size_t>(g.index - 1)];
        if (g.inverse) {
            list.emplace_back(k, k - 1);
        } else {
            list.emplace_back(k - 1, k);
        }
    }
    return edges;
}

Digraph complete_to_hamiltonian(std::size_t vertices,
                                const std::vector<std::pair<std::size_t, std::size_t>>& partial)
{
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> next(vertices, none);
    std::vector<std::size_t> prev(vertices, none);
    for (auto [from, to] : partial) {
        if (from >= vertices || to >= vertices) throw CannotComplete("edge endpoint out of range");
        if (next[from] != none && next[from] != to) {
            throw CannotComplete("vertex " + std::to_string(from) + " has out-degree above one");
        }
        if (prev[to] != none && prev[to] != from) {
            throw CannotComplete("vertex " + std::to_string(to) + " has in-degree above one");
        }
        next[from] = to;
        prev[to] = from;
    }

    std::vector<std::vector<std::size_t>> paths;
    std::vector<bool> used(vertices, false);
    for (std::size_t v = 0; v < vertices; ++v) {
        if (prev[v] != none) continue;
        std::vector<std::size_t> path;
        for (std::size_t u = v; u != none; u = next[u]) {
            used[u] = true;
            path.push_back(u);
        }
        paths.push_back(std::move(path));
    }
    if (std::find(used.begin(), used.end(), false) != used.end()) {
        throw CannotComplete("partial graph contains a cycle");
    }
    std::sort(paths.begin(), paths.end(), [](const auto& a, const auto& b) {
        return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
    });

    std::vector<std::size_t> order;
    for (const auto& path : paths) order.insert(order.end(), path.begin(), path.end());
    Digraph cycle(vertices);
    for (std::size_t k = 0; k < order.size(); ++k) {
        cycle.add_edge(order[k], order[(k + 1) % order.size()]);
    }
    return cycle;
}

Counterexample build_counterexample(const Presentation& presentation, std::size_t relator_index)
{
    if (relator_index >= presentation.relators.size()) {
        throw std::out_of_range("no relator with index " + std::to_string(relator_index));
    }
    const Word& relator = presentation.relators[relator_index];
    if (relator.empty()) throw NotReduced("relator is empty");
    if (!is_freely_reduced(relator)) {
        throw NotReduced("relator is not freely reduced: " + word_to_string(relator));
    }
    const std::size_t vertices = relator.size() + 1;
    const auto edges = relator_edges(relator, presentation.generators);

    Counterexample out;
    out.relator = relator;
    for (std::size_t v = 0; v < vertices; ++v) out.graphs.alphabet.push_back(std::to_string(v));
    for (const auto& partial : edges) {
        out.graphs.graphs.push_back(complete_to_hamiltonian(vertices, partial));
    }
    out.tiles = graphs_to_wang_functional(out.graphs);
    return out;
}

std::optional<std::vector<std::size_t>> forced_walk(const WangTileSet& tiles, const Word& relator)
{
    if (tiles.tiles.empty()) return std::nullopt;
    std::vector<std::size_t> walk{0};
    for (const Generator& g : relator) {
        const WangTile& here = tiles.tiles[walk.back()];
        std::optional<std::size_t> match;
        for (std::size_t t = 0; t < tiles.tiles.size(); ++t) {
            if (tiles.tiles[t].color(g.inverted()) != here.color(g)) continue;
            if (match) return std::nullopt;
            match = t;
        }
        if (!match) return std::nullopt;
        walk.push_back(*match);
    }
    return walk;
}

bool is_commutator(const Word& word)
{
    return word == Word{{1, false}, {2, false}, {1, true}, {2, true}};
}

bool CounterexampleReport::passed() const
{
    return star_full_alphabet && starstar && starstar_prime && uniform_weights &&
           hamiltonian_cycles && walk_contradiction && rectangle_2x2_exists.value_or(false) == false &&
           torus_exists.value_or(false) == false;
}

CounterexampleReport verify_counterexample(const Counterexample& instance,
                                           const CounterexampleOptions& options)
{
    const auto& graphs = instance.graphs;
    const auto& tiles = instance.tiles;
    const std::size_t n = tiles.tiles.size();
    CounterexampleReport report;

    const auto star = check_star(graphs);
    report.star_full_alphabet = star.holds() && star.witness->subalphabet.size() == n;
    report.starstar = check_starstar(graphs).holds();
    report.starstar_prime = check_starstar_prime(tiles).holds();
    SSPSolution uniform{std::vector<Rational>(n, Rational(1, static_cast<long long>(n)))};
    report.uniform_weights = is_valid_ssp_solution(tiles, uniform);

    report.hamiltonian_cycles = true;
    for (const auto& graph : graphs.graphs) {
        const auto cycles = enumerate_simple_cycles(graph);
        if (cycles.size() != 1 || cycles.front().length() != n) report.hamiltonian_cycles = false;
    }

    if (auto walk = forced_walk(tiles, instance.relator)) {
        report.walk = *walk;
        bool follows_vertices = true;
        for (std::size_t k = 0; k < walk->size(); ++k) follows_vertices &= (*walk)[k] == k;
        report.walk_contradiction = follows_vertices && walk->back() != walk->front();
    }

    if (tiles.generators == 2 && is_commutator(instance.relator)) {
        report.rectangle_2x2_exists = tile_rectangle(tiles, 2, 2, options.node_budget).has_value();
        bool any_torus = false;
        for (int w = 1; w <= options.max_torus && !any_torus; ++w) {
            for (int h = 1; h <= options.max_torus && !any_torus; ++h) {
                any_torus = tile_torus(tiles, w, h, options.node_budget).has_value();
            }
        }
        report.torus_exists = any_torus;
    }

    if (!report.passed()) {
        throw VerificationFailed("generated tile set for relator '" +
                                 word_to_string(instance.relator) + "' failed verification");
    }
    return report;
}

} // namespace tilecheck
