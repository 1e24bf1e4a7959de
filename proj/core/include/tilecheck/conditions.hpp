#pragma once

#include "tilecheck/cycles.hpp"
#include "tilecheck/feasible.hpp"
#include "tilecheck/model.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tilecheck {

// Weights on simple-cycle classes, one list per generator. For every letter a the
// sums Σ_j weights[i][j]·|cycles[i][j]|_a agree across generators i.
struct SSSolution {
    std::vector<std::vector<CycleClass>> cycles;
    std::vector<std::vector<Rational>> weights;
};

// One weight per tile. For every generator g and color c the tiles showing c on
// side g weigh as much as the tiles showing c on side g^{-1}.
struct SSPSolution {
    std::vector<Rational> weights;
};

// Cycle balance system over variables x_{i,j} (named "x_<i>_<j>", 1-based). One
// equation Σ_j x_{1,j}|ω_1^j|_a − Σ_j x_{i,j}|ω_i^j|_a = 0 per letter a and per
// generator i ≥ 2; equations without terms are left out.
struct CycleBalanceSystem {
    std::vector<std::vector<CycleClass>> cycles;
    LinearSystem system;
    // variable index -> (generator index 0-based, cycle index)
    std::vector<std::pair<std::size_t, std::size_t>> variable_cycle;
    // equation index -> (letter, generator index 0-based of the right-hand side)
    std::vector<std::pair<std::size_t, std::size_t>> equation_source;
};

CycleBalanceSystem build_cycle_balance_system(const GraphFamily& graphs);

struct StarStarCheck {
    std::vector<std::vector<CycleClass>> cycles;
    std::optional<CycleBalanceSystem> balance;
    std::optional<SSSolution> solution;
    std::optional<RationalVector> certificate;
    // Why the check failed, empty when it holds.
    std::string reason;

    bool holds() const { return solution.has_value(); }
};

StarStarCheck check_starstar(const GraphFamily& graphs);

// Tile balance system over variables "x_<tile id>": one equation per generator g
// and color c, skipping pairs where both color classes are empty.
struct TileBalanceSystem {
    LinearSystem system;
    std::vector<std::pair<int, std::string>> equation_source;
};

TileBalanceSystem build_tile_balance_system(const WangTileSet& tiles);

struct StarStarPrimeCheck {
    TileBalanceSystem balance;
    std::optional<SSPSolution> solution;
    std::optional<RationalVector> certificate;

    bool holds() const { return solution.has_value(); }
};

StarStarPrimeCheck check_starstar_prime(const WangTileSet& tiles);

bool is_valid_ss_solution(const GraphFamily& graphs, const SSSolution& solution);
bool is_valid_ssp_solution(const WangTileSet& tiles, const SSPSolution& solution);

// Per-letter abundance Σ_j weights[i][j]·|cycles[i][j]|_a of one generator.
std::vector<Rational> letter_totals(const SSSolution& solution, std::size_t generator,
                                    std::size_t letters);

// x_τ = Σ_j x_{1,j}|ω_1^j|_τ. Throws MismatchedInstance when graphs is not
// wang_to_graphs(tiles); the output is verified before returning.
SSPSolution ss_to_ssp(const SSSolution& solution, const GraphFamily& graphs,
                      const WangTileSet& tiles);

// Builds, per generator, the graph on x_τ copies of each tile whose edges pair
// copies through an order-preserving bijection per color, splits it into its
// cycles, projects them onto Γ_g and decomposes them into simple cycles.
// Throws NonIntegerSolution; the output is verified before returning.
SSSolution ssp_to_ss(const SSPSolution& solution, const WangTileSet& tiles);

struct EquivalenceReport {
    StarStarCheck starstar;
    StarStarPrimeCheck starstar_prime;
    std::optional<SSPSolution> ssp_from_ss;
    std::optional<SSSolution> ss_from_ssp;

    bool holds() const { return starstar.holds(); }
};

// Runs both checks; when feasible, runs both translations and checks their output.
// Throws EquivalenceViolation if the verdicts differ.
EquivalenceReport check_equivalence(const WangTileSet& tiles);

} // namespace tilecheck
