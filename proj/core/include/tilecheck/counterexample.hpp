#pragma once

#include "tilecheck/model.hpp"
#include "tilecheck/oracle.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tilecheck {

struct Counterexample {
    Word relator;
    GraphFamily graphs;
    WangTileSet tiles;
};

// Edges forced by reading the relator w_1...w_n along the vertices 0..n:
// w_k = g_j puts k-1 -> k into Γ_j, w_k = g_j^{-1} puts k -> k-1.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> relator_edges(const Word& relator,
                                                                             int generators);

// Extends a partial graph (in/out-degree at most one, no cycle) to one directed
// Hamiltonian cycle: maximal paths are chained in order of their least vertex and
// the chain is closed. Throws CannotComplete.
Digraph complete_to_hamiltonian(std::size_t vertices,
                                const std::vector<std::pair<std::size_t, std::size_t>>& partial);

// Letters and tile ids are "0".."n". Throws NotReduced, std::out_of_range.
Counterexample build_counterexample(const Presentation& presentation, std::size_t relator_index);

// Tiles visited when the relator is read from tile 0 at the identity; each step
// is the unique tile matching the previous one. nullopt if a step is not forced.
std::optional<std::vector<std::size_t>> forced_walk(const WangTileSet& tiles, const Word& relator);

bool is_commutator(const Word& word);

struct CounterexampleOptions {
    // Largest torus side probed for the commutator relator.
    int max_torus = 4;
    long long node_budget = default_node_budget;
};

struct CounterexampleReport {
    bool star_full_alphabet = false;
    bool starstar = false;
    bool starstar_prime = false;
    bool uniform_weights = false;
    bool hamiltonian_cycles = false;
    std::vector<std::size_t> walk;
    bool walk_contradiction = false;
    // Only filled in for the Z^2 commutator.
    std::optional<bool> rectangle_2x2_exists;
    std::optional<bool> torus_exists;

    bool passed() const;
};

// Throws VerificationFailed if any of the properties does not hold.
CounterexampleReport verify_counterexample(const Counterexample& instance,
                                           const CounterexampleOptions& options = {});

} // namespace tilecheck
