#pragma once

#include "tilecheck/model.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

namespace tilecheck {

inline constexpr std::size_t no_letter = std::numeric_limits<std::size_t>::max();

// Witness for the free-group emptiness criterion on a subalphabet A'.
// forward[a][i] is a successor of a in graph i inside A', backward[a][i] a
// predecessor; both are no_letter for letters outside A'.
struct StarWitness {
    std::vector<std::size_t> subalphabet;
    std::vector<std::vector<std::size_t>> forward;
    std::vector<std::vector<std::size_t>> backward;
};

struct StarCheck {
    std::optional<StarWitness> witness;
    // Round in which each letter was pruned (1-based); 0 for survivors.
    std::vector<int> removal_round;

    bool holds() const { return witness.has_value(); }
};

// Greatest subset B of the alphabet such that every letter of B has a successor and
// a predecessor inside B in every graph. Pruning is synchronous: each round removes
// all letters that are deficient at the start of the round.
std::vector<std::size_t> prune_star(const GraphFamily& graphs);

// Same fixpoint, but only missing successors cause removal.
std::vector<std::size_t> prune_star_forward(const GraphFamily& graphs);

// Choices are the least successor / predecessor inside the subalphabet.
StarCheck check_star(const GraphFamily& graphs);

bool is_valid_witness(const StarWitness& witness, const GraphFamily& graphs);

// A labeling of the reduced words of length <= radius in the free group F_d,
// stored as a tree: node 0 is the empty word, node k > 0 is word(parent) · via.
struct FreeBall {
    struct Node {
        std::size_t parent = 0;
        Generator via;
        int depth = 0;
        std::size_t label = 0;
    };

    int generators = 0;
    int radius = 0;
    std::vector<Node> nodes;
};

// Number of reduced words of length <= radius over d generators.
std::size_t free_ball_size(int generators, int radius);

// Shape of the ball with all labels zero; children appear in side-slot order.
FreeBall free_ball_skeleton(int generators, int radius);

// Root gets the least letter of A'; the rest follows the witness maps.
FreeBall build_free_ball(const StarWitness& witness, const GraphFamily& graphs, int radius);

// Every tree edge u -> u·g_i needs an edge label(u) -> label(u·g_i) in Γ_i, and
// u -> u·g_i^{-1} needs label(u·g_i^{-1}) -> label(u).
bool is_valid_labeling(const FreeBall& ball, const GraphFamily& graphs);

} // namespace tilecheck
