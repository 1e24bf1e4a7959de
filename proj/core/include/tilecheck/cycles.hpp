#pragma once

#include "tilecheck/model.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace tilecheck {

// A simple cycle up to rotation. The cycle visits vertices[0], ..., vertices.back()
// and returns to vertices[0]; vertices[0] is the smallest vertex.
struct CycleClass {
    std::vector<std::size_t> vertices;

    std::size_t length() const { return vertices.size(); }
    auto operator<=>(const CycleClass&) const = default;
};

// letter -> |w|_letter. Letters not present have count zero.
using AbundanceVector = std::map<std::size_t, std::size_t>;

// Rotates a sequence of distinct vertices so that it starts at its minimum.
CycleClass canonical_cycle(std::vector<std::size_t> vertices);

// Johnson's algorithm; one entry per rotation class, sorted lexicographically.
// Self-loops are cycles of length one.
std::vector<CycleClass> enumerate_simple_cycles(const Digraph& graph);

AbundanceVector abundance(const CycleClass& cycle);

// walk is an explicitly closed vertex sequence (first == last, at least two entries).
// Repeatedly excises the simple cycle between the closest pair of equal vertices
// (leftmost pair on ties) until nothing is left. Throws InvalidWalk.
std::map<CycleClass, std::size_t> decompose_cycle(const std::vector<std::size_t>& walk,
                                                  const Digraph& graph);

} // namespace tilecheck
