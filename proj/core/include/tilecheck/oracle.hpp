#pragma once

#include "tilecheck/feasible.hpp"
#include "tilecheck/model.hpp"
#include "tilecheck/star.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tilecheck {

inline constexpr long long default_node_budget = 10'000'000;

enum class Topology { rectangle, torus };

// Cell (col, row) is cells[row * width + col]. Column col + 1 lies in direction g1,
// row row + 1 in direction g2. Tiles are tile-set indices.
struct TilingGrid {
    int width = 0;
    int height = 0;
    Topology topology = Topology::rectangle;
    std::vector<std::size_t> cells;

    std::size_t at(int col, int row) const
    {
        return cells.at(static_cast<std::size_t>(row) * static_cast<std::size_t>(width) +
                        static_cast<std::size_t>(col));
    }
};

// Backtracking in row-major cell order, tiles tried in declaration order, each
// candidate checked against its already placed neighbours (and, on the torus,
// against the wrapped ones). Requires a valid tile set with two generators.
// Returns nullopt when no tiling exists; throws ResourceLimit when more than
// node_budget candidates were tried.
std::optional<TilingGrid> tile_rectangle(const WangTileSet& tiles, int width, int height,
                                         long long node_budget = default_node_budget);
std::optional<TilingGrid> tile_torus(const WangTileSet& tiles, int width, int height,
                                     long long node_budget = default_node_budget);

// Checks every adjacency of the grid from the tiles' color names.
bool is_valid_tiling(const WangTileSet& tiles, const TilingGrid& grid);

// Complete search for a labeling of the radius ball of F_d. Uses the fact that the
// ball is a tree whose subtree below a node depends only on the node's depth and
// incoming letter. Throws ResourceLimit when the ball has more than node_budget nodes.
std::optional<FreeBall> tile_free_ball(const GraphFamily& graphs, int radius,
                                       long long node_budget = default_node_budget);

// Følner data of the centred boxes S_k = [-k, k]^dims in Z^dims.
Integer box_cardinality(int k, int dims);
Integer box_shift_difference(int k, int dims);

struct DefectEntry {
    int generator = 1;
    std::string color;
    Rational defect;
    Rational bound;
    bool within_bound = false;
};

struct FrequencyLevel {
    int radius = 0;
    Integer box_size;
    std::vector<Rational> frequencies;
    std::vector<DefectEntry> defects;
    // period_aligned[i]: the period of the torus in direction g_{i+1} divides 2k + 1,
    // in which case every defect for that generator is exactly zero.
    std::vector<bool> period_aligned;
};

struct FrequencyReport {
    std::vector<FrequencyLevel> levels;
};

// Reads the torus tiling as a periodic configuration of Z^2 and counts tile
// frequencies over S_k for each k. For every generator g and color c the defect
// |Σ_{c_g} x^k − Σ_{c_{g^{-1}}} x^k| is compared with
// (#(S_k + g) Δ S_k + #(S_k − g) Δ S_k) / #S_k = 4 / (2k + 1).
FrequencyReport folner_audit(const WangTileSet& tiles, const TilingGrid& torus,
                             const std::vector<int>& radii);

} // namespace tilecheck
