#include "tilecheck/oracle.hpp"

#include "tilecheck/errors.hpp"

#include <stdexcept>

namespace tilecheck {

namespace {

void require_plane(const WangTileSet& tiles, int width, int height)
{
    if (tiles.generators != 2) {
        throw std::invalid_argument("grid tilings need exactly two generators");
    }
    if (width < 1 || height < 1) {
        throw std::invalid_argument("grid dimensions must be positive");
    }
}

std::optional<TilingGrid> search_grid(const WangTileSet& tiles, int width, int height,
                                      Topology topology, long long node_budget)
{
    require_plane(tiles, width, height);
    const auto colors = side_color_indices(tiles);
    const std::size_t count = tiles.tiles.size();
    const std::size_t right = side_slot({1, false});
    const std::size_t left = side_slot({1, true});
    const std::size_t top = side_slot({2, false});
    const std::size_t bottom = side_slot({2, true});
    auto fits_right = [&](std::size_t a, std::size_t b) { return colors[a][right] == colors[b][left]; };
    auto fits_up = [&](std::size_t a, std::size_t b) { return colors[a][top] == colors[b][bottom]; };

    const auto w = static_cast<std::size_t>(width);
    const auto h = static_cast<std::size_t>(height);
    const std::size_t cells = w * h;
    const bool torus = topology == Topology::torus;
    TilingGrid grid{width, height, topology, std::vector<std::size_t>(cells, 0)};
    if (count == 0) return std::nullopt;

    auto fits = [&](std::size_t pos, std::size_t t) {
        const std::size_t col = pos % w;
        const std::size_t row = pos / w;
        if (col > 0 && !fits_right(grid.cells[pos - 1], t)) return false;
        if (row > 0 && !fits_up(grid.cells[pos - w], t)) return false;
        if (torus && col == w - 1) {
            const std::size_t wrap = w == 1 ? t : grid.cells[row * w];
            if (!fits_right(t, wrap)) return false;
        }
        if (torus && row == h - 1) {
            const std::size_t wrap = h == 1 ? t : grid.cells[col];
            if (!fits_up(t, wrap)) return false;
        }
        return true;
    };

    std::vector<std::size_t> next_try(cells, 0);
    long long nodes = 0;
    std::size_t pos = 0;
    while (true) {
        bool placed = false;
        for (std::size_t t = next_try[pos]; t < count; ++t) {
            if (++nodes > node_budget) {
                throw ResourceLimit("tiling search exceeded the node budget", nodes - 1);
            }
            if (fits(pos, t)) {
                grid.cells[pos] = t;
                next_try[pos] = t + 1;
                placed = true;
                break;
            }
        }
        if (placed) {
            if (++pos == cells) return grid;
            next_try[pos] = 0;
        } else {
            if (pos == 0) return std::nullopt;
            --pos;
        }
    }
}

} // namespace

std::optional<TilingGrid> tile_rectangle(const WangTileSet& tiles, int width, int height,
                                         long long node_budget)
{
    return search_grid(tiles, width, height, Topology::rectangle, node_budget);
}

std::optional<TilingGrid> tile_torus(const WangTileSet& tiles, int width, int height,
                                     long long node_budget)
{
    return search_grid(tiles, width, height, Topology::torus, node_budget);
}

bool is_valid_tiling(const WangTileSet& tiles, const TilingGrid& grid)
{
    if (tiles.generators != 2 || grid.width < 1 || grid.height < 1) return false;
    if (grid.cells.size() != static_cast<std::size_t>(grid.width) * grid.height) return false;
    for (auto t : grid.cells) {
        if (t >= tiles.tiles.size()) return false;
    }
    const bool torus = grid.topology == Topology::torus;
    for (int row = 0; row < grid.height; ++row) {
        for (int col = 0; col < grid.width; ++col) {
            const WangTile& here = tiles.tiles[grid.at(col, row)];
            if (col + 1 < grid.width || torus) {
                const WangTile& east = tiles.tiles[grid.at((col + 1) % grid.width, row)];
                if (here.color({1, false}) != east.color({1, true})) return false;
            }
            if (row + 1 < grid.height || torus) {
                const WangTile& north = tiles.tiles[grid.at(col, (row + 1) % grid.height)];
                if (here.color({2, false}) != north.color({2, true})) return false;
            }
        }
    }
    return true;
}

std::optional<FreeBall> tile_free_ball(const GraphFamily& graphs, int radius,
                                       long long node_budget)
{
    if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
    const int d = graphs.generators();
    const std::size_t ball_nodes = free_ball_size(d, radius);
    if (ball_nodes > static_cast<unsigned long long>(node_budget)) {
        throw ResourceLimit("free-group ball exceeds the node budget",
                            static_cast<long long>(ball_nodes));
    }
    const std::size_t n = graphs.alphabet.size();
    if (n == 0) return std::nullopt;
    const std::size_t slots = 2 * static_cast<std::size_t>(d);

    // Is parent -> child a legal step along `via`?
    auto step_ok = [&](std::size_t parent, Generator via, std::size_t child) {
        const auto& graph = graphs.graphs[via.index - 1];
        return via.inverse ? graph.has_edge(child, parent) : graph.has_edge(parent, child);
    };

    // ok[h][slot][a]: a can sit at a node entered along side_at(slot) with h levels below it.
    std::vector<std::vector<std::vector<bool>>> ok(
        static_cast<std::size_t>(std::max(radius, 1)),
        std::vector<std::vector<bool>>(slots, std::vector<bool>(n, true)));
    auto extendable = [&](std::size_t a, std::size_t slot, const Generator* entered, int below) {
        const Generator via = side_at(slot);
        if (entered && via == entered->inverted()) return true;
        for (std::size_t b = 0; b < n; ++b) {
            if (step_ok(a, via, b) && ok[static_cast<std::size_t>(below)][slot][b]) return true;
        }
        return false;
    };
    for (int h = 1; h < radius; ++h) {
        for (std::size_t s = 0; s < slots; ++s) {
            const Generator entered = side_at(s);
            for (std::size_t a = 0; a < n; ++a) {
                bool good = true;
                for (std::size_t t = 0; t < slots && good; ++t) {
                    good = extendable(a, t, &entered, h - 1);
                }
                ok[static_cast<std::size_t>(h)][s][a] = good;
            }
        }
    }

    FreeBall ball = free_ball_skeleton(d, radius);
    std::optional<std::size_t> root;
    for (std::size_t a = 0; a < n && !root; ++a) {
        bool good = true;
        for (std::size_t t = 0; t < slots && good && radius > 0; ++t) {
            good = extendable(a, t, nullptr, radius - 1);
        }
        if (good) root = a;
    }
    if (!root) return std::nullopt;
    ball.nodes[0].label = *root;
    for (std::size_t k = 1; k < ball.nodes.size(); ++k) {
        auto& node = ball.nodes[k];
        const std::size_t parent = ball.nodes[node.parent].label;
        const auto below = static_cast<std::size_t>(radius - node.depth);
        const std::size_t slot = side_slot(node.via);
        bool found = false;
        for (std::size_t b = 0; b < n && !found; ++b) {
            if (step_ok(parent, node.via, b) && ok[below][slot][b]) {
                node.label = b;
                found = true;
            }
        }
        if (!found) throw VerificationFailed("free-ball table inconsistent");
    }
    return ball;
}

Integer box_cardinality(int k, int dims)
{
    Integer side = 2 * k + 1;
    Integer result = 1;
    for (int i = 0; i < dims; ++i) result *= side;
    return result;
}

Integer box_shift_difference(int k, int dims)
{
    return 2 * box_cardinality(k, dims - 1);
}

FrequencyReport folner_audit(const WangTileSet& tiles, const TilingGrid& torus,
                             const std::vector<int>& radii)
{
    if (torus.topology != Topology::torus || !is_valid_tiling(tiles, torus)) {
        throw std::invalid_argument("frequency audit needs a valid torus tiling");
    }
    const std::size_t n = tiles.tiles.size();
    const int w = torus.width;
    const int h = torus.height;
    FrequencyReport report;
    for (int k : radii) {
        if (k < 0) throw std::invalid_argument("box radius must be nonnegative");
        FrequencyLevel level;
        level.radius = k;
        level.box_size = box_cardinality(k, 2);

        // How many p in [-k, k] fall in each residue class.
        auto residues = [k](int period) {
            std::vector<long long> hits(static_cast<std::size_t>(period), 0);
            for (int p = -k; p <= k; ++p) ++hits[static_cast<std::size_t>(((p % period) + period) % period)];
            return hits;
        };
        const auto cols = residues(w);
        const auto rows = residues(h);
        std::vector<Integer> counts(n);
        for (int r = 0; r < h; ++r) {
            for (int c = 0; c < w; ++c) {
                counts[torus.at(c, r)] += Integer(cols[static_cast<std::size_t>(c)]) *
                                          rows[static_cast<std::size_t>(r)];
            }
        }
        for (const auto& c : counts) level.frequencies.emplace_back(Rational(c, level.box_size));

        const Rational bound(2 * box_shift_difference(k, 2), level.box_size);
        for (int g = 1; g <= 2; ++g) {
            for (const auto& color : tiles.colors) {
                const auto plus = color_class(tiles, color, {g, false});
                const auto minus = color_class(tiles, color, {g, true});
                if (plus.empty() && minus.empty()) continue;
                Rational diff = 0;
                for (auto t : plus) diff += level.frequencies[t];
                for (auto t : minus) diff -= level.frequencies[t];
                if (diff < 0) diff = -diff;
                level.defects.push_back({g, color, diff, bound, diff <= bound});
            }
        }
        level.period_aligned = {(2 * k + 1) % w == 0, (2 * k + 1) % h == 0};
        report.levels.push_back(std::move(level));
    }
    return report;
}

} // namespace tilecheck
