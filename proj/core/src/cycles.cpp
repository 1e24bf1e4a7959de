#include "tilecheck/cycles.hpp"

#include "tilecheck/errors.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace tilecheck {

namespace {

// Vertices >= start that lie on a common strongly connected component with start,
// in the subgraph induced by {start, ..., n-1}.
std::vector<bool> component_of(const Digraph& graph,
                               const std::vector<std::vector<std::size_t>>& pred,
                               std::size_t start)
{
    const std::size_t n = graph.size();
    auto reach = [&](auto&& neighbours) {
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> todo{start};
        seen[start] = true;
        while (!todo.empty()) {
            const std::size_t v = todo.back();
            todo.pop_back();
            for (std::size_t w : neighbours(v)) {
                if (w >= start && !seen[w]) {
                    seen[w] = true;
                    todo.push_back(w);
                }
            }
        }
        return seen;
    };
    auto forward = reach([&](std::size_t v) -> const std::vector<std::size_t>& {
        return graph.successors(v);
    });
    auto backward = reach([&](std::size_t v) -> const std::vector<std::size_t>& {
        return pred[v];
    });
    for (std::size_t v = 0; v < n; ++v) forward[v] = forward[v] && backward[v];
    return forward;
}

class Johnson {
public:
    Johnson(const Digraph& graph, std::vector<CycleClass>& out)
        : graph_(graph), out_(out), blocked_(graph.size()), block_map_(graph.size())
    {
    }

    void run_from(std::size_t start, std::vector<bool> component)
    {
        start_ = start;
        component_ = std::move(component);
        for (std::size_t v = 0; v < graph_.size(); ++v) {
            blocked_[v] = false;
            block_map_[v].clear();
        }
        circuit(start);
    }

private:
    bool circuit(std::size_t v)
    {
        bool found = false;
        stack_.push_back(v);
        blocked_[v] = true;
        for (std::size_t w : graph_.successors(v)) {
            if (!component_[w]) continue;
            if (w == start_) {
                out_.push_back(CycleClass{stack_});
                found = true;
            } else if (!blocked_[w] && circuit(w)) {
                found = true;
            }
        }
        if (found) {
            unblock(v);
        } else {
            for (std::size_t w : graph_.successors(v)) {
                if (!component_[w]) continue;
                auto& preds = block_map_[w];
                if (std::find(preds.begin(), preds.end(), v) == preds.end()) preds.push_back(v);
            }
        }
        stack_.pop_back();
        return found;
    }

    void unblock(std::size_t v)
    {
        blocked_[v] = false;
        auto pending = std::move(block_map_[v]);
        block_map_[v].clear();
        for (std::size_t w : pending) {
            if (blocked_[w]) unblock(w);
        }
    }

    const Digraph& graph_;
    std::vector<CycleClass>& out_;
    std::vector<bool> blocked_;
    std::vector<std::vector<std::size_t>> block_map_;
    std::vector<bool> component_;
    std::vector<std::size_t> stack_;
    std::size_t start_ = 0;
};

} // namespace

CycleClass canonical_cycle(std::vector<std::size_t> vertices)
{
    if (!vertices.empty()) {
        std::rotate(vertices.begin(), std::min_element(vertices.begin(), vertices.end()),
                    vertices.end());
    }
    return CycleClass{std::move(vertices)};
}

std::vector<CycleClass> enumerate_simple_cycles(const Digraph& graph)
{
    std::vector<CycleClass> cycles;
    const auto pred = graph.predecessor_lists();
    Johnson johnson(graph, cycles);
    for (std::size_t s = 0; s < graph.size(); ++s) {
        auto component = component_of(graph, pred, s);
        const bool trivial = std::count(component.begin(), component.end(), true) == 1;
        if (trivial && !graph.has_edge(s, s)) continue;
        johnson.run_from(s, std::move(component));
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

AbundanceVector abundance(const CycleClass& cycle)
{
    AbundanceVector counts;
    for (std::size_t v : cycle.vertices) ++counts[v];
    return counts;
}

std::map<CycleClass, std::size_t> decompose_cycle(const std::vector<std::size_t>& walk,
                                                  const Digraph& graph)
{
    if (walk.size() < 2) {
        throw InvalidWalk("a closed walk needs at least one edge");
    }
    if (walk.front() != walk.back()) {
        throw InvalidWalk("walk is not closed");
    }
    for (std::size_t k = 0; k + 1 < walk.size(); ++k) {
        if (!graph.has_edge(walk[k], walk[k + 1])) {
            throw InvalidWalk("no edge " + std::to_string(walk[k]) + " -> " +
                              std::to_string(walk[k + 1]) + " at position " + std::to_string(k));
        }
    }

    std::map<CycleClass, std::size_t> parts;
    std::vector<std::size_t> rest = walk;
    std::unordered_map<std::size_t, std::size_t> last_seen;
    while (rest.size() > 1) {
        last_seen.clear();
        std::size_t best_i = 0;
        std::size_t best_j = 0;
        std::size_t best_gap = std::numeric_limits<std::size_t>::max();
        for (std::size_t j = 0; j < rest.size(); ++j) {
            auto it = last_seen.find(rest[j]);
            if (it != last_seen.end() && j - it->second < best_gap) {
                best_gap = j - it->second;
                best_i = it->second;
                best_j = j;
            }
            last_seen[rest[j]] = j;
        }
        std::vector<std::size_t> piece(rest.begin() + static_cast<std::ptrdiff_t>(best_i),
                                       rest.begin() + static_cast<std::ptrdiff_t>(best_j));
        ++parts[canonical_cycle(std::move(piece))];
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best_i) + 1,
                   rest.begin() + static_cast<std::ptrdiff_t>(best_j) + 1);
    }
    return parts;
}

} // namespace tilecheck
