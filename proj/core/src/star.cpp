#include "tilecheck/star.hpp"

#include "tilecheck/errors.hpp"

#include <algorithm>

namespace tilecheck {

namespace {

std::vector<int> synchronous_prune(const GraphFamily& graphs, bool need_predecessor)
{
    const std::size_t n = graphs.alphabet.size();
    std::vector<std::vector<std::vector<std::size_t>>> preds;
    for (const auto& g : graphs.graphs) preds.push_back(g.predecessor_lists());

    std::vector<int> round(n, 0);
    auto alive = [&](std::size_t v) { return round[v] == 0; };
    auto any_alive = [&](const std::vector<std::size_t>& list) {
        return std::any_of(list.begin(), list.end(), alive);
    };
    for (int r = 1;; ++r) {
        std::vector<std::size_t> doomed;
        for (std::size_t a = 0; a < n; ++a) {
            if (!alive(a)) continue;
            for (std::size_t i = 0; i < graphs.graphs.size(); ++i) {
                if (!any_alive(graphs.graphs[i].successors(a)) ||
                    (need_predecessor && !any_alive(preds[i][a]))) {
                    doomed.push_back(a);
                    break;
                }
            }
        }
        if (doomed.empty()) break;
        for (std::size_t a : doomed) round[a] = r;
    }
    return round;
}

std::vector<std::size_t> survivors(const std::vector<int>& round)
{
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < round.size(); ++a) {
        if (round[a] == 0) out.push_back(a);
    }
    return out;
}

} // namespace

std::vector<std::size_t> prune_star(const GraphFamily& graphs)
{
    return survivors(synchronous_prune(graphs, true));
}

std::vector<std::size_t> prune_star_forward(const GraphFamily& graphs)
{
    return survivors(synchronous_prune(graphs, false));
}

StarCheck check_star(const GraphFamily& graphs)
{
    StarCheck check;
    check.removal_round = synchronous_prune(graphs, true);
    auto kept = survivors(check.removal_round);
    if (kept.empty()) return check;

    const std::size_t n = graphs.alphabet.size();
    const std::size_t d = graphs.graphs.size();
    std::vector<bool> member(n, false);
    for (std::size_t a : kept) member[a] = true;

    StarWitness w;
    w.subalphabet = kept;
    w.forward.assign(n, std::vector<std::size_t>(d, no_letter));
    w.backward.assign(n, std::vector<std::size_t>(d, no_letter));
    for (std::size_t i = 0; i < d; ++i) {
        const auto preds = graphs.graphs[i].predecessor_lists();
        for (std::size_t a : kept) {
            for (std::size_t b : graphs.graphs[i].successors(a)) {
                if (member[b]) {
                    w.forward[a][i] = b;
                    break;
                }
            }
            auto lowest = std::find_if(preds[a].begin(), preds[a].end(),
                                       [&](std::size_t b) { return member[b]; });
            w.backward[a][i] = *lowest;
        }
    }
    check.witness = std::move(w);
    return check;
}

bool is_valid_witness(const StarWitness& witness, const GraphFamily& graphs)
{
    if (witness.subalphabet.empty()) return false;
    const std::size_t n = graphs.alphabet.size();
    std::vector<bool> member(n, false);
    for (std::size_t a : witness.subalphabet) {
        if (a >= n) return false;
        member[a] = true;
    }
    if (witness.forward.size() != n || witness.backward.size() != n) return false;
    for (std::size_t a : witness.subalphabet) {
        for (std::size_t i = 0; i < graphs.graphs.size(); ++i) {
            const std::size_t next = witness.forward[a].at(i);
            const std::size_t prev = witness.backward[a].at(i);
            if (next >= n || !member[next] || !graphs.graphs[i].has_edge(a, next)) return false;
            if (prev >= n || !member[prev] || !graphs.graphs[i].has_edge(prev, a)) return false;
        }
    }
    return true;
}

std::size_t free_ball_size(int generators, int radius)
{
    constexpr std::size_t cap = std::numeric_limits<std::size_t>::max() / 8;
    const std::size_t branching = 2 * static_cast<std::size_t>(generators);
    std::size_t total = 1;
    std::size_t layer = 1;
    for (int k = 1; k <= radius; ++k) {
        layer *= (k == 1) ? branching : branching - 1;
        total += layer;
        if (total > cap || layer > cap) return cap;
    }
    return total;
}

FreeBall free_ball_skeleton(int generators, int radius)
{
    FreeBall ball;
    ball.generators = generators;
    ball.radius = radius;
    ball.nodes.reserve(free_ball_size(generators, radius));
    ball.nodes.push_back(FreeBall::Node{});
    const std::size_t slots = 2 * static_cast<std::size_t>(generators);
    for (std::size_t k = 0; k < ball.nodes.size(); ++k) {
        const FreeBall::Node parent = ball.nodes[k];
        if (parent.depth == radius) continue;
        for (std::size_t slot = 0; slot < slots; ++slot) {
            const Generator g = side_at(slot);
            if (k != 0 && g == parent.via.inverted()) continue;
            ball.nodes.push_back(FreeBall::Node{k, g, parent.depth + 1, 0});
        }
    }
    return ball;
}

FreeBall build_free_ball(const StarWitness& witness, const GraphFamily& graphs, int radius)
{
    if (!is_valid_witness(witness, graphs)) {
        throw std::invalid_argument("invalid witness");
    }
    FreeBall ball = free_ball_skeleton(graphs.generators(), radius);
    ball.nodes[0].label = witness.subalphabet.front();
    for (std::size_t k = 1; k < ball.nodes.size(); ++k) {
        auto& node = ball.nodes[k];
        const std::size_t from = ball.nodes[node.parent].label;
        const auto i = static_cast<std::size_t>(node.via.index - 1);
        node.label = node.via.inverse ? witness.backward[from][i] : witness.forward[from][i];
    }
    return ball;
}

bool is_valid_labeling(const FreeBall& ball, const GraphFamily& graphs)
{
    if (ball.nodes.empty()) return false;
    const std::size_t n = graphs.alphabet.size();
    for (std::size_t k = 0; k < ball.nodes.size(); ++k) {
        const auto& node = ball.nodes[k];
        if (node.label >= n) return false;
        if (k == 0) continue;
        if (node.via.index < 1 || node.via.index > graphs.generators()) return false;
        const auto& graph = graphs.graphs[node.via.index - 1];
        const std::size_t parent = ball.nodes.at(node.parent).label;
        const bool ok = node.via.inverse ? graph.has_edge(node.label, parent)
                                         : graph.has_edge(parent, node.label);
        if (!ok) return false;
    }
    return true;
}

} // namespace tilecheck
