#include "linkbomb/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace linkbomb {

DirectedMultigraph::DirectedMultigraph(std::size_t node_count)
    : out_(node_count), in_(node_count), out_deg_(node_count, 0), in_deg_(node_count, 0) {
    if (node_count == 0) {
        throw std::invalid_argument("graph must have at least one node");
    }
}

void DirectedMultigraph::check_node(Node u) const {
    if (u >= out_.size()) {
        throw std::out_of_range("node id " + std::to_string(u) + " outside 0.." +
                                std::to_string(out_.size() - 1));
    }
}

std::size_t DirectedMultigraph::distinct_edge_count() const {
    std::size_t count = 0;
    for (const auto& adj : out_) {
        count += adj.size();
    }
    return count;
}

std::size_t DirectedMultigraph::multiplicity(Node u, Node v) const {
    check_node(u);
    check_node(v);
    const auto it = out_[u].find(v);
    return it == out_[u].end() ? 0 : it->second;
}

DirectedMultigraph& DirectedMultigraph::add_edge(Node u, Node v, std::size_t count) {
    check_node(u);
    check_node(v);
    if (u == v) {
        throw std::invalid_argument("self-loop " + std::to_string(u) + " -> " + std::to_string(v));
    }
    if (count == 0) {
        throw std::invalid_argument("edge multiplicity must be positive");
    }
    out_[u][v] += count;
    in_[v][u] += count;
    out_deg_[u] += count;
    in_deg_[v] += count;
    total_ += count;
    return *this;
}

DirectedMultigraph& DirectedMultigraph::clear_out_edges(Node u) {
    check_node(u);
    for (const auto& [v, mult] : out_[u]) {
        auto& back = in_[v];
        back.erase(u);
        in_deg_[v] -= mult;
        total_ -= mult;
    }
    out_[u].clear();
    out_deg_[u] = 0;
    return *this;
}

DirectedMultigraph new_graph(std::size_t node_count) { return DirectedMultigraph(node_count); }

DirectedMultigraph add_edge(DirectedMultigraph g, Node u, Node v, std::size_t count) {
    g.add_edge(u, v, count);
    return g;
}

DirectedMultigraph remove_out_edges(DirectedMultigraph g, Node v) {
    g.clear_out_edges(v);
    return g;
}

std::vector<Node> k_neighborhood(const DirectedMultigraph& g, Node v, std::size_t k) {
    std::vector<char> current(g.node_count(), 0);
    current.at(v) = 1;
    for (std::size_t step = 0; step < k; ++step) {
        std::vector<char> next(g.node_count(), 0);
        for (Node u = 0; u < g.node_count(); ++u) {
            if (!current[u]) continue;
            for (const auto& [w, mult] : g.out_edges(u)) {
                next[w] = 1;
            }
        }
        current = std::move(next);
    }
    std::vector<Node> result;
    for (Node u = 0; u < g.node_count(); ++u) {
        if (current[u]) result.push_back(u);
    }
    return result;
}

namespace {

template <typename Neighbors>
std::vector<std::size_t> bfs(std::size_t n, Node start, Neighbors&& neighbors) {
    std::vector<std::size_t> dist(n, kUnreachable);
    std::deque<Node> queue;
    dist[start] = 0;
    queue.push_back(start);
    while (!queue.empty()) {
        const Node x = queue.front();
        queue.pop_front();
        for (const auto& [y, mult] : neighbors(x)) {
            if (dist[y] == kUnreachable) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

} // namespace

std::vector<std::size_t> distances_to(const DirectedMultigraph& g, Node target) {
    if (target >= g.node_count()) throw std::out_of_range("target node out of range");
    return bfs(g.node_count(), target, [&](Node x) -> const auto& { return g.in_edges(x); });
}

std::vector<std::size_t> distances_from(const DirectedMultigraph& g, Node source) {
    if (source >= g.node_count()) throw std::out_of_range("source node out of range");
    return bfs(g.node_count(), source, [&](Node x) -> const auto& { return g.out_edges(x); });
}

std::size_t shortest_distance(const DirectedMultigraph& g, Node u, Node v) {
    if (v >= g.node_count()) throw std::out_of_range("node out of range");
    return distances_from(g, u)[v];
}

bool is_acyclic(const DirectedMultigraph& g) {
    // Kahn's algorithm.
    std::vector<std::size_t> pending(g.node_count());
    std::vector<Node> ready;
    for (Node v = 0; v < g.node_count(); ++v) {
        pending[v] = g.in_edges(v).size();
        if (pending[v] == 0) ready.push_back(v);
    }
    std::size_t visited = 0;
    while (!ready.empty()) {
        const Node u = ready.back();
        ready.pop_back();
        ++visited;
        for (const auto& [w, mult] : g.out_edges(u)) {
            if (--pending[w] == 0) ready.push_back(w);
        }
    }
    return visited == g.node_count();
}

} // namespace linkbomb
