#ifndef LINKBOMB_GRAPH_HPP
#define LINKBOMB_GRAPH_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <limits>
#include <map>
#include <vector>

#include <Eigen/Sparse>

namespace linkbomb {

using Node = std::size_t;

/// Distance sentinel for "no directed path".
inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/**
 * Directed multigraph on the dense vertex set 0..N-1.
 *
 * Parallel edges are stored as a multiplicity per ordered pair; self-loops
 * are rejected. Degrees count multiplicity.
 */
class DirectedMultigraph {
public:
    using Adjacency = std::map<Node, std::size_t>;

    explicit DirectedMultigraph(std::size_t node_count);

    std::size_t node_count() const { return out_.size(); }
    /// Total multiplicity over all edges.
    std::size_t edge_count() const { return total_; }
    std::size_t distinct_edge_count() const;

    std::size_t out_degree(Node u) const { return out_deg_.at(u); }
    std::size_t in_degree(Node v) const { return in_deg_.at(v); }
    std::size_t multiplicity(Node u, Node v) const;
    bool is_dangling(Node u) const { return out_degree(u) == 0; }

    /// Heads of u's out-edges with multiplicities, ordered by head id.
    const Adjacency& out_edges(Node u) const { return out_.at(u); }
    /// Tails of v's in-edges with multiplicities, ordered by tail id.
    const Adjacency& in_edges(Node v) const { return in_.at(v); }

    // In-place builders. The free functions below give the value-returning forms.
    DirectedMultigraph& add_edge(Node u, Node v, std::size_t count = 1);
    DirectedMultigraph& clear_out_edges(Node u);

    bool operator==(const DirectedMultigraph& other) const = default;

private:
    void check_node(Node u) const;

    std::vector<Adjacency> out_;
    std::vector<Adjacency> in_;
    std::vector<std::size_t> out_deg_;
    std::vector<std::size_t> in_deg_;
    std::size_t total_ = 0;
};

DirectedMultigraph new_graph(std::size_t node_count);
DirectedMultigraph add_edge(DirectedMultigraph g, Node u, Node v, std::size_t count = 1);
DirectedMultigraph remove_out_edges(DirectedMultigraph g, Node v);

/// N_k(v): heads of edges whose tails lie in N_{k-1}(v); N_0(v) = {v}. Sorted.
std::vector<Node> k_neighborhood(const DirectedMultigraph& g, Node v, std::size_t k);

/// Shortest directed path length, kUnreachable if none; d(v, v) = 0.
std::size_t shortest_distance(const DirectedMultigraph& g, Node u, Node v);

/// d(u, target) for every u, by reverse breadth-first search.
std::vector<std::size_t> distances_to(const DirectedMultigraph& g, Node target);

/// d(source, u) for every u.
std::vector<std::size_t> distances_from(const DirectedMultigraph& g, Node source);

bool is_acyclic(const DirectedMultigraph& g);

/// Row-substochastic walk operator: W(u, w) = mult(u, w) / outdeg(u); dangling rows are empty.
template <typename Scalar = double>
Eigen::SparseMatrix<Scalar, Eigen::RowMajor> transition_matrix(const DirectedMultigraph& g) {
    using Triplet = Eigen::Triplet<Scalar>;
    std::vector<Triplet> entries;
    entries.reserve(g.distinct_edge_count());
    for (Node u = 0; u < g.node_count(); ++u) {
        const auto deg = static_cast<Scalar>(g.out_degree(u));
        for (const auto& [w, mult] : g.out_edges(u)) {
            entries.emplace_back(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(w),
                                 static_cast<Scalar>(mult) / deg);
        }
    }
    const auto n = static_cast<Eigen::Index>(g.node_count());
    Eigen::SparseMatrix<Scalar, Eigen::RowMajor> w(n, n);
    w.setFromTriplets(entries.begin(), entries.end());
    return w;
}

// Edge-list text format: one `u v [multiplicity]` per line, `#` comments.
// A `# nodes N` line fixes the vertex count; without it N = max id + 1.
DirectedMultigraph read_edge_list(std::istream& in);
DirectedMultigraph load_edge_list(const std::filesystem::path& path);
/// Canonical form: `# nodes N` header, then edges ordered by (u, v).
void write_edge_list(std::ostream& out, const DirectedMultigraph& g);
void save_edge_list(const std::filesystem::path& path, const DirectedMultigraph& g);

} // namespace linkbomb

#endif // LINKBOMB_GRAPH_HPP
