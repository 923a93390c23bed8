#ifndef LINKBOMB_TESTS_SUPPORT_HPP
#define LINKBOMB_TESTS_SUPPORT_HPP

#include <Eigen/Dense>

#include "linkbomb/graph.hpp"
#include "linkbomb/random.hpp"

namespace testing_support {

using linkbomb::DirectedMultigraph;
using linkbomb::Node;

/// Small random multigraph: each node gets 0..max_out distinct heads with multiplicity 1..max_mult.
inline DirectedMultigraph random_small_graph(linkbomb::Rng& rng, std::size_t n, std::size_t max_out,
                                             std::size_t max_mult = 2) {
    DirectedMultigraph g(n);
    for (Node u = 0; u < n; ++u) {
        const auto k = linkbomb::uniform_index(rng, max_out + 1);
        for (std::size_t e = 0; e < k; ++e) {
            const Node v = linkbomb::uniform_index(rng, n);
            if (v == u) continue;
            g.add_edge(u, v, 1 + linkbomb::uniform_index(rng, max_mult));
        }
    }
    return g;
}

/// Direct solve of (I - alpha W^T) p = (1 - alpha) / N.
inline Eigen::VectorXd dense_pagerank(const DirectedMultigraph& g, double alpha) {
    const auto n = static_cast<Eigen::Index>(g.node_count());
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
    for (Node u = 0; u < g.node_count(); ++u) {
        for (const auto& [w, mult] : g.out_edges(u)) {
            a(static_cast<Eigen::Index>(w), static_cast<Eigen::Index>(u)) -=
                alpha * static_cast<double>(mult) / static_cast<double>(g.out_degree(u));
        }
    }
    const Eigen::VectorXd b = Eigen::VectorXd::Constant(n, (1.0 - alpha) / static_cast<double>(n));
    return a.fullPivLu().solve(b);
}

} // namespace testing_support

#endif
