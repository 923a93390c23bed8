#ifndef LINKBOMB_PAGERANK_HPP
#define LINKBOMB_PAGERANK_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Sparse>

#include "linkbomb/attack_pattern.hpp"
#include "linkbomb/graph.hpp"

namespace linkbomb {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar = double>
struct BasicPageRankConfig {
    Scalar alpha = Scalar(0.85);
    /// Stop once the L1 distance to the fixed point is provably at most this.
    Scalar tolerance = Scalar(1e-12);
    std::size_t max_iterations = 10'000;

    void validate() const {
        if (!(alpha >= 0 && alpha <= 1)) throw std::invalid_argument("alpha must lie in [0, 1]");
        if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
        if (max_iterations == 0) throw std::invalid_argument("max_iterations must be positive");
    }
};

template <typename Scalar = double>
struct BasicPageRankVector {
    Vector<Scalar> scores;
    Scalar alpha = 0;
    std::size_t iterations_used = 0;
    /// max_i |p_i - alpha * sum p_j / outdeg(j) - (1 - alpha) / N| at the returned scores.
    Scalar final_residual = 0;
    /// Set when alpha == 1: convergence is only meaningful on acyclic graphs.
    bool alpha_one_warning = false;
    /// L1 change per sweep, in order.
    std::vector<Scalar> change_history;

    std::size_t size() const { return static_cast<std::size_t>(scores.size()); }
    Scalar operator[](Node v) const { return scores(static_cast<Eigen::Index>(v)); }
};

using PageRankConfig = BasicPageRankConfig<double>;
using PageRankVector = BasicPageRankVector<double>;

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double residual, std::size_t iterations)
        : std::runtime_error(what + " (residual " + std::to_string(residual) + " after " +
                             std::to_string(iterations) + " iterations)"),
          residual_(residual), iterations_(iterations) {}

    double residual() const { return residual_; }
    std::size_t iterations() const { return iterations_; }

private:
    double residual_;
    std::size_t iterations_;
};

/// Residual of the fixed-point equation at `scores`, in max norm.
template <typename Scalar>
Scalar pagerank_residual(const DirectedMultigraph& g, const Vector<Scalar>& scores, Scalar alpha) {
    const Eigen::SparseMatrix<Scalar> inflow = transition_matrix<Scalar>(g).transpose();
    const Scalar jump = (Scalar(1) - alpha) / static_cast<Scalar>(g.node_count());
    const Vector<Scalar> image = (alpha * (inflow * scores)).array() + jump;
    return (scores - image).cwiseAbs().maxCoeff();
}

/**
 * Power iteration p <- alpha * W^T p + (1 - alpha) / N from p = 1/N.
 *
 * Mass reaching a dangling node stays there: nothing is redistributed and the
 * scores are never renormalized, so they sum to less than one whenever a
 * dangling node exists. Parallel edges enter through their multiplicity.
 */
template <typename Scalar>
BasicPageRankVector<Scalar> compute_pagerank(const DirectedMultigraph& g,
                                             const BasicPageRankConfig<Scalar>& cfg) {
    cfg.validate();
    const auto n = static_cast<Eigen::Index>(g.node_count());
    const Eigen::SparseMatrix<Scalar> flow = cfg.alpha * Eigen::SparseMatrix<Scalar>(
                                                             transition_matrix<Scalar>(g).transpose());
    const Scalar jump = (Scalar(1) - cfg.alpha) / static_cast<Scalar>(n);

    BasicPageRankVector<Scalar> result;
    result.alpha = cfg.alpha;
    result.alpha_one_warning = cfg.alpha == Scalar(1);

    Vector<Scalar> p = Vector<Scalar>::Constant(n, Scalar(1) / static_cast<Scalar>(n));
    Vector<Scalar> next(n);
    // The map contracts by alpha in L1, so alpha / (1 - alpha) * change bounds
    // the distance to the fixed point.
    const Scalar gain = cfg.alpha < 1 ? cfg.alpha / (Scalar(1) - cfg.alpha) : Scalar(1);
    bool converged = false;
    while (result.iterations_used < cfg.max_iterations) {
        next.noalias() = flow * p;
        next.array() += jump;
        const Scalar change = (next - p).template lpNorm<1>();
        p.swap(next);
        ++result.iterations_used;
        result.change_history.push_back(change);
        if (gain * change <= cfg.tolerance) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw ConvergenceError("pagerank did not converge", static_cast<double>(result.change_history.back()),
                               result.iterations_used);
    }
    result.final_residual = pagerank_residual<Scalar>(g, p, cfg.alpha);
    result.scores = std::move(p);
    return result;
}

inline PageRankVector compute_pagerank(const DirectedMultigraph& g, const PageRankConfig& cfg = {}) {
    return compute_pagerank<double>(g, cfg);
}

/// Victim score on the isolated K-attacker graph, with p0 = (1 - alpha) / (K + 1) as baseline.
double closed_form_isolated(AttackPattern pattern, std::size_t attackers, double alpha);

/// |sum p_i - (1 - alpha / (1 - alpha) * sum_{dangling} p_j)|; requires alpha < 1.
template <typename Scalar>
Scalar verify_sum_identity(const BasicPageRankVector<Scalar>& prv, const DirectedMultigraph& g) {
    if (!(prv.alpha < 1)) throw std::invalid_argument("sum identity requires alpha < 1");
    if (prv.size() != g.node_count()) throw std::invalid_argument("score vector does not match graph");
    Scalar dangling = 0;
    for (Node v = 0; v < g.node_count(); ++v) {
        if (g.is_dangling(v)) dangling += prv[v];
    }
    const Scalar predicted = Scalar(1) - prv.alpha / (Scalar(1) - prv.alpha) * dangling;
    return std::abs(prv.scores.sum() - predicted);
}

/// Competition rank: 1 + number of nodes with a strictly greater score.
template <typename Scalar>
std::size_t rank_of(const BasicPageRankVector<Scalar>& prv, Node v) {
    const Scalar score = prv.scores(static_cast<Eigen::Index>(v));
    return 1 + static_cast<std::size_t>((prv.scores.array() > score).count());
}

} // namespace linkbomb

#endif // LINKBOMB_PAGERANK_HPP
