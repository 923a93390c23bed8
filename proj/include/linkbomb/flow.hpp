#ifndef LINKBOMB_FLOW_HPP
#define LINKBOMB_FLOW_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "linkbomb/graph.hpp"
#include "linkbomb/pagerank.hpp"

namespace linkbomb {

/// Fraction of `source`'s score reaching `target` along paths whose
/// intermediate nodes avoid `excluded`. Endpoints are never constrained by
/// the exclusion set; source == target asks for the cycle fraction.
struct FlowQuery {
    Node source = 0;
    Node target = 0;
    std::vector<Node> excluded;
    double alpha = 0.85;
};

enum class FlowMethod { linear_solve, enumeration };

struct FlowResult {
    double fraction = 0;
    FlowMethod method = FlowMethod::linear_solve;
    /// Enumeration only: the true fraction lies in [fraction, fraction + tail_bound].
    double tail_bound = 0;
    std::size_t iterations = 0;
};

template <typename Scalar = double>
struct AbsorbingSolution {
    Vector<Scalar> values;
    std::size_t iterations = 0;
    /// Bound on the max-norm distance to the fixed point at exit.
    Scalar error_bound = 0;
};

/**
 * Fixed point of h(target) = 1, h(x) = 0 for blocked x != target, and
 * h(u) = alpha / outdeg(u) * sum_{(u,w)} h(w) elsewhere (0 when dangling).
 *
 * Jacobi sweeps from h = 0; each sweep contracts the max norm by alpha, so the
 * loop stops once alpha / (1 - alpha) * change <= tolerance. With alpha = 1 it
 * only terminates when the iterate stops changing (acyclic free region).
 */
template <typename Scalar>
AbsorbingSolution<Scalar> solve_absorbing(const DirectedMultigraph& g, Node target,
                                          const std::vector<char>& blocked, Scalar alpha,
                                          Scalar tolerance = Scalar(1e-12),
                                          std::size_t max_iterations = 1'000'000) {
    if (target >= g.node_count()) throw std::out_of_range("target node out of range");
    if (!(alpha >= 0 && alpha <= 1)) throw std::invalid_argument("alpha must lie in [0, 1]");
    if (blocked.size() != g.node_count()) throw std::invalid_argument("blocked mask size mismatch");

    Eigen::SparseMatrix<Scalar, Eigen::RowMajor> step = transition_matrix<Scalar>(g);
    for (Eigen::Index u = 0; u < step.outerSize(); ++u) {
        const bool pinned = static_cast<Node>(u) == target || blocked[static_cast<Node>(u)];
        for (typename Eigen::SparseMatrix<Scalar, Eigen::RowMajor>::InnerIterator it(step, u); it; ++it) {
            it.valueRef() = pinned ? Scalar(0) : alpha * it.value();
        }
    }
    step.prune(Scalar(0));

    const auto n = static_cast<Eigen::Index>(g.node_count());
    AbsorbingSolution<Scalar> sol;
    Vector<Scalar> h = Vector<Scalar>::Zero(n);
    Vector<Scalar> next(n);
    const Scalar gain = alpha < 1 ? alpha / (Scalar(1) - alpha) : Scalar(0);
    while (sol.iterations < max_iterations) {
        next.noalias() = step * h;
        next(static_cast<Eigen::Index>(target)) = Scalar(1);
        const Scalar change = (next - h).cwiseAbs().maxCoeff();
        h.swap(next);
        ++sol.iterations;
        if (change == Scalar(0) || (alpha < 1 && gain * change <= tolerance)) {
            sol.error_bound = gain * change;
            sol.values = std::move(h);
            return sol;
        }
    }
    throw ConvergenceError("absorbing flow solve did not converge", static_cast<double>((next - h).cwiseAbs().maxCoeff()),
                           sol.iterations);
}

/// Linear-solve route for rho(source target; excluded).
FlowResult flow_fraction(const DirectedMultigraph& g, const FlowQuery& q, double tolerance = 1e-12);

/// Sum over every admissible path of length <= max_len of the product of
/// alpha * mult / outdeg along its edges. Lower bound, error <= tail_bound.
FlowResult flow_fraction_bruteforce(const DirectedMultigraph& g, const FlowQuery& q, std::size_t max_len,
                                    std::size_t max_paths = 200'000'000);

/// 1 / (1 - gamma), the geometric gain from repeated traversal of cycles.
double cycle_amplification(double gamma);

/// Victim gain Delta / (1 - gamma - rho * Delta / p_i) from flow Delta out of attacker i.
double attack_magnitude_formula(double delta, double gamma_victim, double rho_victim_attacker,
                                double attacker_score);

template <typename Scalar = double>
struct LengthFlow {
    /// Delta_j^l for every node j.
    Vector<Scalar> increments;
    /// delta(l) = sum_j Delta_j^l.
    Scalar total = 0;
};

/// Score that leaves `source` along walks of exactly `length` edges.
template <typename Scalar>
LengthFlow<Scalar> length_flow(const DirectedMultigraph& g, Node source, std::size_t length, Scalar alpha,
                               Scalar source_score = Scalar(1)) {
    if (source >= g.node_count()) throw std::out_of_range("source node out of range");
    if (length == 0) throw std::invalid_argument("path length must be positive");
    const Eigen::SparseMatrix<Scalar> push = transition_matrix<Scalar>(g).transpose();
    Vector<Scalar> mass = Vector<Scalar>::Zero(static_cast<Eigen::Index>(g.node_count()));
    mass(static_cast<Eigen::Index>(source)) = source_score;
    for (std::size_t l = 0; l < length; ++l) {
        mass = alpha * (push * mass);
    }
    LengthFlow<Scalar> out;
    out.total = mass.sum();
    out.increments = std::move(mass);
    return out;
}

} // namespace linkbomb

#endif // LINKBOMB_FLOW_HPP
