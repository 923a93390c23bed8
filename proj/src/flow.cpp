#include "linkbomb/flow.hpp"

#include <cmath>
#include <string>

namespace linkbomb {

namespace {

std::vector<char> exclusion_mask(const DirectedMultigraph& g, const FlowQuery& q) {
    if (q.source >= g.node_count() || q.target >= g.node_count()) {
        throw std::out_of_range("flow query endpoint out of range");
    }
    if (!(q.alpha >= 0 && q.alpha <= 1)) throw std::invalid_argument("alpha must lie in [0, 1]");
    std::vector<char> mask(g.node_count(), 0);
    for (Node x : q.excluded) {
        mask.at(x) = 1;
    }
    return mask;
}

} // namespace

FlowResult flow_fraction(const DirectedMultigraph& g, const FlowQuery& q, double tolerance) {
    auto blocked = exclusion_mask(g, q);
    blocked[q.target] = 0;
    const auto sol = solve_absorbing<double>(g, q.target, blocked, q.alpha, tolerance);

    FlowResult result;
    result.method = FlowMethod::linear_solve;
    result.iterations = sol.iterations;
    if (g.is_dangling(q.source)) return result;
    // First step out of the source, so an excluded source (or source == target)
    // still acts as the origin.
    double sum = 0;
    for (const auto& [w, mult] : g.out_edges(q.source)) {
        sum += static_cast<double>(mult) * sol.values(static_cast<Eigen::Index>(w));
    }
    result.fraction = q.alpha * sum / static_cast<double>(g.out_degree(q.source));
    return result;
}

namespace {

struct PathWalker {
    const DirectedMultigraph& g;
    const std::vector<char>& blocked;
    Node target;
    double alpha;
    std::size_t max_len;
    std::size_t max_paths;
    std::size_t expanded = 0;
    double sum = 0;

    void walk(Node at, double weight, std::size_t depth) {
        const double share = alpha * weight / static_cast<double>(g.out_degree(at));
        for (const auto& [w, mult] : g.out_edges(at)) {
            if (++expanded > max_paths) {
                throw std::runtime_error("path enumeration exceeded " + std::to_string(max_paths) + " edges");
            }
            const double reach = share * static_cast<double>(mult);
            if (w == target) {
                sum += reach;
            } else if (!blocked[w] && depth + 1 < max_len && !g.is_dangling(w)) {
                walk(w, reach, depth + 1);
            }
        }
    }
};

} // namespace

FlowResult flow_fraction_bruteforce(const DirectedMultigraph& g, const FlowQuery& q, std::size_t max_len,
                                    std::size_t max_paths) {
    if (max_len == 0) throw std::invalid_argument("max_len must be positive");
    const auto blocked = exclusion_mask(g, q);

    FlowResult result;
    result.method = FlowMethod::enumeration;
    if (q.alpha < 1) {
        result.tail_bound = std::pow(q.alpha, static_cast<double>(max_len + 1)) / (1.0 - q.alpha);
    } else if (is_acyclic(g) && max_len + 1 >= g.node_count()) {
        result.tail_bound = 0;  // every path already enumerated
    } else {
        throw std::invalid_argument("tail bound unavailable for alpha = 1 unless the graph is acyclic "
                                    "and max_len >= N - 1");
    }
    if (g.is_dangling(q.source)) return result;

    PathWalker walker{g, blocked, q.target, q.alpha, max_len, max_paths};
    walker.walk(q.source, 1.0, 0);
    result.fraction = walker.sum;
    return result;
}

double cycle_amplification(double gamma) {
    if (!(gamma >= 0 && gamma < 1)) throw std::invalid_argument("cycle fraction must lie in [0, 1)");
    return 1.0 / (1.0 - gamma);
}

double attack_magnitude_formula(double delta, double gamma_victim, double rho_victim_attacker,
                                double attacker_score) {
    if (delta < 0) throw std::invalid_argument("flow must be nonnegative");
    if (!(attacker_score > 0)) throw std::invalid_argument("attacker score must be positive");
    const double denom = 1.0 - gamma_victim - rho_victim_attacker * delta / attacker_score;
    if (!(denom > 0)) throw std::domain_error("amplification denominator is not positive");
    return delta / denom;
}

} // namespace linkbomb
