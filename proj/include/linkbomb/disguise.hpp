#ifndef LINKBOMB_DISGUISE_HPP
#define LINKBOMB_DISGUISE_HPP

#include <stdexcept>
#include <vector>

#include "linkbomb/attack.hpp"
#include "linkbomb/graph.hpp"
#include "linkbomb/pagerank.hpp"

namespace linkbomb {

/// Candidate scores closer than this are treated as tied (lowest id wins).
inline constexpr double kTieEpsilon = 1e-12;

/// f(u; target): fraction of u's score that reaches target with target only as terminal node.
struct ForwardValueMap {
    Node target = 0;
    Eigen::VectorXd values;
    double alpha = 0;
    double residual = 0;
    std::size_t iterations = 0;

    double operator[](Node u) const { return values(static_cast<Eigen::Index>(u)); }
};

struct DisguisedAttackPlan {
    std::vector<Node> attackers;
    Node victim = 0;
    std::size_t ell = 1;
    Node chosen_node = 0;
    /// f(attacker; victim) achieved by each attacker under the plan.
    std::vector<double> attacker_values;
    AttackSpec spec;
    AttackResult result;
};

class InfeasibleAttack : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ForwardValueMap forward_values(const DirectedMultigraph& g, Node target, double alpha, double tolerance = 1e-12);

/// U_{ell-1}(victim) = {u : d(u, victim) = ell - 1}, sorted.
std::vector<Node> candidate_set(const DirectedMultigraph& g, Node victim, std::size_t ell);

/// V(u): forward value of `attacker` toward `victim` once its out-edges are replaced by one edge to u.
double value_of(const DirectedMultigraph& g, Node attacker, Node u, Node victim, double alpha,
                double tolerance = 1e-12);

/// Best single link for one attacker whose every path to the victim must have length >= ell.
DisguisedAttackPlan optimal_disguised_single(const DirectedMultigraph& g, Node attacker, Node victim,
                                             std::size_t ell, const PageRankConfig& cfg);

/// Best plan in which all attackers link only to the same node of U_{ell-1}; one full solve per candidate.
DisguisedAttackPlan optimal_disguised_joint(const DirectedMultigraph& g, const std::vector<Node>& attackers,
                                            Node victim, std::size_t ell, const PageRankConfig& cfg);

/// True when every attacker's shortest path to the victim in `g` has length >= ell.
bool satisfies_disguise(const DirectedMultigraph& g, const std::vector<Node>& attackers, Node victim,
                        std::size_t ell);

/**
 * Link farm: every member but `target` links only to `target`; `target` then
 * links only to the node u != target with the largest return flow f(u; target).
 * The target is listed last among the spec's attackers.
 */
AttackSpec optimal_link_farm(const DirectedMultigraph& g, const std::vector<Node>& farm_nodes, Node target,
                             const PageRankConfig& cfg);

} // namespace linkbomb

#endif // LINKBOMB_DISGUISE_HPP
