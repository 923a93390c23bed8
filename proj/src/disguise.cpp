#include "linkbomb/disguise.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "linkbomb/flow.hpp"

namespace linkbomb {

ForwardValueMap forward_values(const DirectedMultigraph& g, Node target, double alpha, double tolerance) {
    const std::vector<char> none(g.node_count(), 0);
    auto sol = solve_absorbing<double>(g, target, none, alpha, tolerance);
    ForwardValueMap out;
    out.target = target;
    out.alpha = alpha;
    out.residual = sol.error_bound;
    out.iterations = sol.iterations;
    out.values = std::move(sol.values);
    return out;
}

std::vector<Node> candidate_set(const DirectedMultigraph& g, Node victim, std::size_t ell) {
    if (ell == 0) throw std::invalid_argument("ell must be at least 1");
    const auto dist = distances_to(g, victim);
    std::vector<Node> out;
    for (Node u = 0; u < g.node_count(); ++u) {
        if (dist[u] == ell - 1) out.push_back(u);
    }
    return out;
}

double value_of(const DirectedMultigraph& g, Node attacker, Node u, Node victim, double alpha, double tolerance) {
    if (u == attacker) throw std::invalid_argument("attacker cannot link to itself");
    auto probe = remove_out_edges(g, attacker);
    probe.add_edge(attacker, u);
    return forward_values(probe, victim, alpha, tolerance)[attacker];
}

bool satisfies_disguise(const DirectedMultigraph& g, const std::vector<Node>& attackers, Node victim,
                        std::size_t ell) {
    const auto dist = distances_to(g, victim);
    return std::all_of(attackers.begin(), attackers.end(), [&](Node a) { return dist.at(a) >= ell; });
}

namespace {

std::vector<Node> usable_candidates(const DirectedMultigraph& stripped, const std::vector<Node>& attackers,
                                    Node victim, std::size_t ell) {
    auto candidates = candidate_set(stripped, victim, ell);
    std::erase_if(candidates, [&](Node u) {
        return (ell >= 2 && u == victim) || std::find(attackers.begin(), attackers.end(), u) != attackers.end();
    });
    if (candidates.empty()) {
        throw InfeasibleAttack("no node at distance " + std::to_string(ell - 1) + " from victim " +
                               std::to_string(victim));
    }
    return candidates;
}

AttackSpec all_link_to(const std::vector<Node>& attackers, Node victim, Node head) {
    AttackSpec spec;
    spec.attackers = attackers;
    spec.victim = victim;
    spec.assignment.assign(attackers.size(), Assignment{{head, 1}});
    spec.pattern = head == victim ? AttackPattern::individual : AttackPattern::custom;
    return spec;
}

} // namespace

DisguisedAttackPlan optimal_disguised_single(const DirectedMultigraph& g, Node attacker, Node victim,
                                             std::size_t ell, const PageRankConfig& cfg) {
    if (attacker == victim) throw std::invalid_argument("victim cannot be an attacker");
    const auto stripped = remove_out_edges(g, attacker);
    const auto candidates = usable_candidates(stripped, {attacker}, victim, ell);

    Node best = candidates.front();
    double best_value = -1;
    for (const Node u : candidates) {
        const double v = value_of(stripped, attacker, u, victim, cfg.alpha, cfg.tolerance);
        if (v > best_value + kTieEpsilon) {
            best = u;
            best_value = v;
        }
    }
    DisguisedAttackPlan plan;
    plan.attackers = {attacker};
    plan.victim = victim;
    plan.ell = ell;
    plan.chosen_node = best;
    plan.attacker_values = {best_value};
    plan.spec = all_link_to(plan.attackers, victim, best);
    plan.result = attack_magnitude(g, plan.spec, cfg);
    return plan;
}

DisguisedAttackPlan optimal_disguised_joint(const DirectedMultigraph& g, const std::vector<Node>& attackers,
                                            Node victim, std::size_t ell, const PageRankConfig& cfg) {
    if (attackers.empty()) throw std::invalid_argument("need at least one attacker");
    if (std::find(attackers.begin(), attackers.end(), victim) != attackers.end()) {
        throw std::invalid_argument("victim cannot be an attacker");
    }
    auto stripped = g;
    for (const Node a : attackers) stripped.clear_out_edges(a);
    const auto candidates = usable_candidates(stripped, attackers, victim, ell);

    DisguisedAttackPlan plan;
    plan.attackers = attackers;
    plan.victim = victim;
    plan.ell = ell;
    bool have = false;
    for (const Node w : candidates) {
        auto spec = all_link_to(attackers, victim, w);
        auto result = attack_magnitude(g, spec, cfg);
        if (!have || result.victim_after > plan.result.victim_after + kTieEpsilon) {
            plan.chosen_node = w;
            plan.spec = std::move(spec);
            plan.result = std::move(result);
            have = true;
        }
    }
    const auto f = forward_values(apply_attack(g, plan.spec), victim, cfg.alpha, cfg.tolerance);
    for (const Node a : attackers) plan.attacker_values.push_back(f[a]);
    return plan;
}

AttackSpec optimal_link_farm(const DirectedMultigraph& g, const std::vector<Node>& farm_nodes, Node target,
                             const PageRankConfig& cfg) {
    if (farm_nodes.size() < 2) throw std::invalid_argument("a link farm needs at least two nodes");
    if (std::find(farm_nodes.begin(), farm_nodes.end(), target) == farm_nodes.end()) {
        throw std::invalid_argument("target must belong to the farm");
    }
    AttackSpec spec;
    spec.victim = target;
    spec.link_farm = true;
    spec.pattern = AttackPattern::custom;
    for (const Node a : farm_nodes) {
        if (a == target) continue;
        spec.attackers.push_back(a);
        spec.assignment.push_back({{target, 1}});
    }
    {
        std::set<Node> distinct(farm_nodes.begin(), farm_nodes.end());
        if (distinct.size() != farm_nodes.size()) throw std::invalid_argument("duplicate farm nodes");
    }

    // Forward values toward the target do not depend on the target's own
    // out-edges, so one solve on the direct-attack graph scores every choice:
    // linking target -> u returns alpha * f(u; target) of its score.
    const auto direct = apply_attack(g, spec);
    const auto f = forward_values(direct, target, cfg.alpha, cfg.tolerance);
    Node best = target == 0 ? 1 : 0;
    double best_value = -1;
    for (Node u = 0; u < g.node_count(); ++u) {
        if (u == target) continue;
        if (f[u] > best_value + kTieEpsilon) {
            best = u;
            best_value = f[u];
        }
    }
    spec.attackers.push_back(target);
    spec.assignment.push_back({{best, 1}});
    validate(spec, g);
    return spec;
}

} // namespace linkbomb
