#include "linkbomb/attack.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "linkbomb/random.hpp"

namespace linkbomb {

void validate(const AttackSpec& spec, const DirectedMultigraph& g) {
    const auto n = g.node_count();
    if (spec.victim >= n) throw std::out_of_range("victim id out of range");
    if (spec.assignment.size() != spec.attackers.size()) {
        throw std::invalid_argument("assignment count does not match attacker count");
    }
    std::set<Node> seen;
    for (std::size_t i = 0; i < spec.attackers.size(); ++i) {
        const Node a = spec.attackers[i];
        if (a >= n) throw std::out_of_range("attacker id " + std::to_string(a) + " out of range");
        if (!seen.insert(a).second) throw std::invalid_argument("duplicate attacker " + std::to_string(a));
        if (a == spec.victim && !spec.link_farm) throw std::invalid_argument("victim cannot be an attacker");
        for (const auto& e : spec.assignment[i]) {
            if (e.head >= n) throw std::out_of_range("assigned head out of range");
            if (e.head == a) throw std::invalid_argument("assignment contains self-loop at " + std::to_string(a));
            if (e.multiplicity == 0) throw std::invalid_argument("assigned multiplicity must be positive");
        }
    }
}

AttackSpec build_pattern(AttackPattern pattern, std::vector<Node> attackers, Node victim) {
    if (attackers.empty()) throw std::invalid_argument("need at least one attacker");
    {
        std::set<Node> distinct(attackers.begin(), attackers.end());
        if (distinct.size() != attackers.size()) throw std::invalid_argument("duplicate attackers");
        if (distinct.contains(victim)) throw std::invalid_argument("victim cannot be an attacker");
    }
    const std::size_t k = attackers.size();
    AttackSpec spec;
    spec.victim = victim;
    spec.pattern = pattern;
    spec.assignment.assign(k, Assignment{{victim, 1}});
    switch (pattern) {
    case AttackPattern::individual: break;
    case AttackPattern::star:
    case AttackPattern::tree:
        for (std::size_t i = 1; i < k; ++i) spec.assignment[i].push_back({attackers[0], 1});
        break;
    case AttackPattern::cycle:
        if (k >= 2) {
            for (std::size_t i = 0; i < k; ++i) spec.assignment[i].push_back({attackers[(i + 1) % k], 1});
        }
        break;
    case AttackPattern::complete:
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                if (i != j) spec.assignment[i].push_back({attackers[j], 1});
            }
        }
        break;
    case AttackPattern::custom: throw std::invalid_argument("custom attacks are built from explicit assignments");
    }
    spec.attackers = std::move(attackers);
    return spec;
}

DirectedMultigraph apply_attack(DirectedMultigraph g, const AttackSpec& spec) {
    validate(spec, g);
    for (const Node a : spec.attackers) g.clear_out_edges(a);
    for (std::size_t i = 0; i < spec.attackers.size(); ++i) {
        for (const auto& e : spec.assignment[i]) g.add_edge(spec.attackers[i], e.head, e.multiplicity);
    }
    return g;
}

AttackResult attack_magnitude(const DirectedMultigraph& g, const AttackSpec& spec, const PageRankConfig& cfg) {
    const auto attacked = apply_attack(g, spec);
    AttackResult r;
    r.before = compute_pagerank(g, cfg);
    r.after = compute_pagerank(attacked, cfg);
    r.victim_before = r.before[spec.victim];
    r.victim_after = r.after[spec.victim];
    r.magnitude = r.victim_after - r.victim_before;
    r.rank_before = rank_of(r.before, spec.victim);
    r.rank_after = rank_of(r.after, spec.victim);
    return r;
}

bool is_direct_individual(const AttackSpec& spec) {
    return std::all_of(spec.assignment.begin(), spec.assignment.end(), [&](const Assignment& a) {
        return !a.empty() &&
               std::all_of(a.begin(), a.end(), [&](const OutEdge& e) { return e.head == spec.victim; });
    });
}

std::vector<AttackSpec> enumerate_alternative_attacks(const DirectedMultigraph& g, const std::vector<Node>& attackers,
                                                      Node victim, std::size_t budget, std::size_t count,
                                                      std::uint64_t seed, std::span<const Node> targets) {
    if (budget == 0) throw std::invalid_argument("budget must be positive");
    std::vector<AttackSpec> specs;
    if (count == 0) return specs;
    specs.push_back(build_pattern(AttackPattern::individual, attackers, victim));

    std::vector<Node> pool(targets.begin(), targets.end());
    if (pool.empty()) {
        pool.resize(g.node_count());
        for (Node v = 0; v < g.node_count(); ++v) pool[v] = v;
    }
    Rng rng(seed);
    while (specs.size() < count) {
        AttackSpec spec;
        spec.attackers = attackers;
        spec.victim = victim;
        spec.pattern = AttackPattern::custom;
        for (const Node a : attackers) {
            std::map<Node, std::size_t> heads;
            const auto edges = 1 + uniform_index(rng, budget);
            std::size_t placed = 0;
            for (std::size_t attempt = 0; placed < edges && attempt < 64 * edges; ++attempt) {
                const Node h = pool[uniform_index(rng, pool.size())];
                if (h == a) continue;
                ++heads[h];
                ++placed;
            }
            if (heads.empty()) throw std::invalid_argument("target pool offers no non-self target");
            Assignment out;
            for (const auto& [h, m] : heads) out.push_back({h, m});
            spec.assignment.push_back(std::move(out));
        }
        if (is_direct_individual(spec)) spec.pattern = AttackPattern::individual;
        specs.push_back(std::move(spec));
    }
    return specs;
}

} // namespace linkbomb
