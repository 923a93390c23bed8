#include "linkbomb/pagerank.hpp"

#include <string>

namespace linkbomb {

std::string_view to_string(AttackPattern pattern) {
    switch (pattern) {
    case AttackPattern::individual: return "individual";
    case AttackPattern::star: return "star";
    case AttackPattern::tree: return "tree";
    case AttackPattern::cycle: return "cycle";
    case AttackPattern::complete: return "complete";
    case AttackPattern::custom: return "custom";
    }
    return "custom";
}

AttackPattern parse_pattern(std::string_view name) {
    for (auto p : {AttackPattern::individual, AttackPattern::star, AttackPattern::tree, AttackPattern::cycle,
                   AttackPattern::complete, AttackPattern::custom}) {
        if (to_string(p) == name) return p;
    }
    throw std::invalid_argument("unknown attack pattern '" + std::string(name) + "'");
}

double closed_form_isolated(AttackPattern pattern, std::size_t attackers, double alpha) {
    if (attackers == 0) throw std::invalid_argument("need at least one attacker");
    if (!(alpha >= 0 && alpha <= 1)) throw std::invalid_argument("alpha must lie in [0, 1]");
    const double k = static_cast<double>(attackers);
    const double p0 = (1.0 - alpha) / (k + 1.0);
    // A single attacker has no peers to link to; every pattern is the individual attack.
    if (attackers == 1 && pattern != AttackPattern::custom) pattern = AttackPattern::individual;
    switch (pattern) {
    case AttackPattern::individual: return p0 * (1.0 + alpha * k);
    case AttackPattern::star:
    case AttackPattern::tree: return p0 * (1.0 + alpha / 2.0 * (k * (1.0 + alpha) + 1.0 - alpha));
    case AttackPattern::cycle: return p0 * (1.0 + alpha * k / (2.0 - alpha));
    case AttackPattern::complete: return p0 * (1.0 + alpha * k / (k * (1.0 - alpha) + alpha));
    case AttackPattern::custom: break;
    }
    throw std::invalid_argument("no closed form for pattern '" + std::string(to_string(pattern)) + "'");
}

} // namespace linkbomb
