#ifndef LINKBOMB_ATTACK_HPP
#define LINKBOMB_ATTACK_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "linkbomb/attack_pattern.hpp"
#include "linkbomb/graph.hpp"
#include "linkbomb/pagerank.hpp"

namespace linkbomb {

struct OutEdge {
    Node head = 0;
    std::size_t multiplicity = 1;

    bool operator==(const OutEdge&) const = default;
};

using Assignment = std::vector<OutEdge>;

/// Replacement out-edges for each attacker; assignment[i] belongs to attackers[i].
struct AttackSpec {
    std::vector<Node> attackers;
    Node victim = 0;
    std::vector<Assignment> assignment;
    AttackPattern pattern = AttackPattern::custom;
    /// Link-farm configurations control the victim's out-edges too.
    bool link_farm = false;

    bool operator==(const AttackSpec&) const = default;
};

struct AttackResult {
    double victim_before = 0;
    double victim_after = 0;
    double magnitude = 0;
    std::size_t rank_before = 0;
    std::size_t rank_after = 0;
    PageRankVector before;
    PageRankVector after;

    /// magnitude / victim_before.
    double gain() const { return magnitude / victim_before; }
};

/// Throws std::invalid_argument (or std::out_of_range for bad ids) if the spec
/// cannot be applied to `g`.
void validate(const AttackSpec& spec, const DirectedMultigraph& g);

AttackSpec build_pattern(AttackPattern pattern, std::vector<Node> attackers, Node victim);

/// Every attacker's out-edges are replaced by its assignment; nothing else changes.
DirectedMultigraph apply_attack(DirectedMultigraph g, const AttackSpec& spec);

AttackResult attack_magnitude(const DirectedMultigraph& g, const AttackSpec& spec, const PageRankConfig& cfg);

/// True when every attacker links to the victim and nowhere else.
bool is_direct_individual(const AttackSpec& spec);

/**
 * `count` specs; index 0 is the direct individual attack, the rest give each
 * attacker 1..budget out-edges to uniformly drawn targets (self-loops skipped).
 * Targets come from `targets` when non-empty, else from every node.
 */
std::vector<AttackSpec> enumerate_alternative_attacks(const DirectedMultigraph& g, const std::vector<Node>& attackers,
                                                      Node victim, std::size_t budget, std::size_t count,
                                                      std::uint64_t seed, std::span<const Node> targets = {});

} // namespace linkbomb

#endif // LINKBOMB_ATTACK_HPP
