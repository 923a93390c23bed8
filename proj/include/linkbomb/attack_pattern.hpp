#ifndef LINKBOMB_ATTACK_PATTERN_HPP
#define LINKBOMB_ATTACK_PATTERN_HPP

#include <string_view>

namespace linkbomb {

/// Attack shapes. `tree` is realized as the star specialization.
enum class AttackPattern { individual, star, tree, cycle, complete, custom };

std::string_view to_string(AttackPattern pattern);
/// Accepts the lowercase names above; throws std::invalid_argument otherwise.
AttackPattern parse_pattern(std::string_view name);

} // namespace linkbomb

#endif // LINKBOMB_ATTACK_PATTERN_HPP
