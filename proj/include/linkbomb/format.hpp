#ifndef LINKBOMB_FORMAT_HPP
#define LINKBOMB_FORMAT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace linkbomb {

/// Shortest round-trip decimal form.
std::string format_double(double x);

/// Empty field for a missing value.
std::string format_optional(const std::optional<double>& x);

std::string join_ids(const std::vector<std::size_t>& ids, char sep = ',');

/// Parses "1,2,3" into ids; throws std::invalid_argument on junk.
std::vector<std::size_t> parse_id_list(std::string_view text);

std::vector<double> parse_double_list(std::string_view text);

} // namespace linkbomb

#endif // LINKBOMB_FORMAT_HPP
