#include "linkbomb/format.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace linkbomb {

std::string format_double(double x) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buf, end);
}

std::string format_optional(const std::optional<double>& x) { return x ? format_double(*x) : std::string{}; }

std::string join_ids(const std::vector<std::size_t>& ids, char sep) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(ids[i]);
    }
    return out;
}

namespace {

template <typename T, typename Parse>
std::vector<T> split_parse(std::string_view text, Parse&& parse) {
    std::vector<T> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        auto token = text.substr(0, comma);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        if (token.empty()) throw std::invalid_argument("empty list element");
        out.push_back(parse(token));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

} // namespace

std::vector<std::size_t> parse_id_list(std::string_view text) {
    return split_parse<std::size_t>(text, [](std::string_view token) {
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw std::invalid_argument("bad node id '" + std::string(token) + "'");
        }
        return value;
    });
}

std::vector<double> parse_double_list(std::string_view text) {
    return split_parse<double>(text, [](std::string_view token) {
        double value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw std::invalid_argument("bad number '" + std::string(token) + "'");
        }
        return value;
    });
}

} // namespace linkbomb
