#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "hookset/partition.hpp"

/*
 * Text forms used at the CLI boundary: partitions as "4,2,2", beta-sets as
 * "{2,3,6}" (braces optional on input), and the hook diagram rendered one
 * row per line with left-justified, space-separated hook lengths.
 */

namespace hookset {

struct RenderedDiagram {
    std::vector<std::string> lines;  // line i holds exactly lambda_i tokens

    bool operator==(const RenderedDiagram&) const = default;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

inline int parse_int(std::string_view token, const std::string& what) {
    token = trim(token);
    int value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size())
        throw std::invalid_argument(what + ": '" + std::string(token) + "' is not an integer");
    return value;
}

inline std::vector<int> parse_int_list(std::string_view text, const std::string& what) {
    std::vector<int> out;
    if (trim(text).empty()) return out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        out.push_back(parse_int(text.substr(pos, comma - pos), what));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace detail

/// "4,2,2"; the empty partition renders as the empty string.
inline std::string to_text(const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

/// "{2,3,6}", ascending.
inline std::string to_text(const BetaSet& a) {
    std::string out = "{";
    for (std::size_t i = 0; i < a.elements().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(a.elements()[i]);
    }
    out += '}';
    return out;
}

/// Brace form for plain integer sets (witness output); "{}" when empty.
inline std::string set_text(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    out += '}';
    return out;
}

inline Partition parse_partition(std::string_view text) {
    return Partition(detail::parse_int_list(text, "partition"));
}

/// Accepts "2,3,6" or "{2,3,6}", any element order, whitespace tolerated.
inline BetaSet parse_beta_set(std::string_view text) {
    std::string_view body = detail::trim(text);
    if (!body.empty() && body.front() == '{') {
        if (body.back() != '}')
            throw std::invalid_argument("beta-set: unbalanced braces in '" + std::string(text) + "'");
        body = body.substr(1, body.size() - 2);
    }
    return BetaSet(detail::parse_int_list(body, "beta-set"));
}

/// Hook lengths laid out like the diagram: one line per row, tokens
/// left-justified to the widest hook and single-space separated.
inline RenderedDiagram render_hook_diagram(const Partition& p) {
    RenderedDiagram out;
    const HookGrid grid = hook_grid(p);
    if (grid.rows.empty()) return out;
    const std::size_t width = std::to_string(grid.rows.front().front()).size();
    for (const auto& row : grid.rows) {
        std::string line;
        for (std::size_t j = 0; j < row.size(); ++j) {
            std::string token = std::to_string(row[j]);
            if (j + 1 < row.size()) token.append(width - token.size() + 1, ' ');
            line += token;
        }
        out.lines.push_back(std::move(line));
    }
    return out;
}

}  // namespace hookset
