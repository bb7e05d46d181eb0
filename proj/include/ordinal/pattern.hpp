#pragma once

#include <charconv>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace ordinal {

/// How indexes are assigned inside groups of equal values.
///
///   occurrence_order  ties keep their order of appearance; the scheme of a
///                     plain stable argsort, patterns are always permutations
///   smallest_index    every member of an equality group reports the group's
///                     smallest index (smallest rank for amplitude patterns)
///   largest_index     the symmetric choice, largest index / largest rank
enum class tie_policy { occurrence_order, smallest_index, largest_index };

enum class pattern_kind { orp, amp };

constexpr const char* to_string(tie_policy p) {
    switch (p) {
        case tie_policy::occurrence_order: return "none";
        case tie_policy::smallest_index: return "smallest";
        case tie_policy::largest_index: return "largest";
    }
    return "?";
}

constexpr const char* to_string(pattern_kind k) {
    return k == pattern_kind::orp ? "OrP" : "AmP";
}

/// An ordinal pattern: m one-based indexes. Under the equal-value policies
/// indexes may repeat; under occurrence_order they form a permutation.
///
/// An OrP answers "where did the j-th smallest value come from", an AmP
/// answers "which rank does the i-th value hold".
struct pattern {
    pattern_kind kind = pattern_kind::orp;
    std::vector<int> indexes;
    tie_policy policy = tie_policy::occurrence_order;

    std::size_t dim() const { return indexes.size(); }

    auto operator<=>(const pattern&) const = default;
};

/// Canonical text form, e.g. "AmP:3,1,5,1,4". The policy is not part of the
/// key; callers record it separately.
inline std::string to_string(const pattern& p) {
    std::string out = to_string(p.kind);
    out += ':';
    for (std::size_t i = 0; i < p.indexes.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(p.indexes[i]);
    }
    return out;
}

inline pattern parse_pattern(std::string_view text, tie_policy policy) {
    pattern p;
    p.policy = policy;
    if (text.starts_with("OrP:")) {
        p.kind = pattern_kind::orp;
    } else if (text.starts_with("AmP:")) {
        p.kind = pattern_kind::amp;
    } else {
        throw error("pattern text must start with 'OrP:' or 'AmP:': " + std::string(text));
    }
    std::string_view body = text.substr(4);
    if (body.empty()) {
        throw error("pattern text has no indexes: " + std::string(text));
    }
    while (!body.empty()) {
        std::size_t comma = body.find(',');
        std::string_view tok = body.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 1) {
            throw error("bad pattern index '" + std::string(tok) + "' in: " + std::string(text));
        }
        p.indexes.push_back(value);
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
        if (body.empty()) {
            throw error("trailing comma in pattern text: " + std::string(text));
        }
    }
    return p;
}

} // namespace ordinal
