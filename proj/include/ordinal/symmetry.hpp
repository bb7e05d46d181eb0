#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "encode.hpp"

namespace ordinal {

/// The two vector reflections and their composition. central is the same
/// transform in either composition order.
enum class symmetry_kind { time_reversal, amplitude_reflection, central };

constexpr const char* to_string(symmetry_kind s) {
    switch (s) {
        case symmetry_kind::time_reversal: return "time-reversal";
        case symmetry_kind::amplitude_reflection: return "amplitude-reflection";
        case symmetry_kind::central: return "central";
    }
    return "?";
}

/// Values in reversed order. The start position no longer refers to the
/// source series, so source_index is dropped; the delay is kept.
inline window time_reverse(const window& w) {
    window out;
    out.values.assign(w.values.rbegin(), w.values.rend());
    out.delay = w.delay;
    return out;
}

/// Each value v mapped to (max + min) - v: reflection about the mid-range
/// level. Rank order is exactly reversed while equality groups and positions
/// are preserved, so provenance fields stay meaningful.
inline window amplitude_reflect(const window& w) {
    validate_window(w);
    auto [lo, hi] = std::minmax_element(w.values.begin(), w.values.end());
    const double pivot = *lo + *hi;
    window out = w;
    for (double& v : out.values) {
        v = pivot - v;
    }
    return out;
}

inline window apply_symmetry(const window& w, symmetry_kind s) {
    switch (s) {
        case symmetry_kind::time_reversal: return time_reverse(w);
        case symmetry_kind::amplitude_reflection: return amplitude_reflect(w);
        case symmetry_kind::central: return amplitude_reflect(time_reverse(w));
    }
    throw error("unreachable symmetry kind");
}

inline pattern reverse_pattern(const pattern& p) {
    pattern out = p;
    std::reverse(out.indexes.begin(), out.indexes.end());
    return out;
}

/// True iff the transformed window has exactly the same values (bitwise
/// numeric equality, consistent with the exact-equality tie rule).
inline bool is_self_symmetric(const window& w, symmetry_kind s) {
    return apply_symmetry(w, s).values == w.values;
}

/// The realizable patterns for one (m, kind, policy) space, sorted.
struct pattern_catalog {
    std::size_t m = 0;
    pattern_kind kind = pattern_kind::orp;
    tie_policy policy = tie_policy::occurrence_order;
    std::vector<pattern> patterns;

    std::size_t size() const { return patterns.size(); }

    bool contains(const pattern& p) const {
        return std::binary_search(patterns.begin(), patterns.end(), p);
    }
};

/// Every realizable pattern, by enumerating all windows over the values
/// {1..m}. m distinct levels realize every strict ordering and repeated
/// levels every tie structure, so no pattern is missed; the oracle's
/// catalog-counts claim re-derives the counts over a larger alphabet.
inline pattern_catalog enumerate_patterns(std::size_t m, pattern_kind kind, tie_policy policy) {
    if (m < 1) {
        throw empty_window("enumerate_patterns: m must be at least 1");
    }
    if (m > 6) {
        throw dimension_too_large("enumerate_patterns: m > 6 is not supported");
    }
    pattern_catalog catalog{m, kind, policy, {}};
    std::set<std::vector<int>> seen;
    window w;
    w.values.assign(m, 1.0);
    while (true) {
        pattern p = kind == pattern_kind::orp ? orp(w, policy) : amp(w, policy);
        seen.insert(std::move(p.indexes));
        // odometer over {1..m}^m, lexicographic
        std::size_t pos = m;
        while (pos > 0 && w.values[pos - 1] == static_cast<double>(m)) {
            w.values[pos - 1] = 1.0;
            --pos;
        }
        if (pos == 0) break;
        w.values[pos - 1] += 1.0;
    }
    catalog.patterns.reserve(seen.size());
    for (auto& indexes : seen) {
        catalog.patterns.push_back(pattern{kind, indexes, policy});
    }
    return catalog;
}

// Pattern-level symmetry maps. Which window transform reduces to a pure
// pattern operation depends on the pattern kind:
//
//   time reversal         AmP: reverse the pattern    OrP: no pattern-level map
//   amplitude reflection  OrP: reverse the pattern    AmP: no pattern-level map
//   central               either kind: reverse, complement every index
//                         v -> m+1-v, and swap smallest_index <-> largest_index
//
// The maps keep the tie policy for the single reflections and flip it for the
// central composition. They require an equal-value policy: occurrence-order
// patterns do not record the tie structure, so no pattern-level map exists for
// them and the transformed window must be encoded instead. All three maps are
// machine-checked exhaustively by the oracle claims.

/// The pattern of the transformed window, computed at pattern level.
/// Throws unsupported_combination for (time_reversal, OrP), for
/// (amplitude_reflection, AmP), and for occurrence_order patterns.
inline pattern pattern_counterpart(const pattern& p, symmetry_kind s) {
    if (p.policy == tie_policy::occurrence_order) {
        throw unsupported_combination(
            "occurrence-order patterns do not determine the tie structure; "
            "encode the transformed window instead");
    }
    switch (s) {
        case symmetry_kind::time_reversal:
            if (p.kind != pattern_kind::amp) {
                throw unsupported_combination(
                    "time reversal has no pattern-level map for OrPs; encode the reversed window");
            }
            return reverse_pattern(p);
        case symmetry_kind::amplitude_reflection:
            if (p.kind != pattern_kind::orp) {
                throw unsupported_combination(
                    "amplitude reflection has no pattern-level map for AmPs; "
                    "encode the reflected window");
            }
            return reverse_pattern(p);
        case symmetry_kind::central: {
            const int m = static_cast<int>(p.indexes.size());
            pattern out = p;
            out.policy = p.policy == tie_policy::smallest_index ? tie_policy::largest_index
                                                                : tie_policy::smallest_index;
            for (std::size_t i = 0; i < p.indexes.size(); ++i) {
                out.indexes[i] = m + 1 - p.indexes[p.indexes.size() - 1 - i];
            }
            return out;
        }
    }
    throw error("unreachable symmetry kind");
}

} // namespace ordinal
