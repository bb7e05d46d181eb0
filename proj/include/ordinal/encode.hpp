#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "pattern.hpp"
#include "ranking.hpp"

namespace ordinal {

/// Original permutation: the source positions of the values after ascending
/// reordering. Under the equal-value policies every member of an equality
/// group reports the group's smallest (largest) source index, so repeated
/// indexes always sit in consecutive positions.
inline pattern orp(const window& w, tie_policy policy) {
    ranked_window r = rank_with_ties(w);
    pattern p{pattern_kind::orp, std::move(r.order), policy};
    if (policy != tie_policy::occurrence_order) {
        std::size_t offset = 0;
        for (const auto& group : r.groups) {
            const int rep = policy == tie_policy::smallest_index ? group.front() : group.back();
            for (std::size_t i = 0; i < group.size(); ++i) {
                p.indexes[offset + i] = rep;
            }
            offset += group.size();
        }
    }
    return p;
}

/// Amplitude permutation: the ascending rank held by each source position.
/// Under the equal-value policies every member of an equality group receives
/// the group's smallest (largest) rank; repeats need not be consecutive.
inline pattern amp(const window& w, tie_policy policy) {
    ranked_window r = rank_with_ties(w);
    pattern p{pattern_kind::amp, std::move(r.ranks), policy};
    if (policy != tie_policy::occurrence_order) {
        std::size_t offset = 0;
        for (const auto& group : r.groups) {
            const int rep = policy == tie_policy::smallest_index
                                ? static_cast<int>(offset) + 1
                                : static_cast<int>(offset + group.size());
            for (int pos : group) {
                p.indexes[static_cast<std::size_t>(pos) - 1] = rep;
            }
            offset += group.size();
        }
    }
    return p;
}

/// Inverse permutation with the kind flipped: for any tie-free window,
/// inverse(orp(w)) == amp(w) and vice versa.
inline pattern inverse(const pattern& p) {
    const std::size_t m = p.indexes.size();
    pattern out;
    out.kind = p.kind == pattern_kind::orp ? pattern_kind::amp : pattern_kind::orp;
    out.policy = p.policy;
    out.indexes.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        const int v = p.indexes[i];
        if (v < 1 || static_cast<std::size_t>(v) > m || out.indexes[static_cast<std::size_t>(v) - 1] != 0) {
            throw not_invertible("pattern with repeated or out-of-range indexes has no inverse: " +
                                 to_string(p));
        }
        out.indexes[static_cast<std::size_t>(v) - 1] = static_cast<int>(i) + 1;
    }
    return out;
}

namespace detail {

// Equal-scheme AmP multisets are fixed by the group sizes: the t-th group (in
// ascending value order, sizes s_1..s_T) contributes s_t copies of rank
// c_{t-1}+1 under smallest_index and of c_t under largest_index, with c_t the
// cumulative size. Positions are free, so validity is a check on the sorted
// unique values and their multiplicities.
inline bool valid_equal_amp(std::span<const int> ixs, std::size_t m, tie_policy policy) {
    std::vector<int> uniq(ixs.begin(), ixs.end());
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    if (policy == tie_policy::smallest_index) {
        int expect = 1;
        for (int v : uniq) {
            if (v != expect) return false;
            expect += static_cast<int>(std::count(ixs.begin(), ixs.end(), v));
        }
        return expect == static_cast<int>(m) + 1;
    }
    int prev = 0;
    for (int v : uniq) {
        if (std::count(ixs.begin(), ixs.end(), v) != v - prev) return false;
        prev = v;
    }
    return prev == static_cast<int>(m);
}

// An equal-scheme OrP is a sequence of maximal constant runs, one run per
// equality group, carrying the group's smallest (largest) source index. Run
// values must be distinct, and the unused indexes must be assignable as group
// members above (below) their run's value. Greedy from the most constrained
// run outward decides feasibility.
inline bool valid_equal_orp(std::span<const int> ixs, std::size_t m, tie_policy policy) {
    std::vector<std::pair<int, int>> runs; // value, length
    for (int v : ixs) {
        if (!runs.empty() && runs.back().first == v) {
            ++runs.back().second;
        } else {
            runs.push_back({v, 1});
        }
    }
    std::vector<char> is_run_value(m + 1, 0);
    for (const auto& [v, len] : runs) {
        if (is_run_value[static_cast<std::size_t>(v)]) return false; // value split across runs
        is_run_value[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<int> fillers;
    for (int v = 1; v <= static_cast<int>(m); ++v) {
        if (!is_run_value[static_cast<std::size_t>(v)]) fillers.push_back(v);
    }
    if (policy == tie_policy::smallest_index) {
        // run value = group minimum, fillers must lie above it; serve the
        // largest minima first with the largest fillers
        std::sort(runs.begin(), runs.end(), [](auto a, auto b) { return a.first > b.first; });
        std::sort(fillers.begin(), fillers.end(), std::greater<>());
        std::size_t next = 0;
        for (const auto& [v, len] : runs) {
            for (int k = 1; k < len; ++k) {
                if (next >= fillers.size() || fillers[next] <= v) return false;
                ++next;
            }
        }
        return next == fillers.size();
    }
    // largest_index: run value = group maximum, fillers must lie below it
    std::sort(runs.begin(), runs.end(), [](auto a, auto b) { return a.first < b.first; });
    std::sort(fillers.begin(), fillers.end());
    std::size_t next = 0;
    for (const auto& [v, len] : runs) {
        for (int k = 1; k < len; ++k) {
            if (next >= fillers.size() || fillers[next] >= v) return false;
            ++next;
        }
    }
    return next == fillers.size();
}

} // namespace detail

/// True iff some window of length m produces exactly these indexes under the
/// given kind and policy. Total function, no exceptions; equivalent to
/// membership in enumerate_patterns(m, kind, policy) but computed directly.
inline bool is_valid_pattern(std::span<const int> indexes, std::size_t m, pattern_kind kind,
                             tie_policy policy) {
    if (m == 0 || indexes.size() != m) return false;
    for (int v : indexes) {
        if (v < 1 || static_cast<std::size_t>(v) > m) return false;
    }
    if (policy == tie_policy::occurrence_order) {
        // every permutation and nothing else
        std::vector<char> seen(m + 1, 0);
        for (int v : indexes) {
            if (seen[static_cast<std::size_t>(v)]) return false;
            seen[static_cast<std::size_t>(v)] = 1;
        }
        return true;
    }
    return kind == pattern_kind::amp ? detail::valid_equal_amp(indexes, m, policy)
                                     : detail::valid_equal_orp(indexes, m, policy);
}

inline bool is_valid_pattern(const pattern& p, std::size_t m) {
    return is_valid_pattern(p.indexes, m, p.kind, p.policy);
}

} // namespace ordinal
