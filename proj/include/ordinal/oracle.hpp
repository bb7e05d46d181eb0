#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "analysis.hpp"

// Brute-force verifier. Every structural claim the library relies on is
// re-checked here by exhaustive enumeration over small windows, using
// reference encoders that share no code with the library path: they count
// comparisons directly instead of argsorting. A claim check never calls the
// operation it is meant to certify to produce its own expected value.

namespace ordinal::oracle {

/// Occurrence rank by direct counting: number of strictly smaller values,
/// plus earlier equal values, plus one. The equal-value policies drop or
/// extend the equal-value terms.
inline std::vector<int> reference_amp(const std::vector<double>& v, tie_policy policy) {
    const std::size_t m = v.size();
    std::vector<int> out(m);
    for (std::size_t p = 0; p < m; ++p) {
        int less = 0, eq_before = 0, eq_total = 0;
        for (std::size_t q = 0; q < m; ++q) {
            if (v[q] < v[p]) ++less;
            if (v[q] == v[p]) {
                ++eq_total;
                if (q < p) ++eq_before;
            }
        }
        switch (policy) {
            case tie_policy::occurrence_order: out[p] = less + eq_before + 1; break;
            case tie_policy::smallest_index: out[p] = less + 1; break;
            case tie_policy::largest_index: out[p] = less + eq_total; break;
        }
    }
    return out;
}

/// Ascending arrangement read off the occurrence ranks, then per-group index
/// rewriting by scanning for equal values.
inline std::vector<int> reference_orp(const std::vector<double>& v, tie_policy policy) {
    const std::size_t m = v.size();
    const std::vector<int> occ = reference_amp(v, tie_policy::occurrence_order);
    std::vector<int> order(m);
    for (std::size_t p = 0; p < m; ++p) {
        order[static_cast<std::size_t>(occ[p]) - 1] = static_cast<int>(p) + 1;
    }
    if (policy == tie_policy::occurrence_order) return order;
    std::vector<int> out(m);
    for (std::size_t j = 0; j < m; ++j) {
        const double value = v[static_cast<std::size_t>(order[j]) - 1];
        int rep = order[j];
        for (std::size_t q = 0; q < m; ++q) {
            if (v[q] != value) continue;
            const int candidate = static_cast<int>(q) + 1;
            if (policy == tie_policy::smallest_index ? candidate < rep : candidate > rep) {
                rep = candidate;
            }
        }
        out[j] = rep;
    }
    return out;
}

namespace detail {

inline std::vector<double> reversed(const std::vector<double>& v) {
    return {v.rbegin(), v.rend()};
}

inline std::vector<double> reflected(const std::vector<double>& v) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    const double pivot = *lo + *hi;
    std::vector<double> out;
    out.reserve(v.size());
    for (double x : v) out.push_back(pivot - x);
    return out;
}

inline std::vector<int> reversed_pattern(const std::vector<int>& p) {
    return {p.rbegin(), p.rend()};
}

inline std::vector<int> inverse_permutation(const std::vector<int>& p) {
    std::vector<int> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[static_cast<std::size_t>(p[i]) - 1] = static_cast<int>(i) + 1;
    }
    return out;
}

inline bool is_palindrome(const std::vector<double>& v) {
    return std::equal(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2), v.rbegin());
}

inline bool has_ties(const std::vector<double>& v) {
    for (std::size_t a = 0; a + 1 < v.size(); ++a) {
        for (std::size_t b = a + 1; b < v.size(); ++b) {
            if (v[a] == v[b]) return true;
        }
    }
    return false;
}

constexpr tie_policy all_policies[] = {tie_policy::occurrence_order, tie_policy::smallest_index,
                                       tie_policy::largest_index};
constexpr tie_policy equal_policies[] = {tie_policy::smallest_index, tie_policy::largest_index};

} // namespace detail

/// Every window over the values {1..alphabet_size}, lexicographic order.
inline std::vector<window> enumerate_windows(std::size_t m, std::size_t alphabet_size) {
    if (m < 1) throw empty_window("enumerate_windows: m must be at least 1");
    if (alphabet_size < 1) throw error("enumerate_windows: alphabet must be non-empty");
    // guard the product space; alphabets above m+1 stay available for
    // replaying specific witnesses as long as the universe stays small
    std::uint64_t universe = 1;
    for (std::size_t i = 0; i < m; ++i) {
        universe *= alphabet_size;
        if (m > 6 || universe > 1'000'000) {
            throw universe_too_large("enumerate_windows: " + std::to_string(alphabet_size) + "^" +
                                     std::to_string(m) + " windows exceed the enumeration budget");
        }
    }
    std::vector<window> out;
    out.reserve(universe);
    window w;
    w.values.assign(m, 1.0);
    while (true) {
        out.push_back(w);
        std::size_t pos = m;
        while (pos > 0 && w.values[pos - 1] == static_cast<double>(alphabet_size)) {
            w.values[pos - 1] = 1.0;
            --pos;
        }
        if (pos == 0) break;
        w.values[pos - 1] += 1.0;
    }
    return out;
}

/// Ordered set partitions of {1..n}, counted by recursive enumeration: pick
/// every possible nonempty first block, recurse on the remainder.
inline std::uint64_t weak_ordering_count(std::size_t n) {
    if (n > 12) throw universe_too_large("weak_ordering_count: n too large to enumerate");
    const std::uint32_t full = (n == 0) ? 0u : ((1u << n) - 1u);
    const std::function<std::uint64_t(std::uint32_t)> count = [&](std::uint32_t mask) -> std::uint64_t {
        if (mask == 0) return 1;
        std::uint64_t total = 0;
        // iterate all nonempty submasks of mask
        for (std::uint32_t block = mask; block != 0; block = (block - 1) & mask) {
            total += count(mask & ~block);
        }
        return total;
    };
    return count(full);
}

/// Result of one exhaustive claim check. `verdict` reports the raw outcome
/// (pass iff nothing was violated); claims registered as expected-fail count
/// as satisfied when violations were found, which as_expected() captures.
struct claim_report {
    std::string claim_id;
    std::size_t m = 0;
    std::size_t alphabet_size = 0;
    std::size_t checked = 0;
    std::vector<std::vector<double>> violations; // witness windows, lexicographic
    bool violations_expected = false;
    std::string detail; // diagnostics for non-witness failures (count mismatches)

    std::string verdict() const {
        return violations.empty() && detail.empty() ? "pass" : "fail";
    }

    bool as_expected() const {
        if (!detail.empty()) return false;
        return violations_expected ? !violations.empty() : violations.empty();
    }
};

struct claim_spec {
    std::string_view id;
    bool violations_expected;
    std::string_view description;
};

/// Registry of the structural claims, in reporting order.
inline const std::vector<claim_spec>& claims() {
    static const std::vector<claim_spec> registry = {
        {"amp-time-symmetry-smallest", false,
         "AmP of the reversed window equals the reversed AmP (smallest-index scheme)"},
        {"amp-time-symmetry-largest", false,
         "AmP of the reversed window equals the reversed AmP (largest-index scheme)"},
        {"amp-time-symmetry-none", true,
         "occurrence-order AmPs of reversed windows are NOT reversed patterns"},
        {"orp-amplitude-symmetry-smallest", false,
         "OrP of the reflected window equals the reversed OrP (smallest-index scheme)"},
        {"orp-amplitude-symmetry-largest", false,
         "OrP of the reflected window equals the reversed OrP (largest-index scheme)"},
        {"orp-time-asymmetry", true,
         "OrPs of reversed windows are NOT reversed patterns under any scheme"},
        {"self-symmetric-palindrome", false,
         "palindromic windows have palindromic equal-scheme AmPs"},
        {"same-orp-amp-central-closure", false,
         "OrP == AmP is preserved by the central symmetry image"},
        {"monotone-equal-identity", false,
         "all-up, all-down and all-equal windows have OrP == AmP under every scheme"},
        {"orp-tie-adjacency", false,
         "repeated indexes in equal-scheme OrPs occupy consecutive positions"},
        {"tiefree-inverse", false,
         "on tie-free windows the AmP is the inverse permutation of the OrP"},
        {"catalog-counts", false,
         "pattern catalog sizes match factorials and independently enumerated weak orderings"},
    };
    return registry;
}

namespace detail {

inline bool claim_predicate(std::string_view id, const std::vector<double>& v) {
    using namespace ordinal::oracle;
    if (id == "amp-time-symmetry-smallest" || id == "amp-time-symmetry-largest" ||
        id == "amp-time-symmetry-none") {
        const tie_policy policy = id.ends_with("smallest") ? tie_policy::smallest_index
                                  : id.ends_with("largest") ? tie_policy::largest_index
                                                            : tie_policy::occurrence_order;
        return reference_amp(reversed(v), policy) == reversed_pattern(reference_amp(v, policy));
    }
    if (id == "orp-amplitude-symmetry-smallest" || id == "orp-amplitude-symmetry-largest") {
        const tie_policy policy = id.ends_with("smallest") ? tie_policy::smallest_index
                                                           : tie_policy::largest_index;
        return reference_orp(reflected(v), policy) == reversed_pattern(reference_orp(v, policy));
    }
    if (id == "orp-time-asymmetry") {
        for (tie_policy policy : all_policies) {
            if (reference_orp(reversed(v), policy) != reversed_pattern(reference_orp(v, policy))) {
                return false;
            }
        }
        return true;
    }
    if (id == "self-symmetric-palindrome") {
        if (!is_palindrome(v)) return true;
        for (tie_policy policy : equal_policies) {
            const std::vector<int> a = reference_amp(v, policy);
            if (a != reversed_pattern(a)) return false;
        }
        return true;
    }
    if (id == "same-orp-amp-central-closure") {
        for (tie_policy policy : all_policies) {
            if (reference_orp(v, policy) != reference_amp(v, policy)) continue;
            const std::vector<double> central = reflected(reversed(v));
            if (reference_orp(central, policy) != reference_amp(central, policy)) return false;
        }
        return true;
    }
    if (id == "monotone-equal-identity") {
        bool up = true, down = true, equal = true;
        for (std::size_t i = 0; i + 1 < v.size(); ++i) {
            up = up && v[i] < v[i + 1];
            down = down && v[i] > v[i + 1];
            equal = equal && v[i] == v[i + 1];
        }
        if (!up && !down && !equal) return true;
        for (tie_policy policy : all_policies) {
            if (reference_orp(v, policy) != reference_amp(v, policy)) return false;
        }
        return true;
    }
    if (id == "orp-tie-adjacency") {
        for (tie_policy policy : equal_policies) {
            const std::vector<int> o = reference_orp(v, policy);
            for (std::size_t a = 0; a + 1 < o.size(); ++a) {
                for (std::size_t b = a + 2; b < o.size(); ++b) {
                    if (o[a] == o[b] && o[a] != o[a + 1]) return false;
                }
            }
        }
        return true;
    }
    if (id == "tiefree-inverse") {
        if (has_ties(v)) return true;
        for (tie_policy policy : all_policies) {
            if (reference_amp(v, policy) != inverse_permutation(reference_orp(v, policy))) {
                return false;
            }
        }
        return true;
    }
    throw unknown_claim("no predicate for claim '" + std::string(id) + "'");
}

inline void check_catalog_counts(claim_report& report, std::size_t m, std::size_t alphabet_size) {
    std::uint64_t factorial = 1;
    for (std::size_t i = 2; i <= m; ++i) factorial *= i;
    const std::uint64_t weak = weak_ordering_count(m);

    const auto append = [&report](const std::string& line) {
        if (!report.detail.empty()) report.detail += "; ";
        report.detail += line;
    };

    for (pattern_kind kind : {pattern_kind::orp, pattern_kind::amp}) {
        for (tie_policy policy : all_policies) {
            std::set<std::vector<int>> distinct;
            for (const window& w : enumerate_windows(m, alphabet_size)) {
                distinct.insert(kind == pattern_kind::orp ? reference_orp(w.values, policy)
                                                          : reference_amp(w.values, policy));
            }
            const std::string space = std::string(to_string(kind)) + "/" + to_string(policy);
            if (policy == tie_policy::occurrence_order &&
                distinct.size() != static_cast<std::size_t>(factorial)) {
                append(space + ": expected " + std::to_string(factorial) + " patterns, found " +
                       std::to_string(distinct.size()));
            }
            if (kind == pattern_kind::amp && policy != tie_policy::occurrence_order &&
                distinct.size() != static_cast<std::size_t>(weak)) {
                append(space + ": expected " + std::to_string(weak) + " weak orderings, found " +
                       std::to_string(distinct.size()));
            }
            const pattern_catalog catalog = enumerate_patterns(m, kind, policy);
            if (catalog.size() != distinct.size()) {
                append(space + ": library catalog has " + std::to_string(catalog.size()) +
                       " patterns, reference enumeration found " + std::to_string(distinct.size()));
            }
        }
    }
}

} // namespace detail

/// Exhaustively evaluates one registered claim over every window in
/// {1..alphabet_size}^m. Violating windows are reported in lexicographic
/// order. Throws unknown_claim for unregistered ids.
inline claim_report check_claim(std::string_view claim_id, std::size_t m,
                                std::size_t alphabet_size) {
    const auto& registry = claims();
    const auto spec = std::find_if(registry.begin(), registry.end(),
                                   [&](const claim_spec& c) { return c.id == claim_id; });
    if (spec == registry.end()) {
        throw unknown_claim("claim '" + std::string(claim_id) + "' is not registered");
    }
    claim_report report;
    report.claim_id = std::string(claim_id);
    report.m = m;
    report.alphabet_size = alphabet_size;
    report.violations_expected = spec->violations_expected;

    if (claim_id == "catalog-counts") {
        report.checked = enumerate_windows(m, alphabet_size).size();
        detail::check_catalog_counts(report, m, alphabet_size);
        return report;
    }

    for (const window& w : enumerate_windows(m, alphabet_size)) {
        ++report.checked;
        if (!detail::claim_predicate(claim_id, w.values)) {
            report.violations.push_back(w.values);
        }
    }
    return report;
}

/// Default universe: alphabet {1..m+1}, enough for every strict ordering plus
/// every tie structure with one spare level.
inline claim_report check_claim(std::string_view claim_id, std::size_t m) {
    return check_claim(claim_id, m, m + 1);
}

} // namespace ordinal::oracle
