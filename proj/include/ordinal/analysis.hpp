#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "symmetry.hpp"

namespace ordinal {

struct embedding_params {
    std::size_t m = 2;
    std::size_t tau = 1;

    bool operator==(const embedding_params&) const = default;
};

inline void validate_params(const embedding_params& p) {
    if (p.m < 1) throw empty_window("embedding dimension m must be at least 1");
    if (p.tau < 1) throw error("embedding delay tau must be at least 1");
}

/// Number of overlapping windows: L - (m-1)*tau, which must be >= 1.
inline std::size_t window_count(std::size_t series_length, const embedding_params& p) {
    validate_params(p);
    const std::size_t reach = (p.m - 1) * p.tau;
    if (series_length < reach + 1) {
        throw series_too_short("series of length " + std::to_string(series_length) +
                               " is too short for m=" + std::to_string(p.m) +
                               ", tau=" + std::to_string(p.tau));
    }
    return series_length - reach;
}

inline void validate_series(std::span<const double> series) {
    for (double v : series) {
        if (!std::isfinite(v)) {
            throw non_finite_value("series contains a NaN or infinite sample");
        }
    }
}

/// All overlapping delay windows, stride 1. Window i (one-based) holds the
/// samples at positions i, i+tau, ..., i+(m-1)tau.
inline std::vector<window> embed(std::span<const double> series, const embedding_params& p) {
    validate_series(series);
    const std::size_t n = window_count(series.size(), p);
    std::vector<window> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        window w;
        w.values.reserve(p.m);
        for (std::size_t k = 0; k < p.m; ++k) {
            w.values.push_back(series[i + k * p.tau]);
        }
        w.source_index = i + 1;
        w.delay = p.tau;
        out.push_back(std::move(w));
    }
    return out;
}

/// Patterns of all windows, in window order. Streams over the series without
/// materializing the window list.
inline std::vector<pattern> encode_series(std::span<const double> series,
                                          const embedding_params& p, pattern_kind kind,
                                          tie_policy policy) {
    validate_series(series);
    const std::size_t n = window_count(series.size(), p);
    std::vector<pattern> out;
    out.reserve(n);
    window w;
    for (std::size_t i = 0; i < n; ++i) {
        w.values.clear();
        for (std::size_t k = 0; k < p.m; ++k) {
            w.values.push_back(series[i + k * p.tau]);
        }
        out.push_back(kind == pattern_kind::orp ? orp(w, policy) : amp(w, policy));
    }
    return out;
}

/// Frequency map over one pattern space. Counts sum to total; probabilities
/// are count/total.
struct pattern_distribution {
    std::map<pattern, std::uint64_t> counts;
    std::uint64_t total = 0;
    std::size_t m = 0;
    pattern_kind kind = pattern_kind::orp;
    tie_policy policy = tie_policy::occurrence_order;
    std::optional<embedding_params> params;

    double probability(const pattern& p) const {
        auto it = counts.find(p);
        return it == counts.end() ? 0.0
                                  : static_cast<double>(it->second) / static_cast<double>(total);
    }
};

inline pattern_distribution distribution(std::span<const pattern> patterns,
                                         std::optional<embedding_params> params = std::nullopt) {
    if (patterns.empty()) {
        throw empty_input("cannot build a distribution from an empty pattern sequence");
    }
    pattern_distribution d;
    d.m = patterns.front().dim();
    d.kind = patterns.front().kind;
    d.policy = patterns.front().policy;
    d.params = params;
    for (const pattern& p : patterns) {
        if (p.dim() != d.m || p.kind != d.kind || p.policy != d.policy) {
            throw mixed_pattern_spaces("patterns disagree on (m, kind, policy): " + to_string(p));
        }
        ++d.counts[p];
        ++d.total;
    }
    return d;
}

/// Shannon entropy of the distribution, natural log. Normalization divides by
/// the log of the realizable catalog size for the distribution's pattern
/// space (not m!, which would under-use [0,1] whenever ties are representable).
inline double permutation_entropy(const pattern_distribution& d, bool normalize) {
    if (d.total < 1) {
        throw empty_input("entropy of an empty distribution is undefined");
    }
    double h = 0.0;
    for (const auto& [p, count] : d.counts) {
        if (count == 0) continue;
        const double prob = static_cast<double>(count) / static_cast<double>(d.total);
        h -= prob * std::log(prob);
    }
    if (!normalize) return h;
    const std::size_t catalog = enumerate_patterns(d.m, d.kind, d.policy).size();
    if (catalog <= 1) return 0.0; // m = 1: the only distribution is deterministic
    return h / std::log(static_cast<double>(catalog));
}

/// One forward/reversed pattern pair of a distribution, keyed by the
/// lexicographically smaller side. Palindromic patterns pair with themselves.
struct reversal_pair {
    pattern forward;
    pattern reversed;
    double p_forward = 0.0;
    double p_reversed = 0.0;

    double contribution() const { return std::abs(p_forward - p_reversed); }
};

namespace detail {

inline void require_reversible_space(const pattern_distribution& d) {
    if (d.kind != pattern_kind::amp) {
        throw unsupported_pattern_space(
            "time reversal is not a pattern-level map for OrPs; "
            "irreversibility requires amplitude patterns");
    }
    if (d.policy == tie_policy::occurrence_order) {
        throw unsupported_pattern_space(
            "occurrence-order patterns are not reversal-sound; "
            "use an equal-value tie policy");
    }
}

} // namespace detail

/// All forward/reversed pairs with either side observed, sorted by the
/// forward pattern. Requires an AmP distribution under an equal-value policy.
inline std::vector<reversal_pair> reversal_pairs(const pattern_distribution& d) {
    detail::require_reversible_space(d);
    std::vector<reversal_pair> out;
    for (const auto& [p, count] : d.counts) {
        pattern r = reverse_pattern(p);
        if (r < p && d.counts.contains(r)) continue; // already emitted from the other side
        reversal_pair pair;
        pair.forward = std::min(p, r);
        pair.reversed = std::max(p, r);
        pair.p_forward = d.probability(pair.forward);
        pair.p_reversed = d.probability(pair.reversed);
        out.push_back(std::move(pair));
    }
    std::sort(out.begin(), out.end(),
              [](const reversal_pair& a, const reversal_pair& b) { return a.forward < b.forward; });
    return out;
}

/// Total-variation distance between the distribution and its time-reversed
/// image: (1/2) * sum over patterns of |p(pi) - p(reverse(pi))|, in [0, 1].
/// Zero exactly when every pattern is as frequent as its reversal.
inline double irreversibility_index(const pattern_distribution& d) {
    detail::require_reversible_space(d);
    if (d.total < 1) {
        throw empty_input("irreversibility of an empty distribution is undefined");
    }
    double index = 0.0;
    for (const reversal_pair& pair : reversal_pairs(d)) {
        if (pair.forward == pair.reversed) continue;
        index += pair.contribution();
    }
    return index;
}

/// Uniform quantization to `levels` bins over [min, max]; each sample maps to
/// its bin midpoint. Order-preserving, deliberately tie-inducing. A constant
/// series is returned unchanged.
inline time_series quantize(std::span<const double> series, std::size_t levels) {
    if (levels < 2) throw error("quantize requires at least 2 levels");
    validate_series(series);
    if (series.empty()) return {};
    auto [lo_it, hi_it] = std::minmax_element(series.begin(), series.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    if (lo == hi) return time_series(series.begin(), series.end());
    const double width = (hi - lo) / static_cast<double>(levels);
    time_series out;
    out.reserve(series.size());
    for (double v : series) {
        auto bin = static_cast<std::size_t>((v - lo) / width);
        bin = std::min(bin, levels - 1);
        out.push_back(lo + (static_cast<double>(bin) + 0.5) * width);
    }
    return out;
}

} // namespace ordinal
