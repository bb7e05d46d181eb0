#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "errors.hpp"

namespace ordinal {

using time_series = std::vector<double>;

/// An m-length vector of samples. When extracted from a series, source_index
/// is the one-based start position and delay the inter-sample spacing.
struct window {
    std::vector<double> values;
    std::optional<std::size_t> source_index;
    std::optional<std::size_t> delay;

    window() = default;
    explicit window(std::vector<double> v) : values(std::move(v)) {}
    window(std::vector<double> v, std::size_t source, std::size_t tau)
        : values(std::move(v)), source_index(source), delay(tau) {}

    std::size_t size() const { return values.size(); }

    bool operator==(const window&) const = default;
};

inline void validate_window(const window& w) {
    if (w.values.empty()) {
        throw empty_window("window must contain at least one sample");
    }
    for (double v : w.values) {
        if (!std::isfinite(v)) {
            throw non_finite_value("window contains a NaN or infinite sample");
        }
    }
}

} // namespace ordinal
