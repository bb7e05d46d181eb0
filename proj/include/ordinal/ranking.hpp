#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "window.hpp"

namespace ordinal {

/// Stable ascending arrangement of a window.
///
///   order[j]   one-based source position of the (j+1)-th smallest value;
///              equal values keep their occurrence order
///   ranks[p]   one-based position of source element p+1 inside `order`
///              (the occurrence-order amplitude ranks, before any rewriting)
///   groups     maximal equal-value blocks of source positions, one block per
///              distinct value in ascending value order, positions increasing
///              inside each block
struct ranked_window {
    std::vector<int> order;
    std::vector<int> ranks;
    std::vector<std::vector<int>> groups;
};

inline ranked_window rank_with_ties(const window& w) {
    validate_window(w);
    const std::size_t m = w.values.size();

    ranked_window r;
    r.order.resize(m);
    std::iota(r.order.begin(), r.order.end(), 1);
    std::stable_sort(r.order.begin(), r.order.end(),
                     [&](int a, int b) { return w.values[a - 1] < w.values[b - 1]; });

    r.ranks.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
        r.ranks[static_cast<std::size_t>(r.order[j]) - 1] = static_cast<int>(j) + 1;
    }

    for (std::size_t j = 0; j < m; ++j) {
        if (j == 0 || w.values[static_cast<std::size_t>(r.order[j]) - 1] !=
                          w.values[static_cast<std::size_t>(r.order[j - 1]) - 1]) {
            r.groups.emplace_back();
        }
        r.groups.back().push_back(r.order[j]);
    }
    return r;
}

} // namespace ordinal
