// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <ordinal/ordinal.hpp>

#include "cli_runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace ordinal;
namespace orc = ordinal::oracle;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& note = "") {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", id, name.c_str());
    if (!ok) {
        ++failures;
        if (!note.empty()) std::fprintf(stderr, "  -> %s\n", note.c_str());
    }
}

bool indexes_are(const pattern& p, const std::vector<int>& expected) {
    return p.indexes == expected;
}

// ---------------------------------------------------------------------------

void criterion_1_symmetric_pair() {
    std::string note;
    const window a{{9, 3, 7, 1, 5}};
    const window b{{5, 1, 7, 3, 9}};

    // warm up, then time the four encodings
    (void)orp(a, tie_policy::occurrence_order);
    const auto start = std::chrono::steady_clock::now();
    const pattern orp_a = orp(a, tie_policy::occurrence_order);
    const pattern amp_a = amp(a, tie_policy::occurrence_order);
    const pattern orp_b = orp(b, tie_policy::occurrence_order);
    const pattern amp_b = amp(b, tie_policy::occurrence_order);
    const auto elapsed = std::chrono::steady_clock::now() - start;

    bool ok = true;
    ok &= indexes_are(orp_a, {4, 2, 5, 3, 1});
    ok &= indexes_are(amp_a, {5, 2, 4, 1, 3});
    ok &= indexes_are(amp_b, {3, 1, 4, 2, 5});
    ok &= amp_b == reverse_pattern(amp_a);
    ok &= orp_b != reverse_pattern(orp_a);
    if (!ok) note = "pattern values diverge from the worked example";
    const bool fast = elapsed < std::chrono::milliseconds(1);
    if (!fast) note = "encoding exceeded 1 ms";
    report(1, "symmetric-pair patterns reproduce exactly in under 1 ms", ok && fast, note);
}

void criterion_2_equal_values_pair() {
    const window a{{3, 1, 7, 1, 5}};
    const window b{{5, 1, 7, 1, 3}};
    bool ok = true;

    const pattern amp_a_none = amp(a, tie_policy::occurrence_order);
    const pattern amp_b_none = amp(b, tie_policy::occurrence_order);
    ok &= indexes_are(amp_a_none, {3, 1, 5, 2, 4});
    ok &= indexes_are(amp_b_none, {4, 1, 5, 2, 3});
    ok &= amp_b_none != reverse_pattern(amp_a_none);

    const pattern amp_a_small = amp(a, tie_policy::smallest_index);
    const pattern amp_b_small = amp(b, tie_policy::smallest_index);
    ok &= indexes_are(amp_a_small, {3, 1, 5, 1, 4});
    ok &= indexes_are(amp_b_small, {4, 1, 5, 1, 3});
    ok &= amp_b_small == reverse_pattern(amp_a_small);

    const pattern amp_a_large = amp(a, tie_policy::largest_index);
    const pattern amp_b_large = amp(b, tie_policy::largest_index);
    ok &= indexes_are(amp_a_large, {3, 2, 5, 2, 4});
    ok &= indexes_are(amp_b_large, {4, 2, 5, 2, 3});
    ok &= amp_b_large == reverse_pattern(amp_a_large);

    const pattern orp_a_small = orp(a, tie_policy::smallest_index);
    const pattern orp_b_small = orp(b, tie_policy::smallest_index);
    ok &= indexes_are(orp_a_small, {2, 2, 1, 5, 3});
    ok &= indexes_are(orp_b_small, {2, 2, 5, 1, 3});
    ok &= orp_b_small != reverse_pattern(orp_a_small);

    const pattern orp_a_large = orp(a, tie_policy::largest_index);
    const pattern orp_b_large = orp(b, tie_policy::largest_index);
    ok &= indexes_are(orp_a_large, {4, 4, 1, 5, 3});
    ok &= indexes_are(orp_b_large, {4, 4, 5, 1, 3});
    ok &= orp_b_large != reverse_pattern(orp_a_large);

    report(2, "equal-values pair patterns and reversal relations reproduce exactly", ok);
}

void criterion_3_oracle_exhaustion() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string note;
    for (const auto& spec : orc::claims()) {
        std::size_t encodings = 0;
        for (std::size_t m : {2, 3, 4}) {
            const auto report_ = orc::check_claim(spec.id, m, m + 1);
            encodings += report_.checked;
            if (!report_.as_expected()) {
                ok = false;
                note = std::string(spec.id) + " not satisfied at m=" + std::to_string(m);
            }
        }
        if (encodings != 9 + 64 + 625) {
            ok = false;
            note = std::string(spec.id) + " enumerated an unexpected universe";
        }
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;
    if (elapsed > std::chrono::seconds(10)) {
        ok = false;
        note = "claim suite exceeded 10 seconds";
    }
    report(3, "all registered claims hold for m in {2,3,4} within budget", ok, note);
}

void criterion_4_catalog_counts() {
    bool ok = true;
    ok &= enumerate_patterns(2, pattern_kind::orp, tie_policy::occurrence_order).size() == 2;
    ok &= enumerate_patterns(3, pattern_kind::orp, tie_policy::occurrence_order).size() == 6;
    ok &= enumerate_patterns(2, pattern_kind::amp, tie_policy::occurrence_order).size() == 2;
    ok &= enumerate_patterns(3, pattern_kind::amp, tie_policy::occurrence_order).size() == 6;
    for (tie_policy policy : {tie_policy::smallest_index, tie_policy::largest_index}) {
        for (pattern_kind kind : {pattern_kind::orp, pattern_kind::amp}) {
            ok &= enumerate_patterns(2, kind, policy).size() == 3;
            ok &= enumerate_patterns(3, kind, policy).size() == 13;
        }
    }
    // the independent recursive weak-ordering generator agrees
    ok &= orc::weak_ordering_count(2) == 3;
    ok &= orc::weak_ordering_count(3) == 13;
    ok &= enumerate_patterns(2, pattern_kind::amp, tie_policy::smallest_index).size() ==
          orc::weak_ordering_count(2);
    ok &= enumerate_patterns(3, pattern_kind::amp, tie_policy::smallest_index).size() ==
          orc::weak_ordering_count(3);
    report(4, "catalog sizes equal factorials and weak-ordering counts exactly", ok);
}

void criterion_5_entropy() {
    bool ok = true;
    std::string note;

    const auto constant = distribution(encode_series(std::vector<double>(64, 3.25), {3, 1},
                                                     pattern_kind::amp,
                                                     tie_policy::smallest_index));
    if (permutation_entropy(constant, true) != 0.0) {
        ok = false;
        note = "constant series did not give zero normalized entropy";
    }

    std::mt19937_64 rng(20240911);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::vector<double> iid(100000);
    for (double& v : iid) v = uniform(rng);
    const auto d = distribution(encode_series(iid, {3, 1}, pattern_kind::amp,
                                              tie_policy::occurrence_order));
    const double normalized = permutation_entropy(d, true);
    if (!(normalized >= 0.99 && normalized <= 1.0)) {
        ok = false;
        note = "iid uniform normalized entropy " + std::to_string(normalized);
    }

    // 100 strictly increasing piecewise-linear maps leave every pattern
    // sequence bit-identical
    std::uniform_int_distribution<int> level(0, 40);
    std::vector<double> series(500);
    for (double& v : series) v = level(rng);
    std::uniform_real_distribution<double> step(0.05, 2.5);
    for (int trial = 0; trial < 100 && ok; ++trial) {
        std::vector<double> table(41);
        double acc = -30.0 + uniform(rng);
        for (double& t : table) {
            acc += step(rng);
            t = acc;
        }
        std::vector<double> mapped(series.size());
        for (std::size_t i = 0; i < series.size(); ++i) {
            mapped[i] = table[static_cast<std::size_t>(series[i])];
        }
        for (pattern_kind kind : {pattern_kind::orp, pattern_kind::amp}) {
            for (tie_policy policy :
                 {tie_policy::occurrence_order, tie_policy::smallest_index,
                  tie_policy::largest_index}) {
                if (encode_series(series, {3, 1}, kind, policy) !=
                    encode_series(mapped, {3, 1}, kind, policy)) {
                    ok = false;
                    note = "monotone transform changed a pattern sequence";
                }
            }
        }
    }
    report(5, "entropy fixtures, iid bound and monotone invariance hold", ok, note);
}

void criterion_6_irreversibility() {
    bool ok = true;
    std::string note;

    // palindromic series pair windows with their reversals, so the index
    // vanishes exactly
    std::mt19937_64 rng(7771);
    std::uniform_int_distribution<int> level(0, 9);
    for (int trial = 0; trial < 20 && ok; ++trial) {
        std::vector<double> half(150);
        for (double& v : half) v = level(rng);
        std::vector<double> palindrome(half);
        palindrome.push_back(level(rng));
        palindrome.insert(palindrome.end(), half.rbegin(), half.rend());
        for (tie_policy policy : {tie_policy::smallest_index, tie_policy::largest_index}) {
            const auto d =
                distribution(encode_series(palindrome, {3, 1}, pattern_kind::amp, policy));
            if (irreversibility_index(d) != 0.0) {
                ok = false;
                note = "palindromic series gave a nonzero index";
            }
        }
    }

    // guarded pattern spaces
    try {
        irreversibility_index(distribution(encode_series(std::vector<double>{1, 2, 3, 1}, {2, 1},
                                                         pattern_kind::orp,
                                                         tie_policy::smallest_index)));
        ok = false;
        note = "OrP distribution was not rejected";
    } catch (const unsupported_pattern_space&) {
    }
    try {
        irreversibility_index(distribution(encode_series(std::vector<double>{1, 2, 3, 1}, {2, 1},
                                                         pattern_kind::amp,
                                                         tie_policy::occurrence_order)));
        ok = false;
        note = "occurrence-order distribution was not rejected";
    } catch (const unsupported_pattern_space&) {
    }

    // 1000 random distributions stay inside [0, 1]
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        const std::size_t m = 2 + static_cast<std::size_t>(rng() % 3);
        const tie_policy policy =
            rng() % 2 == 0 ? tie_policy::smallest_index : tie_policy::largest_index;
        const pattern_catalog catalog = enumerate_patterns(m, pattern_kind::amp, policy);
        pattern_distribution d;
        d.m = m;
        d.kind = pattern_kind::amp;
        d.policy = policy;
        std::uniform_int_distribution<std::uint64_t> count(0, 50);
        for (const pattern& p : catalog.patterns) {
            const std::uint64_t c = count(rng);
            if (c > 0) d.counts[p] = c;
            d.total += c;
        }
        if (d.total == 0) continue;
        const double index = irreversibility_index(d);
        if (!(index >= 0.0 && index <= 1.0)) {
            ok = false;
            note = "index left [0,1]: " + std::to_string(index);
        }
    }
    report(6, "irreversibility vanishes on balanced data, guards fire, index in [0,1]", ok, note);
}

void criterion_7_cli_determinism() {
    bool ok = true;
    std::string note;
    const std::vector<std::pair<std::string, std::string>> runs = {
        {"demo", "demo.json"},
        {"enumerate --m 3 --kind amp --policy smallest", "enumerate_m3_amp_smallest.json"},
        {"verify --m 3", "verify_m3.json"},
    };
    for (const auto& [args, golden_name] : runs) {
        const auto first = testutil::run_cli(args);
        const auto second = testutil::run_cli(args);
        if (first.exit_code != 0 || second.exit_code != 0) {
            ok = false;
            note = args + " exited nonzero";
            continue;
        }
        if (first.output != second.output) {
            ok = false;
            note = args + " output differs between runs";
            continue;
        }
        const std::string golden =
            testutil::read_file(std::string(ORDINAL_GOLDEN_DIR) + "/" + golden_name);
        if (golden.empty()) {
            ok = false;
            note = "missing golden snapshot " + golden_name;
        } else if (first.output != golden) {
            ok = false;
            note = args + " diverges from golden snapshot " + golden_name;
        }
    }
    report(7, "demo, enumerate and verify are byte-identical and match the snapshots", ok, note);
}

} // namespace

int main() {
    criterion_1_symmetric_pair();
    criterion_2_equal_values_pair();
    criterion_3_oracle_exhaustion();
    criterion_4_catalog_counts();
    criterion_5_entropy();
    criterion_6_irreversibility();
    criterion_7_cli_determinism();
    if (failures > 0) {
        std::fprintf(stderr, "%d criterion(s) failed\n", failures);
        return 1;
    }
    return 0;
}
