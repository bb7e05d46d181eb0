// ordinal - command line front end for ordinal pattern analysis.
//
// Subcommands: encode, hist, entropy, irrev, enumerate, verify, demo.
// Input is UTF-8 text, one value per line or CSV with --column; "-" reads
// stdin. Output is JSON (default) or CSV on stdout, byte-deterministic for
// identical inputs and flags. Exit codes: 0 success, 1 usage, 2 input/parse,
// 3 claim verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <ordinal/ordinal.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::ordered_json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_input = 2;
constexpr int exit_verification = 3;

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// All reported reals are snapped to 6 significant digits so that repeated
// runs and round-tripped documents are byte-identical.
double snap6(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return std::strtod(buf, nullptr);
}

std::string format6(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

std::string csv_quote(const std::string& s) { return '"' + s + '"'; }

ordinal::pattern_kind parse_kind(const std::string& s) {
    return s == "orp" ? ordinal::pattern_kind::orp : ordinal::pattern_kind::amp;
}

ordinal::tie_policy parse_policy(const std::string& s) {
    if (s == "none") return ordinal::tie_policy::occurrence_order;
    if (s == "smallest") return ordinal::tie_policy::smallest_index;
    return ordinal::tie_policy::largest_index;
}

struct cli_options {
    std::string input;
    std::size_t m = 3;
    std::size_t tau = 1;
    std::string kind = "amp";
    std::string policy = "smallest";
    std::string format = "json";
    std::string column;
    std::size_t quantize_levels = 0; // 0 = no quantization
    bool normalize = false;
    bool patterns_input = false;
    long long verify_m = 0; // 0 = sweep the default dimensions
};

// ---------------------------------------------------------------------------
// input

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string::size_type start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return fields;
}

std::optional<double> parse_double(const std::string& text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    return value;
}

std::vector<double> read_series(std::istream& in, const std::string& column) {
    std::vector<double> series;
    std::string raw;
    std::size_t lineno = 0;
    std::optional<std::size_t> column_index;
    bool saw_content = false;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = trim(raw);
        if (line.empty()) continue;
        if (!column.empty()) {
            const std::vector<std::string> fields = split_csv(line);
            if (!column_index) {
                const auto it = std::find(fields.begin(), fields.end(), column);
                if (it == fields.end()) {
                    throw input_error("column '" + column + "' not found in CSV header (line " +
                                      std::to_string(lineno) + ")");
                }
                column_index = static_cast<std::size_t>(it - fields.begin());
                continue;
            }
            if (*column_index >= fields.size()) {
                throw input_error("row has no column '" + column + "' (line " +
                                  std::to_string(lineno) + ")");
            }
            const auto value = parse_double(fields[*column_index]);
            if (!value) {
                throw input_error("could not parse '" + fields[*column_index] +
                                  "' as a number (line " + std::to_string(lineno) + ")");
            }
            series.push_back(*value);
        } else {
            const auto value = parse_double(line);
            if (!value) {
                if (!saw_content) { // optional single-column header
                    saw_content = true;
                    continue;
                }
                throw input_error("could not parse '" + line + "' as a number (line " +
                                  std::to_string(lineno) + ")");
            }
            saw_content = true;
            series.push_back(*value);
        }
    }
    if (series.empty()) throw input_error("input contains no samples");
    return series;
}

std::vector<double> load_series(const cli_options& opt) {
    std::vector<double> series;
    if (opt.input == "-") {
        series = read_series(std::cin, opt.column);
    } else {
        std::ifstream file(opt.input);
        if (!file) throw input_error("cannot open input file: " + opt.input);
        series = read_series(file, opt.column);
    }
    if (opt.quantize_levels > 0) {
        series = ordinal::quantize(series, opt.quantize_levels);
    }
    return series;
}

std::string slurp(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) throw input_error("cannot open input file: " + path);
        buffer << file.rdbuf();
    }
    return buffer.str();
}

// ---------------------------------------------------------------------------
// output

void emit(const ordered_json& doc, const cli_options& opt, std::vector<std::string> csv_lines) {
    if (opt.format == "json") {
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const std::string& line : csv_lines) std::cout << line << "\n";
    }
}

ordered_json meta_json(const char* command, const cli_options& opt) {
    ordered_json j;
    j["command"] = command;
    j["m"] = opt.m;
    j["tau"] = opt.tau;
    j["kind"] = opt.kind;
    j["policy"] = opt.policy;
    if (opt.quantize_levels > 0) {
        j["quantize"] = opt.quantize_levels;
    } else {
        j["quantize"] = nullptr;
    }
    return j;
}

// ---------------------------------------------------------------------------
// commands

int run_encode(const cli_options& opt) {
    const std::vector<double> series = load_series(opt);
    const auto patterns = ordinal::encode_series(series, {opt.m, opt.tau}, parse_kind(opt.kind),
                                                 parse_policy(opt.policy));
    ordered_json doc = meta_json("encode", opt);
    doc["count"] = patterns.size();
    auto records = ordered_json::array();
    std::vector<std::string> csv{"window,pattern"};
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        const std::string text = ordinal::to_string(patterns[i]);
        records.push_back(ordered_json{{"window", i + 1}, {"pattern", text}});
        csv.push_back(std::to_string(i + 1) + "," + csv_quote(text));
    }
    doc["patterns"] = std::move(records);
    emit(doc, opt, std::move(csv));
    return exit_ok;
}

struct distribution_input {
    ordinal::pattern_distribution dist;
    cli_options opt; // m/tau/kind/policy/quantize as recorded for output
};

// hist/entropy/irrev share their input path: either a raw series, or with
// --patterns an encode JSON document whose metadata wins over the flags.
distribution_input load_distribution(const cli_options& opt) {
    if (!opt.patterns_input) {
        const std::vector<double> series = load_series(opt);
        const auto patterns = ordinal::encode_series(series, {opt.m, opt.tau},
                                                     parse_kind(opt.kind), parse_policy(opt.policy));
        return {ordinal::distribution(patterns, ordinal::embedding_params{opt.m, opt.tau}), opt};
    }
    const std::string text = slurp(opt.input);
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw input_error(std::string("--patterns input is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("patterns") || !doc.contains("policy")) {
        throw input_error("--patterns input does not look like encode output");
    }
    cli_options effective = opt;
    effective.m = doc.value("m", opt.m);
    effective.tau = doc.value("tau", opt.tau);
    effective.kind = doc.value("kind", opt.kind);
    effective.policy = doc.value("policy", opt.policy);
    effective.quantize_levels = doc["quantize"].is_null() ? 0 : doc["quantize"].get<std::size_t>();
    std::vector<ordinal::pattern> patterns;
    for (const auto& record : doc["patterns"]) {
        patterns.push_back(ordinal::parse_pattern(record["pattern"].get<std::string>(),
                                                  parse_policy(effective.policy)));
    }
    if (patterns.empty()) throw input_error("--patterns input contains no patterns");
    return {ordinal::distribution(patterns,
                                  ordinal::embedding_params{effective.m, effective.tau}),
            effective};
}

int run_hist(const cli_options& opt) {
    auto [dist, effective] = load_distribution(opt);
    struct bin {
        std::string pattern;
        std::uint64_t count;
    };
    std::vector<bin> bins;
    bins.reserve(dist.counts.size());
    for (const auto& [p, count] : dist.counts) {
        bins.push_back({ordinal::to_string(p), count});
    }
    // probability descending, pattern ascending; the map iterates patterns in
    // lexicographic order already, so the stable sort only reorders by count
    std::stable_sort(bins.begin(), bins.end(),
                     [](const bin& a, const bin& b) { return a.count > b.count; });

    ordered_json doc = meta_json("hist", effective);
    doc["total"] = dist.total;
    auto records = ordered_json::array();
    std::vector<std::string> csv{"pattern,count,probability"};
    for (const bin& b : bins) {
        const double prob = snap6(static_cast<double>(b.count) / static_cast<double>(dist.total));
        records.push_back(
            ordered_json{{"pattern", b.pattern}, {"count", b.count}, {"probability", prob}});
        csv.push_back(csv_quote(b.pattern) + "," + std::to_string(b.count) + "," + format6(prob));
    }
    doc["bins"] = std::move(records);
    emit(doc, effective, std::move(csv));
    return exit_ok;
}

int run_entropy(const cli_options& opt) {
    auto [dist, effective] = load_distribution(opt);
    const double raw = ordinal::permutation_entropy(dist, false);

    ordered_json doc = meta_json("entropy", effective);
    doc["total"] = dist.total;
    doc["patterns_observed"] = dist.counts.size();
    doc["entropy"] = snap6(raw);
    std::vector<std::string> csv{"metric,value"};
    csv.push_back("total," + std::to_string(dist.total));
    csv.push_back("patterns_observed," + std::to_string(dist.counts.size()));
    csv.push_back("entropy," + format6(raw));
    if (dist.m <= 6) {
        const double normalized = ordinal::permutation_entropy(dist, true);
        const std::size_t catalog =
            ordinal::enumerate_patterns(dist.m, dist.kind, dist.policy).size();
        doc["normalized"] = snap6(normalized);
        doc["catalog_size"] = catalog;
        csv.push_back("normalized," + format6(normalized));
        csv.push_back("catalog_size," + std::to_string(catalog));
    } else {
        // no catalog is enumerable above m = 6
        doc["normalized"] = nullptr;
        doc["catalog_size"] = nullptr;
        csv.push_back("normalized,");
        csv.push_back("catalog_size,");
    }
    emit(doc, effective, std::move(csv));
    return exit_ok;
}

int run_irrev(const cli_options& opt) {
    auto [dist, effective] = load_distribution(opt);
    const double index = ordinal::irreversibility_index(dist);
    const auto pairs = ordinal::reversal_pairs(dist);

    ordered_json doc = meta_json("irrev", effective);
    doc["total"] = dist.total;
    doc["index"] = snap6(index);
    auto records = ordered_json::array();
    std::vector<std::string> csv{"index", format6(index),
                                 "pattern,reversed,p_forward,p_reversed,contribution"};
    for (const auto& pair : pairs) {
        const std::string forward = ordinal::to_string(pair.forward);
        const std::string reversed = ordinal::to_string(pair.reversed);
        records.push_back(ordered_json{{"pattern", forward},
                                       {"reversed", reversed},
                                       {"p_forward", snap6(pair.p_forward)},
                                       {"p_reversed", snap6(pair.p_reversed)},
                                       {"contribution", snap6(pair.contribution())}});
        csv.push_back(csv_quote(forward) + "," + csv_quote(reversed) + "," +
                      format6(pair.p_forward) + "," + format6(pair.p_reversed) + "," +
                      format6(pair.contribution()));
    }
    doc["pairs"] = std::move(records);
    emit(doc, effective, std::move(csv));
    return exit_ok;
}

int run_enumerate(const cli_options& opt) {
    const auto catalog =
        ordinal::enumerate_patterns(opt.m, parse_kind(opt.kind), parse_policy(opt.policy));
    ordered_json doc;
    doc["command"] = "enumerate";
    doc["m"] = opt.m;
    doc["kind"] = opt.kind;
    doc["policy"] = opt.policy;
    doc["count"] = catalog.size();
    auto records = ordered_json::array();
    std::vector<std::string> csv{"pattern"};
    for (const auto& p : catalog.patterns) {
        const std::string text = ordinal::to_string(p);
        records.push_back(text);
        csv.push_back(csv_quote(text));
    }
    doc["patterns"] = std::move(records);
    emit(doc, opt, std::move(csv));
    return exit_ok;
}

int run_verify(const cli_options& opt) {
    std::vector<std::size_t> dimensions;
    if (opt.verify_m > 0) {
        dimensions.push_back(static_cast<std::size_t>(opt.verify_m));
    } else {
        dimensions = {2, 3, 4};
    }
    ordered_json doc;
    doc["command"] = "verify";
    doc["dimensions"] = dimensions;
    auto runs = ordered_json::array();
    std::vector<std::string> csv{"claim,m,alphabet,checked,expected_violations,violations,verdict,ok"};
    bool all_ok = true;
    for (std::size_t m : dimensions) {
        for (const auto& spec : ordinal::oracle::claims()) {
            const auto report = ordinal::oracle::check_claim(spec.id, m);
            const bool ok = report.as_expected();
            all_ok = all_ok && ok;
            ordered_json row;
            row["claim"] = report.claim_id;
            row["description"] = std::string(spec.description);
            row["m"] = report.m;
            row["alphabet"] = report.alphabet_size;
            row["checked"] = report.checked;
            row["expected_violations"] = report.violations_expected;
            row["violations"] = report.violations.size();
            auto witnesses = ordered_json::array();
            for (std::size_t i = 0; i < report.violations.size() && i < 5; ++i) {
                auto values = ordered_json::array();
                for (double v : report.violations[i]) values.push_back(static_cast<long long>(v));
                witnesses.push_back(std::move(values));
            }
            row["witnesses"] = std::move(witnesses);
            row["verdict"] = report.verdict();
            if (!report.detail.empty()) row["detail"] = report.detail;
            row["ok"] = ok;
            runs.push_back(std::move(row));
            csv.push_back(report.claim_id + "," + std::to_string(report.m) + "," +
                          std::to_string(report.alphabet_size) + "," +
                          std::to_string(report.checked) + "," +
                          (report.violations_expected ? "true" : "false") + "," +
                          std::to_string(report.violations.size()) + "," + report.verdict() + "," +
                          (ok ? "true" : "false"));
        }
    }
    doc["runs"] = std::move(runs);
    doc["overall"] = all_ok ? "pass" : "fail";
    csv.push_back(std::string("overall,") + (all_ok ? "pass" : "fail"));
    emit(doc, opt, std::move(csv));
    return all_ok ? exit_ok : exit_verification;
}

int run_demo(const cli_options& opt) {
    using ordinal::amp;
    using ordinal::orp;
    using ordinal::pattern;
    using ordinal::reverse_pattern;
    using ordinal::tie_policy;
    using ordinal::window;

    ordered_json doc;
    doc["command"] = "demo";
    auto figures = ordered_json::array();
    std::vector<std::string> csv{
        "figure,policy,vector,orp,amp,amps_mutually_reversed,orps_mutually_reversed"};

    const auto vector_json = [](const window& w) {
        auto arr = ordered_json::array();
        for (double v : w.values) arr.push_back(static_cast<long long>(v));
        return arr;
    };
    const auto vector_text = [](const window& w) {
        std::string s;
        for (std::size_t i = 0; i < w.values.size(); ++i) {
            if (i > 0) s += ' ';
            s += std::to_string(static_cast<long long>(w.values[i]));
        }
        return s;
    };

    // a symmetric pair without equal values: patterns agree for every policy
    {
        const window a{{9, 3, 7, 1, 5}};
        const window b{{5, 1, 7, 3, 9}};
        const pattern orp_a = orp(a, tie_policy::occurrence_order);
        const pattern amp_a = amp(a, tie_policy::occurrence_order);
        const pattern orp_b = orp(b, tie_policy::occurrence_order);
        const pattern amp_b = amp(b, tie_policy::occurrence_order);
        const bool amps_reversed = amp_b == reverse_pattern(amp_a);
        const bool orps_reversed = orp_b == reverse_pattern(orp_a);
        ordered_json fig;
        fig["title"] = "time-symmetric pair without equal values";
        auto rows = ordered_json::array();
        rows.push_back(ordered_json{{"vector", vector_json(a)},
                                    {"orp", ordinal::to_string(orp_a)},
                                    {"amp", ordinal::to_string(amp_a)}});
        rows.push_back(ordered_json{{"vector", vector_json(b)},
                                    {"orp", ordinal::to_string(orp_b)},
                                    {"amp", ordinal::to_string(amp_b)}});
        fig["patterns"] = std::move(rows);
        fig["amps_mutually_reversed"] = amps_reversed;
        fig["orps_mutually_reversed"] = orps_reversed;
        figures.push_back(std::move(fig));
        for (const window* w : {&a, &b}) {
            csv.push_back("symmetric-pair,any," + csv_quote(vector_text(*w)) + "," +
                          csv_quote(ordinal::to_string(orp(*w, tie_policy::occurrence_order))) +
                          "," +
                          csv_quote(ordinal::to_string(amp(*w, tie_policy::occurrence_order))) +
                          "," + (amps_reversed ? "true" : "false") + "," +
                          (orps_reversed ? "true" : "false"));
        }
    }

    // a symmetric pair with double equal values: only the equal-scheme AmPs
    // mirror each other
    {
        const window a{{3, 1, 7, 1, 5}};
        const window b{{5, 1, 7, 1, 3}};
        ordered_json fig;
        fig["title"] = "time-symmetric pair with double equal values";
        fig["vectors"] = ordered_json::array({vector_json(a), vector_json(b)});
        auto schemes = ordered_json::array();
        for (tie_policy policy : {tie_policy::occurrence_order, tie_policy::smallest_index,
                                  tie_policy::largest_index}) {
            const pattern orp_a = orp(a, policy);
            const pattern amp_a = amp(a, policy);
            const pattern orp_b = orp(b, policy);
            const pattern amp_b = amp(b, policy);
            const bool amps_reversed = amp_b == reverse_pattern(amp_a);
            const bool orps_reversed = orp_b == reverse_pattern(orp_a);
            ordered_json scheme;
            scheme["policy"] = ordinal::to_string(policy);
            auto rows = ordered_json::array();
            rows.push_back(ordered_json{{"vector", vector_json(a)},
                                        {"orp", ordinal::to_string(orp_a)},
                                        {"amp", ordinal::to_string(amp_a)}});
            rows.push_back(ordered_json{{"vector", vector_json(b)},
                                        {"orp", ordinal::to_string(orp_b)},
                                        {"amp", ordinal::to_string(amp_b)}});
            scheme["patterns"] = std::move(rows);
            scheme["amps_mutually_reversed"] = amps_reversed;
            scheme["orps_mutually_reversed"] = orps_reversed;
            schemes.push_back(std::move(scheme));
            for (const window* w : {&a, &b}) {
                csv.push_back(std::string("equal-values-pair,") + ordinal::to_string(policy) +
                              "," + csv_quote(vector_text(*w)) + "," +
                              csv_quote(ordinal::to_string(orp(*w, policy))) + "," +
                              csv_quote(ordinal::to_string(amp(*w, policy))) + "," +
                              (amps_reversed ? "true" : "false") + "," +
                              (orps_reversed ? "true" : "false"));
            }
        }
        fig["schemes"] = std::move(schemes);
        figures.push_back(std::move(fig));
    }

    doc["figures"] = std::move(figures);
    emit(doc, opt, std::move(csv));
    return exit_ok;
}

void add_format_option(CLI::App* cmd, cli_options& opt) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
}

void add_space_options(CLI::App* cmd, cli_options& opt, bool with_m = true) {
    if (with_m) {
        cmd->add_option("--m", opt.m, "embedding dimension")
            ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20))
            ->capture_default_str();
    }
    cmd->add_option("--kind", opt.kind, "pattern kind")
        ->check(CLI::IsMember({"orp", "amp"}))
        ->capture_default_str();
    cmd->add_option("--policy", opt.policy,
                    "equal-value scheme; 'none' keeps occurrence order (not recommended)")
        ->check(CLI::IsMember({"none", "smallest", "largest"}))
        ->capture_default_str();
}

void add_series_options(CLI::App* cmd, cli_options& opt) {
    cmd->add_option("input", opt.input, "series file, or '-' for stdin")->required();
    add_space_options(cmd, opt);
    cmd->add_option("--tau", opt.tau, "embedding delay")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20))
        ->capture_default_str();
    cmd->add_option("--quantize", opt.quantize_levels,
                    "pre-quantize the series to N uniform levels (induces ties)")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
    cmd->add_option("--column", opt.column, "CSV column to read (file must have a header)");
    add_format_option(cmd, opt);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ordinal pattern extraction and analysis for time series"};
    app.require_subcommand(1);

    cli_options opt;

    CLI::App* encode = app.add_subcommand("encode", "emit the pattern of every window");
    add_series_options(encode, opt);

    CLI::App* hist = app.add_subcommand("hist", "pattern distribution of a series");
    add_series_options(hist, opt);
    hist->add_flag("--patterns", opt.patterns_input,
                   "input is encode JSON output instead of a raw series");

    CLI::App* entropy = app.add_subcommand("entropy", "permutation entropy of a series");
    add_series_options(entropy, opt);
    entropy->add_flag("--normalize", opt.normalize,
                      "report normalized entropy (always included when m <= 6)");

    CLI::App* irrev =
        app.add_subcommand("irrev", "time-irreversibility index of a series (AmP only)");
    add_series_options(irrev, opt);

    CLI::App* enumerate = app.add_subcommand("enumerate", "list every realizable pattern");
    enumerate->add_option("--m", opt.m, "embedding dimension")
        ->check(CLI::Range(std::size_t{1}, std::size_t{6}))
        ->capture_default_str();
    add_space_options(enumerate, opt, /*with_m=*/false);
    add_format_option(enumerate, opt);

    CLI::App* verify = app.add_subcommand("verify", "run the exhaustive claim checks");
    verify->add_option("--m", opt.verify_m, "single dimension to check (default: 2, 3 and 4)")
        ->check(CLI::Range(1, 6));
    add_format_option(verify, opt);

    CLI::App* demo = app.add_subcommand("demo", "recompute the worked example tables");
    add_format_option(demo, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (irrev->parsed()) {
            // reject the combinations whose pattern spaces are not
            // reversal-sound before touching any input
            if (opt.kind != "amp") {
                throw usage_error("--kind orp is not supported for irrev: time reversal is not a "
                                  "pattern-level map for OrPs");
            }
            if (opt.policy == "none") {
                throw usage_error("--policy none is not supported for irrev: occurrence-order "
                                  "patterns are not reversal-sound");
            }
        }
        if (encode->parsed()) return run_encode(opt);
        if (hist->parsed()) return run_hist(opt);
        if (entropy->parsed()) return run_entropy(opt);
        if (irrev->parsed()) return run_irrev(opt);
        if (enumerate->parsed()) return run_enumerate(opt);
        if (verify->parsed()) return run_verify(opt);
        if (demo->parsed()) return run_demo(opt);
        std::cerr << "error: no command selected\n";
        return exit_usage;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input;
    } catch (const ordinal::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
}
