// Command-line front end: yields, yield curves, threshold fidelities,
// analytic bounds, reference-table reproduction and verification suites,
// with text, JSON and CSV output.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource limit exceeded.

#include <CLI11.hpp>

#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "ghzdist/oracle.hpp"
#include "ghzdist/reference_tables.hpp"
#include "ghzdist/threshold.hpp"
#include "ghzdist/version.hpp"
#include "ghzdist/yields.hpp"

namespace {

using ghzdist::Rat;
using ghzdist::Real;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceLimit = 3;

enum class Format { kText, kJson, kCsv };

struct CommonOptions {
    std::string protocol = "ss";
    uint32_t q = 2;
    uint32_t m = 2;
    uint32_t n = 2;
    std::string fidelity = "1";
    std::string tolerance = "1/1000000";
    long precision_bits = 192;
    uint64_t class_limit = 100000000;
    unsigned threads = std::thread::hardware_concurrency();
    std::string format = "text";
    std::optional<uint64_t> seed;
};

Format parse_format(const std::string& text) {
    if (text == "json") return Format::kJson;
    if (text == "csv") return Format::kCsv;
    return Format::kText;
}

ghzdist::YieldOptions yield_options(const CommonOptions& options) {
    ghzdist::YieldOptions out;
    out.precision_bits = options.precision_bits;
    out.limits.max_classes = options.class_limit;
    return out;
}

json run_record(const std::string& command, const CommonOptions& options) {
    json record;
    record["tool"] = std::string(ghzdist::kToolName);
    record["version"] = std::string(ghzdist::kVersion);
    record["command"] = command;
    record["precision_bits"] = options.precision_bits;
    if (options.seed.has_value())
        record["seed"] = *options.seed;
    else
        record["seed"] = nullptr;
    return record;
}

json params_json(ghzdist::Protocol protocol, uint32_t q, uint32_t m, uint32_t n, const Rat& fidelity) {
    json out;
    out["protocol"] = std::string(ghzdist::protocol_name(protocol));
    out["q"] = q;
    out["m"] = m;
    if (ghzdist::protocol_uses_inner_code(protocol)) out["n"] = n;
    out["fidelity"] = ghzdist::to_string(fidelity);
    out["fidelity_decimal"] = Real::of(fidelity, 64).to_decimal(12);
    return out;
}

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitUsage;
}

struct ParsedProtocol {
    ghzdist::Protocol protocol;
};

std::optional<ParsedProtocol> parse_protocol(const std::string& name) {
    const auto protocol = ghzdist::protocol_from_name(name);
    if (!protocol) return std::nullopt;
    return ParsedProtocol{*protocol};
}

// ---------------------------------------------------------------- yield --

int run_yield(const CommonOptions& options) {
    const auto protocol = parse_protocol(options.protocol);
    if (!protocol) return usage_error("unknown protocol '" + options.protocol + "'");
    const auto fidelity = ghzdist::parse_rational(options.fidelity);
    if (!fidelity) return usage_error("fidelity must be 'a/b' or a terminating decimal");

    const auto params = ghzdist::ChannelParams::make(options.q, options.m, options.n, *fidelity);
    const ghzdist::YieldResult result = ghzdist::compute_yield(protocol->protocol, params, yield_options(options));

    switch (parse_format(options.format)) {
        case Format::kJson: {
            json record = run_record("yield", options);
            record["params"] = params_json(result.protocol, options.q, options.m, options.n, *fidelity);
            json results;
            results["yield"] = result.value.to_decimal(12);
            results["yield_full_precision"] = result.value.to_full_decimal();
            results["entropy_base"] = ghzdist::entropy_base(options.q);
            results["class_count"] = result.class_count;
            if (result.s_x_primary.has_value()) {
                results["s_x"] = result.s_x_primary->to_decimal(12);
                results["s_x_rearranged"] = result.s_x_alternative->to_decimal(12);
            }
            if (!result.top_contributions.empty()) {
                json top = json::array();
                for (const auto& c : result.top_contributions)
                    top.push_back({{"class", c.class_desc}, {"contribution", c.contribution}});
                results["largest_class_contributions"] = top;
            }
            record["results"] = results;
            std::cout << record.dump(2) << "\n";
            break;
        }
        case Format::kCsv:
            std::cout << "protocol,q,m,n,fidelity,yield\n";
            std::cout << ghzdist::protocol_name(result.protocol) << "," << options.q << "," << options.m << ","
                      << options.n << "," << ghzdist::to_string(*fidelity) << "," << result.value.to_decimal(12)
                      << "\n";
            break;
        case Format::kText:
            std::cout << "D_" << ghzdist::protocol_name(result.protocol) << "(q=" << options.q
                      << ", m=" << options.m;
            if (ghzdist::protocol_uses_inner_code(result.protocol)) std::cout << ", n=" << options.n;
            std::cout << ", F=" << ghzdist::to_string(*fidelity) << ") = " << result.value.to_decimal(12) << "\n";
            std::cout << "  full precision: " << result.value.to_full_decimal() << "\n";
            if (result.s_x_primary.has_value())
                std::cout << "  S_X = " << result.s_x_primary->to_decimal(12) << "\n";
            if (result.class_count > 0) std::cout << "  classes: " << result.class_count << "\n";
            std::cout << "  elapsed: " << result.elapsed_seconds << " s\n";
            break;
    }
    return kExitOk;
}

// ---------------------------------------------------------------- curve --

int run_curve(const CommonOptions& options, const std::string& from, const std::string& to, uint32_t steps) {
    const auto protocol = parse_protocol(options.protocol);
    if (!protocol) return usage_error("unknown protocol '" + options.protocol + "'");
    const auto f_from = ghzdist::parse_rational(from);
    const auto f_to = ghzdist::parse_rational(to);
    if (!f_from || !f_to) return usage_error("curve endpoints must be rationals");
    if (!(*f_from < *f_to)) return usage_error("curve needs from < to");
    if (steps < 2) return usage_error("curve needs at least 2 steps");

    std::vector<std::pair<Rat, Real>> rows;
    for (uint32_t i = 0; i < steps; ++i) {
        Rat step_fraction(i, steps - 1);
        step_fraction.canonicalize();
        const Rat fidelity = *f_from + (*f_to - *f_from) * step_fraction;
        if (fidelity <= 0 || fidelity > 1) return usage_error("curve fidelities must lie in (0, 1]");
        const auto params = ghzdist::ChannelParams::make(options.q, options.m, options.n, fidelity);
        rows.emplace_back(fidelity,
                          ghzdist::compute_yield(protocol->protocol, params, yield_options(options)).value);
    }

    switch (parse_format(options.format)) {
        case Format::kJson: {
            json record = run_record("curve", options);
            record["params"] = params_json(protocol->protocol, options.q, options.m, options.n, *f_from);
            record["params"].erase("fidelity");
            record["params"].erase("fidelity_decimal");
            record["params"]["from"] = ghzdist::to_string(*f_from);
            record["params"]["to"] = ghzdist::to_string(*f_to);
            record["params"]["steps"] = steps;
            json out = json::array();
            for (const auto& [fidelity, value] : rows)
                out.push_back({{"fidelity", ghzdist::to_string(fidelity)},
                               {"fidelity_decimal", Real::of(fidelity, 64).to_decimal(12)},
                               {"yield", value.to_decimal(12)}});
            record["results"] = {{"rows", out}};
            std::cout << record.dump(2) << "\n";
            break;
        }
        case Format::kCsv:
        case Format::kText:
            std::cout << "fidelity,fidelity_exact,yield\n";
            for (const auto& [fidelity, value] : rows)
                std::cout << Real::of(fidelity, 64).to_decimal(12) << "," << ghzdist::to_string(fidelity) << ","
                          << value.to_decimal(12) << "\n";
            break;
    }
    return kExitOk;
}

// ------------------------------------------------------------ threshold --

json threshold_json(const ghzdist::ThresholdResult& result) {
    json out;
    out["f_min"] = result.f_min.to_decimal(12);
    out["f_min_rounded"] = ghzdist::to_fixed_decimal(result.f_min_exact, 4);
    out["f_min_exact"] = ghzdist::to_string(result.f_min_exact);
    out["bracket_lo"] = ghzdist::to_string(result.bracket_lo);
    out["bracket_hi"] = ghzdist::to_string(result.bracket_hi);
    out["iterations"] = result.iterations;
    out["tolerance"] = ghzdist::to_string(result.tolerance);
    out["bound_bracket_held"] = result.bound_bracket_held;
    out["max_precision_bits"] = result.max_precision_bits;
    return out;
}

int run_threshold(const CommonOptions& options) {
    const auto protocol = parse_protocol(options.protocol);
    if (!protocol) return usage_error("unknown protocol '" + options.protocol + "'");
    const auto tolerance = ghzdist::parse_rational(options.tolerance);
    if (!tolerance || *tolerance <= 0) return usage_error("tolerance must be a positive rational");

    ghzdist::ThresholdOptions threshold_options;
    threshold_options.tolerance = *tolerance;
    threshold_options.yield = yield_options(options);
    const ghzdist::ThresholdResult result =
        ghzdist::find_threshold(protocol->protocol, options.q, options.m, options.n, threshold_options);

    switch (parse_format(options.format)) {
        case Format::kJson: {
            json record = run_record("threshold", options);
            record["params"] = params_json(protocol->protocol, options.q, options.m, options.n, Rat(1));
            record["params"].erase("fidelity");
            record["params"].erase("fidelity_decimal");
            record["results"] = threshold_json(result);
            std::cout << record.dump(2) << "\n";
            break;
        }
        case Format::kCsv:
            std::cout << "protocol,q,m,n,f_min,f_min_rounded\n"
                      << ghzdist::protocol_name(result.protocol) << "," << options.q << "," << options.m << ","
                      << options.n << "," << result.f_min.to_decimal(12) << ","
                      << ghzdist::to_fixed_decimal(result.f_min_exact, 4) << "\n";
            break;
        case Format::kText:
            std::cout << "F_min^" << ghzdist::protocol_name(result.protocol) << "(q=" << options.q
                      << ", m=" << options.m;
            if (ghzdist::protocol_uses_inner_code(result.protocol)) std::cout << ", n=" << options.n;
            std::cout << ") = " << ghzdist::to_fixed_decimal(result.f_min_exact, 4)
                      << "  (" << result.f_min.to_decimal(12) << ", " << result.iterations << " bisections)\n";
            if (!result.bound_bracket_held)
                std::cout << "  note: analytic lower bound was not a valid bracket endpoint; "
                             "started from 1/q^m instead\n";
            break;
    }
    return kExitOk;
}

// ---------------------------------------------------------------- table --

struct TableCell {
    uint32_t m = 0;
    uint32_t n = 0;
    std::string computed;   // 4-decimal string or "skipped(limit)"
    std::string reference;  // "" when the grid has no value
    std::string delta;      // computed - reference, 4 decimals
};

int run_table(const CommonOptions& options, const std::string& id, uint32_t max_m, uint32_t max_n) {
    if (id == "bounds") {
        std::cout << "m,computed,reference\n";
        for (const auto& bound : ghzdist::reference_bounds()) {
            std::cout << bound.m << "," << ghzdist::to_fixed_decimal(ghzdist::lower_bound(bound.m, 2), 4) << ","
                      << bound.value << "\n";
        }
        return kExitOk;
    }
    const ghzdist::ReferenceGrid* grid = ghzdist::reference_grid(id);
    if (grid == nullptr) return usage_error("unknown table id '" + id + "'");
    const auto tolerance = ghzdist::parse_rational(options.tolerance);
    if (!tolerance || *tolerance <= 0) return usage_error("tolerance must be a positive rational");

    std::vector<std::pair<uint32_t, uint32_t>> cells;
    for (uint32_t n : grid->ns)
        for (uint32_t m : grid->ms)
            if (m <= max_m && n <= max_n) cells.emplace_back(m, n);

    const unsigned workers = std::max(1u, options.threads);
    std::vector<TableCell> rows(cells.size());
    size_t next = 0;
    while (next < cells.size()) {
        const size_t batch = std::min<size_t>(workers, cells.size() - next);
        std::vector<std::future<TableCell>> futures;
        for (size_t b = 0; b < batch; ++b) {
            const auto [m, n] = cells[next + b];
            futures.push_back(std::async(
                batch == 1 ? std::launch::deferred : std::launch::async, [&, m = m, n = n] {
                    TableCell cell;
                    cell.m = m;
                    cell.n = n;
                    cell.reference = std::string(grid->value(m, n));
                    try {
                        ghzdist::ThresholdOptions topts;
                        topts.tolerance = *tolerance;
                        topts.yield = yield_options(options);
                        const auto result = ghzdist::find_threshold(grid->protocol, grid->q, m, n, topts);
                        cell.computed = ghzdist::to_fixed_decimal(result.f_min_exact, 4);
                        if (!cell.reference.empty()) {
                            const Rat delta =
                                ghzdist::round_half_even(result.f_min_exact, 4) - *ghzdist::parse_rational(cell.reference);
                            cell.delta = ghzdist::to_fixed_decimal(delta, 4);
                        }
                    } catch (const ghzdist::ResourceLimitError&) {
                        cell.computed = "skipped(limit)";
                    }
                    return cell;
                }));
        }
        for (size_t b = 0; b < batch; ++b) rows[next + b] = futures[b].get();
        next += batch;
    }

    switch (parse_format(options.format)) {
        case Format::kJson: {
            json record = run_record("table", options);
            record["params"] = {{"id", id},
                                {"protocol", std::string(ghzdist::protocol_name(grid->protocol))},
                                {"q", grid->q},
                                {"max_m", max_m},
                                {"max_n", max_n}};
            json out = json::array();
            for (const TableCell& cell : rows)
                out.push_back({{"m", cell.m},
                               {"n", cell.n},
                               {"computed", cell.computed},
                               {"reference", cell.reference},
                               {"delta", cell.delta}});
            record["results"] = {{"rows", out}};
            std::cout << record.dump(2) << "\n";
            break;
        }
        case Format::kCsv:
        case Format::kText:
            std::cout << "m,n,computed,reference,delta\n";
            for (const TableCell& cell : rows)
                std::cout << cell.m << "," << cell.n << "," << cell.computed << "," << cell.reference << ","
                          << cell.delta << "\n";
            break;
    }
    return kExitOk;
}

// --------------------------------------------------------------- verify --

struct CheckLine {
    std::string name;
    bool passed = false;
    std::string detail;
};

int report_checks(const std::string& command, const CommonOptions& options, const std::vector<CheckLine>& checks) {
    size_t failures = 0;
    for (const CheckLine& check : checks)
        if (!check.passed) ++failures;

    if (parse_format(options.format) == Format::kJson) {
        json record = run_record(command, options);
        json out = json::array();
        for (const CheckLine& check : checks)
            out.push_back({{"name", check.name}, {"status", check.passed ? "pass" : "fail"}, {"detail", check.detail}});
        record["results"] = {{"checks", out}, {"failures", failures}};
        std::cout << record.dump(2) << "\n";
    } else {
        for (const CheckLine& check : checks)
            std::cout << (check.passed ? "ok   " : "FAIL ") << check.name
                      << (check.detail.empty() ? "" : "  [" + check.detail + "]") << "\n";
        std::cout << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed") << "\n";
    }
    return failures == 0 ? kExitOk : kExitVerification;
}

// Exact equivalence of the closed forms against exhaustive enumeration
// for one (q, m, n, F).
CheckLine exact_check(uint32_t q, uint32_t m, uint32_t n, const Rat& fidelity, uint64_t tuple_cap) {
    std::ostringstream name;
    name << "exact q=" << q << " m=" << m << " n=" << n << " F=" << ghzdist::to_string(fidelity);
    CheckLine line{name.str(), true, ""};
    {
        const auto params = ghzdist::ChannelParams::make(q, m, n, fidelity);
        const auto table = ghzdist::exhaustive_joint(params, tuple_cap);
        if (table.total() != Rat(1)) {
            line.passed = false;
            line.detail = "total mass != 1";
            return line;
        }
        const uint64_t radix = params.gamma_space().get_ui();
        std::map<uint64_t, Rat> syndrome_mass;
        for (const auto& [key, mass] : table.mass) {
            uint64_t rest = key.syndrome;
            const uint64_t neg_gamma = ghzdist::negate_encoded(key.gamma, q, m - 1);
            uint32_t k = neg_gamma != 0 ? 1 : 0;
            for (uint32_t j = 1; j < n; ++j) {
                if (rest % radix != neg_gamma) ++k;
                rest /= radix;
            }
            if (mass != ghzdist::joint_prob(key.delta, k, params)) {
                line.passed = false;
                line.detail = "joint mismatch";
                return line;
            }
            syndrome_mass[key.syndrome] += mass;
        }
        for (const auto& [syndrome, mass] : syndrome_mass) {
            std::map<uint64_t, uint32_t> counts;
            counts[0] += 1;
            uint64_t rest = syndrome;
            for (uint32_t j = 1; j < n; ++j) {
                counts[rest % radix] += 1;
                rest /= radix;
            }
            ghzdist::SyndromeMultiset cls;
            for (const auto& [value, count] : counts) cls.entries.push_back({value, count});
            cls.cardinality = 1;
            if (mass != ghzdist::syndrome_prob(cls, params)) {
                line.passed = false;
                line.detail = "syndrome probability mismatch";
                return line;
            }
            const auto cond = ghzdist::conditional_table(cls, params);
            if (cond.total_mass() != Rat(1)) {
                line.passed = false;
                line.detail = "conditional not normalized";
                return line;
            }
        }
    }
    return line;
}

int run_verify(const CommonOptions& options, const std::string& suite, uint64_t samples, uint64_t tuple_cap,
               bool custom_combo) {
    std::vector<CheckLine> checks;
    if (suite == "exact") {
        std::vector<std::tuple<uint32_t, uint32_t, uint32_t>> combos = {
            {2, 2, 2}, {2, 2, 3}, {2, 2, 4}, {2, 3, 2}, {2, 3, 3}, {3, 2, 2}, {5, 2, 2}};
        if (custom_combo) combos = {{options.q, options.m, options.n}};
        for (const auto& [q, m, n] : combos) {
            const std::vector<Rat> fidelities = {Rat(1), Rat(ghzdist::Int(1), ghzdist::int_pow(q, m)), Rat(4, 5),
                                                 Rat(17, 20)};
            for (const Rat& fidelity : fidelities) checks.push_back(exact_check(q, m, n, fidelity, tuple_cap));
        }
    } else if (suite == "montecarlo") {
        const auto fidelity = ghzdist::parse_rational(options.fidelity);
        if (!fidelity) return usage_error("fidelity must be rational");
        const Rat F = custom_combo || *fidelity != Rat(1) ? *fidelity : Rat(17, 20);
        const uint32_t q = custom_combo ? options.q : 2;
        const uint32_t m = custom_combo ? options.m : 3;
        const uint32_t n = custom_combo ? options.n : 3;
        const auto params = ghzdist::ChannelParams::make(q, m, n, F);
        ghzdist::SimulationOptions sim;
        sim.samples = samples;
        sim.seed = options.seed.value_or(42);
        sim.threads = std::max(1u, options.threads);
        const auto result = ghzdist::simulate_protocol(params, sim);
        double max_abs_z = 0;
        size_t bad_cells = 0;
        for (const auto& check : ghzdist::compare_simulation(result)) {
            max_abs_z = std::max(max_abs_z, std::abs(check.z));
            if (std::abs(check.z) > 3.0) ++bad_cells;
        }
        std::ostringstream detail;
        detail << "max |z| = " << max_abs_z << " over all cells, seed " << sim.seed;
        checks.push_back({"montecarlo 3-sigma agreement", bad_cells == 0, detail.str()});
    } else {
        return usage_error("unknown suite '" + suite + "' (expected exact or montecarlo)");
    }
    return report_checks("verify", options, checks);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact yields and threshold fidelities for one-way GHZ purification protocols"};
    app.set_version_flag("--version", std::string(ghzdist::kVersion));
    app.require_subcommand(1);

    CommonOptions options;

    auto add_common = [&options](CLI::App* cmd, bool with_protocol = true) {
        if (with_protocol)
            cmd->add_option("--protocol", options.protocol, "ss, ms, cl, d1 or d2")->capture_default_str();
        cmd->add_option("--q", options.q, "local dimension (>= 2)")->capture_default_str();
        cmd->add_option("--m", options.m, "number of players (>= 2)")->capture_default_str();
        cmd->add_option("--n", options.n, "repetition code length (>= 2)")->capture_default_str();
        cmd->add_option("--precision-bits", options.precision_bits, "MPFR working precision")->capture_default_str();
        cmd->add_option("--class-limit", options.class_limit, "maximum enumerated class count")
            ->capture_default_str();
        cmd->add_option("--threads", options.threads, "worker threads")->capture_default_str();
        cmd->add_option("--format", options.format, "text, json or csv")->capture_default_str();
        cmd->add_option("--seed", options.seed, "64-bit seed for seeded commands");
    };

    auto* yield_cmd = app.add_subcommand("yield", "Yield of one protocol at one fidelity");
    add_common(yield_cmd);
    yield_cmd->add_option("--fidelity", options.fidelity, "exact rational fidelity in (0,1]")->required();

    auto* curve_cmd = app.add_subcommand("curve", "Yield as a function of fidelity");
    add_common(curve_cmd);
    std::string curve_from = "3/4", curve_to = "1";
    uint32_t curve_steps = 26;
    curve_cmd->add_option("--from", curve_from, "lower fidelity endpoint")->required();
    curve_cmd->add_option("--to", curve_to, "upper fidelity endpoint")->required();
    curve_cmd->add_option("--steps", curve_steps, "number of rows")->capture_default_str();

    auto* threshold_cmd = app.add_subcommand("threshold", "Threshold fidelity of one protocol");
    add_common(threshold_cmd);
    threshold_cmd->add_option("--tol", options.tolerance, "bisection tolerance")->capture_default_str();

    auto* table_cmd = app.add_subcommand("table", "Reproduce a bundled reference table");
    add_common(table_cmd, false);
    std::string table_id = "ss-q2";
    uint32_t max_m = 4, max_n = 7;
    table_cmd->add_option("--id", table_id, "ss-q2, ms-q2, cl-q2, ss-q3, ms-q3, cl-q3 or bounds")->required();
    table_cmd->add_option("--max-m", max_m, "largest m to compute")->capture_default_str();
    table_cmd->add_option("--max-n", max_n, "largest n to compute")->capture_default_str();
    table_cmd->add_option("--tol", options.tolerance, "bisection tolerance")->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    add_common(verify_cmd);
    std::string suite = "exact";
    uint64_t samples = 1000000;
    uint64_t tuple_cap = uint64_t(1) << 20;
    verify_cmd->add_option("--suite", suite, "exact or montecarlo")->required();
    verify_cmd->add_option("--samples", samples, "Monte Carlo sample count")->capture_default_str();
    verify_cmd->add_option("--tuple-cap", tuple_cap, "exhaustive enumeration cap")->capture_default_str();
    verify_cmd->add_option("--fidelity", options.fidelity, "fidelity for the Monte Carlo suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (yield_cmd->parsed()) return run_yield(options);
        if (curve_cmd->parsed()) return run_curve(options, curve_from, curve_to, curve_steps);
        if (threshold_cmd->parsed()) return run_threshold(options);
        if (table_cmd->parsed()) return run_table(options, table_id, max_m, max_n);
        if (verify_cmd->parsed()) {
            const bool custom_combo = verify_cmd->count("--q") || verify_cmd->count("--m") || verify_cmd->count("--n");
            return run_verify(options, suite, samples, tuple_cap, custom_combo);
        }
    } catch (const ghzdist::ResourceLimitError& error) {
        std::cerr << "resource limit: " << error.what() << "\n";
        return kExitResourceLimit;
    } catch (const ghzdist::NoThresholdError& error) {
        std::cerr << "no threshold: " << error.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& error) {
        return usage_error(error.what());
    } catch (const std::domain_error& error) {
        return usage_error(error.what());
    }
    return kExitUsage;
}
