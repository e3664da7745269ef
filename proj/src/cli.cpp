#include "rejodds/cli.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "nlohmann/json.hpp"
#include "rejodds/design.hpp"
#include "rejodds/errors.hpp"
#include "rejodds/evidence.hpp"
#include "rejodds/freqcheck.hpp"
#include "rejodds/math/normal.hpp"
#include "rejodds/reanalyze.hpp"
#include "rejodds/stopping.hpp"

namespace rejodds::cli {

namespace {

using nlohmann::ordered_json;

std::string fmt(const char* spec, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

// "a:b" ratio or a plain positive real.
double parse_prior_odds(const std::string& text) {
    auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            double v = std::stod(text);
            if (!(v > 0.0)) throw ValidationError("prior odds must be positive");
            return v;
        }
        double a = std::stod(text.substr(0, colon));
        double b = std::stod(text.substr(colon + 1));
        if (!(a > 0.0 && b > 0.0)) throw ValidationError("prior odds parts must be positive");
        return a / b;
    } catch (const std::invalid_argument&) {
        throw ValidationError("cannot parse prior odds '" + text + "'");
    }
}

std::vector<double> parse_fraction_list(const std::string& text) {
    std::vector<double> out;
    if (text.empty()) return out;
    std::istringstream is(text);
    std::string token;
    while (std::getline(is, token, ',')) {
        try {
            out.push_back(std::stod(token));
        } catch (const std::invalid_argument&) {
            throw ValidationError("cannot parse batch fraction '" + token + "'");
        }
    }
    return out;
}

struct ModelFlags {
    std::string family = "z-mean";
    std::string sides = "one";
    double null_value = 0.0;
    double known_sd = 1.0;
    int n1 = 1;
    int n2 = 0;  // 0: mirror n1

    TestModel build() const {
        TestModel m;
        m.family = parse_family(family);
        m.sides = parse_sides(sides);
        m.null_value = null_value;
        m.known_sd = known_sd;
        m.n1 = n1;
        m.n2 = n2 > 0 ? n2 : n1;
        if (m.family == Family::NormalVariance && null_value == 0.0) m.null_value = 1.0;
        m.validate();
        return m;
    }
};

void add_model_flags(CLI::App* cmd, ModelFlags& flags) {
    cmd->add_option("--family", flags.family, "Test family: z-mean, two-sample-z, normal-variance");
    cmd->add_option("--sides", flags.sides, "Sidedness: one or two");
    cmd->add_option("--null", flags.null_value,
                    "Null value (theta0; sigma0^2 for the variance family, default 1)");
    cmd->add_option("--sd", flags.known_sd, "Known sampling standard deviation");
}

// ---------------------------------------------------------------------------
// design
// ---------------------------------------------------------------------------

struct DesignOptions {
    ModelFlags model;
    std::string effect;
    std::string prior_odds;
    double alpha = 0.05;
    double power = -1.0;  // <0: compute from the effect spec
    bool solve_n = false;
    double target_r_pre = 0.0;
    bool do_solve_alpha = false;
    double target_o_pre = 0.0;
    std::string format = "text";
};

int run_design(const DesignOptions& opt, std::ostream& out) {
    std::optional<double> odds;
    if (!opt.prior_odds.empty()) odds = parse_prior_odds(opt.prior_odds);

    if (opt.do_solve_alpha) {
        if (!odds || opt.power < 0.0 || !(opt.target_o_pre > 0.0))
            throw ValidationError("--solve-alpha needs --prior-odds, --power, and --target-o-pre");
        double alpha = solve_alpha(*odds, opt.power, opt.target_o_pre);
        if (opt.format == "json") {
            ordered_json j{{"alpha", alpha}};
            out << j.dump(2) << '\n';
        } else if (opt.format == "csv") {
            out << "alpha\n" << format_sig6(alpha) << '\n';
        } else {
            out << "alpha=" << format_sig6(alpha) << '\n';
        }
        return 0;
    }

    if (opt.solve_n) {
        if (opt.effect.empty() || !(opt.target_r_pre > 0.0))
            throw ValidationError("--solve-n needs --effect and --target-r-pre");
        TestModel model = opt.model.build();
        int n = solve_sample_size(model, parse_prior(opt.effect), opt.alpha, opt.target_r_pre);
        if (opt.format == "json") {
            ordered_json j{{"n_per_group", n}};
            out << j.dump(2) << '\n';
        } else if (opt.format == "csv") {
            out << "n_per_group\n" << n << '\n';
        } else {
            out << "n_per_group=" << n << '\n';
        }
        return 0;
    }

    RejectionReport report;
    std::optional<double> boundary;
    if (opt.power >= 0.0) {
        report = report_from_power(opt.alpha, opt.power, odds);
    } else {
        if (opt.effect.empty()) throw ValidationError("design needs --effect (or a given --power)");
        TestModel model = opt.model.build();
        PowerResult pw = compute_power(model, parse_prior(opt.effect), opt.alpha);
        boundary = pw.rejection_boundary;
        report = report_from_power(opt.alpha, pw.avg_power, odds);
    }

    if (opt.format == "json") {
        ordered_json j;
        j["alpha"] = report.alpha;
        j["avg_power"] = report.avg_power;
        j["r_pre"] = report.r_pre;
        if (boundary) j["rejection_boundary"] = *boundary;
        if (report.prior_odds) {
            j["prior_odds"] = *report.prior_odds;
            j["o_pre"] = *report.o_pre;
        }
        out << j.dump(2) << '\n';
    } else if (opt.format == "csv") {
        out << "alpha,avg_power,r_pre,prior_odds,o_pre\n";
        out << format_sig6(report.alpha) << ',' << format_sig6(report.avg_power) << ','
            << format_sig6(report.r_pre) << ',';
        if (report.prior_odds) out << format_sig6(*report.prior_odds);
        out << ',';
        if (report.o_pre) out << format_sig6(*report.o_pre);
        out << '\n';
    } else {
        out << "alpha=" << fmt("%g", report.alpha) << " power=" << fmt("%.2f", report.avg_power)
            << " r_pre=" << fmt("%.1f", report.r_pre);
        if (report.prior_odds)
            out << " prior_odds=" << fmt("%g", *report.prior_odds)
                << " o_pre=" << fmt("%.4g", *report.o_pre);
        out << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// evidence
// ---------------------------------------------------------------------------

struct EvidenceOptions {
    ModelFlags model;
    double p = -1.0;
    double statistic = std::numeric_limits<double>::quiet_NaN();
    std::vector<std::string> priors;
    std::string prior_odds;
    std::string format = "text";
};

int run_evidence(const EvidenceOptions& opt, std::ostream& out) {
    std::optional<double> odds;
    if (!opt.prior_odds.empty()) odds = parse_prior_odds(opt.prior_odds);
    std::optional<double> statistic;
    if (std::isfinite(opt.statistic)) statistic = opt.statistic;

    TestModel model = opt.model.build();
    double p = opt.p;
    if (p < 0.0) {
        if (!statistic) throw ValidationError("evidence needs --p or a statistic (--z / --x)");
        p = model.p_value(*statistic);
    }

    std::vector<PriorSpec> priors;
    priors.reserve(opt.priors.size());
    for (const auto& text : opt.priors) priors.push_back(parse_prior(text));

    EvidenceReport report = evidence_report(model, statistic, p, priors, odds);

    if (opt.format == "json") {
        ordered_json j;
        j["p_value"] = report.p_value;
        if (report.bound) {
            j["bf_bound"] = *report.bound;
        } else {
            j["bf_bound"] = nullptr;
        }
        if (report.prior_odds) j["prior_odds"] = *report.prior_odds;
        ordered_json entries = ordered_json::array();
        for (const auto& e : report.entries) {
            ordered_json je{{"prior", prior_label(e.prior)}, {"r_post", e.r_post}};
            if (e.o_post) je["o_post"] = *e.o_post;
            entries.push_back(je);
        }
        j["entries"] = entries;
        out << j.dump(2) << '\n';
    } else if (opt.format == "csv") {
        out << "p_value,bf_bound,prior,r_post,o_post\n";
        auto bound_str = report.bound ? format_sig6(*report.bound) : std::string();
        if (report.entries.empty()) {
            out << format_sig6(report.p_value) << ',' << bound_str << ",,,\n";
        } else {
            for (const auto& e : report.entries) {
                out << format_sig6(report.p_value) << ',' << bound_str << ','
                    << prior_label(e.prior) << ',' << format_sig6(e.r_post) << ',';
                if (e.o_post) out << format_sig6(*e.o_post);
                out << '\n';
            }
        }
    } else {
        out << "p=" << fmt("%.4g", report.p_value);
        if (report.bound) {
            out << " bf_bound=" << fmt("%.4g", *report.bound);
        } else {
            out << " bf_bound=na";
        }
        if (report.prior_odds) out << " prior_odds=" << fmt("%g", *report.prior_odds);
        if (report.bound && report.entries.empty()) out << " (upper bound only)";
        out << '\n';
        for (const auto& e : report.entries) {
            out << "prior=" << prior_label(e.prior) << " r_post=" << fmt("%.3g", e.r_post);
            if (e.o_post) out << " o_post=" << fmt("%.3g", *e.o_post);
            out << '\n';
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyOptions {
    ModelFlags model;
    std::string prior = "uniform:0:2.95";
    double alpha = 0.05;
    bool mc = false;
    std::uint64_t runs = 1'000'000;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    int curve = 0;
    std::string format = "text";
};

int run_verify(const VerifyOptions& opt, std::ostream& out) {
    ModelFlags flags = opt.model;
    flags.n1 = 1;
    flags.n2 = 1;  // verification runs on the canonical statistic scale
    TestModel model = flags.build();
    PriorSpec prior = parse_prior(opt.prior);
    RejectionRegion region = region_for(model, opt.alpha);

    if (opt.curve > 0) {
        write_curve_csv(out, bf_curve_over_region(model, prior, region, opt.curve));
        return 0;
    }

    PowerResult pw = compute_power(model, prior, opt.alpha);
    double target = rejection_ratio(pw.avg_power, opt.alpha);
    double e_bf = expected_bf_under_null(model, prior, region);
    double rel_err = std::abs(e_bf - target) / target;
    double inv_target = opt.alpha / pw.avg_power;
    double e_inv = expected_inv_bf_under_marginal(model, prior, region);
    double inv_rel_err = std::abs(e_inv - inv_target) / inv_target;

    std::optional<MCReport> mc;
    if (opt.mc)
        mc = mc_check_result2(model, prior, region, opt.runs, {opt.seed, 0}, opt.threads);

    if (opt.format == "json") {
        ordered_json j;
        j["family"] = family_name(model.family);
        j["sides"] = sides_name(model.sides);
        j["alpha"] = opt.alpha;
        j["prior"] = prior_label(prior);
        j["r_pre_target"] = target;
        j["e_bf_null"] = e_bf;
        j["rel_err"] = rel_err;
        j["inv_target"] = inv_target;
        j["e_inv_bf_marginal"] = e_inv;
        j["inv_rel_err"] = inv_rel_err;
        // the inverse identity averages over the prior-mixture alternative,
        // not a fixed parameter value
        j["inv_note"] = "expectation taken under the marginal alternative m(x)";
        if (mc) {
            j["mc"] = ordered_json{{"estimate", mc->estimate}, {"std_error", mc->std_error},
                                   {"target", mc->target},     {"z_score", mc->z_score},
                                   {"n_runs", mc->n_runs},     {"n_retained", mc->n_retained},
                                   {"master_seed", mc->seed.master_seed}};
        }
        out << j.dump(2) << '\n';
    } else {
        out << "family=" << family_name(model.family) << " sides=" << sides_name(model.sides)
            << " alpha=" << fmt("%g", opt.alpha) << " prior=" << prior_label(prior) << '\n';
        out << "r_pre_target=" << format_sig6(target) << " e_bf_null=" << format_sig6(e_bf)
            << " rel_err=" << fmt("%.3g", rel_err) << '\n';
        out << "inv_target=" << format_sig6(inv_target)
            << " e_inv_bf_marginal=" << format_sig6(e_inv)
            << " inv_rel_err=" << fmt("%.3g", inv_rel_err) << '\n';
        if (mc)
            out << "mc_estimate=" << format_sig6(mc->estimate)
                << " mc_se=" << format_sig6(mc->std_error) << " mc_z=" << fmt("%.3g", mc->z_score)
                << " mc_retained=" << mc->n_retained << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// stopping
// ---------------------------------------------------------------------------

struct StoppingOptions {
    double start_z = std::numeric_limits<double>::quiet_NaN();
    double start_p = std::numeric_limits<double>::quiet_NaN();
    bool simulate_null = false;
    double simulate_theta = std::numeric_limits<double>::quiet_NaN();
    std::string batches;
    double threshold = 0.05;
    std::string sides = "two";
    std::uint64_t runs = 100'000;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    std::string format = "text";
};

int run_stopping(const StoppingOptions& opt, std::ostream& out) {
    StoppingConfig config;
    config.sides = parse_sides(opt.sides);
    config.threshold_p = opt.threshold;
    config.batch_fractions = parse_fraction_list(opt.batches);
    config.n_runs = opt.runs;
    config.seed = {opt.seed, 0};

    int start_flags = (std::isfinite(opt.start_z) ? 1 : 0) + (std::isfinite(opt.start_p) ? 1 : 0) +
                      (opt.simulate_null ? 1 : 0) + (std::isfinite(opt.simulate_theta) ? 1 : 0);
    if (start_flags != 1)
        throw ValidationError(
            "stopping needs exactly one of --start-z, --start-p, --simulate-null, --simulate-theta");
    if (std::isfinite(opt.start_z)) {
        config.start = FixedStart{opt.start_z};
    } else if (std::isfinite(opt.start_p)) {
        if (!(opt.start_p > 0.0 && opt.start_p < 1.0))
            throw ValidationError("--start-p must lie in (0,1)");
        double z = config.sides == Sides::OneSidedUpper
                       ? math::std_normal_quantile(1.0 - opt.start_p)
                       : math::std_normal_quantile(1.0 - opt.start_p / 2.0);
        config.start = FixedStart{z};
    } else if (opt.simulate_null) {
        config.start = SimulatedStart{0.0};
    } else {
        config.start = SimulatedStart{opt.simulate_theta};
    }

    StoppingSimReport report = simulate_sequential(config, opt.threads);

    if (opt.format == "json") {
        write_stopping_json(out, config, report);
    } else if (opt.format == "csv") {
        out << "stage,stop_prob,std_error\n";
        const double n = static_cast<double>(report.n_runs);
        for (std::size_t k = 0; k < report.per_stage_stop_prob.size(); ++k) {
            double p = report.per_stage_stop_prob[k];
            out << k << ',' << format_sig6(p) << ','
                << format_sig6(std::sqrt(std::max(p * (1.0 - p), 0.0) / n)) << '\n';
        }
    } else {
        out << "stages=" << config.n_stages() << " threshold=" << fmt("%g", config.threshold_p)
            << " sides=" << sides_name(config.sides) << " runs=" << config.n_runs
            << " seed=" << opt.seed << '\n';
        for (std::size_t k = 0; k < report.per_stage_stop_prob.size(); ++k)
            out << "stage=" << k << " stop_prob=" << format_sig6(report.per_stage_stop_prob[k])
                << '\n';
        out << "cumulative_stop_prob=" << format_sig6(report.cumulative_stop_prob)
            << " se=" << format_sig6(report.std_error) << " n_stopped=" << report.n_stopped
            << " mean_final_z=" << format_sig6(report.mean_final_z)
            << " mean_final_fraction=" << format_sig6(report.mean_final_fraction) << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// reanalyze
// ---------------------------------------------------------------------------

struct ReanalyzeOptions {
    std::string input;
    bool curve = false;
    double p_lo = 0.001;
    double p_hi = 1.0 / std::numbers::e;
    int points = 50;
    std::string format = "csv";
};

int run_reanalyze(const ReanalyzeOptions& opt, std::istream& in, std::ostream& out) {
    if (opt.curve) {
        write_bound_curve_csv(out, emit_bound_curve(opt.p_lo, opt.p_hi, opt.points));
        return 0;
    }

    std::vector<StudyRecord> records;
    if (opt.input.empty() || opt.input == "-") {
        records = parse_study_csv(in);
    } else {
        std::ifstream file(opt.input);
        if (!file) throw ValidationError("cannot open input file '" + opt.input + "'");
        records = parse_study_csv(file);
    }
    auto annotated = annotate_bounds(records);

    if (opt.format == "json") {
        ordered_json rows = ordered_json::array();
        for (const auto& a : annotated) {
            ordered_json row;
            row["study_id"] = a.record.study_id;
            row["p_value"] = a.record.p_value;
            if (a.record.reported_bf) row["reported_bf"] = *a.record.reported_bf;
            row["stopped"] = a.record.stopped;
            if (a.bound) {
                row["bf_bound"] = *a.bound;
                row["reciprocal_bound"] = *a.reciprocal_bound;
            }
            row["flag"] = flag_name(a.flag);
            rows.push_back(row);
        }
        out << rows.dump(2) << '\n';
    } else if (opt.format == "text") {
        for (const auto& a : annotated) {
            out << "study=" << a.record.study_id << " p=" << format_sig6(a.record.p_value);
            if (a.bound) out << " bf_bound=" << format_sig6(*a.bound);
            out << " flag=" << flag_name(a.flag) << '\n';
        }
    } else {
        write_annotated_csv(out, annotated);
    }
    return 0;
}

const char* const kFormatsHelp = "Output format: text, json, or csv";

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Rejection odds for experimental design and evidence reporting"};
    app.name("rejodds");
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a TOML file ([subcommand] sections)");
    app.fallthrough();  // lets --config appear after the subcommand name

    DesignOptions design_opt;
    auto* design_cmd = app.add_subcommand(
        "design", "Pre-experimental power, rejection ratio R_pre, and odds");
    add_model_flags(design_cmd, design_opt.model);
    design_cmd->add_option("--n", design_opt.model.n1, "Per-group sample size");
    design_cmd->add_option("--n2", design_opt.model.n2, "Second-group sample size (defaults to --n)");
    design_cmd->add_option("--effect", design_opt.effect,
                           "Anticipated effect spec (e.g. point:0.21, uniform:0:0.5)");
    design_cmd->add_option("--alpha", design_opt.alpha, "Significance threshold");
    design_cmd->add_option("--prior-odds", design_opt.prior_odds, "Prior odds of H1 to H0 (x or a:b)");
    design_cmd->add_option("--power", design_opt.power, "Externally supplied average power");
    design_cmd->add_flag("--solve-n", design_opt.solve_n, "Solve for the smallest per-group n");
    design_cmd->add_option("--target-r-pre", design_opt.target_r_pre, "Target rejection ratio");
    design_cmd->add_flag("--solve-alpha", design_opt.do_solve_alpha,
                         "Solve for alpha from prior odds, power, and target odds");
    design_cmd->add_option("--target-o-pre", design_opt.target_o_pre, "Target pre-experimental odds");
    design_cmd->add_option("--format", design_opt.format, kFormatsHelp);

    EvidenceOptions evidence_opt;
    auto* evidence_cmd = app.add_subcommand(
        "evidence", "Post-experimental Bayes factors and the p-value bound");
    add_model_flags(evidence_cmd, evidence_opt.model);
    evidence_cmd->add_option("--p", evidence_opt.p, "Observed p-value");
    evidence_cmd->add_option("--z", evidence_opt.statistic, "Observed z statistic");
    evidence_cmd->add_option("--x", evidence_opt.statistic,
                             "Observed statistic (variance family alias for --z)");
    evidence_cmd->add_option("--prior", evidence_opt.priors,
                             "H1 prior (repeatable): point:t, uniform:lo:hi, normal:mu:sd, "
                             "grid:@file, intrinsic, eb-all, eb-noninc");
    evidence_cmd->add_option("--prior-odds", evidence_opt.prior_odds,
                             "Prior odds of H1 to H0 (x or a:b)");
    evidence_cmd->add_option("--format", evidence_opt.format, kFormatsHelp);

    VerifyOptions verify_opt;
    auto* verify_cmd = app.add_subcommand(
        "verify", "Frequentist-identity checks: E[R_post|H0,R] = R_pre by quadrature and MC");
    add_model_flags(verify_cmd, verify_opt.model);
    verify_cmd->add_option("--alpha", verify_opt.alpha, "Region size");
    verify_cmd->add_option("--prior", verify_opt.prior, "H1 prior");
    verify_cmd->add_flag("--mc", verify_opt.mc, "Add a Monte Carlo check");
    verify_cmd->add_option("--runs", verify_opt.runs, "Monte Carlo runs");
    verify_cmd->add_option("--seed", verify_opt.seed, "Master seed");
    verify_cmd->add_option("--threads", verify_opt.threads, "Worker threads (0 = auto)");
    verify_cmd->add_option("--curve", verify_opt.curve,
                           "Emit an R_post curve over the region with this many grid points (CSV)");
    verify_cmd->add_option("--format", verify_opt.format, kFormatsHelp);

    StoppingOptions stopping_opt;
    auto* stopping_cmd = app.add_subcommand(
        "stopping", "Sequential sampling: stop probabilities under unadjusted p-value peeking");
    stopping_cmd->add_option("--start-z", stopping_opt.start_z, "Fixed initial z");
    stopping_cmd->add_option("--start-p", stopping_opt.start_p, "Fixed initial p-value");
    stopping_cmd->add_flag("--simulate-null", stopping_opt.simulate_null,
                           "Simulate the initial sample under the null");
    stopping_cmd->add_option("--simulate-theta", stopping_opt.simulate_theta,
                             "Simulate the initial sample under this drift");
    stopping_cmd->add_option("--batches", stopping_opt.batches,
                             "Comma-separated batch fractions (e.g. 0.25,0.25,0.25,0.25)");
    stopping_cmd->add_option("--threshold", stopping_opt.threshold, "Stopping p-value threshold");
    stopping_cmd->add_option("--sides", stopping_opt.sides, "Sidedness of the p-value: one or two");
    stopping_cmd->add_option("--runs", stopping_opt.runs, "Simulation runs");
    stopping_cmd->add_option("--seed", stopping_opt.seed, "Master seed");
    stopping_cmd->add_option("--threads", stopping_opt.threads, "Worker threads (0 = auto)");
    stopping_cmd->add_option("--format", stopping_opt.format, kFormatsHelp);

    ReanalyzeOptions reanalyze_opt;
    auto* reanalyze_cmd = app.add_subcommand(
        "reanalyze", "Annotate study p-values with Bayes factor bounds");
    reanalyze_cmd->add_option("--input", reanalyze_opt.input, "Input CSV (default: stdin)");
    reanalyze_cmd->add_flag("--curve", reanalyze_opt.curve, "Emit the bound curve instead");
    reanalyze_cmd->add_option("--p-lo", reanalyze_opt.p_lo, "Curve lower p");
    reanalyze_cmd->add_option("--p-hi", reanalyze_opt.p_hi, "Curve upper p (<= 1/e)");
    reanalyze_cmd->add_option("--points", reanalyze_opt.points, "Curve grid points");
    reanalyze_cmd->add_option("--format", reanalyze_opt.format, kFormatsHelp);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream help;
        int code = app.exit(e, help, help);
        out << help.str();
        return code == 0 ? 0 : 1;
    } catch (const CLI::ParseError& e) {
        std::ostringstream usage;
        app.exit(e, usage, usage);
        err << usage.str();
        return 1;
    }

    try {
        if (design_cmd->parsed()) return run_design(design_opt, out);
        if (evidence_cmd->parsed()) return run_evidence(evidence_opt, out);
        if (verify_cmd->parsed()) return run_verify(verify_opt, out);
        if (stopping_cmd->parsed()) return run_stopping(stopping_opt, out);
        if (reanalyze_cmd->parsed()) return run_reanalyze(reanalyze_opt, in, out);
        err << "error: no subcommand given\n";
        return 1;
    } catch (const ConvergenceError& e) {
        err << "computation error: " << e.what() << '\n';
        return 2;
    } catch (const InsufficientSampleError& e) {
        err << "computation error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "computation error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace rejodds::cli
