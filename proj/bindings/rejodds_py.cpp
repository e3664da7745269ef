#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "rejodds/design.hpp"
#include "rejodds/errors.hpp"
#include "rejodds/evidence.hpp"
#include "rejodds/freqcheck.hpp"
#include "rejodds/math/normal.hpp"
#include "rejodds/prior.hpp"
#include "rejodds/stopping.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace rejodds;

namespace {

TestModel make_model(const std::string& family, const std::string& sides, double null_value,
                     double known_sd, int n1, int n2) {
    TestModel m;
    m.family = parse_family(family);
    m.sides = parse_sides(sides);
    m.null_value = null_value;
    m.known_sd = known_sd;
    m.n1 = n1;
    m.n2 = n2 > 0 ? n2 : n1;
    m.validate();
    return m;
}

StoppingConfig make_config(std::optional<double> start_z, std::optional<double> theta,
                           const std::vector<double>& batches, double threshold,
                           const std::string& sides, std::uint64_t runs, std::uint64_t seed) {
    StoppingConfig config;
    if (start_z && theta) throw DomainError("give either start_z or theta, not both");
    if (start_z) {
        config.start = FixedStart{*start_z};
    } else {
        config.start = SimulatedStart{theta.value_or(0.0)};
    }
    config.batch_fractions = batches;
    config.threshold_p = threshold;
    config.sides = parse_sides(sides);
    config.n_runs = runs;
    config.seed = {seed, 0};
    return config;
}

}  // namespace

PYBIND11_MODULE(_rejodds, m) {
    m.doc() = "Rejection odds: power-based rejection ratios, Bayes factors, and the p-value bound";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<InsufficientSampleError>(m, "InsufficientSampleError",
                                                    PyExc_RuntimeError);

    py::class_<TestModel>(m, "TestModel")
        .def(py::init(&make_model), "family"_a = "z-mean", "sides"_a = "one", "null_value"_a = 0.0,
             "known_sd"_a = 1.0, "n1"_a = 1, "n2"_a = 0)
        .def_property_readonly("family", [](const TestModel& t) { return family_name(t.family); })
        .def_property_readonly("sides", [](const TestModel& t) { return sides_name(t.sides); })
        .def_readonly("null_value", &TestModel::null_value)
        .def_readonly("known_sd", &TestModel::known_sd)
        .def_readonly("n1", &TestModel::n1)
        .def_readonly("n2", &TestModel::n2)
        .def("noncentrality", &TestModel::noncentrality, "d"_a)
        .def("p_value", &TestModel::p_value, "statistic"_a)
        .def("__repr__", [](const TestModel& t) {
            return "TestModel(family=" + family_name(t.family) + ", sides=" + sides_name(t.sides) +
                   ")";
        });

    py::class_<PowerResult>(m, "PowerResult")
        .def_readonly("alpha", &PowerResult::alpha)
        .def_readonly("avg_power", &PowerResult::avg_power)
        .def_readonly("rejection_boundary", &PowerResult::rejection_boundary)
        .def_readonly("per_theta_power", &PowerResult::per_theta_power);

    py::class_<RejectionReport>(m, "RejectionReport")
        .def_readonly("alpha", &RejectionReport::alpha)
        .def_readonly("avg_power", &RejectionReport::avg_power)
        .def_readonly("r_pre", &RejectionReport::r_pre)
        .def_readonly("prior_odds", &RejectionReport::prior_odds)
        .def_readonly("o_pre", &RejectionReport::o_pre);

    py::class_<EbResult>(m, "EbResult")
        .def_readonly("value", &EbResult::value)
        .def_readonly("argmax", &EbResult::argmax)
        .def_readonly("attained", &EbResult::attained);

    py::class_<MCReport>(m, "MCReport")
        .def_readonly("estimate", &MCReport::estimate)
        .def_readonly("std_error", &MCReport::std_error)
        .def_readonly("target", &MCReport::target)
        .def_readonly("z_score", &MCReport::z_score)
        .def_readonly("n_runs", &MCReport::n_runs)
        .def_readonly("n_retained", &MCReport::n_retained);

    py::class_<StoppingSimReport>(m, "StoppingSimReport")
        .def_readonly("per_stage_stop_prob", &StoppingSimReport::per_stage_stop_prob)
        .def_readonly("cumulative_stop_prob", &StoppingSimReport::cumulative_stop_prob)
        .def_readonly("std_error", &StoppingSimReport::std_error)
        .def_readonly("n_runs", &StoppingSimReport::n_runs)
        .def_readonly("n_stopped", &StoppingSimReport::n_stopped)
        .def_readonly("mean_final_z", &StoppingSimReport::mean_final_z)
        .def_readonly("mean_final_fraction", &StoppingSimReport::mean_final_fraction);

    m.def("std_normal_cdf", &math::std_normal_cdf, "x"_a);
    m.def("std_normal_quantile", &math::std_normal_quantile, "u"_a);

    m.def(
        "compute_power",
        [](const TestModel& model, const std::string& effect, double alpha) {
            return compute_power(model, parse_prior(effect), alpha);
        },
        "model"_a, "effect"_a, "alpha"_a,
        "Rejection boundary and power averaged against the effect spec");
    m.def("rejection_ratio", &rejection_ratio, "power"_a, "alpha"_a);
    m.def("pre_odds", &pre_odds, "prior_odds"_a, "r_pre"_a);
    m.def("solve_alpha", &solve_alpha, "prior_odds"_a, "avg_power"_a, "target_o_pre"_a);
    m.def(
        "solve_sample_size",
        [](const TestModel& model, const std::string& effect, double alpha, double target) {
            return solve_sample_size(model, parse_prior(effect), alpha, target);
        },
        "model"_a, "effect"_a, "alpha"_a, "target_r_pre"_a);
    m.def(
        "design_report",
        [](const TestModel& model, const std::string& effect, double alpha,
           std::optional<double> prior_odds) {
            return design_report(model, parse_prior(effect), alpha, prior_odds);
        },
        "model"_a, "effect"_a, "alpha"_a, "prior_odds"_a = py::none());
    m.def("cohens_d_from_r", &cohens_d_from_r, "r"_a);

    m.def("bf_bound", &bf_bound, "p"_a, "1/(-e p ln p) for p <= 1/e, None otherwise");
    m.def(
        "bayes_factor",
        [](const TestModel& model, double statistic, const std::string& prior) {
            return bayes_factor(model, statistic, parse_prior(prior));
        },
        "model"_a, "statistic"_a, "prior"_a);
    m.def("empirical_bayes_all", &empirical_bayes_all, "model"_a, "statistic"_a);
    m.def(
        "empirical_bayes_nonincreasing",
        [](const TestModel& model, double statistic) {
            return empirical_bayes_nonincreasing(model, statistic);
        },
        "model"_a, "statistic"_a);
    m.def(
        "intrinsic_prior",
        [](const TestModel& model) {
            NormalPrior prior = intrinsic_prior(model);
            return py::make_tuple(prior.mean, prior.sd);
        },
        "model"_a, "Returns (mean, sd) of the intrinsic normal prior");
    m.def("post_odds", &post_odds, "prior_odds"_a, "r_post"_a);

    m.def(
        "expected_bf_under_null",
        [](const TestModel& model, const std::string& prior, double alpha) {
            return expected_bf_under_null(model, parse_prior(prior), region_for(model, alpha));
        },
        "model"_a, "prior"_a, "alpha"_a);
    m.def(
        "expected_inv_bf_under_marginal",
        [](const TestModel& model, const std::string& prior, double alpha) {
            return expected_inv_bf_under_marginal(model, parse_prior(prior),
                                                  region_for(model, alpha));
        },
        "model"_a, "prior"_a, "alpha"_a);
    m.def(
        "mc_check_result2",
        [](const TestModel& model, const std::string& prior, double alpha, std::uint64_t runs,
           std::uint64_t seed, unsigned threads) {
            return mc_check_result2(model, parse_prior(prior), region_for(model, alpha), runs,
                                    {seed, 0}, threads);
        },
        "model"_a, "prior"_a, "alpha"_a, "runs"_a = 1'000'000, "seed"_a = 0, "threads"_a = 0);

    m.def(
        "simulate_sequential",
        [](std::optional<double> start_z, std::optional<double> theta,
           const std::vector<double>& batches, double threshold, const std::string& sides,
           std::uint64_t runs, std::uint64_t seed, unsigned threads) {
            return simulate_sequential(
                make_config(start_z, theta, batches, threshold, sides, runs, seed), threads);
        },
        "start_z"_a = py::none(), "theta"_a = py::none(), "batches"_a = std::vector<double>{},
        "threshold"_a = 0.05, "sides"_a = "two", "runs"_a = 100'000, "seed"_a = 0,
        "threads"_a = 0);
    m.def(
        "bf_stopped_vs_fixed",
        [](double final_mean, double total_n_fraction, const std::string& prior,
           const TestModel& model, double stopping_factor) {
            auto [stopped, fixed] =
                bf_stopped_vs_fixed(final_mean, total_n_fraction, parse_prior(prior), model,
                                    stopping_factor);
            return py::make_tuple(stopped, fixed);
        },
        "final_mean"_a, "total_n_fraction"_a, "prior"_a, "model"_a = TestModel{},
        "stopping_factor"_a = 1.0);
}
