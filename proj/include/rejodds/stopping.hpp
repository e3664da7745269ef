#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <variant>
#include <vector>

#include "rejodds/freqcheck.hpp"
#include "rejodds/math/quadrature.hpp"
#include "rejodds/math/rng.hpp"
#include "rejodds/model.hpp"
#include "rejodds/prior.hpp"

namespace rejodds {

// Initial sample: either a fixed observed z, or a z simulated under a point
// drift (theta = 0 gives the null).
struct FixedStart {
    double z = 0.0;
};
struct SimulatedStart {
    double theta = 0.0;
};
using StartSpec = std::variant<FixedStart, SimulatedStart>;

// Sequential design on the normalized sufficient-statistic scale: the initial
// sample counts as fraction 1.0; each batch adds the given fraction of it.
// After every stage the unadjusted p-value of the accumulated data is
// compared with threshold_p, stopping at the first crossing. batch_fractions
// may be empty (a single-stage design).
struct StoppingConfig {
    StartSpec start = SimulatedStart{0.0};
    std::vector<double> batch_fractions;
    double threshold_p = 0.05;
    Sides sides = Sides::TwoSided;
    std::uint64_t n_runs = 100'000;
    math::RngContract seed;

    void validate() const;
    std::size_t n_stages() const { return batch_fractions.size() + 1; }
};

struct StoppingSimReport {
    std::vector<double> per_stage_stop_prob;  // disjoint stop events, one per stage
    double cumulative_stop_prob = 0.0;
    double std_error = 0.0;  // of the cumulative probability
    std::uint64_t n_runs = 0;
    std::uint64_t n_stopped = 0;
    double mean_final_z = 0.0;         // over stopped trajectories
    double mean_final_fraction = 0.0;  // total data fraction at stop (or at the last stage)
};

StoppingSimReport simulate_sequential(const StoppingConfig& config, unsigned threads = 0);

// Bayes factor for a stopped data set, computed once through the stopped-data
// density (the stopping-rule factor multiplies numerator and denominator
// alike) and once as a plain fixed-sample Bayes factor from the same
// sufficient statistic. The two returns are equal: the common factor cancels.
// final_mean is the running mean of the accumulated data on the fraction
// scale; the prior lives on the drift-per-unit-fraction scale.
std::pair<double, double> bf_stopped_vs_fixed(double final_mean, double total_n_fraction,
                                              const PriorSpec& prior, const TestModel& model,
                                              double stopping_factor = 1.0,
                                              const math::Quadrature& quad = {});

// Type I error of the stopped design (start must simulate from the null).
// Exceeds threshold_p whenever extra batches exist.
MCReport stopped_type1_error(const StoppingConfig& config, unsigned threads = 0);

// JSON report: per-stage probabilities, standard errors, config echo, seed.
void write_stopping_json(std::ostream& out, const StoppingConfig& config,
                         const StoppingSimReport& report);

}  // namespace rejodds
