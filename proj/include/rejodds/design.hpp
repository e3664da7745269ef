#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rejodds/math/quadrature.hpp"
#include "rejodds/model.hpp"
#include "rejodds/prior.hpp"

namespace rejodds {

struct PowerResult {
    double alpha = 0.0;
    double avg_power = 0.0;
    double rejection_boundary = 0.0;  // critical value on the statistic scale
    std::vector<std::pair<double, double>> per_theta_power;  // (theta, power), non-degenerate effects
};

// Design-stage outputs: r_pre = avg_power / alpha; o_pre = prior_odds * r_pre.
struct RejectionReport {
    double alpha = 0.0;
    double avg_power = 0.0;
    double r_pre = 0.0;
    std::optional<double> prior_odds;
    std::optional<double> o_pre;
};

// Rejection boundary with exact size alpha, plus power averaged against the
// effect spec (a point value or a weight function on the standardized scale).
PowerResult compute_power(const TestModel& model, const PriorSpec& effect, double alpha,
                          const math::Quadrature& quad = {});

// power / alpha
double rejection_ratio(double power, double alpha);

// prior_odds * r_pre
double pre_odds(double prior_odds, double r_pre);

// alpha achieving target_o_pre = prior_odds * avg_power / alpha.
double solve_alpha(double prior_odds, double avg_power, double target_o_pre);

// Smallest per-group n with rejection_ratio(power(n), alpha) >= target_r_pre.
int solve_sample_size(const TestModel& model, const PriorSpec& effect, double alpha,
                      double target_r_pre);

RejectionReport design_report(const TestModel& model, const PriorSpec& effect, double alpha,
                              std::optional<double> prior_odds = {});

// Report built from an externally supplied average power.
RejectionReport report_from_power(double alpha, double avg_power,
                                  std::optional<double> prior_odds = {});

// Correlation effect size to Cohen's d: d = 2r/sqrt(1-r^2). Provided as a
// utility only; no conversion is ever applied implicitly.
double cohens_d_from_r(double r);

}  // namespace rejodds
