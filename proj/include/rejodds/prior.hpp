#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rejodds/model.hpp"

namespace rejodds {

// Prior / weight function over the alternative. For the mean families the
// parameter is on the noncentrality scale in evidence calculations and on the
// standardized-effect (Cohen's d) scale in power calculations; for the
// variance family it is the alternative variance.
struct PointMass {
    double location = 0.0;
};

struct UniformInterval {
    double lo = 0.0;
    double hi = 1.0;
};

struct NormalPrior {
    double mean = 0.0;
    double sd = 1.0;
};

struct GridWeight {
    std::vector<double> points;
    std::vector<double> weights;  // nonnegative, summing to 1
};

// Markers resolved per model: Intrinsic becomes a proper normal prior;
// the empirical-Bayes variants select the prior most favorable to H1.
struct Intrinsic {};
struct EmpiricalBayesAll {};
struct EmpiricalBayesNonincreasing {};

using PriorSpec = std::variant<PointMass, UniformInterval, NormalPrior, GridWeight, Intrinsic,
                               EmpiricalBayesAll, EmpiricalBayesNonincreasing>;

// Structural invariants (interval ordering, positive sd, weight normalization).
void validate_prior(const PriorSpec& prior);

// Design-side weight function for power: point/interval/normal/grid only,
// support restricted to the family's legal parameter space.
void validate_effect_spec(const TestModel& model, const PriorSpec& effect);

// Evidence-side H1 prior: additionally rejects a point mass at the null.
void validate_h1_prior(const TestModel& model, const PriorSpec& prior);

// Density of a continuous prior at theta (uniform / normal only).
double prior_density(const PriorSpec& prior, double theta);

// Effective support [lo, hi]; normal priors truncate at mean +- tail_cut*sd.
std::pair<double, double> prior_bounds(const PriorSpec& prior, double tail_cut);

bool is_degenerate(const PriorSpec& prior);  // point mass or single-atom grid

// CLI syntax: point:t | uniform:lo:hi | normal:mu:sd | grid:@file.csv |
// intrinsic | eb-all | eb-noninc. Grid files hold theta,weight rows; weights
// are normalized on load.
PriorSpec parse_prior(const std::string& text);
std::string prior_label(const PriorSpec& prior);

}  // namespace rejodds
