#pragma once

#include <optional>
#include <vector>

#include "rejodds/math/quadrature.hpp"
#include "rejodds/model.hpp"
#include "rejodds/prior.hpp"

namespace rejodds {

// Largest Bayes factor attainable from a proper p-value: 1/(-e p ln p) for
// p <= 1/e, absent otherwise (the bound's precondition fails above 1/e).
std::optional<double> bf_bound(double p);

// f(x | theta0): density of the canonical statistic under the null.
double null_density(const TestModel& model, double statistic);

// m(x) = integral of f(x|theta) against the prior. Normal and point priors
// evaluate in closed form, interval priors by quadrature, grids by exact
// weighted sums.
double marginal_density(const TestModel& model, double statistic, const PriorSpec& prior,
                        const math::Quadrature& quad = {});

// Bayes factor m(x) / f(x|theta0). Empirical-Bayes markers dispatch to the
// corresponding maximization; Intrinsic resolves to the intrinsic prior.
double bayes_factor(const TestModel& model, double statistic, const PriorSpec& prior,
                    const math::Quadrature& quad = {});

// Result of an empirical-Bayes maximization. argmax holds the maximizing
// point mass location (eb-all) or interval endpoint (eb-noninc); attained is
// false when the supremum sits on the boundary of the legal space.
struct EbResult {
    double value = 1.0;
    double argmax = 0.0;
    bool attained = true;
};

// Supremum of the Bayes factor over all point-mass priors.
EbResult empirical_bayes_all(const TestModel& model, double statistic);

// Maximum of the Bayes factor over UniformInterval(0, a) priors (one-sided z
// families only); returns the maximizing a and the maximized Bayes factor.
EbResult empirical_bayes_nonincreasing(const TestModel& model, double statistic,
                                       double a_max = 50.0, const math::Quadrature& quad = {});

// Proper prior built from a constant estimation prior and one imaginary
// observation drawn under the null: a normal centered at the null value with
// variance 2. z-mean family only.
NormalPrior intrinsic_prior(const TestModel& model);

// prior_odds * r_post
double post_odds(double prior_odds, double r_post);

struct EvidenceEntry {
    PriorSpec prior;
    double r_post = 0.0;
    std::optional<double> o_post;
};

struct EvidenceReport {
    double p_value = 0.0;
    std::optional<double> bound;  // present iff p <= 1/e
    std::vector<EvidenceEntry> entries;
    std::optional<double> prior_odds;
};

// Bundles the bound and per-prior Bayes factors for a single dataset.
// statistic is required whenever priors are supplied.
EvidenceReport evidence_report(const TestModel& model, std::optional<double> statistic, double p,
                               const std::vector<PriorSpec>& priors,
                               std::optional<double> prior_odds = {},
                               const math::Quadrature& quad = {});

}  // namespace rejodds
