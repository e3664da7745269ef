#include "rejodds/evidence.hpp"

#include <cmath>
#include <numbers>

#include "rejodds/errors.hpp"
#include "rejodds/math/normal.hpp"
#include "rejodds/math/optimize.hpp"

namespace rejodds {

std::optional<double> bf_bound(double p) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("bf_bound: p must lie in (0,1)");
    if (p > 1.0 / std::numbers::e) return std::nullopt;
    return 1.0 / (-std::numbers::e * p * std::log(p));
}

double null_density(const TestModel& model, double statistic) {
    if (!std::isfinite(statistic)) throw DomainError("null_density: non-finite statistic");
    if (model.family == Family::NormalVariance) {
        double s0 = std::sqrt(model.null_value);
        return math::std_normal_pdf(statistic / s0) / s0;
    }
    return math::std_normal_pdf(statistic - model.null_value);
}

namespace {

// Density of the statistic at a fixed alternative parameter value.
double likelihood_at(const TestModel& model, double statistic, double theta) {
    if (model.family == Family::NormalVariance) {
        double s = std::sqrt(theta);
        return math::std_normal_pdf(statistic / s) / s;
    }
    return math::std_normal_pdf(statistic - theta);
}

// f(x|theta)/f(x|theta0). Interval priors integrate this ratio rather than
// the raw likelihood so the quadrature tolerance applies on the Bayes-factor
// scale even where the marginal itself is vanishingly small.
double likelihood_ratio_at(const TestModel& model, double statistic, double theta) {
    if (model.family == Family::NormalVariance) {
        double s0 = model.null_value;
        return std::sqrt(s0 / theta) *
               std::exp(0.5 * statistic * statistic * (1.0 / s0 - 1.0 / theta));
    }
    double dev0 = statistic - model.null_value;
    double dev1 = statistic - theta;
    return std::exp(0.5 * (dev0 * dev0 - dev1 * dev1));
}

}  // namespace

double marginal_density(const TestModel& model, double statistic, const PriorSpec& prior,
                        const math::Quadrature& quad) {
    model.validate();
    if (!std::isfinite(statistic)) throw DomainError("marginal_density: non-finite statistic");
    validate_h1_prior(model, prior);

    if (const auto* pm = std::get_if<PointMass>(&prior))
        return likelihood_at(model, statistic, pm->location);

    if (const auto* g = std::get_if<GridWeight>(&prior)) {
        double sum = 0.0;
        for (std::size_t i = 0; i < g->points.size(); ++i)
            sum += g->weights[i] * likelihood_at(model, statistic, g->points[i]);
        return sum;
    }

    if (const auto* n = std::get_if<NormalPrior>(&prior)) {
        // normal-normal convolution: m(x) = N(x; mean, sqrt(1 + sd^2))
        double s = std::sqrt(1.0 + n->sd * n->sd);
        return math::std_normal_pdf((statistic - n->mean) / s) / s;
    }

    if (const auto* u = std::get_if<UniformInterval>(&prior)) {
        double width = u->hi - u->lo;
        double ratio = math::integrate(
                           [&](double t) { return likelihood_ratio_at(model, statistic, t); },
                           u->lo, u->hi, quad) /
                       width;
        return ratio * null_density(model, statistic);
    }

    if (std::holds_alternative<Intrinsic>(prior))
        return marginal_density(model, statistic, PriorSpec{intrinsic_prior(model)}, quad);

    throw DomainError("marginal_density: empirical-Bayes selections are maximizations, not fixed priors");
}

double bayes_factor(const TestModel& model, double statistic, const PriorSpec& prior,
                    const math::Quadrature& quad) {
    if (std::holds_alternative<EmpiricalBayesAll>(prior))
        return empirical_bayes_all(model, statistic).value;
    if (std::holds_alternative<EmpiricalBayesNonincreasing>(prior))
        return empirical_bayes_nonincreasing(model, statistic, 50.0, quad).value;
    if (const auto* u = std::get_if<UniformInterval>(&prior)) {
        model.validate();
        if (!std::isfinite(statistic)) throw DomainError("bayes_factor: non-finite statistic");
        validate_h1_prior(model, prior);
        return math::integrate([&](double t) { return likelihood_ratio_at(model, statistic, t); },
                               u->lo, u->hi, quad) /
               (u->hi - u->lo);
    }
    return marginal_density(model, statistic, prior, quad) / null_density(model, statistic);
}

EbResult empirical_bayes_all(const TestModel& model, double statistic) {
    model.validate();
    if (!std::isfinite(statistic)) throw DomainError("empirical_bayes_all: non-finite statistic");

    if (model.family == Family::NormalVariance) {
        // sup over s of sqrt(s0/s) exp(x^2 (1/s0 - 1/s)/2) sits at s = x^2
        if (statistic == 0.0)
            throw DomainError("empirical_bayes_all: supremum is unbounded at x = 0 for the variance family");
        double s_hat = statistic * statistic;
        double s0 = model.null_value;
        double value = std::sqrt(s0 / s_hat) * std::exp(s_hat * (1.0 / s0) / 2.0 - 0.5);
        return {value, s_hat, true};
    }

    double dev = statistic - model.null_value;
    if (model.sides == Sides::OneSidedUpper && dev <= 0.0)
        return {1.0, model.null_value, false};  // boundary supremum, theta -> theta0+
    if (dev == 0.0) return {1.0, model.null_value, false};
    return {std::exp(0.5 * dev * dev), statistic, true};
}

EbResult empirical_bayes_nonincreasing(const TestModel& model, double statistic, double a_max,
                                       const math::Quadrature& quad) {
    model.validate();
    if (!std::isfinite(statistic))
        throw DomainError("empirical_bayes_nonincreasing: non-finite statistic");
    if (model.family == Family::NormalVariance || model.sides != Sides::OneSidedUpper)
        throw UnsupportedModelError(
            "empirical_bayes_nonincreasing: defined for one-sided z families only");
    if (!(a_max > 0.0)) throw DomainError("empirical_bayes_nonincreasing: a_max must be positive");

    constexpr double kAMin = 1e-4;
    auto objective = [&](double a) {
        UniformInterval u{model.null_value, model.null_value + a};
        return bayes_factor(model, statistic, PriorSpec{u}, quad);
    };
    math::MaxResult best;
    try {
        best = math::maximize_1d(objective, kAMin, a_max);
    } catch (const DomainError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConvergenceError(std::string("empirical_bayes_nonincreasing: ") + e.what(), 0.0, 0.0);
    }
    return {best.max_value, best.argmax, true};
}

NormalPrior intrinsic_prior(const TestModel& model) {
    model.validate();
    if (model.family != Family::ZMean)
        throw UnsupportedModelError("intrinsic_prior: available for the z-mean family only");
    return NormalPrior{model.null_value, std::numbers::sqrt2};
}

double post_odds(double prior_odds, double r_post) {
    if (!(prior_odds > 0.0) || !std::isfinite(prior_odds))
        throw DomainError("post_odds: prior_odds must be positive and finite");
    if (!(r_post > 0.0) || !std::isfinite(r_post))
        throw DomainError("post_odds: r_post must be positive and finite");
    return prior_odds * r_post;
}

EvidenceReport evidence_report(const TestModel& model, std::optional<double> statistic, double p,
                               const std::vector<PriorSpec>& priors,
                               std::optional<double> prior_odds, const math::Quadrature& quad) {
    EvidenceReport report;
    report.p_value = p;
    report.bound = bf_bound(p);
    report.prior_odds = prior_odds;
    if (!priors.empty() && !statistic)
        throw DomainError("evidence_report: a statistic is required to evaluate priors");
    for (const auto& prior : priors) {
        EvidenceEntry entry;
        entry.prior = prior;
        entry.r_post = bayes_factor(model, *statistic, prior, quad);
        if (prior_odds) entry.o_post = post_odds(*prior_odds, entry.r_post);
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace rejodds
