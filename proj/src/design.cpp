#include "rejodds/design.hpp"

#include <algorithm>
#include <cmath>

#include "rejodds/errors.hpp"
#include "rejodds/math/normal.hpp"

namespace rejodds {

namespace {

// Critical value on the statistic scale: region z >= c for one-sided mean
// tests, |z - theta0| >= c two-sided, |x| >= c for the variance family.
double critical_value(const TestModel& model, double alpha) {
    if (model.family == Family::NormalVariance)
        return std::sqrt(model.null_value) * math::std_normal_quantile(1.0 - alpha / 2.0);
    if (model.sides == Sides::OneSidedUpper)
        return model.null_value + math::std_normal_quantile(1.0 - alpha);
    return math::std_normal_quantile(1.0 - alpha / 2.0);
}

// Power at a single parameter value on the effect scale. Mean families shift
// z by the noncentrality; both tails are counted in the two-sided case.
double power_at(const TestModel& model, double boundary, double theta) {
    if (model.family == Family::NormalVariance)
        return 2.0 * math::std_normal_tail(boundary / std::sqrt(theta));
    double lambda = model.noncentrality(theta);
    if (model.sides == Sides::OneSidedUpper)
        return math::std_normal_tail(boundary - model.null_value - lambda);
    return math::std_normal_tail(boundary - lambda) + math::std_normal_tail(boundary + lambda);
}

}  // namespace

PowerResult compute_power(const TestModel& model, const PriorSpec& effect, double alpha,
                          const math::Quadrature& quad) {
    model.validate();
    validate_effect_spec(model, effect);
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("compute_power: alpha must lie in (0,1)");

    PowerResult result;
    result.alpha = alpha;
    result.rejection_boundary = critical_value(model, alpha);
    const double c = result.rejection_boundary;

    auto pw = [&](double theta) { return power_at(model, c, theta); };

    if (const auto* pm = std::get_if<PointMass>(&effect)) {
        result.avg_power = pw(pm->location);
    } else if (const auto* g = std::get_if<GridWeight>(&effect)) {
        double sum = 0.0;
        for (std::size_t i = 0; i < g->points.size(); ++i) sum += g->weights[i] * pw(g->points[i]);
        result.avg_power = sum;
    } else {
        auto [lo, hi] = prior_bounds(effect, quad.tail_cut);
        result.avg_power =
            math::integrate([&](double t) { return pw(t) * prior_density(effect, t); }, lo, hi, quad);
    }
    result.avg_power = std::clamp(result.avg_power, 0.0, 1.0);

    if (!is_degenerate(effect)) {
        if (const auto* g = std::get_if<GridWeight>(&effect)) {
            for (double t : g->points) result.per_theta_power.emplace_back(t, pw(t));
        } else {
            constexpr int kGridPoints = 41;
            auto [lo, hi] = prior_bounds(effect, quad.tail_cut);
            for (int i = 0; i < kGridPoints; ++i) {
                double t = lo + (hi - lo) * (static_cast<double>(i) / (kGridPoints - 1));
                result.per_theta_power.emplace_back(t, pw(t));
            }
        }
    }
    return result;
}

double rejection_ratio(double power, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("rejection_ratio: alpha must lie in (0,1)");
    if (!(power >= 0.0 && power <= 1.0))
        throw DomainError("rejection_ratio: power must lie in [0,1]");
    return power / alpha;
}

double pre_odds(double prior_odds, double r_pre) {
    if (!(prior_odds > 0.0) || !std::isfinite(prior_odds))
        throw DomainError("pre_odds: prior_odds must be positive and finite");
    if (!(r_pre > 0.0) || !std::isfinite(r_pre))
        throw DomainError("pre_odds: r_pre must be positive and finite");
    return prior_odds * r_pre;
}

double solve_alpha(double prior_odds, double avg_power, double target_o_pre) {
    if (!(prior_odds > 0.0) || !std::isfinite(prior_odds))
        throw DomainError("solve_alpha: prior_odds must be positive and finite");
    if (!(avg_power > 0.0 && avg_power <= 1.0))
        throw DomainError("solve_alpha: avg_power must lie in (0,1]");
    if (!(target_o_pre > 0.0) || !std::isfinite(target_o_pre))
        throw DomainError("solve_alpha: target_o_pre must be positive and finite");
    double alpha = prior_odds * avg_power / target_o_pre;
    if (!(alpha > 0.0 && alpha < 1.0))
        throw InfeasibleTargetError("solve_alpha: implied alpha falls outside (0,1)");
    return alpha;
}

int solve_sample_size(const TestModel& model, const PriorSpec& effect, double alpha,
                      double target_r_pre) {
    if (!model.is_mean_family())
        throw UnsupportedModelError("solve_sample_size: sample-size search applies to mean families");
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("solve_sample_size: alpha must lie in (0,1)");
    if (!(target_r_pre > 0.0)) throw DomainError("solve_sample_size: target must be positive");
    if (target_r_pre > 1.0 / alpha)
        throw InfeasibleTargetError("solve_sample_size: target exceeds the 1/alpha cap");

    auto ratio_at = [&](int n) {
        TestModel m = model;
        m.n1 = n;
        m.n2 = n;
        return rejection_ratio(compute_power(m, effect, alpha).avg_power, alpha);
    };

    constexpr int kMaxN = 1 << 28;
    if (ratio_at(1) >= target_r_pre) return 1;
    int lo = 1;  // fails the target
    int hi = 2;
    while (ratio_at(hi) < target_r_pre) {
        lo = hi;
        if (hi > kMaxN)
            throw InfeasibleTargetError("solve_sample_size: target not reachable at any feasible n");
        hi *= 2;
    }
    while (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        (ratio_at(mid) >= target_r_pre ? hi : lo) = mid;
    }
    return hi;
}

RejectionReport design_report(const TestModel& model, const PriorSpec& effect, double alpha,
                              std::optional<double> prior_odds) {
    PowerResult power = compute_power(model, effect, alpha);
    return report_from_power(alpha, power.avg_power, prior_odds);
}

RejectionReport report_from_power(double alpha, double avg_power,
                                  std::optional<double> prior_odds) {
    RejectionReport report;
    report.alpha = alpha;
    report.avg_power = avg_power;
    report.r_pre = rejection_ratio(avg_power, alpha);
    if (prior_odds) {
        report.prior_odds = *prior_odds;
        report.o_pre = pre_odds(*prior_odds, report.r_pre);
    }
    return report;
}

double cohens_d_from_r(double r) {
    if (!(r > -1.0 && r < 1.0)) throw DomainError("cohens_d_from_r: r must lie in (-1,1)");
    return 2.0 * r / std::sqrt(1.0 - r * r);
}

}  // namespace rejodds
