#include "rejodds/freqcheck.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "rejodds/errors.hpp"
#include "rejodds/evidence.hpp"
#include "rejodds/math/normal.hpp"
#include "rejodds/math/parallel.hpp"
#include "rejodds/reanalyze.hpp"

namespace rejodds {

double RejectionRegion::size(const TestModel& model) const {
    if (model.family == Family::NormalVariance) {
        double s0 = std::sqrt(model.null_value);
        return math::std_normal_tail((critical + center) / s0) +
               math::std_normal_tail((critical - center) / s0);
    }
    if (kind == Kind::UpperTail) return math::std_normal_tail(critical - model.null_value);
    return math::std_normal_tail(center + critical - model.null_value) +
           math::std_normal_tail(model.null_value - (center - critical));
}

RejectionRegion region_for(const TestModel& model, double alpha) {
    model.validate();
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("region_for: alpha must lie in (0,1)");
    RejectionRegion region;
    if (model.family == Family::NormalVariance) {
        region.kind = RejectionRegion::Kind::TwoTail;
        region.center = 0.0;
        region.critical = std::sqrt(model.null_value) * math::std_normal_quantile(1.0 - alpha / 2.0);
    } else if (model.sides == Sides::OneSidedUpper) {
        region.kind = RejectionRegion::Kind::UpperTail;
        region.critical = model.null_value + math::std_normal_quantile(1.0 - alpha);
    } else {
        region.kind = RejectionRegion::Kind::TwoTail;
        region.center = model.null_value;
        region.critical = math::std_normal_quantile(1.0 - alpha / 2.0);
    }
    return region;
}

namespace {

// Scale of the statistic's spread, used to pad integration limits.
double statistic_scale(const TestModel& model, const PriorSpec& prior, double tail_cut) {
    if (model.family != Family::NormalVariance) return 1.0;
    auto [lo, hi] = prior_bounds(prior, tail_cut);
    return std::sqrt(std::max(hi, model.null_value));
}

// Integral of fn over the rejection region, truncated where both the null
// density and the marginal carry no mass.
template <class Fn>
double integrate_over_region(const TestModel& model, const PriorSpec& prior,
                             const RejectionRegion& region, const math::Quadrature& quad, Fn&& fn) {
    double reach_lo;
    double reach_hi;
    if (model.family == Family::NormalVariance) {
        double scale = statistic_scale(model, prior, quad.tail_cut);
        reach_hi = quad.tail_cut * scale;
        reach_lo = -reach_hi;
    } else {
        auto [plo, phi] = prior_bounds(prior, quad.tail_cut);
        reach_lo = std::min(plo, model.null_value) - quad.tail_cut;
        reach_hi = std::max(phi, model.null_value) + quad.tail_cut;
    }

    double upper_branch = region.kind == RejectionRegion::Kind::UpperTail
                              ? region.critical
                              : region.center + region.critical;
    double total = math::integrate(fn, std::min(upper_branch, reach_hi), reach_hi, quad);
    if (region.kind == RejectionRegion::Kind::TwoTail) {
        double lower_branch = region.center - region.critical;
        total += math::integrate(fn, reach_lo, std::max(lower_branch, reach_lo), quad);
    }
    return total;
}

}  // namespace

double expected_bf_under_null(const TestModel& model, const PriorSpec& prior,
                              const RejectionRegion& region, const math::Quadrature& quad) {
    model.validate();
    validate_h1_prior(model, prior);
    double alpha = region.size(model);
    if (!(alpha > 0.0)) throw DomainError("expected_bf_under_null: region has zero size under H0");
    double mass = integrate_over_region(model, prior, region, quad, [&](double x) {
        return marginal_density(model, x, prior, quad);
    });
    return mass / alpha;
}

double expected_inv_bf_under_marginal(const TestModel& model, const PriorSpec& prior,
                                      const RejectionRegion& region, const math::Quadrature& quad) {
    model.validate();
    validate_h1_prior(model, prior);
    double null_mass = integrate_over_region(model, prior, region, quad, [&](double x) {
        return null_density(model, x);
    });
    double marginal_mass = integrate_over_region(model, prior, region, quad, [&](double x) {
        return marginal_density(model, x, prior, quad);
    });
    if (!(marginal_mass > 0.0))
        throw DomainError("expected_inv_bf_under_marginal: region has zero mass under the marginal");
    return null_mass / marginal_mass;
}

MCReport mc_check_result2(const TestModel& model, const PriorSpec& prior,
                          const RejectionRegion& region, std::uint64_t n_runs,
                          const math::RngContract& seed, unsigned threads,
                          const math::Quadrature& quad) {
    model.validate();
    validate_h1_prior(model, prior);
    if (n_runs < 10'000) throw DomainError("mc_check_result2: n_runs must be at least 10^4");

    const double null_scale =
        model.family == Family::NormalVariance ? std::sqrt(model.null_value) : 1.0;
    const double null_shift = model.family == Family::NormalVariance ? 0.0 : model.null_value;

    struct Acc {
        std::uint64_t count = 0;
        double sum = 0.0;
        double sum_sq = 0.0;
    };
    constexpr std::uint64_t kChunk = 1 << 14;
    std::vector<Acc> chunks((n_runs + kChunk - 1) / kChunk);

    math::for_each_chunk(n_runs, kChunk, threads, [&](std::uint64_t c, std::uint64_t begin,
                                                      std::uint64_t end) {
        Acc acc;
        for (std::uint64_t i = begin; i < end; ++i) {
            math::RandomStream stream({seed.master_seed, seed.stream_id + i});
            double x = null_shift + null_scale * stream.next_normal();
            if (!region.contains(x)) continue;
            double bf = bayes_factor(model, x, prior, quad);
            ++acc.count;
            acc.sum += bf;
            acc.sum_sq += bf * bf;
        }
        chunks[c] = acc;
    });

    Acc total;
    for (const Acc& acc : chunks) {
        total.count += acc.count;
        total.sum += acc.sum;
        total.sum_sq += acc.sum_sq;
    }
    if (total.count < 2)
        throw InsufficientSampleError("mc_check_result2: fewer than two draws fell in the region");

    MCReport report;
    report.n_runs = n_runs;
    report.n_retained = total.count;
    report.seed = seed;
    report.estimate = total.sum / static_cast<double>(total.count);
    double k = static_cast<double>(total.count);
    double variance = (total.sum_sq - k * report.estimate * report.estimate) / (k - 1.0);
    report.std_error = std::sqrt(std::max(variance, 0.0) / k);
    report.target = expected_bf_under_null(model, prior, region, quad);
    report.z_score = (report.estimate - report.target) / report.std_error;
    return report;
}

std::vector<std::pair<double, double>> bf_curve_over_region(const TestModel& model,
                                                            const PriorSpec& prior,
                                                            const RejectionRegion& region,
                                                            int grid_size,
                                                            const math::Quadrature& quad) {
    if (grid_size < 2) throw DomainError("bf_curve_over_region: grid_size must be at least 2");
    model.validate();
    validate_h1_prior(model, prior);

    double span = 8.0 * (model.family == Family::NormalVariance ? std::sqrt(model.null_value) : 1.0);
    double start = region.kind == RejectionRegion::Kind::UpperTail
                       ? region.critical
                       : region.center + region.critical;
    std::vector<std::pair<double, double>> curve;
    curve.reserve(static_cast<std::size_t>(grid_size));
    for (int i = 0; i < grid_size; ++i) {
        double x = start + span * (static_cast<double>(i) / (grid_size - 1));
        curve.emplace_back(x, bayes_factor(model, x, prior, quad));
    }
    return curve;
}

void write_curve_csv(std::ostream& out, const std::vector<std::pair<double, double>>& curve) {
    out << "statistic,r_post\n";
    for (const auto& [x, bf] : curve) out << format_sig6(x) << ',' << format_sig6(bf) << '\n';
}

}  // namespace rejodds
