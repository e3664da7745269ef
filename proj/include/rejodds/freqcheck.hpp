#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "rejodds/math/quadrature.hpp"
#include "rejodds/math/rng.hpp"
#include "rejodds/model.hpp"
#include "rejodds/prior.hpp"

namespace rejodds {

// Rejection region on the canonical statistic scale: {z >= c} for one-sided
// mean tests, {|x - center| >= c} otherwise (center is theta0 for two-sided
// mean tests and 0 for the variance family).
struct RejectionRegion {
    enum class Kind { UpperTail, TwoTail };

    Kind kind = Kind::UpperTail;
    double critical = 0.0;
    double center = 0.0;

    bool contains(double x) const {
        return kind == Kind::UpperTail ? x >= critical : std::abs(x - center) >= critical;
    }

    // P(region | H0) for the given model.
    double size(const TestModel& model) const;
};

// Region whose probability under H0 equals alpha.
RejectionRegion region_for(const TestModel& model, double alpha);

// Monte Carlo estimate against a fixed target.
struct MCReport {
    double estimate = 0.0;
    double std_error = 0.0;
    double target = 0.0;
    double z_score = 0.0;
    std::uint64_t n_runs = 0;
    std::uint64_t n_retained = 0;
    math::RngContract seed;
};

// E[R_post | H0, region] = (1/alpha) * integral of m over the region, which
// equals (1 - avg beta)/alpha = R_pre.
double expected_bf_under_null(const TestModel& model, const PriorSpec& prior,
                              const RejectionRegion& region, const math::Quadrature& quad = {});

// E[1/R_post | H1*, region] = integral of f(.|theta0) over the region divided
// by the integral of m over the region = alpha/(1 - avg beta). H1* is the
// marginal alternative with density m, so this identity averages over the
// prior as well as the data.
double expected_inv_bf_under_marginal(const TestModel& model, const PriorSpec& prior,
                                      const RejectionRegion& region,
                                      const math::Quadrature& quad = {});

// Rejection-sampling check of the first identity: draw under H0, keep draws
// in the region, average the Bayes factor. threads=0 picks the hardware
// count; estimates are independent of the partitioning.
MCReport mc_check_result2(const TestModel& model, const PriorSpec& prior,
                          const RejectionRegion& region, std::uint64_t n_runs,
                          const math::RngContract& seed, unsigned threads = 0,
                          const math::Quadrature& quad = {});

// R_post tabulated on a grid across the region (upper branch), for export.
std::vector<std::pair<double, double>> bf_curve_over_region(const TestModel& model,
                                                            const PriorSpec& prior,
                                                            const RejectionRegion& region,
                                                            int grid_size,
                                                            const math::Quadrature& quad = {});

// CSV with header statistic,r_post.
void write_curve_csv(std::ostream& out, const std::vector<std::pair<double, double>>& curve);

}  // namespace rejodds
