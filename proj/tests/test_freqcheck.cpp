#include "doctest.h"

#include <cmath>
#include <sstream>

#include "rejodds/design.hpp"
#include "rejodds/errors.hpp"
#include "rejodds/freqcheck.hpp"

using namespace rejodds;

namespace {

TestModel one_sided_z() {
    TestModel m;
    m.family = Family::ZMean;
    m.sides = Sides::OneSidedUpper;
    return m;
}

TestModel variance_model() {
    TestModel m;
    m.family = Family::NormalVariance;
    m.sides = Sides::TwoSided;
    m.null_value = 1.0;
    return m;
}

RejectionRegion whole_line() {
    RejectionRegion r;
    r.kind = RejectionRegion::Kind::UpperTail;
    r.critical = -40.0;
    return r;
}

}  // namespace

TEST_CASE("regions carry exactly their declared size under the null") {
    for (double alpha : {0.001, 0.01, 0.05, 0.2}) {
        TestModel zm = one_sided_z();
        CHECK(std::abs(region_for(zm, alpha).size(zm) - alpha) < 1e-10);
        TestModel zt = zm;
        zt.sides = Sides::TwoSided;
        CHECK(std::abs(region_for(zt, alpha).size(zt) - alpha) < 1e-10);
        TestModel vm = variance_model();
        CHECK(std::abs(region_for(vm, alpha).size(vm) - alpha) < 1e-10);
        TestModel shifted = zm;
        shifted.null_value = 1.3;
        CHECK(std::abs(region_for(shifted, alpha).size(shifted) - alpha) < 1e-10);
    }
}

TEST_CASE("expected Bayes factor over the region equals the rejection ratio") {
    TestModel vm = variance_model();
    RejectionRegion region = region_for(vm, 0.05);
    double e_bf = expected_bf_under_null(vm, PriorSpec{PointMass{1.1}}, region);
    CHECK(e_bf == doctest::Approx(1.2331456).epsilon(1e-6));

    // design-module power is the independent target
    double power = compute_power(vm, PointMass{1.1}, 0.05).avg_power;
    CHECK(e_bf == doctest::Approx(power / 0.05).epsilon(1e-8));

    TestModel zm = one_sided_z();
    RejectionRegion zr = region_for(zm, 0.05);
    PriorSpec uniform{UniformInterval{0.0, 2.95}};
    double e_bf_z = expected_bf_under_null(zm, uniform, zr);
    double power_z = compute_power(zm, uniform, 0.05).avg_power;
    CHECK(e_bf_z == doctest::Approx(power_z / 0.05).epsilon(1e-8));

    CHECK(expected_bf_under_null(zm, uniform, whole_line()) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("expected reciprocal Bayes factor under the marginal alternative") {
    TestModel vm = variance_model();
    RejectionRegion region = region_for(vm, 0.05);
    double e_inv = expected_inv_bf_under_marginal(vm, PriorSpec{PointMass{1.1}}, region);
    CHECK(e_inv == doctest::Approx(1.0 / 1.2331456).epsilon(1e-6));

    double e_bf = expected_bf_under_null(vm, PriorSpec{PointMass{1.1}}, region);
    CHECK(e_bf * e_inv == doctest::Approx(1.0).epsilon(1e-8));

    CHECK(expected_inv_bf_under_marginal(vm, PriorSpec{PointMass{1.1}}, whole_line()) ==
          doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("identity holds across priors and alphas at 1e-6 relative error") {
    TestModel zm = one_sided_z();
    const PriorSpec priors[] = {PriorSpec{PointMass{1.0}}, PriorSpec{UniformInterval{0.0, 2.95}},
                                PriorSpec{NormalPrior{0.0, 1.4142135623730951}},
                                PriorSpec{GridWeight{{0.5, 1.5, 2.5}, {0.25, 0.5, 0.25}}}};
    for (const auto& prior : priors) {
        for (double alpha : {0.05, 0.01}) {
            RejectionRegion region = region_for(zm, alpha);
            double target = compute_power(zm, prior, alpha).avg_power / alpha;
            double e_bf = expected_bf_under_null(zm, prior, region);
            CHECK(std::abs(e_bf - target) / target < 1e-6);
        }
    }
}

TEST_CASE("monte carlo check replicates the quadrature target") {
    TestModel vm = variance_model();
    RejectionRegion region = region_for(vm, 0.05);
    MCReport report = mc_check_result2(vm, PriorSpec{PointMass{1.1}}, region, 100'000, {7, 0});
    CHECK(report.n_runs == 100'000);
    CHECK(report.n_retained > 3000);
    CHECK(report.std_error > 0.0);
    CHECK(report.target == doctest::Approx(1.2331456).epsilon(1e-6));
    CHECK(std::abs(report.z_score) < 4.0);

    // partitioning must not change the estimate
    MCReport serial = mc_check_result2(vm, PriorSpec{PointMass{1.1}}, region, 100'000, {7, 0}, 1);
    MCReport wide = mc_check_result2(vm, PriorSpec{PointMass{1.1}}, region, 100'000, {7, 0}, 4);
    CHECK(serial.estimate == wide.estimate);
    CHECK(serial.std_error == wide.std_error);
    CHECK(serial.n_retained == wide.n_retained);
}

TEST_CASE("monte carlo error paths") {
    TestModel zm = one_sided_z();
    RejectionRegion far;
    far.kind = RejectionRegion::Kind::UpperTail;
    far.critical = 8.0;
    CHECK_THROWS_AS(
        mc_check_result2(zm, PriorSpec{PointMass{1.0}}, far, 20'000, {0, 0}),
        InsufficientSampleError);
    RejectionRegion region = region_for(zm, 0.05);
    CHECK_THROWS_AS(mc_check_result2(zm, PriorSpec{PointMass{1.0}}, region, 500, {0, 0}),
                    DomainError);
}

TEST_CASE("Bayes factor curve over the region") {
    TestModel zm = one_sided_z();
    RejectionRegion region = region_for(zm, 0.05);
    auto curve = bf_curve_over_region(zm, PriorSpec{UniformInterval{0.0, 2.95}}, region, 33);
    REQUIRE(curve.size() == 33);
    CHECK(curve.front().first == doctest::Approx(region.critical));
    for (std::size_t i = 1; i < curve.size(); ++i) {
        CHECK(curve[i].second >= curve[i - 1].second);  // nondecreasing in z
        CHECK(curve[i].second > 0.0);
    }
    auto normal_curve = bf_curve_over_region(zm, PriorSpec{NormalPrior{0.0, 2.0}}, region, 17);
    for (std::size_t i = 1; i < normal_curve.size(); ++i)
        CHECK(normal_curve[i].second >= normal_curve[i - 1].second);

    CHECK_THROWS_AS(bf_curve_over_region(zm, PriorSpec{PointMass{1.0}}, region, 1), DomainError);

    std::ostringstream out;
    write_curve_csv(out, {{1.645, 2.0}, {2.0, 3.25}});
    CHECK(out.str() == "statistic,r_post\n1.645,2\n2,3.25\n");
}
