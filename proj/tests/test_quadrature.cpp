#include "doctest.h"

#include <cmath>
#include <limits>

#include "rejodds/math/normal.hpp"
#include "rejodds/math/quadrature.hpp"

using rejodds::ConvergenceError;
using rejodds::DomainError;
using rejodds::math::integrate;
using rejodds::math::Quadrature;
using rejodds::math::std_normal_pdf;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("standard normal density integrates to 1 over the real line") {
    Quadrature tight;
    tight.abs_tol = 1e-12;
    tight.rel_tol = 1e-12;
    double v = integrate([](double x) { return std_normal_pdf(x); }, -kInf, kInf, tight);
    CHECK(v == doctest::Approx(1.0).epsilon(1e-10));
    // default budget still keeps the rel_tol promise
    double w = integrate([](double x) { return std_normal_pdf(x); }, -kInf, kInf);
    CHECK(w == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("upper-tail normal integral matches the cdf oracle value") {
    double v = integrate([](double x) { return std_normal_pdf(x); }, 1.645, kInf);
    CHECK(std::abs(v - 0.04998490553912137) < 1e-10);
}

TEST_CASE("constant integrand over a rectangle") {
    double v = integrate([](double) { return 1.0; }, 0.0, 2.95);
    CHECK(v == doctest::Approx(2.95).epsilon(1e-14));
}

TEST_CASE("oscillatory and shifted integrands") {
    double v = integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
    CHECK(v == doctest::Approx(2.0).epsilon(1e-10));
    // integrand far from the origin, explicit finite bounds
    double w = integrate([](double x) { return std_normal_pdf(x - 50.0); }, 38.0, 62.0);
    CHECK(w == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("budget exhaustion raises a convergence error carrying the estimate") {
    bool threw = false;
    try {
        integrate([](double x) { return std::sin(1e8 * x); }, 0.0, 1.0);
    } catch (const ConvergenceError& e) {
        threw = true;
        CHECK(std::isfinite(e.best_estimate));
        CHECK(e.error_bound > 0.0);
    }
    CHECK(threw);
}

TEST_CASE("non-finite integrand values are a domain error") {
    CHECK_THROWS_AS(integrate([](double x) { return 1.0 / x; }, 0.0, 1.0), DomainError);
}

TEST_CASE("configuration validation") {
    Quadrature bad_tail;
    bad_tail.tail_cut = 4.0;
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, bad_tail), DomainError);
    Quadrature bad_tol;
    bad_tol.abs_tol = 0.0;
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, bad_tol), DomainError);
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 2.0, 1.0), DomainError);
    CHECK(integrate([](double) { return 1.0; }, 1.0, 1.0) == 0.0);
}
