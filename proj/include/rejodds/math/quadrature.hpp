#pragma once

#include <algorithm>
#include <cmath>
#include <utility>

#include "rejodds/errors.hpp"

namespace rejodds::math {

// Tolerances and real-line truncation policy for adaptive integration.
struct Quadrature {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    double tail_cut = 12.0;  // std-deviation units at which infinite endpoints are truncated

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
            throw DomainError("Quadrature: tolerances must be positive");
        if (!(tail_cut >= 8.0)) throw DomainError("Quadrature: tail_cut must be at least 8");
    }
};

namespace detail {

template <class F>
class SimpsonWorker {
public:
    SimpsonWorker(F& f, long max_evals, double rel_tol)
        : f_(f), max_evals_(max_evals), rel_tol_(rel_tol) {}

    double eval(double x) {
        ++evals_;
        double y = f_(x);
        if (!std::isfinite(y)) throw DomainError("integrate: integrand returned a non-finite value");
        return y;
    }

    static double simpson(double h, double fa, double fm, double fb) {
        return h * (fa + 4.0 * fm + fb) / 6.0;
    }

    // Recursive bisection with Richardson extrapolation. The absolute budget
    // halves with each split; a panel is also accepted once its correction is
    // small relative to its own mass, which keeps sharply peaked integrands
    // from burning the evaluation budget chasing absolute precision.
    double refine(double a, double fa, double m, double fm, double b, double fb, double whole,
                  double tol, int depth) {
        double lm = 0.5 * (a + m);
        double rm = 0.5 * (m + b);
        double flm = eval(lm);
        double frm = eval(rm);
        double left = simpson(m - a, fa, flm, fm);
        double right = simpson(b - m, fm, frm, fb);
        double delta = (left + right - whole) / 15.0;
        bool converged = std::abs(delta) <= tol || std::abs(delta) <= rel_tol_ * std::abs(left + right);
        if (converged || depth <= 0 || evals_ >= max_evals_) {
            if (!converged) exhausted_ = true;
            err_sum_ += std::abs(delta);
            return left + right + delta;
        }
        return refine(a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1) +
               refine(m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1);
    }

    double err_sum() const { return err_sum_; }
    bool exhausted() const { return exhausted_; }

private:
    F& f_;
    long evals_ = 0;
    long max_evals_;
    double rel_tol_;
    double err_sum_ = 0.0;
    bool exhausted_ = false;
};

}  // namespace detail

// Adaptive-Simpson integral of f over [lower, upper]. Infinite endpoints are
// truncated tail_cut units beyond the opposite finite endpoint (or the origin),
// which assumes the integrand lives on a roughly standardized scale; callers
// with shifted or scaled integrands should pass explicit finite bounds.
template <class F>
double integrate(F&& f, double lower, double upper, const Quadrature& cfg = {}) {
    cfg.validate();
    if (std::isnan(lower) || std::isnan(upper)) throw DomainError("integrate: NaN endpoint");

    double lo = lower;
    double hi = upper;
    if (std::isinf(lo) && lo < 0.0) lo = (std::isfinite(hi) ? std::min(hi, 0.0) : 0.0) - cfg.tail_cut;
    if (std::isinf(hi) && hi > 0.0) hi = (std::isfinite(lower) ? std::max(lower, 0.0) : 0.0) + cfg.tail_cut;
    if (std::isinf(lo) || std::isinf(hi)) throw DomainError("integrate: invalid endpoints");
    if (lo > hi) throw DomainError("integrate: lower endpoint exceeds upper endpoint");
    if (lo == hi) return 0.0;

    detail::SimpsonWorker<std::remove_reference_t<F>> worker(f, 2'000'000, cfg.rel_tol);

    // First pass on a fixed 8-panel grid fixes the scale for the relative tolerance
    // and guards against symmetric integrands fooling a single coarse panel.
    constexpr int kPanels = 8;
    double x[2 * kPanels + 1];
    double y[2 * kPanels + 1];
    for (int i = 0; i <= 2 * kPanels; ++i) {
        x[i] = lo + (hi - lo) * (static_cast<double>(i) / (2 * kPanels));
        y[i] = worker.eval(x[i]);
    }
    double rough = 0.0;
    for (int p = 0; p < kPanels; ++p)
        rough += detail::SimpsonWorker<F>::simpson(x[2 * p + 2] - x[2 * p], y[2 * p], y[2 * p + 1],
                                                   y[2 * p + 2]);

    double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(rough));
    double total = 0.0;
    for (int p = 0; p < kPanels; ++p) {
        double whole = detail::SimpsonWorker<F>::simpson(x[2 * p + 2] - x[2 * p], y[2 * p],
                                                         y[2 * p + 1], y[2 * p + 2]);
        total += worker.refine(x[2 * p], y[2 * p], x[2 * p + 1], y[2 * p + 1], x[2 * p + 2],
                               y[2 * p + 2], whole, tol / kPanels, 48);
    }

    if (worker.exhausted() &&
        worker.err_sum() > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)))
        throw ConvergenceError("integrate: subdivision budget exhausted before tolerance", total,
                               worker.err_sum());
    return total;
}

}  // namespace rejodds::math
