#pragma once

#include <cmath>

#include "rejodds/errors.hpp"

namespace rejodds::math {

struct MaxResult {
    double argmax = 0.0;
    double max_value = 0.0;
};

// One-dimensional maximization: a 64-point grid pre-scan locates the mode,
// then golden-section refinement shrinks the bracket below tol. The tolerance
// guarantee requires f unimodal on [bracket_lo, bracket_hi]; ties resolve
// toward the smaller argument.
template <class F>
MaxResult maximize_1d(F&& f, double bracket_lo, double bracket_hi, double tol = 1e-8) {
    if (!(bracket_lo < bracket_hi)) throw DomainError("maximize_1d: bracket_lo must be < bracket_hi");
    if (!(tol > 0.0)) throw DomainError("maximize_1d: tol must be positive");

    auto eval = [&](double x) {
        double y = f(x);
        if (!std::isfinite(y)) throw DomainError("maximize_1d: non-finite objective value inside bracket");
        return y;
    };

    constexpr int kScan = 64;
    double grid[kScan];
    int best = 0;
    double best_val = 0.0;
    for (int i = 0; i < kScan; ++i) {
        grid[i] = bracket_lo + (bracket_hi - bracket_lo) * (static_cast<double>(i) / (kScan - 1));
        double y = eval(grid[i]);
        if (i == 0 || y > best_val) {
            best = i;
            best_val = y;
        }
    }

    double a = grid[best > 0 ? best - 1 : 0];
    double b = grid[best < kScan - 1 ? best + 1 : kScan - 1];

    constexpr double kInvGold = 0.6180339887498949;  // (sqrt(5)-1)/2
    double c = b - kInvGold * (b - a);
    double d = a + kInvGold * (b - a);
    double fc = eval(c);
    double fd = eval(d);
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvGold * (b - a);
            fc = eval(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvGold * (b - a);
            fd = eval(d);
        }
    }
    double xm = 0.5 * (a + b);
    return {xm, eval(xm)};
}

}  // namespace rejodds::math
