#pragma once

#include <cmath>
#include <numbers>

#include "rejodds/errors.hpp"

namespace rejodds::math {

inline constexpr double kInvSqrt2Pi = 0.3989422804014326779;  // 1/sqrt(2*pi)

inline double std_normal_pdf(double x) {
    return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

// Phi(x) via the complementary error function; absolute error below 1e-12.
inline double std_normal_cdf(double x) {
    if (!std::isfinite(x)) throw DomainError("std_normal_cdf: non-finite input");
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

// Upper tail 1 - Phi(x), without cancellation for large x.
inline double std_normal_tail(double x) {
    if (!std::isfinite(x)) throw DomainError("std_normal_tail: non-finite input");
    return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

// Phi^{-1}(u): Acklam's rational approximation refined by one Newton step
// against std_normal_cdf, giving |Phi(result) - u| <= 1e-12.
inline double std_normal_quantile(double u) {
    if (!(u > 0.0 && u < 1.0)) throw DomainError("std_normal_quantile: u must lie in (0,1)");

    static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                    -2.759285104469687e+02, 1.383577518672690e+02,
                                    -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                    -1.556989798598866e+02, 6.680131188771972e+01,
                                    -1.328068155288572e+01};
    static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                    -2.400758277161838e+00, -2.549732539343734e+00,
                                    4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                    2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    double x;
    if (u < p_low) {
        double q = std::sqrt(-2.0 * std::log(u));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (u <= 1.0 - p_low) {
        double q = u - 0.5;
        double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        double q = std::sqrt(-2.0 * std::log(1.0 - u));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }

    // Newton correction on the tail that keeps the residual free of cancellation:
    // for u >= 1/2 the complement 1-u is exact, so solve tail(x) = 1-u there.
    if (u >= 0.5) {
        x += (std_normal_tail(x) - (1.0 - u)) / std_normal_pdf(x);
    } else {
        x -= (std_normal_cdf(x) - u) / std_normal_pdf(x);
    }
    return x;
}

}  // namespace rejodds::math
