#pragma once

#include <string>

namespace rejodds {

enum class Family { ZMean, TwoSampleZ, NormalVariance };
enum class Sides { OneSidedUpper, TwoSided };

// Sampling family and null hypothesis under test. All mean-family evidence
// and power calculations run on the canonical z scale; the variance family
// observes a single X ~ N(0, sigma^2) and tests sigma^2 = null_value with
// rejection regions of the form |x| >= c.
struct TestModel {
    Family family = Family::ZMean;
    Sides sides = Sides::OneSidedUpper;
    double null_value = 0.0;  // theta0 for mean families, sigma0^2 for the variance family
    double known_sd = 1.0;
    int n1 = 1;
    int n2 = 1;  // two-sample family only

    void validate() const;
    bool is_mean_family() const { return family != Family::NormalVariance; }

    // z-shift produced by a standardized effect d (Cohen's d): d*sqrt(n1) for
    // the one-sample family, d*sqrt(n1*n2/(n1+n2)) for the two-sample family.
    double noncentrality(double d) const;

    // p-value of the canonical statistic (z, or x for the variance family).
    double p_value(double statistic) const;
};

std::string family_name(Family f);
std::string sides_name(Sides s);
Family parse_family(const std::string& text);
Sides parse_sides(const std::string& text);

}  // namespace rejodds
