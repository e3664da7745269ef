#include "rejodds/model.hpp"

#include <cmath>

#include "rejodds/errors.hpp"
#include "rejodds/math/normal.hpp"

namespace rejodds {

void TestModel::validate() const {
    if (!(known_sd > 0.0) || !std::isfinite(known_sd))
        throw DomainError("TestModel: known_sd must be positive");
    if (n1 < 1) throw DomainError("TestModel: n1 must be at least 1");
    if (family == Family::TwoSampleZ && n2 < 1)
        throw DomainError("TestModel: n2 must be at least 1");
    if (!std::isfinite(null_value)) throw DomainError("TestModel: null_value must be finite");
    if (family == Family::NormalVariance) {
        if (!(null_value > 0.0))
            throw DomainError("TestModel: variance-family null_value must be positive");
        if (sides != Sides::TwoSided)
            throw DomainError("TestModel: variance-family rejection regions are |x| >= c; use two-sided");
    }
}

double TestModel::noncentrality(double d) const {
    switch (family) {
        case Family::ZMean:
            return d * std::sqrt(static_cast<double>(n1));
        case Family::TwoSampleZ:
            return d * std::sqrt(static_cast<double>(n1) * n2 / (static_cast<double>(n1) + n2));
        case Family::NormalVariance:
            throw UnsupportedModelError("noncentrality: not defined for the variance family");
    }
    throw UnsupportedModelError("noncentrality: unknown family");
}

double TestModel::p_value(double statistic) const {
    if (!std::isfinite(statistic)) throw DomainError("p_value: non-finite statistic");
    if (family == Family::NormalVariance)
        return 2.0 * math::std_normal_tail(std::abs(statistic) / std::sqrt(null_value));
    if (sides == Sides::OneSidedUpper) return math::std_normal_tail(statistic - null_value);
    return 2.0 * math::std_normal_tail(std::abs(statistic - null_value));
}

std::string family_name(Family f) {
    switch (f) {
        case Family::ZMean: return "z-mean";
        case Family::TwoSampleZ: return "two-sample-z";
        case Family::NormalVariance: return "normal-variance";
    }
    return "?";
}

std::string sides_name(Sides s) {
    return s == Sides::OneSidedUpper ? "one" : "two";
}

Family parse_family(const std::string& text) {
    if (text == "z-mean") return Family::ZMean;
    if (text == "two-sample-z") return Family::TwoSampleZ;
    if (text == "normal-variance") return Family::NormalVariance;
    throw ValidationError("unknown family '" + text + "' (expected z-mean, two-sample-z, or normal-variance)");
}

Sides parse_sides(const std::string& text) {
    if (text == "one" || text == "one-sided-upper") return Sides::OneSidedUpper;
    if (text == "two" || text == "two-sided") return Sides::TwoSided;
    throw ValidationError("unknown sides '" + text + "' (expected one or two)");
}

}  // namespace rejodds
