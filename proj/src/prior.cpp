#include "rejodds/prior.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "rejodds/errors.hpp"
#include "rejodds/math/normal.hpp"

namespace rejodds {

namespace {

double parse_number(const std::string& text, const std::string& what) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value))
        throw ValidationError(what + ": expected a finite number, got '" + text + "'");
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, sep)) out.push_back(token);
    return out;
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

}  // namespace

void validate_prior(const PriorSpec& prior) {
    std::visit(
        [](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, PointMass>) {
                if (!std::isfinite(p.location)) throw DomainError("PointMass: non-finite location");
            } else if constexpr (std::is_same_v<T, UniformInterval>) {
                if (!std::isfinite(p.lo) || !std::isfinite(p.hi))
                    throw DomainError("UniformInterval: non-finite endpoint");
                if (!(p.lo < p.hi)) throw DomainError("UniformInterval: lo must be < hi");
            } else if constexpr (std::is_same_v<T, NormalPrior>) {
                if (!std::isfinite(p.mean) || !std::isfinite(p.sd))
                    throw DomainError("NormalPrior: non-finite parameter");
                if (!(p.sd > 0.0)) throw DomainError("NormalPrior: sd must be positive");
            } else if constexpr (std::is_same_v<T, GridWeight>) {
                if (p.points.empty() || p.points.size() != p.weights.size())
                    throw DomainError("GridWeight: points and weights must be nonempty and equal-sized");
                double sum = 0.0;
                for (std::size_t i = 0; i < p.points.size(); ++i) {
                    if (!std::isfinite(p.points[i])) throw DomainError("GridWeight: non-finite point");
                    if (!(p.weights[i] >= 0.0)) throw DomainError("GridWeight: negative weight");
                    sum += p.weights[i];
                }
                if (std::abs(sum - 1.0) > 1e-12)
                    throw DomainError("GridWeight: weights must sum to 1 within 1e-12");
            }
        },
        prior);
}

namespace {

// Support legality per family: the variance family needs strictly positive
// alternative variances; mean families accept any real effect.
void check_family_support(const TestModel& model, const PriorSpec& prior) {
    if (model.family != Family::NormalVariance) return;
    std::visit(
        [](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, PointMass>) {
                if (!(p.location > 0.0))
                    throw DomainError("variance-family prior: alternative variance must be positive");
            } else if constexpr (std::is_same_v<T, UniformInterval>) {
                if (!(p.lo > 0.0))
                    throw DomainError("variance-family prior: support must be positive");
            } else if constexpr (std::is_same_v<T, NormalPrior>) {
                throw DomainError("variance-family prior: normal priors put mass on negative variances");
            } else if constexpr (std::is_same_v<T, GridWeight>) {
                for (double x : p.points)
                    if (!(x > 0.0))
                        throw DomainError("variance-family prior: grid points must be positive");
            }
        },
        prior);
}

}  // namespace

void validate_effect_spec(const TestModel& model, const PriorSpec& effect) {
    validate_prior(effect);
    if (std::holds_alternative<Intrinsic>(effect) || std::holds_alternative<EmpiricalBayesAll>(effect) ||
        std::holds_alternative<EmpiricalBayesNonincreasing>(effect))
        throw DomainError("effect spec must be a point, interval, normal, or grid prior");
    check_family_support(model, effect);
}

void validate_h1_prior(const TestModel& model, const PriorSpec& prior) {
    validate_prior(prior);
    check_family_support(model, prior);
    if (const auto* pm = std::get_if<PointMass>(&prior)) {
        if (pm->location == model.null_value)
            throw DomainError("H1 prior may not be a point mass at the null value");
    }
}

double prior_density(const PriorSpec& prior, double theta) {
    if (const auto* u = std::get_if<UniformInterval>(&prior))
        return (theta >= u->lo && theta <= u->hi) ? 1.0 / (u->hi - u->lo) : 0.0;
    if (const auto* n = std::get_if<NormalPrior>(&prior))
        return math::std_normal_pdf((theta - n->mean) / n->sd) / n->sd;
    throw DomainError("prior_density: only uniform and normal priors have a density");
}

std::pair<double, double> prior_bounds(const PriorSpec& prior, double tail_cut) {
    if (const auto* pm = std::get_if<PointMass>(&prior)) return {pm->location, pm->location};
    if (const auto* u = std::get_if<UniformInterval>(&prior)) return {u->lo, u->hi};
    if (const auto* n = std::get_if<NormalPrior>(&prior))
        return {n->mean - tail_cut * n->sd, n->mean + tail_cut * n->sd};
    if (const auto* g = std::get_if<GridWeight>(&prior)) {
        auto [lo, hi] = std::minmax_element(g->points.begin(), g->points.end());
        return {*lo, *hi};
    }
    throw DomainError("prior_bounds: prior marker must be resolved against a model first");
}

bool is_degenerate(const PriorSpec& prior) {
    if (std::holds_alternative<PointMass>(prior)) return true;
    if (const auto* g = std::get_if<GridWeight>(&prior)) return g->points.size() == 1;
    return false;
}

namespace {

GridWeight load_grid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("grid prior: cannot open '" + path + "'");
    GridWeight g;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split(line, ',');
        if (fields.size() != 2) throw ParseError("grid prior: expected 'theta,weight'", line_no);
        if (line_no == 1 && (fields[0] == "theta" || fields[0] == "point")) continue;  // header
        g.points.push_back(parse_number(fields[0], "grid prior theta"));
        g.weights.push_back(parse_number(fields[1], "grid prior weight"));
    }
    if (g.points.empty()) throw ValidationError("grid prior: no rows in '" + path + "'");
    double sum = std::accumulate(g.weights.begin(), g.weights.end(), 0.0);
    if (!(sum > 0.0)) throw ValidationError("grid prior: weights must have positive sum");
    for (double& w : g.weights) w /= sum;
    return g;
}

}  // namespace

PriorSpec parse_prior(const std::string& text) {
    if (text == "intrinsic") return Intrinsic{};
    if (text == "eb-all") return EmpiricalBayesAll{};
    if (text == "eb-noninc") return EmpiricalBayesNonincreasing{};

    auto fields = split(text, ':');
    PriorSpec prior;
    if (fields.size() == 2 && fields[0] == "point") {
        prior = PointMass{parse_number(fields[1], "point prior")};
    } else if (fields.size() == 3 && fields[0] == "uniform") {
        prior = UniformInterval{parse_number(fields[1], "uniform prior lo"),
                                parse_number(fields[2], "uniform prior hi")};
    } else if (fields.size() == 3 && fields[0] == "normal") {
        prior = NormalPrior{parse_number(fields[1], "normal prior mean"),
                            parse_number(fields[2], "normal prior sd")};
    } else if (fields.size() == 2 && fields[0] == "grid" && !fields[1].empty() && fields[1][0] == '@') {
        prior = load_grid_file(fields[1].substr(1));
    } else {
        throw ValidationError("unknown prior syntax '" + text +
                              "' (expected point:t, uniform:lo:hi, normal:mu:sd, grid:@file, "
                              "intrinsic, eb-all, or eb-noninc)");
    }
    validate_prior(prior);
    return prior;
}

std::string prior_label(const PriorSpec& prior) {
    return std::visit(
        [](const auto& p) -> std::string {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, PointMass>) {
                return "point:" + format_number(p.location);
            } else if constexpr (std::is_same_v<T, UniformInterval>) {
                return "uniform:" + format_number(p.lo) + ":" + format_number(p.hi);
            } else if constexpr (std::is_same_v<T, NormalPrior>) {
                return "normal:" + format_number(p.mean) + ":" + format_number(p.sd);
            } else if constexpr (std::is_same_v<T, GridWeight>) {
                return "grid[" + std::to_string(p.points.size()) + "]";
            } else if constexpr (std::is_same_v<T, Intrinsic>) {
                return "intrinsic";
            } else if constexpr (std::is_same_v<T, EmpiricalBayesAll>) {
                return "eb-all";
            } else {
                return "eb-noninc";
            }
        },
        prior);
}

}  // namespace rejodds
