#include "rejodds/stopping.hpp"

#include <cmath>
#include <numeric>
#include <ostream>

#include "nlohmann/json.hpp"
#include "rejodds/errors.hpp"
#include "rejodds/evidence.hpp"
#include "rejodds/math/normal.hpp"
#include "rejodds/math/parallel.hpp"

namespace rejodds {

void StoppingConfig::validate() const {
    for (double f : batch_fractions)
        if (!(f > 0.0) || !std::isfinite(f))
            throw DomainError("StoppingConfig: batch fractions must be positive");
    if (!(threshold_p > 0.0 && threshold_p < 1.0))
        throw DomainError("StoppingConfig: threshold_p must lie in (0,1)");
    if (n_runs == 0) throw DomainError("StoppingConfig: n_runs must be positive");
    if (const auto* fixed = std::get_if<FixedStart>(&start)) {
        if (!std::isfinite(fixed->z)) throw DomainError("StoppingConfig: non-finite fixed start");
    } else if (!std::isfinite(std::get<SimulatedStart>(start).theta)) {
        throw DomainError("StoppingConfig: non-finite start drift");
    }
}

namespace {

double p_of(double z, Sides sides) {
    return sides == Sides::OneSidedUpper ? math::std_normal_tail(z)
                                         : 2.0 * math::std_normal_tail(std::abs(z));
}

struct RunOutcome {
    int stage = -1;  // stage index at which the run stopped; -1 if never
    double final_z = 0.0;
    double final_fraction = 1.0;
};

RunOutcome run_trajectory(const StoppingConfig& config, math::RandomStream& stream) {
    double drift = 0.0;
    double w;  // cumulative sum on the fraction scale: W(t) ~ N(drift*t, t)
    if (const auto* fixed = std::get_if<FixedStart>(&config.start)) {
        w = fixed->z;
    } else {
        drift = std::get<SimulatedStart>(config.start).theta;
        w = drift + stream.next_normal();
    }
    double t = 1.0;
    double z = w;

    RunOutcome out;
    if (p_of(z, config.sides) < config.threshold_p) {
        out.stage = 0;
    } else {
        for (std::size_t k = 0; k < config.batch_fractions.size(); ++k) {
            double f = config.batch_fractions[k];
            w += drift * f + std::sqrt(f) * stream.next_normal();
            t += f;
            z = w / std::sqrt(t);
            if (p_of(z, config.sides) < config.threshold_p) {
                out.stage = static_cast<int>(k) + 1;
                break;
            }
        }
    }
    out.final_z = z;
    out.final_fraction = t;
    return out;
}

}  // namespace

StoppingSimReport simulate_sequential(const StoppingConfig& config, unsigned threads) {
    config.validate();
    const std::size_t stages = config.n_stages();

    struct Acc {
        std::vector<std::uint64_t> stage_stops;
        double z_sum_stopped = 0.0;
        double fraction_sum = 0.0;
    };
    constexpr std::uint64_t kChunk = 1 << 14;
    std::vector<Acc> chunks((config.n_runs + kChunk - 1) / kChunk);

    math::for_each_chunk(config.n_runs, kChunk, threads,
                         [&](std::uint64_t c, std::uint64_t begin, std::uint64_t end) {
                             Acc acc;
                             acc.stage_stops.assign(stages, 0);
                             for (std::uint64_t i = begin; i < end; ++i) {
                                 math::RandomStream stream({config.seed.master_seed,
                                                           config.seed.stream_id + i});
                                 RunOutcome out = run_trajectory(config, stream);
                                 if (out.stage >= 0) {
                                     ++acc.stage_stops[static_cast<std::size_t>(out.stage)];
                                     acc.z_sum_stopped += out.final_z;
                                 }
                                 acc.fraction_sum += out.final_fraction;
                             }
                             chunks[c] = std::move(acc);
                         });

    std::vector<std::uint64_t> stage_stops(stages, 0);
    double z_sum_stopped = 0.0;
    double fraction_sum = 0.0;
    for (const Acc& acc : chunks) {
        for (std::size_t k = 0; k < stages; ++k) stage_stops[k] += acc.stage_stops[k];
        z_sum_stopped += acc.z_sum_stopped;
        fraction_sum += acc.fraction_sum;
    }

    StoppingSimReport report;
    report.n_runs = config.n_runs;
    const double n = static_cast<double>(config.n_runs);
    report.per_stage_stop_prob.reserve(stages);
    for (std::size_t k = 0; k < stages; ++k) {
        report.per_stage_stop_prob.push_back(static_cast<double>(stage_stops[k]) / n);
        report.n_stopped += stage_stops[k];
    }
    report.cumulative_stop_prob = std::accumulate(report.per_stage_stop_prob.begin(),
                                                  report.per_stage_stop_prob.end(), 0.0);
    double p = report.cumulative_stop_prob;
    report.std_error = std::sqrt(std::max(p * (1.0 - p), 0.0) / n);
    report.mean_final_z =
        report.n_stopped > 0 ? z_sum_stopped / static_cast<double>(report.n_stopped) : 0.0;
    report.mean_final_fraction = fraction_sum / n;
    return report;
}

std::pair<double, double> bf_stopped_vs_fixed(double final_mean, double total_n_fraction,
                                              const PriorSpec& prior, const TestModel& model,
                                              double stopping_factor,
                                              const math::Quadrature& quad) {
    if (!(total_n_fraction > 0.0) || !std::isfinite(total_n_fraction))
        throw DomainError("bf_stopped_vs_fixed: total_n_fraction must be positive (no data, no factor)");
    if (!std::isfinite(final_mean)) throw DomainError("bf_stopped_vs_fixed: non-finite final mean");
    if (!(stopping_factor > 0.0))
        throw DomainError("bf_stopped_vs_fixed: stopping factor must be positive on a stopped path");
    if (!model.is_mean_family())
        throw UnsupportedModelError("bf_stopped_vs_fixed: sequential designs use the mean families");

    // The accumulated data reduce to z = W/sqrt(t) with z ~ N(theta*sqrt(t), 1);
    // express the drift prior on that scale by rescaling the statistic.
    double z = final_mean * std::sqrt(total_n_fraction);
    TestModel scaled = model;
    scaled.null_value = model.null_value * std::sqrt(total_n_fraction);
    PriorSpec scaled_prior = std::visit(
        [&](const auto& p) -> PriorSpec {
            using T = std::decay_t<decltype(p)>;
            double s = std::sqrt(total_n_fraction);
            if constexpr (std::is_same_v<T, PointMass>) {
                return PointMass{p.location * s};
            } else if constexpr (std::is_same_v<T, UniformInterval>) {
                return UniformInterval{p.lo * s, p.hi * s};
            } else if constexpr (std::is_same_v<T, NormalPrior>) {
                return NormalPrior{p.mean * s, p.sd * s};
            } else if constexpr (std::is_same_v<T, GridWeight>) {
                GridWeight g = p;
                for (double& x : g.points) x *= s;
                return g;
            } else {
                throw DomainError("bf_stopped_vs_fixed: prior must be a fixed distribution");
            }
        },
        prior);

    double numerator = marginal_density(scaled, z, scaled_prior, quad);
    double denominator = null_density(scaled, z);

    // Stopped-data form: the stopping-rule factor multiplies the likelihood of
    // the realized path under either hypothesis, so it is applied to both.
    double bf_stopped = (stopping_factor * numerator) / (stopping_factor * denominator);
    double bf_fixed = numerator / denominator;
    return {bf_stopped, bf_fixed};
}

MCReport stopped_type1_error(const StoppingConfig& config, unsigned threads) {
    const auto* simulated = std::get_if<SimulatedStart>(&config.start);
    if (simulated == nullptr || simulated->theta != 0.0)
        throw DomainError("stopped_type1_error: start must simulate from the null");
    StoppingSimReport sim = simulate_sequential(config, threads);

    MCReport report;
    report.estimate = sim.cumulative_stop_prob;
    report.std_error = sim.std_error;
    report.target = config.threshold_p;
    report.z_score = (report.estimate - report.target) / report.std_error;
    report.n_runs = sim.n_runs;
    report.n_retained = sim.n_stopped;
    report.seed = config.seed;
    return report;
}

void write_stopping_json(std::ostream& out, const StoppingConfig& config,
                         const StoppingSimReport& report) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json cfg;
    if (const auto* fixed = std::get_if<FixedStart>(&config.start)) {
        cfg["start"] = {{"fixed_z", fixed->z}};
    } else {
        cfg["start"] = {{"simulate_from_theta", std::get<SimulatedStart>(config.start).theta}};
    }
    cfg["initial_fraction"] = 1.0;
    cfg["batch_fractions"] = config.batch_fractions;
    cfg["threshold_p"] = config.threshold_p;
    cfg["sides"] = sides_name(config.sides);
    cfg["n_runs"] = config.n_runs;
    cfg["seed"] = {{"master_seed", config.seed.master_seed}, {"stream_id", config.seed.stream_id}};
    j["config"] = cfg;

    const double n = static_cast<double>(report.n_runs);
    nlohmann::ordered_json stages = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < report.per_stage_stop_prob.size(); ++k) {
        double p = report.per_stage_stop_prob[k];
        stages.push_back({{"stage", k},
                          {"stop_prob", p},
                          {"std_error", std::sqrt(std::max(p * (1.0 - p), 0.0) / n)}});
    }
    j["per_stage"] = stages;
    j["cumulative_stop_prob"] = report.cumulative_stop_prob;
    j["std_error"] = report.std_error;
    j["n_stopped"] = report.n_stopped;
    j["mean_final_z"] = report.mean_final_z;
    j["mean_final_fraction"] = report.mean_final_fraction;
    out << j.dump(2) << '\n';
}

}  // namespace rejodds
