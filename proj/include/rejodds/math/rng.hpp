#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace rejodds::math {

// Deterministic stream addressing. Every simulation run derives its own
// stream purely from (master_seed, stream_id), so estimates are bit-identical
// across reruns and across any partitioning of runs over workers.
struct RngContract {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_id = 0;
};

// splitmix64 over a per-stream derived state.
class RandomStream {
public:
    explicit RandomStream(const RngContract& c) : state_(derive(c.master_seed, c.stream_id)) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

    // uniform on [0, 1)
    double next_uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // standard normal via Box-Muller; pairs are generated and the spare cached
    double next_normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
        double u2 = next_uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double angle = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(angle);
        has_spare_ = true;
        return r * std::cos(angle);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    static std::uint64_t derive(std::uint64_t master, std::uint64_t stream) {
        return mix(master + 0x9E3779B97F4A7C15ull) ^ mix(stream + 0xD1B54A32D192ED03ull);
    }

    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace rejodds::math
