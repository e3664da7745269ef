#include "doctest.h"

#include <cmath>
#include <vector>

#include "rejodds/math/rng.hpp"

using rejodds::math::RandomStream;
using rejodds::math::RngContract;

TEST_CASE("identical contracts give bit-identical streams") {
    RandomStream a({42, 7});
    RandomStream b({42, 7});
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("streams with different ids are distinct") {
    RandomStream a({42, 7});
    RandomStream b({42, 8});
    int same = 0;
    for (int i = 0; i < 64; ++i) same += a.next_u64() == b.next_u64();
    CHECK(same == 0);
}

TEST_CASE("uniform draws stay in [0,1)") {
    RandomStream s({1, 0});
    for (int i = 0; i < 10000; ++i) {
        double u = s.next_uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("normal draws have roughly standard moments") {
    RandomStream s({2024, 0});
    const int n = 200000;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        double z = s.next_normal();
        sum += z;
        sum_sq += z * z;
    }
    double mean = sum / n;
    double var = sum_sq / n - mean * mean;
    CHECK(std::abs(mean) < 0.01);
    CHECK(std::abs(var - 1.0) < 0.02);
}
