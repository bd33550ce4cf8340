#include <doctest.h>

#include <cmath>
#include <set>

#include "epr/rng.hpp"

using namespace epr;

TEST_CASE("bernoulli draws honor degenerate biases") {
    SplitMix64 rng(123);
    for (int i = 0; i < 1000; ++i)
        CHECK(sample_bernoulli(rng, 0.0) == 0);
    for (int i = 0; i < 1000; ++i)
        CHECK(sample_bernoulli(rng, 1.0) == 1);
}

TEST_CASE("bernoulli rejects biases outside [0, 1]") {
    SplitMix64 rng(1);
    CHECK_THROWS_AS(sample_bernoulli(rng, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(sample_bernoulli(rng, 1.1), std::invalid_argument);
    CHECK_THROWS_AS(sample_bernoulli(rng, std::nan("")), std::invalid_argument);
}

TEST_CASE("bernoulli(0.5) concentrates; seed-exact mean is frozen") {
    SplitMix64 rng(42);
    long ones = 0;
    for (int i = 0; i < 100000; ++i)
        ones += sample_bernoulli(rng, 0.5);
    const double mean = static_cast<double>(ones) / 100000.0;
    CHECK(mean == doctest::Approx(0.50063999999999997).epsilon(1e-15));
    CHECK(mean >= 0.49);
    CHECK(mean <= 0.51);
}

TEST_CASE("uniform draws live in [0, 1) and concentrate around 1/2") {
    SplitMix64 rng(42);
    double sum = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const double u = sample_uniform(rng);
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
    }
    const double mean = sum / 100000.0;
    CHECK(mean == doctest::Approx(0.49892553612925966).epsilon(1e-15));
    CHECK(mean >= 0.495);
    CHECK(mean <= 0.505);
}

TEST_CASE("identical seeds give identical sequences") {
    SplitMix64 a(987654321), b(987654321);
    for (int i = 0; i < 1000; ++i)
        CHECK(a.next_u64() == b.next_u64());

    SplitMix64 c(1);
    CHECK(c.next_u64() == 10451216379200822465ULL);
}

TEST_CASE("stream seeds are deterministic and pairwise distinct") {
    CHECK(stream_seed(1, 0) == 13757245211066428519ULL);
    CHECK(stream_seed(1, 1) == 17911839290282890590ULL);

    std::set<std::uint64_t> seeds;
    for (std::uint64_t k = 0; k < 64; ++k)
        seeds.insert(stream_seed(12345, k));
    CHECK(seeds.size() == 64);
}
