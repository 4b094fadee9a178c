#pragma once

// Seeded generators for random rationals, series, statistics and phi-series.

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "umbral/deformed_entropy.hpp"
#include "umbral/series.hpp"
#include "umbral/statistics.hpp"

namespace umbral {

class Generator {
public:
    explicit Generator(std::uint64_t seed) : engine_(seed) {}
    /// Independent stream per label, so results do not depend on call order.
    Generator(std::uint64_t seed, std::string_view label);

    long integer(long lo, long hi);
    /// num/den with num in [-bound*den, bound*den], den in [1, max_den].
    Rational rational(long bound = 10, long max_den = 6);
    Rational nonzero_rational(long bound = 10, long max_den = 6);
    /// Picks one of the given values.
    Rational pick(const std::vector<Rational>& values);

    TruncatedSeries series(int order, long bound = 10, long max_den = 6);
    /// Zero constant term, linear coefficient from {1, -1, 2, 1/2}.
    TruncatedSeries delta_series(int order);
    /// w_1 = 1, w_2..w_{last} random, the rest zero.
    Statistics statistics(int order, int last = 6);
    /// T_1..T_{count} random.
    PhiSeries phi(int order, int count = 5);

private:
    std::mt19937_64 engine_;
};

}  // namespace umbral
