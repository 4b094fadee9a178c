#include "umbral/random.hpp"

namespace umbral {

namespace {

// FNV-1a.
std::uint64_t fnv1a(std::string_view s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h = (h ^ c) * 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

Generator::Generator(std::uint64_t seed, std::string_view label) : engine_(seed ^ fnv1a(label))
{
}

long Generator::integer(long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(engine_);
}

Rational Generator::rational(long bound, long max_den)
{
    const long den = integer(1, max_den);
    return Rational(integer(-bound * den, bound * den), den);
}

Rational Generator::nonzero_rational(long bound, long max_den)
{
    for (;;) {
        auto q = rational(bound, max_den);
        if (!q.is_zero()) {
            return q;
        }
    }
}

Rational Generator::pick(const std::vector<Rational>& values)
{
    return values[static_cast<std::size_t>(integer(0, static_cast<long>(values.size()) - 1))];
}

TruncatedSeries Generator::series(int order, long bound, long max_den)
{
    return TruncatedSeries::generate(order, [&](int) { return rational(bound, max_den); });
}

TruncatedSeries Generator::delta_series(int order)
{
    const Rational lead = pick({Rational(1), Rational(-1), Rational(2), Rational(1, 2)});
    return TruncatedSeries::generate(order, [&](int k) {
        if (k == 0) {
            return Rational(0);
        }
        return k == 1 ? lead : rational(10, 6);
    });
}

Statistics Generator::statistics(int order, int last)
{
    std::vector<Rational> w(static_cast<std::size_t>(order));
    w[0] = Rational(1);
    for (int n = 2; n <= std::min(last, order); ++n) {
        w[static_cast<std::size_t>(n - 1)] = rational(5, 4);
    }
    return Statistics::from_cluster(w, "random");
}

PhiSeries Generator::phi(int order, int count)
{
    std::vector<Rational> t;
    for (int k = 0; k < count; ++k) {
        t.push_back(rational(3, 4));
    }
    return PhiSeries::from_T(t, order);
}

}  // namespace umbral
