#include <doctest.h>

#include "support/gen.hpp"
#include "umbral/series.hpp"

using namespace umbral;

namespace {

const int kCases = 40;
const int kOrder = 10;

}  // namespace

TEST_CASE("ring axioms")
{
    gen::Rng rng(101);
    for (int i = 0; i < kCases; ++i) {
        const auto a = rng.series(kOrder);
        const auto b = rng.series(kOrder);
        const auto c = rng.series(kOrder);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + TruncatedSeries::zero(kOrder) == a);
        CHECK(a * TruncatedSeries::one(kOrder) == a);
    }
}

TEST_CASE("reciprocal is a two-sided inverse")
{
    gen::Rng rng(102);
    for (int i = 0; i < kCases; ++i) {
        auto a = rng.unit(kOrder);
        a = a + TruncatedSeries::constant(rng.nonzero(3, 2), kOrder);
        if (a[0].is_zero()) {
            continue;
        }
        CHECK(a * reciprocal(a) == TruncatedSeries::one(kOrder));
    }
}

TEST_CASE("exp and log are mutually inverse")
{
    gen::Rng rng(103);
    for (int i = 0; i < kCases; ++i) {
        const auto d = rng.delta(kOrder);
        CHECK(log_series(exp_series(d)) == d);
        const auto u = rng.unit(kOrder);
        CHECK(exp_series(log_series(u)) == u);
    }
}

TEST_CASE("exp turns sums into products")
{
    gen::Rng rng(104);
    for (int i = 0; i < kCases; ++i) {
        const auto a = rng.delta(kOrder);
        const auto b = rng.delta(kOrder);
        CHECK(exp_series(a + b) == exp_series(a) * exp_series(b));
    }
}

TEST_CASE("lagrange inversion round trip")
{
    gen::Rng rng(105);
    for (int i = 0; i < kCases; ++i) {
        const auto f = rng.delta(kOrder);
        const auto g = lagrange_invert(f);
        CHECK(compose(f, g) == TruncatedSeries::identity(kOrder));
        CHECK(compose(g, f) == TruncatedSeries::identity(kOrder));
        CHECK(lagrange_invert(g) == f);
    }
}

TEST_CASE("composition is associative")
{
    gen::Rng rng(106);
    for (int i = 0; i < kCases; ++i) {
        const auto a = rng.series(kOrder);
        const auto b = rng.delta(kOrder);
        const auto c = rng.delta(kOrder);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
}

TEST_CASE("Leibniz rule and fundamental theorem")
{
    gen::Rng rng(107);
    for (int i = 0; i < kCases; ++i) {
        const auto a = rng.series(kOrder);
        const auto b = rng.series(kOrder);
        CHECK(derivative(a * b) == derivative(a) * b.truncate(kOrder - 1) + a.truncate(kOrder - 1) * derivative(b));
        CHECK(derivative(integrate(a)) == a.truncate(kOrder - 1));
    }
}

TEST_CASE("rational powers compose additively")
{
    gen::Rng rng(108);
    for (int i = 0; i < kCases; ++i) {
        const auto u = rng.unit(kOrder);
        const auto r = rng.rational(3, 4);
        const auto s = rng.rational(3, 4);
        CHECK(pow_rational(u, r) * pow_rational(u, s) == pow_rational(u, r + s));
        CHECK(pow_rational(u, Rational(3)) == pow_int(u, 3));
    }
}

TEST_CASE("partial-sum evaluation is a ring homomorphism on polynomials")
{
    gen::Rng rng(109);
    for (int i = 0; i < kCases; ++i) {
        // degree 4 inputs stay exact at order 10
        const auto a = rng.series(4);
        const auto b = rng.series(4);
        const auto x = rng.rational(3, 3);
        auto pad = [](const TruncatedSeries& s) {
            return TruncatedSeries::generate(kOrder, [&](int k) { return k <= s.order() ? s[k] : Rational(0); });
        };
        CHECK(evaluate(pad(a) * pad(b), x) == evaluate(a, x) * evaluate(b, x));
    }
}
