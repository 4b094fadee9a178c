#include <doctest.h>

#include <stdexcept>

#include "support/oracles.hpp"
#include "umbral/sequences.hpp"

using namespace umbral;

namespace {

TruncatedSeries exp_minus_one(int order)
{
    return TruncatedSeries::generate(order, [](int k) { return k == 0 ? Rational(0) : Rational(1) / factorial(k); });
}

TruncatedSeries log_one_plus(int order)
{
    return TruncatedSeries::generate(order, [](int k) { return k == 0 ? Rational(0) : Rational(k % 2 ? 1 : -1, k); });
}

}  // namespace

TEST_CASE("delta and invertible series validate their input")
{
    CHECK_THROWS_AS(DeltaSeries(TruncatedSeries{1, 1}), std::domain_error);
    CHECK_THROWS_AS(DeltaSeries(TruncatedSeries{0, 0, 1}), std::domain_error);
    CHECK_THROWS_AS(DeltaSeries(TruncatedSeries{0}), std::domain_error);
    CHECK_THROWS_AS(InvertibleSeries(TruncatedSeries{0, 1}), std::domain_error);
    CHECK_THROWS_AS(PolynomialSequence({Polynomial{1}, Polynomial{1}}), std::invalid_argument);
}

TEST_CASE("conjugate sequence of e^t - 1 is the Touchard family")
{
    const auto seq = conjugate_sequence(DeltaSeries(exp_minus_one(8)), 8);
    const auto s2 = oracle::stirling2(8);
    const auto m = seq.coefficient_matrix();
    for (int n = 0; n <= 8; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(m[n][k] == s2[n][k]);
        }
    }
    CHECK(seq.has_binomial_shape());
    CHECK_THROWS_AS(conjugate_sequence(DeltaSeries(exp_minus_one(4)), 6), std::domain_error);
    CHECK_THROWS_AS(conjugate_sequence(DeltaSeries(exp_minus_one(4)), -1), std::invalid_argument);
}

TEST_CASE("associated sequence of e^t - 1 is the falling factorial")
{
    const auto seq = associated_sequence(DeltaSeries(exp_minus_one(7)), 7);
    const auto s1 = oracle::stirling1(7);
    for (int n = 0; n <= 7; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(seq[n].coeff(k) == s1[n][k]);
        }
    }
    // f(D) p_n = n p_{n-1}
    for (int n = 1; n <= 7; ++n) {
        CHECK(apply_operator(exp_minus_one(7), seq[n]) == Rational(n) * seq[n - 1]);
    }
}

TEST_CASE("operators and functionals")
{
    const Polynomial cube = Polynomial::monomial(Rational(1), 3);
    CHECK(apply_operator(TruncatedSeries{0, 1, 0, 0}, cube) == Polynomial{0, 0, 3});
    // e^{aD} shifts
    const auto shift = TruncatedSeries::generate(3, [](int k) { return pow(Rational(2), k) / factorial(k); });
    CHECK(apply_operator(shift, cube) == Polynomial{8, 12, 6, 1});
    CHECK(apply_functional(shift, cube) == Rational(8));
    CHECK_THROWS_AS(apply_operator(TruncatedSeries{0, 1}, cube), std::domain_error);
}

TEST_CASE("connection coefficients from falling factorials to powers are Stirling-II")
{
    const int n = 6;
    const auto c = connection_coefficients(DeltaSeries(log_one_plus(n)), DeltaSeries(TruncatedSeries::identity(n)), n);
    const auto s2 = oracle::stirling2(n);
    for (int i = 0; i <= n; ++i) {
        for (int k = 0; k <= i; ++k) {
            CHECK(c[i][k] == s2[i][k]);
        }
    }
}

TEST_CASE("umbral composition of conjugate sequences")
{
    const int n = 6;
    const auto p = conjugate_sequence(DeltaSeries(exp_minus_one(n)), n);
    const auto q = conjugate_sequence(DeltaSeries(log_one_plus(n)), n);
    // G(F(t)) = log(1 + e^t - 1) = t
    const auto r = umbral_composition(p, q);
    for (int k = 0; k <= n; ++k) {
        CHECK(r[k] == Polynomial::monomial(Rational(1), k));
    }
    CHECK_THROWS_AS(umbral_composition(p, conjugate_sequence(DeltaSeries(exp_minus_one(n)), 3)),
                    std::invalid_argument);
}

TEST_CASE("Hermite polynomials as a Sheffer sequence")
{
    const int n = 8;
    const auto g = TruncatedSeries::generate(n, [](int k) {
        return k % 2 ? Rational(0) : Rational(1) / (pow(Rational(2), k / 2) * factorial(k / 2));
    });
    const auto seq = sheffer_sequence(InvertibleSeries(g), DeltaSeries(TruncatedSeries::identity(n)), n);
    const auto he = oracle::hermite(n);
    for (int k = 0; k <= n; ++k) {
        CHECK(seq[k] == Polynomial(he[k]));
    }
    for (int k = 1; k <= n; ++k) {
        CHECK(sheffer_shift_next(InvertibleSeries(g), DeltaSeries(TruncatedSeries::identity(n)), seq[k - 1]) == seq[k]);
    }
}

TEST_CASE("umbral shift raises the associated sequence")
{
    const DeltaSeries f(exp_minus_one(6));
    const auto seq = associated_sequence(f, 6);
    for (int k = 1; k <= 6; ++k) {
        CHECK(umbral_shift_next(f, seq[k - 1]) == seq[k]);
    }
    CHECK(commutator_action(f, Polynomial{1, 2, 3}) == Polynomial{1, 2, 3});
}

TEST_CASE("Sheffer group identity and inverse")
{
    const int n = 6;
    const ShefferPair a{InvertibleSeries(TruncatedSeries{1, 2, 0, 1, 0, 0, 0}), DeltaSeries(exp_minus_one(n))};
    const auto id = ShefferPair::identity(n);
    CHECK(agree(sheffer_compose(a, id), a));
    CHECK(agree(sheffer_compose(id, a), a));
    CHECK(agree(sheffer_compose(a, sheffer_inverse(a)), id));
}

TEST_CASE("expansion theorem reproduces h(D) x^n")
{
    const DeltaSeries f(log_one_plus(5));
    const TruncatedSeries h{1, -1, 3, 0, 2, 1};
    for (int n = 0; n <= 5; ++n) {
        CHECK(expansion_theorem_rhs(h, f, n) == apply_operator(h, Polynomial::monomial(Rational(1), n)));
    }
}

TEST_CASE("binomial identity check")
{
    const auto p = conjugate_sequence(DeltaSeries(exp_minus_one(6)), 6);
    CHECK(binomial_identity_holds(p, 6, Rational(1, 2), Rational(-3)));
    const PolynomialSequence bad({Polynomial{1}, Polynomial{0, 1}, Polynomial{1, 0, 1}});
    CHECK_FALSE(binomial_identity_holds(bad, 2, Rational(1), Rational(1)));
}
