#include <doctest.h>

#include "support/gen.hpp"
#include "umbral/sequences.hpp"

using namespace umbral;

namespace {

const int kCases = 20;
const int kN = 7;

}  // namespace

TEST_CASE("conjugate sequences are of binomial type")
{
    gen::Rng rng(201);
    for (int i = 0; i < kCases; ++i) {
        const auto seq = conjugate_sequence(DeltaSeries(rng.delta(kN)), kN);
        CHECK(seq.has_binomial_shape());
        for (int j = 0; j < 3; ++j) {
            CHECK(binomial_identity_holds(seq, kN, rng.rational(4, 3), rng.rational(4, 3)));
        }
    }
}

TEST_CASE("associated sequences are annihilated down by f(D)")
{
    gen::Rng rng(202);
    for (int i = 0; i < kCases; ++i) {
        const auto f = rng.delta(kN);
        const auto seq = associated_sequence(DeltaSeries(f), kN);
        for (int n = 1; n <= kN; ++n) {
            CHECK(apply_operator(f, seq[n]) == Rational(n) * seq[n - 1]);
            CHECK(apply_functional(TruncatedSeries::one(kN), seq[n]).is_zero());
        }
    }
}

TEST_CASE("umbral shift and commutator")
{
    gen::Rng rng(203);
    for (int i = 0; i < kCases; ++i) {
        const DeltaSeries f(rng.delta(kN));
        const auto seq = associated_sequence(f, kN);
        for (int n = 1; n <= kN; ++n) {
            CHECK(umbral_shift_next(f, seq[n - 1]) == seq[n]);
        }
        const auto p = rng.polynomial(kN - 2);
        CHECK(commutator_action(f, p) == p);
    }
}

TEST_CASE("umbral composition follows composition of generating series")
{
    gen::Rng rng(204);
    for (int i = 0; i < kCases; ++i) {
        const auto f = rng.delta(kN);
        const auto g = rng.delta(kN);
        const auto p = conjugate_sequence(DeltaSeries(f), kN);
        const auto q = conjugate_sequence(DeltaSeries(g), kN);
        CHECK(umbral_composition(p, q) == conjugate_sequence(DeltaSeries(compose(g, f)), kN));
    }
}

TEST_CASE("connection coefficients expand one sequence in the other")
{
    gen::Rng rng(205);
    for (int i = 0; i < kCases; ++i) {
        const DeltaSeries f(rng.delta(kN));
        const DeltaSeries g(rng.delta(kN));
        const auto p = conjugate_sequence(f, kN);
        const auto q = conjugate_sequence(g, kN);
        const auto c = connection_coefficients(f, g, kN);
        for (int n = 0; n <= kN; ++n) {
            Polynomial sum;
            for (int k = 0; k <= n; ++k) {
                sum += c[n][k] * p[k];
            }
            CHECK(sum == q[n]);
        }
    }
}

TEST_CASE("expansion theorem")
{
    gen::Rng rng(206);
    for (int i = 0; i < kCases; ++i) {
        const DeltaSeries f(rng.delta(kN));
        const auto h = rng.series(kN, 4);
        for (int n = 0; n <= kN; ++n) {
            CHECK(expansion_theorem_rhs(h, f, n) == apply_operator(h, Polynomial::monomial(Rational(1), n)));
        }
    }
}

TEST_CASE("Sheffer sequences: recurrence and group laws")
{
    gen::Rng rng(207);
    for (int i = 0; i < kCases; ++i) {
        auto gs = rng.unit(kN);
        const InvertibleSeries g(gs);
        const DeltaSeries f(rng.delta(kN));
        const auto s = sheffer_sequence(g, f, kN);
        for (int n = 1; n <= kN; ++n) {
            CHECK(sheffer_shift_next(g, f, s[n - 1]) == s[n]);
        }
        const ShefferPair a{g, f};
        const ShefferPair b{InvertibleSeries(rng.unit(kN)), DeltaSeries(rng.delta(kN))};
        const ShefferPair c{InvertibleSeries(rng.unit(kN)), DeltaSeries(rng.delta(kN))};
        CHECK(agree(sheffer_compose(sheffer_compose(a, b), c), sheffer_compose(a, sheffer_compose(b, c))));
        CHECK(agree(sheffer_compose(sheffer_inverse(a), a), ShefferPair::identity(kN)));
    }
}
