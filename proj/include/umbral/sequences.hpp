#pragma once

// Binomial-type and Sheffer polynomial sequences built from delta series.
//
// Operator series h(t) are stored with ordinary coefficients, h = sum h_k t^k,
// and act on polynomials as h(D) = sum h_k D^k with D = d/dx.

#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/series.hpp"

namespace umbral {

/// Zero constant term and nonzero linear coefficient.
class DeltaSeries {
public:
    explicit DeltaSeries(TruncatedSeries series);
    const TruncatedSeries& series() const { return series_; }
    int order() const { return series_.order(); }

private:
    TruncatedSeries series_;
};

/// Nonzero constant term.
class InvertibleSeries {
public:
    explicit InvertibleSeries(TruncatedSeries series);
    const TruncatedSeries& series() const { return series_; }
    int order() const { return series_.order(); }

private:
    TruncatedSeries series_;
};

/// p_0..p_n with deg p_k = k.
class PolynomialSequence {
public:
    explicit PolynomialSequence(std::vector<Polynomial> polys);

    std::size_t size() const { return polys_.size(); }
    const Polynomial& operator[](std::size_t k) const { return polys_.at(k); }
    const std::vector<Polynomial>& polys() const { return polys_; }

    /// Lower-triangular matrix m[n][k] = [x^k] p_n.
    std::vector<std::vector<Rational>> coefficient_matrix() const;

    /// p_0 = 1 and p_k(0) = 0 for k >= 1.
    bool has_binomial_shape() const;

    friend bool operator==(const PolynomialSequence&, const PolynomialSequence&) = default;

private:
    std::vector<Polynomial> polys_;
};

/// p_0..p_n with sum p_n(x) t^n/n! = exp(x F(t)).
PolynomialSequence conjugate_sequence(const DeltaSeries& big_f, int n);

/// The sequence annihilated by f(D): conjugate sequence of the inverse of f.
PolynomialSequence associated_sequence(const DeltaSeries& f, int n);

/// h(D) p = sum_k h_k D^k p; requires deg p <= order of h.
Polynomial apply_operator(const TruncatedSeries& h, const Polynomial& p);

/// (h(D) p)(0).
Rational apply_functional(const TruncatedSeries& h, const Polynomial& p);

/// r_n = sum_k [x^k]p_n q_k. If p, q are conjugate to F, G then r is
/// conjugate to G(F(t)).
PolynomialSequence umbral_composition(const PolynomialSequence& p, const PolynomialSequence& q);

/// c[n][k] with q_n = sum_k c[n][k] p_k, where p, q are the conjugate
/// sequences of F, G. Equals the coefficient matrix of the conjugate sequence
/// of f(G(t)) with f the compositional inverse of F.
std::vector<std::vector<Rational>> connection_coefficients(const DeltaSeries& big_f, const DeltaSeries& big_g, int n);

/// s_0..s_n with sum s_n(x) t^n/n! = exp(x F(t)) / g(F(t)), F the inverse of f.
PolynomialSequence sheffer_sequence(const InvertibleSeries& g, const DeltaSeries& f, int n);

/// x (1/f'(D)) p_prev.
Polynomial umbral_shift_next(const DeltaSeries& f, const Polynomial& p_prev);

/// [x - g'(D)/g(D)] (1/f'(D)) s_prev.
Polynomial sheffer_shift_next(const InvertibleSeries& g, const DeltaSeries& f, const Polynomial& s_prev);

struct ShefferPair {
    InvertibleSeries g;
    DeltaSeries f;

    static ShefferPair identity(int order);
};

/// (g, f) o (h, l) = (g h(f), l(f)).
ShefferPair sheffer_compose(const ShefferPair& first, const ShefferPair& second);
/// (1/g(F), F) with F the inverse of f.
ShefferPair sheffer_inverse(const ShefferPair& pair);
bool agree(const ShefferPair& a, const ShefferPair& b);

/// (f(D) theta - theta f(D)) p, where theta is the umbral shift of f.
Polynomial commutator_action(const DeltaSeries& f, const Polynomial& p);

/// sum_k (1/k!) <h(D)|p_k> f(D)^k x^n with p the associated sequence of f.
Polynomial expansion_theorem_rhs(const TruncatedSeries& h, const DeltaSeries& f, int n);

/// p_n(a+b) == sum_k C(n,k) p_k(a) p_{n-k}(b).
bool binomial_identity_holds(const PolynomialSequence& p, int n, const Rational& a, const Rational& b);

}  // namespace umbral
