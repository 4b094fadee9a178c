#pragma once

// Truncated formal power series over the rationals.
//
// A TruncatedSeries of order N stores c_0..c_N; coefficients past N are
// unknown rather than zero. Binary operations therefore return results of
// order min(N_a, N_b), and operations that lose information (derivative,
// division by X) lower the order further.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

/// Default truncation order used by the catalog and CLI.
inline constexpr int kDefaultOrder = 16;

class TruncatedSeries {
public:
    /// coeffs[k] is the coefficient of X^k; order = coeffs.size() - 1.
    explicit TruncatedSeries(std::vector<Rational> coeffs);
    TruncatedSeries(std::initializer_list<Rational> coeffs);

    static TruncatedSeries zero(int order);
    static TruncatedSeries constant(const Rational& c, int order);
    static TruncatedSeries one(int order) { return constant(Rational(1), order); }
    /// The series X (identity under composition).
    static TruncatedSeries identity(int order);
    static TruncatedSeries monomial(const Rational& c, int power, int order);
    /// Builds c_0..c_order from a coefficient rule.
    template <typename Fn>
    static TruncatedSeries generate(int order, Fn&& coeff_at)
    {
        std::vector<Rational> c;
        c.reserve(static_cast<std::size_t>(order) + 1);
        for (int k = 0; k <= order; ++k) {
            c.push_back(coeff_at(k));
        }
        return TruncatedSeries(std::move(c));
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& operator[](int k) const;
    const Rational& coeff(int k) const { return (*this)[k]; }
    std::span<const Rational> coeffs() const { return coeffs_; }

    /// Forgets the coefficients past new_order (new_order <= order()).
    TruncatedSeries truncate(int new_order) const;

    /// Lowest index with a nonzero coefficient, or order()+1 when all known
    /// coefficients vanish.
    int valuation() const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// True when a and b agree on every coefficient through min(order_a, order_b).
bool agree(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries negate(const TruncatedSeries& a);
TruncatedSeries scale(const TruncatedSeries& a, const Rational& c);
/// Cauchy product through min order.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// outer(inner(X)); inner must have zero constant term.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// exp(s) for s(0) = 0.
TruncatedSeries exp_series(const TruncatedSeries& s);
/// log(s) for s(0) = 1; the result has zero constant term.
TruncatedSeries log_series(const TruncatedSeries& s);
/// s^r = exp(r log s) for s(0) = 1.
TruncatedSeries pow_rational(const TruncatedSeries& s, const Rational& r);
/// Nonnegative integer power by repeated multiplication (no constraint on s(0)).
TruncatedSeries pow_int(const TruncatedSeries& s, int exponent);

/// d/dX; the order drops by one (an order-0 series has no derivative).
TruncatedSeries derivative(const TruncatedSeries& s);
/// Antiderivative with zero constant term, reported at the input order.
TruncatedSeries integrate(const TruncatedSeries& s);

/// 1/s for s(0) != 0.
TruncatedSeries reciprocal(const TruncatedSeries& s);
/// Compositional inverse of s with s(0) = 0, s'(0) != 0.
TruncatedSeries lagrange_invert(const TruncatedSeries& s);

/// X^k * s; known through order + k.
TruncatedSeries shift_up(const TruncatedSeries& s, int k = 1);
/// s / X for s(0) = 0; known through order - 1.
TruncatedSeries divide_by_x(const TruncatedSeries& s);

/// Partial sum sum_{k <= order} c_k x^k, exactly.
Rational evaluate(const TruncatedSeries& s, const Rational& x);

/// Coefficient-wise substitution X -> c X.
TruncatedSeries dilate(const TruncatedSeries& s, const Rational& c);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a) { return negate(a); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }
inline TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) { return scale(a, c); }

std::string to_string(const TruncatedSeries& s, std::string_view var = "X");
std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s);

}  // namespace umbral
