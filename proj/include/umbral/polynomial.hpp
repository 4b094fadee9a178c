#pragma once

// Dense univariate polynomial with exact rational coefficients. The leading
// stored coefficient is always nonzero; the zero polynomial has no coefficients.

#include <iosfwd>
#include <string>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, int power);
    /// The polynomial x.
    static Polynomial x() { return monomial(Rational(1), 1); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of x^k; zero past the degree.
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational operator()(const Rational& x) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& a);
    Polynomial operator-() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

Polynomial derivative(const Polynomial& p);
/// x * p.
Polynomial mul_x(const Polynomial& p);

std::string to_string(const Polynomial& p, std::string_view var = "x");
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace umbral
