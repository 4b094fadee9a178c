#pragma once

// Exact rational scalar backed by GMP. Every value is kept in lowest terms
// with a positive denominator; zero is 0/1.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace umbral {

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator);
    explicit Rational(const mpq_class& value);
    explicit Rational(const mpz_class& value) : value_(value) {}

    /// Parses "p", "-p" or "p/q" (arbitrary length integers). Throws
    /// std::invalid_argument on malformed text or a zero denominator.
    static Rational parse(std::string_view text);

    /// Lowest-terms text: "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    double to_double() const { return value_.get_d(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const { return Rational(mpq_class(-value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

/// Integer power; negative exponents require a nonzero base.
Rational pow(const Rational& base, long exponent);

/// n! as a rational (n >= 0).
Rational factorial(long n);

/// Generalized binomial coefficient C(r, k) for rational r and integer k >= 0.
Rational binomial(const Rational& r, long k);

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace umbral
