#include "umbral/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace umbral {

namespace {

bool is_integer_text(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    if (s[0] == '+') {
        s.remove_prefix(1);
    }
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) : value_(numerator, denominator)
{
    if (denominator == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value)
{
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_integer_text(num_text)) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    mpq_class q;
    q.get_num() = parse_integer(num_text);
    q.get_den() = 1;
    if (slash != std::string_view::npos) {
        const auto den_text = text.substr(slash + 1);
        if (!is_integer_text(den_text)) {
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        }
        q.get_den() = parse_integer(den_text);
        if (q.get_den() == 0) {
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        }
    }
    return Rational(q);
}

std::string Rational::to_string() const
{
    return value_.get_str(10);
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational pow(const Rational& base, long exponent)
{
    if (exponent < 0) {
        return Rational(1) / pow(base, -exponent);
    }
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(r.get_den_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(r);
}

Rational factorial(long n)
{
    if (n < 0) {
        throw std::domain_error("factorial of a negative integer");
    }
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(r);
}

Rational binomial(const Rational& r, long k)
{
    if (k < 0) {
        return Rational(0);
    }
    Rational acc(1);
    for (long j = 0; j < k; ++j) {
        acc *= (r - Rational(j)) / Rational(j + 1);
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const Rational& q)
{
    return os << q.to_string();
}

}  // namespace umbral
