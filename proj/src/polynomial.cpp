#include "umbral/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace umbral {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : Polynomial(std::vector<Rational>(coeffs)) {}

Polynomial Polynomial::constant(const Rational& c)
{
    return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(const Rational& c, int power)
{
    if (power < 0) {
        throw std::invalid_argument("negative monomial power");
    }
    std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rational Polynomial::coeff(int k) const
{
    if (k < 0 || k > degree()) {
        return Rational(0);
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::operator()(const Rational& x) const
{
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
        coeffs_[k] += rhs.coeffs_[k];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
        coeffs_[k] -= rhs.coeffs_[k];
    }
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& c, const Polynomial& a)
{
    std::vector<Rational> v(a.coeffs_);
    for (auto& x : v) {
        x *= c;
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const
{
    return Rational(-1) * *this;
}

Polynomial derivative(const Polynomial& p)
{
    std::vector<Rational> v;
    for (int k = 1; k <= p.degree(); ++k) {
        v.push_back(Rational(k) * p.coeff(k));
    }
    return Polynomial(std::move(v));
}

Polynomial mul_x(const Polynomial& p)
{
    if (p.is_zero()) {
        return p;
    }
    std::vector<Rational> v;
    v.reserve(p.coeffs().size() + 1);
    v.emplace_back(0);
    v.insert(v.end(), p.coeffs().begin(), p.coeffs().end());
    return Polynomial(std::move(v));
}

std::string to_string(const Polynomial& p, std::string_view var)
{
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational c = p.coeff(k);
        if (c.is_zero()) {
            continue;
        }
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        if (first) {
            os << (neg ? "-" : "");
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (!mag.is_one()) {
            os << mag << '*';
        }
        os << var;
        if (k > 1) {
            os << '^' << k;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p)
{
    return os << to_string(p);
}

}  // namespace umbral
