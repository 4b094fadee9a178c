#include "umbral/series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace umbral {

namespace {

void require_order(int order)
{
    if (order < 0) {
        throw std::invalid_argument("series order must be non-negative");
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw std::invalid_argument("a truncated series needs at least one coefficient");
    }
}

TruncatedSeries::TruncatedSeries(std::initializer_list<Rational> coeffs)
    : TruncatedSeries(std::vector<Rational>(coeffs))
{
}

TruncatedSeries TruncatedSeries::zero(int order)
{
    require_order(order);
    return TruncatedSeries(std::vector<Rational>(static_cast<std::size_t>(order) + 1));
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order)
{
    auto s = zero(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::identity(int order)
{
    return monomial(Rational(1), 1, order);
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, int power, int order)
{
    if (power < 0) {
        throw std::invalid_argument("negative monomial power");
    }
    auto s = zero(order);
    if (power <= order) {
        s.coeffs_[static_cast<std::size_t>(power)] = c;
    }
    return s;
}

const Rational& TruncatedSeries::operator[](int k) const
{
    if (k < 0 || k > order()) {
        throw std::out_of_range("coefficient index " + std::to_string(k) + " outside order "
                                + std::to_string(order()));
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

TruncatedSeries TruncatedSeries::truncate(int new_order) const
{
    require_order(new_order);
    if (new_order > order()) {
        throw std::invalid_argument("cannot truncate to an order above the known order");
    }
    return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

int TruncatedSeries::valuation() const
{
    for (int k = 0; k <= order(); ++k) {
        if (!coeffs_[static_cast<std::size_t>(k)].is_zero()) {
            return k;
        }
    }
    return order() + 1;
}

bool agree(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const int n = std::min(a.order(), b.order());
    for (int k = 0; k <= n; ++k) {
        if (a[k] != b[k]) {
            return false;
        }
    }
    return true;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const int n = std::min(a.order(), b.order());
    return TruncatedSeries::generate(n, [&](int k) { return a[k] + b[k]; });
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const int n = std::min(a.order(), b.order());
    return TruncatedSeries::generate(n, [&](int k) { return a[k] - b[k]; });
}

TruncatedSeries negate(const TruncatedSeries& a)
{
    return TruncatedSeries::generate(a.order(), [&](int k) { return -a[k]; });
}

TruncatedSeries scale(const TruncatedSeries& a, const Rational& c)
{
    return TruncatedSeries::generate(a.order(), [&](int k) { return a[k] * c; });
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= n; ++j) {
            if (!b[j].is_zero()) {
                c[static_cast<std::size_t>(i + j)] += a[i] * b[j];
            }
        }
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner)
{
    if (!inner[0].is_zero()) {
        throw std::domain_error("compose: inner series must have zero constant term");
    }
    const int n = std::min(outer.order(), inner.order());
    const auto in = inner.truncate(n);
    auto acc = TruncatedSeries::constant(outer[n], n);
    for (int k = n - 1; k >= 0; --k) {
        acc = mul(acc, in);
        std::vector<Rational> c(acc.coeffs().begin(), acc.coeffs().end());
        c[0] += outer[k];
        acc = TruncatedSeries(std::move(c));
    }
    return acc;
}

TruncatedSeries exp_series(const TruncatedSeries& s)
{
    if (!s[0].is_zero()) {
        throw std::domain_error("exp_series: constant term must be zero");
    }
    const int n = s.order();
    std::vector<Rational> r(static_cast<std::size_t>(n) + 1);
    r[0] = Rational(1);
    for (int k = 1; k <= n; ++k) {
        Rational acc;
        for (int j = 1; j <= k; ++j) {
            if (!s[j].is_zero()) {
                acc += Rational(j) * s[j] * r[static_cast<std::size_t>(k - j)];
            }
        }
        r[static_cast<std::size_t>(k)] = acc / Rational(k);
    }
    return TruncatedSeries(std::move(r));
}

TruncatedSeries log_series(const TruncatedSeries& s)
{
    if (!s[0].is_one()) {
        throw std::domain_error("log_series: constant term must be 1");
    }
    const int n = s.order();
    std::vector<Rational> l(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) {
        Rational acc = Rational(k) * s[k];
        for (int j = 1; j < k; ++j) {
            if (!s[k - j].is_zero()) {
                acc -= Rational(j) * l[static_cast<std::size_t>(j)] * s[k - j];
            }
        }
        l[static_cast<std::size_t>(k)] = acc / Rational(k);
    }
    return TruncatedSeries(std::move(l));
}

TruncatedSeries pow_rational(const TruncatedSeries& s, const Rational& r)
{
    if (!s[0].is_one()) {
        throw std::domain_error("pow_rational: constant term must be 1");
    }
    return exp_series(scale(log_series(s), r));
}

TruncatedSeries pow_int(const TruncatedSeries& s, int exponent)
{
    if (exponent < 0) {
        throw std::invalid_argument("pow_int: exponent must be non-negative");
    }
    auto result = TruncatedSeries::one(s.order());
    auto base = s;
    while (exponent > 0) {
        if (exponent & 1) {
            result = mul(result, base);
        }
        exponent >>= 1;
        if (exponent > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

TruncatedSeries derivative(const TruncatedSeries& s)
{
    if (s.order() == 0) {
        throw std::domain_error("derivative: an order-0 series carries no derivative information");
    }
    return TruncatedSeries::generate(s.order() - 1, [&](int k) { return Rational(k + 1) * s[k + 1]; });
}

TruncatedSeries integrate(const TruncatedSeries& s)
{
    return TruncatedSeries::generate(s.order(), [&](int k) {
        return k == 0 ? Rational(0) : s[k - 1] / Rational(k);
    });
}

TruncatedSeries reciprocal(const TruncatedSeries& s)
{
    if (s[0].is_zero()) {
        throw std::domain_error("reciprocal: constant term must be nonzero");
    }
    const int n = s.order();
    const Rational inv0 = Rational(1) / s[0];
    std::vector<Rational> r(static_cast<std::size_t>(n) + 1);
    r[0] = inv0;
    for (int k = 1; k <= n; ++k) {
        Rational acc;
        for (int j = 1; j <= k; ++j) {
            if (!s[j].is_zero()) {
                acc += s[j] * r[static_cast<std::size_t>(k - j)];
            }
        }
        r[static_cast<std::size_t>(k)] = -acc * inv0;
    }
    return TruncatedSeries(std::move(r));
}

TruncatedSeries lagrange_invert(const TruncatedSeries& s)
{
    const int n = s.order();
    if (!s[0].is_zero()) {
        throw std::domain_error("lagrange_invert: constant term must be zero");
    }
    if (n < 1 || s[1].is_zero()) {
        throw std::domain_error("lagrange_invert: linear coefficient must be nonzero");
    }
    // pw[j][m] = [X^m] t^j; column m of every power j >= 2 only involves t_1..t_{m-1}.
    const auto sz = static_cast<std::size_t>(n) + 1;
    std::vector<std::vector<Rational>> pw(sz, std::vector<Rational>(sz));
    std::vector<Rational> t(sz);
    const Rational inv1 = Rational(1) / s[1];
    t[1] = inv1;
    pw[1][1] = inv1;
    for (int m = 2; m <= n; ++m) {
        Rational rest;
        for (int j = 2; j <= m; ++j) {
            Rational c;
            for (int i = 1; i <= m - j + 1; ++i) {
                const auto& prev = pw[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(m - i)];
                if (!prev.is_zero() && !t[static_cast<std::size_t>(i)].is_zero()) {
                    c += t[static_cast<std::size_t>(i)] * prev;
                }
            }
            pw[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)] = c;
            if (!s[j].is_zero()) {
                rest += s[j] * c;
            }
        }
        t[static_cast<std::size_t>(m)] = -rest * inv1;
        pw[1][static_cast<std::size_t>(m)] = t[static_cast<std::size_t>(m)];
    }
    TruncatedSeries inv(std::move(t));
    const auto x = TruncatedSeries::identity(n);
    if (compose(s, inv) != x || compose(inv, s) != x) {
        throw std::logic_error("lagrange_invert: composition check failed");
    }
    return inv;
}

TruncatedSeries shift_up(const TruncatedSeries& s, int k)
{
    if (k < 0) {
        throw std::invalid_argument("shift_up: negative shift");
    }
    return TruncatedSeries::generate(s.order() + k, [&](int i) { return i < k ? Rational(0) : s[i - k]; });
}

TruncatedSeries divide_by_x(const TruncatedSeries& s)
{
    if (!s[0].is_zero()) {
        throw std::domain_error("divide_by_x: constant term must be zero");
    }
    if (s.order() == 0) {
        throw std::domain_error("divide_by_x: order-0 series has nothing left after division");
    }
    return TruncatedSeries::generate(s.order() - 1, [&](int k) { return s[k + 1]; });
}

Rational evaluate(const TruncatedSeries& s, const Rational& x)
{
    Rational acc;
    for (int k = s.order(); k >= 0; --k) {
        acc = acc * x + s[k];
    }
    return acc;
}

TruncatedSeries dilate(const TruncatedSeries& s, const Rational& c)
{
    Rational p(1);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(s.order()) + 1);
    for (int k = 0; k <= s.order(); ++k) {
        out.push_back(s[k] * p);
        p *= c;
    }
    return TruncatedSeries(std::move(out));
}

std::string to_string(const TruncatedSeries& s, std::string_view var)
{
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= s.order(); ++k) {
        const auto& c = s[k];
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
    if (first) {
        os << '0';
    }
    os << " + O(" << var << '^' << (s.order() + 1) << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s)
{
    return os << to_string(s);
}

}  // namespace umbral
