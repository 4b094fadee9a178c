#include "umbral/sequences.hpp"

#include <stdexcept>
#include <string>

namespace umbral {

namespace {

void require_count(int n, int order)
{
    if (n < 0) {
        throw std::invalid_argument("sequence length must be non-negative");
    }
    if (n > order) {
        throw std::domain_error("requested " + std::to_string(n) + " terms but the series is known only through order "
                                + std::to_string(order));
    }
}

// n! [t^n] sum_k x^k (F^k / k!) * weight
PolynomialSequence exponential_sequence(const TruncatedSeries& big_f, const TruncatedSeries& weight, int n)
{
    const auto f = big_f.truncate(n);
    const auto u = weight.truncate(n);
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(n) + 1,
                                            std::vector<Rational>(static_cast<std::size_t>(n) + 1));
    auto power = u;
    for (int k = 0; k <= n; ++k) {
        const Rational inv_kfact = Rational(1) / factorial(k);
        for (int m = k; m <= n; ++m) {
            rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] = factorial(m) * power[m] * inv_kfact;
        }
        if (k < n) {
            power = mul(power, f);
        }
    }
    std::vector<Polynomial> polys;
    polys.reserve(rows.size());
    for (auto& r : rows) {
        polys.emplace_back(std::move(r));
    }
    return PolynomialSequence(std::move(polys));
}

}  // namespace

DeltaSeries::DeltaSeries(TruncatedSeries series) : series_(std::move(series))
{
    if (!series_[0].is_zero()) {
        throw std::domain_error("delta series must have zero constant term");
    }
    if (series_.order() < 1 || series_[1].is_zero()) {
        throw std::domain_error("delta series must have a nonzero linear coefficient");
    }
}

InvertibleSeries::InvertibleSeries(TruncatedSeries series) : series_(std::move(series))
{
    if (series_[0].is_zero()) {
        throw std::domain_error("invertible series must have a nonzero constant term");
    }
}

PolynomialSequence::PolynomialSequence(std::vector<Polynomial> polys) : polys_(std::move(polys))
{
    for (std::size_t k = 0; k < polys_.size(); ++k) {
        if (polys_[k].degree() != static_cast<int>(k)) {
            throw std::invalid_argument("polynomial sequence entry " + std::to_string(k) + " has degree "
                                        + std::to_string(polys_[k].degree()));
        }
    }
}

std::vector<std::vector<Rational>> PolynomialSequence::coefficient_matrix() const
{
    std::vector<std::vector<Rational>> m(polys_.size(), std::vector<Rational>(polys_.size()));
    for (std::size_t n = 0; n < polys_.size(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            m[n][k] = polys_[n].coeff(static_cast<int>(k));
        }
    }
    return m;
}

bool PolynomialSequence::has_binomial_shape() const
{
    if (polys_.empty() || polys_[0] != Polynomial::constant(Rational(1))) {
        return false;
    }
    for (std::size_t k = 1; k < polys_.size(); ++k) {
        if (!polys_[k].coeff(0).is_zero()) {
            return false;
        }
    }
    return true;
}

PolynomialSequence conjugate_sequence(const DeltaSeries& big_f, int n)
{
    require_count(n, big_f.order());
    return exponential_sequence(big_f.series(), TruncatedSeries::one(n), n);
}

PolynomialSequence associated_sequence(const DeltaSeries& f, int n)
{
    require_count(n, f.order());
    return conjugate_sequence(DeltaSeries(lagrange_invert(f.series())), n);
}

Polynomial apply_operator(const TruncatedSeries& h, const Polynomial& p)
{
    if (p.degree() > h.order()) {
        throw std::domain_error("operator series known through order " + std::to_string(h.order())
                                + " cannot act on a polynomial of degree " + std::to_string(p.degree()));
    }
    Polynomial result;
    Polynomial dk = p;
    for (int k = 0; k <= p.degree(); ++k) {
        if (!h[k].is_zero()) {
            result += h[k] * dk;
        }
        dk = derivative(dk);
    }
    return result;
}

Rational apply_functional(const TruncatedSeries& h, const Polynomial& p)
{
    return apply_operator(h, p)(Rational(0));
}

PolynomialSequence umbral_composition(const PolynomialSequence& p, const PolynomialSequence& q)
{
    if (p.size() != q.size()) {
        throw std::invalid_argument("umbral composition needs sequences of equal length");
    }
    std::vector<Polynomial> out;
    out.reserve(p.size());
    for (std::size_t n = 0; n < p.size(); ++n) {
        Polynomial r;
        for (int k = 0; k <= p[n].degree(); ++k) {
            const Rational c = p[n].coeff(k);
            if (!c.is_zero()) {
                r += c * q[static_cast<std::size_t>(k)];
            }
        }
        out.push_back(std::move(r));
    }
    return PolynomialSequence(std::move(out));
}

std::vector<std::vector<Rational>> connection_coefficients(const DeltaSeries& big_f, const DeltaSeries& big_g, int n)
{
    require_count(n, std::min(big_f.order(), big_g.order()));
    const auto f = lagrange_invert(big_f.series());
    return conjugate_sequence(DeltaSeries(compose(f, big_g.series())), n).coefficient_matrix();
}

PolynomialSequence sheffer_sequence(const InvertibleSeries& g, const DeltaSeries& f, int n)
{
    require_count(n, std::min(g.order(), f.order()));
    const auto big_f = lagrange_invert(f.series());
    const auto weight = reciprocal(compose(g.series(), big_f));
    return exponential_sequence(big_f, weight, n);
}

Polynomial umbral_shift_next(const DeltaSeries& f, const Polynomial& p_prev)
{
    const auto inv_fprime = reciprocal(derivative(f.series()));
    return mul_x(apply_operator(inv_fprime, p_prev));
}

Polynomial sheffer_shift_next(const InvertibleSeries& g, const DeltaSeries& f, const Polynomial& s_prev)
{
    const auto inv_fprime = reciprocal(derivative(f.series()));
    const auto log_deriv = mul(derivative(g.series()), reciprocal(g.series()));
    const auto t = apply_operator(inv_fprime, s_prev);
    return mul_x(t) - apply_operator(log_deriv, t);
}

ShefferPair ShefferPair::identity(int order)
{
    return ShefferPair{InvertibleSeries(TruncatedSeries::one(order)),
                       DeltaSeries(TruncatedSeries::identity(order))};
}

ShefferPair sheffer_compose(const ShefferPair& first, const ShefferPair& second)
{
    const auto& g = first.g.series();
    const auto& f = first.f.series();
    return ShefferPair{InvertibleSeries(mul(g, compose(second.g.series(), f))),
                       DeltaSeries(compose(second.f.series(), f))};
}

ShefferPair sheffer_inverse(const ShefferPair& pair)
{
    const auto big_f = lagrange_invert(pair.f.series());
    return ShefferPair{InvertibleSeries(reciprocal(compose(pair.g.series(), big_f))), DeltaSeries(big_f)};
}

bool agree(const ShefferPair& a, const ShefferPair& b)
{
    return agree(a.g.series(), b.g.series()) && agree(a.f.series(), b.f.series());
}

Polynomial commutator_action(const DeltaSeries& f, const Polynomial& p)
{
    const auto& fs = f.series();
    const auto inv_fprime = reciprocal(derivative(fs));
    const auto theta = [&](const Polynomial& q) { return mul_x(apply_operator(inv_fprime, q)); };
    return apply_operator(fs, theta(p)) - theta(apply_operator(fs, p));
}

Polynomial expansion_theorem_rhs(const TruncatedSeries& h, const DeltaSeries& f, int n)
{
    const auto p = associated_sequence(f, n);
    Polynomial term = Polynomial::monomial(Rational(1), n);
    Polynomial result;
    for (int k = 0; k <= n; ++k) {
        const Rational c = apply_functional(h, p[static_cast<std::size_t>(k)]) / factorial(k);
        if (!c.is_zero()) {
            result += c * term;
        }
        term = apply_operator(f.series(), term);
    }
    return result;
}

bool binomial_identity_holds(const PolynomialSequence& p, int n, const Rational& a, const Rational& b)
{
    Rational rhs;
    for (int k = 0; k <= n; ++k) {
        rhs += binomial(Rational(n), k) * p[static_cast<std::size_t>(k)](a)
               * p[static_cast<std::size_t>(n - k)](b);
    }
    return p[static_cast<std::size_t>(n)](a + b) == rhs;
}

}  // namespace umbral
