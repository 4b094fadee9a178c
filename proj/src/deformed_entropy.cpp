#include "umbral/deformed_entropy.hpp"

#include <stdexcept>
#include <string>

namespace umbral {

namespace {

// u/phi(u), known through order N - 1.
TruncatedSeries u_over_phi(const PhiSeries& phi)
{
    return reciprocal(divide_by_x(phi.series()));
}

// sum a_n p^n / n with zero constant term.
TruncatedSeries log_x_over_p(const PhiSeries& phi)
{
    const auto r = u_over_phi(phi);
    return TruncatedSeries::generate(r.order(), [&](int n) { return n == 0 ? Rational(0) : r[n] / Rational(n); });
}

TruncatedSeries one_minus_sum(const std::vector<Rational>& c, int sign)
{
    std::vector<Rational> v{Rational(1)};
    for (const auto& x : c) {
        v.push_back(sign < 0 ? -x : x);
    }
    return TruncatedSeries(std::move(v));
}

std::vector<Rational> tail(const TruncatedSeries& s)
{
    return {s.coeffs().begin() + 1, s.coeffs().end()};
}

}  // namespace

PhiSeries::PhiSeries(TruncatedSeries phi) : phi_(std::move(phi))
{
    if (phi_.order() < 1 || !phi_[0].is_zero() || !phi_[1].is_one()) {
        throw std::domain_error("phi series must be p + O(p^2)");
    }
}

PhiSeries PhiSeries::from_T(const std::vector<Rational>& t, int order)
{
    const int n = order < 0 ? static_cast<int>(t.size()) + 1 : order;
    return PhiSeries(TruncatedSeries::generate(n, [&](int k) {
        if (k == 1) {
            return Rational(1);
        }
        if (k >= 2 && static_cast<std::size_t>(k - 2) < t.size()) {
            return -t[static_cast<std::size_t>(k - 2)];
        }
        return Rational(0);
    }));
}

std::vector<Rational> PhiSeries::T() const
{
    std::vector<Rational> t;
    for (int k = 2; k <= order(); ++k) {
        t.push_back(-phi_[k]);
    }
    return t;
}

EntropyDensity::EntropyDensity(std::vector<Rational> s) : s_(std::move(s)) {}

LogSeries EntropyDensity::to_log_series() const
{
    const int n = static_cast<int>(s_.size()) + 1;
    const auto plain = TruncatedSeries::generate(n, [&](int k) {
        if (k < 2) {
            return Rational(0);
        }
        const int m = k - 1;
        return -s_[static_cast<std::size_t>(m - 1)] / Rational(m * (m + 1));
    });
    return LogSeries(plain, TruncatedSeries::monomial(Rational(-1), 1, n));
}

EntropyDensity EntropyDensity::from_log_series(const LogSeries& h)
{
    const int n = h.order();
    if (h.logpart() != TruncatedSeries::monomial(Rational(-1), 1, n)) {
        throw std::domain_error("entropy density must have log part -p");
    }
    if (n < 1 || !h.plain()[0].is_zero() || !h.plain()[1].is_zero()) {
        throw std::domain_error("entropy density plain part must start at p^2");
    }
    std::vector<Rational> s;
    for (int m = 1; m + 1 <= n; ++m) {
        s.push_back(-h.plain()[m + 1] * Rational(m * (m + 1)));
    }
    return EntropyDensity(std::move(s));
}

std::vector<Rational> a_from_phi(const PhiSeries& phi, int n_max)
{
    const auto r = u_over_phi(phi);
    if (n_max > r.order()) {
        throw std::domain_error("a_n requested through " + std::to_string(n_max) + " but phi only determines "
                                + std::to_string(r.order()));
    }
    return {r.coeffs().begin() + 1, r.coeffs().begin() + n_max + 1};
}

TruncatedSeries X_from_phi(const PhiSeries& phi)
{
    return shift_up(exp_series(log_x_over_p(phi)));
}

Statistics map_g(const PhiSeries& phi)
{
    return Statistics::from_weight(lagrange_invert(X_from_phi(phi)), "phi");
}

PhiSeries map_g_inverse(const Statistics& stat)
{
    const auto& x = stat.inverse_weight();
    const auto dlog = shift_up(derivative(log_series(divide_by_x(x))));
    return PhiSeries(shift_up(reciprocal(TruncatedSeries::one(dlog.order()) + dlog)));
}

LogSeries ln_phi(const PhiSeries& phi)
{
    const auto plain = log_x_over_p(phi);
    return LogSeries(plain, TruncatedSeries::one(plain.order()));
}

LogSeries ln_phi(const Statistics& stat)
{
    const auto plain = log_series(divide_by_x(stat.inverse_weight()));
    return LogSeries(plain, TruncatedSeries::one(plain.order()));
}

TruncatedSeries exp_phi(const PhiSeries& phi)
{
    return lagrange_invert(X_from_phi(phi));
}

TruncatedSeries exp_phi(const Statistics& stat)
{
    return stat.weight();
}

TruncatedSeries xi_integral(const PhiSeries& phi)
{
    const auto r = u_over_phi(phi);
    return TruncatedSeries::generate(r.order() + 1, [&](int k) { return k == 0 ? Rational(0) : r[k - 1] / Rational(k); });
}

TruncatedSeries xi_composed(const Statistics& stat)
{
    return compose(stat.free_energy(), stat.inverse_weight());
}

TruncatedSeries xi(const PhiSeries& phi)
{
    const auto a = xi_integral(phi);
    const auto b = xi_composed(map_g(phi));
    if (!agree(a, b)) {
        throw std::logic_error("xi: integral and F(X(u)) disagree");
    }
    return a.order() <= b.order() ? a : b;
}

Rational chi(const PhiSeries& phi, const Rational& u)
{
    const Rational v = evaluate(xi(phi), Rational(1) / u);
    if (v.is_zero()) {
        throw std::domain_error("chi: xi partial sum vanishes at 1/u");
    }
    return Rational(1) / v;
}

LogSeries PhiEntropy::full() const
{
    if (!constant) {
        throw std::domain_error("phi-entropy constant not evaluated for this entry");
    }
    const int n = normalized.order();
    return sub(normalized, LogSeries(TruncatedSeries::monomial(*constant, 1, n), TruncatedSeries::zero(n)));
}

PhiEntropy phi_entropy(const Statistics& stat, std::optional<Rational> constant)
{
    const auto& x = stat.inverse_weight();
    const int n = x.order();
    const auto p = TruncatedSeries::identity(n);
    const auto plain = xi_composed(stat) - shift_up(log_series(divide_by_x(x)));
    return PhiEntropy{LogSeries(plain, negate(p)), constant};
}

PhiEntropy phi_entropy(const PhiSeries& phi)
{
    const int n = phi.order();
    const auto p = TruncatedSeries::identity(n);
    const auto plain = xi_integral(phi) - shift_up(log_x_over_p(phi));
    return PhiEntropy{LogSeries(plain, negate(p)), std::nullopt};
}

namespace {

bool gradient_matches(const LogSeries& h0, const LogSeries& ln0)
{
    const auto d = logseries_derivative(h0);
    const auto target = scale(ln0, Rational(-1));
    if (!agree(d.logpart(), target.logpart())) {
        return false;
    }
    const int n = std::min(d.order(), target.order());
    for (int k = 1; k <= n; ++k) {
        if (d.plain()[k] != target.plain()[k]) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool entropy_gradient_check(const PhiSeries& phi)
{
    return gradient_matches(phi_entropy(phi).normalized, ln_phi(phi));
}

bool entropy_gradient_check(const Statistics& stat)
{
    return gradient_matches(phi_entropy(stat).normalized, ln_phi(stat));
}

bool main_theorem_check(const Statistics& stat)
{
    const auto h0 = phi_entropy(map_g_inverse(stat)).normalized;
    return agree(entropy(stat), logseries_compose(h0, stat.weight()));
}

std::vector<Rational> s_from_T(const std::vector<Rational>& t)
{
    return tail(reciprocal(one_minus_sum(t, -1)));
}

std::vector<Rational> T_from_s(const std::vector<Rational>& s)
{
    auto inv = reciprocal(one_minus_sum(s, 1));
    auto t = tail(inv);
    for (auto& x : t) {
        x = -x;
    }
    return t;
}

EntropyDensity map_f(const PhiSeries& phi)
{
    return EntropyDensity(s_from_T(phi.T()));
}

PhiSeries map_f_inverse(const EntropyDensity& h)
{
    return PhiSeries::from_T(T_from_s(h.s()));
}

EntropyDensity map_h(const Statistics& stat)
{
    const auto h0 = phi_entropy(stat).normalized;
    const int n = h0.order();
    return EntropyDensity::from_log_series(
        sub(h0, LogSeries(TruncatedSeries::identity(n), TruncatedSeries::zero(n))));
}

PhiSeries tau(const PhiSeries& phi)
{
    return map_g_inverse(dual(map_g(phi)));
}

EntropyDensity rho(const EntropyDensity& h)
{
    return map_f(tau(map_f_inverse(h)));
}

}  // namespace umbral
