#include "umbral/statistics.hpp"

#include <stdexcept>

#include "umbral/sequences.hpp"

namespace umbral {

namespace {

TruncatedSeries free_energy_from_weight(const TruncatedSeries& w)
{
    return TruncatedSeries::generate(w.order(), [&](int k) { return k == 0 ? Rational(0) : w[k] / Rational(k); });
}

std::vector<Rational> tail(const TruncatedSeries& s)
{
    return {s.coeffs().begin() + 1, s.coeffs().end()};
}

}  // namespace

Statistics::Statistics(std::string name, TruncatedSeries free_energy)
    : name_(std::move(name)),
      free_energy_(std::move(free_energy)),
      weight_(TruncatedSeries::zero(0)),
      inverse_weight_(TruncatedSeries::zero(0)),
      partition_function_(TruncatedSeries::zero(0))
{
    if (free_energy_.order() < 1) {
        throw std::invalid_argument("statistics need order at least 1");
    }
    if (!free_energy_[0].is_zero()) {
        throw std::domain_error("free energy must vanish at X = 0");
    }
    if (!free_energy_[1].is_one()) {
        throw std::domain_error("free energy must have linear coefficient 1 (w_1 = 1), got "
                                + free_energy_[1].to_string());
    }
    weight_ = shift_up(derivative(free_energy_));
    partition_function_ = exp_series(free_energy_);
    inverse_weight_ = lagrange_invert(weight_);
}

Statistics Statistics::from_free_energy(std::string name, TruncatedSeries free_energy)
{
    return Statistics(std::move(name), std::move(free_energy));
}

Statistics Statistics::from_cluster(const std::vector<Rational>& w, std::string name)
{
    if (w.empty() || !w[0].is_one()) {
        throw std::domain_error("first cluster coefficient must be 1");
    }
    std::vector<Rational> c{Rational(0)};
    c.insert(c.end(), w.begin(), w.end());
    return from_weight(TruncatedSeries(std::move(c)), std::move(name));
}

Statistics Statistics::from_occupation(const std::vector<Rational>& big_w, std::string name)
{
    if (big_w.empty() || !big_w[0].is_one()) {
        throw std::domain_error("first occupation number must be 1");
    }
    std::vector<Rational> z{Rational(1)};
    z.insert(z.end(), big_w.begin(), big_w.end());
    return Statistics(std::move(name), log_series(TruncatedSeries(std::move(z))));
}

Statistics Statistics::from_weight(const TruncatedSeries& w, std::string name)
{
    if (!w[0].is_zero()) {
        throw std::domain_error("weight function must vanish at X = 0");
    }
    return Statistics(std::move(name), free_energy_from_weight(w));
}

std::vector<Rational> Statistics::occupation_numbers() const
{
    return tail(partition_function_);
}

std::vector<Rational> Statistics::cluster_coefficients() const
{
    return tail(weight_);
}

Statistics Statistics::renamed(std::string name) const
{
    Statistics s = *this;
    s.name_ = std::move(name);
    return s;
}

bool same_statistics(const Statistics& a, const Statistics& b)
{
    return a.free_energy() == b.free_energy();
}

std::vector<Polynomial> occupation_polynomials(const Statistics& stat, int k)
{
    const auto gamma = conjugate_sequence(DeltaSeries(stat.free_energy()), k);
    std::vector<Polynomial> out;
    out.reserve(gamma.size());
    for (int i = 0; i <= k; ++i) {
        out.push_back((Rational(1) / factorial(i)) * gamma[static_cast<std::size_t>(i)]);
    }
    return out;
}

Polynomial occupation_polynomial(const Statistics& stat, int k)
{
    return occupation_polynomials(stat, k).back();
}

bool occupation_recursion_check(const Statistics& stat, const Rational& n1, const Rational& n2, int k)
{
    const auto w = occupation_polynomials(stat, k);
    Rational rhs;
    for (int i = 0; i <= k; ++i) {
        rhs += w[static_cast<std::size_t>(i)](n1) * w[static_cast<std::size_t>(k - i)](n2);
    }
    return w[static_cast<std::size_t>(k)](n1 + n2) == rhs;
}

Statistics dual(const Statistics& stat)
{
    return Statistics::from_weight(stat.inverse_weight(), "dual(" + stat.name() + ")");
}

Statistics group_compose(const Statistics& v, const Statistics& w)
{
    return Statistics::from_weight(compose(v.weight(), w.weight()), v.name() + " o " + w.name());
}

TruncatedSeries twist(const TruncatedSeries& weight, int m)
{
    if (m < 0) {
        throw std::invalid_argument("twist exponent must be non-negative");
    }
    return TruncatedSeries::generate(weight.order(), [&](int n) { return pow(Rational(n), m) * weight[n]; });
}

Statistics group_compose_m(const Statistics& v, const Statistics& w, int m)
{
    return Statistics::from_weight(compose(twist(v.weight(), m), twist(w.weight(), m)),
                                   v.name() + " o_" + std::to_string(m) + " " + w.name());
}

LogSeries entropy(const Statistics& stat)
{
    return LogSeries(stat.free_energy(), negate(stat.weight()));
}

Rational haldane_wu_W(const Rational& g, int n, const Rational& beta)
{
    if (n < 0) {
        throw std::invalid_argument("haldane_wu_W: particle number must be non-negative");
    }
    const Rational top = g + Rational(n - 1) * (Rational(1) - beta);
    Rational acc(1);
    for (int j = 0; j < n; ++j) {
        acc *= top - Rational(j);
    }
    return acc / factorial(n);
}

Statistics gentile_statistics(int p, int order)
{
    if (p < 1) {
        throw std::domain_error("gentile statistics need p >= 1");
    }
    const auto z = TruncatedSeries::generate(order, [&](int k) { return k <= p ? Rational(1) : Rational(0); });
    return Statistics::from_free_energy("gentile(" + std::to_string(p) + ")", log_series(z));
}

std::vector<SpectralSample> spectral_samples(const Statistics& stat, const std::vector<Rational>& xs)
{
    std::vector<SpectralSample> out;
    out.reserve(xs.size());
    for (const auto& x : xs) {
        out.push_back({x, evaluate(stat.partition_function(), x), evaluate(stat.free_energy(), x)});
    }
    return out;
}

Rational mean_occupation(const Statistics& stat, const Rational& x)
{
    return evaluate(stat.weight(), x);
}

}  // namespace umbral
