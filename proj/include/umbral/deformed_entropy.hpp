#pragma once

// Deformed exponentials phi_T(p) = p - sum_{n>=2} T_{n-1} p^n, the deformed
// entropies H_s(p) = -p(log p + sum s_n p^n/(n(n+1))) and the maps between
// them and the space of statistics.
//
// Logarithms and entropies are returned in normalized form: the constants
// log X(1) and F(X(1)) are dropped, so ln0(p) = log X(p) and
// H0(p) = F(X(p)) - p log X(p).

#include <optional>
#include <vector>

#include "umbral/log_series.hpp"
#include "umbral/series.hpp"
#include "umbral/statistics.hpp"

namespace umbral {

class PhiSeries {
public:
    /// phi with phi(0) = 0 and phi'(0) = 1.
    explicit PhiSeries(TruncatedSeries phi);
    /// T_1..T_{N-1} give a series of order N (padded with zero T's up to order).
    static PhiSeries from_T(const std::vector<Rational>& t, int order = -1);

    const TruncatedSeries& series() const { return phi_; }
    int order() const { return phi_.order(); }
    /// T_1..T_{N-1}.
    std::vector<Rational> T() const;

    friend bool operator==(const PhiSeries&, const PhiSeries&) = default;

private:
    TruncatedSeries phi_;
};

class EntropyDensity {
public:
    explicit EntropyDensity(std::vector<Rational> s);

    /// s_1..s_M.
    const std::vector<Rational>& s() const { return s_; }
    /// -p(log p + sum s_n p^n/(n(n+1))) through order M + 1.
    LogSeries to_log_series() const;
    /// Reads s_n back from a LogSeries of that shape.
    static EntropyDensity from_log_series(const LogSeries& h);

    friend bool operator==(const EntropyDensity&, const EntropyDensity&) = default;

private:
    std::vector<Rational> s_;
};

/// a_1..a_{n_max}, a_n = [u^n] u/phi(u); n_max <= order - 1.
std::vector<Rational> a_from_phi(const PhiSeries& phi, int n_max);
/// X(p) = p exp(sum a_n p^n / n).
TruncatedSeries X_from_phi(const PhiSeries& phi);

/// The statistics whose inverse weight function is X(p).
Statistics map_g(const PhiSeries& phi);
/// phi = X(u)/X'(u) from the inverse weight function.
PhiSeries map_g_inverse(const Statistics& stat);

/// log p + sum a_n p^n / n.
LogSeries ln_phi(const PhiSeries& phi);
LogSeries ln_phi(const Statistics& stat);
/// Inverse of q = exp(ln0(p)), i.e. the weight function w(q).
TruncatedSeries exp_phi(const PhiSeries& phi);
TruncatedSeries exp_phi(const Statistics& stat);

/// integral_0^u v/phi(v) dv.
TruncatedSeries xi_integral(const PhiSeries& phi);
/// F(X(u)).
TruncatedSeries xi_composed(const Statistics& stat);
/// Both routes, checked against each other; throws std::logic_error on mismatch.
TruncatedSeries xi(const PhiSeries& phi);

/// 1/xi(1/u) from partial sums.
Rational chi(const PhiSeries& phi, const Rational& u);

struct PhiEntropy {
    LogSeries normalized;
    /// c0 = F(X(1)) - log X(1) when known exactly; H = H0 - c0 p.
    std::optional<Rational> constant;

    LogSeries full() const;
};

/// H0(p) = F(X(p)) - p log X(p) from the statistics' own F and X(w).
PhiEntropy phi_entropy(const Statistics& stat, std::optional<Rational> constant = std::nullopt);
PhiEntropy phi_entropy(const PhiSeries& phi);

/// d/dp H0 == -ln0 up to the constant term.
bool entropy_gradient_check(const PhiSeries& phi);
bool entropy_gradient_check(const Statistics& stat);

/// H(X) == H0(w(X)) exactly.
bool main_theorem_check(const Statistics& stat);

/// 1 + sum s_n p^n = 1/(1 - sum T_n p^n).
std::vector<Rational> s_from_T(const std::vector<Rational>& t);
std::vector<Rational> T_from_s(const std::vector<Rational>& s);

EntropyDensity map_f(const PhiSeries& phi);
PhiSeries map_f_inverse(const EntropyDensity& h);
/// Entropy density from the statistics directly: H0(p) - p.
EntropyDensity map_h(const Statistics& stat);

/// g^-1 o sigma o g on phi-series.
PhiSeries tau(const PhiSeries& phi);
/// f o tau o f^-1 on entropy densities.
EntropyDensity rho(const EntropyDensity& h);

}  // namespace umbral
