#pragma once

// Elements of the space of interpolating statistics. A Statistics is stored by
// its free energy F(X) = log z(X) with F(0) = 0 and [X]F = 1; the weight
// function w = X F'(X), its compositional inverse X(w) and the partition
// function z = exp(F) are computed once on construction.

#include <string>
#include <vector>

#include "umbral/log_series.hpp"
#include "umbral/polynomial.hpp"
#include "umbral/series.hpp"

namespace umbral {

class Statistics {
public:
    static Statistics from_free_energy(std::string name, TruncatedSeries free_energy);
    /// w_1..w_N (w_1 must be 1); F = sum w_n X^n / n.
    static Statistics from_cluster(const std::vector<Rational>& w, std::string name = "cluster");
    /// W_1..W_N (W_1 must be 1); F = log(1 + sum W_n X^n).
    static Statistics from_occupation(const std::vector<Rational>& big_w, std::string name = "occupation");
    /// Weight function w(X) = X + ...
    static Statistics from_weight(const TruncatedSeries& w, std::string name = "weight");

    const std::string& name() const { return name_; }
    int order() const { return free_energy_.order(); }
    const TruncatedSeries& free_energy() const { return free_energy_; }
    const TruncatedSeries& weight() const { return weight_; }
    const TruncatedSeries& inverse_weight() const { return inverse_weight_; }
    const TruncatedSeries& partition_function() const { return partition_function_; }

    /// W_1..W_N.
    std::vector<Rational> occupation_numbers() const;
    /// w_1..w_N.
    std::vector<Rational> cluster_coefficients() const;

    Statistics renamed(std::string name) const;

private:
    Statistics(std::string name, TruncatedSeries free_energy);

    std::string name_;
    TruncatedSeries free_energy_;
    TruncatedSeries weight_;
    TruncatedSeries inverse_weight_;
    TruncatedSeries partition_function_;
};

/// Same free energy (names are ignored).
bool same_statistics(const Statistics& a, const Statistics& b);

/// W_k(N) = [X^k] z(X)^N as a polynomial of degree k in N.
Polynomial occupation_polynomial(const Statistics& stat, int k);
/// W_0(N)..W_k(N).
std::vector<Polynomial> occupation_polynomials(const Statistics& stat, int k);

/// W_k(N1 + N2) == sum_i W_i(N1) W_{k-i}(N2).
bool occupation_recursion_check(const Statistics& stat, const Rational& n1, const Rational& n2, int k);

/// Weight function replaced by its compositional inverse.
Statistics dual(const Statistics& stat);

/// Weight function v(w(X)).
Statistics group_compose(const Statistics& v, const Statistics& w);
/// Weight functions twisted by w_n -> n^m w_n before composing.
Statistics group_compose_m(const Statistics& v, const Statistics& w, int m);
/// w_n -> n^m w_n.
TruncatedSeries twist(const TruncatedSeries& weight, int m);

/// H(X) = F(X) - w(X) log X.
LogSeries entropy(const Statistics& stat);

/// (1/n!) prod_{j<n} (g + (n-1)(1-beta) - j).
Rational haldane_wu_W(const Rational& g, int n, const Rational& beta);

/// z = 1 + X + ... + X^p.
Statistics gentile_statistics(int p, int order);

struct SpectralSample {
    Rational x;
    Rational z;
    Rational y;
};

/// (X, z(X), F(X)) from partial sums.
std::vector<SpectralSample> spectral_samples(const Statistics& stat, const std::vector<Rational>& xs);

/// Partial sum of w at X.
Rational mean_occupation(const Statistics& stat, const Rational& x);

}  // namespace umbral
