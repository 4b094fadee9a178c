#include "umbral/max_entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace umbral {

namespace {

struct WeightPoly {
    std::vector<double> c;

    double value(double q) const
    {
        double acc = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            acc = acc * q + *it;
        }
        return acc;
    }

    double slope(double q) const
    {
        double acc = 0.0;
        for (std::size_t k = c.size() - 1; k >= 1; --k) {
            acc = acc * q + static_cast<double>(k) * c[k];
        }
        return acc;
    }
};

WeightPoly weight_poly(const Statistics& stat)
{
    WeightPoly w;
    for (const auto& x : stat.weight().coeffs()) {
        w.c.push_back(x.to_double());
    }
    return w;
}

MaxEntropyEvaluation evaluate_at(const WeightPoly& w, const std::vector<double>& energies, double a, double b,
                                 double target_energy)
{
    MaxEntropyEvaluation ev;
    double sum = 0.0;
    double energy = 0.0;
    for (double e : energies) {
        const double p = w.value(std::exp(-(a + b * e)));
        ev.p.push_back(p);
        sum += p;
        energy += p * e;
    }
    ev.normalization_residual = sum - 1.0;
    ev.energy_residual = energy - target_energy;
    return ev;
}

double norm(const MaxEntropyEvaluation& ev)
{
    return std::max(std::abs(ev.normalization_residual), std::abs(ev.energy_residual));
}

}  // namespace

MaxEntropyEvaluation max_entropy_distribution(const Statistics& stat, const std::vector<double>& energies, double a,
                                              double b, double target_energy)
{
    return evaluate_at(weight_poly(stat), energies, a, b, target_energy);
}

MaxEntropyResult solve_max_entropy(const Statistics& stat, const std::vector<double>& energies, double target_energy,
                                   const NewtonOptions& options)
{
    if (energies.empty()) {
        throw std::invalid_argument("max-entropy needs at least one energy level");
    }
    const auto w = weight_poly(stat);
    MaxEntropyResult r;
    r.a = options.a0;
    r.b = options.b0;
    r.evaluation = evaluate_at(w, energies, r.a, r.b, target_energy);
    for (r.iterations = 0; r.iterations < options.max_iterations; ++r.iterations) {
        if (!std::isfinite(norm(r.evaluation))) {
            break;
        }
        if (norm(r.evaluation) < options.tolerance) {
            r.converged = true;
            break;
        }
        // d p_i / d a = -q_i w'(q_i), d p_i / d b = E_i d p_i / d a
        double j11 = 0.0, j12 = 0.0, j21 = 0.0, j22 = 0.0;
        for (double e : energies) {
            const double q = std::exp(-(r.a + r.b * e));
            const double dpa = -q * w.slope(q);
            j11 += dpa;
            j12 += dpa * e;
            j21 += dpa * e;
            j22 += dpa * e * e;
        }
        const double det = j11 * j22 - j12 * j21;
        if (det == 0.0 || !std::isfinite(det)) {
            break;
        }
        const double f1 = r.evaluation.normalization_residual;
        const double f2 = r.evaluation.energy_residual;
        const double da = -(j22 * f1 - j12 * f2) / det;
        const double db = -(-j21 * f1 + j11 * f2) / det;
        double step = 1.0;
        auto next = evaluate_at(w, energies, r.a + da, r.b + db, target_energy);
        while (step > 1e-6 && !(norm(next) < norm(r.evaluation))) {
            step *= 0.5;
            next = evaluate_at(w, energies, r.a + step * da, r.b + step * db, target_energy);
        }
        r.a += step * da;
        r.b += step * db;
        r.evaluation = std::move(next);
    }
    if (!r.converged && norm(r.evaluation) < options.tolerance) {
        r.converged = true;
    }
    return r;
}

}  // namespace umbral
