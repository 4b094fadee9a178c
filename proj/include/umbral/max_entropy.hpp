#pragma once

// Maximum-entropy occupation p_i = w(exp(-(a + b E_i))) in double precision,
// with w the truncated weight function of a statistics.

#include <vector>

#include "umbral/statistics.hpp"

namespace umbral {

struct MaxEntropyEvaluation {
    std::vector<double> p;
    /// sum p_i - 1.
    double normalization_residual = 0.0;
    /// sum p_i E_i - E.
    double energy_residual = 0.0;
};

struct MaxEntropyResult {
    MaxEntropyEvaluation evaluation;
    double a = 0.0;
    double b = 0.0;
    bool converged = false;
    int iterations = 0;
};

struct NewtonOptions {
    double a0 = 1.0;
    double b0 = 1.0;
    double tolerance = 1e-10;
    int max_iterations = 100;
};

MaxEntropyEvaluation max_entropy_distribution(const Statistics& stat, const std::vector<double>& energies, double a,
                                              double b, double target_energy);

/// Damped two-variable Newton iteration on (a, b). Non-convergence is reported
/// through `converged` together with the last iterate.
MaxEntropyResult solve_max_entropy(const Statistics& stat, const std::vector<double>& energies, double target_energy,
                                   const NewtonOptions& options = {});

}  // namespace umbral
