#pragma once

// Named derived quantities of a statistics, as surfaced by the CLI and used
// by the fixture checks.

#include <string>
#include <variant>
#include <vector>

#include "umbral/catalog.hpp"
#include "umbral/log_series.hpp"
#include "umbral/polynomial.hpp"
#include "umbral/series.hpp"
#include "umbral/statistics.hpp"

namespace umbral {

using Quantity = std::variant<TruncatedSeries, LogSeries, Polynomial>;

/// Tags accepted by compute_quantity (gamma_<n> is accepted for any n).
const std::vector<std::string>& quantity_tags();

/// F, z, w, X_of_w, phi, phi_in_X, xi, Y, u_over_phi, f_inverse, ln_phi,
/// entropy, phi_entropy, gamma_<n>. A ".plain" or ".log" suffix selects one
/// part of a LogSeries. Throws std::invalid_argument on an unknown tag.
Quantity compute_quantity(const Statistics& stat, const std::string& tag);

/// The coefficient list a quantity contributes to a fixture comparison.
std::vector<Rational> quantity_coeffs(const Quantity& q);

struct FixtureCheck {
    bool passed = false;
    int order = 0;
    int first_mismatch = -1;
    std::vector<Rational> computed;
    std::string message;
};

FixtureCheck check_fixture(const Fixture& fixture);

}  // namespace umbral
