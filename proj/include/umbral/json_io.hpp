#pragma once

// JSON encodings. Rationals are lowest-terms strings ("p/q" or "p").
//
//   series:     {"order": N, "coeffs": [...]}
//   log series: {"plain": <series>, "log": <series>}
//   polynomial: {"coeffs": [...]}
//   statistics: {"name", "order", "F", "w", "X_of_w", "W", "w_cluster"}
//   phi:        {"order": N, "T": [...]}
//   entropy:    {"s": [...]}

#include <json.hpp>
#include <vector>

#include "umbral/deformed_entropy.hpp"
#include "umbral/log_series.hpp"
#include "umbral/polynomial.hpp"
#include "umbral/quantities.hpp"
#include "umbral/series.hpp"
#include "umbral/statistics.hpp"

namespace umbral {

using Json = nlohmann::json;

Json to_json(const Rational& q);
Json to_json(const std::vector<Rational>& v);
Json to_json(const TruncatedSeries& s);
Json to_json(const LogSeries& l);
Json to_json(const Polynomial& p);
Json to_json(const Statistics& stat);
Json to_json(const PhiSeries& phi);
Json to_json(const EntropyDensity& h);
Json to_json(const Quantity& q);

Rational rational_from_json(const Json& j);
std::vector<Rational> rationals_from_json(const Json& j);
TruncatedSeries series_from_json(const Json& j);
LogSeries log_series_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j);
/// Rebuilt from "F"; the cached fields are recomputed and must agree.
Statistics statistics_from_json(const Json& j);
PhiSeries phi_from_json(const Json& j);
EntropyDensity entropy_density_from_json(const Json& j);

}  // namespace umbral
