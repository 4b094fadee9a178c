#include "umbral/json_io.hpp"

#include <stdexcept>

namespace umbral {

Json to_json(const Rational& q)
{
    return q.to_string();
}

Json to_json(const std::vector<Rational>& v)
{
    Json arr = Json::array();
    for (const auto& q : v) {
        arr.push_back(q.to_string());
    }
    return arr;
}

Json to_json(const TruncatedSeries& s)
{
    return {{"order", s.order()}, {"coeffs", to_json(std::vector<Rational>(s.coeffs().begin(), s.coeffs().end()))}};
}

Json to_json(const LogSeries& l)
{
    return {{"plain", to_json(l.plain())}, {"log", to_json(l.logpart())}};
}

Json to_json(const Polynomial& p)
{
    return {{"coeffs", to_json(p.coeffs())}};
}

Json to_json(const Statistics& stat)
{
    return {{"name", stat.name()},
            {"order", stat.order()},
            {"F", to_json(stat.free_energy())},
            {"w", to_json(stat.weight())},
            {"X_of_w", to_json(stat.inverse_weight())},
            {"W", to_json(stat.occupation_numbers())},
            {"w_cluster", to_json(stat.cluster_coefficients())}};
}

Json to_json(const PhiSeries& phi)
{
    return {{"order", phi.order()}, {"T", to_json(phi.T())}};
}

Json to_json(const EntropyDensity& h)
{
    return {{"s", to_json(h.s())}};
}

Json to_json(const Quantity& q)
{
    return std::visit([](const auto& v) { return to_json(v); }, q);
}

Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    if (!j.is_string()) {
        throw std::invalid_argument("rational must be a \"p/q\" string, got " + j.dump());
    }
    return Rational::parse(j.get<std::string>());
}

std::vector<Rational> rationals_from_json(const Json& j)
{
    if (!j.is_array()) {
        throw std::invalid_argument("expected an array of rationals");
    }
    std::vector<Rational> out;
    for (const auto& v : j) {
        out.push_back(rational_from_json(v));
    }
    return out;
}

TruncatedSeries series_from_json(const Json& j)
{
    auto c = rationals_from_json(j.at("coeffs"));
    const int order = j.at("order").get<int>();
    if (static_cast<int>(c.size()) != order + 1) {
        throw std::invalid_argument("series order " + std::to_string(order) + " does not match "
                                    + std::to_string(c.size()) + " coefficients");
    }
    return TruncatedSeries(std::move(c));
}

LogSeries log_series_from_json(const Json& j)
{
    const auto a = series_from_json(j.at("plain"));
    const auto b = series_from_json(j.at("log"));
    if (a.order() != b.order()) {
        throw std::invalid_argument("log series parts have different orders");
    }
    return LogSeries(a, b);
}

Polynomial polynomial_from_json(const Json& j)
{
    auto c = rationals_from_json(j.at("coeffs"));
    if (!c.empty() && c.back().is_zero()) {
        throw std::invalid_argument("polynomial has a zero leading coefficient");
    }
    return Polynomial(std::move(c));
}

Statistics statistics_from_json(const Json& j)
{
    auto stat = Statistics::from_free_energy(j.at("name").get<std::string>(), series_from_json(j.at("F")));
    if (j.contains("order") && j.at("order").get<int>() != stat.order()) {
        throw std::invalid_argument("statistics order field disagrees with F");
    }
    if (j.contains("w") && series_from_json(j.at("w")) != stat.weight()) {
        throw std::invalid_argument("statistics w field disagrees with F");
    }
    if (j.contains("X_of_w") && series_from_json(j.at("X_of_w")) != stat.inverse_weight()) {
        throw std::invalid_argument("statistics X_of_w field disagrees with F");
    }
    if (j.contains("W") && rationals_from_json(j.at("W")) != stat.occupation_numbers()) {
        throw std::invalid_argument("statistics W field disagrees with F");
    }
    if (j.contains("w_cluster") && rationals_from_json(j.at("w_cluster")) != stat.cluster_coefficients()) {
        throw std::invalid_argument("statistics w_cluster field disagrees with F");
    }
    return stat;
}

PhiSeries phi_from_json(const Json& j)
{
    return PhiSeries::from_T(rationals_from_json(j.at("T")), j.at("order").get<int>());
}

EntropyDensity entropy_density_from_json(const Json& j)
{
    return EntropyDensity(rationals_from_json(j.at("s")));
}

}  // namespace umbral
