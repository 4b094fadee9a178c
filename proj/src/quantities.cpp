#include "umbral/quantities.hpp"

#include <algorithm>
#include <stdexcept>

#include "umbral/deformed_entropy.hpp"
#include "umbral/sequences.hpp"

namespace umbral {

namespace {

bool starts_with(const std::string& s, const std::string& prefix)
{
    return s.rfind(prefix, 0) == 0;
}

Quantity base_quantity(const Statistics& stat, const std::string& tag)
{
    if (tag == "F") {
        return stat.free_energy();
    }
    if (tag == "z") {
        return stat.partition_function();
    }
    if (tag == "w") {
        return stat.weight();
    }
    if (tag == "X_of_w") {
        return stat.inverse_weight();
    }
    if (tag == "phi") {
        return map_g_inverse(stat).series();
    }
    if (tag == "phi_in_X") {
        const auto& w = stat.weight();
        return TruncatedSeries::generate(w.order(), [&](int k) { return Rational(k) * w[k]; });
    }
    if (tag == "xi") {
        return xi(map_g_inverse(stat));
    }
    if (tag == "Y") {
        return divide_by_x(xi(map_g_inverse(stat)));
    }
    if (tag == "u_over_phi") {
        return reciprocal(divide_by_x(map_g_inverse(stat).series()));
    }
    if (tag == "f_inverse") {
        return lagrange_invert(stat.free_energy());
    }
    if (tag == "ln_phi") {
        return ln_phi(stat);
    }
    if (tag == "entropy") {
        return entropy(stat);
    }
    if (tag == "phi_entropy") {
        return phi_entropy(stat).normalized;
    }
    if (starts_with(tag, "gamma_")) {
        int n = -1;
        try {
            std::size_t used = 0;
            n = std::stoi(tag.substr(6), &used);
            if (used != tag.size() - 6) {
                n = -1;
            }
        } catch (const std::exception&) {
            n = -1;
        }
        if (n < 0) {
            throw std::invalid_argument("malformed quantity '" + tag + "' (expected gamma_<n>)");
        }
        return conjugate_sequence(DeltaSeries(stat.free_energy()), n)[static_cast<std::size_t>(n)];
    }
    std::string known;
    for (const auto& t : quantity_tags()) {
        known += (known.empty() ? "" : ", ") + t;
    }
    throw std::invalid_argument("unknown quantity '" + tag + "' (known: " + known + ")");
}

}  // namespace

const std::vector<std::string>& quantity_tags()
{
    static const std::vector<std::string> tags = {"F",        "z",         "w",          "X_of_w", "phi",
                                                  "phi_in_X", "xi",        "Y",          "u_over_phi",
                                                  "f_inverse", "ln_phi",   "entropy",    "phi_entropy",
                                                  "gamma_<n>"};
    return tags;
}

Quantity compute_quantity(const Statistics& stat, const std::string& tag)
{
    const auto dot = tag.find('.');
    if (dot == std::string::npos) {
        return base_quantity(stat, tag);
    }
    const auto part = tag.substr(dot + 1);
    const auto q = base_quantity(stat, tag.substr(0, dot));
    const auto* l = std::get_if<LogSeries>(&q);
    if (l == nullptr) {
        throw std::invalid_argument("quantity '" + tag.substr(0, dot) + "' has no ." + part + " part");
    }
    if (part == "plain") {
        return l->plain();
    }
    if (part == "log") {
        return l->logpart();
    }
    throw std::invalid_argument("unknown part '." + part + "' (use .plain or .log)");
}

std::vector<Rational> quantity_coeffs(const Quantity& q)
{
    if (const auto* s = std::get_if<TruncatedSeries>(&q)) {
        return {s->coeffs().begin(), s->coeffs().end()};
    }
    if (const auto* p = std::get_if<Polynomial>(&q)) {
        return p->coeffs();
    }
    throw std::invalid_argument("a LogSeries has two coefficient lists; select .plain or .log");
}

FixtureCheck check_fixture(const Fixture& fixture)
{
    FixtureCheck out;
    const int len = static_cast<int>(fixture.coeffs.size());
    out.order = std::max(kDefaultOrder, len + 2);
    try {
        const auto stat = get(fixture.entry, fixture.params).build(out.order);
        auto q = compute_quantity(stat, fixture.quantity);
        if (!fixture.multiplier.empty()) {
            const auto* s = std::get_if<TruncatedSeries>(&q);
            if (s == nullptr) {
                throw std::invalid_argument("multiplier needs a series quantity");
            }
            std::vector<Rational> m = fixture.multiplier;
            m.resize(static_cast<std::size_t>(s->order()) + 1);
            q = mul(*s, TruncatedSeries(std::move(m)));
        }
        auto c = quantity_coeffs(q);
        for (auto& v : c) {
            v *= fixture.scale;
        }
        const bool is_poly = std::holds_alternative<Polynomial>(q);
        if (!is_poly && static_cast<int>(c.size()) < len) {
            out.message = "computed series too short: " + std::to_string(c.size()) + " < " + std::to_string(len);
            return out;
        }
        if (is_poly && static_cast<int>(c.size()) != len) {
            out.message = "polynomial length " + std::to_string(c.size()) + " != " + std::to_string(len);
            c.resize(std::max<std::size_t>(c.size(), static_cast<std::size_t>(len)));
        }
        c.resize(std::max<std::size_t>(c.size(), static_cast<std::size_t>(len)));
        out.computed.assign(c.begin(), c.begin() + len);
        for (int k = 0; k < len; ++k) {
            if (k == 1 && fixture.compare == "mod_linear") {
                continue;
            }
            if (out.computed[static_cast<std::size_t>(k)] != fixture.coeffs[static_cast<std::size_t>(k)]) {
                out.first_mismatch = k;
                out.message = "coefficient " + std::to_string(k) + ": expected "
                              + fixture.coeffs[static_cast<std::size_t>(k)].to_string() + ", computed "
                              + out.computed[static_cast<std::size_t>(k)].to_string();
                return out;
            }
        }
        out.passed = out.message.empty();
    } catch (const std::exception& e) {
        out.message = e.what();
    }
    return out;
}

}  // namespace umbral
