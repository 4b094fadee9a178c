#include "umbral/catalog.hpp"

#include <algorithm>
#include <stdexcept>
#include <string_view>

#include <json.hpp>

namespace umbral {

namespace detail {
extern const std::string_view kFixturesJson;
}

namespace {

using json = nlohmann::json;

const Rational& param(const ParamMap& p, const std::string& key)
{
    return p.at(key);
}

void require_nonzero(const ParamMap& p, const std::string& key)
{
    if (param(p, key).is_zero()) {
        throw std::invalid_argument(key + " must be nonzero");
    }
}

// log(1 + c X)
TruncatedSeries log_one_plus(const Rational& c, int order)
{
    return TruncatedSeries::generate(order, [&](int k) {
        if (k == 0) {
            return Rational(0);
        }
        Rational v = pow(c, k) / Rational(k);
        return (k % 2 == 1) ? v : -v;
    });
}

TruncatedSeries gould_free_energy(const Rational& a, const Rational& b, int order)
{
    return TruncatedSeries::generate(order, [&](int k) {
        if (k == 0) {
            return Rational(0);
        }
        Rational prod(1);
        for (int j = 1; j < k; ++j) {
            prod *= a * Rational(k) + Rational(j) * b;
        }
        prod /= factorial(k);
        return (k % 2 == 1) ? prod : -prod;
    });
}

TruncatedSeries abel_free_energy(const Rational& a, int order)
{
    return TruncatedSeries::generate(order, [&](int n) {
        if (n == 0) {
            return Rational(0);
        }
        return pow(-a * Rational(n), n - 1) / factorial(n);
    });
}

TruncatedSeries poly_series(std::initializer_list<Rational> c, int order)
{
    std::vector<Rational> v(c);
    v.resize(static_cast<std::size_t>(order) + 1);
    return TruncatedSeries(std::move(v));
}

std::vector<CatalogEntry> make_registry()
{
    std::vector<CatalogEntry> r;
    r.emplace_back(
        "boltzmann-gibbs", "F = X", std::vector<ParamSpec>{},
        [](const ParamMap&, int n) { return TruncatedSeries::identity(n); }, nullptr, Rational(1));
    r.emplace_back(
        "fermi-dirac", "F = log(1+X)", std::vector<ParamSpec>{},
        [](const ParamMap&, int n) { return log_one_plus(1, n); }, nullptr, Rational(0));
    r.emplace_back("bose-einstein", "F = -log(1-X)", std::vector<ParamSpec>{},
                   [](const ParamMap&, int n) { return negate(log_one_plus(-1, n)); });
    r.emplace_back("acharya-swamy", "F = (1/eps) log(1+eps X); eps = 0 gives X",
                   std::vector<ParamSpec>{{"eps", Rational(1, 2), "any rational"}},
                   [](const ParamMap& p, int n) {
                       const auto& e = param(p, "eps");
                       return TruncatedSeries::generate(n, [&](int k) {
                           if (k == 0) {
                               return Rational(0);
                           }
                           Rational v = pow(e, k - 1) / Rational(k);
                           return (k % 2 == 1) ? v : -v;
                       });
                   });
    r.emplace_back(
        "gentile", "z = 1 + X + ... + X^p", std::vector<ParamSpec>{{"p", Rational(2), "integer >= 1"}},
        [](const ParamMap& p, int n) {
            const long pp = param(p, "p").numerator().get_si();
            std::vector<Rational> z(static_cast<std::size_t>(n) + 1);
            for (long k = 0; k <= std::min<long>(pp, n); ++k) {
                z[static_cast<std::size_t>(k)] = Rational(1);
            }
            return log_series(TruncatedSeries(std::move(z)));
        },
        [](const ParamMap& p) {
            const auto& v = param(p, "p");
            if (!v.is_integer() || v < Rational(1) || v > Rational(1000000)) {
                throw std::invalid_argument("p must be an integer >= 1");
            }
        });
    r.emplace_back("lah", "F = X/(1-X)", std::vector<ParamSpec>{}, [](const ParamMap&, int n) {
        return TruncatedSeries::generate(n, [](int k) { return Rational(k == 0 ? 0 : 1); });
    });
    r.emplace_back("exponential", "F = exp(X) - 1", std::vector<ParamSpec>{}, [](const ParamMap&, int n) {
        return TruncatedSeries::generate(n, [](int k) { return k == 0 ? Rational(0) : Rational(1) / factorial(k); });
    });
    r.emplace_back("abel", "F = sum (-a n)^(n-1) X^n / n!",
                   std::vector<ParamSpec>{{"a", Rational(1), "any rational"}},
                   [](const ParamMap& p, int n) { return abel_free_energy(param(p, "a"), n); });
    r.emplace_back(
        "gould", "F = sum (-1)^(k-1) prod_{j<k} (a k + j b) X^k / k!",
        std::vector<ParamSpec>{{"a", Rational(2), "any rational"}, {"b", Rational(1), "nonzero"}},
        [](const ParamMap& p, int n) { return gould_free_energy(param(p, "a"), param(p, "b"), n); },
        [](const ParamMap& p) { require_nonzero(p, "b"); });
    r.emplace_back(
        "gould-acharya-swamy", "gould at a = 0, b = eps",
        std::vector<ParamSpec>{{"eps", Rational(1, 2), "nonzero"}},
        [](const ParamMap& p, int n) { return gould_free_energy(0, param(p, "eps"), n); },
        [](const ParamMap& p) { require_nonzero(p, "eps"); });
    r.emplace_back("gould-lambert", "gould as b -> 0: F = sum (-a n)^(n-1) X^n / n!",
                   std::vector<ParamSpec>{{"a", Rational(1), "any rational"}},
                   [](const ParamMap& p, int n) { return abel_free_energy(param(p, "a"), n); });
    r.emplace_back("gould-framed-vertex", "gould at a = g - 1, b = 1",
                   std::vector<ParamSpec>{{"g", Rational(2), "any rational"}},
                   [](const ParamMap& p, int n) { return gould_free_energy(param(p, "g") - 1, 1, n); });
    r.emplace_back(
        "gould-catalan", "gould at b = -2a", std::vector<ParamSpec>{{"a", Rational(1), "nonzero"}},
        [](const ParamMap& p, int n) {
            const auto& a = param(p, "a");
            return gould_free_energy(a, Rational(-2) * a, n);
        },
        [](const ParamMap& p) { require_nonzero(p, "a"); });
    r.emplace_back(
        "mittag-leffler", "F = log((1+X/c)/(1-X/c)); only c = 2 is normalized",
        std::vector<ParamSpec>{{"c", Rational(2), "nonzero; build needs c = 2"}},
        [](const ParamMap& p, int n) {
            const Rational inv = Rational(1) / param(p, "c");
            return log_one_plus(inv, n) - log_one_plus(-inv, n);
        },
        [](const ParamMap& p) { require_nonzero(p, "c"); });
    r.emplace_back("bessel", "F = 1 - sqrt(1 - 2X)", std::vector<ParamSpec>{}, [](const ParamMap&, int n) {
        return TruncatedSeries::one(n) - pow_rational(poly_series({1, -2}, n), Rational(1, 2));
    });
    r.emplace_back("mott", "F = (1 - sqrt(1 - 4X^2)) / (2X)", std::vector<ParamSpec>{},
                   [](const ParamMap&, int n) {
                       const auto root = pow_rational(poly_series({1, 0, -4}, n + 1), Rational(1, 2));
                       return divide_by_x(scale(TruncatedSeries::one(n + 1) - root, Rational(1, 2)));
                   });
    r.emplace_back("dilogarithm", "F = sum X^n / n^2", std::vector<ParamSpec>{}, [](const ParamMap&, int n) {
        return TruncatedSeries::generate(n, [](int k) { return k == 0 ? Rational(0) : Rational(1, long(k) * k); });
    });
    r.emplace_back(
        "averaged-as-1", "F = (1/(2 eps)) [log(1+eps X) - log(1-eps X)]",
        std::vector<ParamSpec>{{"eps", Rational(1, 3), "nonzero"}},
        [](const ParamMap& p, int n) {
            const auto& e = param(p, "eps");
            return scale(log_one_plus(e, n) - log_one_plus(-e, n), Rational(1) / (Rational(2) * e));
        },
        [](const ParamMap& p) { require_nonzero(p, "eps"); });
    r.emplace_back(
        "averaged-as-2", "F = (1/2) [(1/eps) log(1+eps X) + eps log(1+X/eps)]",
        std::vector<ParamSpec>{{"eps", Rational(2), "nonzero"}},
        [](const ParamMap& p, int n) {
            const auto& e = param(p, "eps");
            const Rational inv = Rational(1) / e;
            return scale(scale(log_one_plus(e, n), inv) + scale(log_one_plus(inv, n), e), Rational(1, 2));
        },
        [](const ParamMap& p) { require_nonzero(p, "eps"); });
    r.emplace_back(
        "averaged-as-3", "F = (1/2) [log(1+X/(s eps)) + log(1+eps X/s)], s = (eps + 1/eps)/2",
        std::vector<ParamSpec>{{"eps", Rational(2), "nonzero"}},
        [](const ParamMap& p, int n) {
            const auto& e = param(p, "eps");
            const Rational s = (e + Rational(1) / e) / Rational(2);
            return scale(log_one_plus(Rational(1) / (s * e), n) + log_one_plus(e / s, n), Rational(1, 2));
        },
        [](const ParamMap& p) { require_nonzero(p, "eps"); });
    std::vector<ParamSpec> bell;
    const Rational bell_defaults[] = {Rational(1, 2), Rational(-1), Rational(3, 2), 0, 0, 0, 0};
    for (int j = 2; j <= 8; ++j) {
        bell.push_back({"t" + std::to_string(j), bell_defaults[j - 2], "any rational"});
    }
    r.emplace_back("bell-universal", "F = X + sum_{j=2..8} t_j X^j / j!", bell, [](const ParamMap& p, int n) {
        return TruncatedSeries::generate(n, [&](int k) {
            if (k == 1) {
                return Rational(1);
            }
            if (k < 2 || k > 8) {
                return Rational(0);
            }
            return param(p, "t" + std::to_string(k)) / factorial(k);
        });
    });
    return r;
}

const std::vector<CatalogEntry>& registry()
{
    static const std::vector<CatalogEntry> entries = make_registry();
    return entries;
}

std::vector<Rational> parse_rationals(const json& arr)
{
    std::vector<Rational> out;
    for (const auto& v : arr) {
        out.push_back(Rational::parse(v.get<std::string>()));
    }
    return out;
}

}  // namespace

CatalogEntry::CatalogEntry(std::string name, std::string formula, std::vector<ParamSpec> specs, Builder builder,
                           Validator validator, std::optional<Rational> constant)
    : name_(std::move(name)),
      formula_(std::move(formula)),
      specs_(std::move(specs)),
      builder_(std::move(builder)),
      validator_(std::move(validator)),
      constant_(std::move(constant))
{
    for (const auto& s : specs_) {
        params_[s.name] = s.default_value;
    }
}

CatalogEntry CatalogEntry::with_params(const ParamMap& overrides) const
{
    CatalogEntry copy = *this;
    for (const auto& [key, value] : overrides) {
        if (!copy.params_.contains(key)) {
            std::string known;
            for (const auto& s : specs_) {
                known += (known.empty() ? "" : ", ") + s.name;
            }
            throw std::invalid_argument("entry '" + name_ + "' has no parameter '" + key + "'"
                                        + (known.empty() ? " (it takes none)" : " (known: " + known + ")"));
        }
        copy.params_[key] = value;
    }
    if (copy.validator_) {
        try {
            copy.validator_(copy.params_);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(name_ + ": " + e.what());
        }
    }
    return copy;
}

TruncatedSeries CatalogEntry::free_energy(int order) const
{
    if (order < 1) {
        throw std::invalid_argument("catalog order must be at least 1");
    }
    return builder_(params_, order);
}

Statistics CatalogEntry::build(int order) const
{
    return Statistics::from_free_energy(name_, free_energy(order));
}

std::vector<Fixture> CatalogEntry::fixtures() const
{
    std::vector<Fixture> out;
    for (const auto& f : all_fixtures()) {
        if (f.entry != name_) {
            continue;
        }
        const bool match = std::all_of(f.params.begin(), f.params.end(), [&](const auto& kv) {
            auto it = params_.find(kv.first);
            return it != params_.end() && it->second == kv.second;
        });
        if (match) {
            out.push_back(f);
        }
    }
    return out;
}

CatalogEntry get(const std::string& name, const ParamMap& overrides)
{
    for (const auto& e : registry()) {
        if (e.name() == name) {
            return e.with_params(overrides);
        }
    }
    std::string known;
    for (const auto& e : registry()) {
        known += (known.empty() ? "" : ", ") + e.name();
    }
    throw std::invalid_argument("unknown catalog entry '" + name + "' (known: " + known + ")");
}

std::vector<std::string> list_entries()
{
    std::vector<std::string> names;
    for (const auto& e : registry()) {
        names.push_back(e.name());
    }
    return names;
}

bool has_entry(const std::string& name)
{
    const auto names = list_entries();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<Fixture> fixtures(const std::string& name)
{
    std::vector<Fixture> out;
    for (const auto& f : all_fixtures()) {
        if (f.entry == name) {
            out.push_back(f);
        }
    }
    return out;
}

const std::vector<Fixture>& all_fixtures()
{
    static const std::vector<Fixture> table = parse_fixtures(std::string(detail::kFixturesJson));
    return table;
}

std::vector<Fixture> parse_fixtures(const std::string& json_text)
{
    const auto doc = json::parse(json_text);
    if (doc.value("version", 0) != 1) {
        throw std::invalid_argument("unsupported fixture file version");
    }
    std::vector<Fixture> out;
    for (const auto& j : doc.at("fixtures")) {
        Fixture f;
        f.entry = j.at("entry").get<std::string>();
        f.quantity = j.at("quantity").get<std::string>();
        f.coeffs = parse_rationals(j.at("coeffs"));
        f.provenance = j.at("provenance").get<std::string>();
        f.oeis = j.value("oeis", "");
        f.compare = j.value("compare", "exact");
        f.note = j.value("note", "");
        if (j.contains("params")) {
            for (const auto& [k, v] : j.at("params").items()) {
                f.params[k] = Rational::parse(v.get<std::string>());
            }
        }
        if (j.contains("scale")) {
            f.scale = Rational::parse(j.at("scale").get<std::string>());
        }
        if (j.contains("multiplier")) {
            f.multiplier = parse_rationals(j.at("multiplier"));
        }
        out.push_back(std::move(f));
    }
    return out;
}

ParamMap parse_params(const std::vector<std::string>& assignments)
{
    ParamMap out;
    for (const auto& a : assignments) {
        const auto eq = a.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw std::invalid_argument("parameter '" + a + "' is not of the form name=value");
        }
        out[a.substr(0, eq)] = Rational::parse(a.substr(eq + 1));
    }
    return out;
}

}  // namespace umbral
