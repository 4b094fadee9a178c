#pragma once

// Named, parameterized statistics with closed-form free energies and the
// frozen expansion fixtures that go with them.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "umbral/rational.hpp"
#include "umbral/series.hpp"
#include "umbral/statistics.hpp"

namespace umbral {

using ParamMap = std::map<std::string, Rational>;

/// One frozen coefficient list. The computed quantity, multiplied by the
/// optional polynomial `multiplier` and then by `scale`, must reproduce
/// `coeffs` from index 0 (index 1 is skipped when compare == "mod_linear").
struct Fixture {
    std::string entry;
    ParamMap params;
    std::string quantity;
    std::vector<Rational> coeffs;
    std::string provenance;  // "quoted" or "derived"
    std::string oeis;
    Rational scale{1};
    std::vector<Rational> multiplier;
    std::string compare{"exact"};
    std::string note;
};

struct ParamSpec {
    std::string name;
    Rational default_value;
    std::string constraint;
};

class CatalogEntry {
public:
    using Builder = std::function<TruncatedSeries(const ParamMap&, int)>;
    using Validator = std::function<void(const ParamMap&)>;

    CatalogEntry(std::string name, std::string formula, std::vector<ParamSpec> specs, Builder builder,
                 Validator validator = {}, std::optional<Rational> constant = std::nullopt);

    const std::string& name() const { return name_; }
    const std::string& formula() const { return formula_; }
    const std::vector<ParamSpec>& param_specs() const { return specs_; }
    const ParamMap& params() const { return params_; }

    /// Copy with some parameters replaced; unknown names and values outside
    /// the documented range throw std::invalid_argument.
    CatalogEntry with_params(const ParamMap& overrides) const;

    TruncatedSeries free_energy(int order = kDefaultOrder) const;
    Statistics build(int order = kDefaultOrder) const;

    /// c0 = F(X(1)) - log X(1) when it is an exact rational.
    const std::optional<Rational>& registered_constant() const { return constant_; }

    /// Fixtures recorded for this entry at exactly these parameters.
    std::vector<Fixture> fixtures() const;

private:
    std::string name_;
    std::string formula_;
    std::vector<ParamSpec> specs_;
    ParamMap params_;
    Builder builder_;
    Validator validator_;
    std::optional<Rational> constant_;
};

CatalogEntry get(const std::string& name, const ParamMap& overrides = {});
std::vector<std::string> list_entries();
bool has_entry(const std::string& name);

/// All fixtures for an entry name, any parameters.
std::vector<Fixture> fixtures(const std::string& name);
const std::vector<Fixture>& all_fixtures();

/// Parses the fixture file format ({"version": 1, "fixtures": [...]}).
std::vector<Fixture> parse_fixtures(const std::string& json_text);

/// "k=v" pairs into a map; values are exact rationals.
ParamMap parse_params(const std::vector<std::string>& assignments);

}  // namespace umbral
