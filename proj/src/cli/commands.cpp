#include "umbral/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "umbral/catalog.hpp"
#include "umbral/deformed_entropy.hpp"
#include "umbral/max_entropy.hpp"
#include "umbral/oeis.hpp"
#include "umbral/quantities.hpp"
#include "umbral/sequences.hpp"
#include "umbral/verify.hpp"

namespace umbral::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct Payload {
    Json json;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::string pretty;
    int exit_code = 0;
};

struct Echo {
    std::string command;
    Json parameters = Json::object();
};

std::string csv_text(const Payload& p)
{
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            os << (i ? "," : "") << cells[i];
        }
        os << '\n';
    };
    line(p.header);
    for (const auto& r : p.rows) {
        line(r);
    }
    return os.str();
}

Result render(const Echo& echo, const Payload& p, Format f, Clock::time_point start)
{
    Result r;
    r.exit_code = p.exit_code;
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    switch (f) {
    case Format::json: {
        const Json record = {
            {"command", echo.command}, {"parameters", echo.parameters}, {"payload", p.json}, {"seconds", seconds}};
        r.out = record.dump(2) + "\n";
        break;
    }
    case Format::csv:
        r.out = csv_text(p);
        break;
    case Format::pretty:
        r.out = p.pretty;
        if (!r.out.empty() && r.out.back() != '\n') {
            r.out += '\n';
        }
        break;
    }
    return r;
}

Result guarded(const Echo& echo, Format f, const std::function<Payload()>& body)
{
    const auto start = Clock::now();
    try {
        return render(echo, body(), f, start);
    } catch (const std::exception& e) {
        Result r;
        r.exit_code = kExitUsage;
        r.err = echo.command + ": " + e.what() + "\n";
        return r;
    }
}

Json params_json(const ParamMap& m)
{
    Json j = Json::object();
    for (const auto& [k, v] : m) {
        j[k] = v.to_string();
    }
    return j;
}

Echo echo_for(const std::string& command, const Common& c, const CatalogEntry* entry = nullptr)
{
    Echo e{command};
    if (!c.stat.empty()) {
        e.parameters["stat"] = c.stat;
    }
    if (entry != nullptr) {
        e.parameters["params"] = params_json(entry->params());
    }
    e.parameters["order"] = resolve_order(c.order);
    return e;
}

CatalogEntry entry_for(const Common& c)
{
    if (c.stat.empty()) {
        throw std::invalid_argument("--stat is required (see 'list')");
    }
    return get(c.stat, parse_params(c.params));
}

Payload series_payload(const TruncatedSeries& s)
{
    Payload p;
    p.json = to_json(s);
    p.header = {"index", "coeff"};
    for (int k = 0; k <= s.order(); ++k) {
        p.rows.push_back({std::to_string(k), s[k].to_string()});
    }
    p.pretty = to_string(s);
    return p;
}

Payload log_series_payload(const LogSeries& l)
{
    Payload p;
    p.json = to_json(l);
    p.header = {"index", "plain", "log"};
    for (int k = 0; k <= l.order(); ++k) {
        p.rows.push_back({std::to_string(k), l.plain()[k].to_string(), l.logpart()[k].to_string()});
    }
    p.pretty = to_string(l);
    return p;
}

Payload polynomial_payload(const Polynomial& poly)
{
    Payload p;
    p.json = to_json(poly);
    p.header = {"index", "coeff"};
    for (int k = 0; k <= poly.degree(); ++k) {
        p.rows.push_back({std::to_string(k), poly.coeff(k).to_string()});
    }
    p.pretty = to_string(poly);
    return p;
}

Payload quantity_payload(const Quantity& q)
{
    if (const auto* s = std::get_if<TruncatedSeries>(&q)) {
        return series_payload(*s);
    }
    if (const auto* l = std::get_if<LogSeries>(&q)) {
        return log_series_payload(*l);
    }
    return polynomial_payload(std::get<Polynomial>(q));
}

Payload statistics_payload(const Statistics& stat)
{
    Payload p;
    p.json = to_json(stat);
    p.header = {"index", "F", "w", "X_of_w", "z"};
    for (int k = 0; k <= stat.order(); ++k) {
        p.rows.push_back({std::to_string(k), stat.free_energy()[k].to_string(), stat.weight()[k].to_string(),
                          stat.inverse_weight()[k].to_string(), stat.partition_function()[k].to_string()});
    }
    std::ostringstream os;
    os << stat.name() << "\n  F(X) = " << stat.free_energy() << "\n  w(X) = " << stat.weight()
       << "\n  X(w) = " << to_string(stat.inverse_weight(), "w") << "\n  z(X) = " << stat.partition_function();
    p.pretty = os.str();
    return p;
}

std::string format_double(double v)
{
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

}  // namespace

Format parse_format(const std::string& text)
{
    if (text == "json") {
        return Format::json;
    }
    if (text == "csv") {
        return Format::csv;
    }
    if (text == "pretty") {
        return Format::pretty;
    }
    throw std::invalid_argument("unknown format '" + text + "' (json, csv, pretty)");
}

int resolve_order(const std::optional<int>& order)
{
    int n = kDefaultOrder;
    if (order) {
        n = *order;
    } else if (const char* env = std::getenv("UMBRAL_ORDER"); env != nullptr && *env != '\0') {
        try {
            std::size_t used = 0;
            n = std::stoi(env, &used);
            if (env[used] != '\0') {
                throw std::invalid_argument("trailing text");
            }
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("UMBRAL_ORDER is not an integer: '") + env + "'");
        }
    }
    if (n < 1 || n > 200) {
        throw std::invalid_argument("order must be between 1 and 200, got " + std::to_string(n));
    }
    return n;
}

Result expand(const Common& c, const std::string& quantity)
{
    Echo echo{"expand"};
    return guarded(echo, c.format, [&] {
        const auto entry = entry_for(c);
        echo = echo_for("expand", c, &entry);
        echo.parameters["quantity"] = quantity;
        const auto q = compute_quantity(entry.build(resolve_order(c.order)), quantity);
        return quantity_payload(q);
    });
}

Result entropy(const Common& c)
{
    Echo echo{"entropy"};
    return guarded(echo, c.format, [&] {
        const auto entry = entry_for(c);
        echo = echo_for("entropy", c, &entry);
        const auto h = phi_entropy(entry.build(resolve_order(c.order)), entry.registered_constant());
        auto p = log_series_payload(h.normalized);
        p.json["normalization"] = "H0(p) = F(X(p)) - p log X(p); the full entropy is H0 - c0 p";
        p.json["c0"] = h.constant ? Json(h.constant->to_string()) : Json("not evaluated");
        p.pretty += "\nc0 = " + (h.constant ? h.constant->to_string() : std::string("not evaluated"));
        return p;
    });
}

Result dual(const Common& c)
{
    Echo echo{"dual"};
    return guarded(echo, c.format, [&] {
        const auto entry = entry_for(c);
        echo = echo_for("dual", c, &entry);
        return statistics_payload(umbral::dual(entry.build(resolve_order(c.order))));
    });
}

Result compose(const Common& c, const std::string& other, const std::vector<std::string>& other_params, int m)
{
    Echo echo{"compose"};
    return guarded(echo, c.format, [&] {
        const auto a = entry_for(c);
        const auto b = get(other, parse_params(other_params));
        echo = echo_for("compose", c, &a);
        echo.parameters["with"] = other;
        echo.parameters["with_params"] = params_json(b.params());
        echo.parameters["m"] = m;
        if (m < 0) {
            throw std::invalid_argument("m must be non-negative");
        }
        const int n = resolve_order(c.order);
        return statistics_payload(group_compose_m(a.build(n), b.build(n), m));
    });
}

Result polyseq(const Common& c, const std::string& kind, int n, const std::vector<std::string>& g)
{
    Echo echo{"polyseq"};
    return guarded(echo, c.format, [&] {
        const auto entry = entry_for(c);
        echo = echo_for("polyseq", c, &entry);
        echo.parameters["kind"] = kind;
        echo.parameters["n"] = n;
        const int order = std::max(resolve_order(c.order), n);
        const DeltaSeries f(entry.free_energy(order));
        PolynomialSequence seq({Polynomial::constant(1)});
        if (kind == "conjugate") {
            seq = conjugate_sequence(f, n);
        } else if (kind == "associated") {
            seq = associated_sequence(f, n);
        } else if (kind == "sheffer") {
            if (g.empty()) {
                throw std::invalid_argument("sheffer needs --g coefficients g_0,g_1,...");
            }
            std::vector<Rational> gc;
            for (const auto& t : g) {
                gc.push_back(Rational::parse(t));
            }
            gc.resize(static_cast<std::size_t>(order) + 1);
            echo.parameters["g"] = g;
            seq = sheffer_sequence(InvertibleSeries(TruncatedSeries(std::move(gc))), f, n);
        } else {
            throw std::invalid_argument("unknown kind '" + kind + "' (conjugate, associated, sheffer)");
        }
        Payload p;
        p.json = Json::array();
        p.header = {"n", "k", "coeff"};
        std::ostringstream os;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            p.json.push_back(to_json(seq[i]));
            for (int k = 0; k <= seq[i].degree(); ++k) {
                p.rows.push_back({std::to_string(i), std::to_string(k), seq[i].coeff(k).to_string()});
            }
            os << "p_" << i << "(x) = " << seq[i] << '\n';
        }
        p.pretty = os.str();
        return p;
    });
}

Result spectral(const Common& c, const std::vector<std::string>& points)
{
    Echo echo{"spectral"};
    return guarded(echo, c.format, [&] {
        const auto entry = entry_for(c);
        echo = echo_for("spectral", c, &entry);
        echo.parameters["points"] = points;
        std::vector<Rational> xs;
        for (const auto& t : points) {
            xs.push_back(Rational::parse(t));
        }
        const auto stat = entry.build(resolve_order(c.order));
        Payload p;
        p.json = {{"z", to_json(stat.partition_function())}, {"Y", to_json(stat.free_energy())}, {"samples", Json::array()}};
        p.header = {"X", "z", "Y", "z_double", "Y_double"};
        std::ostringstream os;
        for (const auto& s : spectral_samples(stat, xs)) {
            p.json["samples"].push_back({{"X", s.x.to_string()}, {"z", s.z.to_string()}, {"Y", s.y.to_string()}});
            p.rows.push_back({s.x.to_string(), s.z.to_string(), s.y.to_string(), format_double(s.z.to_double()),
                              format_double(s.y.to_double())});
            os << "X = " << s.x << "  z = " << s.z << "  Y = " << s.y << '\n';
        }
        p.pretty = os.str();
        return p;
    });
}

Result maxent(const Common& c, const std::vector<double>& energies, double target_energy, double a0, double b0)
{
    Echo echo{"maxent"};
    return guarded(echo, c.format, [&] {
        const auto entry = entry_for(c);
        echo = echo_for("maxent", c, &entry);
        echo.parameters["energies"] = energies;
        echo.parameters["target_energy"] = target_energy;
        if (energies.empty()) {
            throw std::invalid_argument("--energies must not be empty");
        }
        NewtonOptions opts;
        opts.a0 = a0;
        opts.b0 = b0;
        const auto r = solve_max_entropy(entry.build(resolve_order(c.order)), energies, target_energy, opts);
        Payload p;
        p.json = {{"a", r.a},
                  {"b", r.b},
                  {"converged", r.converged},
                  {"iterations", r.iterations},
                  {"p", r.evaluation.p},
                  {"normalization_residual", r.evaluation.normalization_residual},
                  {"energy_residual", r.evaluation.energy_residual}};
        p.header = {"i", "E", "p"};
        std::ostringstream os;
        os << "a = " << format_double(r.a) << "  b = " << format_double(r.b) << "  converged = " << std::boolalpha
           << r.converged << "  iterations = " << r.iterations << '\n';
        for (std::size_t i = 0; i < energies.size(); ++i) {
            p.rows.push_back({std::to_string(i), format_double(energies[i]), format_double(r.evaluation.p[i])});
            os << "E = " << energies[i] << "  p = " << format_double(r.evaluation.p[i]) << '\n';
        }
        os << "residuals: " << r.evaluation.normalization_residual << ", " << r.evaluation.energy_residual;
        p.pretty = os.str();
        p.exit_code = r.converged ? 0 : kExitFailedCheck;
        return p;
    });
}

Result verify(const Common& c, const std::string& suite)
{
    Echo echo{"verify"};
    return guarded(echo, c.format, [&] {
        VerifyOptions opts;
        opts.order = resolve_order(c.order);
        opts.seed = c.seed;
        echo.parameters = {{"suite", suite}, {"order", opts.order}, {"seed", opts.seed}};
        const auto report = run_verify(suite, opts);
        Payload p;
        p.json = report.to_json();
        p.header = {"suite", "property", "passed", "cases", "seconds"};
        std::ostringstream os;
        for (const auto& r : report.results) {
            p.rows.push_back({r.suite, r.name, r.passed ? "true" : "false", std::to_string(r.cases),
                              format_double(r.seconds)});
            os << (r.passed ? "PASS " : "FAIL ") << r.suite << '/' << r.name << " (" << r.cases << " cases)";
            if (!r.passed) {
                os << ": " << r.detail << "\n  counterexample: " << r.counterexample.dump();
            }
            os << '\n';
        }
        os << (report.passed() ? "all properties passed" : "some properties FAILED") << " in " << report.seconds << " s";
        p.pretty = os.str();
        p.exit_code = report.passed() ? 0 : kExitFailedCheck;
        return p;
    });
}

Result oeis_check(const Common& c, const OeisRequest& req)
{
    Echo echo{"oeis-check"};
    std::string warning;
    auto r = guarded(echo, c.format, [&] {
        const auto entry = entry_for(c);
        echo = echo_for("oeis-check", c, &entry);
        echo.parameters["quantity"] = req.quantity;
        echo.parameters["id"] = req.id;
        echo.parameters["mode"] = req.fetch ? "fetch" : "offline";
        if (!oeis::valid_id(req.id)) {
            throw std::invalid_argument("malformed sequence id '" + req.id + "'");
        }
        const auto stat = entry.build(resolve_order(c.order));
        std::vector<Rational> coeffs;
        if (req.quantity == "gamma_triangle") {
            const auto seq = conjugate_sequence(DeltaSeries(stat.free_energy()), std::min(8, stat.order()));
            for (std::size_t n = 1; n < seq.size(); ++n) {
                for (int k = 1; k <= static_cast<int>(n); ++k) {
                    coeffs.push_back(seq[n].coeff(k));
                }
            }
        } else {
            coeffs = quantity_coeffs(compute_quantity(stat, req.quantity));
        }
        auto t = oeis::documented_transform(entry.name(), req.quantity, req.id).value_or(oeis::Transform{});
        if (req.start) {
            t.start = *req.start;
        }
        if (req.stride) {
            t.stride = *req.stride;
        }
        if (req.power_base) {
            t.power_base = Rational::parse(*req.power_base);
        }
        if (req.sequence_start) {
            t.sequence_start = *req.sequence_start;
        }
        if (req.abs) {
            t.abs = *req.abs;
        }
        std::optional<oeis::Sequence> seq;
        std::string mode = "offline";
        if (req.fetch) {
            try {
                seq = oeis::fetch(req.id);
                mode = "fetch";
            } catch (const std::invalid_argument&) {
                throw;
            } catch (const std::exception& e) {
                warning = std::string("warning: fetch failed (") + e.what() + "); using embedded data\n";
            }
        }
        if (!seq) {
            seq = oeis::embedded(req.id);
        }
        if (!seq) {
            throw std::invalid_argument("no embedded data for " + req.id + " (embedded: "
                                        + [] {
                                              std::string s;
                                              for (const auto& id : oeis::embedded_ids()) {
                                                  s += (s.empty() ? "" : ", ") + id;
                                              }
                                              return s;
                                          }()
                                        + "); try --fetch");
        }
        const auto m = oeis::match(coeffs, *seq, t);
        Payload p;
        p.json = {{"id", req.id},
                  {"source", mode == "fetch" ? "fetched" : seq->source},
                  {"transform", t.description},
                  {"prefix", m.prefix},
                  {"min_prefix", req.min_prefix},
                  {"passed", m.prefix >= req.min_prefix},
                  {"computed", to_json(m.computed)},
                  {"reference", to_json(m.reference)}};
        p.header = {"index", "computed", "reference"};
        const auto len = std::max(m.computed.size(), m.reference.size());
        for (std::size_t i = 0; i < len; ++i) {
            p.rows.push_back({std::to_string(i), i < m.computed.size() ? m.computed[i].to_string() : "",
                              i < m.reference.size() ? m.reference[i].to_string() : ""});
        }
        std::ostringstream os;
        os << req.id << " (" << p.json["source"].get<std::string>() << ", " << t.description
           << "): matching prefix " << m.prefix << (m.prefix >= req.min_prefix ? " >= " : " < ") << req.min_prefix;
        p.pretty = os.str();
        p.exit_code = m.prefix >= req.min_prefix ? 0 : kExitFailedCheck;
        return p;
    });
    r.err = warning + r.err;
    return r;
}

Result list(const Common& c)
{
    Echo echo{"list"};
    return guarded(echo, c.format, [&] {
        Payload p;
        p.json = {{"entries", Json::array()}, {"quantities", quantity_tags()}, {"suites", verify_suites()}};
        p.header = {"entry", "params", "formula"};
        std::ostringstream os;
        for (const auto& name : list_entries()) {
            const auto e = get(name);
            Json specs = Json::array();
            std::string params;
            for (const auto& s : e.param_specs()) {
                specs.push_back({{"name", s.name}, {"default", s.default_value.to_string()}, {"constraint", s.constraint}});
                params += (params.empty() ? "" : " ") + s.name + "=" + s.default_value.to_string();
            }
            p.json["entries"].push_back({{"name", name}, {"formula", e.formula()}, {"params", specs}});
            p.rows.push_back({name, params, "\"" + e.formula() + "\""});
            os << std::left << std::setw(22) << name << ' ' << e.formula();
            if (!params.empty()) {
                os << "  [" << params << ']';
            }
            os << '\n';
        }
        p.pretty = os.str();
        return p;
    });
}

}  // namespace umbral::cli
