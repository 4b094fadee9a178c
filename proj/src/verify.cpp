#include "umbral/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <optional>
#include <stdexcept>

#include "umbral/catalog.hpp"
#include "umbral/deformed_entropy.hpp"
#include "umbral/quantities.hpp"
#include "umbral/random.hpp"
#include "umbral/sequences.hpp"

namespace umbral {

namespace {

struct Outcome {
    int cases = 0;
    std::optional<Json> counterexample;
    std::string detail;

    bool fail(Json ce, std::string why)
    {
        counterexample = std::move(ce);
        detail = std::move(why);
        return false;
    }
};

using Body = std::function<void(Outcome&, Generator&, int order)>;

struct Property {
    const char* suite;
    const char* name;
    Body body;
};

std::vector<CatalogEntry> catalog_entries()
{
    std::vector<CatalogEntry> out;
    for (const auto& name : list_entries()) {
        out.push_back(get(name));
    }
    return out;
}

Json entry_json(const CatalogEntry& e)
{
    Json params = Json::object();
    for (const auto& [k, v] : e.params()) {
        params[k] = v.to_string();
    }
    return {{"entry", e.name()}, {"params", params}};
}

Polynomial random_polynomial(Generator& g, int degree)
{
    std::vector<Rational> c;
    for (int k = 0; k <= degree; ++k) {
        c.push_back(g.rational(5, 3));
    }
    c.back() = g.nonzero_rational(5, 3);
    return Polynomial(std::move(c));
}

TruncatedSeries random_unit(Generator& g, int order)
{
    return TruncatedSeries::generate(order, [&](int k) { return k == 0 ? Rational(1) : g.rational(5, 3); });
}

// ---- inversion -----------------------------------------------------------

void lagrange_roundtrip(Outcome& o, Generator& g, int order)
{
    const int n = std::min(order, 12);
    for (int i = 0; i < 50; ++i, ++o.cases) {
        const auto s = g.delta_series(n);
        const auto t = lagrange_invert(s);
        const auto x = TruncatedSeries::identity(n);
        if (compose(s, t) != x || compose(t, s) != x) {
            o.fail({{"s", to_json(s)}}, "compose(s, invert(s)) != X");
            return;
        }
    }
    const auto cat = lagrange_invert(TruncatedSeries({0, 1, -1, 0, 0, 0, 0, 0, 0}));
    const std::vector<Rational> catalan = {0, 1, 1, 2, 5, 14, 42, 132, 429};
    ++o.cases;
    if (std::vector<Rational>(cat.coeffs().begin(), cat.coeffs().end()) != catalan) {
        o.fail({{"inverse", to_json(cat)}}, "invert(X - X^2) is not the Catalan series");
    }
}

void exp_log_roundtrip(Outcome& o, Generator& g, int order)
{
    for (int i = 0; i < 50; ++i, ++o.cases) {
        auto s = g.series(order, 5, 3);
        const auto zero_const = sub(s, TruncatedSeries::constant(s[0], order));
        if (log_series(exp_series(zero_const)) != zero_const) {
            o.fail({{"s", to_json(zero_const)}}, "log(exp(s)) != s");
            return;
        }
        const auto unit = random_unit(g, order);
        if (exp_series(log_series(unit)) != unit) {
            o.fail({{"s", to_json(unit)}}, "exp(log(s)) != s");
            return;
        }
    }
}

void ring_axioms(Outcome& o, Generator& g, int order)
{
    const int n = std::min(order, 12);
    for (int i = 0; i < 50; ++i, ++o.cases) {
        const auto a = g.series(n);
        const auto b = g.series(n);
        const auto c = g.series(n);
        if (mul(mul(a, b), c) != mul(a, mul(b, c)) || mul(a, add(b, c)) != add(mul(a, b), mul(a, c))
            || mul(a, b) != mul(b, a)) {
            o.fail({{"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)}}, "ring axiom failed");
            return;
        }
    }
}

void leibniz(Outcome& o, Generator& g, int order)
{
    const int n = std::min(order, 10);
    for (int i = 0; i < 50; ++i, ++o.cases) {
        const auto a = g.series(n);
        const auto b = g.series(n);
        if (derivative(mul(a, b)) != add(mul(derivative(a), b.truncate(n - 1)), mul(a.truncate(n - 1), derivative(b)))) {
            o.fail({{"a", to_json(a)}, {"b", to_json(b)}}, "(ab)' != a'b + ab'");
            return;
        }
    }
}

void rational_powers(Outcome& o, Generator& g, int order)
{
    const int n = std::min(order, 10);
    for (int i = 0; i < 30; ++i, ++o.cases) {
        const auto s = random_unit(g, n);
        const long p = g.integer(-3, 3);
        const long q = g.integer(1, 4);
        const auto lhs = pow_int(pow_rational(s, Rational(p, q)), static_cast<int>(q));
        const auto rhs = p >= 0 ? pow_int(s, static_cast<int>(p)) : pow_int(reciprocal(s), static_cast<int>(-p));
        if (lhs != rhs) {
            o.fail({{"s", to_json(s)}, {"p", p}, {"q", q}}, "(s^(p/q))^q != s^p");
            return;
        }
    }
}

// ---- binomial ------------------------------------------------------------

void binomial_identity(Outcome& o, Generator& g, int order)
{
    for (const auto& e : catalog_entries()) {
        const auto seq = conjugate_sequence(DeltaSeries(e.free_energy(order)), 8);
        for (int n = 0; n <= 8; ++n) {
            for (int i = 0; i < 5; ++i, ++o.cases) {
                const auto a = g.rational(5, 4);
                const auto b = g.rational(5, 4);
                if (!binomial_identity_holds(seq, n, a, b)) {
                    auto ce = entry_json(e);
                    ce["n"] = n;
                    ce["a"] = a.to_string();
                    ce["b"] = b.to_string();
                    o.fail(ce, "p_n(a+b) != sum C(n,k) p_k(a) p_{n-k}(b)");
                    return;
                }
            }
        }
    }
}

void annihilation(Outcome& o, Generator&, int order)
{
    for (const auto& e : catalog_entries()) {
        const auto big_f = e.free_energy(order);
        const auto f = lagrange_invert(big_f);
        const auto seq = conjugate_sequence(DeltaSeries(big_f), 8);
        for (int n = 1; n <= 8; ++n, ++o.cases) {
            if (apply_operator(f, seq[static_cast<std::size_t>(n)]) != Rational(n) * seq[static_cast<std::size_t>(n - 1)]) {
                auto ce = entry_json(e);
                ce["n"] = n;
                o.fail(ce, "f(D) p_n != n p_{n-1}");
                return;
            }
        }
    }
}

void commutation(Outcome& o, Generator& g, int order)
{
    for (const auto& e : catalog_entries()) {
        const DeltaSeries f(lagrange_invert(e.free_energy(order)));
        for (int i = 0; i < 3; ++i, ++o.cases) {
            const auto p = random_polynomial(g, static_cast<int>(g.integer(0, std::min(8, order - 2))));
            if (commutator_action(f, p) != p) {
                auto ce = entry_json(e);
                ce["p"] = to_json(p);
                o.fail(ce, "[f(D), theta] p != p");
                return;
            }
        }
    }
}

void expansion_theorem(Outcome& o, Generator&, int order)
{
    const auto entries = catalog_entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const DeltaSeries f(lagrange_invert(entries[i].free_energy(order)));
        const auto h = entries[(i + 1) % entries.size()].build(order).weight();
        for (int n = 0; n <= 6; ++n, ++o.cases) {
            const auto lhs = apply_operator(h, Polynomial::monomial(1, n));
            if (lhs != expansion_theorem_rhs(h, f, n)) {
                auto ce = entry_json(entries[i]);
                ce["h"] = to_json(h);
                ce["n"] = n;
                o.fail(ce, "h(D) x^n differs from the expansion-theorem sum");
                return;
            }
        }
    }
}

void umbral_shift(Outcome& o, Generator&, int order)
{
    for (const auto& e : catalog_entries()) {
        const DeltaSeries f(lagrange_invert(e.free_energy(order)));
        const auto seq = associated_sequence(f, 8);
        for (int n = 1; n <= 8; ++n, ++o.cases) {
            if (umbral_shift_next(f, seq[static_cast<std::size_t>(n - 1)]) != seq[static_cast<std::size_t>(n)]) {
                auto ce = entry_json(e);
                ce["n"] = n;
                o.fail(ce, "umbral shift of p_{n-1} != p_n");
                return;
            }
        }
    }
}

void sheffer_properties(Outcome& o, Generator& g, int order)
{
    const auto entries = catalog_entries();
    for (const auto& e : entries) {
        const DeltaSeries f(lagrange_invert(e.free_energy(order)));
        const InvertibleSeries gs(random_unit(g, order));
        const auto seq = sheffer_sequence(gs, f, 8);
        for (int n = 1; n <= 8; ++n, ++o.cases) {
            const auto& prev = seq[static_cast<std::size_t>(n - 1)];
            if (apply_operator(f.series(), seq[static_cast<std::size_t>(n)]) != Rational(n) * prev
                || sheffer_shift_next(gs, f, prev) != seq[static_cast<std::size_t>(n)]) {
                auto ce = entry_json(e);
                ce["g"] = to_json(gs.series());
                ce["n"] = n;
                o.fail(ce, "Sheffer annihilation or shift failed");
                return;
            }
        }
    }
    const int n = std::min(order, 10);
    for (int i = 0; i < 20; ++i, ++o.cases) {
        const ShefferPair a{InvertibleSeries(random_unit(g, n)), DeltaSeries(g.delta_series(n))};
        const ShefferPair b{InvertibleSeries(random_unit(g, n)), DeltaSeries(g.delta_series(n))};
        const ShefferPair c{InvertibleSeries(random_unit(g, n)), DeltaSeries(g.delta_series(n))};
        const auto id = ShefferPair::identity(n);
        if (!agree(sheffer_compose(sheffer_compose(a, b), c), sheffer_compose(a, sheffer_compose(b, c)))
            || !agree(sheffer_compose(a, id), a) || !agree(sheffer_compose(a, sheffer_inverse(a)), id)) {
            o.fail({{"g", to_json(a.g.series())}, {"f", to_json(a.f.series())}}, "Sheffer group law failed");
            return;
        }
    }
}

// ---- occupation ----------------------------------------------------------

void occupation_recursion(Outcome& o, Generator&, int order)
{
    for (const auto& e : catalog_entries()) {
        const auto stat = e.build(std::max(order, 8));
        for (int n1 = 0; n1 <= 4; ++n1) {
            for (int n2 = 0; n2 <= 4; ++n2) {
                for (int k = 0; k <= 8; ++k, ++o.cases) {
                    if (!occupation_recursion_check(stat, n1, n2, k)) {
                        auto ce = entry_json(e);
                        ce["N1"] = n1;
                        ce["N2"] = n2;
                        ce["k"] = k;
                        o.fail(ce, "W_k(N1+N2) != sum W_i(N1) W_{k-i}(N2)");
                        return;
                    }
                }
            }
        }
    }
}

void chu_vandermonde(Outcome& o, Generator& g, int order)
{
    for (const auto& e : catalog_entries()) {
        const auto polys = occupation_polynomials(e.build(std::max(order, 8)), 6);
        for (int n = 0; n <= 6; ++n) {
            for (int i = 0; i < 5; ++i, ++o.cases) {
                const auto x = g.rational(5, 4);
                const auto y = g.rational(5, 4);
                Rational lhs;
                for (int j = 0; j <= n; ++j) {
                    lhs += polys[static_cast<std::size_t>(j)](x) * polys[static_cast<std::size_t>(n - j)](y);
                }
                if (lhs != polys[static_cast<std::size_t>(n)](x + y)) {
                    auto ce = entry_json(e);
                    ce["n"] = n;
                    ce["x"] = x.to_string();
                    ce["y"] = y.to_string();
                    o.fail(ce, "deformed Chu-Vandermonde identity failed");
                    return;
                }
            }
        }
    }
}

void cluster_roundtrip(Outcome& o, Generator& g, int order)
{
    std::vector<Statistics> stats;
    for (const auto& e : catalog_entries()) {
        stats.push_back(e.build(order));
    }
    for (int i = 0; i < 20; ++i) {
        stats.push_back(g.statistics(order));
    }
    for (const auto& s : stats) {
        ++o.cases;
        const auto a = Statistics::from_occupation(s.occupation_numbers());
        const auto b = Statistics::from_cluster(s.cluster_coefficients());
        if (!same_statistics(a, s) || !same_statistics(b, s)) {
            o.fail(to_json(s), "occupation or cluster roundtrip changed the statistics");
            return;
        }
    }
}

void haldane_wu(Outcome& o, Generator&, int)
{
    for (int gg = 1; gg <= 10; ++gg) {
        for (int n = 0; n <= 10; ++n, ++o.cases) {
            if (haldane_wu_W(gg, n, 0) != binomial(Rational(gg + n - 1), n)
                || haldane_wu_W(gg, n, 1) != binomial(Rational(gg), n)) {
                o.fail({{"g", gg}, {"n", n}}, "Bose or Fermi limit of the state count failed");
                return;
            }
        }
    }
    ++o.cases;
    if (haldane_wu_W(3, 2, Rational(1, 2)) != Rational(35, 8)) {
        o.fail({{"g", 3}, {"n", 2}, {"beta", "1/2"}}, "expected 35/8");
    }
}

void gentile_limits(Outcome& o, Generator&, int order)
{
    ++o.cases;
    if (!same_statistics(gentile_statistics(1, order), get("fermi-dirac").build(order))) {
        o.fail({{"p", 1}}, "gentile(1) != fermi-dirac");
        return;
    }
    ++o.cases;
    if (!same_statistics(gentile_statistics(order, order), get("bose-einstein").build(order))) {
        o.fail({{"p", order}}, "gentile(p >= order) != bose-einstein");
    }
}

// ---- duality -------------------------------------------------------------

void dual_involution(Outcome& o, Generator& g, int order)
{
    const int n = std::min(order, 12);
    for (int i = 0; i < 100; ++i, ++o.cases) {
        const auto s = g.statistics(n);
        if (!same_statistics(dual(dual(s)), s)) {
            o.fail(to_json(s), "dual(dual(s)) != s");
            return;
        }
    }
    ++o.cases;
    if (!same_statistics(dual(get("bose-einstein").build(order)), get("fermi-dirac").build(order))) {
        o.fail({{"entry", "bose-einstein"}}, "dual(BE) != FD");
        return;
    }
    ++o.cases;
    const auto bg = get("boltzmann-gibbs").build(order);
    if (!same_statistics(dual(bg), bg)) {
        o.fail({{"entry", "boltzmann-gibbs"}}, "dual(BG) != BG");
    }
}

void group_axioms(Outcome& o, Generator& g, int order)
{
    const int n = std::min(order, 10);
    const auto bg = get("boltzmann-gibbs").build(n);
    for (int i = 0; i < 30; ++i, ++o.cases) {
        const auto a = g.statistics(n);
        const auto b = g.statistics(n);
        const auto c = g.statistics(n);
        const int m = static_cast<int>(g.integer(1, 3));
        const bool ok = same_statistics(group_compose(group_compose(a, b), c), group_compose(a, group_compose(b, c)))
                        && same_statistics(group_compose(a, bg), a) && same_statistics(group_compose(bg, a), a)
                        && same_statistics(group_compose(a, dual(a)), bg)
                        && same_statistics(group_compose_m(a, b, 0), group_compose(a, b))
                        && same_statistics(group_compose_m(a, bg, m), group_compose(Statistics::from_weight(twist(a.weight(), m)), bg));
        if (!ok) {
            o.fail({{"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)}}, "group law failed");
            return;
        }
    }
}

void entropy_logpart(Outcome& o, Generator&, int order)
{
    for (const auto& e : catalog_entries()) {
        ++o.cases;
        const auto stat = e.build(order);
        const auto h = entropy(stat);
        if (h.logpart() != negate(stat.weight()) || h.plain() != stat.free_energy()) {
            o.fail(entry_json(e), "entropy is not F - w log X");
            return;
        }
    }
}

// ---- main theorem --------------------------------------------------------

void main_theorem_catalog(Outcome& o, Generator&, int order)
{
    for (const auto& e : catalog_entries()) {
        ++o.cases;
        const auto stat = e.build(order);
        if (!main_theorem_check(stat)) {
            o.fail(entry_json(e), "H(X) != H0(w(X))");
            return;
        }
        if (e.registered_constant()) {
            const auto h = phi_entropy(stat, e.registered_constant());
            const auto lhs = logseries_compose(h.full(), stat.weight());
            const auto shift = LogSeries(scale(stat.weight(), -*e.registered_constant()), TruncatedSeries::zero(order));
            if (!agree(lhs, add(entropy(stat), shift))) {
                o.fail(entry_json(e), "H(X) - c0 w(X) != H(w(X)) with the registered constant");
                return;
            }
        }
    }
}

void main_theorem_random(Outcome& o, Generator& g, int order)
{
    for (int i = 0; i < 100; ++i, ++o.cases) {
        const auto s = g.statistics(order);
        if (!main_theorem_check(s)) {
            o.fail(to_json(s), "H(X) != H0(w(X))");
            return;
        }
    }
}

void bijections(Outcome& o, Generator& g, int order)
{
    const int n = std::min(order, 12);
    for (int i = 0; i < 30; ++i, ++o.cases) {
        const auto phi = g.phi(n);
        const auto t = phi.T();
        const auto h = map_f(phi);
        if (map_g_inverse(map_g(phi)) != phi || T_from_s(s_from_T(t)) != t || map_f_inverse(h) != phi
            || map_h(map_g(phi)) != h || tau(tau(phi)) != phi || rho(rho(h)) != h) {
            o.fail(to_json(phi), "a correspondence roundtrip failed");
            return;
        }
    }
    ++o.cases;
    const auto fd = map_g_inverse(get("fermi-dirac").build(order));
    const auto be = map_g_inverse(get("bose-einstein").build(order));
    if (tau(fd) != be) {
        o.fail({{"phi", to_json(fd)}}, "tau(phi_FD) != phi_BE");
    }
}

// ---- gradient ------------------------------------------------------------

void gradient_catalog(Outcome& o, Generator&, int order)
{
    for (const auto& e : catalog_entries()) {
        ++o.cases;
        if (!entropy_gradient_check(e.build(order))) {
            o.fail(entry_json(e), "d/dp H0 != -ln0 up to a constant");
            return;
        }
    }
}

void gradient_random(Outcome& o, Generator& g, int order)
{
    for (int i = 0; i < 50; ++i, ++o.cases) {
        const auto phi = g.phi(order);
        if (!entropy_gradient_check(phi)) {
            o.fail(to_json(phi), "d/dp H0 != -ln0 up to a constant");
            return;
        }
    }
}

// ---- xi ------------------------------------------------------------------

void xi_dual_path(Outcome& o, Generator&, int order)
{
    for (const auto& e : catalog_entries()) {
        ++o.cases;
        const auto stat = e.build(order);
        if (!agree(xi_integral(map_g_inverse(stat)), xi_composed(stat))) {
            o.fail(entry_json(e), "integral of u/phi != F(X(u))");
            return;
        }
    }
}

void euler_dilogarithm(Outcome& o, Generator&, int order)
{
    const int n = std::min(order, 14);
    const auto b = bernoulli_numbers(n);
    const auto x = xi(map_g_inverse(get("dilogarithm").build(order)));
    for (int k = 0; k < n; ++k, ++o.cases) {
        if (x[k + 1] != b[static_cast<std::size_t>(k)] / factorial(k + 1)) {
            o.fail({{"index", k + 1}, {"xi", to_json(x)}}, "xi coefficient is not B_n/(n+1)!");
            return;
        }
    }
}

// ---- fixtures ------------------------------------------------------------

void fixture_table(Outcome& o, Generator&, int)
{
    for (const auto& f : all_fixtures()) {
        ++o.cases;
        const auto r = check_fixture(f);
        if (!r.passed) {
            Json params = Json::object();
            for (const auto& [k, v] : f.params) {
                params[k] = v.to_string();
            }
            o.fail({{"entry", f.entry}, {"params", params}, {"quantity", f.quantity}, {"computed", to_json(r.computed)}},
                   r.message);
            return;
        }
    }
}

const std::vector<Property>& properties()
{
    static const std::vector<Property> p = {
        {"inversion", "lagrange_roundtrip", lagrange_roundtrip},
        {"inversion", "exp_log_roundtrip", exp_log_roundtrip},
        {"inversion", "ring_axioms", ring_axioms},
        {"inversion", "leibniz", leibniz},
        {"inversion", "rational_powers", rational_powers},
        {"binomial", "binomial_identity", binomial_identity},
        {"binomial", "annihilation", annihilation},
        {"binomial", "commutation", commutation},
        {"binomial", "expansion_theorem", expansion_theorem},
        {"binomial", "umbral_shift", umbral_shift},
        {"binomial", "sheffer", sheffer_properties},
        {"occupation", "recursion", occupation_recursion},
        {"occupation", "chu_vandermonde", chu_vandermonde},
        {"occupation", "cluster_roundtrip", cluster_roundtrip},
        {"occupation", "haldane_wu", haldane_wu},
        {"occupation", "gentile_limits", gentile_limits},
        {"duality", "involution", dual_involution},
        {"duality", "group_axioms", group_axioms},
        {"duality", "entropy_logpart", entropy_logpart},
        {"main-theorem", "catalog", main_theorem_catalog},
        {"main-theorem", "random", main_theorem_random},
        {"main-theorem", "bijections", bijections},
        {"gradient", "catalog", gradient_catalog},
        {"gradient", "random", gradient_random},
        {"xi", "dual_path", xi_dual_path},
        {"xi", "euler_dilogarithm", euler_dilogarithm},
        {"fixtures", "table", fixture_table},
    };
    return p;
}

PropertyResult run_property(const Property& p, const VerifyOptions& options)
{
    PropertyResult r;
    r.suite = p.suite;
    r.name = p.name;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    Generator g(options.seed, std::string(p.suite) + "/" + p.name);
    try {
        p.body(o, g, options.order);
    } catch (const std::exception& e) {
        o.fail(o.counterexample.value_or(Json()), std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.cases = o.cases;
    r.passed = o.detail.empty();
    r.detail = o.detail;
    if (o.counterexample) {
        r.counterexample = *o.counterexample;
    }
    return r;
}

}  // namespace

bool VerifyReport::passed() const
{
    for (const auto& r : results) {
        if (!r.passed) {
            return false;
        }
    }
    return true;
}

Json VerifyReport::to_json() const
{
    Json props = Json::array();
    for (const auto& r : results) {
        Json j = {{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"seconds", r.seconds}};
        if (!r.passed) {
            j["detail"] = r.detail;
            j["counterexample"] = r.counterexample;
        }
        props.push_back(j);
    }
    return {{"suite", suite},
            {"order", options.order},
            {"seed", options.seed},
            {"passed", passed()},
            {"seconds", seconds},
            {"properties", props}};
}

const std::vector<std::string>& verify_suites()
{
    static const std::vector<std::string> s = {"all",          "inversion", "binomial", "occupation", "duality",
                                               "main-theorem", "gradient",  "xi",       "fixtures"};
    return s;
}

VerifyReport run_verify(const std::string& suite, const VerifyOptions& options)
{
    if (std::find(verify_suites().begin(), verify_suites().end(), suite) == verify_suites().end()) {
        std::string known;
        for (const auto& s : verify_suites()) {
            known += (known.empty() ? "" : ", ") + s;
        }
        throw std::invalid_argument("unknown suite '" + suite + "' (known: " + known + ")");
    }
    if (options.order < 8) {
        throw std::invalid_argument("verify needs order >= 8");
    }
    VerifyReport report;
    report.suite = suite;
    report.options = options;
    const auto start = std::chrono::steady_clock::now();
    std::vector<const Property*> selected;
    for (const auto& p : properties()) {
        if (suite == "all" || suite == p.suite) {
            selected.push_back(&p);
        }
    }
    if (options.parallel) {
        std::vector<std::future<PropertyResult>> futures;
        for (const auto* p : selected) {
            futures.push_back(std::async(std::launch::async, run_property, std::cref(*p), std::cref(options)));
        }
        for (auto& f : futures) {
            report.results.push_back(f.get());
        }
    } else {
        for (const auto* p : selected) {
            report.results.push_back(run_property(*p, options));
        }
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<Rational> bernoulli_numbers(int n)
{
    std::vector<Rational> b{Rational(1)};
    for (int m = 1; m <= n; ++m) {
        Rational acc;
        for (int k = 0; k < m; ++k) {
            acc += binomial(Rational(m + 1), k) * b[static_cast<std::size_t>(k)];
        }
        b.push_back(-acc / Rational(m + 1));
    }
    return b;
}

}  // namespace umbral
