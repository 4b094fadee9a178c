#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "umbral/cli.hpp"

namespace {

struct CommonArgs {
    std::string stat;
    std::vector<std::string> params;
    std::optional<int> order;
    std::string format = "json";
    std::uint64_t seed = 1;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool with_stat = true)
{
    if (with_stat) {
        cmd->add_option("stat,--stat", a.stat, "catalog entry (see 'list')");
        cmd->add_option("--param", a.params, "entry parameter as name=value (repeatable)");
    }
    cmd->add_option("--order", a.order, "truncation order (default: $UMBRAL_ORDER or 16)");
    cmd->add_option("--format", a.format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
    cmd->add_option("--seed", a.seed, "seed for random property inputs");
}

umbral::cli::Common to_common(const CommonArgs& a)
{
    umbral::cli::Common c;
    c.stat = a.stat;
    c.params = a.params;
    c.order = a.order;
    c.format = umbral::cli::parse_format(a.format);
    c.seed = a.seed;
    return c;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact series engine for interpolating statistics"};
    app.require_subcommand(1);
    CommonArgs common;
    umbral::cli::Result result;

    auto* expand = app.add_subcommand("expand", "truncated expansion of one quantity");
    add_common(expand, common);
    std::string quantity;
    expand->add_option("quantity,--quantity", quantity, "F, z, w, X_of_w, phi, xi, ln_phi, entropy, phi_entropy, ...")
        ->required();

    auto* entropy = app.add_subcommand("entropy", "normalized phi-entropy H0 and its registered constant");
    add_common(entropy, common);

    auto* dual = app.add_subcommand("dual", "statistics with the inverse weight function");
    add_common(dual, common);

    auto* compose = app.add_subcommand("compose", "group law on weight functions");
    add_common(compose, common);
    std::string other;
    std::vector<std::string> other_params;
    int m = 0;
    compose->add_option("--with", other, "second catalog entry")->required();
    compose->add_option("--with-param", other_params, "parameter of the second entry (repeatable)");
    compose->add_option("-m", m, "twist exponent (0 is the plain group law)");

    auto* polyseq = app.add_subcommand("polyseq", "conjugate, associated or Sheffer polynomial sequence");
    add_common(polyseq, common);
    std::string kind = "conjugate";
    int count = 6;
    std::vector<std::string> g;
    polyseq->add_option("--kind", kind, "conjugate, associated or sheffer")
        ->check(CLI::IsMember({"conjugate", "associated", "sheffer"}));
    polyseq->add_option("-n", count, "last index")->check(CLI::NonNegativeNumber);
    polyseq->add_option("--g", g, "Sheffer g coefficients g_0 g_1 ... (comma or space separated)")->delimiter(',');

    auto* spectral = app.add_subcommand("spectral", "points on the spectral curve z = z(X), Y = F(X)");
    add_common(spectral, common);
    std::vector<std::string> points;
    spectral->add_option("--at", points, "sample points X (rationals)")->required()->delimiter(',');

    auto* maxent = app.add_subcommand("maxent", "maximum-entropy multipliers by damped Newton iteration");
    add_common(maxent, common);
    std::vector<double> energies;
    double target = 0.0;
    double a0 = 1.0;
    double b0 = 1.0;
    maxent->add_option("--energies", energies, "level energies")->required()->delimiter(',');
    maxent->add_option("--energy", target, "target mean energy")->required();
    maxent->add_option("--a0", a0, "initial a");
    maxent->add_option("--b0", b0, "initial b");

    auto* verify = app.add_subcommand("verify", "run property suites");
    add_common(verify, common, false);
    std::string suite = "all";
    verify->add_option("suite,--suite", suite, "all, inversion, binomial, occupation, duality, main-theorem, "
                                                "gradient, xi, fixtures");

    auto* oeis = app.add_subcommand("oeis-check", "longest prefix shared with an integer sequence");
    add_common(oeis, common);
    umbral::cli::OeisRequest req;
    oeis->add_option("--quantity", req.quantity, "quantity tag, or gamma_triangle")->required();
    oeis->add_option("--id", req.id, "sequence id such as A000108")->required();
    oeis->add_flag("--fetch", req.fetch, "download the b-file instead of using embedded data");
    oeis->add_option("--min-prefix", req.min_prefix, "prefix length required for success");
    oeis->add_option("--start", req.start, "first coefficient index");
    oeis->add_option("--stride", req.stride, "coefficient stride");
    oeis->add_option("--power-base", req.power_base, "multiply the j-th selected value by base^j");
    oeis->add_option("--sequence-start", req.sequence_start, "first sequence position compared");
    oeis->add_option("--abs", req.abs, "compare absolute values (true/false)");

    auto* list = app.add_subcommand("list", "catalog entries, quantities and suites");
    add_common(list, common, false);

    CLI11_PARSE(app, argc, argv);

    try {
        const auto c = to_common(common);
        if (*expand) {
            result = umbral::cli::expand(c, quantity);
        } else if (*entropy) {
            result = umbral::cli::entropy(c);
        } else if (*dual) {
            result = umbral::cli::dual(c);
        } else if (*compose) {
            result = umbral::cli::compose(c, other, other_params, m);
        } else if (*polyseq) {
            result = umbral::cli::polyseq(c, kind, count, g);
        } else if (*spectral) {
            result = umbral::cli::spectral(c, points);
        } else if (*maxent) {
            result = umbral::cli::maxent(c, energies, target, a0, b0);
        } else if (*verify) {
            result = umbral::cli::verify(c, suite);
        } else if (*oeis) {
            result = umbral::cli::oeis_check(c, req);
        } else if (*list) {
            result = umbral::cli::list(c);
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return umbral::cli::kExitUsage;
    }
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
