#pragma once

// Command implementations behind the umbral-stats front end. Every command
// returns its rendered output and an exit code instead of printing, so the
// front end and the tests share one code path.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "umbral/json_io.hpp"

namespace umbral::cli {

enum class Format { json, csv, pretty };

Format parse_format(const std::string& text);

struct Common {
    std::string stat;
    std::vector<std::string> params;
    /// Explicit --order; otherwise UMBRAL_ORDER, otherwise 16.
    std::optional<int> order;
    Format format = Format::json;
    std::uint64_t seed = 1;
};

struct Result {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// 0 success, 1 a requested check failed, 2 bad input.
inline constexpr int kExitFailedCheck = 1;
inline constexpr int kExitUsage = 2;

int resolve_order(const std::optional<int>& order);

Result expand(const Common& c, const std::string& quantity);
Result entropy(const Common& c);
Result dual(const Common& c);
Result compose(const Common& c, const std::string& other, const std::vector<std::string>& other_params, int m);
/// kind: conjugate, associated or sheffer (sheffer takes g coefficients).
Result polyseq(const Common& c, const std::string& kind, int n, const std::vector<std::string>& g);
Result spectral(const Common& c, const std::vector<std::string>& points);
Result maxent(const Common& c, const std::vector<double>& energies, double target_energy, double a0, double b0);
Result verify(const Common& c, const std::string& suite);

struct OeisRequest {
    std::string quantity;
    std::string id;
    bool fetch = false;
    int min_prefix = 6;
    /// Overrides of the documented transform.
    std::optional<int> start;
    std::optional<int> stride;
    std::optional<std::string> power_base;
    std::optional<int> sequence_start;
    std::optional<bool> abs;
};

Result oeis_check(const Common& c, const OeisRequest& request);
Result list(const Common& c);

}  // namespace umbral::cli
