#pragma once

// Integer-sequence lookups: b-file parsing, a small embedded table and
// prefix matching of computed coefficients after a documented transform.

#include <optional>
#include <string>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral::oeis {

struct Sequence {
    std::string id;
    long offset = 0;
    std::vector<Rational> values;
    std::string source;  // "embedded" or "fetched"
};

/// True for "A" followed by six digits.
bool valid_id(const std::string& id);

/// "/A000108/b000108.txt"
std::string bfile_path(const std::string& id);

/// Whitespace-separated "index value" lines; '#' lines and blank lines are
/// skipped. Indices must be consecutive. Throws std::invalid_argument naming
/// the offending line.
Sequence parse_bfile(const std::string& id, const std::string& text);

std::optional<Sequence> embedded(const std::string& id);
std::vector<std::string> embedded_ids();

/// One HTTPS GET of the b-file. Throws std::runtime_error on any failure.
Sequence fetch(const std::string& id, int timeout_seconds = 10);

/// Selects c[start], c[start+stride], ... ; the j-th selected value is
/// multiplied by factor * power_base^j; abs drops signs on both sides.
struct Transform {
    int start = 0;
    int stride = 1;
    Rational power_base{1};
    Rational factor{1};
    bool abs = false;
    /// First sequence index compared (relative to the sequence offset).
    int sequence_start = 0;
    std::string description = "identity";
};

std::vector<Rational> apply(const std::vector<Rational>& coeffs, const Transform& t);

/// Number of leading positions where a and b agree.
int longest_prefix(const std::vector<Rational>& a, const std::vector<Rational>& b);

/// The transform recorded for a known (entry, quantity, id) triple.
std::optional<Transform> documented_transform(const std::string& entry, const std::string& quantity,
                                              const std::string& id);

struct Match {
    int prefix = 0;
    std::vector<Rational> computed;
    std::vector<Rational> reference;
};

Match match(const std::vector<Rational>& coeffs, const Sequence& seq, const Transform& t);

}  // namespace umbral::oeis
