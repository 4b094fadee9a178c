#pragma once

// Property suites over the catalog and seeded random inputs. Each property
// reports the number of cases it ran and, on failure, one counterexample.

#include <cstdint>
#include <string>
#include <vector>

#include "umbral/json_io.hpp"

namespace umbral {

struct PropertyResult {
    std::string suite;
    std::string name;
    bool passed = true;
    int cases = 0;
    double seconds = 0.0;
    std::string detail;
    Json counterexample;
};

struct VerifyOptions {
    int order = kDefaultOrder;
    std::uint64_t seed = 1;
    bool parallel = true;
};

struct VerifyReport {
    std::string suite;
    VerifyOptions options;
    std::vector<PropertyResult> results;
    double seconds = 0.0;

    bool passed() const;
    Json to_json() const;
};

/// all, inversion, binomial, occupation, duality, main-theorem, gradient, xi, fixtures.
const std::vector<std::string>& verify_suites();

/// Throws std::invalid_argument for an unknown suite or an order below 8.
VerifyReport run_verify(const std::string& suite, const VerifyOptions& options = {});

/// B_0..B_n from sum_{k<=n} C(n+1,k) B_k = 0.
std::vector<Rational> bernoulli_numbers(int n);

}  // namespace umbral
