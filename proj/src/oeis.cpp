#include "umbral/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

namespace umbral::oeis {

namespace {

struct Snippet {
    long offset;
    std::vector<long> values;
};

const std::map<std::string, Snippet>& table()
{
    static const std::map<std::string, Snippet> t = {
        {"A000108", {0, {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012, 742900}}},
        {"A000984", {0, {1, 2, 6, 20, 70, 252, 924, 3432, 12870, 48620, 184756}}},
        {"A001405", {0, {1, 1, 2, 3, 6, 10, 20, 35, 70, 126, 252, 462, 924}}},
        {"A001700", {0, {1, 3, 10, 35, 126, 462, 1716, 6435, 24310, 92378}}},
        {"A002420", {0, {1, -2, -2, -4, -10, -28, -84, -264, -858, -2860}}},
        {"A027307", {0, {1, 2, 10, 66, 498, 4066, 34970}}},
        {"A008277", {1, {1, 1, 1, 1, 3, 1, 1, 7, 6, 1, 1, 15, 25, 10, 1, 1, 31, 90, 65, 15, 1}}},
    };
    return t;
}

Rational magnitude(const Rational& q)
{
    return q.sign() < 0 ? -q : q;
}

}  // namespace

bool valid_id(const std::string& id)
{
    return id.size() == 7 && id[0] == 'A'
           && std::all_of(id.begin() + 1, id.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::string bfile_path(const std::string& id)
{
    if (!valid_id(id)) {
        throw std::invalid_argument("malformed sequence id '" + id + "' (expected A followed by six digits)");
    }
    return "/" + id + "/b" + id.substr(1) + ".txt";
}

Sequence parse_bfile(const std::string& id, const std::string& text)
{
    Sequence seq{id, 0, {}, "fetched"};
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool first = true;
    long expected = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos || line[begin] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::string index_text;
        std::string value_text;
        std::string extra;
        fields >> index_text >> value_text;
        if (value_text.empty() || (fields >> extra)) {
            throw std::invalid_argument("b-file line " + std::to_string(lineno) + " is not 'index value': '" + line
                                        + "'");
        }
        long index = 0;
        Rational value;
        try {
            std::size_t used = 0;
            index = std::stol(index_text, &used);
            if (used != index_text.size()) {
                throw std::invalid_argument("index");
            }
            value = Rational::parse(value_text);
        } catch (const std::exception&) {
            throw std::invalid_argument("b-file line " + std::to_string(lineno) + " has a malformed number: '" + line
                                        + "'");
        }
        if (!value.is_integer()) {
            throw std::invalid_argument("b-file line " + std::to_string(lineno) + " has a non-integer value: '"
                                        + line + "'");
        }
        if (first) {
            seq.offset = index;
            expected = index;
            first = false;
        }
        if (index != expected) {
            throw std::invalid_argument("b-file line " + std::to_string(lineno) + " breaks index order: '" + line
                                        + "'");
        }
        ++expected;
        seq.values.push_back(value);
    }
    if (seq.values.empty()) {
        throw std::invalid_argument("b-file for " + id + " has no data lines");
    }
    return seq;
}

std::optional<Sequence> embedded(const std::string& id)
{
    const auto it = table().find(id);
    if (it == table().end()) {
        return std::nullopt;
    }
    Sequence seq{id, it->second.offset, {}, "embedded"};
    for (long v : it->second.values) {
        seq.values.emplace_back(v);
    }
    return seq;
}

std::vector<std::string> embedded_ids()
{
    std::vector<std::string> ids;
    for (const auto& [id, snippet] : table()) {
        ids.push_back(id);
    }
    return ids;
}

Sequence fetch(const std::string& id, int timeout_seconds)
{
    const auto path = bfile_path(id);
    httplib::SSLClient client("oeis.org", 443);
    client.set_connection_timeout(timeout_seconds, 0);
    client.set_read_timeout(timeout_seconds, 0);
    client.set_follow_location(true);
    const auto res = client.Get(path);
    if (!res) {
        throw std::runtime_error("request for https://oeis.org" + path + " failed: " + httplib::to_string(res.error()));
    }
    if (res->status != 200) {
        throw std::runtime_error("https://oeis.org" + path + " returned HTTP " + std::to_string(res->status));
    }
    return parse_bfile(id, res->body);
}

std::vector<Rational> apply(const std::vector<Rational>& coeffs, const Transform& t)
{
    if (t.start < 0 || t.stride < 1) {
        throw std::invalid_argument("transform needs start >= 0 and stride >= 1");
    }
    std::vector<Rational> out;
    Rational mult = t.factor;
    for (std::size_t k = static_cast<std::size_t>(t.start); k < coeffs.size(); k += static_cast<std::size_t>(t.stride)) {
        const Rational v = coeffs[k] * mult;
        out.push_back(t.abs ? magnitude(v) : v);
        mult *= t.power_base;
    }
    return out;
}

int longest_prefix(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    const auto n = std::min(a.size(), b.size());
    std::size_t k = 0;
    while (k < n && a[k] == b[k]) {
        ++k;
    }
    return static_cast<int>(k);
}

std::optional<Transform> documented_transform(const std::string& entry, const std::string& quantity,
                                              const std::string& id)
{
    struct Row {
        const char* entry;
        const char* quantity;
        const char* id;
        Transform t;
    };
    static const std::vector<Row> rows = {
        {"lah", "X_of_w", "A000108", {1, 1, 1, 1, true, 1, "coefficients from X^1, signs dropped"}},
        {"lah", "phi", "A002420", {1, 1, 1, 1, true, 0, "coefficients from u^1, signs dropped"}},
        {"mott", "Y", "A027307", {0, 2, 1, 1, true, 0, "even powers, signs dropped"}},
        {"mott", "w", "A001700", {1, 2, 1, 1, false, 0, "odd powers"}},
        {"mott", "F", "A000108", {1, 2, 1, 1, false, 0, "odd powers"}},
        {"mittag-leffler", "X_of_w", "A000108", {1, 2, 4, 1, true, 0, "odd powers times 4^j, signs dropped"}},
        {"exponential", "gamma_triangle", "A008277", {0, 1, 1, 1, false, 0, "rows n >= 1, k = 1..n"}},
    };
    for (const auto& r : rows) {
        if (entry == r.entry && quantity == r.quantity && id == r.id) {
            return r.t;
        }
    }
    return std::nullopt;
}

Match match(const std::vector<Rational>& coeffs, const Sequence& seq, const Transform& t)
{
    Match m;
    m.computed = apply(coeffs, t);
    if (t.sequence_start < 0) {
        throw std::invalid_argument("transform sequence_start must be non-negative");
    }
    for (std::size_t k = static_cast<std::size_t>(t.sequence_start); k < seq.values.size(); ++k) {
        m.reference.push_back(t.abs ? magnitude(seq.values[k]) : seq.values[k]);
    }
    m.prefix = longest_prefix(m.computed, m.reference);
    return m;
}

}  // namespace umbral::oeis
