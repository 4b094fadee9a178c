#pragma once

// A(p) + B(p) log p with A, B truncated series of a common order.

#include <iosfwd>
#include <string>

#include "umbral/series.hpp"

namespace umbral {

class LogSeries {
public:
    /// Both parts are truncated to the smaller of the two orders.
    LogSeries(const TruncatedSeries& plain, const TruncatedSeries& logpart);

    /// log p at the given order.
    static LogSeries log_p(int order);

    const TruncatedSeries& plain() const { return plain_; }
    const TruncatedSeries& logpart() const { return logpart_; }
    int order() const { return plain_.order(); }

    LogSeries truncate(int new_order) const;

    friend bool operator==(const LogSeries&, const LogSeries&) = default;

private:
    TruncatedSeries plain_;
    TruncatedSeries logpart_;
};

/// Both parts agree through the smaller order.
bool agree(const LogSeries& a, const LogSeries& b);

LogSeries add(const LogSeries& a, const LogSeries& b);
LogSeries sub(const LogSeries& a, const LogSeries& b);
LogSeries scale(const LogSeries& a, const Rational& c);
/// s(p) * (A + B log p).
LogSeries mul(const TruncatedSeries& s, const LogSeries& a);

/// L(u(X)) for u(0) = 0 and u'(0) = 1:
/// A(u) + B(u) log(u/X) + B(u) log X, known through order - 1.
LogSeries logseries_compose(const LogSeries& l, const TruncatedSeries& u);

/// A' + B' log p + B/p; requires B(0) = 0.
LogSeries logseries_derivative(const LogSeries& l);

inline LogSeries operator+(const LogSeries& a, const LogSeries& b) { return add(a, b); }
inline LogSeries operator-(const LogSeries& a, const LogSeries& b) { return sub(a, b); }

std::string to_string(const LogSeries& l, std::string_view var = "p");
std::ostream& operator<<(std::ostream& os, const LogSeries& l);

}  // namespace umbral
