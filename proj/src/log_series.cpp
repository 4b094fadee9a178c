#include "umbral/log_series.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace umbral {

LogSeries::LogSeries(const TruncatedSeries& plain, const TruncatedSeries& logpart)
    : plain_(plain.truncate(std::min(plain.order(), logpart.order()))),
      logpart_(logpart.truncate(std::min(plain.order(), logpart.order())))
{
}

LogSeries LogSeries::log_p(int order)
{
    return LogSeries(TruncatedSeries::zero(order), TruncatedSeries::one(order));
}

LogSeries LogSeries::truncate(int new_order) const
{
    return LogSeries(plain_.truncate(new_order), logpart_.truncate(new_order));
}

bool agree(const LogSeries& a, const LogSeries& b)
{
    return agree(a.plain(), b.plain()) && agree(a.logpart(), b.logpart());
}

LogSeries add(const LogSeries& a, const LogSeries& b)
{
    return LogSeries(a.plain() + b.plain(), a.logpart() + b.logpart());
}

LogSeries sub(const LogSeries& a, const LogSeries& b)
{
    return LogSeries(a.plain() - b.plain(), a.logpart() - b.logpart());
}

LogSeries scale(const LogSeries& a, const Rational& c)
{
    return LogSeries(scale(a.plain(), c), scale(a.logpart(), c));
}

LogSeries mul(const TruncatedSeries& s, const LogSeries& a)
{
    return LogSeries(mul(s, a.plain()), mul(s, a.logpart()));
}

LogSeries logseries_compose(const LogSeries& l, const TruncatedSeries& u)
{
    if (!u[0].is_zero()) {
        throw std::domain_error("logseries_compose: substituted series must have zero constant term");
    }
    if (u.order() < 1 || !u[1].is_one()) {
        throw std::domain_error("logseries_compose: linear coefficient must be 1");
    }
    const auto a = compose(l.plain(), u);
    const auto b = compose(l.logpart(), u);
    const auto log_unit = log_series(divide_by_x(u));
    return LogSeries(a + mul(b, log_unit), b);
}

LogSeries logseries_derivative(const LogSeries& l)
{
    if (!l.logpart()[0].is_zero()) {
        throw std::domain_error("logseries_derivative: log part must vanish at p = 0");
    }
    if (l.order() < 1) {
        throw std::domain_error("logseries_derivative: order-0 input");
    }
    return LogSeries(derivative(l.plain()) + divide_by_x(l.logpart()), derivative(l.logpart()));
}

std::string to_string(const LogSeries& l, std::string_view var)
{
    return "(" + to_string(l.plain(), var) + ") + (" + to_string(l.logpart(), var) + ")*log(" + std::string(var)
           + ")";
}

std::ostream& operator<<(std::ostream& os, const LogSeries& l)
{
    return os << to_string(l);
}

}  // namespace umbral
