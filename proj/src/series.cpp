#include "qtail/series.hpp"

#include <cmath>
#include <utility>

#include "qtail/errors.hpp"

namespace qtail {

QuarterlySeries::QuarterlySeries(Period start, std::vector<double> values)
    : start_(start), values_(std::move(values)) {
    if (start_.quarter < 1 || start_.quarter > 4)
        throw data_error("quarter must be in 1..4, got " + std::to_string(start_.quarter));
    if (values_.empty()) throw data_error("series must hold at least one value");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i]))
            throw data_error("non-finite value at " + start_.plus(static_cast<int>(i)).to_string());
    }
}

bool QuarterlySeries::contains(const Period& p) const noexcept {
    const int off = p.minus(start_);
    return off >= 0 && off < static_cast<int>(values_.size());
}

double QuarterlySeries::at(const Period& p) const {
    const int off = p.minus(start_);
    if (off < 0 || off >= static_cast<int>(values_.size()))
        throw data_error("period " + p.to_string() + " outside series span " +
                         start_.to_string() + ".." + end().to_string());
    return values_[static_cast<std::size_t>(off)];
}

QuarterlySeries log_growth(const QuarterlySeries& s) {
    if (s.size() < 2) throw data_error("log_growth needs at least two values");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] <= 0.0)
            throw data_error("log_growth requires strictly positive levels; value " +
                             std::to_string(s[i]) + " at " +
                             s.start().plus(static_cast<int>(i)).to_string());
    }
    std::vector<double> out(s.size() - 1);
    for (std::size_t i = 0; i + 1 < s.size(); ++i) out[i] = std::log(s[i + 1]) - std::log(s[i]);
    return QuarterlySeries(s.start().plus(1), std::move(out));
}

QuarterlySeries lag(const QuarterlySeries& s, std::size_t k) {
    if (k >= s.size())
        throw data_error("lag " + std::to_string(k) + " leaves an empty series (length " +
                         std::to_string(s.size()) + ")");
    std::vector<double> out(s.values().begin(),
                            s.values().begin() + static_cast<long>(s.size() - k));
    return QuarterlySeries(s.start().plus(static_cast<int>(k)), std::move(out));
}

}  // namespace qtail
