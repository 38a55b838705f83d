#pragma once

#include <cstddef>
#include <vector>

#include "qtail/period.hpp"

namespace qtail {

/// Gap-free quarterly series: value i belongs to start().plus(i). Values are
/// finite and immutable after construction. Rates are stored as dimensionless
/// fractions (0.0146 = 1.46%).
class QuarterlySeries {
public:
    QuarterlySeries(Period start, std::vector<double> values);

    [[nodiscard]] const Period& start() const noexcept { return start_; }
    /// Period of the last value.
    [[nodiscard]] Period end() const noexcept {
        return start_.plus(static_cast<int>(values_.size()) - 1);
    }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const noexcept { return values_[i]; }
    [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }

    [[nodiscard]] bool contains(const Period& p) const noexcept;
    /// Value at period p. Throws data_error when p is outside the span.
    [[nodiscard]] double at(const Period& p) const;

private:
    Period start_;
    std::vector<double> values_;
};

/// Quarter-over-quarter log growth: result[t] = ln(s[t+1]) - ln(s[t]), so the
/// result starts one quarter after the input and is one value shorter.
/// Throws data_error when any level is not strictly positive, naming the
/// offending period.
[[nodiscard]] QuarterlySeries log_growth(const QuarterlySeries& s);

/// k-quarter lag: the result's value at period p is the input's value at
/// p minus k quarters. The start advances by k and the end stays fixed, so
/// the result has size() - k values. k >= size() throws data_error.
[[nodiscard]] QuarterlySeries lag(const QuarterlySeries& s, std::size_t k);

}  // namespace qtail
