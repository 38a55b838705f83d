#pragma once

#include <compare>
#include <string>

namespace qtail {

/// Calendar quarter, e.g. 2000Q1. Totally ordered; quarter arithmetic rolls
/// Q4 into Q1 of the following year.
struct Period {
    int year = 0;
    int quarter = 1;  // in {1,2,3,4}

    friend auto operator<=>(const Period&, const Period&) = default;

    /// Period advanced by `quarters` (may be negative).
    [[nodiscard]] Period plus(int quarters) const noexcept;

    /// Signed distance in quarters from `other` to `*this`.
    [[nodiscard]] int minus(const Period& other) const noexcept;

    [[nodiscard]] std::string to_string() const;  // "2000Q1"

    /// Parses "YYYYQn". Throws data_error on malformed input.
    static Period parse(const std::string& text);
};

}  // namespace qtail
