#include "qtail/period.hpp"

#include <cctype>
#include <cstdlib>

#include "qtail/errors.hpp"

namespace qtail {

namespace {
// Quarters since year 0, Q1.
long index_of(const Period& p) noexcept {
    return 4L * p.year + (p.quarter - 1);
}
}  // namespace

Period Period::plus(int quarters) const noexcept {
    long idx = index_of(*this) + quarters;
    long y = idx / 4;
    long q = idx % 4;
    if (q < 0) {  // keep quarter in {0..3} for negative years
        q += 4;
        y -= 1;
    }
    return Period{static_cast<int>(y), static_cast<int>(q) + 1};
}

int Period::minus(const Period& other) const noexcept {
    return static_cast<int>(index_of(*this) - index_of(other));
}

std::string Period::to_string() const {
    return std::to_string(year) + "Q" + std::to_string(quarter);
}

Period Period::parse(const std::string& text) {
    auto fail = [&text]() -> Period {
        throw data_error("bad period '" + text + "': expected YYYYQn with n in 1..4");
    };
    const auto qpos = text.find_first_of("Qq");
    if (qpos == std::string::npos || qpos == 0 || qpos + 2 != text.size()) return fail();
    for (std::size_t i = 0; i < qpos; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])) && !(i == 0 && text[i] == '-'))
            return fail();
    }
    const char qc = text[qpos + 1];
    if (qc < '1' || qc > '4') return fail();
    const int year = std::atoi(text.substr(0, qpos).c_str());
    return Period{year, qc - '0'};
}

}  // namespace qtail
