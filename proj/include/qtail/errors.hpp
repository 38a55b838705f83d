#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qtail {

/// Bad configuration: unknown options, invalid grids, unresolvable paths.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Problems with ingested data: parse failures, period gaps, empty alignments.
class data_error : public std::runtime_error {
public:
    explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Too few rows survive alignment/filtering; carries the observed count.
class small_sample_error : public data_error {
public:
    small_sample_error(const std::string& msg, std::size_t n_rows)
        : data_error(msg + " (rows available: " + std::to_string(n_rows) + ")"),
          n(n_rows) {}
    std::size_t n;
};

/// Numerical failures: singular designs, non-finite values, solver breakdown.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qtail
