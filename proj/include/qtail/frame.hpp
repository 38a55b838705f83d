#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qtail/series.hpp"

namespace qtail {

/// Named collection of quarterly series. Names are unique; insertion order is
/// preserved so every downstream report is deterministic.
class Frame {
public:
    Frame() = default;

    void add(std::string name, QuarterlySeries series);
    [[nodiscard]] bool has(const std::string& name) const noexcept;
    /// Throws data_error for unknown names.
    [[nodiscard]] const QuarterlySeries& get(const std::string& name) const;
    [[nodiscard]] std::vector<std::string> names() const;
    [[nodiscard]] std::size_t size() const noexcept { return columns_.size(); }
    [[nodiscard]] bool empty() const noexcept { return columns_.empty(); }
    [[nodiscard]] const std::vector<std::pair<std::string, QuarterlySeries>>& columns() const {
        return columns_;
    }

private:
    std::vector<std::pair<std::string, QuarterlySeries>> columns_;
};

/// A covariate request: series name plus lag in quarters.
struct ColumnSpec {
    std::string name;
    int lag = 0;
};

/// Display name for a lagged column ("gap" stays "gap", lag 3 -> "gap_l3").
[[nodiscard]] std::string column_label(const ColumnSpec& spec);

/// Response vector plus covariate matrix over row-complete periods.
/// When has_intercept is set, column 0 of X is the constant 1 and
/// column_names[0] == "intercept".
struct DesignMatrix {
    std::string response_name;
    Eigen::VectorXd y;
    Eigen::MatrixXd X;
    std::vector<std::string> column_names;
    bool has_intercept = false;
    std::vector<Period> row_periods;  // period of each row, for audit output

    [[nodiscard]] std::size_t rows() const noexcept { return static_cast<std::size_t>(X.rows()); }
    [[nodiscard]] std::size_t cols() const noexcept { return static_cast<std::size_t>(X.cols()); }
};

/// Builds a design matrix over the periods where the response and every lagged
/// covariate are all observed. Column order follows the request. Throws
/// data_error on unknown names or an empty intersection.
[[nodiscard]] DesignMatrix assemble(const Frame& frame, const std::string& response,
                                    const std::vector<ColumnSpec>& columns,
                                    bool intercept = true);

}  // namespace qtail
