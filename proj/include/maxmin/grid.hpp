#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "types.hpp"
#include "wedge.hpp"

namespace maxmin {

/// Row-major rectangular array.
template<typename T>
class Grid {
public:
    Grid(std::size_t rows, std::size_t cols) : Grid(rows, cols, std::vector<T>(rows * cols)) {}

    Grid(std::size_t rows, std::size_t cols, std::vector<T> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (rows == 0 || cols == 0) { throw error("grid dimensions must be positive"); }
        if (data_.size() != rows * cols) {
            throw error("grid data has " + std::to_string(data_.size()) + " values, expected " +
                        std::to_string(rows * cols));
        }
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] const std::vector<T>& data() const noexcept { return data_; }

    T& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    [[nodiscard]] std::span<const T> row(std::size_t r) const noexcept {
        return std::span<const T>(data_).subspan(r * cols_, cols_);
    }

    [[nodiscard]] Grid transposed() const {
        Grid t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) { t(c, r) = (*this)(r, c); }
        }
        return t;
    }

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> data_;
};

template<typename T>
struct GridExtrema {
    Grid<T> max;
    Grid<T> min;
};

/// Extrema over every w_col x w_row rectangle fully inside the grid ("valid" borders).
/// Entry (r, c) covers rows [r, r + w_col) and columns [c, c + w_row). Rows are filtered
/// first, then the columns of the intermediate result.
template<typename T, typename Compare = std::less<T>>
GridExtrema<T> filter2d(const Grid<T>& g, std::size_t w_row, std::size_t w_col, Compare less = {}) {
    const Window across(w_row), down(w_col);
    if (w_row > g.cols()) { throw invalid_window("row window " + std::to_string(w_row) + " exceeds " + std::to_string(g.cols()) + " columns"); }
    if (w_col > g.rows()) { throw invalid_window("column window " + std::to_string(w_col) + " exceeds " + std::to_string(g.rows()) + " rows"); }

    const std::size_t out_cols = g.cols() - w_row + 1;
    const std::size_t out_rows = g.rows() - w_col + 1;

    Grid<T> row_max(g.rows(), out_cols), row_min(g.rows(), out_cols);
    for (std::size_t r = 0; r < g.rows(); ++r) {
        const auto s = wedge_values(g.row(r), across, less);
        for (std::size_t c = 0; c < out_cols; ++c) {
            row_max(r, c) = s.max[c];
            row_min(r, c) = s.min[c];
        }
    }

    GridExtrema<T> out{Grid<T>(out_rows, out_cols), Grid<T>(out_rows, out_cols)};
    std::vector<T> column(g.rows());
    for (std::size_t c = 0; c < out_cols; ++c) {
        for (std::size_t r = 0; r < g.rows(); ++r) { column[r] = row_max(r, c); }
        const auto hi = wedge_values(std::span<const T>(column), down, less);
        for (std::size_t r = 0; r < g.rows(); ++r) { column[r] = row_min(r, c); }
        const auto lo = wedge_values(std::span<const T>(column), down, less);
        for (std::size_t r = 0; r < out_rows; ++r) {
            out.max(r, c) = hi.max[r];
            out.min(r, c) = lo.min[r];
        }
    }
    return out;
}

} // namespace maxmin
