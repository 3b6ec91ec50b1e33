#ifndef LDIAG_WEIGHT_MATRIX_HPP
#define LDIAG_WEIGHT_MATRIX_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "error.hpp"

namespace ldiag {

using Entry = std::uint32_t;

// A labelled diagram, stored as its packed weight matrix.
//
// Rows are white spots, columns are black spots; entry (i, j) is the number
// of lines joining white spot i to black spot j. Every row and every column
// carries at least one line. The 0x0 matrix is the empty diagram.
//
// Matrices are totally ordered by (total weight, rows, cols, row-major
// entries); this is the term order used by every formal sum.
class WeightMatrix {
public:
    WeightMatrix() = default;

    // Validating constructor from a row list. Throws Errc::ragged or Errc::unpacked.
    WeightMatrix(std::initializer_list<std::initializer_list<Entry>> rows) {
        std::vector<std::vector<Entry>> grid;
        grid.reserve(rows.size());
        for (const auto& r : rows) grid.emplace_back(r);
        *this = from_rows(grid);
    }

    static WeightMatrix from_rows(const std::vector<std::vector<Entry>>& grid) {
        if (grid.empty()) return {};
        const std::size_t q = grid.front().size();
        for (const auto& r : grid)
            if (r.size() != q) throw Error(Errc::ragged, "rows have unequal length");
        if (q == 0) throw Error(Errc::unpacked, "nonempty grid without columns");
        std::vector<Entry> flat;
        flat.reserve(grid.size() * q);
        for (const auto& r : grid) flat.insert(flat.end(), r.begin(), r.end());
        return from_flat(grid.size(), q, std::move(flat));
    }

    // Row-major construction; validates packedness.
    static WeightMatrix from_flat(std::size_t rows, std::size_t cols, std::vector<Entry> flat) {
        if (flat.size() != rows * cols) throw Error(Errc::ragged, "entry count does not match shape");
        if ((rows == 0) != (cols == 0)) throw Error(Errc::unpacked, "p and q must vanish together");
        WeightMatrix m;
        m.rows_ = rows;
        m.cols_ = cols;
        m.entries_ = std::move(flat);
        for (std::size_t i = 0; i < rows; ++i)
            if (m.row_weight(i) == 0) throw Error(Errc::unpacked, "row " + std::to_string(i + 1) + " is zero");
        for (std::size_t j = 0; j < cols; ++j)
            if (m.col_weight(j) == 0) throw Error(Errc::unpacked, "column " + std::to_string(j + 1) + " is zero");
        return m;
    }

    // Builds from a grid that may contain zero rows/columns, deleting them.
    static WeightMatrix packed_from(std::size_t rows, std::size_t cols, const std::vector<Entry>& flat) {
        std::vector<bool> keep_row(rows, false), keep_col(cols, false);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (flat[i * cols + j] != 0) keep_row[i] = keep_col[j] = true;
        std::vector<Entry> out;
        std::size_t p = 0, q = 0;
        for (std::size_t j = 0; j < cols; ++j) q += keep_col[j];
        for (std::size_t i = 0; i < rows; ++i) {
            if (!keep_row[i]) continue;
            ++p;
            for (std::size_t j = 0; j < cols; ++j)
                if (keep_col[j]) out.push_back(flat[i * cols + j]);
        }
        return from_flat(p, q, std::move(out));
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0; }

    Entry operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    std::span<const Entry> flat() const noexcept { return entries_; }
    std::span<const Entry> row(std::size_t i) const { return std::span(entries_).subspan(i * cols_, cols_); }

    std::vector<Entry> column(std::size_t j) const {
        std::vector<Entry> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    std::uint64_t total_weight() const noexcept {
        return std::accumulate(entries_.begin(), entries_.end(), std::uint64_t{0});
    }
    std::uint64_t row_weight(std::size_t i) const {
        std::uint64_t s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j);
        return s;
    }
    std::uint64_t col_weight(std::size_t j) const {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, j);
        return s;
    }

    friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

    friend std::strong_ordering operator<=>(const WeightMatrix& a, const WeightMatrix& b) {
        if (auto c = a.total_weight() <=> b.total_weight(); c != 0) return c;
        if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
        if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
        return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(),
                                                      b.entries_.begin(), b.entries_.end());
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Entry> entries_;
};

// [d1|d2]: block-diagonal placement of d2 to the right of (and below) d1.
inline WeightMatrix concat(const WeightMatrix& d1, const WeightMatrix& d2) {
    if (d1.empty()) return d2;
    if (d2.empty()) return d1;
    const std::size_t p = d1.rows() + d2.rows(), q = d1.cols() + d2.cols();
    std::vector<Entry> flat(p * q, 0);
    for (std::size_t i = 0; i < d1.rows(); ++i)
        for (std::size_t j = 0; j < d1.cols(); ++j) flat[i * q + j] = d1(i, j);
    for (std::size_t i = 0; i < d2.rows(); ++i)
        for (std::size_t j = 0; j < d2.cols(); ++j) flat[(d1.rows() + i) * q + d1.cols() + j] = d2(i, j);
    return WeightMatrix::from_flat(p, q, std::move(flat));
}

// Keeps the listed columns (0-based, strictly increasing) and drops rows that become zero.
inline WeightMatrix restrict_columns(const WeightMatrix& d, std::span<const std::size_t> cols) {
    for (std::size_t k = 0; k < cols.size(); ++k) {
        if (cols[k] >= d.cols()) throw Error(Errc::index_out_of_range, "column index out of range");
        if (k > 0 && cols[k] <= cols[k - 1])
            throw Error(Errc::index_out_of_range, "column selection must be strictly increasing");
    }
    std::vector<Entry> flat;
    flat.reserve(d.rows() * cols.size());
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j : cols) flat.push_back(d(i, j));
    return WeightMatrix::packed_from(d.rows(), cols.size(), flat);
}

inline WeightMatrix restrict_columns(const WeightMatrix& d, std::initializer_list<std::size_t> cols) {
    return restrict_columns(d, std::span<const std::size_t>(cols.begin(), cols.size()));
}

// Row analogue of restrict_columns; drops columns that become zero.
inline WeightMatrix restrict_rows(const WeightMatrix& d, std::span<const std::size_t> rows) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (rows[k] >= d.rows()) throw Error(Errc::index_out_of_range, "row index out of range");
        if (k > 0 && rows[k] <= rows[k - 1])
            throw Error(Errc::index_out_of_range, "row selection must be strictly increasing");
    }
    std::vector<Entry> flat;
    flat.reserve(rows.size() * d.cols());
    for (std::size_t i : rows)
        for (std::size_t j = 0; j < d.cols(); ++j) flat.push_back(d(i, j));
    return WeightMatrix::packed_from(rows.size(), d.cols(), flat);
}

inline WeightMatrix restrict_rows(const WeightMatrix& d, std::initializer_list<std::size_t> rows) {
    return restrict_rows(d, std::span<const std::size_t>(rows.begin(), rows.size()));
}

inline WeightMatrix transpose(const WeightMatrix& d) {
    std::vector<Entry> flat;
    flat.reserve(d.rows() * d.cols());
    for (std::size_t j = 0; j < d.cols(); ++j)
        for (std::size_t i = 0; i < d.rows(); ++i) flat.push_back(d(i, j));
    return WeightMatrix::from_flat(d.cols(), d.rows(), std::move(flat));
}

} // namespace ldiag

#endif
