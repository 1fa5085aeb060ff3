#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "foxlink/errors.hpp"

namespace foxlink {

using Int = boost::multiprecision::cpp_int;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_)
            throw std::invalid_argument("entry count does not match matrix shape");
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Int& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const Int& at(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
        return entries_[r * cols_ + c];
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not compose");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

inline IntMatrix diagonal_matrix(std::size_t rows, std::size_t cols, const std::vector<Int>& diag) {
    IntMatrix out(rows, cols);
    for (std::size_t i = 0; i < diag.size() && i < rows && i < cols; ++i) out(i, i) = diag[i];
    return out;
}

inline bool rows_sum_to_zero(const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j);
        if (s != 0) return false;
    }
    return true;
}

namespace detail {

// Laplace expansion along the top remaining row, memoized on the set of
// remaining columns. Exponential in size but exact and independent of any
// elimination-based determinant.
inline Int det_by_cofactors(const IntMatrix& m, std::size_t row, std::uint64_t col_mask,
                            std::unordered_map<std::uint64_t, Int>& memo) {
    if (col_mask == 0) return 1;
    if (auto it = memo.find(col_mask); it != memo.end()) return it->second;
    Int result = 0;
    int sign = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const std::uint64_t bit = std::uint64_t{1} << j;
        if (!(col_mask & bit)) continue;
        const Int& a = m(row, j);
        if (a != 0) result += sign * a * det_by_cofactors(m, row + 1, col_mask & ~bit, memo);
        sign = -sign;
    }
    memo.emplace(col_mask, result);
    return result;
}

}  // namespace detail

/// Determinant of m with one row and one column deleted, by cofactor
/// expansion. An empty minor is 1 by convention. This is the slow
/// cross-check route; it shares no code with the Smith-normal-form path.
inline Int first_minor_oracle(const IntMatrix& m, std::size_t del_row, std::size_t del_col) {
    if (del_row >= m.rows() || del_col >= m.cols())
        throw std::out_of_range("minor index out of range");
    const std::size_t sub_rows = m.rows() - 1;
    const std::size_t sub_cols = m.cols() - 1;
    if (sub_rows == 0) return 1;  // empty minor
    if (sub_rows != sub_cols) throw std::invalid_argument("first minor is not square");
    if (sub_cols > 62) throw std::invalid_argument("cofactor oracle supports at most 63 columns");

    IntMatrix sub(sub_rows, sub_cols);
    for (std::size_t i = 0, si = 0; i < m.rows(); ++i) {
        if (i == del_row) continue;
        for (std::size_t j = 0, sj = 0; j < m.cols(); ++j) {
            if (j == del_col) continue;
            sub(si, sj) = m(i, j);
            ++sj;
        }
        ++si;
    }
    std::unordered_map<std::uint64_t, Int> memo;
    const std::uint64_t full = sub_cols == 0 ? 0 : ((std::uint64_t{1} << sub_cols) - 1);
    return detail::det_by_cofactors(sub, 0, full, memo);
}

}  // namespace foxlink
