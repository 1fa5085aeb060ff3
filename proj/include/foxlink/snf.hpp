#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "foxlink/intmatrix.hpp"

namespace foxlink {

/// Invariant factors d1 | d2 | ... of an integer matrix (nonnegative, zeros
/// trailing), with optional unimodular transforms satisfying
/// left * m * right = diag(factors).
struct SNFResult {
    std::vector<Int> factors;
    std::optional<IntMatrix> left;
    std::optional<IntMatrix> right;
};

/// Diagonalizes by elementary row/column transformations. Pivot rule: the
/// nonzero entry of least absolute value in the remaining submatrix, ties
/// broken by lowest (row, col), which keeps the output deterministic and
/// coefficient growth modest.
inline SNFResult smith_normal_form(const IntMatrix& m, bool want_transforms = false) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const std::size_t k = std::min(rows, cols);

    IntMatrix a = m;
    IntMatrix left, right;
    if (want_transforms) {
        left = IntMatrix::identity(rows);
        right = IntMatrix::identity(cols);
    }

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < cols; ++c) std::swap(a(i, c), a(j, c));
        if (want_transforms)
            for (std::size_t c = 0; c < rows; ++c) std::swap(left(i, c), left(j, c));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, i), a(r, j));
        if (want_transforms)
            for (std::size_t r = 0; r < cols; ++r) std::swap(right(r, i), right(r, j));
    };
    // row dst -= q * row src
    auto row_axpy = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t c = 0; c < cols; ++c) a(dst, c) -= q * a(src, c);
        if (want_transforms)
            for (std::size_t c = 0; c < rows; ++c) left(dst, c) -= q * left(src, c);
    };
    // col dst -= q * col src
    auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t r = 0; r < rows; ++r) a(r, dst) -= q * a(r, src);
        if (want_transforms)
            for (std::size_t r = 0; r < cols; ++r) right(r, dst) -= q * right(r, src);
    };
    auto add_col = [&](std::size_t dst, std::size_t src) { col_axpy(dst, src, Int(-1)); };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t c = 0; c < cols; ++c) a(i, c) = -a(i, c);
        if (want_transforms)
            for (std::size_t c = 0; c < rows; ++c) left(i, c) = -left(i, c);
    };

    bool exhausted = false;
    for (std::size_t t = 0; t < k && !exhausted; ++t) {
        for (;;) {
            std::size_t pr = 0, pc = 0;
            bool found = false;
            Int best;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (a(i, j) == 0) continue;
                    Int av = abs(a(i, j));
                    if (!found || av < best) {
                        found = true;
                        best = std::move(av);
                        pr = i;
                        pc = j;
                    }
                }
            if (!found) {
                exhausted = true;  // remaining block is zero; factors stay 0
                break;
            }
            if (pr != t) swap_rows(pr, t);
            if (pc != t) swap_cols(pc, t);

            // Clear column and row t with truncated division; leftover
            // remainders are strictly smaller than the pivot and get picked
            // up by the next pivot selection.
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                Int q = a(i, t) / a(t, t);
                if (q != 0) row_axpy(i, t, q);
                if (a(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                Int q = a(t, j) / a(t, t);
                if (q != 0) col_axpy(j, t, q);
                if (a(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // Divisibility fix: fold a non-divisible entry into column t so
            // the next round shrinks the pivot.
            bool fixed = false;
            for (std::size_t i = t + 1; i < rows && !fixed; ++i)
                for (std::size_t j = t + 1; j < cols && !fixed; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        add_col(t, j);
                        fixed = true;
                    }
            if (!fixed) break;
        }
    }

    SNFResult res;
    res.factors.assign(k, Int(0));
    for (std::size_t t = 0; t < k; ++t) {
        if (a(t, t) < 0) negate_row(t);
        res.factors[t] = a(t, t);
    }
    if (want_transforms) {
        res.left = std::move(left);
        res.right = std::move(right);
    }
    return res;
}

/// Determinant of a link from a coloring matrix: the product of the nonzero
/// invariant factors when the kernel has rank one, and 0 when it is larger
/// (split-type systems). Rectangular matrices are handled through the column
/// nullity, so diagrams with free loops or open-strand gadgets work too.
/// Agrees with the absolute value of any first minor on square inputs; the
/// empty matrix yields 1.
inline Int link_determinant(const IntMatrix& m) {
    if (!rows_sum_to_zero(m))
        throw validation_error("coloring matrix rows must sum to zero");
    const SNFResult s = smith_normal_form(m);
    std::size_t rank = 0;
    Int prod = 1;
    for (const Int& d : s.factors)
        if (d != 0) {
            ++rank;
            prod *= d;
        }
    const std::size_t nullity = m.cols() - rank;
    if (nullity >= 2) return 0;
    return prod;
}

/// All solutions of m x = 0 over Z/r, presented by independent generators:
/// the solution set is exactly { sum_i t_i g_i mod r : 0 <= t_i < order_i }
/// and distinct coefficient tuples give distinct solutions.
struct SolutionModule {
    std::int64_t modulus = 0;
    std::size_t rank_free = 0;  // coordinates ranging over all of Z/r
    std::vector<std::vector<std::int64_t>> generators;
    std::vector<std::int64_t> orders;
    Int cardinality = 1;
};

inline std::vector<std::int64_t> combine_generators(const SolutionModule& sol,
                                                    const std::vector<std::int64_t>& coeffs) {
    if (coeffs.size() != sol.generators.size())
        throw std::invalid_argument("coefficient count does not match generator count");
    std::size_t n = sol.generators.empty() ? 0 : sol.generators.front().size();
    std::vector<std::int64_t> out(n, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const std::int64_t t = ((coeffs[i] % sol.orders[i]) + sol.orders[i]) % sol.orders[i];
        if (t == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            out[j] = (out[j] + t * sol.generators[i][j]) % sol.modulus;
    }
    return out;
}

inline SolutionModule solve_homogeneous_mod(const IntMatrix& m, std::int64_t r) {
    if (r < 2) throw std::invalid_argument("modulus must be at least 2");
    if (r > 1000000000) throw std::invalid_argument("modulus too large");

    const SNFResult s = smith_normal_form(m, true);
    const IntMatrix& rt = *s.right;
    const std::size_t cols = m.cols();
    const std::size_t k = s.factors.size();

    // Substituting x = right * y turns the system into d_i y_i = 0 (mod r),
    // one constraint per diagonal entry, with y otherwise free.
    SolutionModule out;
    out.modulus = r;
    for (std::size_t i = 0; i < cols; ++i) {
        const Int d = i < k ? s.factors[i] : Int(0);
        const Int g_big = d == 0 ? Int(r) : gcd(d, Int(r));
        const std::int64_t g = g_big.convert_to<std::int64_t>();
        out.cardinality *= g;
        if (g == r) ++out.rank_free;
        if (g == 1) continue;
        const std::int64_t step = r / g;
        std::vector<std::int64_t> gen(cols);
        for (std::size_t row = 0; row < cols; ++row) {
            Int v = (rt(row, i) * step) % r;
            if (v < 0) v += r;
            gen[row] = v.convert_to<std::int64_t>();
        }
        out.generators.push_back(std::move(gen));
        out.orders.push_back(g);
    }
    return out;
}

}  // namespace foxlink
