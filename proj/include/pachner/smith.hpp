#pragma once

#include "pachner/matrix.hpp"

#include <vector>

namespace pachner {

/// Smith decomposition u * a * v = d with u, v unimodular and d diagonal,
/// nonnegative, with d1 | d2 | ... .
struct SmithForm {
    IntegerMatrix u;  // rows x rows
    IntegerMatrix d;  // rows x cols
    IntegerMatrix v;  // cols x cols

    int rank() const {
        int r = 0;
        int n = d.rows() < d.cols() ? d.rows() : d.cols();
        for (int i = 0; i < n; ++i)
            if (d.at(i, i) != 0)
                ++r;
        return r;
    }

    /// Nonzero diagonal entries, in divisibility order.
    std::vector<Int> divisors() const {
        std::vector<Int> out;
        int n = d.rows() < d.cols() ? d.rows() : d.cols();
        for (int i = 0; i < n; ++i)
            if (d.at(i, i) != 0)
                out.push_back(d.at(i, i));
        return out;
    }
};

namespace detail {

inline Int abs_int(const Int& x) { return x < 0 ? -x : x; }

}  // namespace detail

/// Minimal-absolute-value pivoting Smith reduction.  Every step is an
/// elementary unimodular row/column operation mirrored into u or v.
inline SmithForm smith_normal_form(const IntegerMatrix& a) {
    IntegerMatrix d = a;
    IntegerMatrix u = IntegerMatrix::identity(a.rows());
    IntegerMatrix v = IntegerMatrix::identity(a.cols());
    const int n = d.rows() < d.cols() ? d.rows() : d.cols();

    for (int t = 0; t < n; ++t) {
        // Find a nonzero entry of minimal absolute value in the submatrix.
        int pi = -1, pj = -1;
        for (int i = t; i < d.rows(); ++i)
            for (int j = t; j < d.cols(); ++j)
                if (d.at(i, j) != 0 &&
                    (pi < 0 || detail::abs_int(d.at(i, j)) < detail::abs_int(d.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0)
            break;  // submatrix is zero
        if (pi != t) {
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
        }
        if (pj != t) {
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
        }

        for (;;) {
            // Clear the pivot column.
            bool reduced = true;
            for (int i = t + 1; i < d.rows(); ++i) {
                if (d.at(i, t) == 0)
                    continue;
                Int q = d.at(i, t) / d.at(t, t);
                d.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (d.at(i, t) != 0) {
                    // Remainder strictly smaller than the pivot: promote it.
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    reduced = false;
                }
            }
            if (!reduced)
                continue;
            // Clear the pivot row.
            for (int j = t + 1; j < d.cols(); ++j) {
                if (d.at(t, j) == 0)
                    continue;
                Int q = d.at(t, j) / d.at(t, t);
                d.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (d.at(t, j) != 0) {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                    reduced = false;
                }
            }
            if (reduced)
                break;
        }

        // Divisibility: the pivot must divide every remaining entry.
        bool redo = false;
        for (int i = t + 1; i < d.rows() && !redo; ++i)
            for (int j = t + 1; j < d.cols() && !redo; ++j)
                if (d.at(i, j) % d.at(t, t) != 0) {
                    d.add_row_multiple(t, i, Int(1));
                    u.add_row_multiple(t, i, Int(1));
                    redo = true;
                }
        if (redo) {
            --t;  // re-run the elimination at this pivot position
            continue;
        }

        if (d.at(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    return {u, d, v};
}

}  // namespace pachner
