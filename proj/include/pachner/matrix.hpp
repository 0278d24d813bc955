#pragma once

#include "pachner/coeff.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pachner {

/// Dense matrix over the exact integers.  Row/column operations are the
/// elementary unimodular ones used by the Smith reduction.
class IntegerMatrix {
public:
    IntegerMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Int(0)) {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("IntegerMatrix: negative dimension");
    }

    static IntegerMatrix identity(int n) {
        IntegerMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[index(i, j)]; }
    const Int& at(int i, int j) const { return a_[index(i, j)]; }

    bool is_zero() const {
        for (const Int& x : a_)
            if (x != 0)
                return false;
        return true;
    }

    void swap_rows(int i, int j) {
        for (int c = 0; c < cols_; ++c)
            std::swap(at(i, c), at(j, c));
    }
    void swap_cols(int i, int j) {
        for (int r = 0; r < rows_; ++r)
            std::swap(at(r, i), at(r, j));
    }
    /// row i += q * row j
    void add_row_multiple(int i, int j, const Int& q) {
        for (int c = 0; c < cols_; ++c)
            at(i, c) += q * at(j, c);
    }
    /// col i += q * col j
    void add_col_multiple(int i, int j, const Int& q) {
        for (int r = 0; r < rows_; ++r)
            at(r, i) += q * at(r, j);
    }
    void negate_row(int i) {
        for (int c = 0; c < cols_; ++c)
            at(i, c) = -at(i, c);
    }
    void negate_col(int j) {
        for (int r = 0; r < rows_; ++r)
            at(r, j) = -at(r, j);
    }

    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const IntegerMatrix& a, const IntegerMatrix& b) { return !(a == b); }

private:
    std::size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("IntegerMatrix: index out of range");
        return static_cast<std::size_t>(i) * cols_ + j;
    }

    int rows_, cols_;
    std::vector<Int> a_;
};

inline IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("multiply: shape mismatch");
    IntegerMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0)
                continue;
            for (int j = 0; j < b.cols(); ++j)
                out.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return out;
}

/// Exact determinant by fraction-free (Bareiss) elimination.  Used as the
/// independent unimodularity check on Smith transforms.
inline Int bareiss_determinant(IntegerMatrix m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: matrix not square");
    int n = m.rows();
    if (n == 0)
        return Int(1);
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0)
                return Int(0);
            m.swap_rows(k, pivot);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

inline std::string to_string(const IntegerMatrix& m) {
    std::string out;
    for (int i = 0; i < m.rows(); ++i) {
        out += i ? "; " : "";
        for (int j = 0; j < m.cols(); ++j) {
            if (j)
                out += " ";
            out += m.at(i, j).str();
        }
    }
    return "[" + out + "]";
}

}  // namespace pachner
