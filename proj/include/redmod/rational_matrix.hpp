#pragma once

// Exact linear algebra over Q for the characteristic-zero backend.
//
// The elimination phase runs fraction-free (Bareiss) on an integer matrix
// obtained by clearing denominators per row; intermediate entries are exact
// big integers and each step divides exactly by the previous pivot. Kernel
// vectors are then recovered by rational back substitution.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace redmod {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using QRow = std::vector<Rational>;

class RationalMatrix {
  public:
    RationalMatrix() = default;
    RationalMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RationalMatrix from_rows(const std::vector<QRow>& rows) {
        size_t cols = rows.empty() ? 0 : rows.front().size();
        RationalMatrix m(rows.size(), cols);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw std::invalid_argument("from_rows: ragged rows");
            for (size_t j = 0; j < cols; ++j)
                m.at(i, j) = rows[i][j];
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    QRow row(size_t i) const { return QRow(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

    QRow apply(const QRow& x) const { // x * this
        if (x.size() != rows_)
            throw std::invalid_argument("apply: dimension mismatch");
        QRow y(cols_, Rational(0));
        for (size_t i = 0; i < rows_; ++i) {
            if (x[i] == 0)
                continue;
            for (size_t j = 0; j < cols_; ++j)
                y[j] += x[i] * at(i, j);
        }
        return y;
    }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

namespace detail {

struct Echelon {
    std::vector<std::vector<BigInt>> m; // fraction-free row echelon
    std::vector<size_t> pivot_cols;     // one per nonzero row, increasing
};

// Bareiss elimination; exact division by the previous pivot keeps entries
// integral and of moderate size.
inline Echelon bareiss_echelon(const RationalMatrix& q) {
    size_t rows = q.rows(), cols = q.cols();
    std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(cols));
    for (size_t i = 0; i < rows; ++i) {
        BigInt lcm = 1;
        for (size_t j = 0; j < cols; ++j)
            lcm = boost::multiprecision::lcm(lcm, denominator(q.at(i, j)));
        for (size_t j = 0; j < cols; ++j)
            m[i][j] = numerator(q.at(i, j)) * (lcm / denominator(q.at(i, j)));
    }
    Echelon e;
    BigInt prev_pivot = 1;
    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows; ++col) {
        size_t sel = r;
        while (sel < rows && m[sel][col] == 0)
            ++sel;
        if (sel == rows)
            continue;
        std::swap(m[r], m[sel]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = col + 1; j < cols; ++j) {
                BigInt t = m[r][col] * m[i][j] - m[i][col] * m[r][j];
                m[i][j] = t / prev_pivot; // exact by the Bareiss identity
            }
            m[i][col] = 0;
        }
        prev_pivot = m[r][col];
        e.pivot_cols.push_back(col);
        ++r;
    }
    m.resize(r);
    e.m = std::move(m);
    return e;
}

} // namespace detail

inline size_t rational_rank(const RationalMatrix& q) {
    return detail::bareiss_echelon(q).pivot_cols.size();
}

// Basis of {x : x*A = 0}. Works on the transpose so the echelon solves the
// row-kernel; one kernel vector per non-pivot row of A.
inline std::vector<QRow> rational_kernel(const RationalMatrix& a) {
    size_t rows = a.rows(), cols = a.cols();
    RationalMatrix t(cols, rows);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            t.at(j, i) = a.at(i, j);
    detail::Echelon e = detail::bareiss_echelon(t);
    std::vector<bool> is_pivot(rows, false);
    for (size_t c : e.pivot_cols)
        is_pivot[c] = true;
    std::vector<QRow> basis;
    for (size_t free = 0; free < rows; ++free) {
        if (is_pivot[free])
            continue;
        QRow x(rows, Rational(0));
        x[free] = 1;
        // back substitution over the echelon rows of the transpose
        for (size_t k = e.pivot_cols.size(); k-- > 0;) {
            size_t pc = e.pivot_cols[k];
            Rational acc(0);
            for (size_t j = pc + 1; j < rows; ++j)
                if (x[j] != 0)
                    acc += Rational(e.m[k][j]) * x[j];
            x[pc] = -acc / Rational(e.m[k][pc]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

// Membership of v in the row space of `a` (rank comparison).
inline bool in_row_space(const RationalMatrix& a, const QRow& v) {
    size_t rank0 = rational_rank(a);
    RationalMatrix b(a.rows() + 1, a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            b.at(i, j) = a.at(i, j);
    for (size_t j = 0; j < a.cols(); ++j)
        b.at(a.rows(), j) = v[j];
    return rational_rank(b) == rank0;
}

// Reduced row echelon form; canonical for a given row space.
inline RationalMatrix rational_rref(const RationalMatrix& a) {
    size_t rows = a.rows(), cols = a.cols();
    std::vector<QRow> m;
    for (size_t i = 0; i < rows; ++i)
        m.push_back(a.row(i));
    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows; ++col) {
        size_t sel = r;
        while (sel < rows && m[sel][col] == 0)
            ++sel;
        if (sel == rows)
            continue;
        std::swap(m[r], m[sel]);
        Rational p = m[r][col];
        for (size_t j = 0; j < cols; ++j)
            m[r][j] /= p;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][col] == 0)
                continue;
            Rational f = m[i][col];
            for (size_t j = 0; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    m.resize(r);
    if (r == 0)
        return RationalMatrix(0, cols);
    return RationalMatrix::from_rows(m);
}

} // namespace redmod
