#pragma once

// Dense matrices over Z/n, row-major. Row vectors act on the left
// throughout the library: the image of x under A is x*A.

#include "redmod/zn.hpp"

#include <cstddef>
#include <vector>

namespace redmod {

using Row = std::vector<u64>;

inline bool row_is_zero(const Row& r) {
    for (u64 v : r)
        if (v != 0)
            return false;
    return true;
}

inline size_t leading_index(const Row& r) {
    for (size_t j = 0; j < r.size(); ++j)
        if (r[j] != 0)
            return j;
    return r.size();
}

inline void row_reduce_inplace(Row& r, u64 n) {
    for (u64& v : r)
        v %= n;
}

inline Row row_scaled(const Row& r, u64 c, u64 n) {
    Row out(r.size());
    for (size_t j = 0; j < r.size(); ++j)
        out[j] = mulmod(r[j], c % n, n);
    return out;
}

inline void row_add_scaled(Row& dst, const Row& src, u64 c, u64 n) {
    for (size_t j = 0; j < dst.size(); ++j)
        dst[j] = addmod(dst[j], mulmod(src[j], c, n), n);
}

inline void row_sub_scaled(Row& dst, const Row& src, u64 c, u64 n) {
    for (size_t j = 0; j < dst.size(); ++j)
        dst[j] = submod(dst[j], mulmod(src[j], c, n), n);
}

inline Row row_add(const Row& a, const Row& b, u64 n) {
    Row out(a.size());
    for (size_t j = 0; j < a.size(); ++j)
        out[j] = addmod(a[j], b[j], n);
    return out;
}

inline Row row_sub(const Row& a, const Row& b, u64 n) {
    Row out(a.size());
    for (size_t j = 0; j < a.size(); ++j)
        out[j] = submod(a[j], b[j], n);
    return out;
}

inline Row row_concat(const Row& a, const Row& b) {
    Row out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

class ResidueMatrix {
  public:
    ResidueMatrix() = default;

    ResidueMatrix(u64 n, size_t rows, size_t cols)
        : mod_(n), rows_(rows), cols_(cols), a_(rows * cols, 0) {
        check_modulus(n);
    }

    static ResidueMatrix from_rows(u64 n, size_t cols, const std::vector<Row>& rows) {
        ResidueMatrix m(n, rows.size(), cols);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw std::invalid_argument("from_rows: inconsistent row length");
            for (size_t j = 0; j < cols; ++j)
                m.at(i, j) = rows[i][j] % n;
        }
        return m;
    }

    static ResidueMatrix identity(u64 n, size_t k) {
        ResidueMatrix m(n, k, k);
        for (size_t i = 0; i < k; ++i)
            m.at(i, i) = 1 % n;
        return m;
    }

    static ResidueMatrix zero(u64 n, size_t rows, size_t cols) { return {n, rows, cols}; }

    u64 modulus() const { return mod_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    u64& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    u64 at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    Row row(size_t i) const { return Row(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

    std::vector<Row> row_list() const {
        std::vector<Row> rs;
        rs.reserve(rows_);
        for (size_t i = 0; i < rows_; ++i)
            rs.push_back(row(i));
        return rs;
    }

    void set_row(size_t i, const Row& r) {
        for (size_t j = 0; j < cols_; ++j)
            at(i, j) = r[j] % mod_;
    }

    Row apply(const Row& x) const { // x * this
        if (x.size() != rows_)
            throw std::invalid_argument("apply: dimension mismatch");
        Row y(cols_, 0);
        for (size_t i = 0; i < rows_; ++i) {
            if (x[i] == 0)
                continue;
            for (size_t j = 0; j < cols_; ++j)
                y[j] = addmod(y[j], mulmod(x[i], at(i, j), mod_), mod_);
        }
        return y;
    }

    ResidueMatrix mul(const ResidueMatrix& o) const {
        if (cols_ != o.rows_ || mod_ != o.mod_)
            throw std::invalid_argument("mul: dimension or modulus mismatch");
        ResidueMatrix out(mod_, rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                u64 v = at(i, k);
                if (v == 0)
                    continue;
                for (size_t j = 0; j < o.cols_; ++j)
                    out.at(i, j) = addmod(out.at(i, j), mulmod(v, o.at(k, j), mod_), mod_);
            }
        return out;
    }

    ResidueMatrix add(const ResidueMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_ || mod_ != o.mod_)
            throw std::invalid_argument("add: shape mismatch");
        ResidueMatrix out = *this;
        for (size_t i = 0; i < a_.size(); ++i)
            out.a_[i] = addmod(a_[i], o.a_[i], mod_);
        return out;
    }

    ResidueMatrix scaled(u64 c) const {
        ResidueMatrix out = *this;
        for (auto& v : out.a_)
            v = mulmod(v, c % mod_, mod_);
        return out;
    }

    bool is_zero() const {
        for (u64 v : a_)
            if (v != 0)
                return false;
        return true;
    }

    friend bool operator==(const ResidueMatrix&, const ResidueMatrix&) = default;

  private:
    u64 mod_ = 2;
    size_t rows_ = 0, cols_ = 0;
    std::vector<u64> a_;
};

// Block-diagonal matrix with `copies` copies of `b`.
inline ResidueMatrix block_diagonal(const ResidueMatrix& b, size_t copies) {
    ResidueMatrix out(b.modulus(), b.rows() * copies, b.cols() * copies);
    for (size_t c = 0; c < copies; ++c)
        for (size_t i = 0; i < b.rows(); ++i)
            for (size_t j = 0; j < b.cols(); ++j)
                out.at(c * b.rows() + i, c * b.cols() + j) = b.at(i, j);
    return out;
}

} // namespace redmod
