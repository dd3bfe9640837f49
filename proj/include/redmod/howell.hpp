#pragma once

// Howell normal form over Z/n.
//
// The Howell form is the canonical echelon form for row modules over Z/n:
// pivots divide n, entries above a pivot are reduced modulo that pivot, and
// the span satisfies the Howell property (every member whose leading index
// is >= j lies in the span of the basis rows with leading index >= j).
// Two row sets span the same module iff their Howell forms are identical,
// which makes submodule equality, membership and canonical coset
// representatives all cheap. Smith form does not give membership over Z/n;
// Howell does, hence the choice.

#include "redmod/residue_matrix.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

namespace redmod {

class HowellBasis {
  public:
    HowellBasis() = default;

    HowellBasis(u64 n, size_t ambient) : mod_(n), ambient_(ambient) { check_modulus(n); }

    static HowellBasis of_rows(u64 n, size_t ambient, const std::vector<Row>& rows) {
        HowellBasis h(n, ambient);
        h.rows_ = howellize(n, ambient, rows);
        return h;
    }

    u64 modulus() const { return mod_; }
    size_t ambient_rank() const { return ambient_; }
    const std::vector<Row>& rows() const { return rows_; }
    size_t row_count() const { return rows_.size(); }
    bool is_zero() const { return rows_.empty(); }

    bool is_full() const {
        if (rows_.size() != ambient_)
            return false;
        for (size_t i = 0; i < rows_.size(); ++i)
            if (leading_index(rows_[i]) != i || rows_[i][i] != 1 % mod_)
                return false;
        return true;
    }

    static HowellBasis full(u64 n, size_t ambient) {
        return of_rows(n, ambient, ResidueMatrix::identity(n, ambient).row_list());
    }

    // Canonical coset representative of v modulo the span.
    Row reduce(const Row& v) const {
        if (v.size() != ambient_)
            throw std::invalid_argument("reduce: ambient mismatch");
        Row w = v;
        row_reduce_inplace(w, mod_);
        for (const Row& r : rows_) {
            size_t j = leading_index(r);
            u64 g = r[j];
            if (w[j] >= g)
                row_sub_scaled(w, r, w[j] / g, mod_);
        }
        return w;
    }

    bool contains(const Row& v) const { return row_is_zero(reduce(v)); }

    bool contains_all(const std::vector<Row>& vs) const {
        for (const Row& v : vs)
            if (!contains(v))
                return false;
        return true;
    }

    // Number of elements in the spanned row module: product of n/pivot.
    u64 span_size() const {
        u64 s = 1;
        for (const Row& r : rows_)
            s = checked_mul_u64(s, mod_ / r[leading_index(r)], "span_size overflow");
        return s;
    }

    HowellBasis sum(const HowellBasis& o) const {
        require_compatible(o);
        std::vector<Row> rs = rows_;
        rs.insert(rs.end(), o.rows_.begin(), o.rows_.end());
        return of_rows(mod_, ambient_, rs);
    }

    // Intersection via the kernel of the stacked matrix [A; B]:
    // u*A + v*B = 0 gives u*A = -v*B in the intersection, and every
    // intersection element arises this way.
    HowellBasis intersect(const HowellBasis& o) const;

    // All elements of the span; guarded by `cap`.
    std::vector<Row> elements(u64 cap = UINT64_MAX) const {
        u64 size = span_size();
        if (size > cap)
            throw std::runtime_error("span enumeration bound exceeded: " + std::to_string(size));
        std::vector<Row> out;
        out.reserve(size);
        std::vector<u64> radix, counter(rows_.size(), 0);
        for (const Row& r : rows_)
            radix.push_back(mod_ / r[leading_index(r)]);
        Row zero(ambient_, 0);
        while (true) {
            Row v = zero;
            for (size_t i = 0; i < rows_.size(); ++i)
                if (counter[i] != 0)
                    row_add_scaled(v, rows_[i], counter[i], mod_);
            out.push_back(std::move(v));
            size_t i = 0;
            while (i < counter.size() && ++counter[i] == radix[i])
                counter[i++] = 0;
            if (i == counter.size())
                break;
        }
        if (rows_.empty())
            return {zero};
        return out;
    }

    friend bool operator==(const HowellBasis&, const HowellBasis&) = default;

    // Stable key for hashing/deduplication of spans.
    std::string key() const {
        std::string k;
        k.reserve(rows_.size() * ambient_ * 3);
        for (const Row& r : rows_)
            for (u64 v : r) {
                k += std::to_string(v);
                k += ',';
            }
        return k;
    }

  private:
    void require_compatible(const HowellBasis& o) const {
        if (mod_ != o.mod_ || ambient_ != o.ambient_)
            throw std::invalid_argument("howell: incompatible spans");
    }

    // Inserts v into the echelon structure, combining with an existing pivot
    // row via extended gcd when the leading column is occupied. All row
    // operations are invertible over Z/n, so the span is preserved.
    static void insert_row(std::map<size_t, Row>& piv, Row v, u64 n) {
        row_reduce_inplace(v, n);
        while (true) {
            size_t j = leading_index(v);
            if (j == v.size())
                return;
            auto it = piv.find(j);
            if (it == piv.end()) {
                piv.emplace(j, std::move(v));
                return;
            }
            Row& u = it->second;
            u64 a = u[j], b = v[j];
            Egcd e = egcd(static_cast<i64>(a), static_cast<i64>(b));
            u64 g = static_cast<u64>(e.g);
            u64 s = to_residue(e.s, n), t = to_residue(e.t, n);
            Row nu(u.size()), nv(u.size());
            for (size_t c = 0; c < u.size(); ++c) {
                nu[c] = addmod(mulmod(s, u[c], n), mulmod(t, v[c], n), n);
                nv[c] = submod(mulmod(b / g, u[c], n), mulmod(a / g, v[c], n), n);
            }
            // the 2x2 transformation [[s,t],[b/g,-a/g]] has unit determinant,
            // so the span is unchanged; nv vanishes at column j
            u = std::move(nu);
            v = std::move(nv);
        }
    }

    static std::vector<Row> snapshot(const std::map<size_t, Row>& piv) {
        std::vector<Row> out;
        out.reserve(piv.size());
        for (const auto& [j, r] : piv)
            out.push_back(r);
        return out;
    }

    static std::vector<Row> howellize(u64 n, size_t ambient, const std::vector<Row>& input) {
        std::map<size_t, Row> piv;
        for (const Row& r : input) {
            if (r.size() != ambient)
                throw std::invalid_argument("howell: inconsistent row length");
            insert_row(piv, r, n);
        }
        // Howell closure: for each pivot a at column j, the multiple
        // (n/gcd(a,n)) * row vanishes at j and must lie in the span of the
        // later rows; inserting it enforces the Howell property.
        while (true) {
            std::vector<Row> before = snapshot(piv);
            for (const Row& r : before) {
                size_t j = leading_index(r);
                if (j == r.size())
                    continue;
                u64 g = std::gcd(r[j], n);
                if (g == 1)
                    continue; // unit pivot, annihilator multiple is zero
                insert_row(piv, row_scaled(r, n / g, n), n);
            }
            if (snapshot(piv) == before)
                break;
        }
        // normalise pivots to divisors of n
        for (auto& [j, r] : piv) {
            u64 g = std::gcd(r[j], n);
            if (r[j] != g)
                r = row_scaled(r, unit_lifting(r[j], n), n);
        }
        // reduce entries above each pivot modulo the pivot
        std::vector<size_t> cols;
        for (const auto& [j, r] : piv)
            cols.push_back(j);
        for (size_t j : cols) {
            const Row prow = piv.at(j);
            u64 g = prow[j];
            for (auto& [j2, r] : piv) {
                if (j2 >= j)
                    continue;
                if (r[j] >= g)
                    row_sub_scaled(r, prow, r[j] / g, n);
            }
        }
        return snapshot(piv); // ordered by pivot column
    }

    u64 mod_ = 2;
    size_t ambient_ = 0;
    std::vector<Row> rows_;
};

inline HowellBasis howell_form(const ResidueMatrix& m) {
    return HowellBasis::of_rows(m.modulus(), m.cols(), m.row_list());
}

// Kernel of x -> x*m as a Howell basis in (Z/n)^rows(m).
// Computed from the Howell form of [m | I]: rows whose left block vanishes
// carry kernel generators in the right block, and the Howell property of
// the combined form makes them a Howell basis of the full kernel.
inline HowellBasis kernel(const ResidueMatrix& m) {
    u64 n = m.modulus();
    size_t c = m.cols(), r = m.rows();
    std::vector<Row> combined;
    combined.reserve(r);
    for (size_t i = 0; i < r; ++i) {
        Row e(r, 0);
        e[i] = 1 % n;
        combined.push_back(row_concat(m.row(i), e));
    }
    HowellBasis h = HowellBasis::of_rows(n, c + r, combined);
    std::vector<Row> ker;
    for (const Row& row : h.rows()) {
        if (leading_index(row) >= c)
            ker.emplace_back(row.begin() + c, row.end());
    }
    return HowellBasis::of_rows(n, r, ker);
}

inline HowellBasis HowellBasis::intersect(const HowellBasis& o) const {
    require_compatible(o);
    std::vector<Row> stacked = rows_;
    stacked.insert(stacked.end(), o.rows_.begin(), o.rows_.end());
    if (stacked.empty())
        return HowellBasis(mod_, ambient_);
    ResidueMatrix s = ResidueMatrix::from_rows(mod_, ambient_, stacked);
    HowellBasis k = kernel(s);
    std::vector<Row> gens;
    for (const Row& kr : k.rows()) {
        Row v(ambient_, 0);
        for (size_t i = 0; i < rows_.size(); ++i)
            if (kr[i] != 0)
                row_add_scaled(v, rows_[i], kr[i], mod_);
        gens.push_back(std::move(v));
    }
    return of_rows(mod_, ambient_, gens);
}

// Deterministic solution of x*m = b, or nullopt when b is outside the row
// span. Reduces b against the left-block pivots of howell([m | I]) while
// accumulating the transformation coefficients.
inline std::optional<Row> solve(const ResidueMatrix& m, const Row& b) {
    u64 n = m.modulus();
    size_t c = m.cols(), r = m.rows();
    if (b.size() != c)
        throw std::invalid_argument("solve: rhs length mismatch");
    std::vector<Row> combined;
    combined.reserve(r);
    for (size_t i = 0; i < r; ++i) {
        Row e(r, 0);
        e[i] = 1 % n;
        combined.push_back(row_concat(m.row(i), e));
    }
    HowellBasis h = HowellBasis::of_rows(n, c + r, combined);
    Row v = b;
    row_reduce_inplace(v, n);
    Row x(r, 0);
    for (const Row& row : h.rows()) {
        size_t j = leading_index(row);
        if (j >= c)
            break;
        u64 g = row[j];
        if (v[j] == 0)
            continue;
        if (v[j] % g != 0)
            return std::nullopt;
        u64 q = v[j] / g;
        for (size_t t = 0; t < c; ++t)
            v[t] = submod(v[t], mulmod(q, row[t], n), n);
        for (size_t t = 0; t < r; ++t)
            x[t] = addmod(x[t], mulmod(q, row[c + t], n), n);
    }
    if (!row_is_zero(v))
        return std::nullopt;
    return x;
}

// Solutions of the simultaneous conditions x*C_t in span(W_t); the W_t act
// as slack rows. Returns a Howell basis in the x variables.
inline HowellBasis constrained_kernel(u64 n, size_t vars,
                                      const std::vector<ResidueMatrix>& constraints,
                                      const std::vector<const HowellBasis*>& targets) {
    if (constraints.size() != targets.size())
        throw std::invalid_argument("constrained_kernel: mismatched constraint list");
    size_t total_cols = 0, slack_rows = 0;
    for (size_t t = 0; t < constraints.size(); ++t) {
        if (constraints[t].rows() != vars)
            throw std::invalid_argument("constrained_kernel: variable count mismatch");
        total_cols += constraints[t].cols();
        slack_rows += targets[t] ? targets[t]->row_count() : 0;
    }
    ResidueMatrix big(n, vars + slack_rows, total_cols);
    size_t col0 = 0;
    size_t slack0 = vars;
    for (size_t t = 0; t < constraints.size(); ++t) {
        const ResidueMatrix& ct = constraints[t];
        for (size_t i = 0; i < vars; ++i)
            for (size_t j = 0; j < ct.cols(); ++j)
                big.at(i, col0 + j) = ct.at(i, j);
        if (targets[t]) {
            for (const Row& w : targets[t]->rows()) {
                for (size_t j = 0; j < ct.cols(); ++j)
                    big.at(slack0, col0 + j) = w[j];
                ++slack0;
            }
        }
        col0 += ct.cols();
    }
    HowellBasis k = kernel(big);
    std::vector<Row> xs;
    for (const Row& r : k.rows())
        xs.emplace_back(r.begin(), r.begin() + vars);
    return HowellBasis::of_rows(n, vars, xs);
}

// Deterministic x with x*C == b modulo span(W); nullopt when unsolvable.
inline std::optional<Row> constrained_solve(u64 n, const ResidueMatrix& c, const HowellBasis* w,
                                            const Row& b) {
    std::vector<Row> stacked = c.row_list();
    size_t vars = c.rows();
    if (w)
        for (const Row& r : w->rows())
            stacked.push_back(r);
    if (stacked.empty()) {
        Row bb = b;
        row_reduce_inplace(bb, n);
        if (!row_is_zero(bb))
            return std::nullopt;
        return Row{};
    }
    ResidueMatrix s = ResidueMatrix::from_rows(n, c.cols(), stacked);
    auto sol = solve(s, b);
    if (!sol)
        return std::nullopt;
    return Row(sol->begin(), sol->begin() + vars);
}

} // namespace redmod
