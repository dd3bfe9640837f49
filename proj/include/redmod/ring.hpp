#pragma once

// Finite commutative unital rings presented as free Z/n-algebras: a basis
// e_1..e_b, a structure-constant table for the products e_i*e_j, and the
// coordinates of 1. Construction validates commutativity, associativity and
// unitality exhaustively over basis triples (O(b^3) products, fine at the
// ranks used here).
//
// Direct products are collapsed onto a free basis through CRT: for each
// prime p dividing the combined modulus, the p-primary slots of the factors
// are matched up one per new basis element. A product whose additive group
// is not free over Z/lcm (for example F2 x Z/4) admits no such basis and is
// rejected at construction.

#include "redmod/howell.hpp"

#include <map>
#include <memory>
#include <numeric>
#include <string>

namespace redmod {

// Ring elements are coordinate rows over Z/n; the owning context (ideal,
// module, check) carries the ring.
class FiniteRing {
  public:
    FiniteRing() = default;

    FiniteRing(u64 n, size_t rank, std::vector<std::vector<Row>> sc, Row one, std::string name)
        : n_(n), rank_(rank), sc_(std::move(sc)), one_(std::move(one)), name_(std::move(name)) {
        check_modulus(n_);
        validate();
        build_mult_tables();
    }

    u64 modulus() const { return n_; }
    size_t rank() const { return rank_; }
    const std::string& name() const { return name_; }
    const Row& one() const { return one_; }
    const std::vector<Row>& component_idempotents() const { return comp_idem_; }

    u64 order() const {
        u64 o = 1;
        for (size_t i = 0; i < rank_; ++i)
            o = checked_mul_u64(o, n_, "ring order overflow");
        return o;
    }

    Row zero_row() const { return Row(rank_, 0); }

    Row basis_row(size_t i) const {
        Row r(rank_, 0);
        r[i] = 1 % n_;
        return r;
    }

    Row mul(const Row& x, const Row& y) const {
        Row out(rank_, 0);
        for (size_t i = 0; i < rank_; ++i) {
            if (x[i] == 0)
                continue;
            for (size_t j = 0; j < rank_; ++j) {
                if (y[j] == 0)
                    continue;
                u64 c = mulmod(x[i], y[j], n_);
                row_add_scaled(out, sc_[i][j], c, n_);
            }
        }
        return out;
    }

    Row add(const Row& x, const Row& y) const { return row_add(x, y, n_); }
    Row sub(const Row& x, const Row& y) const { return row_sub(x, y, n_); }

    Row pow(Row x, u64 e) const {
        Row r = one_;
        while (e > 0) {
            if (e & 1)
                r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }

    // Matrix of left multiplication by a on the regular module: row k is
    // the coordinate row of e_k * a.
    ResidueMatrix mult_matrix(const Row& a) const {
        ResidueMatrix m(n_, rank_, rank_);
        for (size_t k = 0; k < rank_; ++k)
            m.set_row(k, mul(basis_row(k), a));
        return m;
    }

    const ResidueMatrix& basis_mult_matrix(size_t i) const { return basis_mult_[i]; }

    bool is_unit(const Row& x) const {
        // x is a unit iff left multiplication is surjective
        return howell_form(mult_matrix(x)).is_full();
    }

    std::vector<Row> elements(u64 cap = 1u << 20) const {
        if (order() > cap)
            throw std::runtime_error("ring element enumeration bound exceeded");
        std::vector<Row> out;
        Row counter(rank_, 0);
        while (true) {
            out.push_back(counter);
            size_t i = 0;
            while (i < rank_ && ++counter[i] == n_)
                counter[i++] = 0;
            if (i == rank_)
                break;
        }
        return out;
    }

    friend bool operator==(const FiniteRing& a, const FiniteRing& b) {
        return a.n_ == b.n_ && a.rank_ == b.rank_ && a.sc_ == b.sc_ && a.one_ == b.one_;
    }

    void set_component_idempotents(std::vector<Row> rows) { comp_idem_ = std::move(rows); }

  private:
    void validate() const {
        if (rank_ == 0)
            throw std::invalid_argument("ring rank must be positive");
        if (sc_.size() != rank_ || one_.size() != rank_)
            throw std::invalid_argument("ring tables have wrong shape");
        for (const auto& rowv : sc_) {
            if (rowv.size() != rank_)
                throw std::invalid_argument("ring tables have wrong shape");
            for (const auto& r : rowv)
                if (r.size() != rank_)
                    throw std::invalid_argument("ring tables have wrong shape");
        }
        for (size_t i = 0; i < rank_; ++i)
            for (size_t j = 0; j < rank_; ++j)
                if (sc_[i][j] != sc_[j][i])
                    throw std::invalid_argument("structure constants are not commutative");
        // associativity on basis triples: (e_i e_j) e_k == e_i (e_j e_k)
        for (size_t i = 0; i < rank_; ++i)
            for (size_t j = 0; j < rank_; ++j)
                for (size_t k = 0; k < rank_; ++k) {
                    Row lhs = raw_mul(sc_[i][j], basis_unit(k));
                    Row rhs = raw_mul(basis_unit(i), sc_[j][k]);
                    if (lhs != rhs)
                        throw std::invalid_argument("structure constants are not associative");
                }
        for (size_t i = 0; i < rank_; ++i)
            if (raw_mul(one_, basis_unit(i)) != basis_unit(i))
                throw std::invalid_argument("unit row does not act as identity");
    }

    Row basis_unit(size_t i) const {
        Row r(rank_, 0);
        r[i] = 1 % n_;
        return r;
    }

    Row raw_mul(const Row& x, const Row& y) const {
        Row out(rank_, 0);
        for (size_t i = 0; i < rank_; ++i)
            for (size_t j = 0; j < rank_; ++j) {
                if (x[i] == 0 || y[j] == 0)
                    continue;
                row_add_scaled(out, sc_[i][j], mulmod(x[i], y[j], n_), n_);
            }
        return out;
    }

    void build_mult_tables() {
        basis_mult_.clear();
        for (size_t i = 0; i < rank_; ++i) {
            ResidueMatrix m(n_, rank_, rank_);
            for (size_t k = 0; k < rank_; ++k)
                m.set_row(k, sc_[k][i]);
            basis_mult_.push_back(std::move(m));
        }
    }

    u64 n_ = 2;
    size_t rank_ = 1;
    std::vector<std::vector<Row>> sc_;
    Row one_;
    std::string name_;
    std::vector<Row> comp_idem_;
    std::vector<ResidueMatrix> basis_mult_;
};

// ---- constructors ---------------------------------------------------------

inline FiniteRing make_zn(u64 n) {
    check_modulus(n);
    return FiniteRing(n, 1, {{{1 % n}}}, {1 % n}, "Z/" + std::to_string(n));
}

inline FiniteRing make_gf(u64 p) {
    if (!is_prime_u64(p))
        throw std::invalid_argument("GF(p): " + std::to_string(p) + " is not prime");
    return FiniteRing(p, 1, {{{1 % p}}}, {1 % p}, "F" + std::to_string(p));
}

// (Z/n)[x]/(f) with f monic, coefficients listed from the constant term up.
inline FiniteRing make_poly_quotient(u64 n, const std::vector<u64>& f_coeffs) {
    check_modulus(n);
    if (f_coeffs.size() < 2)
        throw std::invalid_argument("poly quotient: modulus polynomial must have degree >= 1");
    size_t d = f_coeffs.size() - 1;
    if (f_coeffs[d] % n != 1 % n)
        throw std::invalid_argument("poly quotient: modulus polynomial must be monic");
    // reductions of x^d .. x^(2d-2) modulo f
    std::vector<Row> xpow(2 * d - 1, Row(d, 0));
    for (size_t i = 0; i < d; ++i)
        xpow[i][i] = 1 % n;
    for (size_t e = d; e < 2 * d - 1; ++e) {
        // x^e = x * x^(e-1), then reduce the overflow coefficient via
        // x^d = -(f_0 + f_1 x + ... + f_{d-1} x^{d-1})
        Row shifted(d + 1, 0);
        for (size_t i = 0; i < d; ++i)
            shifted[i + 1] = xpow[e - 1][i];
        u64 top = shifted[d];
        Row red(d, 0);
        for (size_t i = 0; i < d; ++i)
            red[i] = submod(shifted[i], mulmod(top, f_coeffs[i] % n, n), n);
        xpow[e] = red;
    }
    std::vector<std::vector<Row>> sc(d, std::vector<Row>(d));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            sc[i][j] = xpow[i + j];
    Row one(d, 0);
    one[0] = 1 % n;
    std::string name = "(Z/" + std::to_string(n) + ")[x]/(f), deg f = " + std::to_string(d);
    return FiniteRing(n, d, std::move(sc), std::move(one), name);
}

namespace detail {

struct ProductLayout {
    u64 n = 1;                                   // combined modulus
    size_t k = 0;                                // free rank
    std::vector<std::pair<u64, int>> primes;     // factorization of n
    // slot_of[p_index][t] = (component, basis index) feeding basis element t
    std::vector<std::vector<std::pair<size_t, size_t>>> slot_of;
};

inline ProductLayout product_layout(const std::vector<FiniteRing>& comps) {
    ProductLayout lay;
    for (const auto& c : comps)
        lay.n = lcm_checked(lay.n == 1 ? c.modulus() : lay.n, c.modulus());
    lay.primes = factorize(lay.n);
    for (auto [p, a] : lay.primes) {
        std::vector<std::pair<size_t, size_t>> slots;
        for (size_t ci = 0; ci < comps.size(); ++ci) {
            u64 m = comps[ci].modulus();
            if (m % p != 0)
                continue;
            int v = 0;
            u64 mm = m;
            while (mm % p == 0) {
                mm /= p;
                ++v;
            }
            if (v != a)
                throw std::invalid_argument(
                    "product ring is not a free Z/n-algebra: component moduli mix "
                    "different powers of " + std::to_string(p));
            for (size_t j = 0; j < comps[ci].rank(); ++j)
                slots.emplace_back(ci, j);
        }
        if (lay.slot_of.empty())
            lay.k = slots.size();
        else if (slots.size() != lay.k)
            throw std::invalid_argument(
                "product ring is not a free Z/n-algebra: primary ranks differ");
        lay.slot_of.push_back(std::move(slots));
    }
    return lay;
}

// component coordinate tuples <-> free coordinates over Z/n
inline std::vector<Row> from_free(const ProductLayout& lay, const std::vector<FiniteRing>& comps,
                                  const Row& a) {
    std::vector<Row> out;
    for (size_t ci = 0; ci < comps.size(); ++ci)
        out.push_back(Row(comps[ci].rank(), 0));
    for (size_t ci = 0; ci < comps.size(); ++ci) {
        u64 m = comps[ci].modulus();
        for (size_t j = 0; j < comps[ci].rank(); ++j) {
            std::vector<std::pair<u64, u64>> congr;
            for (size_t pi = 0; pi < lay.primes.size(); ++pi) {
                auto [p, e] = lay.primes[pi];
                if (m % p != 0)
                    continue;
                u64 pk = 1;
                for (int t = 0; t < e; ++t)
                    pk *= p;
                // find which t this slot feeds
                for (size_t t = 0; t < lay.k; ++t)
                    if (lay.slot_of[pi][t] == std::make_pair(ci, j))
                        congr.emplace_back(a[t] % pk, pk);
            }
            out[ci][j] = crt_combine(congr);
        }
    }
    return out;
}

inline Row to_free(const ProductLayout& lay, const std::vector<FiniteRing>& comps,
                   const std::vector<Row>& comp_coords) {
    Row a(lay.k, 0);
    for (size_t t = 0; t < lay.k; ++t) {
        std::vector<std::pair<u64, u64>> congr;
        for (size_t pi = 0; pi < lay.primes.size(); ++pi) {
            auto [p, e] = lay.primes[pi];
            u64 pk = 1;
            for (int tt = 0; tt < e; ++tt)
                pk *= p;
            auto [ci, j] = lay.slot_of[pi][t];
            congr.emplace_back(comp_coords[ci][j] % pk, pk);
        }
        a[t] = crt_combine(congr);
    }
    return a;
}

} // namespace detail

inline FiniteRing make_product(const std::vector<FiniteRing>& comps) {
    if (comps.empty())
        throw std::invalid_argument("product of zero rings is the zero ring, which is rejected");
    if (comps.size() == 1)
        return comps.front();
    auto lay = detail::product_layout(comps);
    auto mul_comp = [&](const std::vector<Row>& x, const std::vector<Row>& y) {
        std::vector<Row> z;
        for (size_t ci = 0; ci < comps.size(); ++ci)
            z.push_back(comps[ci].mul(x[ci], y[ci]));
        return z;
    };
    std::vector<std::vector<Row>> sc(lay.k, std::vector<Row>(lay.k));
    for (size_t s = 0; s < lay.k; ++s) {
        Row es(lay.k, 0);
        es[s] = 1 % lay.n;
        auto xs = detail::from_free(lay, comps, es);
        for (size_t t = 0; t < lay.k; ++t) {
            Row et(lay.k, 0);
            et[t] = 1 % lay.n;
            auto yt = detail::from_free(lay, comps, et);
            sc[s][t] = detail::to_free(lay, comps, mul_comp(xs, yt));
        }
    }
    std::vector<Row> units;
    for (const auto& c : comps)
        units.push_back(c.one());
    Row one = detail::to_free(lay, comps, units);
    std::string name;
    for (size_t ci = 0; ci < comps.size(); ++ci) {
        if (ci)
            name += " x ";
        name += comps[ci].name();
    }
    FiniteRing r(lay.n, lay.k, std::move(sc), std::move(one), name);
    // stash the idempotents (0,..,1,..,0) so products stay easy to address
    std::vector<Row> idems;
    for (size_t ci = 0; ci < comps.size(); ++ci) {
        std::vector<Row> tuple;
        for (size_t cj = 0; cj < comps.size(); ++cj)
            tuple.push_back(cj == ci ? comps[cj].one() : comps[cj].zero_row());
        idems.push_back(detail::to_free(lay, comps, tuple));
    }
    r.set_component_idempotents(std::move(idems));
    return r;
}

} // namespace redmod
