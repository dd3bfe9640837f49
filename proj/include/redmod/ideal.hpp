#pragma once

// Ideals of a finite ring, held as Howell bases of their additive span in
// the ring's coordinate module. The span of an ideal is closed under
// multiplication by every basis element, so ideal equality, membership,
// sums, products and powers all reduce to Howell arithmetic.

#include "redmod/ring.hpp"

#include <optional>

namespace redmod {

class Ideal {
  public:
    Ideal() = default;

    static Ideal generate(const FiniteRing& r, const std::vector<Row>& gens) {
        std::vector<Row> closure;
        for (const Row& g : gens) {
            if (g.size() != r.rank())
                throw std::invalid_argument("ideal generator has wrong length");
            for (size_t i = 0; i < r.rank(); ++i)
                closure.push_back(r.mul(g, r.basis_row(i)));
        }
        Ideal id;
        id.ring_ = r;
        id.gens_ = gens;
        id.basis_ = HowellBasis::of_rows(r.modulus(), r.rank(), closure);
        return id;
    }

    static Ideal zero(const FiniteRing& r) { return generate(r, {}); }
    static Ideal unit(const FiniteRing& r) { return generate(r, {r.one()}); }

    static Ideal from_span(const FiniteRing& r, const HowellBasis& span) {
        // accepts a span that is already an ideal; re-closes to be safe
        return generate(r, span.rows());
    }

    const FiniteRing& ring() const { return ring_; }
    const std::vector<Row>& generators() const { return gens_; }
    const HowellBasis& basis() const { return basis_; }

    bool contains(const Row& x) const { return basis_.contains(x); }
    bool contains_ideal(const Ideal& j) const { return basis_.contains_all(j.basis_.rows()); }
    bool is_zero() const { return basis_.is_zero(); }
    bool is_unit_ideal() const { return basis_.contains(ring_.one()); }
    u64 size() const { return basis_.span_size(); }

    std::vector<Row> elements(u64 cap = 1u << 20) const { return basis_.elements(cap); }

    friend bool operator==(const Ideal& a, const Ideal& b) { return a.basis_ == b.basis_; }

  private:
    FiniteRing ring_;
    std::vector<Row> gens_;
    HowellBasis basis_;
};

inline void require_same_ring(const Ideal& a, const Ideal& b) {
    if (!(a.ring() == b.ring()))
        throw std::invalid_argument("ideals live over different rings");
}

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    require_same_ring(a, b);
    std::vector<Row> gens = a.basis().rows();
    for (const Row& r : b.basis().rows())
        gens.push_back(r);
    return Ideal::generate(a.ring(), gens);
}

inline Ideal ideal_product(const Ideal& a, const Ideal& b) {
    require_same_ring(a, b);
    std::vector<Row> gens;
    for (const Row& x : a.basis().rows())
        for (const Row& y : b.basis().rows())
            gens.push_back(a.ring().mul(x, y));
    return Ideal::generate(a.ring(), gens);
}

inline Ideal ideal_power(const Ideal& i, u64 k) {
    if (k == 0)
        return Ideal::unit(i.ring());
    Ideal acc = i;
    for (u64 t = 1; t < k; ++t)
        acc = ideal_product(acc, i);
    return acc;
}

inline bool is_idempotent(const Ideal& i) { return ideal_product(i, i) == i; }

// Least k >= 1 with I^k == I^(k+1); exists because the ring is finite and
// the power chain descends.
inline u64 power_stabilization_index(const Ideal& i) {
    u64 bound = i.ring().order() + 1;
    Ideal cur = i;
    for (u64 k = 1; k <= bound; ++k) {
        Ideal next = ideal_product(cur, i);
        if (next == cur)
            return k;
        cur = next;
    }
    throw std::logic_error("ideal power chain failed to stabilize (bug)");
}

// Does some power r^t land in I? Powers of r cycle, so track visited values.
inline bool is_element_radical_member(const Ideal& i, const Row& r) {
    const FiniteRing& ring = i.ring();
    Row p = r;
    u64 guard = ring.order() + 1;
    for (u64 t = 0; t < guard; ++t) {
        if (i.contains(p))
            return true;
        p = ring.mul(p, r);
    }
    return false;
}

// sqrt(I) = { r : r^t in I for some t }, computed by sweeping the ring.
inline Ideal ideal_radical(const Ideal& i) {
    std::vector<Row> members;
    for (const Row& r : i.ring().elements())
        if (is_element_radical_member(i, r))
            members.push_back(r);
    return Ideal::generate(i.ring(), members);
}

// Searches I for an element e with e^2 = e and (e) = I.
inline std::optional<Row> generated_by_idempotent_element(const Ideal& i) {
    for (const Row& e : i.elements()) {
        if (i.ring().mul(e, e) != e)
            continue;
        if (Ideal::generate(i.ring(), {e}) == i)
            return e;
    }
    return std::nullopt;
}

} // namespace redmod
