#pragma once

// Ext and Tor from truncated free resolutions, and local (co)homology as
// their stabilized (co)limits. For a finite ring the ideal powers
// stabilize, so the systems Ext(R/I^k, M) and Tor(R/I^k, M) are eventually
// literally constant; the colimit/limit is the value at the stabilization
// index. Values above the resolution truncation are refused, never
// reported as zero.

#include "redmod/resolution.hpp"
#include "redmod/torsion.hpp"

namespace redmod {

namespace detail {

// Hom(F_q, M) = M^{rank_q} with the pointwise action.
inline FinModule power_module(const FinModule& m, size_t copies) {
    FinModule acc = FinModule::zero(m.ring());
    for (size_t i = 0; i < copies; ++i)
        acc = direct_sum(acc, m);
    return acc;
}

// Map M^{rank_{q-1}} -> M^{rank_q} induced by d_q: block (t, s) is the
// action of the ring entry d_q[s][t] on M (phi goes to phi after d_q).
inline ResidueMatrix hom_induced(const FinModule& m, const RingMatrix& d) {
    u64 n = m.ring().modulus();
    size_t c = m.crank();
    ResidueMatrix out(n, d.cols * c, d.rows * c);
    for (size_t s = 0; s < d.rows; ++s)
        for (size_t t = 0; t < d.cols; ++t) {
            ResidueMatrix a = m.action_of(d.at(s, t));
            for (size_t x = 0; x < c; ++x)
                for (size_t y = 0; y < c; ++y)
                    out.at(t * c + x, s * c + y) = a.at(x, y);
        }
    return out;
}

// Map M^{rank_q} -> M^{rank_{q-1}} induced by d_q tensored with M:
// block (s, t) is the action of d_q[s][t].
inline ResidueMatrix tensor_induced(const FinModule& m, const RingMatrix& d) {
    u64 n = m.ring().modulus();
    size_t c = m.crank();
    ResidueMatrix out(n, d.rows * c, d.cols * c);
    for (size_t s = 0; s < d.rows; ++s)
        for (size_t t = 0; t < d.cols; ++t) {
            ResidueMatrix a = m.action_of(d.at(s, t));
            for (size_t x = 0; x < c; ++x)
                for (size_t y = 0; y < c; ++y)
                    out.at(s * c + x, t * c + y) = a.at(x, y);
        }
    return out;
}

// Subquotient ker/im inside an ambient module, as a standalone module.
inline FinModule homology_at(const FinModule& ambient, const HowellBasis& cycles,
                             const HowellBasis& boundaries) {
    std::vector<ResidueMatrix> acts;
    for (size_t i = 0; i < ambient.ring().rank(); ++i)
        acts.push_back(ambient.action(i));
    HowellBasis rel = boundaries.sum(ambient.relations());
    return present_subquotient(ambient.ring(), ambient.crank(), rel, acts, cycles.rows(), nullptr)
        .mod;
}

} // namespace detail

// Ext^q(A, M) from a free resolution of A. Requires q < resolution length.
inline FinModule ext(size_t q, const FreeResolution& res, const FinModule& m) {
    if (q >= res.length)
        throw std::invalid_argument("ext: q exceeds the computed resolution length");
    const FiniteRing& ring = m.ring();
    u64 n = ring.modulus();
    FinModule cq = detail::power_module(m, res.ranks[q]);
    // cocycles: kernel of the map into C^{q+1}
    ResidueMatrix delta_out = detail::hom_induced(m, res.diff[q]); // C^q -> C^{q+1}
    FinModule cnext = detail::power_module(m, res.ranks[q + 1]);
    HowellBasis cycles =
        cq.crank() == 0 ? HowellBasis(n, 0)
                        : constrained_kernel(n, cq.crank(), {delta_out}, {&cnext.relations()});
    // coboundaries: image of the map from C^{q-1}
    HowellBasis boundaries(n, cq.crank());
    if (q >= 1) {
        ResidueMatrix delta_in = detail::hom_induced(m, res.diff[q - 1]);
        boundaries = HowellBasis::of_rows(n, cq.crank(), delta_in.row_list());
    }
    return detail::homology_at(cq, cycles, boundaries);
}

inline FinModule ext(size_t q, const FinModule& a, const FinModule& m, size_t length = 4) {
    return ext(q, free_resolution(a, std::max<size_t>(length, q + 1)), m);
}

// Tor_q(A, M) from a free resolution of A.
inline FinModule tor(size_t q, const FreeResolution& res, const FinModule& m) {
    if (q >= res.length)
        throw std::invalid_argument("tor: q exceeds the computed resolution length");
    const FiniteRing& ring = m.ring();
    u64 n = ring.modulus();
    FinModule cq = detail::power_module(m, res.ranks[q]);
    HowellBasis cycles(n, cq.crank());
    if (q == 0) {
        cycles = HowellBasis::full(n, cq.crank());
    } else {
        ResidueMatrix del = detail::tensor_induced(m, res.diff[q - 1]); // C_q -> C_{q-1}
        FinModule cprev = detail::power_module(m, res.ranks[q - 1]);
        cycles = cq.crank() == 0
                     ? HowellBasis(n, 0)
                     : constrained_kernel(n, cq.crank(), {del}, {&cprev.relations()});
    }
    ResidueMatrix del_next = detail::tensor_induced(m, res.diff[q]); // C_{q+1} -> C_q
    HowellBasis boundaries = HowellBasis::of_rows(n, cq.crank(), del_next.row_list());
    return detail::homology_at(cq, cycles, boundaries);
}

inline FinModule tor(size_t q, const FinModule& a, const FinModule& m, size_t length = 4) {
    return tor(q, free_resolution(a, std::max<size_t>(length, q + 1)), m);
}

// H^q_I(M): colimit over k of Ext^q(R/I^k, M). The power chain stabilizes
// at s, R/I^s = R/I^{s+1} literally, so the colimit is Ext^q(R/I^s, M).
inline FinModule local_cohomology(size_t q, const Ideal& i, const FinModule& m,
                                  size_t length = 4) {
    u64 s = power_stabilization_index(i);
    Ideal stable = ideal_power(i, s);
    if (!(stable == ideal_power(i, s + 1)))
        throw std::logic_error("ideal power chain not stable at its index (bug)");
    FinModule a = FinModule::quotient_ring_module(m.ring(), stable);
    return ext(q, a, m, length);
}

// H_q^I(M): limit over k of Tor_q(R/I^k, M), same stabilization argument.
inline FinModule local_homology(size_t q, const Ideal& i, const FinModule& m, size_t length = 4) {
    u64 s = power_stabilization_index(i);
    Ideal stable = ideal_power(i, s);
    FinModule a = FinModule::quotient_ring_module(m.ring(), stable);
    return tor(q, a, m, length);
}

// The natural identification Hom(R/J, M) -> (0:_M J) by evaluation at 1;
// used to compare Ext^0 with annihilator submodules.
inline ModuleMap ext0_evaluation(const Ideal& j, const FinModule& m) {
    FinModule a = FinModule::quotient_ring_module(m.ring(), j);
    HomModule h = hom_module(a, m);
    return hom_evaluation(h, m.ring().one());
}

} // namespace redmod
