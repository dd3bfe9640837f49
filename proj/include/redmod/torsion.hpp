#pragma once

// Torsion and completion functors by chain stabilization. Over a finite
// module both chains
//     (0 : I) <= (0 : I^2) <= ...      and      IM >= I^2 M >= ...
// become constant after finitely many steps; the stabilization index is
// detected by consecutive equality of Howell bases, with a safety cap of
// |M| + 1 iterations guarding against bugs rather than non-termination.

#include "redmod/module.hpp"

namespace redmod {

struct ChainProfile {
    Ideal ideal;
    FinModule module;
    std::vector<Submodule> ascending;  // (0 : I^k), k = 1, 2, ...
    std::vector<Submodule> descending; // I^k M, k = 1, 2, ...
    u64 asc_stab_index = 0;            // least k with chain(k) == chain(k+1)
    u64 desc_stab_index = 0;

    const Submodule& gamma() const { return ascending[asc_stab_index - 1]; }
    const Submodule& stable_scale() const { return descending[desc_stab_index - 1]; }
};

inline ChainProfile chain_profile(const FinModule& m, const Ideal& i) {
    require_same_ring(m, i);
    ChainProfile p;
    p.ideal = i;
    p.module = m;
    u64 cap = m.order() + 1;
    Ideal power = i;
    for (u64 k = 1;; ++k) {
        p.ascending.push_back(annihilator_submodule(m, power));
        p.descending.push_back(ideal_scale(m, power));
        size_t t = p.ascending.size();
        if (t >= 2 && p.asc_stab_index == 0 && p.ascending[t - 1] == p.ascending[t - 2])
            p.asc_stab_index = k - 1;
        if (t >= 2 && p.desc_stab_index == 0 && p.descending[t - 1] == p.descending[t - 2])
            p.desc_stab_index = k - 1;
        if (p.asc_stab_index != 0 && p.desc_stab_index != 0)
            break;
        if (k > cap)
            throw std::logic_error("torsion chains failed to stabilize within |M|+1 steps (bug)");
        power = ideal_product(power, i);
    }
    // monotonicity is part of the contract
    for (size_t t = 1; t < p.ascending.size(); ++t) {
        if (!p.ascending[t].basis().contains_all(p.ascending[t - 1].basis().rows()))
            throw std::logic_error("annihilator chain is not ascending (bug)");
        if (!p.descending[t - 1].basis().contains_all(p.descending[t].basis().rows()))
            throw std::logic_error("scale chain is not descending (bug)");
    }
    return p;
}

// Gamma_I(M): the union of the ascending annihilator chain.
inline Submodule gamma(const FinModule& m, const Ideal& i) {
    return chain_profile(m, i).gamma();
}

// The big torsion submodule: elements killed by a power of every generator.
inline Submodule gamma_bar(const FinModule& m, const Ideal& i) {
    require_same_ring(m, i);
    std::vector<Row> members;
    u64 cap = m.order() + 1;
    for (const Row& e : m.elements()) {
        bool all = true;
        for (const Row& g : i.basis().rows()) {
            ResidueMatrix a = m.action_of(g);
            Row cur = e;
            bool killed = false;
            for (u64 t = 0; t < cap; ++t) {
                if (m.is_zero_element(cur)) {
                    killed = true;
                    break;
                }
                cur = a.apply(cur);
            }
            if (!killed) {
                all = false;
                break;
            }
        }
        if (all)
            members.push_back(e);
    }
    return Submodule::span_of(m, members);
}

struct CompletionResult {
    FinModule completion;  // M / I^s M at the stable index s
    ModuleMap projection;  // M -> completion
    u64 stable_index = 0;  // s
    std::vector<FinModule> tower; // M/I^k M for k = 1..s (constant beyond s)
};

// Lambda_I(M): for finite modules the tower M/I^k M is eventually constant
// with identity transition maps, so the inverse limit is the stable stage.
inline CompletionResult lambda(const FinModule& m, const Ideal& i) {
    ChainProfile p = chain_profile(m, i);
    CompletionResult r;
    r.stable_index = p.desc_stab_index;
    for (u64 k = 1; k <= p.desc_stab_index; ++k)
        r.tower.push_back(quotient_module(m, p.descending[k - 1]).mod);
    QuotientModule q = quotient_module(m, p.stable_scale());
    r.completion = std::move(q.mod);
    r.projection = std::move(q.projection);
    return r;
}

inline u64 reduction_index(const FinModule& m, const Ideal& i) {
    return chain_profile(m, i).asc_stab_index;
}

// I-reduced: I^2 m = 0 implies I m = 0, i.e. (0:I) == (0:I^2).
inline bool is_reduced(const FinModule& m, const Ideal& i) {
    return annihilator_submodule(m, i) == annihilator_submodule(m, ideal_power(i, 2));
}

// I-coreduced: I^2 M == I M.
inline bool is_coreduced(const FinModule& m, const Ideal& i) {
    return ideal_scale(m, i) == ideal_scale(m, ideal_power(i, 2));
}

inline bool is_k_reduced(const FinModule& m, const Ideal& i, u64 k) {
    if (k == 0)
        throw std::invalid_argument("k-reducedness needs k >= 1");
    return reduction_index(m, i) <= k;
}

inline bool is_k_coreduced(const FinModule& m, const Ideal& i, u64 k) {
    if (k == 0)
        throw std::invalid_argument("k-coreducedness needs k >= 1");
    return chain_profile(m, i).desc_stab_index <= k;
}

inline bool is_torsion(const FinModule& m, const Ideal& i) { return gamma(m, i).is_full(); }

// I-complete: the stabilized tower is literal, i.e. I^s M = 0 so that the
// projection M -> M/I^s M is bijective.
inline bool is_complete(const FinModule& m, const Ideal& i) {
    return chain_profile(m, i).stable_scale().is_zero();
}

// a * Gamma_(a)(M); vanishes for every a exactly when M is reduced.
inline Submodule locally_nilradical(const FinModule& m, const Row& a) {
    Ideal ia = Ideal::generate(m.ring(), {a});
    return element_scale(gamma(m, ia), a);
}

} // namespace redmod
