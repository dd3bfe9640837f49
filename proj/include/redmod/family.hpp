#pragma once

// Families of modules over a fixed ring and ideal: the concrete stand-in
// for "abelian full subcategory". Two exhaustive builders are provided.
//
//   * cyclic_sums: all direct sums of cyclic modules R/J up to an order
//     bound. Over the bundled rings (chain rings and their products) every
//     finite module decomposes this way, so the family is exhaustive up to
//     isomorphism there.
//   * all_presentations: every coordinate presentation up to a coordinate
//     rank bound: each subgroup of (Z/n)^c as relations, each action tuple
//     with canonically reduced rows that passes the module axioms.
//
// Declared closure flags are spot-checked by sampling: a submodule or
// quotient of a member must match some member's coarse invariant profile
// (order plus annihilator orders along the ideal powers).

#include "redmod/torsion.hpp"

#include <random>

namespace redmod {

struct ClosureFlags {
    bool submodules = false;
    bool quotients = false;
    bool direct_sums = false;
    bool extensions = false;
};

struct ModuleFamily {
    FiniteRing ring;
    Ideal ideal;
    std::vector<FinModule> modules;
    std::vector<ModuleMap> maps;
    ClosureFlags flags;
    std::string description;
};

namespace detail {

inline void cyclic_sum_rec(const FiniteRing& ring, const std::vector<FinModule>& cyclics,
                           size_t start, const FinModule& acc, u64 max_order,
                           std::vector<FinModule>& out) {
    out.push_back(acc);
    for (size_t i = start; i < cyclics.size(); ++i) {
        u64 next = acc.order() * cyclics[i].order();
        if (cyclics[i].order() <= 1 || next > max_order)
            continue;
        cyclic_sum_rec(ring, cyclics, i, direct_sum(acc, cyclics[i]), max_order, out);
    }
}

// Coarse invariant used by the closure spot checks: order plus the orders
// of (0 : I^k) along the chain.
inline std::vector<u64> invariant_profile(const FinModule& m, const Ideal& i) {
    std::vector<u64> prof{m.order()};
    ChainProfile p = chain_profile(m, i);
    for (const Submodule& s : p.ascending)
        prof.push_back(s.order());
    return prof;
}

} // namespace detail

// All direct sums of cyclic modules R/J with order at most max_order.
inline ModuleFamily family_cyclic_sums(const FiniteRing& ring, const Ideal& ideal,
                                       u64 max_order) {
    ModuleFamily fam;
    fam.ring = ring;
    fam.ideal = ideal;
    fam.description = "cyclic sums up to order " + std::to_string(max_order);
    fam.flags = {true, true, true, true};
    std::vector<FinModule> cyclics;
    for (const Ideal& j : enumerate_ideals(ring))
        cyclics.push_back(FinModule::quotient_ring_module(ring, j));
    std::sort(cyclics.begin(), cyclics.end(),
              [](const FinModule& a, const FinModule& b) { return a.order() > b.order(); });
    detail::cyclic_sum_rec(ring, cyclics, 0, FinModule::zero(ring), max_order, fam.modules);
    return fam;
}

// Every presentation with coordinate rank at most max_crank and order at
// most max_order: relation subgroup times valid canonical action tuple.
inline ModuleFamily family_all_presentations(const FiniteRing& ring, const Ideal& ideal,
                                             size_t max_crank, u64 max_order) {
    ModuleFamily fam;
    fam.ring = ring;
    fam.ideal = ideal;
    fam.description = "all presentations with coordinate rank <= " + std::to_string(max_crank) +
                      ", order <= " + std::to_string(max_order);
    fam.flags = {true, true, false, true};
    u64 n = ring.modulus();
    size_t b = ring.rank();
    for (size_t c = 0; c <= max_crank; ++c) {
        for (const HowellBasis& rel : enumerate_subgroup_spans(n, c)) {
            u64 total = 1;
            for (size_t t = 0; t < c; ++t)
                total *= n;
            if (total / rel.span_size() > max_order)
                continue;
            if (b == 1) {
                // the single basis element is the unit: its action is the
                // identity, canonically reduced
                std::vector<ResidueMatrix> acts{ResidueMatrix::identity(n, c)};
                fam.modules.push_back(FinModule::presented(ring, c, rel.rows(), acts));
                continue;
            }
            // enumerate canonical action rows (one coset representative per
            // module element) for every basis element
            std::vector<Row> reps = coset_representatives(n, c, rel);
            std::vector<size_t> idx(b * c, 0);
            size_t combos = 1;
            bool overflow = false;
            for (size_t t = 0; t < b * c; ++t) {
                combos *= reps.size();
                if (combos > 1u << 22) {
                    overflow = true;
                    break;
                }
            }
            if (overflow)
                throw std::runtime_error("family_all_presentations: action space too large");
            while (true) {
                std::vector<ResidueMatrix> acts;
                for (size_t e = 0; e < b; ++e) {
                    ResidueMatrix a(n, c, c);
                    for (size_t rrow = 0; rrow < c; ++rrow)
                        a.set_row(rrow, reps[idx[e * c + rrow]]);
                    acts.push_back(std::move(a));
                }
                try {
                    fam.modules.push_back(FinModule::presented(ring, c, rel.rows(), acts));
                } catch (const std::invalid_argument&) {
                    // not a module structure; skip
                }
                size_t t = 0;
                while (t < idx.size() && ++idx[t] == reps.size())
                    idx[t++] = 0;
                if (t == idx.size())
                    break;
            }
        }
    }
    return fam;
}

// Attach sampled homomorphisms between family members (plus identities).
inline void attach_sample_maps(ModuleFamily& fam, u64 seed, size_t max_pairs = 64,
                               size_t maps_per_pair = 4) {
    std::mt19937_64 rng(seed);
    fam.maps.clear();
    for (const FinModule& m : fam.modules)
        fam.maps.push_back(ModuleMap::identity(m));
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < fam.modules.size(); ++i)
        for (size_t j = 0; j < fam.modules.size(); ++j)
            pairs.emplace_back(i, j);
    if (pairs.size() > max_pairs) {
        std::shuffle(pairs.begin(), pairs.end(), rng);
        pairs.resize(max_pairs);
    }
    for (auto [i, j] : pairs) {
        HomModule h = hom_module(fam.modules[i], fam.modules[j]);
        size_t count = 0;
        for (const auto& g : h.gens) {
            if (count++ >= maps_per_pair)
                break;
            fam.maps.push_back(ModuleMap(fam.modules[i], fam.modules[j], g));
        }
    }
}

// Spot check of the declared closure flags on sampled members: the derived
// object's coarse invariant profile must match some member's.
inline bool spot_check_closures(const ModuleFamily& fam, u64 seed, size_t samples = 6,
                                u64 submodule_bound = 256) {
    std::mt19937_64 rng(seed);
    if (fam.modules.empty())
        return true;
    std::set<std::vector<u64>> profiles;
    for (const FinModule& m : fam.modules)
        profiles.insert(detail::invariant_profile(m, fam.ideal));
    auto in_family = [&](const FinModule& m) {
        return profiles.count(detail::invariant_profile(m, fam.ideal)) > 0;
    };
    for (size_t t = 0; t < samples; ++t) {
        const FinModule& m = fam.modules[rng() % fam.modules.size()];
        if (m.order() > submodule_bound)
            continue;
        auto subs = enumerate_submodules(m, submodule_bound);
        const Submodule& s = subs[rng() % subs.size()];
        if (fam.flags.submodules && !in_family(submodule_as_module(s).mod))
            return false;
        if (fam.flags.quotients && !in_family(quotient_module(m, s).mod))
            return false;
        if (fam.flags.direct_sums) {
            const FinModule& m2 = fam.modules[rng() % fam.modules.size()];
            if (m.order() * m2.order() <= submodule_bound && !in_family(direct_sum(m, m2)))
                return false;
        }
    }
    return true;
}

} // namespace redmod
