#pragma once

// Koszul complexes on a finite sequence of ring elements, with the
// contraction differential on the exterior algebra, and the pro-zero test
// for the tower K(R; r^j) -> K(R; r^i).
//
// Cohomological indexing puts H^0 at the cokernel end: the exterior power
// Lambda^p sits in degree -p, so "every p < 0" ranges over the annihilator
// side. The tower map from level j to level i multiplies the basis vector
// e_T by prod_{t in T} r_t^(j-i); for a single element this is
// multiplication by r^(j-i) on the annihilator factor, and for longer
// sequences it is the tensor product of the length-one comparison maps.

#include "redmod/homology.hpp"
#include "redmod/report.hpp"

#include <optional>

namespace redmod {

struct KoszulComplex {
    FiniteRing ring;
    std::vector<Row> sequence;     // the elements r_1..r_s
    std::vector<size_t> ranks;     // ranks[p] = C(s, p), p = 0..s (degree -p)
    std::vector<RingMatrix> diff;  // diff[p]: Lambda^p -> Lambda^{p-1}, p = 1..s
    std::vector<std::vector<unsigned>> subsets; // basis of each Lambda^p, as bitmasks per rank
};

namespace detail {

inline std::vector<std::vector<unsigned>> subsets_by_size(size_t s) {
    std::vector<std::vector<unsigned>> by_size(s + 1);
    for (unsigned mask = 0; mask < (1u << s); ++mask)
        by_size[static_cast<size_t>(__builtin_popcount(mask))].push_back(mask);
    for (auto& v : by_size)
        std::sort(v.begin(), v.end());
    return by_size;
}

} // namespace detail

inline KoszulComplex koszul_complex(const FiniteRing& ring, const std::vector<Row>& sequence) {
    size_t s = sequence.size();
    if (s > 20)
        throw std::invalid_argument("koszul: sequence too long");
    KoszulComplex k;
    k.ring = ring;
    k.sequence = sequence;
    auto by_size = detail::subsets_by_size(s);
    for (size_t p = 0; p <= s; ++p)
        k.ranks.push_back(by_size[p].size());
    k.subsets = by_size;
    for (size_t p = 1; p <= s; ++p) {
        RingMatrix d;
        d.rows = by_size[p].size();
        d.cols = by_size[p - 1].size();
        d.entries.assign(d.rows * d.cols, ring.zero_row());
        for (size_t a = 0; a < by_size[p].size(); ++a) {
            unsigned mask = by_size[p][a];
            int sign_index = 0;
            for (size_t t = 0; t < s; ++t) {
                if (!(mask & (1u << t)))
                    continue;
                unsigned sub = mask & ~(1u << t);
                size_t bidx =
                    std::lower_bound(by_size[p - 1].begin(), by_size[p - 1].end(), sub) -
                    by_size[p - 1].begin();
                Row entry = sequence[t];
                if (sign_index % 2 == 1)
                    entry = ring.sub(ring.zero_row(), entry);
                d.entries[a * d.cols + bidx] = entry;
                ++sign_index;
            }
        }
        k.diff.push_back(std::move(d));
    }
    // d o d = 0
    for (size_t p = 2; p <= s; ++p) {
        ResidueMatrix hi = flatten_ring_matrix(ring, k.diff[p - 1]);
        ResidueMatrix lo = flatten_ring_matrix(ring, k.diff[p - 2]);
        if (!hi.mul(lo).is_zero())
            throw std::logic_error("koszul differential does not square to zero (bug)");
    }
    return k;
}

// H^p of the Koszul complex for -s <= p <= 0, as an abstract module.
inline FinModule koszul_cohomology(const FiniteRing& ring, const std::vector<Row>& sequence,
                                   long p) {
    KoszulComplex k = koszul_complex(ring, sequence);
    long s = static_cast<long>(sequence.size());
    if (p > 0 || p < -s)
        throw std::invalid_argument("koszul cohomology degree out of range");
    size_t d = static_cast<size_t>(-p); // internal degree: Lambda^d
    u64 n = ring.modulus();
    size_t b = ring.rank();
    FinModule ambient = FinModule::free_module(ring, k.ranks[d]);
    HowellBasis cycles(n, k.ranks[d] * b);
    if (d == 0) {
        cycles = HowellBasis::full(n, k.ranks[0] * b);
    } else {
        ResidueMatrix out = flatten_ring_matrix(ring, k.diff[d - 1]); // Lambda^d -> Lambda^{d-1}
        cycles = kernel(out);
    }
    HowellBasis boundaries(n, k.ranks[d] * b);
    if (d + 1 <= sequence.size()) {
        ResidueMatrix in = flatten_ring_matrix(ring, k.diff[d]); // Lambda^{d+1} -> Lambda^d
        boundaries = HowellBasis::of_rows(n, k.ranks[d] * b, in.row_list());
    }
    return detail::homology_at(ambient, cycles, boundaries);
}

struct ProZeroVerdict {
    std::vector<Row> sequence;
    long degree = 0; // cohomological p < 0
    // offsets[i-1] = least j-i in [1, offset_bound] with zero transition
    // H^p(level j) -> H^p(level i), or nullopt when none was found
    std::vector<std::optional<u64>> offsets;

    bool all_found() const {
        for (const auto& o : offsets)
            if (!o)
                return false;
        return true;
    }
};

namespace detail {

struct KoszulLevel {
    KoszulComplex complex;
    // per internal degree d: cycle and boundary spans in flat coordinates
    std::vector<HowellBasis> cycles, boundaries;
};

inline KoszulLevel koszul_level(const FiniteRing& ring, const std::vector<Row>& seq) {
    KoszulLevel lv;
    lv.complex = koszul_complex(ring, seq);
    size_t s = seq.size();
    u64 n = ring.modulus();
    size_t b = ring.rank();
    for (size_t d = 0; d <= s; ++d) {
        HowellBasis cyc(n, lv.complex.ranks[d] * b), bnd(n, lv.complex.ranks[d] * b);
        if (d == 0)
            cyc = HowellBasis::full(n, lv.complex.ranks[0] * b);
        else
            cyc = kernel(flatten_ring_matrix(ring, lv.complex.diff[d - 1]));
        if (d + 1 <= s) {
            ResidueMatrix in = flatten_ring_matrix(ring, lv.complex.diff[d]);
            bnd = HowellBasis::of_rows(n, lv.complex.ranks[d] * b, in.row_list());
        }
        lv.cycles.push_back(cyc);
        lv.boundaries.push_back(bnd);
    }
    return lv;
}

inline std::vector<Row> power_sequence(const FiniteRing& ring, const std::vector<Row>& seq,
                                       u64 e) {
    std::vector<Row> out;
    for (const Row& r : seq)
        out.push_back(ring.pow(r, e));
    return out;
}

// Flat matrix of the tower comparison K(R; r^j) -> K(R; r^i) in degree d:
// diagonal blocks multiplying e_T by prod_{t in T} r_t^(j-i).
inline ResidueMatrix tower_map(const FiniteRing& ring, const KoszulComplex& k,
                               const std::vector<Row>& seq, size_t d, u64 jminusi) {
    size_t b = ring.rank();
    u64 n = ring.modulus();
    size_t rank = k.ranks[d];
    ResidueMatrix out(n, rank * b, rank * b);
    for (size_t a = 0; a < rank; ++a) {
        unsigned mask = k.subsets[d][a];
        Row factor = ring.one();
        for (size_t t = 0; t < seq.size(); ++t)
            if (mask & (1u << t))
                factor = ring.mul(factor, ring.pow(seq[t], jminusi));
        ResidueMatrix mm = ring.mult_matrix(factor);
        for (size_t x = 0; x < b; ++x)
            for (size_t y = 0; y < b; ++y)
                out.at(a * b + x, a * b + y) = mm.at(x, y);
    }
    return out;
}

} // namespace detail

namespace detail {

inline bool tower_map_vanishes_cached(const FiniteRing& ring, const std::vector<Row>& seq,
                                      size_t d, const KoszulLevel& lo, const KoszulLevel& hi,
                                      u64 jminusi) {
    ResidueMatrix t = tower_map(ring, hi.complex, seq, d, jminusi);
    const HowellBasis& target = lo.boundaries[d];
    for (const Row& cyc : hi.cycles[d].rows())
        if (!target.contains(t.apply(cyc)))
            return false;
    return true;
}

} // namespace detail

// Is the induced map H^p(level j) -> H^p(level i) zero? True when every
// cycle at level j lands in the boundaries of level i.
inline bool tower_map_vanishes(const FiniteRing& ring, const std::vector<Row>& seq, long p,
                               u64 level_i, u64 level_j) {
    size_t d = static_cast<size_t>(-p);
    auto lo = detail::koszul_level(ring, detail::power_sequence(ring, seq, level_i));
    auto hi = detail::koszul_level(ring, detail::power_sequence(ring, seq, level_j));
    return detail::tower_map_vanishes_cached(ring, seq, d, lo, hi, level_j - level_i);
}

// Pro-zero search for one cohomological degree p < 0.
inline ProZeroVerdict pro_zero_search(const FiniteRing& ring, const std::vector<Row>& seq, long p,
                                      u64 degree_bound, u64 offset_bound) {
    if (p >= 0)
        throw std::invalid_argument("pro-zero is tested in negative degrees");
    ProZeroVerdict v;
    v.sequence = seq;
    v.degree = p;
    std::vector<detail::KoszulLevel> levels; // levels[k] = level k+1
    for (u64 lvl = 1; lvl <= degree_bound + offset_bound; ++lvl)
        levels.push_back(detail::koszul_level(ring, detail::power_sequence(ring, seq, lvl)));
    size_t d = static_cast<size_t>(-p);
    for (u64 i = 1; i <= degree_bound; ++i) {
        std::optional<u64> found;
        for (u64 off = 1; off <= offset_bound; ++off) {
            if (detail::tower_map_vanishes_cached(ring, seq, d, levels[i - 1],
                                                  levels[i + off - 1], off)) {
                found = off;
                break;
            }
        }
        v.offsets.push_back(found);
    }
    return v;
}

struct WeakProregularityResult {
    std::vector<ProZeroVerdict> per_degree; // p = -1 .. -s
    bool pass = false;         // every degree pro-zero within the bounds
    bool undetermined = false; // some search exhausted its offset bound
};

inline WeakProregularityResult weak_proregularity_check(const FiniteRing& ring,
                                                        const std::vector<Row>& seq,
                                                        u64 degree_bound = 4,
                                                        u64 offset_bound = 8) {
    WeakProregularityResult res;
    if (seq.empty()) {
        // empty sequence: the complex is R in degree 0, nothing in p < 0
        res.pass = true;
        return res;
    }
    bool all = true;
    for (long p = -1; p >= -static_cast<long>(seq.size()); --p) {
        ProZeroVerdict v = pro_zero_search(ring, seq, p, degree_bound, offset_bound);
        if (!v.all_found())
            all = false;
        res.per_degree.push_back(std::move(v));
    }
    res.pass = all;
    res.undetermined = !all; // finite rings always pass; failure to find
                             // a zero map within the bound is inconclusive
    return res;
}

// Idempotent finitely generated ideals are weakly proregular; prefers a
// single idempotent generator when one exists.
inline Report check_prop_kkk(const FiniteRing& ring, const Ideal& i, u64 degree_bound = 4,
                             u64 offset_bound = 8) {
    if (!is_idempotent(i))
        throw std::invalid_argument("check_prop_kkk: ideal is not idempotent");
    Report rep;
    rep.check = "prop_kkk";
    rep.property = "idempotent finitely generated ideals are weakly proregular";
    std::vector<Row> seq;
    if (auto e = generated_by_idempotent_element(i)) {
        seq = {*e};
        rep.stats["generator"] = "idempotent element";
    } else {
        seq = i.basis().rows();
        rep.stats["generator"] = "basis rows";
    }
    auto res = weak_proregularity_check(ring, seq, degree_bound, offset_bound);
    rep.stats["sequence_length"] = seq.size();
    if (res.pass) {
        rep.verdict = Verdict::pass;
    } else {
        rep.verdict = Verdict::undetermined;
        rep.witnesses.push_back({"bounds", {{"degree_bound", degree_bound},
                                            {"offset_bound", offset_bound}}});
    }
    return rep;
}

} // namespace redmod
