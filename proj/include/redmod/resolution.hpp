#pragma once

// Truncated free resolutions. Differentials are stored as matrices of ring
// elements between free modules; the flattened Z/n form is derived when a
// kernel has to be computed. Generator choices are the Howell basis rows of
// each syzygy module, which makes the whole resolution canonical for a
// given presentation of the target.

#include "redmod/module.hpp"

namespace redmod {

// k x l matrix of ring elements (each entry a coordinate row over Z/n).
struct RingMatrix {
    size_t rows = 0, cols = 0;
    std::vector<Row> entries; // row-major, entries[i*cols + j]

    const Row& at(size_t i, size_t j) const { return entries[i * cols + j]; }
};

// Flattened Z/n matrix of the free-module map R^rows -> R^cols given by a
// ring matrix: block (i, j) is the multiplication matrix of entry (i, j).
inline ResidueMatrix flatten_ring_matrix(const FiniteRing& ring, const RingMatrix& d) {
    size_t b = ring.rank();
    ResidueMatrix out(ring.modulus(), d.rows * b, d.cols * b);
    for (size_t i = 0; i < d.rows; ++i)
        for (size_t j = 0; j < d.cols; ++j) {
            ResidueMatrix m = ring.mult_matrix(d.at(i, j));
            for (size_t x = 0; x < b; ++x)
                for (size_t y = 0; y < b; ++y)
                    out.at(i * b + x, j * b + y) = m.at(x, y);
        }
    return out;
}

// Splits a flat row in R^k back into k ring-element coordinate rows.
inline std::vector<Row> split_flat_row(const FiniteRing& ring, const Row& flat) {
    size_t b = ring.rank();
    std::vector<Row> out;
    for (size_t i = 0; i * b < flat.size(); ++i)
        out.emplace_back(flat.begin() + i * b, flat.begin() + (i + 1) * b);
    return out;
}

struct FreeResolution {
    FiniteRing ring;
    FinModule target;
    size_t length = 0;                // computed up to F_length
    std::vector<size_t> ranks;        // ranks[q] = rank of F_q, q = 0..length
    std::vector<RingMatrix> diff;     // diff[q]: F_q -> F_{q-1}, q = 1..length
    ResidueMatrix augmentation;       // flat F_0 -> target coordinates
};

// Builds F_L -> ... -> F_0 ->> M with F_0 free on the coordinate rows of M.
inline FreeResolution free_resolution(const FinModule& m, size_t length) {
    const FiniteRing& ring = m.ring();
    u64 n = ring.modulus();
    size_t b = ring.rank();
    FreeResolution res;
    res.ring = ring;
    res.target = m;
    res.length = length;

    size_t rank0 = m.crank();
    res.ranks.push_back(rank0);
    // augmentation: free generator i followed by e_j goes to row i of act(e_j)
    ResidueMatrix aug(n, rank0 * b, m.crank());
    for (size_t i = 0; i < rank0; ++i)
        for (size_t j = 0; j < b; ++j)
            aug.set_row(i * b + j, m.action(j).row(i));
    res.augmentation = aug;

    // surjectivity of the augmentation: every coordinate row is hit
    HowellBasis image = HowellBasis::of_rows(n, m.crank(), aug.row_list()).sum(m.relations());
    if (!image.is_full() && m.crank() > 0)
        throw std::logic_error("augmentation is not surjective (bug)");

    // first syzygies: kernel of the augmentation modulo the relations
    HowellBasis kprev = rank0 == 0 ? HowellBasis(n, 0)
                                   : constrained_kernel(n, rank0 * b, {aug}, {&m.relations()});
    for (size_t q = 1; q <= length; ++q) {
        size_t rank_prev = res.ranks.back();
        RingMatrix d;
        d.rows = kprev.row_count();
        d.cols = rank_prev;
        for (const Row& syz : kprev.rows())
            for (const Row& e : split_flat_row(ring, syz))
                d.entries.push_back(e);
        res.ranks.push_back(d.rows);
        res.diff.push_back(d);
        if (q == length)
            break;
        ResidueMatrix flat = flatten_ring_matrix(ring, d);
        kprev = flat.rows() == 0 ? HowellBasis(n, 0) : kernel(flat);
    }

    // positional exactness: image of d_{q+1} equals kernel of d_q
    for (size_t q = 1; q + 1 <= res.diff.size(); ++q) {
        ResidueMatrix flat = flatten_ring_matrix(ring, res.diff[q - 1]);
        HowellBasis ker = flat.rows() == 0 ? HowellBasis(n, 0) : kernel(flat);
        ResidueMatrix next = flatten_ring_matrix(ring, res.diff[q]);
        HowellBasis img = HowellBasis::of_rows(n, res.ranks[q] * b, next.row_list());
        if (!(ker == img))
            throw std::logic_error("resolution is not exact (bug)");
    }
    return res;
}

} // namespace redmod
