#pragma once

// Finite R-modules presented by coordinates: a coordinate rank c over Z/n,
// a Howell span of relation rows (coordinate rows identified with zero) and
// one c x c action matrix per ring basis element. Elements are coordinate
// rows modulo the relation span; the canonical coset representative is the
// Howell reduction. Submodules are Howell spans containing the relations
// and closed under every action.
//
// Everything that looks like "solve a linear condition modulo a relation
// span" goes through constrained_kernel/constrained_solve from howell.hpp.

#include "redmod/ideal.hpp"
#include "redmod/report.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>

namespace redmod {

class FinModule {
  public:
    FinModule() = default;

    static FinModule presented(const FiniteRing& r, size_t crank, const std::vector<Row>& relations,
                               std::vector<ResidueMatrix> actions) {
        FinModule m;
        m.ring_ = r;
        m.crank_ = crank;
        m.rel_ = HowellBasis::of_rows(r.modulus(), crank, relations);
        m.act_ = std::move(actions);
        m.validate();
        return m;
    }

    static FinModule zero(const FiniteRing& r) {
        std::vector<ResidueMatrix> acts(r.rank(), ResidueMatrix(r.modulus(), 0, 0));
        return presented(r, 0, {}, std::move(acts));
    }

    static FinModule free_module(const FiniteRing& r, size_t rrank) {
        std::vector<ResidueMatrix> acts;
        for (size_t i = 0; i < r.rank(); ++i)
            acts.push_back(block_diagonal(r.basis_mult_matrix(i), rrank));
        return presented(r, rrank * r.rank(), {}, std::move(acts));
    }

    static FinModule regular(const FiniteRing& r) { return free_module(r, 1); }

    // R/J with the regular action.
    static FinModule quotient_ring_module(const FiniteRing& r, const Ideal& j) {
        std::vector<ResidueMatrix> acts;
        for (size_t i = 0; i < r.rank(); ++i)
            acts.push_back(r.basis_mult_matrix(i));
        return presented(r, r.rank(), j.basis().rows(), std::move(acts));
    }

    const FiniteRing& ring() const { return ring_; }
    size_t crank() const { return crank_; }
    const HowellBasis& relations() const { return rel_; }
    const ResidueMatrix& action(size_t i) const { return act_[i]; }
    size_t action_count() const { return act_.size(); }

    // action matrix of an arbitrary ring element
    ResidueMatrix action_of(const Row& relem) const {
        ResidueMatrix m(ring_.modulus(), crank_, crank_);
        for (size_t i = 0; i < ring_.rank(); ++i)
            if (relem[i] != 0)
                m = m.add(act_[i].scaled(relem[i]));
        return m;
    }

    u64 order() const {
        u64 total = 1;
        for (size_t i = 0; i < crank_; ++i)
            total = checked_mul_u64(total, ring_.modulus(), "module order overflow");
        return total / rel_.span_size();
    }

    Row reduce(const Row& v) const { return rel_.reduce(v); }
    bool is_zero_element(const Row& v) const { return rel_.contains(v); }
    Row zero_row() const { return Row(crank_, 0); }

    HowellBasis full_span() const { return HowellBasis::full(ring_.modulus(), crank_); }

    // canonical coset representatives, one per element
    std::vector<Row> elements(u64 cap = 1u << 16) const {
        u64 o = order();
        if (o > cap)
            throw std::runtime_error("module element enumeration bound exceeded");
        u64 n = ring_.modulus();
        std::vector<u64> radix(crank_, n);
        for (const Row& r : rel_.rows())
            radix[leading_index(r)] = r[leading_index(r)];
        std::vector<u64> counter(crank_, 0);
        std::vector<Row> out;
        out.reserve(o);
        while (true) {
            out.push_back(counter);
            size_t i = 0;
            while (i < crank_ && ++counter[i] == radix[i])
                counter[i++] = 0;
            if (i == crank_)
                break;
        }
        if (crank_ == 0)
            return {Row{}};
        return out;
    }

    friend bool operator==(const FinModule& a, const FinModule& b) {
        return a.ring_ == b.ring_ && a.crank_ == b.crank_ && a.rel_ == b.rel_ && a.act_ == b.act_;
    }

  private:
    void validate() const {
        if (act_.size() != ring_.rank())
            throw std::invalid_argument("module needs one action matrix per ring basis element");
        for (const auto& a : act_)
            if (a.rows() != crank_ || a.cols() != crank_ || a.modulus() != ring_.modulus())
                throw std::invalid_argument("action matrix has wrong shape");
        // relations are stable under every action
        for (const Row& r : rel_.rows())
            for (const auto& a : act_)
                if (!rel_.contains(a.apply(r)))
                    throw std::invalid_argument("relations are not action-stable");
        // the unit acts as the identity modulo relations
        ResidueMatrix unit_act = action_of_raw(ring_.one());
        for (size_t k = 0; k < crank_; ++k) {
            Row diff = unit_act.row(k);
            diff[k] = submod(diff[k], 1 % ring_.modulus(), ring_.modulus());
            if (!rel_.contains(diff))
                throw std::invalid_argument("unit does not act as identity");
        }
        // actions compose according to the structure constants
        for (size_t i = 0; i < ring_.rank(); ++i)
            for (size_t j = 0; j <= i; ++j) {
                ResidueMatrix lhs = act_[i].mul(act_[j]);
                ResidueMatrix rhs(ring_.modulus(), crank_, crank_);
                Row scrow = ring_.mul(ring_.basis_row(i), ring_.basis_row(j));
                for (size_t t = 0; t < ring_.rank(); ++t)
                    if (scrow[t] != 0)
                        rhs = rhs.add(act_[t].scaled(scrow[t]));
                for (size_t k = 0; k < crank_; ++k)
                    if (!rel_.contains(row_sub(lhs.row(k), rhs.row(k), ring_.modulus())))
                        throw std::invalid_argument("actions violate the structure constants");
                ResidueMatrix sym = act_[j].mul(act_[i]);
                for (size_t k = 0; k < crank_; ++k)
                    if (!rel_.contains(row_sub(lhs.row(k), sym.row(k), ring_.modulus())))
                        throw std::invalid_argument("actions do not commute");
            }
    }

    ResidueMatrix action_of_raw(const Row& relem) const {
        ResidueMatrix m(ring_.modulus(), crank_, crank_);
        for (size_t i = 0; i < ring_.rank(); ++i)
            if (relem[i] != 0)
                m = m.add(act_[i].scaled(relem[i]));
        return m;
    }

    FiniteRing ring_;
    size_t crank_ = 0;
    HowellBasis rel_;
    std::vector<ResidueMatrix> act_;
};

class Submodule {
  public:
    Submodule() = default;

    // Closure of the generators under the ring action (sum of the images of
    // each generator under every basis action spans the cyclic module it
    // generates), always containing the relation span.
    static Submodule span_of(const FinModule& m, const std::vector<Row>& gens) {
        std::vector<Row> rows = m.relations().rows();
        for (const Row& g : gens) {
            if (g.size() != m.crank())
                throw std::invalid_argument("submodule generator has wrong length");
            rows.push_back(g);
            for (size_t i = 0; i < m.ring().rank(); ++i)
                rows.push_back(m.action(i).apply(g));
        }
        Submodule s;
        s.parent_ = m;
        s.basis_ = HowellBasis::of_rows(m.ring().modulus(), m.crank(), rows);
        return s;
    }

    static Submodule from_span(const FinModule& m, const HowellBasis& span) {
        return span_of(m, span.rows());
    }

    static Submodule zero(const FinModule& m) { return span_of(m, {}); }
    static Submodule full(const FinModule& m) {
        return span_of(m, ResidueMatrix::identity(m.ring().modulus(), m.crank()).row_list());
    }

    const FinModule& parent() const { return parent_; }
    const HowellBasis& basis() const { return basis_; }

    bool contains(const Row& v) const { return basis_.contains(v); }
    bool is_zero() const { return basis_ == parent_.relations(); }
    bool is_full() const { return basis_.span_size() == full_size_(); }

    u64 order() const { return basis_.span_size() / parent_.relations().span_size(); }

    Submodule sum(const Submodule& o) const {
        Submodule s;
        s.parent_ = parent_;
        s.basis_ = basis_.sum(o.basis_);
        return s;
    }

    Submodule intersect(const Submodule& o) const {
        Submodule s;
        s.parent_ = parent_;
        s.basis_ = basis_.intersect(o.basis_);
        return s;
    }

    friend bool operator==(const Submodule& a, const Submodule& b) {
        return a.basis_ == b.basis_;
    }

  private:
    u64 full_size_() const {
        u64 total = 1;
        for (size_t i = 0; i < parent_.crank(); ++i)
            total = checked_mul_u64(total, parent_.ring().modulus(), "size overflow");
        return total;
    }

    FinModule parent_;
    HowellBasis basis_;
};

class ModuleMap {
  public:
    ModuleMap() = default;

    ModuleMap(FinModule src, FinModule dst, ResidueMatrix mat, bool check = true)
        : src_(std::move(src)), dst_(std::move(dst)), mat_(std::move(mat)) {
        if (check)
            validate();
    }

    static ModuleMap identity(const FinModule& m) {
        return ModuleMap(m, m, ResidueMatrix::identity(m.ring().modulus(), m.crank()), false);
    }

    const FinModule& source() const { return src_; }
    const FinModule& target() const { return dst_; }
    const ResidueMatrix& matrix() const { return mat_; }

    Row apply(const Row& v) const { return dst_.reduce(mat_.apply(v)); }

    ModuleMap compose(const ModuleMap& then) const {
        return ModuleMap(src_, then.dst_, mat_.mul(then.mat_), false);
    }

    Submodule kernel() const {
        auto k = constrained_kernel(src_.ring().modulus(), src_.crank(), {mat_},
                                    {&dst_.relations()});
        return Submodule::from_span(src_, k);
    }

    Submodule image() const { return Submodule::span_of(dst_, mat_.row_list()); }

    bool injective() const { return kernel().is_zero(); }
    bool surjective() const { return image().is_full(); }
    bool bijective() const { return injective() && surjective(); }

    void validate() const {
        if (!(src_.ring() == dst_.ring()))
            throw std::invalid_argument("module map across different rings");
        if (mat_.rows() != src_.crank() || mat_.cols() != dst_.crank())
            throw std::invalid_argument("module map matrix has wrong shape");
        for (const Row& r : src_.relations().rows())
            if (!dst_.relations().contains(mat_.apply(r)))
                throw std::invalid_argument("map is not well defined on relations");
        for (size_t i = 0; i < src_.ring().rank(); ++i) {
            ResidueMatrix lhs = src_.action(i).mul(mat_);
            ResidueMatrix rhs = mat_.mul(dst_.action(i));
            for (size_t k = 0; k < src_.crank(); ++k)
                if (!dst_.relations().contains(
                        row_sub(lhs.row(k), rhs.row(k), src_.ring().modulus())))
                    throw std::invalid_argument("map is not R-linear");
        }
    }

  private:
    FinModule src_, dst_;
    ResidueMatrix mat_;
};

// ---- presentations --------------------------------------------------------

struct PresentedModule {
    FinModule mod;
    ModuleMap inclusion; // mod -> ambient
};

// Presents the subquotient span(gens)/span(ambient_rel) of an ambient
// coordinate space as a standalone module. gens must be action-stable
// modulo ambient_rel.
inline PresentedModule present_subquotient(const FiniteRing& ring, size_t ambient_rank,
                                           const HowellBasis& ambient_rel,
                                           const std::vector<ResidueMatrix>& ambient_act,
                                           const std::vector<Row>& gens,
                                           const FinModule* ambient_module = nullptr) {
    u64 n = ring.modulus();
    size_t g = gens.size();
    ResidueMatrix gmat = ResidueMatrix::from_rows(n, ambient_rank, gens);
    // relations: coefficient rows a with a*gens inside the ambient relations
    HowellBasis rel = constrained_kernel(n, g, {gmat}, {&ambient_rel});
    // actions: express the image of each generator in terms of the generators
    std::vector<ResidueMatrix> acts;
    for (size_t i = 0; i < ring.rank(); ++i) {
        ResidueMatrix a(n, g, g);
        for (size_t s = 0; s < g; ++s) {
            Row img = ambient_act[i].apply(gens[s]);
            auto sol = constrained_solve(n, gmat, &ambient_rel, img);
            if (!sol)
                throw std::logic_error("present_subquotient: generators not action-stable");
            a.set_row(s, *sol);
        }
        acts.push_back(std::move(a));
    }
    FinModule sub = FinModule::presented(ring, g, rel.rows(), std::move(acts));
    if (ambient_module) {
        ModuleMap incl(sub, *ambient_module, gmat);
        return {std::move(sub), std::move(incl)};
    }
    // no ambient FinModule available (e.g. flattened hom coordinates):
    // the inclusion is left as an identity-on-self placeholder
    ModuleMap self = ModuleMap::identity(sub);
    return {std::move(sub), std::move(self)};
}

inline PresentedModule submodule_as_module(const Submodule& s) {
    const FinModule& m = s.parent();
    std::vector<ResidueMatrix> acts;
    for (size_t i = 0; i < m.ring().rank(); ++i)
        acts.push_back(m.action(i));
    return present_subquotient(m.ring(), m.crank(), m.relations(), acts, s.basis().rows(), &m);
}

// ---- module operations ----------------------------------------------------

inline void require_same_ring(const FinModule& m, const Ideal& j) {
    if (!(m.ring() == j.ring()))
        throw std::invalid_argument("ideal and module live over different rings");
}

// (0 :_M J) = { m : j m = 0 for all j in J }, via the ideal's Howell basis.
inline Submodule annihilator_submodule(const FinModule& m, const Ideal& j) {
    require_same_ring(m, j);
    std::vector<ResidueMatrix> constraints;
    std::vector<const HowellBasis*> targets;
    for (const Row& gen : j.basis().rows()) {
        constraints.push_back(m.action_of(gen));
        targets.push_back(&m.relations());
    }
    if (constraints.empty())
        return Submodule::full(m);
    auto k = constrained_kernel(m.ring().modulus(), m.crank(), constraints, targets);
    return Submodule::from_span(m, k);
}

// J*M: spanned by the images of the coordinate generators under J.
inline Submodule ideal_scale(const FinModule& m, const Ideal& j) {
    require_same_ring(m, j);
    std::vector<Row> gens;
    for (const Row& jr : j.basis().rows()) {
        ResidueMatrix a = m.action_of(jr);
        for (size_t k = 0; k < m.crank(); ++k)
            gens.push_back(a.row(k));
    }
    return Submodule::span_of(m, gens);
}

// Scaling a submodule: a * S for a ring element row.
inline Submodule element_scale(const Submodule& s, const Row& relem) {
    const FinModule& m = s.parent();
    ResidueMatrix a = m.action_of(relem);
    std::vector<Row> gens;
    for (const Row& r : s.basis().rows())
        gens.push_back(a.apply(r));
    return Submodule::span_of(m, gens);
}

struct QuotientModule {
    FinModule mod;
    ModuleMap projection; // parent -> mod
};

inline QuotientModule quotient_module(const FinModule& m, const Submodule& n) {
    if (!(n.parent() == m))
        throw std::invalid_argument("quotient by a submodule of a different module");
    std::vector<Row> rel = m.relations().rows();
    for (const Row& r : n.basis().rows())
        rel.push_back(r);
    std::vector<ResidueMatrix> acts;
    for (size_t i = 0; i < m.ring().rank(); ++i)
        acts.push_back(m.action(i));
    FinModule q = FinModule::presented(m.ring(), m.crank(), rel, std::move(acts));
    ModuleMap proj(m, q, ResidueMatrix::identity(m.ring().modulus(), m.crank()));
    return {std::move(q), std::move(proj)};
}

inline FinModule direct_sum(const FinModule& a, const FinModule& b) {
    if (!(a.ring() == b.ring()))
        throw std::invalid_argument("direct sum across different rings");
    u64 n = a.ring().modulus();
    size_t c = a.crank() + b.crank();
    std::vector<Row> rel;
    for (const Row& r : a.relations().rows())
        rel.push_back(row_concat(r, Row(b.crank(), 0)));
    for (const Row& r : b.relations().rows())
        rel.push_back(row_concat(Row(a.crank(), 0), r));
    std::vector<ResidueMatrix> acts;
    for (size_t i = 0; i < a.ring().rank(); ++i) {
        ResidueMatrix m(n, c, c);
        for (size_t x = 0; x < a.crank(); ++x)
            for (size_t y = 0; y < a.crank(); ++y)
                m.at(x, y) = a.action(i).at(x, y);
        for (size_t x = 0; x < b.crank(); ++x)
            for (size_t y = 0; y < b.crank(); ++y)
                m.at(a.crank() + x, a.crank() + y) = b.action(i).at(x, y);
        acts.push_back(std::move(m));
    }
    return FinModule::presented(a.ring(), c, rel, std::move(acts));
}

// ---- Hom modules ----------------------------------------------------------

// Hom_R(M, N) as an R-module. A homomorphism is a coordinate matrix X that
// kills the source relations and commutes with every action, both modulo
// the target relations; X and X' agree as maps iff X - X' sends every
// coordinate row into the target relation span.
struct HomModule {
    FinModule mod;                   // Hom as an abstract module
    std::vector<ResidueMatrix> gens; // generator matrices (src.crank x dst.crank)
    FinModule src, dst;

    // the homomorphism corresponding to an element row of `mod`
    ModuleMap map_of(const Row& coords) const {
        u64 n = src.ring().modulus();
        ResidueMatrix m(n, src.crank(), dst.crank());
        for (size_t i = 0; i < gens.size(); ++i)
            if (coords[i] != 0)
                m = m.add(gens[i].scaled(coords[i]));
        return ModuleMap(src, dst, m);
    }
};

inline HomModule hom_module(const FinModule& m, const FinModule& nmod) {
    if (!(m.ring() == nmod.ring()))
        throw std::invalid_argument("hom across different rings");
    const FiniteRing& ring = m.ring();
    u64 n = ring.modulus();
    size_t cm = m.crank(), cn = nmod.crank();
    size_t vars = cm * cn;

    // flat(X) -> flat(X * A): block diagonal of A
    auto right_mult = [&](const ResidueMatrix& a) { return block_diagonal(a, cm); };
    // flat(X) -> flat(B * X): entries rearranged per row-block
    auto left_mult = [&](const ResidueMatrix& b) {
        ResidueMatrix out(n, vars, vars);
        for (size_t i = 0; i < cm; ++i)
            for (size_t j = 0; j < cn; ++j)
                for (size_t k = 0; k < cm; ++k)
                    out.at(k * cn + j, i * cn + j) = b.at(i, k);
        return out;
    };
    // flat(X) -> r * X for a relation row r of the source
    auto relation_apply = [&](const Row& r) {
        ResidueMatrix out(n, vars, cn);
        for (size_t i = 0; i < cm; ++i)
            for (size_t j = 0; j < cn; ++j)
                out.at(i * cn + j, j) = r[i];
        return out;
    };

    // "zero as a map" span: matrices whose rows all lie in rel(N)
    std::vector<Row> zero_maps;
    for (size_t i = 0; i < cm; ++i)
        for (const Row& r : nmod.relations().rows()) {
            Row flat(vars, 0);
            for (size_t j = 0; j < cn; ++j)
                flat[i * cn + j] = r[j];
            zero_maps.push_back(std::move(flat));
        }
    HowellBasis zero_span = HowellBasis::of_rows(n, vars, zero_maps);

    // a row-wise condition "each row of Y in rel(N)" on a cm x cn matrix Y is
    // exactly "flat(Y) in zero_span", so commuting constraints target it
    std::vector<ResidueMatrix> constraints;
    std::vector<const HowellBasis*> targets;
    for (const Row& r : m.relations().rows()) {
        constraints.push_back(relation_apply(r)); // vars -> cn, target rel(N)
        targets.push_back(&nmod.relations());
    }
    for (size_t i = 0; i < ring.rank(); ++i) {
        // act_M(e_i) * X - X * act_N(e_i) must vanish as a map
        ResidueMatrix c = left_mult(m.action(i));
        ResidueMatrix d = right_mult(nmod.action(i));
        ResidueMatrix diff(n, vars, vars);
        for (size_t x = 0; x < vars; ++x)
            for (size_t y = 0; y < vars; ++y)
                diff.at(x, y) = submod(c.at(x, y), d.at(x, y), n);
        constraints.push_back(std::move(diff));
        targets.push_back(&zero_span);
    }
    HowellBasis sols = constraints.empty()
                           ? HowellBasis::full(n, vars)
                           : constrained_kernel(n, vars, constraints, targets);

    // Hom = solutions / zero-maps, with the pointwise action X -> X*act_N(r)
    std::vector<ResidueMatrix> flat_acts;
    for (size_t i = 0; i < ring.rank(); ++i)
        flat_acts.push_back(right_mult(nmod.action(i)));
    PresentedModule p =
        present_subquotient(ring, vars, zero_span, flat_acts, sols.rows(), nullptr);

    HomModule h;
    h.mod = std::move(p.mod);
    h.src = m;
    h.dst = nmod;
    for (const Row& flat : sols.rows()) {
        ResidueMatrix g(n, cm, cn);
        for (size_t i = 0; i < cm; ++i)
            for (size_t j = 0; j < cn; ++j)
                g.at(i, j) = flat[i * cn + j];
        h.gens.push_back(std::move(g));
    }
    return h;
}

// Evaluation of homs at a fixed source element: HomModule -> N, linear in
// the hom. For source R/J and point 1 this is the natural map onto (0:_N J).
inline ModuleMap hom_evaluation(const HomModule& h, const Row& point) {
    u64 n = h.src.ring().modulus();
    ResidueMatrix m(n, h.gens.size(), h.dst.crank());
    for (size_t i = 0; i < h.gens.size(); ++i)
        m.set_row(i, h.gens[i].apply(point));
    return ModuleMap(h.mod, h.dst, m);
}

// ---- enumeration ----------------------------------------------------------

// All action-closed subgroups, canonical and deduplicated, by closure BFS
// over cyclic extensions. Guarded by a cardinality bound on |M|.
inline std::vector<Submodule> enumerate_submodules(const FinModule& m, u64 bound = 256) {
    if (m.order() > bound)
        throw std::runtime_error("enumerate_submodules: module order " +
                                 std::to_string(m.order()) + " exceeds bound " +
                                 std::to_string(bound));
    std::vector<Row> elems = m.elements(bound);
    std::vector<Submodule> found;
    std::set<std::string> seen;
    std::vector<Submodule> queue;
    Submodule z = Submodule::zero(m);
    seen.insert(z.basis().key());
    found.push_back(z);
    queue.push_back(z);
    while (!queue.empty()) {
        Submodule s = queue.back();
        queue.pop_back();
        for (const Row& e : elems) {
            if (s.contains(e))
                continue;
            std::vector<Row> gens = s.basis().rows();
            gens.push_back(e);
            Submodule bigger = Submodule::span_of(m, gens);
            if (seen.insert(bigger.basis().key()).second) {
                found.push_back(bigger);
                queue.push_back(bigger);
            }
        }
    }
    return found;
}

// Canonical coset representatives of (Z/n)^c modulo a Howell span: at each
// relation pivot column the coordinate ranges below the pivot value, and
// freely elsewhere.
inline std::vector<Row> coset_representatives(u64 n, size_t c, const HowellBasis& rel,
                                              u64 cap = 1u << 16) {
    u64 total = 1;
    for (size_t i = 0; i < c; ++i)
        total = checked_mul_u64(total, n, "coset enumeration overflow");
    u64 count = total / rel.span_size();
    if (count > cap)
        throw std::runtime_error("coset enumeration bound exceeded");
    std::vector<u64> radix(c, n);
    for (const Row& r : rel.rows())
        radix[leading_index(r)] = r[leading_index(r)];
    std::vector<Row> out;
    out.reserve(count);
    std::vector<u64> counter(c, 0);
    while (true) {
        out.push_back(counter);
        size_t i = 0;
        while (i < c && ++counter[i] == radix[i])
            counter[i++] = 0;
        if (i == c)
            break;
    }
    if (c == 0)
        return {Row{}};
    return out;
}

// Plain additive subgroups of (Z/n)^c (no ring action), used by family
// enumeration when relations candidates are needed.
inline std::vector<HowellBasis> enumerate_subgroup_spans(u64 n, size_t c, u64 bound = 4096) {
    u64 total = 1;
    for (size_t i = 0; i < c; ++i)
        total = checked_mul_u64(total, n, "subgroup enumeration overflow");
    if (total > bound)
        throw std::runtime_error("enumerate_subgroup_spans: bound exceeded");
    HowellBasis fullspan = HowellBasis::full(n, c);
    std::vector<Row> elems = fullspan.elements(bound);
    std::vector<HowellBasis> found;
    std::set<std::string> seen;
    HowellBasis z(n, c);
    seen.insert(z.key());
    found.push_back(z);
    std::vector<HowellBasis> queue{z};
    while (!queue.empty()) {
        HowellBasis s = queue.back();
        queue.pop_back();
        for (const Row& e : elems) {
            if (s.contains(e))
                continue;
            std::vector<Row> gens = s.rows();
            gens.push_back(e);
            HowellBasis bigger = HowellBasis::of_rows(n, c, gens);
            if (seen.insert(bigger.key()).second) {
                found.push_back(bigger);
                queue.push_back(bigger);
            }
        }
    }
    return found;
}

// Ideals of R = action-closed subgroups of the regular module.
inline std::vector<Ideal> enumerate_ideals(const FiniteRing& r, u64 bound = 4096) {
    FinModule reg = FinModule::regular(r);
    std::vector<Ideal> out;
    for (const Submodule& s : enumerate_submodules(reg, bound))
        out.push_back(Ideal::from_span(r, s.basis()));
    return out;
}

// Verdict on injectivity/surjectivity/bijectivity of an explicit map, with
// the kernel as witness data.
inline Report check_explicit_iso(const ModuleMap& f) {
    Report rep;
    rep.check = "explicit_iso";
    rep.property = "injectivity, surjectivity and bijectivity of an explicit map";
    Submodule ker = f.kernel();
    bool inj = ker.is_zero();
    bool surj = f.image().is_full();
    rep.stats["injective"] = inj;
    rep.stats["surjective"] = surj;
    rep.stats["bijective"] = inj && surj;
    rep.stats["kernel_order"] = ker.order();
    if (!(inj && surj)) {
        rep.verdict = Verdict::fail;
        rep.witnesses.push_back({"kernel", rows_to_json(ker.basis().rows())});
    }
    return rep;
}

} // namespace redmod
