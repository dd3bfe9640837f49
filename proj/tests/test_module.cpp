#include "redmod/module.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace redmod;

namespace {

std::set<Row> element_set(const FinModule& m) {
    auto e = m.elements();
    return std::set<Row>(e.begin(), e.end());
}

// brute-force annihilator: reduce every element, test j*m = 0 for all j
std::set<Row> brute_annihilator(const FinModule& m, const Ideal& j) {
    std::set<Row> out;
    for (const Row& e : m.elements())
        if (std::all_of(j.basis().rows().begin(), j.basis().rows().end(),
                        [&](const Row& g) { return m.is_zero_element(m.action_of(g).apply(e)); }))
            out.insert(e);
    return out;
}

std::set<Row> brute_scale(const FinModule& m, const Ideal& j) {
    std::set<Row> gens;
    for (const Row& e : m.elements())
        for (const Row& g : j.elements())
            gens.insert(m.reduce(m.action_of(g).apply(e)));
    // close under addition
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Row> cur(gens.begin(), gens.end());
        for (const Row& a : cur)
            for (const Row& b : cur)
                if (gens.insert(m.reduce(row_add(a, b, m.ring().modulus()))).second)
                    grew = true;
    }
    return gens;
}

std::set<Row> submodule_element_set(const Submodule& s) {
    std::set<Row> out;
    for (const Row& e : s.basis().elements())
        out.insert(s.parent().reduce(e));
    return out;
}

} // namespace

TEST_CASE("regular module of Z/8 and its annihilators") {
    auto r = make_zn(8);
    auto m = FinModule::regular(r);
    REQUIRE(m.order() == 8);
    auto two = Ideal::generate(r, {{2}});

    auto ann = annihilator_submodule(m, two);
    REQUIRE(submodule_element_set(ann) == std::set<Row>{{0}, {4}});
    REQUIRE(brute_annihilator(m, two) == std::set<Row>{{0}, {4}});

    REQUIRE(annihilator_submodule(m, Ideal::zero(r)).is_full());
}

TEST_CASE("ideal scaling") {
    auto r = make_zn(8);
    auto m = FinModule::regular(r);
    auto two = Ideal::generate(r, {{2}});
    auto s = ideal_scale(m, two);
    REQUIRE(submodule_element_set(s) == std::set<Row>{{0}, {2}, {4}, {6}});
    REQUIRE(brute_scale(m, two) == submodule_element_set(s));
    REQUIRE(ideal_scale(m, Ideal::unit(r)).is_full());

    auto rf = make_product({make_gf(2), make_gf(2)});
    auto mf = FinModule::regular(rf);
    auto ie = Ideal::generate(rf, {rf.component_idempotents()[0]});
    auto sf = ideal_scale(mf, ie);
    REQUIRE(sf.order() == 2);
    REQUIRE(sf.contains(rf.component_idempotents()[0]));
    REQUIRE(brute_scale(mf, ie) == submodule_element_set(sf));
}

TEST_CASE("quotient modules and cardinality multiplicativity") {
    auto r = make_zn(8);
    auto m = FinModule::regular(r);
    SECTION("M/M is zero") {
        auto q = quotient_module(m, Submodule::full(m));
        REQUIRE(q.mod.order() == 1);
    }
    SECTION("Z/8 by {0,4} has order 4 and is killed by 4") {
        auto n = Submodule::span_of(m, {{4}});
        auto q = quotient_module(m, n);
        REQUIRE(q.mod.order() == 4);
        REQUIRE(m.order() == n.order() * q.mod.order());
        auto four = Ideal::generate(r, {{4}});
        REQUIRE(annihilator_submodule(q.mod, four).is_full());
        REQUIRE(q.projection.surjective());
    }
    SECTION("Z/8 by (2) has order 2") {
        auto n = Submodule::span_of(m, {{2}});
        auto q = quotient_module(m, n);
        REQUIRE(q.mod.order() == 2);
        REQUIRE(m.order() == n.order() * q.mod.order());
    }
}

TEST_CASE("hom module examples") {
    auto r = make_zn(8);
    SECTION("Hom(R, N) is isomorphic to N via evaluation at 1") {
        auto reg = FinModule::regular(r);
        auto n = FinModule::quotient_ring_module(r, Ideal::generate(r, {{4}}));
        auto h = hom_module(reg, n);
        REQUIRE(h.mod.order() == n.order());
        auto ev = hom_evaluation(h, r.one());
        REQUIRE(ev.bijective());
    }
    SECTION("Hom(Z/2, Z/8) has order 2") {
        auto z2 = FinModule::quotient_ring_module(r, Ideal::generate(r, {{2}}));
        auto reg = FinModule::regular(r);
        auto h = hom_module(z2, reg);
        REQUIRE(h.mod.order() == 2);
        // maps land in {0,4}
        for (const auto& g : h.gens) {
            Row img = g.apply({1});
            REQUIRE((img == Row{0} || img == Row{4}));
        }
    }
    SECTION("hom from an e1-module to an e2-module vanishes") {
        auto rf = make_product({make_gf(2), make_gf(2)});
        auto e1 = Ideal::generate(rf, {rf.component_idempotents()[0]});
        auto e2 = Ideal::generate(rf, {rf.component_idempotents()[1]});
        auto m1 = FinModule::quotient_ring_module(rf, e2); // e1 acts as 1
        auto m2 = FinModule::quotient_ring_module(rf, e1); // e1 acts as 0
        auto h = hom_module(m1, m2);
        REQUIRE(h.mod.order() == 1);
    }
}

TEST_CASE("hom cardinality equals annihilator cardinality for cyclic sources") {
    auto r = make_zn(8);
    auto rf = make_product({make_gf(2), make_gf(2)});
    for (const FiniteRing& ring : {r, rf}) {
        for (const Ideal& i : enumerate_ideals(ring)) {
            auto src = FinModule::quotient_ring_module(ring, i);
            for (const Ideal& j : enumerate_ideals(ring)) {
                auto m = FinModule::quotient_ring_module(ring, j);
                auto h = hom_module(src, m);
                auto ann = annihilator_submodule(m, i);
                REQUIRE(h.mod.order() == ann.order());
                auto ev = hom_evaluation(h, ring.one());
                REQUIRE(ev.injective());
                REQUIRE(ev.image() == ann);
            }
        }
    }
}

TEST_CASE("direct sums") {
    auto r = make_zn(4);
    auto z2 = FinModule::quotient_ring_module(r, Ideal::generate(r, {{2}}));
    auto s = direct_sum(z2, z2);
    REQUIRE(s.order() == 4);
    auto two = Ideal::generate(r, {{2}});
    REQUIRE(ideal_scale(s, two).is_zero());

    auto z = FinModule::zero(r);
    auto m = FinModule::regular(r);
    REQUIRE(direct_sum(m, z).order() == m.order());

    auto rf = make_product({make_gf(2), make_gf(2)});
    auto a = FinModule::quotient_ring_module(rf, Ideal::generate(rf, {rf.component_idempotents()[1]}));
    auto b = FinModule::quotient_ring_module(rf, Ideal::generate(rf, {rf.component_idempotents()[0]}));
    auto ab = direct_sum(a, b);
    REQUIRE(ab.order() == FinModule::regular(rf).order());
}

TEST_CASE("submodule enumeration") {
    auto r = make_zn(8);
    auto m = FinModule::regular(r);
    auto subs = enumerate_submodules(m);
    REQUIRE(subs.size() == 4); // 0, (4), (2), R

    auto z = FinModule::zero(r);
    REQUIRE(enumerate_submodules(z).size() == 1);

    auto rf = make_product({make_gf(2), make_gf(2)});
    auto mf = FinModule::regular(rf);
    REQUIRE(enumerate_submodules(mf).size() == 4); // 0, e1R, e2R, R

    REQUIRE_THROWS(enumerate_submodules(m, 4));
}

TEST_CASE("submodule presentation round trip") {
    auto r = make_zn(8);
    auto m = FinModule::regular(r);
    auto s = Submodule::span_of(m, {{2}});
    auto p = submodule_as_module(s);
    REQUIRE(p.mod.order() == 4);
    REQUIRE(p.inclusion.injective());
    REQUIRE(p.inclusion.image() == s);
}

TEST_CASE("explicit iso checks") {
    auto r = make_zn(8);
    auto m = FinModule::regular(r);
    SECTION("identity is bijective") {
        auto rep = check_explicit_iso(ModuleMap::identity(m));
        REQUIRE(rep.passed());
        REQUIRE(rep.stats["bijective"] == true);
    }
    SECTION("annihilator climbing map (0:4) -> (0 :_{M/(0:2)} 2)") {
        auto i = Ideal::generate(r, {{2}});
        auto ann1 = annihilator_submodule(m, i);                    // (0:2) = {0,4}
        auto ann2 = annihilator_submodule(m, ideal_power(i, 2));    // (0:4) = {0,2,4,6}
        auto q = quotient_module(m, ann1);
        auto annq = annihilator_submodule(q.mod, i);
        auto p2 = submodule_as_module(ann2);
        // map: include (0:4) into M, then project to M/(0:2)
        auto f = p2.inclusion.compose(q.projection);
        auto rep = check_explicit_iso(f);
        REQUIRE(rep.stats["surjective"] == false); // image is annq, not all of q
        REQUIRE(f.image() == Submodule::from_span(q.mod, annq.basis()));
        // kernel is (0:2) viewed inside the presentation of (0:4)
        auto ker = f.kernel();
        REQUIRE(ker.order() == ann1.order());
    }
}

TEST_CASE("preradical law for sampled maps") {
    // f((0:_M I)) is contained in (0:_N I) for every map between samples
    auto r = make_zn(4);
    auto i = Ideal::generate(r, {{2}});
    std::vector<FinModule> mods;
    for (const Ideal& j : enumerate_ideals(r))
        mods.push_back(FinModule::quotient_ring_module(r, j));
    for (const auto& a : mods)
        for (const auto& b : mods) {
            auto h = hom_module(a, b);
            auto anna = annihilator_submodule(a, i);
            auto annb = annihilator_submodule(b, i);
            for (const auto& g : h.gens)
                for (const Row& x : anna.basis().rows())
                    REQUIRE(annb.contains(g.apply(x)));
        }
}
