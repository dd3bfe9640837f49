#include "redmod/torsion.hpp"

#include <catch_amalgamated.hpp>

using namespace redmod;

namespace {

FiniteRing z8() { return make_zn(8); }
FiniteRing f2f2() { return make_product({make_gf(2), make_gf(2)}); }

} // namespace

TEST_CASE("gamma on Z/8 with I = (2) is everything, stabilizing at 3") {
    auto r = z8();
    auto m = FinModule::regular(r);
    auto i = Ideal::generate(r, {{2}});
    auto p = chain_profile(m, i);
    REQUIRE(p.asc_stab_index == 3); // (0:2) < (0:4) < (0:8) = M
    REQUIRE(p.gamma().is_full());
    REQUIRE(gamma(m, i).is_full());
}

TEST_CASE("gamma with the unit ideal is zero") {
    auto r = z8();
    auto m = FinModule::regular(r);
    REQUIRE(gamma(m, Ideal::unit(r)).is_zero());
}

TEST_CASE("gamma over F2xF2 with an idempotent ideal equals the annihilator") {
    auto r = f2f2();
    auto m = FinModule::regular(r);
    auto i = Ideal::generate(r, {r.component_idempotents()[0]});
    auto g = gamma(m, i);
    REQUIRE(g == annihilator_submodule(m, i));
    REQUIRE(g.order() == 2);
    REQUIRE(g.contains(r.component_idempotents()[1]));
}

TEST_CASE("gamma_bar") {
    auto r = z8();
    auto m = FinModule::regular(r);
    SECTION("2 is nilpotent so gamma_bar is everything") {
        REQUIRE(gamma_bar(m, Ideal::generate(r, {{2}})).is_full());
    }
    SECTION("zero ideal gives everything") {
        REQUIRE(gamma_bar(m, Ideal::zero(r)).is_full());
    }
    SECTION("gamma is contained in gamma_bar, equal on reduced modules") {
        for (const Ideal& i : enumerate_ideals(r)) {
            auto g = gamma(m, i);
            auto gb = gamma_bar(m, i);
            REQUIRE(gb.basis().contains_all(g.basis().rows()));
            if (is_reduced(m, i))
                REQUIRE(g == gb);
        }
    }
}

TEST_CASE("lambda") {
    auto r = z8();
    auto m = FinModule::regular(r);
    SECTION("I = (2): the scale chain reaches zero, so Lambda(M) = M") {
        auto res = lambda(m, Ideal::generate(r, {{2}}));
        REQUIRE(res.completion.order() == 8);
        REQUIRE(res.projection.bijective());
        REQUIRE(res.stable_index == 3);
    }
    SECTION("zero ideal gives M back") {
        auto res = lambda(m, Ideal::zero(r));
        REQUIRE(res.projection.bijective());
    }
    SECTION("coreduced module: Lambda(M) = M/IM") {
        auto rf = f2f2();
        auto mf = FinModule::regular(rf);
        auto i = Ideal::generate(rf, {rf.component_idempotents()[0]});
        REQUIRE(is_coreduced(mf, i));
        auto res = lambda(mf, i);
        auto direct = quotient_module(mf, ideal_scale(mf, i));
        REQUIRE(res.completion.order() == direct.mod.order());
        REQUIRE(res.completion == direct.mod);
    }
}

TEST_CASE("reducedness predicates") {
    auto r = z8();
    auto m = FinModule::regular(r);
    auto i = Ideal::generate(r, {{2}});
    REQUIRE_FALSE(is_reduced(m, i));
    REQUIRE(reduction_index(m, i) == 3);
    REQUIRE(is_k_reduced(m, i, 3));
    REQUIRE_FALSE(is_k_reduced(m, i, 2));

    auto rf = f2f2();
    auto mf = FinModule::regular(rf); // semisimple
    for (const Ideal& j : enumerate_ideals(rf)) {
        REQUIRE(is_reduced(mf, j));
        REQUIRE(is_coreduced(mf, j));
    }

    auto z = FinModule::zero(r);
    REQUIRE(is_reduced(z, i));
    REQUIRE(is_coreduced(z, i));
    REQUIRE(is_torsion(z, i));
    REQUIRE(is_complete(z, i));
}

TEST_CASE("torsion and completeness") {
    auto r = z8();
    auto m = FinModule::regular(r);
    auto i = Ideal::generate(r, {{2}});
    REQUIRE(is_torsion(m, i));
    REQUIRE(is_complete(m, i));

    auto rf = f2f2();
    auto e1 = Ideal::generate(rf, {rf.component_idempotents()[0]});
    auto m2 = FinModule::quotient_ring_module(rf, e1); // e1 kills it
    REQUIRE(is_torsion(m2, e1));
    REQUIRE(is_complete(m2, e1));

    REQUIRE(is_torsion(m, Ideal::zero(r)));
    REQUIRE(is_complete(m, Ideal::zero(r)));
    REQUIRE_FALSE(is_torsion(m, Ideal::unit(r)));
}

TEST_CASE("locally nilradical") {
    auto r = z8();
    auto m = FinModule::regular(r);
    SECTION("units contribute nothing") {
        REQUIRE(locally_nilradical(m, {1}).is_zero());
        REQUIRE(locally_nilradical(m, {3}).is_zero());
    }
    SECTION("a = 2 on Z/8") {
        auto s = locally_nilradical(m, {2});
        REQUIRE(s.order() == 4); // 2 * Z/8 = {0,2,4,6}
    }
    SECTION("semisimple modules are reduced: all locally nilradicals vanish") {
        auto rf = f2f2();
        auto mf = FinModule::regular(rf);
        for (const Row& a : rf.elements())
            REQUIRE(locally_nilradical(mf, a).is_zero());
    }
}

TEST_CASE("idempotence of gamma and lambda") {
    auto r = z8();
    auto rf = f2f2();
    for (const FiniteRing& ring : {r, rf}) {
        for (const Ideal& j : enumerate_ideals(ring)) {
            for (const Ideal& k : enumerate_ideals(ring)) {
                auto m = FinModule::quotient_ring_module(ring, k);
                // gamma(gamma(M)) = gamma(M)
                auto g = gamma(m, j);
                auto gm = submodule_as_module(g);
                REQUIRE(gamma(gm.mod, j).is_full());
                // lambda(lambda(M)) = lambda(M)
                auto l = lambda(m, j);
                auto l2 = lambda(l.completion, j);
                REQUIRE(l2.projection.bijective());
            }
        }
    }
}

TEST_CASE("left exactness: gamma of a submodule is the trace of gamma") {
    auto r = z8();
    auto m = FinModule::regular(r);
    for (const Ideal& j : enumerate_ideals(r)) {
        auto g = gamma(m, j);
        for (const Submodule& s : enumerate_submodules(m)) {
            auto sm = submodule_as_module(s);
            auto gs = gamma(sm.mod, j);
            // map gs through the inclusion and compare with s intersect g
            std::vector<Row> img;
            for (const Row& row : gs.basis().rows())
                img.push_back(sm.inclusion.matrix().apply(row));
            auto traced = Submodule::span_of(m, img);
            REQUIRE(traced == s.intersect(g));
        }
    }
}

TEST_CASE("stabilization bound: indices at most log2 of the order plus one") {
    auto r = z8();
    auto m = FinModule::regular(r);
    for (const Ideal& j : enumerate_ideals(r)) {
        auto p = chain_profile(m, j);
        u64 lg = 0, o = m.order();
        while (o > 1) {
            o /= 2;
            ++lg;
        }
        REQUIRE(p.asc_stab_index <= lg + 1);
        REQUIRE(p.desc_stab_index <= lg + 1);
    }
}

TEST_CASE("reduced modules realize gamma at the first stage") {
    auto rf = f2f2();
    auto mf = FinModule::regular(rf);
    for (const Ideal& j : enumerate_ideals(rf)) {
        REQUIRE(is_reduced(mf, j));
        REQUIRE(gamma(mf, j) == annihilator_submodule(mf, j));
    }
}
