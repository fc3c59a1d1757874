#include "catlim/holim.hpp"

#include "test_support.hpp"

#include "doctest.h"

using namespace catlim;
using testing::Rng;
using testing::sect2_inclusion;

namespace {

// 0 -> S^n <- 0 over the pullback shape a -> b <- c.
Diagram sphere_pullback(int n) {
    FinCategory shape = pullback_shape();
    std::vector<ChainComplex> vertices(3);
    vertices[static_cast<size_t>(*shape.object_by_label("b"))] =
        ChainComplex::concentrated(n, 1);
    std::map<MorId, ChainMap> edges;
    ObjId b = *shape.object_by_label("b");
    for (const char* leg : {"a", "c"}) {
        ObjId x = *shape.object_by_label(leg);
        MorId m = shape.hom(x, b).front();
        edges.emplace(m, ChainMap::zero(ChainComplex(), vertices[static_cast<size_t>(b)]));
    }
    return Diagram::make(shape, std::move(vertices), std::move(edges));
}

Connectivity conn_val(int v) { return Connectivity{false, v}; }

}  // namespace

TEST_CASE("random diagram generator matches its own homology bookkeeping") {
    Rng rng(101010);
    for (int trial = 0; trial < 15; ++trial) {
        FinCategory shape = testing::random_poset(rng, static_cast<int>(rng.uniform(1, 5)), 0.4);
        auto rd = testing::random_diagram(rng, shape, 0, 3, 4);
        for (ObjId i = 0; i < shape.object_count(); ++i)
            for (int d = -1; d <= 4; ++d) {
                HomologyGroup want;
                auto it = rd.expected[static_cast<size_t>(i)].find(d);
                if (it != rd.expected[static_cast<size_t>(i)].end()) want = it->second;
                CHECK(homology(rd.diagram.vertex(i), d) == want);
            }
    }
}

TEST_CASE("connectivity bound on the pullback shape") {
    FinCategory shape = pullback_shape();
    std::map<ObjId, Connectivity> conn;
    conn[*shape.object_by_label("a")] = conn_val(2);
    conn[*shape.object_by_label("b")] = conn_val(5);
    conn[*shape.object_by_label("c")] = conn_val(3);
    CHECK(connectivity_bound(shape, conn) == BoundValue{false, 2});
}

TEST_CASE("connectivity bound on P0(2+) with constant annotations") {
    FinCategory shape = powerset_poset(2, true);
    std::map<ObjId, Connectivity> conn;
    for (ObjId i = 0; i < shape.object_count(); ++i) conn[i] = conn_val(5);
    // min over U of conn - (|U| - 1) = 5 - 2 = 3
    CHECK(connectivity_bound(shape, conn) == BoundValue{false, 3});
}

TEST_CASE("connectivity bound over the empty shape is +infinity") {
    FinCategory shape = discrete_category(0);
    CHECK(connectivity_bound(shape, {}) == BoundValue{true, 0});
}

TEST_CASE("connectivity bound rejects shapes with infinite over-category nerves") {
    FinCategoryBuilder b;
    ObjId x = b.add_object("x");
    MorId e = b.add_morphism("e", x, x);
    b.set_composite(e, e, e);
    FinCategory c = b.build();
    CHECK_THROWS_AS(connectivity_bound(c, {{0, conn_val(0)}}), StructureError);
}

TEST_CASE("total complex over the one-object shape is the vertex complex") {
    Rng rng(5);
    auto rc = testing::random_complex(rng, -1, 3, 3);
    Diagram d = Diagram::make(terminal_category(), {rc.complex}, {});
    TotalComplex tot = total_complex(d);
    CHECK(tot.complex == rc.complex);
}

TEST_CASE("total complex of 0 -> S^n <- 0 behaves like a loop space") {
    for (int n = 1; n <= 4; ++n) {
        Diagram d = sphere_pullback(n);
        TotalComplex tot = total_complex(d);
        // Hand count: one generator at degree n (vertex b, column 0), two at
        // degree n-1 (the two edges into b, column 1), boundary the diagonal.
        CHECK(tot.complex.rank(n) == 1);
        CHECK(tot.complex.rank(n - 1) == 2);
        CHECK(homology(tot.complex, n).trivial());
        CHECK(homology(tot.complex, n - 1) == HomologyGroup{1, {}});
        for (int k = tot.complex.lo(); k < n - 1; ++k) CHECK(homology(tot.complex, k).trivial());
    }
}

TEST_CASE("shapes with a terminal object are cofinal at the homology level") {
    Rng rng(909);
    for (int trial = 0; trial < 12; ++trial) {
        FinCategory shape = testing::random_poset(rng, static_cast<int>(rng.uniform(1, 5)), 0.4, true);
        ObjId top = shape.object_count() - 1;
        auto rd = testing::random_diagram(rng, shape, 0, 3, 3);
        TotalComplex tot = total_complex(rd.diagram);
        const ChainComplex& xt = rd.diagram.vertex(top);
        for (int k = -4; k <= 4; ++k) CHECK(homology(tot.complex, k) == homology(xt, k));
    }
}

TEST_CASE("normalized and truncated unnormalized totalizations agree on small shapes") {
    Rng rng(2718);
    for (int trial = 0; trial < 6; ++trial) {
        FinCategory shape = testing::random_poset(rng, static_cast<int>(rng.uniform(1, 3)), 0.6);
        auto rd = testing::random_diagram(rng, shape, 0, 2, 2);
        TotalComplex tot = total_complex(rd.diagram);
        int vlo = rd.diagram.vertices_lo(), vhi = rd.diagram.vertices_hi();
        int dim = nerve_dimension(shape).dim;
        int cap = (vhi - vlo) + dim + 2;
        ChainComplex un = testing::unnormalized_total(rd.diagram, cap);
        for (int k = vlo - dim; k <= vhi; ++k) CHECK(homology(tot.complex, k) == homology(un, k));
    }
}

TEST_CASE("restriction along the identity is the identity") {
    Rng rng(31);
    FinCategory shape = powerset_poset(1, true);
    auto rd = testing::random_diagram(rng, shape, 0, 2, 3);
    Restriction r = restriction_map(FinFunctor::identity(shape), rd.diagram);
    for (int n = r.total_source.complex.lo(); n <= r.total_source.complex.hi(); ++n)
        CHECK(r.map.matrix(n) ==
              IMat(IMat::Identity(r.total_source.rank(n), r.total_source.rank(n))));
}

TEST_CASE("restriction to the terminal vertex of the pullback is the b-column projection") {
    Rng rng(77);
    for (int trial = 0; trial < 8; ++trial) {
        FinCategory shape = pullback_shape();
        ObjId b = *shape.object_by_label("b");
        auto rd = testing::random_diagram(rng, shape, 0, 3, 3);
        FinCategory pt = terminal_category();
        FinFunctor pick = poset_functor(pt, shape, {b});
        Restriction r = restriction_map(pick, rd.diagram);
        CHECK(r.total_pullback.complex == rd.diagram.vertex(b));
        for (int n = r.total_source.complex.lo(); n <= r.total_source.complex.hi(); ++n) {
            IMat expect = IMat::Zero(r.total_pullback.rank(n), r.total_source.rank(n));
            Index col0 = r.total_source.block_offset(n, 0, b);
            if (col0 >= 0)
                for (Index e = 0; e < r.total_pullback.rank(n); ++e) expect(e, col0 + e) = 1;
            CHECK(r.map.matrix(n) == expect);
        }
    }
}

TEST_CASE("restriction maps compose functorially") {
    Rng rng(4242);
    for (int trial = 0; trial < 8; ++trial) {
        FinCategory j = testing::random_poset(rng, static_cast<int>(rng.uniform(2, 5)), 0.5);
        FinFunctor g = testing::random_subposet_inclusion(rng, j);
        FinFunctor f = testing::random_subposet_inclusion(rng, g.source());
        auto rd = testing::random_diagram(rng, j, 0, 2, 2);
        Restriction rg = restriction_map(g, rd.diagram);
        Restriction rf = restriction_map(f, pullback_diagram(g, rd.diagram));
        Restriction rgf = restriction_map(compose(g, f), rd.diagram);
        for (int n = rgf.total_pullback.complex.lo() - 1; n <= rgf.total_pullback.complex.hi() + 1; ++n)
            CHECK(IMat(rf.map.matrix(n) * rg.map.matrix(n)) == rgf.map.matrix(n));
    }
}

TEST_CASE("restriction commutes with the total differential on random instances") {
    // ChainMap::make inside restriction_map asserts this; the loop exercises
    // a spread of shapes and functors.
    Rng rng(10101);
    for (int trial = 0; trial < 25; ++trial) {
        FinCategory j = testing::random_poset(rng, static_cast<int>(rng.uniform(1, 5)), 0.45);
        FinCategory i = testing::random_poset(rng, static_cast<int>(rng.uniform(1, 4)), 0.45);
        FinFunctor f = testing::random_poset_functor(rng, i, j);
        auto rd = testing::random_diagram(rng, j, 0, 2, 2);
        Restriction r = restriction_map(f, rd.diagram);
        CHECK(r.map.source() == r.total_source.complex);
    }
}

TEST_CASE("extension over the cofiber restricts back to the original diagram") {
    Rng rng(999);
    FinCategory j = powerset_poset(1, true);
    auto rd = testing::random_diagram(rng, j, 0, 2, 3);
    Extension ext = extend_over_cofiber(FinFunctor::identity(j), rd.diagram);
    const CofiberData& c = ext.cofiber;
    for (ObjId x = 0; x < j.object_count(); ++x)
        CHECK(ext.diagram.vertex(c.iota.on_object(x)) == rd.diagram.vertex(x));
    for (MorId u = 0; u < j.morphism_count(); ++u) {
        if (j.morphism(u).is_identity) continue;
        CHECK(ext.diagram.edge(c.iota.on_morphism(u)).matrix(1) == rd.diagram.edge(u).matrix(1));
    }
    // Vertices over I-objects carry X_{F(i)}.
    for (ObjId i = 0; i < j.object_count(); ++i)
        CHECK(ext.diagram.vertex(c.kappa.on_object(i)) == rd.diagram.vertex(i));
    CHECK(ext.diagram.vertex(c.star).is_zero());
}

TEST_CASE("extension over the worked example cofiber is functorial") {
    Rng rng(777);
    FinFunctor f = sect2_inclusion();
    auto rd = testing::random_diagram(rng, f.target(), 0, 2, 2);
    Extension ext = extend_over_cofiber(f, rd.diagram);  // Diagram::make validates
    CHECK(ext.diagram.shape().object_count() == 11);
}

TEST_CASE("bound verification on sphere pullbacks is tight") {
    for (int n = 2; n <= 4; ++n) {
        Diagram d = sphere_pullback(n);
        BoundReport rep = verify_connectivity_bound(d);
        CHECK(rep.pass());
        CHECK(rep.bound == BoundValue{false, n - 2});
        REQUIRE(rep.first_nonzero.has_value());
        CHECK(*rep.first_nonzero == n - 1);
        CHECK(rep.tot_homology.at(n - 1) == HomologyGroup{1, {}});
    }
}

TEST_CASE("bound verification on diagrams of zero complexes") {
    FinCategory shape = pullback_shape();
    std::vector<ChainComplex> vertices(3);
    std::map<MorId, ChainMap> edges;
    for (MorId m = 0; m < shape.morphism_count(); ++m)
        if (!shape.morphism(m).is_identity)
            edges.emplace(m, ChainMap::zero(ChainComplex(), ChainComplex()));
    Diagram d = Diagram::make(shape, std::move(vertices), std::move(edges));
    BoundReport rep = verify_connectivity_bound(d);
    CHECK(rep.pass());
    CHECK(rep.bound.plus_infinite);
    CHECK(!rep.first_nonzero.has_value());
}

TEST_CASE("bound verification on random diagrams over mixed shapes") {
    Rng rng(20260101);
    std::vector<FinCategory> shapes = {pullback_shape(), powerset_poset(2, true), arrow_shape()};
    for (int trial = 0; trial < 12; ++trial) {
        FinCategory shape = trial < 3
                                ? shapes[static_cast<size_t>(trial)]
                                : testing::random_poset(rng, static_cast<int>(rng.uniform(1, 5)), 0.4);
        auto rd = testing::random_diagram(rng, shape, 0, 3, 3);
        BoundReport rep = verify_connectivity_bound(rd.diagram);
        CHECK(rep.pass());
    }
}

TEST_CASE("declared connectivity annotations are verified, not trusted") {
    FinCategory pt = terminal_category();
    ChainComplex s0 = ChainComplex::concentrated(0, 1);
    CHECK_THROWS_AS(
        Diagram::make(pt, {s0}, {}, {{0, conn_val(3)}}),
        StructureError);
    Diagram ok = Diagram::make(pt, {s0}, {}, {{0, conn_val(-1)}});
    CHECK(connectivity_bound(ok) == BoundValue{false, -1});
}

TEST_CASE("fiber comparison for the identity functor") {
    Rng rng(31415);
    FinCategory j = powerset_poset(1, true);
    auto rd = testing::random_diagram(rng, j, 0, 2, 2);
    FiberReport rep = verify_fiber_comparison(FinFunctor::identity(j), rd.diagram, 3);
    CHECK(rep.pass());
}

TEST_CASE("fiber comparison for the empty inclusion is the identity on Tot_J") {
    Rng rng(1618);
    FinCategory j = powerset_poset(1, true);
    auto rd = testing::random_diagram(rng, j, 0, 2, 2);
    FinCategory empty = discrete_category(0);
    FinFunctor f = FinFunctor::make(empty, j, {}, {});
    FiberComparison fc = fiber_comparison(f, rd.diagram);
    CHECK(fc.along_f.total_pullback.complex.is_zero());
    FiberReport rep = verify_fiber_comparison(f, rd.diagram, 3);
    CHECK(rep.pass());
}

TEST_CASE("fiber comparison on the worked example") {
    Rng rng(2025);
    FinFunctor f = sect2_inclusion();
    auto rd = testing::random_diagram(rng, f.target(), 0, 2, 2);
    FiberReport rep = verify_fiber_comparison(f, rd.diagram, 3);
    CHECK(rep.pass());
}

TEST_CASE("fiber comparison on random poset functors") {
    Rng rng(171717);
    for (int trial = 0; trial < 8; ++trial) {
        FinCategory j = testing::random_poset(rng, static_cast<int>(rng.uniform(1, 4)), 0.45);
        FinFunctor f = trial % 2 == 0 ? testing::random_subposet_inclusion(rng, j)
                                      : testing::random_poset_functor(
                                            rng,
                                            testing::random_poset(
                                                rng, static_cast<int>(rng.uniform(1, 4)), 0.45),
                                            j);
        auto rd = testing::random_diagram(rng, j, 0, 2, 2);
        FiberReport rep = verify_fiber_comparison(f, rd.diagram, 3);
        CHECK(rep.pass());
    }
}
