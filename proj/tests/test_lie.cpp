#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>

#include "bvh/lie.hpp"

using namespace bvh;

namespace {

// Owns everything buildHH1Lie needs, so tests can pass fixtures around.
struct LieFixture {
    Group G;
    int p;
    CohomologyContext coh;
    std::unique_ptr<HHContext> ctx;
    HH1Lie L;

    LieFixture(const std::string& spec, int prime)
        : G(constructGroup(spec)), p(prime) {
        ctx = std::make_unique<HHContext>(G, p, coh);
        L = buildHH1Lie(*ctx);
    }
};

// z (x) hom as a flat coordinate vector; z must be central so that its
// conjugacy class is the singleton {z} and its centraliser is all of G.
FpVec tensorAt(LieFixture& f, int z, const Cochain& homOnG) {
    const Group& G = f.ctx->group();
    const CentraliserData& C = f.ctx->componentOf(z);
    REQUIRE(C.rep == z);
    std::vector<int> values(G.order(), 0);
    for (int a = 0; a < G.order(); ++a)
        if (a != G.identity()) values[a] = homOnG.value({a});
    Cochain hom = homCochain(C.emb.group, f.p, values);
    return lieCoordsOf(f.L, hhComponentElement(*f.ctx, z, f.coh.classOf(hom)));
}

FpVec zeroVec(const HH1Lie& L) { return FpVec(L.algebra.dim, 0); }

}  // namespace

TEST_CASE("trivial group gives the zero algebra") {
    LieFixture f("cyclic:1", 2);
    CHECK(f.L.algebra.dim == 0);
    CHECK(verifyLieAxioms(f.L.algebra).pass);
    DerivedSeriesAnalysis a = derivedSeriesAnalysis(f.L.algebra);
    CHECK(a.soluble);
    CHECK(a.derivedLength == 0);
    CHECK(a.nilpotent);
    CHECK(a.derivedSeriesDims == std::vector<int>{0});
}

TEST_CASE("dimension and axioms for dihedral of order 8") {
    LieFixture f("dihedral:8", 2);
    CHECK(f.L.algebra.dim == 9);
    CHECK(verifyLieAxioms(f.L.algebra).pass);
}

TEST_CASE("coordinate round trip") {
    LieFixture f("quaternion:8", 2);
    for (int i = 0; i < f.L.algebra.dim; ++i) {
        FpVec v = zeroVec(f.L);
        v[i] = 1;
        if (i + 3 < f.L.algebra.dim) v[i + 3] = 1;
        CHECK(lieCoordsOf(f.L, lieElementOf(f.L, v)) == v);
    }
}

TEST_CASE("abelian groups follow the tensor bracket formula") {
    // [a (x) x, b (x) y] = ab (x) (-x(b) y + y(a) x)
    for (auto [spec, p] : {std::pair<std::string, int>{"cyclic:4", 2},
                           {"elementary:2:2", 2},
                           {"cyclic:3", 3},
                           {"elementary:3:2", 3}}) {
        LieFixture f(spec, p);
        const Group& G = f.G;
        std::vector<Cochain> homs = h1Homs(G, f.p);
        auto at = [&](const Cochain& c, int a) {
            return a == G.identity() ? 0 : c.value({a});
        };
        for (int a = 0; a < G.order(); ++a)
            for (int b = 0; b < G.order(); ++b)
                for (const Cochain& x : homs)
                    for (const Cochain& y : homs) {
                        FpVec lhs = f.L.algebra.bracket(tensorAt(f, a, x),
                                                        tensorAt(f, b, y));
                        Cochain rhs = y.scaled((f.p - at(x, b)) % f.p) +
                                      x.scaled(at(y, a));
                        CHECK(lhs == tensorAt(f, G.mul(a, b), rhs));
                    }
    }
}

TEST_CASE("k(Z n Phi) tensor H^1 has zero bracket") {
    for (auto [spec, p] : {std::pair<std::string, int>{"cyclic:4", 2},
                           {"cyclic:8", 2},
                           {"dihedral:8", 2},
                           {"quaternion:8", 2},
                           {"semidihedral:16", 2},
                           {"cyclic:9", 3}}) {
        LieFixture f(spec, p);
        Subgroup K = intersect(center(f.G), frattiniSubgroup(f.G));
        std::vector<Cochain> homs = h1Homs(f.G, f.p);
        for (int z : K.elements)
            for (int w : K.elements)
                for (const Cochain& x : homs)
                    for (const Cochain& y : homs)
                        CHECK(f.L.algebra.bracket(tensorAt(f, z, x),
                                                  tensorAt(f, w, y)) == zeroVec(f.L));
    }
}

TEST_CASE("kZ(G) tensor H^1 is a Lie subalgebra") {
    for (auto [spec, p] : {std::pair<std::string, int>{"dihedral:8", 2},
                           {"quaternion:8", 2},
                           {"modular:3", 3}}) {
        LieFixture f(spec, p);
        Subgroup Z = center(f.G);
        std::vector<Cochain> homs = h1Homs(f.G, f.p);
        std::vector<FpDenseVec> gens;
        std::vector<FpVec> flat;
        for (int z : Z.elements)
            for (const Cochain& x : homs) {
                flat.push_back(tensorAt(f, z, x));
                gens.push_back(FpDenseVec::fromVec(flat.back(), f.p));
            }
        FpSubspaceBasis span = echelonise(gens, f.L.algebra.dim, f.p);
        for (const FpVec& a : flat)
            for (const FpVec& b : flat)
                CHECK(span.contains(
                    FpDenseVec::fromVec(f.L.algebra.bracket(a, b), f.p)));
    }
}

TEST_CASE("cyclic of order 3 carries an sl(2) triple") {
    LieFixture f("cyclic:3", 3);
    CHECK(f.L.algebra.dim == 3);
    NonsolubleWitness w = constructNonsolubleWitness(f.L);
    CHECK(w.kind == NonsolubleWitness::Kind::Sl2Triple);
    CHECK(w.verified);
    DerivedSeriesAnalysis a = derivedSeriesAnalysis(f.L.algebra);
    CHECK_FALSE(a.soluble);
    CHECK(a.derivedSeriesDims.back() == a.derivedSeriesDims[a.derivedSeriesDims.size() - 2]);
}

TEST_CASE("cyclic of order 9 carries an sl(2) triple") {
    LieFixture f("cyclic:9", 3);
    NonsolubleWitness w = constructNonsolubleWitness(f.L);
    CHECK(w.kind == NonsolubleWitness::Kind::Sl2Triple);
    CHECK(w.verified);
    CHECK_FALSE(derivedSeriesAnalysis(f.L.algebra).soluble);
}

TEST_CASE("Klein four group carries a self-reproducing subspace") {
    LieFixture f("elementary:2:2", 2);
    NonsolubleWitness w = constructNonsolubleWitness(f.L);
    CHECK(w.kind == NonsolubleWitness::Kind::SelfReproducing);
    CHECK(w.spanning.size() == 10);
    CHECK(w.verified);
    CHECK_FALSE(derivedSeriesAnalysis(f.L.algebra).soluble);
}

TEST_CASE("cyclic of order 2 misses the hypothesis and is soluble") {
    LieFixture f("cyclic:2", 2);
    CHECK(f.L.algebra.dim == 2);
    NonsolubleWitness w = constructNonsolubleWitness(f.L);
    CHECK(w.kind == NonsolubleWitness::Kind::HypothesisNotMet);
    DerivedSeriesAnalysis a = derivedSeriesAnalysis(f.L.algebra);
    CHECK(a.soluble);
    CHECK(a.derivedLength == 2);
}

TEST_CASE("extraspecial derived lengths") {
    SUBCASE("quaternion of order 8: length two") {
        LieFixture f("quaternion:8", 2);
        DerivedSeriesAnalysis a = derivedSeriesAnalysis(f.L.algebra);
        CHECK(a.soluble);
        CHECK(a.derivedLength == 2);
        CHECK(constructNonsolubleWitness(f.L).kind ==
              NonsolubleWitness::Kind::HypothesisNotMet);
    }
    SUBCASE("dihedral of order 8: length three") {
        LieFixture f("dihedral:8", 2);
        DerivedSeriesAnalysis a = derivedSeriesAnalysis(f.L.algebra);
        CHECK(a.soluble);
        CHECK(a.derivedLength == 3);
    }
    SUBCASE("extraspecial 27 of exponent 3: length two") {
        LieFixture f("extraspecial:3:27", 3);
        DerivedSeriesAnalysis a = derivedSeriesAnalysis(f.L.algebra);
        CHECK(a.soluble);
        CHECK(a.derivedLength == 2);
    }
    SUBCASE("modular group of order 27: length three") {
        LieFixture f("modular:3", 3);
        DerivedSeriesAnalysis a = derivedSeriesAnalysis(f.L.algebra);
        CHECK(a.soluble);
        CHECK(a.derivedLength == 3);
    }
    SUBCASE("order 32 central products: length two") {
        for (const char* spec : {"centralproduct:dihedral:8:dihedral:8",
                                 "centralproduct:dihedral:8:quaternion:8"}) {
            LieFixture f(spec, 2);
            DerivedSeriesAnalysis a = derivedSeriesAnalysis(f.L.algebra);
            CHECK(a.soluble);
            CHECK(a.derivedLength == 2);
        }
    }
    SUBCASE("extraspecial 125 of exponent 5: length two") {
        LieFixture f("extraspecial:5:125", 5);
        DerivedSeriesAnalysis a = derivedSeriesAnalysis(f.L.algebra);
        CHECK(a.soluble);
        CHECK(a.derivedLength == 2);
    }
}

TEST_CASE("no nontrivial p-group is nilpotent") {
    for (auto [spec, p] : {std::pair<std::string, int>{"cyclic:2", 2},
                           {"cyclic:4", 2},
                           {"cyclic:8", 2},
                           {"elementary:2:2", 2},
                           {"dihedral:8", 2},
                           {"quaternion:8", 2},
                           {"dihedral:16", 2},
                           {"quaternion:16", 2},
                           {"semidihedral:16", 2},
                           {"cyclic:3", 3},
                           {"cyclic:9", 3},
                           {"elementary:3:2", 3},
                           {"extraspecial:3:27", 3},
                           {"modular:3", 3},
                           {"cyclic:5", 5}}) {
        LieFixture f(spec, p);
        NonNilpotencyWitness w = constructNonNilpotencyWitness(f.L);
        CHECK(w.verified);
        CHECK_FALSE(derivedSeriesAnalysis(f.L.algebra).nilpotent);
    }
}

TEST_CASE("corrupted structure constants fail the axiom check") {
    LieFixture f("dihedral:8", 2);
    LieAlgebra broken = f.L.algebra;
    broken.c[0][0][1] = 1;  // violates [b_0, b_0] = 0
    LieAxiomReport r = verifyLieAxioms(broken);
    CHECK_FALSE(r.pass);
    CHECK(r.violation.find("b_0") != std::string::npos);
    CHECK_THROWS_AS(derivedSeriesAnalysis(broken), LieError);

    LieAlgebra skewed = f.L.algebra;
    skewed.c[0][1][0] = (skewed.c[0][1][0] + 1) % 2;
    CHECK_FALSE(verifyLieAxioms(skewed).pass);
}
