#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "bvh/group.hpp"

using namespace bvh;

namespace {

// Independent conjugacy computation by orbit closure, for cross-checking
// the library's version.
std::vector<std::vector<int>> conjClassOracle(const Group& G) {
    std::vector<std::vector<int>> classes;
    std::vector<bool> seen(G.order(), false);
    for (int a = 0; a < G.order(); ++a) {
        if (seen[a]) continue;
        std::set<int> orbit;
        for (int u = 0; u < G.order(); ++u) orbit.insert(G.conj(u, a));
        classes.emplace_back(orbit.begin(), orbit.end());
        for (int x : orbit) seen[x] = true;
    }
    return classes;
}

Group s3() {
    // order-6 nonabelian group as a raw table: elements e, r, r2, s, sr, sr2
    auto idx = [](int rot, int flip) { return flip * 3 + rot; };
    std::vector<std::vector<int>> mul(6, std::vector<int>(6));
    for (int i = 0; i < 3; ++i)
        for (int e = 0; e < 2; ++e)
            for (int j = 0; j < 3; ++j)
                for (int f = 0; f < 2; ++f) {
                    int rot = e == 0 ? (i + j) % 3 : (i - j + 3) % 3;
                    mul[idx(i, e)][idx(j, f)] = idx(rot, e ^ f);
                }
    return groupFromTable("s3", mul);
}

}  // namespace

TEST_CASE("cyclic group basics") {
    Group C6 = cyclicGroup(6);
    CHECK(C6.order() == 6);
    CHECK(C6.identity() == 0);
    CHECK(C6.isAbelian());
    CHECK(C6.elementOrder(1) == 6);
    CHECK(C6.elementOrder(2) == 3);
    CHECK(C6.mul(4, 5) == 3);
    CHECK(C6.inv(1) == 5);
    CHECK(C6.power(1, 6) == 0);
}

TEST_CASE("group table validation") {
    CHECK_THROWS_AS(groupFromTable("bad", {{0, 1}, {1, 1}}), GroupError);
    // non-associative magma on 3 elements
    std::vector<std::vector<int>> t = {{0, 1, 2}, {1, 2, 2}, {2, 2, 1}};
    CHECK_THROWS_AS(groupFromTable("bad2", t), GroupError);
}

TEST_CASE("dihedral 8 structure") {
    Group D8 = dihedralGroup(8);
    CHECK(D8.order() == 8);
    CHECK_FALSE(D8.isAbelian());
    CHECK(D8.isPGroup(2));

    auto cc = conjugacyClasses(D8);
    std::vector<int> sizes;
    for (const auto& c : cc.classElements) sizes.push_back((int)c.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{1, 1, 2, 2, 2});

    // oracle comparison
    auto oracle = conjClassOracle(D8);
    CHECK(oracle.size() == cc.representatives.size());
    for (const auto& cls : oracle) {
        int rep = cc.classOf[cls[0]];
        CHECK(rep == *std::min_element(cls.begin(), cls.end()));
        for (int x : cls) CHECK(cc.classOf[x] == rep);
    }

    Subgroup Z = center(D8);
    CHECK(Z.order() == 2);
    Subgroup D = derivedSubgroup(D8);
    CHECK(D.elements == Z.elements);
    Subgroup F = frattiniSubgroup(D8);
    CHECK(F.elements == Z.elements);
}

TEST_CASE("quaternion groups") {
    Group Q8 = quaternionGroup(8);
    CHECK(Q8.order() == 8);
    int involutions = 0;
    for (int a = 0; a < 8; ++a)
        if (a != Q8.identity() && Q8.mul(a, a) == Q8.identity()) ++involutions;
    CHECK(involutions == 1);  // the central -1
    CHECK(center(Q8).order() == 2);

    Group Q16 = quaternionGroup(16);
    CHECK(Q16.order() == 16);
    CHECK(center(Q16).order() == 2);
    // Q_16 maps onto D_8 by g -> g, h -> h
    Group D8 = dihedralGroup(8);
    auto find = [](const Group& G, const char* lab) {
        for (int a = 0; a < G.order(); ++a)
            if (G.label(a) == lab) return a;
        return -1;
    };
    auto hom = groupHomomorphism(
        Q16, D8,
        {{find(Q16, "g"), find(D8, "g")}, {find(Q16, "h"), find(D8, "h")}});
    REQUIRE(hom.has_value());
    std::set<int> img(hom->image.begin(), hom->image.end());
    CHECK(img.size() == 8);
}

TEST_CASE("semidihedral 16") {
    Group SD = semidihedralGroup(16);
    CHECK(SD.order() == 16);
    CHECK(center(SD).order() == 2);
    CHECK(derivedSubgroup(SD).order() == 4);
    CHECK(frattiniSubgroup(SD).order() == 4);
    auto cc = conjugacyClasses(SD);
    CHECK(cc.representatives.size() == 7);
}

TEST_CASE("extraspecial and modular p-groups") {
    Group E27 = extraspecialExpP(3, 27);
    CHECK(E27.order() == 27);
    CHECK(center(E27).order() == 3);
    CHECK(derivedSubgroup(E27).elements == center(E27).elements);
    CHECK(frattiniSubgroup(E27).elements == center(E27).elements);
    for (int a = 0; a < 27; ++a) CHECK(E27.power(a, 3) == E27.identity());

    Group M27 = modularMaximalCyclic(3);
    CHECK(M27.order() == 27);
    CHECK(center(M27).order() == 3);
    bool hasOrder9 = false;
    for (int a = 0; a < 27; ++a) hasOrder9 |= M27.elementOrder(a) == 9;
    CHECK(hasOrder9);

    Group E125 = extraspecialExpP(5, 125);
    CHECK(E125.order() == 125);
    CHECK(center(E125).order() == 5);
}

TEST_CASE("products and central products") {
    ProductGroup P = directProduct(cyclicGroup(2), cyclicGroup(4));
    CHECK(P.group.order() == 8);
    CHECK(P.group.isAbelian());
    CHECK(P.pair[1][1] == P.group.mul(P.pair[1][0], P.pair[0][1]));

    Group D8 = dihedralGroup(8);
    Group Q8 = quaternionGroup(8);
    Group DD = centralProduct(D8, D8);
    CHECK(DD.order() == 32);
    CHECK(center(DD).order() == 2);
    CHECK(derivedSubgroup(DD).order() == 2);
    Group DQ = centralProduct(D8, Q8);
    CHECK(DQ.order() == 32);
    CHECK(center(DQ).order() == 2);
}

TEST_CASE("group spec parsing") {
    CHECK(constructGroup("cyclic:8").order() == 8);
    CHECK(constructGroup("semidihedral:16").order() == 16);
    CHECK(constructGroup("extraspecial:3:27:expP").order() == 27);
    CHECK(constructGroup("product:cyclic:2:cyclic:4").order() == 8);
    CHECK(constructGroup("centralproduct:dihedral:8:quaternion:8").order() == 32);
    CHECK_THROWS_AS(constructGroup("frobnitz:7"), GroupError);
}

TEST_CASE("subgroups, cosets, quotients") {
    Group D8 = dihedralGroup(8);
    // the rotation subgroup has order 4
    int r = -1;
    for (int a = 0; a < 8; ++a)
        if (D8.elementOrder(a) == 4) { r = a; break; }
    REQUIRE(r >= 0);
    Subgroup R = subgroupGenerated(D8, {r});
    CHECK(R.order() == 4);
    CHECK(isSubgroup(D8, R.elements));

    auto reps = rightCosetReps(D8, R);
    CHECK(reps.size() == 2);
    std::set<int> covered;
    for (int rep : reps)
        for (int h : R.elements) covered.insert(D8.mul(h, rep));
    CHECK(covered.size() == 8);

    QuotientGroup Q = quotientGroup(D8, center(D8));
    CHECK(Q.group.order() == 4);
    for (int a = 0; a < 4; ++a) CHECK(Q.group.mul(a, a) == Q.group.identity());

    // a reflection generates a non-normal subgroup
    CHECK_THROWS_AS(quotientGroup(D8, subgroupGenerated(D8, {1})), GroupError);

    EmbeddedGroup E = subgroupAsGroup(R);
    CHECK(E.group.order() == 4);
    for (int i = 0; i < 4; ++i) CHECK(E.fromParent[E.toParent[i]] == i);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(E.toParent[E.group.mul(i, j)] ==
                  D8.mul(E.toParent[i], E.toParent[j]));
}

TEST_CASE("centralisers and double cosets") {
    Group Q8 = quaternionGroup(8);
    auto cc = conjugacyClasses(Q8);
    for (int g : cc.representatives) {
        Subgroup C = centraliser(Q8, g);
        // orbit-stabiliser
        CHECK(C.order() * (int)cc.classElements[cc.classOf[g]].size() == 8);
    }
    Group D8 = dihedralGroup(8);
    int s = -1;
    for (int a = 0; a < 8; ++a)
        if (D8.elementOrder(a) == 2 && !center(D8).contains(a)) { s = a; break; }
    Subgroup H = centraliser(D8, s);
    CHECK(H.order() == 4);
    auto dcs = doubleCosets(D8, H, H);
    int total = 0;
    std::set<int> all;
    for (int u : dcs) {
        std::set<int> coset;
        for (int a : H.elements)
            for (int b : H.elements) coset.insert(D8.mul(D8.mul(a, u), b));
        total += (int)coset.size();
        all.insert(coset.begin(), coset.end());
    }
    CHECK(total == 8);
    CHECK(all.size() == 8);

    Subgroup I = intersect(H, center(D8));
    CHECK(I.order() == 2);
}

TEST_CASE("sylow subgroups and p-parts") {
    Group S3 = s3();
    CHECK_FALSE(S3.isAbelian());
    CHECK(sylowSubgroup(S3, 2).order() == 2);
    CHECK(sylowSubgroup(S3, 3).order() == 3);

    Group C6 = cyclicGroup(6);
    int g = 1;  // order 6
    int g2 = pPart(C6, g, 2);
    CHECK(C6.elementOrder(g2) == 2);
    CHECK(g2 == C6.power(g, 3));
    int g3 = pPart(C6, g, 3);
    CHECK(C6.elementOrder(g3) == 3);
    CHECK(C6.mul(g2, g3) == g);
}

TEST_CASE("homomorphism extension") {
    Group C4 = cyclicGroup(4);
    Group C2 = cyclicGroup(2);
    auto ok = groupHomomorphism(C4, C2, {{1, 1}});
    REQUIRE(ok.has_value());
    CHECK(ok->image[2] == 0);
    Group C3 = cyclicGroup(3);
    CHECK_FALSE(groupHomomorphism(C4, C3, {{1, 1}}).has_value());
}

TEST_CASE("conjugating element is minimal") {
    Group D8 = dihedralGroup(8);
    auto cc = conjugacyClasses(D8);
    for (int a = 0; a < 8; ++a) {
        int rep = cc.classOf[a];
        int u = conjugatingElement(D8, a, rep);
        CHECK(D8.conj(u, a) == rep);
        for (int v = 0; v < u; ++v) CHECK(D8.conj(v, a) != rep);
    }
}
