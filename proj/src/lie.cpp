#include "bvh/lie.hpp"

#include <algorithm>

namespace bvh {

namespace {

void axpyVec(FpVec& out, const FpVec& v, int coeff, int p) {
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<uint16_t>((out[i] + coeff * v[i]) % p);
}

bool isZeroVec(const FpVec& v) {
    for (auto x : v)
        if (x != 0) return false;
    return true;
}

FpSubspaceBasis spanOf(const std::vector<FpVec>& vecs, int dim, int p) {
    std::vector<FpDenseVec> rows;
    rows.reserve(vecs.size());
    for (const FpVec& v : vecs) rows.push_back(FpDenseVec::fromVec(v, p));
    return echelonise(rows, dim, p);
}

FpSubspaceBasis bracketSpan(const LieAlgebra& L, const FpSubspaceBasis& A,
                            const FpSubspaceBasis& B) {
    std::vector<FpVec> prods;
    for (const FpDenseVec& a : A.vectors)
        for (const FpDenseVec& b : B.vectors)
            prods.push_back(L.bracket(a.toVec(), b.toVec()));
    return spanOf(prods, L.dim, L.p);
}

FpSubspaceBasis fullSpace(int dim, int p) {
    std::vector<FpVec> units;
    for (int i = 0; i < dim; ++i) {
        FpVec u(dim, 0);
        u[i] = 1;
        units.push_back(u);
    }
    return spanOf(units, dim, p);
}

// hom on G carried into the standalone centraliser copy of a central
// element, then reduced to coordinates in the HH^1 basis
FpVec centralTensor(HH1Lie& L, int z, const Cochain& homG) {
    HHContext& ctx = *L.ctx;
    const Group& G = ctx.group();
    const CentraliserData& C = ctx.componentOf(z);
    if (C.cent.order() != G.order())
        throw LieError("central tensor needs a central element");
    std::vector<int> values(G.order(), 0);
    for (int a = 0; a < G.order(); ++a)
        if (a != G.identity()) values[a] = homG.value({a});
    Cochain hom = homCochain(C.emb.group, ctx.modulus(), values);
    return lieCoordsOf(L, hhComponentElement(ctx, z, ctx.cohomology().classOf(hom)));
}

}  // namespace

FpVec LieAlgebra::bracket(const FpVec& a, const FpVec& b) const {
    FpVec out(dim, 0);
    for (int i = 0; i < dim; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < dim; ++j) {
            if (b[j] == 0) continue;
            axpyVec(out, c[i][j], a[i] * b[j] % p, p);
        }
    }
    return out;
}

HH1Lie buildHH1Lie(HHContext& ctx) {
    HH1Lie L{&ctx, {}, hhSpace(ctx, 1), {}};
    L.algebra.p = ctx.modulus();
    for (int pos = 0; pos < ctx.componentCount(); ++pos) {
        L.offsets.push_back(L.algebra.dim);
        int d = L.space.components[pos]->dim();
        const std::string& lab = ctx.group().label(ctx.component(pos).rep);
        for (int i = 0; i < d; ++i)
            L.algebra.labels.push_back(lab + ":" + std::to_string(i));
        L.algebra.dim += d;
    }
    std::vector<HHElement> basis;
    for (int pos = 0; pos < ctx.componentCount(); ++pos)
        for (int i = 0; i < L.space.components[pos]->dim(); ++i)
            basis.push_back(hhBasisElement(ctx, L.space, pos, i));
    L.algebra.c.assign(L.algebra.dim, std::vector<FpVec>(L.algebra.dim));
    for (int i = 0; i < L.algebra.dim; ++i)
        for (int j = 0; j < L.algebra.dim; ++j)
            L.algebra.c[i][j] =
                lieCoordsOf(L, directBracketDegree1(basis[i], basis[j]));
    return L;
}

FpVec lieCoordsOf(const HH1Lie& L, const HHElement& e) {
    FpVec out(L.algebra.dim, 0);
    for (const auto& [rep, cls] : e.parts) {
        int pos = -1;
        for (int c = 0; c < L.ctx->componentCount(); ++c)
            if (L.ctx->component(c).rep == rep) pos = c;
        if (pos < 0) throw LieError("component outside the decomposition");
        for (size_t i = 0; i < cls.coords.size(); ++i)
            out[L.offsets[pos] + i] = cls.coords[i];
    }
    return out;
}

HHElement lieElementOf(const HH1Lie& L, const FpVec& v) {
    HHElement e = hhZero(*L.ctx, 1);
    for (int pos = 0; pos < L.ctx->componentCount(); ++pos) {
        int d = L.space.components[pos]->dim();
        FpVec slice(v.begin() + L.offsets[pos], v.begin() + L.offsets[pos] + d);
        if (isZeroVec(slice)) continue;
        e = e + hhComponentElement(*L.ctx, L.ctx->component(pos).rep,
                                   CohomologyClass{L.space.components[pos], slice});
    }
    return e;
}

LieAxiomReport verifyLieAxioms(const LieAlgebra& L) {
    const int d = L.dim;
    const int p = L.p;
    for (int i = 0; i < d; ++i)
        if (!isZeroVec(L.c[i][i]))
            return {false, "[b_" + std::to_string(i) + ", b_" + std::to_string(i) +
                               "] is nonzero"};
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = 0; k < d; ++k)
                if ((L.c[i][j][k] + L.c[j][i][k]) % p != 0)
                    return {false, "antisymmetry fails at (" + std::to_string(i) +
                                       ", " + std::to_string(j) + ")"};
    // with alternating + antisymmetry settled, distinct ordered triples
    // suffice for Jacobi
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = j + 1; k < d; ++k) {
                FpVec acc(d, 0);
                for (int m = 0; m < d; ++m) {
                    if (L.c[i][j][m]) axpyVec(acc, L.c[m][k], L.c[i][j][m], p);
                    if (L.c[j][k][m]) axpyVec(acc, L.c[m][i], L.c[j][k][m], p);
                    if (L.c[k][i][m]) axpyVec(acc, L.c[m][j], L.c[k][i][m], p);
                }
                if (!isZeroVec(acc))
                    return {false, "Jacobi fails at (" + std::to_string(i) + ", " +
                                       std::to_string(j) + ", " + std::to_string(k) +
                                       ")"};
            }
    return {true, ""};
}

DerivedSeriesAnalysis derivedSeriesAnalysis(const LieAlgebra& L) {
    LieAxiomReport axioms = verifyLieAxioms(L);
    if (!axioms.pass) throw LieError("not a Lie algebra: " + axioms.violation);

    DerivedSeriesAnalysis out;
    FpSubspaceBasis full = fullSpace(L.dim, L.p);

    FpSubspaceBasis S = full;
    out.derivedSeriesDims.push_back(S.dim());
    while (S.dim() > 0) {
        FpSubspaceBasis next = bracketSpan(L, S, S);
        out.derivedSeriesDims.push_back(next.dim());
        if (next.dim() == S.dim()) break;
        S = next;
    }
    out.soluble = out.derivedSeriesDims.back() == 0;
    out.derivedLength =
        out.soluble ? static_cast<int>(out.derivedSeriesDims.size()) - 1 : -1;

    FpSubspaceBasis C = full;
    out.lowerCentralDims.push_back(C.dim());
    while (C.dim() > 0) {
        FpSubspaceBasis next = bracketSpan(L, full, C);
        out.lowerCentralDims.push_back(next.dim());
        if (next.dim() == C.dim()) break;
        C = next;
    }
    out.nilpotent = out.lowerCentralDims.back() == 0;
    return out;
}

NonsolubleWitness constructNonsolubleWitness(HH1Lie& L) {
    HHContext& ctx = *L.ctx;
    const Group& G = ctx.group();
    const int p = ctx.modulus();
    NonsolubleWitness w;
    if (!G.isPGroup(p) || G.order() == 1) {
        w.detail = "group is not a nontrivial p-group for this modulus";
        return w;
    }
    Subgroup Z = center(G);
    Subgroup Phi = frattiniSubgroup(G);
    Subgroup K = intersect(Z, Phi);
    if (Z.order() / K.order() < 3) {
        w.detail = "|Z(G) : Z(G) n Phi(G)| < 3";
        return w;
    }
    std::vector<Cochain> homs = h1Homs(G, p);
    auto homAt = [&](const Cochain& c, int a) {
        return a == G.identity() ? 0 : c.value({a});
    };

    if (p % 2 == 1) {
        // sl(2): e = g (x) x, f = -g^-1 (x) x, h = -1 (x) 2x with x(g) = 1
        int g = -1;
        for (int z : Z.elements)
            if (!Phi.contains(z)) { g = z; break; }
        Cochain x(G, p, 1);
        for (const Cochain& c : homs)
            if (homAt(c, g) != 0) {
                x = c.scaled(fpInv(homAt(c, g), p));
                break;
            }
        w.kind = NonsolubleWitness::Kind::Sl2Triple;
        w.e = centralTensor(L, g, x);
        w.f = centralTensor(L, G.inv(g), x);
        for (auto& v : w.f) v = static_cast<uint16_t>(v ? p - v : 0);
        FpVec h = centralTensor(L, G.identity(), x);
        for (auto& v : h) v = static_cast<uint16_t>(2 * (p - 1) % p * v % p);
        w.h = h;
        FpVec two_e = w.e, minus_two_f = w.f;
        for (auto& v : two_e) v = static_cast<uint16_t>(2 * v % p);
        for (auto& v : minus_two_f) v = static_cast<uint16_t>((p - 2) % p * v % p);
        w.verified = L.algebra.bracket(w.e, w.f) == w.h &&
                     L.algebra.bracket(w.h, w.e) == two_e &&
                     L.algebra.bracket(w.h, w.f) == minus_two_f;
        w.detail = "sl(2) triple at g = " + G.label(g);
        return w;
    }

    // p = 2 and the quotient is non-cyclic: self-reproducing subspace
    int g = -1, h = -1;
    for (int z : Z.elements)
        if (!K.contains(z)) { g = z; break; }
    std::vector<int> gens = K.elements;
    gens.push_back(g);
    Subgroup gK = subgroupGenerated(G, gens);
    for (int z : Z.elements)
        if (!gK.contains(z)) { h = z; break; }
    if (g < 0 || h < 0) {
        w.detail = "could not split the centre quotient";
        return w;
    }
    // x, y dual to g, h: brute-force over F_2 combinations of the hom basis
    Cochain x(G, p, 1), y(G, p, 1);
    bool haveX = false, haveY = false;
    for (uint32_t mask = 1; mask < (1u << homs.size()); ++mask) {
        Cochain cand(G, p, 1);
        for (size_t i = 0; i < homs.size(); ++i)
            if (mask & (1u << i)) cand = cand + homs[i];
        int vg = homAt(cand, g), vh = homAt(cand, h);
        if (!haveX && vg == 1 && vh == 0) { x = cand; haveX = true; }
        if (!haveY && vg == 0 && vh == 1) { y = cand; haveY = true; }
        if (haveX && haveY) break;
    }
    if (!haveX || !haveY) {
        w.detail = "no dual homomorphism pair";
        return w;
    }
    w.kind = NonsolubleWitness::Kind::SelfReproducing;
    int gi = G.inv(g), hi = G.inv(h), e0 = G.identity();
    for (auto [z, c] : std::initializer_list<std::pair<int, const Cochain*>>{
             {e0, &y}, {e0, &x}, {g, &x}, {h, &y}, {g, &y},
             {h, &x}, {gi, &x}, {hi, &y}, {gi, &y}, {hi, &x}})
        w.spanning.push_back(centralTensor(L, z, *c));
    FpSubspaceBasis U = spanOf(w.spanning, L.algebra.dim, p);
    std::vector<FpVec> brackets;
    for (const FpVec& a : w.spanning)
        for (const FpVec& b : w.spanning)
            brackets.push_back(L.algebra.bracket(a, b));
    FpSubspaceBasis UU = spanOf(brackets, L.algebra.dim, p);
    w.verified = true;
    for (const FpDenseVec& u : U.vectors)
        if (!UU.contains(u)) w.verified = false;
    w.detail = "self-reproducing span at g = " + G.label(g) + ", h = " + G.label(h);
    return w;
}

NonNilpotencyWitness constructNonNilpotencyWitness(HH1Lie& L) {
    HHContext& ctx = *L.ctx;
    const Group& G = ctx.group();
    const int p = ctx.modulus();
    NonNilpotencyWitness w;
    if (!G.isPGroup(p) || G.order() == 1) return w;
    Subgroup Phi = frattiniSubgroup(G);
    int h = -1;
    for (int a = 0; a < G.order(); ++a)
        if (!Phi.contains(a)) { h = a; break; }
    int r = ctx.conjugacy().classOf[h];
    // hom with x(r) = -1 (class functions: any conjugate works)
    Cochain x(G, p, 1);
    for (const Cochain& c : h1Homs(G, p))
        if (c.value({r}) != 0) {
            x = c.scaled(fpInv(c.value({r}), p) * (p - 1) % p);
            break;
        }
    w.x = centralTensor(L, G.identity(), x);
    int pos = -1;
    for (int c = 0; c < ctx.componentCount(); ++c)
        if (ctx.component(c).rep == r) pos = c;
    w.y = FpVec(L.algebra.dim, 0);
    w.y[L.offsets[pos]] = 1;
    w.verified = L.algebra.bracket(w.x, w.y) == w.y;
    return w;
}

}  // namespace bvh
