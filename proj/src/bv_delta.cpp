#include "bvh/bv_delta.hpp"

namespace bvh {

namespace {

void requireCentralElement(const Group& G, int g) {
    for (int a = 0; a < G.order(); ++a)
        if (G.mul(g, a) != G.mul(a, g))
            throw CochainError("delta_g needs a central element");
}

}  // namespace

int DeltaMatrix::rank() const {
    FpRowEchelon ech(rows(), domain->modulus());
    for (const auto& col : columns)
        ech.insert(FpDenseVec::fromVec(col, domain->modulus()));
    return static_cast<int>(ech.rank());
}

bool DeltaMatrix::isZero() const {
    for (const auto& col : columns)
        for (auto v : col)
            if (v != 0) return false;
    return true;
}

FpVec DeltaMatrix::apply(const FpVec& coords) const {
    if (static_cast<int>(coords.size()) != cols())
        throw CochainError("delta matrix applied to wrong-length coordinates");
    const int p = domain->modulus();
    FpVec out(rows(), 0);
    for (int j = 0; j < cols(); ++j)
        for (int i = 0; i < rows(); ++i)
            out[i] = static_cast<uint16_t>((out[i] + coords[j] * columns[j][i]) % p);
    return out;
}

DeltaMatrix deltaMatrix(CohomologyContext& ctx, const Group& G, int p,
                        int g, int n) {
    if (n < 1) throw CochainError("delta matrix needs degree >= 1");
    requireCentralElement(G, g);
    DeltaMatrix M;
    M.domain = ctx.space(G, p, n);
    M.codomain = ctx.space(G, p, n - 1);
    M.element = g;
    const int gp = pPart(M.domain->group(), g, p);
    for (int i = 0; i < M.domain->dim(); ++i) {
        Cochain image = deltaGCochain(M.domain->representative(i), gp);
        M.columns.push_back(M.codomain->coordinatesOf(image));
    }
    return M;
}

CohomologyClass deltaClass(CohomologyContext& ctx, int g,
                           const CohomologyClass& c) {
    const Group& G = c.space->group();
    if (c.degree() < 1) throw CochainError("delta needs degree >= 1");
    requireCentralElement(G, g);
    const int gp = pPart(G, g, c.space->modulus());
    return ctx.classOf(deltaGCochain(c.representative(), gp));
}

ExtensionDelta deltaFromExtension(const ExtensionCocycle& E, int g) {
    const Group& G = *E.base;
    requireCentralElement(G, g);
    const int p = E.modulus;
    const int e = G.identity();
    std::vector<int> vals(G.order(), 0);
    for (int h = 0; h < G.order(); ++h) {
        if (h == e) continue;
        int a = (g == e || h == e) ? 0 : E.alpha.value({g, h});
        int b = (g == e || h == e) ? 0 : E.alpha.value({h, g});
        vals[h] = ((a - b) % p + p) % p;
    }
    ExtensionDelta out{homCochain(G, p, vals), true};
    for (int h = 0; h < G.order(); ++h)
        if (extensionCommutator(E, g, h) != vals[h]) {
            out.matchesCommutators = false;
            break;
        }
    return out;
}

bool kunnethDeltaCheck(CohomologyContext& ctx, const ProductGroup& P,
                       int g, int h, const CohomologyClass& x,
                       const CohomologyClass& y) {
    const int p = x.space->modulus();
    const int z = P.pair[g][h];
    Cochain left = deltaGCochain(crossProduct(x.representative(),
                                              y.representative(), P),
                                 z);
    // (Δ_g x) × y + (-1)^|x| x × (Δ_h y); a degree-0 factor contributes
    // nothing to the corresponding term.
    Cochain right(P.group, p, left.degree());
    if (x.degree() >= 1) {
        CohomologyClass dx = deltaClass(ctx, g, x);
        right = right + crossProduct(dx.representative(), y.representative(), P);
    }
    if (y.degree() >= 1) {
        CohomologyClass dy = deltaClass(ctx, h, y);
        Cochain t = crossProduct(x.representative(), dy.representative(), P);
        right = right + ((x.degree() % 2) ? t.scaled(p - 1) : t);
    }
    return ctx.classOf(left) == ctx.classOf(right);
}

}  // namespace bvh
