#include "bvh/hochschild.hpp"

#include <algorithm>

namespace bvh {

namespace {

// Realise a subgroup of G as an embedded subgroup of one of its
// standalone overgroups. The sorted-index convention makes the resulting
// standalone multiplication table identical whichever ambient we pass
// through, so cochains restricted via different ambients can be cupped.
EmbeddedGroup embedInto(const Subgroup& I, const EmbeddedGroup& amb) {
    Subgroup J{&amb.group, {}};
    J.elements.reserve(I.elements.size());
    for (int a : I.elements) {
        int b = amb.fromParent[a];
        if (b < 0) throw HochschildError("subgroup escapes the ambient centraliser");
        J.elements.push_back(b);
    }
    std::sort(J.elements.begin(), J.elements.end());
    return subgroupAsGroup(J);
}

std::vector<int> conjugationMap(const Group& G, const EmbeddedGroup& from,
                                const EmbeddedGroup& to, int u) {
    std::vector<int> map(from.group.order());
    for (int i = 0; i < from.group.order(); ++i) {
        int b = to.fromParent[G.conj(u, from.toParent[i])];
        if (b < 0) throw HochschildError("conjugation leaves the target centraliser");
        map[i] = b;
    }
    return map;
}

// The two restriction routes into the intersection produce standalone
// groups with identical tables but different display names; move one
// cochain across by the identity relabelling so cup accepts the pair.
Cochain onGroup(const Cochain& phi, const Group& K) {
    std::vector<int> id(K.order());
    for (int i = 0; i < K.order(); ++i) id[i] = i;
    return relabelCochain(phi, K, id);
}

void addPart(HHElement& e, int rep, const CohomologyClass& c) {
    if (c.isZero()) return;
    auto it = e.parts.find(rep);
    if (it == e.parts.end()) {
        e.parts.emplace(rep, c);
    } else {
        CohomologyClass sum = it->second + c;
        if (sum.isZero())
            e.parts.erase(it);
        else
            it->second = sum;
    }
}

}  // namespace

HHContext::HHContext(const Group& G, int p, CohomologyContext& coh)
    : G_(G), p_(p), coh_(&coh), conj_(conjugacyClasses(G_)) {
    if (!isPrime(p)) throw HochschildError("modulus must be prime");
    for (int r : conj_.representatives) {
        Subgroup cent = centraliser(G_, r);
        EmbeddedGroup emb = subgroupAsGroup(cent);
        comps_.push_back(std::make_unique<CentraliserData>(
            CentraliserData{r, std::move(cent), std::move(emb)}));
    }
}

const CentraliserData& HHContext::componentOf(int g) const {
    int r = conj_.classOf[g];
    for (const auto& c : comps_)
        if (c->rep == r) return *c;
    throw HochschildError("element outside the group");
}

int HHSpace::dim() const {
    int d = 0;
    for (const auto& sp : components) d += sp->dim();
    return d;
}

std::vector<int> HHSpace::componentDims() const {
    std::vector<int> dims;
    for (const auto& sp : components) dims.push_back(sp->dim());
    return dims;
}

HHSpace hhSpace(HHContext& ctx, int degree) {
    HHSpace sp;
    sp.ctx = &ctx;
    sp.degree = degree;
    for (int i = 0; i < ctx.componentCount(); ++i)
        sp.components.push_back(ctx.cohomology().space(
            ctx.component(i).emb.group, ctx.modulus(), degree));
    return sp;
}

HHElement hhZero(HHContext& ctx, int degree) {
    return HHElement{&ctx, degree, {}};
}

HHElement hhUnit(HHContext& ctx) {
    const CentraliserData& c = ctx.componentOf(ctx.group().identity());
    auto sp = ctx.cohomology().space(c.emb.group, ctx.modulus(), 0);
    HHElement e = hhZero(ctx, 0);
    addPart(e, c.rep, CohomologyClass{sp, FpVec{1}});
    return e;
}

HHElement hhComponentElement(HHContext& ctx, int g, const CohomologyClass& c) {
    if (ctx.conjugacy().classOf[g] != g)
        throw HochschildError("component key must be a conjugacy representative");
    HHElement e = hhZero(ctx, c.degree());
    addPart(e, g, c);
    return e;
}

HHElement hhBasisElement(HHContext& ctx, const HHSpace& sp, int comp, int i) {
    FpVec coords(sp.components[comp]->dim(), 0);
    coords[i] = 1;
    return hhComponentElement(ctx, ctx.component(comp).rep,
                              CohomologyClass{sp.components[comp], coords});
}

HHElement HHElement::operator+(const HHElement& o) const {
    if (ctx != o.ctx) throw HochschildError("elements from different contexts");
    if (!isZero() && !o.isZero() && degree != o.degree)
        throw HochschildError("degree mismatch in sum");
    HHElement r = *this;
    if (r.isZero()) r.degree = o.degree;
    for (const auto& [rep, c] : o.parts) addPart(r, rep, c);
    return r;
}

HHElement HHElement::scaled(int c) const {
    HHElement r = hhZero(*ctx, degree);
    for (const auto& [rep, cls] : parts) addPart(r, rep, cls.scaled(c));
    return r;
}

bool HHElement::operator==(const HHElement& o) const {
    if (ctx != o.ctx) return false;
    if (parts.size() != o.parts.size()) return false;
    for (const auto& [rep, c] : parts) {
        auto it = o.parts.find(rep);
        if (it == o.parts.end() || !(it->second == c)) return false;
    }
    return true;
}

HHElement swProduct(const HHElement& x, const HHElement& y) {
    if (x.ctx != y.ctx) throw HochschildError("elements from different contexts");
    HHContext& ctx = *x.ctx;
    const Group& G = ctx.group();
    CohomologyContext& coh = ctx.cohomology();
    HHElement out = hhZero(ctx, x.degree + y.degree);

    for (const auto& [gRep, xc] : x.parts) {
        const CentraliserData& Cg = ctx.componentOf(gRep);
        Cochain xz = xc.representative();
        for (const auto& [hRep, yc] : y.parts) {
            const CentraliserData& Ch = ctx.componentOf(hRep);
            Cochain yz = yc.representative();
            for (int u : doubleCosets(G, Cg.cent, Ch.cent)) {
                int h2 = G.conj(u, hRep);
                int t = G.mul(gRep, h2);
                Subgroup Ch2 = centraliser(G, h2);
                EmbeddedGroup embH2 = subgroupAsGroup(Ch2);
                Cochain y2 = relabelCochain(yz, embH2.group,
                                            conjugationMap(G, Ch.emb, embH2, u));

                Subgroup I = intersect(Cg.cent, Ch2);
                EmbeddedGroup IinCg = embedInto(I, Cg.emb);
                EmbeddedGroup IinH2 = embedInto(I, embH2);
                Cochain xr = restrictCochain(xz, IinCg);
                Cochain prod = cup(xr, onGroup(restrictCochain(y2, IinH2),
                                               IinCg.group));

                Subgroup T = centraliser(G, t);
                EmbeddedGroup embT = subgroupAsGroup(T);
                std::vector<int> embed(I.order());
                for (int i = 0; i < I.order(); ++i)
                    embed[i] = embT.fromParent[I.elements[i]];
                Cochain tr = transferCochain(prod, embT.group, embed);

                int r = ctx.conjugacy().classOf[t];
                const CentraliserData& Cr = ctx.componentOf(r);
                int v = conjugatingElement(G, t, r);
                Cochain canon = relabelCochain(tr, Cr.emb.group,
                                               conjugationMap(G, embT, Cr.emb, v));
                addPart(out, r, coh.classOf(canon));
            }
        }
    }
    return out;
}

HHElement hhBvDelta(const HHElement& x) {
    HHContext& ctx = *x.ctx;
    HHElement out = hhZero(ctx, x.degree > 0 ? x.degree - 1 : 0);
    if (x.degree == 0) return out;
    for (const auto& [rep, c] : x.parts) {
        const CentraliserData& C = ctx.componentOf(rep);
        int gi = C.emb.fromParent[rep];
        addPart(out, rep, deltaClass(ctx.cohomology(), gi, c));
    }
    return out;
}

HHElement directBracketDegree1(const HHElement& x, const HHElement& y) {
    if (x.ctx != y.ctx) throw HochschildError("elements from different contexts");
    if (x.degree != 1 || y.degree != 1)
        throw HochschildError("direct bracket needs degree-1 inputs");
    HHContext& ctx = *x.ctx;
    const Group& G = ctx.group();
    const int p = ctx.modulus();
    CohomologyContext& coh = ctx.cohomology();
    HHElement out = hhZero(ctx, 1);

    for (const auto& [gRep, xc] : x.parts) {
        const CentraliserData& Cg = ctx.componentOf(gRep);
        Cochain xz = xc.representative();
        // Delta_g(x) = x(g_p) inside the centraliser
        int gp = pPart(Cg.emb.group, Cg.emb.fromParent[gRep], p);
        int dgx = gp == Cg.emb.group.identity() ? 0 : xz.value({gp});
        for (const auto& [hRep, yc] : y.parts) {
            const CentraliserData& Ch = ctx.componentOf(hRep);
            Cochain yz = yc.representative();
            int hp = pPart(Ch.emb.group, Ch.emb.fromParent[hRep], p);
            int dhy = hp == Ch.emb.group.identity() ? 0 : yz.value({hp});
            for (int u : doubleCosets(G, Cg.cent, Ch.cent)) {
                int h2 = G.conj(u, hRep);
                int t = G.mul(gRep, h2);
                Subgroup Ch2 = centraliser(G, h2);
                EmbeddedGroup embH2 = subgroupAsGroup(Ch2);
                Cochain y2 = relabelCochain(yz, embH2.group,
                                            conjugationMap(G, Ch.emb, embH2, u));

                Subgroup I = intersect(Cg.cent, Ch2);
                EmbeddedGroup IinCg = embedInto(I, Cg.emb);
                Cochain xr = restrictCochain(xz, IinCg);
                Cochain yr = onGroup(restrictCochain(y2, embedInto(I, embH2)),
                                     IinCg.group);

                Subgroup T = centraliser(G, t);
                EmbeddedGroup embT = subgroupAsGroup(T);
                std::vector<int> embed(I.order());
                for (int i = 0; i < I.order(); ++i)
                    embed[i] = embT.fromParent[I.elements[i]];

                // -Delta_t Tr(x|y|) + x(g) Tr(y|) - y(h) Tr(x|)
                int tp = pPart(embT.group, embT.fromParent[t], p);
                Cochain term =
                    deltaGCochain(transferCochain(cup(xr, yr), embT.group, embed), tp)
                        .scaled(p - 1);
                if (dgx != 0)
                    term = term + transferCochain(yr, embT.group, embed).scaled(dgx);
                if (dhy != 0)
                    term = term + transferCochain(xr, embT.group, embed).scaled(fpNeg(dhy, p));

                int r = ctx.conjugacy().classOf[t];
                const CentraliserData& Cr = ctx.componentOf(r);
                int v = conjugatingElement(G, t, r);
                Cochain canon = relabelCochain(term, Cr.emb.group,
                                               conjugationMap(G, embT, Cr.emb, v));
                addPart(out, r, coh.classOf(canon));
            }
        }
    }
    return out;
}

HHElement gerstenhaberBracket(const HHElement& x, const HHElement& y) {
    const int p = x.ctx->modulus();
    const int sgn = (x.degree % 2) ? p - 1 : 1;
    HHElement bv = hhBvDelta(swProduct(x, y)).scaled(sgn) +
                   swProduct(hhBvDelta(x), y).scaled(fpNeg(sgn, p)) +
                   swProduct(x, hhBvDelta(y)).scaled(p - 1);
    if (x.degree == 1 && y.degree == 1) {
        if (!(directBracketDegree1(x, y) == bv))
            throw HochschildError("BV and direct bracket evaluations disagree");
    }
    return bv;
}

bool HypCentReport::holds() const {
    for (const auto& c : cosets)
        if (!c.intersectionMatches && !c.transfersVanish) return false;
    return true;
}

HypCentReport checkHypothesisCent(HHContext& ctx, int g, int h) {
    const Group& G = ctx.group();
    const int p = ctx.modulus();
    CohomologyContext& coh = ctx.cohomology();
    HypCentReport report;
    if (G.isPGroup(p))
        report.frattiniEqualsCentre = frattiniSubgroup(G) == center(G);

    Subgroup Cg = centraliser(G, g);
    Subgroup Ch = centraliser(G, h);
    EmbeddedGroup embCg = subgroupAsGroup(Cg);
    for (int u : doubleCosets(G, Cg, Ch)) {
        int h2 = G.conj(u, h);
        int t = G.mul(g, h2);
        Subgroup Ch2 = centraliser(G, h2);
        Subgroup I = intersect(Cg, Ch2);
        Subgroup T = centraliser(G, t);

        HypCentReport::Clause clause;
        clause.u = u;
        clause.intersectionMatches = I.elements == T.elements;

        EmbeddedGroup embH2 = subgroupAsGroup(Ch2);
        EmbeddedGroup IinCg = embedInto(I, embCg);
        EmbeddedGroup IinH2 = embedInto(I, embH2);
        EmbeddedGroup embT = subgroupAsGroup(T);
        std::vector<int> embed(I.order());
        for (int i = 0; i < I.order(); ++i)
            embed[i] = embT.fromParent[I.elements[i]];

        std::vector<Cochain> xs, ys;
        Cochain oneG(embCg.group, p, 0);
        oneG.setValue({}, 1);
        xs.push_back(oneG);
        for (const Cochain& c : h1Homs(embCg.group, p)) xs.push_back(c);
        Cochain oneH(embH2.group, p, 0);
        oneH.setValue({}, 1);
        ys.push_back(oneH);
        for (const Cochain& c : h1Homs(embH2.group, p)) ys.push_back(c);

        clause.transfersVanish = true;
        for (const Cochain& xc : xs)
            for (const Cochain& yc : ys) {
                Cochain prod = cup(restrictCochain(xc, IinCg),
                                   onGroup(restrictCochain(yc, IinH2),
                                           IinCg.group));
                Cochain tr = transferCochain(prod, embT.group, embed);
                if (!coh.classOf(tr).isZero()) {
                    clause.transfersVanish = false;
                    break;
                }
            }
        report.cosets.push_back(clause);
    }
    return report;
}

}  // namespace bvh
