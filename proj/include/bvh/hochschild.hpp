#pragma once

#include "bvh/bv_delta.hpp"

namespace bvh {

struct HochschildError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Per conjugacy class: the representative, its centraliser, and the
// centraliser as a standalone group. The subgroup points back at the
// context's copy of G, so the context is noncopyable.
struct CentraliserData {
    int rep = 0;
    Subgroup cent;
    EmbeddedGroup emb;
};

class HHContext {
public:
    HHContext(const Group& G, int p, CohomologyContext& coh);
    HHContext(const HHContext&) = delete;
    HHContext& operator=(const HHContext&) = delete;

    const Group& group() const { return G_; }
    int modulus() const { return p_; }
    CohomologyContext& cohomology() { return *coh_; }
    const ConjugacyData& conjugacy() const { return conj_; }

    int componentCount() const { return static_cast<int>(comps_.size()); }
    const CentraliserData& component(int i) const { return *comps_[i]; }
    // Lookup through the class of an arbitrary element.
    const CentraliserData& componentOf(int g) const;

private:
    Group G_;
    int p_;
    CohomologyContext* coh_;
    ConjugacyData conj_;
    std::vector<std::unique_ptr<CentraliserData>> comps_;
};

// HH^n(kG) through the centraliser decomposition: one cohomology space
// per conjugacy class representative, in representative order.
struct HHSpace {
    HHContext* ctx = nullptr;
    int degree = 0;
    std::vector<std::shared_ptr<const CohomologySpace>> components;

    int dim() const;
    std::vector<int> componentDims() const;
};

HHSpace hhSpace(HHContext& ctx, int degree);

// Element of HH^n: conjugacy representative -> class in H^n(C_G(g)).
// Zero components are not stored.
struct HHElement {
    HHContext* ctx = nullptr;
    int degree = 0;
    std::map<int, CohomologyClass> parts;

    bool isZero() const { return parts.empty(); }
    HHElement operator+(const HHElement& o) const;
    HHElement scaled(int c) const;
    bool operator==(const HHElement& o) const;
};

HHElement hhZero(HHContext& ctx, int degree);
HHElement hhUnit(HHContext& ctx);
// g must be a conjugacy representative; c a class of H^deg(C_G(g)).
HHElement hhComponentElement(HHContext& ctx, int g, const CohomologyClass& c);
HHElement hhBasisElement(HHContext& ctx, const HHSpace& sp, int comp, int i);

// The Siegel-Witherspoon product: restrict to the double-coset
// intersections, conjugate, cup, transfer, and move each summand to the
// canonical class representative.
HHElement swProduct(const HHElement& x, const HHElement& y);

// The BV operator, componentwise Delta_g inside C_G(g).
HHElement hhBvDelta(const HHElement& x);

// Bracket via the BV identity. For degree-(1,1) inputs the per-coset
// formula is evaluated independently at the cochain level and the two
// results must agree; a mismatch throws.
HHElement gerstenhaberBracket(const HHElement& x, const HHElement& y);

// The expanded per-double-coset bracket for degree-1 components. Needs
// only H^1 of centralisers; no quotient reduction above degree 1.
HHElement directBracketDegree1(const HHElement& x, const HHElement& y);

// For each double-coset representative u, which clause of the
// centraliser hypothesis holds: (i) exact intersection, or (ii) all
// transfers of degree <= 1 products vanish.
struct HypCentReport {
    bool frattiniEqualsCentre = false;
    struct Clause {
        int u = 0;
        bool intersectionMatches = false;  // clause (i)
        bool transfersVanish = false;      // clause (ii)
    };
    std::vector<Clause> cosets;
    bool holds() const;
};

HypCentReport checkHypothesisCent(HHContext& ctx, int g, int h);

}  // namespace bvh
