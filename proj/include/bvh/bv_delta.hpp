#pragma once

#include "bvh/cohomology.hpp"

namespace bvh {

// The matrix of Δ_g : H^n(G,k) -> H^(n-1)(G,k) in the chosen class
// bases. Column i holds the coordinates of Δ_g applied to the i-th
// representative of the degree-n space.
struct DeltaMatrix {
    std::shared_ptr<const CohomologySpace> domain;    // degree n
    std::shared_ptr<const CohomologySpace> codomain;  // degree n-1
    int element = 0;                                  // g (as given)
    std::vector<FpVec> columns;

    int rows() const { return codomain->dim(); }
    int cols() const { return domain->dim(); }
    int rank() const;
    bool isZero() const;
    FpVec apply(const FpVec& coords) const;
};

DeltaMatrix deltaMatrix(CohomologyContext& ctx, const Group& G, int p,
                        int g, int n);

// Δ_g of a single class. In characteristic p only the p-part of g
// matters, so a central g of composite order is reduced to g_p first.
CohomologyClass deltaClass(CohomologyContext& ctx, int g,
                           const CohomologyClass& c);

// Degree-2 story: the hom h -> α(g,h) - α(h,g) attached to a central
// extension, together with the check that it computes commutators
// [ĝ, ĥ] of lifts in the extension group.
struct ExtensionDelta {
    Cochain hom;            // degree-1 cochain on the base group
    bool matchesCommutators = false;
};

ExtensionDelta deltaFromExtension(const ExtensionCocycle& E, int g);

// Compares Δ_(g,h)(x × y) with (Δ_g x) × y + (-1)^|x| x × (Δ_h y) as
// classes on the product group.
bool kunnethDeltaCheck(CohomologyContext& ctx, const ProductGroup& P,
                       int g, int h, const CohomologyClass& x,
                       const CohomologyClass& y);

}  // namespace bvh
