#pragma once

#include "bvh/hochschild.hpp"

namespace bvh {

struct LieError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A finite-dimensional Lie algebra over F_p by structure constants:
// bracket(i, j) holds the coordinates of [b_i, b_j].
struct LieAlgebra {
    int dim = 0;
    int p = 2;
    std::vector<std::string> labels;
    std::vector<std::vector<FpVec>> c;

    FpVec bracket(const FpVec& a, const FpVec& b) const;
};

// HH^1(kG) as a Lie algebra, with the coordinate bookkeeping needed to
// translate between HHElements and flat vectors.
struct HH1Lie {
    HHContext* ctx = nullptr;
    LieAlgebra algebra;
    HHSpace space;              // degree-1 HHSpace
    std::vector<int> offsets;   // per component position
};

// Structure constants from the expanded per-double-coset bracket.
HH1Lie buildHH1Lie(HHContext& ctx);

FpVec lieCoordsOf(const HH1Lie& L, const HHElement& e);
HHElement lieElementOf(const HH1Lie& L, const FpVec& v);

struct LieAxiomReport {
    bool pass = true;
    std::string violation;  // empty when pass
};
LieAxiomReport verifyLieAxioms(const LieAlgebra& L);

struct DerivedSeriesAnalysis {
    std::vector<int> derivedSeriesDims;   // starting with dim L
    std::vector<int> lowerCentralDims;    // starting with dim L
    bool soluble = false;
    int derivedLength = -1;               // strict steps until zero; -1 if not soluble
    bool nilpotent = false;
};
// Throws LieError if the structure constants violate the Lie axioms.
DerivedSeriesAnalysis derivedSeriesAnalysis(const LieAlgebra& L);

// The explicit non-solubility witnesses for p-groups with
// |Z(G) : Z(G) n Phi(G)| >= 3: an sl(2)-triple when p is odd, or a
// self-reproducing subspace when the quotient is non-cyclic.
struct NonsolubleWitness {
    enum class Kind { Sl2Triple, SelfReproducing, HypothesisNotMet };
    Kind kind = Kind::HypothesisNotMet;
    FpVec e, f, h;               // sl(2): [e,f]=h, [h,e]=2e, [h,f]=-2f
    std::vector<FpVec> spanning; // case (ii): [U,U] contains U
    bool verified = false;
    std::string detail;
};
NonsolubleWitness constructNonsolubleWitness(HH1Lie& L);

// For any nontrivial p-group: x at the identity component and y with
// [x, y] = y, so no lower central series can terminate.
struct NonNilpotencyWitness {
    FpVec x, y;
    bool verified = false;
};
NonNilpotencyWitness constructNonNilpotencyWitness(HH1Lie& L);

}  // namespace bvh
