#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "bvh/cochain.hpp"
#include "bvh/fp_linalg.hpp"
#include "bvh/group.hpp"

namespace bvh {

struct CohomologyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// H^n(G, F_p) with explicit cocycle machinery: the coboundary space, a
// chosen complement of class representatives, and coordinate reduction
// for arbitrary cocycles. Immutable once built; noncopyable because the
// representatives point at the space's own copy of the group.
class CohomologySpace {
public:
    CohomologySpace(const Group& G, int p, int degree);
    CohomologySpace(const CohomologySpace&) = delete;
    CohomologySpace& operator=(const CohomologySpace&) = delete;

    const Group& group() const { return group_; }
    int modulus() const { return p_; }
    int degree() const { return degree_; }

    long ambientDim() const { return ambient_; }
    long cocycleDim() const { return cocycleDim_; }
    long coboundaryDim() const { return coboundaryDim_; }
    int dim() const { return static_cast<int>(reps_.size()); }

    const Cochain& representative(int i) const { return reps_[i]; }

    // Coordinates of a cocycle in the class basis; throws if the input
    // is not a cocycle (equivalently, outside the cocycle span).
    FpVec coordinatesOf(const Cochain& z) const;
    bool isCoboundaryCochain(const Cochain& z) const;

    // The representative cocycle Σ coords_i · rep_i.
    Cochain combination(const FpVec& coords) const;

private:
    Group group_;
    int p_;
    int degree_;
    long ambient_;
    long cocycleDim_ = 0;
    long coboundaryDim_ = 0;
    TupleSpace tuples_;
    std::unique_ptr<QuotientSpace> quotient_;
    std::vector<Cochain> reps_;
};

struct CohomologyClass {
    std::shared_ptr<const CohomologySpace> space;
    FpVec coords;

    int degree() const { return space->degree(); }
    bool isZero() const;
    Cochain representative() const { return space->combination(coords); }
    CohomologyClass operator+(const CohomologyClass& o) const;
    CohomologyClass scaled(int c) const;
    bool operator==(const CohomologyClass& o) const;
};

// Memoised space store; the memo table is the only mutable state and is
// guarded for concurrent access. Also owns the work-budget policy: the
// cost of a degree-n build is (|G|-1)^(n+1) coordinates.
class CohomologyContext {
public:
    CohomologyContext();  // budget from BVH_WORK_BUDGET, default 10^6

    long budget() const { return budget_; }
    void setBudget(long b) { budget_ = b; }
    // --heavy: admits the semidihedral-16 degree-4 scale (multiplies the
    // budget by 1000)
    void setHeavy(bool heavy) { heavy_ = heavy; }
    bool heavy() const { return heavy_; }

    std::shared_ptr<const CohomologySpace> space(const Group& G, int p, int degree);
    CohomologyClass classOf(const Cochain& z);
    CohomologyClass zeroClass(const Group& G, int p, int degree);

private:
    long budget_;
    bool heavy_ = false;
    std::mutex mutex_;
    std::map<std::string, std::shared_ptr<const CohomologySpace>> memo_;
};

// Basis of Hom(G, F_p) computed from the abelianization modulo p-th
// powers (no linear algebra over the tuple space).
std::vector<Cochain> h1Homs(const Group& G, int p);

// The paper-named generators of the example families, pinned down by
// basis-independent characterisations.
std::map<std::string, CohomologyClass> identifyNamedClasses(
    CohomologyContext& ctx, const Group& G, int p);

}  // namespace bvh
