#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "bvh/fp_linalg.hpp"
#include "bvh/group.hpp"

namespace bvh {

struct CochainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumeration of n-tuples of non-identity elements of a group, used as
// the coordinate basis of the normalized bar cochain space in degree n.
class TupleSpace {
public:
    TupleSpace(const Group& G, int degree);

    long size() const { return size_; }
    int degree() const { return degree_; }
    int nonIdentityCount() const { return m_; }

    std::vector<int> decode(long index) const;
    long encode(const std::vector<int>& tuple) const;  // -1 if degenerate

private:
    const Group* group_;
    int degree_;
    int m_;
    long size_;
    std::vector<int> nonId_;    // digit -> element index
    std::vector<int> digitOf_;  // element index -> digit, -1 for identity
};

// A normalized inhomogeneous n-cochain with values in F_p: a sparse map
// from n-tuples of non-identity elements to nonzero scalars. Tuples
// containing the identity implicitly evaluate to zero; degree 0 is the
// single scalar at the empty tuple.
class Cochain {
public:
    Cochain(const Group& G, int p, int degree);

    const Group& group() const { return *group_; }
    int modulus() const { return p_; }
    int degree() const { return degree_; }

    int value(const std::vector<int>& tuple) const;
    void setValue(const std::vector<int>& tuple, int v);
    void addValue(const std::vector<int>& tuple, int v);

    const std::map<uint64_t, uint16_t>& entries() const { return values_; }
    bool isZero() const { return values_.empty(); }
    int termCount() const { return static_cast<int>(values_.size()); }

    std::vector<int> unpack(uint64_t key) const;
    static uint64_t pack(const std::vector<int>& tuple);

    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    Cochain scaled(int c) const;
    bool operator==(const Cochain& o) const;

    FpDenseVec toDense(const TupleSpace& ts) const;
    static Cochain fromDense(const Group& G, int p, int degree,
                             const FpDenseVec& v, const TupleSpace& ts);

private:
    const Group* group_;
    int p_;
    int degree_;
    std::map<uint64_t, uint16_t> values_;
};

// d of the normalized bar cochain complex, with the global (-1)^(n+1)
// sign convention (it matters for how the Bockstein interacts with the
// degree -1 operators in odd characteristic).
Cochain coboundary(const Cochain& phi);
bool isCocycle(const Cochain& phi);

// The homotopy-induced degree -1 map: inserts the central element g into
// every gap of the argument tuple with alternating signs.
Cochain deltaGCochain(const Cochain& phi, int g);

Cochain cup(const Cochain& phi, const Cochain& psi);

// Pullback along a group homomorphism f: G -> G' of a cochain on G'.
Cochain pullback(const Homomorphism& f, const Cochain& phi);

// Restriction of a cochain on G to an embedded subgroup (result lives on
// the subgroup's standalone group).
Cochain restrictCochain(const Cochain& phi, const EmbeddedGroup& H);

// Transfer of a cochain from an embedded subgroup into the parent group,
// via the coset-permutation formula with deterministic (smallest index)
// right coset representatives. `embed` maps subgroup indices into T.
Cochain transferCochain(const Cochain& phi, const Group& T,
                        const std::vector<int>& embed);

// Relabelling transport: result(map(t)) = phi(t). Used for conjugation
// u^* between centralisers; `map` must be an isomorphism of tables.
Cochain relabelCochain(const Cochain& phi, const Group& K,
                       const std::vector<int>& map);

Cochain crossProduct(const Cochain& phi, const Cochain& psi, const ProductGroup& P);

// Bockstein of a cocycle: integral lift, integral coboundary, divide by p.
Cochain bockstein(const Cochain& phi);

Cochain randomCochain(const Group& G, int p, int degree, std::mt19937& rng);

// Degree-1 cochain of a homomorphism G -> F_p given by its values.
Cochain homCochain(const Group& G, int p, const std::vector<int>& values);

// Central extension 1 -> F_p -> K -> G -> 1 built from a normalized
// 2-cocycle; element (lambda, a) has index a*p + lambda.
struct ExtensionCocycle {
    const Group* base;
    Cochain alpha;
    Group extension;
    int modulus;

    int lift(int a) const { return a * modulus; }              // section
    int kernelElement(int lambda) const;                       // (lambda, 1)
    int lambdaOf(int k) const { return k % modulus; }
    int baseOf(int k) const { return k / modulus; }
};

ExtensionCocycle extensionFromCocycle(const Group& G, const Cochain& alpha);

// [g^, h^] in K, as an element of the kernel F_p.
int extensionCommutator(const ExtensionCocycle& E, int g, int h);

// Exact check of delta s + s delta = (g-1) id on the normalized bar
// resolution in degree n, expanded on every free-basis chain.
struct HomotopyCheckResult {
    bool pass = true;
    std::vector<int> witnessTuple;  // first failing basis chain (a_1..a_n)
    long checkedTuples = 0;
};
HomotopyCheckResult verifyHomotopyIdentity(const Group& G, int g, int n);

}  // namespace bvh
