#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bvh {

// Hard cap on group order; the bar-resolution linear algebra is only
// feasible at desk scale anyway (order-125 extraspecial groups are the
// largest we touch, and only through their degree-1 theory).
inline constexpr int kMaxGroupOrder = 128;

struct GroupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A finite group as an explicit Cayley table. Elements are indices
// 0..order-1; mul[a][b] is the product ab. Immutable after construction.
class Group {
public:
    Group(std::string name, std::vector<std::vector<int>> mul,
          std::vector<std::string> labels = {},
          std::optional<int> primeHint = std::nullopt);

    int order() const { return order_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return mul_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    int conj(int u, int a) const { return mul(mul(u, a), inv(u)); }  // u a u^-1
    int power(int a, long e) const;
    int elementOrder(int a) const;

    // FNV-1a over the multiplication table; distinguishes groups that
    // happen to share a display name (memo keys).
    uint64_t tableHash() const;

    const std::string& name() const { return name_; }
    const std::string& label(int a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> primeHint() const { return primeHint_; }

    bool isAbelian() const;
    bool isPGroup(int p) const;

private:
    void validate() const;

    std::string name_;
    int order_;
    int identity_;
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    std::vector<std::string> labels_;
    std::optional<int> primeHint_;
};

// A subgroup as a sorted set of element indices of a parent group.
struct Subgroup {
    const Group* parent = nullptr;
    std::vector<int> elements;  // sorted, contains identity

    int order() const { return static_cast<int>(elements.size()); }
    bool contains(int a) const;
    bool operator==(const Subgroup& o) const { return elements == o.elements; }
};

struct ConjugacyData {
    std::vector<int> representatives;            // sorted by element index
    std::vector<int> classOf;                    // element -> representative
    std::vector<std::vector<int>> classElements; // parallel to representatives
};

// A subgroup realised as a standalone Group, with index translation
// back and forth. The standalone element order follows the sorted
// parent indices, so the construction is deterministic.
struct EmbeddedGroup {
    Group group;
    std::vector<int> toParent;    // embedded index -> parent index
    std::vector<int> fromParent;  // parent index -> embedded index or -1
};

struct Homomorphism {
    const Group* domain = nullptr;
    const Group* codomain = nullptr;
    std::vector<int> image;  // total element map
};

// Product group bookkeeping for Kunneth-style constructions.
struct ProductGroup {
    Group group;                         // order |G|*|H|
    std::vector<int> projLeft;           // product index -> G index
    std::vector<int> projRight;          // product index -> H index
    std::vector<std::vector<int>> pair;  // (G index, H index) -> product index
};

Group groupFromTable(const std::string& name,
                     std::vector<std::vector<int>> mul,
                     std::vector<std::string> labels = {},
                     std::optional<int> primeHint = std::nullopt);

// Catalog constructors; generator labelling follows the usual
// two-generator presentations (g, h) for the 2-group families.
Group cyclicGroup(int n);
Group elementaryAbelianGroup(int p, int k);
Group abelianGroup(const std::vector<int>& cyclicOrders);
Group dihedralGroup(int order);       // order 2^n, n >= 3
Group quaternionGroup(int order);     // order 2^n, n >= 3
Group semidihedralGroup(int order);   // order 2^n, n >= 4
Group extraspecialExpP(int p, int order);   // p odd, order p^(1+2m)
Group modularMaximalCyclic(int p);    // Z/p^2 x| Z/p, order p^3
ProductGroup directProduct(const Group& G, const Group& H);
// Central product identifying the (order-p) centres of G and H.
Group centralProduct(const Group& G, const Group& H);

// Group spec grammar: "cyclic:4", "dihedral:8", "quaternion:16",
// "semidihedral:16", "elementary:2:2", "abelian:2:4", "extraspecial:3:27",
// "modular:3", "centralproduct:dihedral:8:dihedral:8", "product:...:...".
Group constructGroup(const std::string& spec);

Subgroup wholeGroup(const Group& G);
Subgroup trivialSubgroup(const Group& G);
Subgroup subgroupGenerated(const Group& G, const std::vector<int>& gens);
bool isSubgroup(const Group& G, const std::vector<int>& elements);

Subgroup center(const Group& G);
Subgroup derivedSubgroup(const Group& G);
Subgroup frattiniSubgroup(const Group& G);  // p-groups only

struct CharacteristicSubgroups {
    Subgroup center;
    Subgroup derived;
    Subgroup frattini;
};
CharacteristicSubgroups characteristicSubgroups(const Group& G);

ConjugacyData conjugacyClasses(const Group& G);
Subgroup centraliser(const Group& G, int g);
Subgroup centraliserOfSet(const Group& G, const Subgroup& H, int g);
Subgroup intersect(const Subgroup& A, const Subgroup& B);

// One representative per H\G/K double coset, smallest index per coset.
std::vector<int> doubleCosets(const Group& G, const Subgroup& H, const Subgroup& K);
// Right coset representatives r (cosets Hr), smallest index per coset.
std::vector<int> rightCosetReps(const Group& G, const Subgroup& H);

Subgroup sylowSubgroup(const Group& G, int p);
Subgroup normaliser(const Group& G, const Subgroup& H);

EmbeddedGroup subgroupAsGroup(const Subgroup& H);

// Quotient G/N for normal N; element map sends g to its coset index.
struct QuotientGroup {
    Group group;
    std::vector<int> projection;  // parent index -> quotient index
};
QuotientGroup quotientGroup(const Group& G, const Subgroup& N);

// Extends generator images to a homomorphism G -> H, or nullopt when
// the images violate a relation of G.
std::optional<Homomorphism> groupHomomorphism(
    const Group& G, const Group& H,
    const std::vector<std::pair<int, int>>& generatorImages);

/// p-part of g: the unique power of g of p-power order with g = g_p g_{p'}.
int pPart(const Group& G, int g, int p);

// Smallest-index u with u a u^-1 = b, or -1.
int conjugatingElement(const Group& G, int a, int b);

}  // namespace bvh
