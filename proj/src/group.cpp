#include "bvh/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace bvh {

namespace {

int findIdentity(const std::vector<std::vector<int>>& mul) {
    const int n = static_cast<int>(mul.size());
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = mul[e][a] == a && mul[a][e] == a;
        if (ok) return e;
    }
    return -1;
}

std::vector<std::string> defaultLabels(int n) {
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = "e" + std::to_string(i);
    return labels;
}

}  // namespace

Group::Group(std::string name, std::vector<std::vector<int>> mul,
             std::vector<std::string> labels, std::optional<int> primeHint)
    : name_(std::move(name)),
      order_(static_cast<int>(mul.size())),
      mul_(std::move(mul)),
      labels_(std::move(labels)),
      primeHint_(primeHint) {
    if (order_ < 1) throw GroupError(name_ + ": empty multiplication table");
    if (order_ > kMaxGroupOrder)
        throw GroupError(name_ + ": order " + std::to_string(order_) +
                         " exceeds maximum " + std::to_string(kMaxGroupOrder));
    identity_ = findIdentity(mul_);
    if (identity_ < 0) throw GroupError(name_ + ": no two-sided identity");
    if (labels_.empty()) labels_ = defaultLabels(order_);
    if (static_cast<int>(labels_.size()) != order_)
        throw GroupError(name_ + ": label count does not match order");
    validate();
    inv_.assign(order_, -1);
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            if (mul_[a][b] == identity_ && mul_[b][a] == identity_) inv_[a] = b;
    for (int a = 0; a < order_; ++a)
        if (inv_[a] < 0) throw GroupError(name_ + ": element without inverse");
}

void Group::validate() const {
    for (const auto& row : mul_) {
        if (static_cast<int>(row.size()) != order_)
            throw GroupError(name_ + ": ragged multiplication table");
        for (int v : row)
            if (v < 0 || v >= order_)
                throw GroupError(name_ + ": table entry out of range");
    }
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            for (int c = 0; c < order_; ++c)
                if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
                    throw GroupError(name_ + ": non-associative table");
}

int Group::power(int a, long e) const {
    const int n = elementOrder(a);
    long r = e % n;
    if (r < 0) r += n;
    int acc = identity_;
    for (long i = 0; i < r; ++i) acc = mul(acc, a);
    return acc;
}

uint64_t Group::tableHash() const {
    uint64_t h = 1469598103934665603ull;
    for (const auto& row : mul_)
        for (int v : row) {
            h ^= static_cast<uint64_t>(v);
            h *= 1099511628211ull;
        }
    return h;
}

int Group::elementOrder(int a) const {
    int x = a, n = 1;
    while (x != identity_) {
        x = mul(x, a);
        ++n;
    }
    return n;
}

bool Group::isAbelian() const {
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

bool Group::isPGroup(int p) const {
    int n = order_;
    while (n % p == 0) n /= p;
    return n == 1;
}

bool Subgroup::contains(int a) const {
    return std::binary_search(elements.begin(), elements.end(), a);
}

Group groupFromTable(const std::string& name, std::vector<std::vector<int>> mul,
                     std::vector<std::string> labels, std::optional<int> primeHint) {
    return Group(name, std::move(mul), std::move(labels), primeHint);
}

Group cyclicGroup(int n) {
    if (n < 1) throw GroupError("cyclic: order must be positive");
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
        labels[i] = i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i));
    }
    return Group("cyclic:" + std::to_string(n), std::move(mul), std::move(labels));
}

Group abelianGroup(const std::vector<int>& cyclicOrders) {
    if (cyclicOrders.empty()) return cyclicGroup(1);
    long total = 1;
    for (int d : cyclicOrders) {
        if (d < 1) throw GroupError("abelian: invalid factor order");
        total *= d;
    }
    if (total > kMaxGroupOrder) throw GroupError("abelian: order exceeds maximum");
    const int n = static_cast<int>(total);
    const int k = static_cast<int>(cyclicOrders.size());
    auto decode = [&](int idx) {
        std::vector<int> v(k);
        for (int i = k - 1; i >= 0; --i) {
            v[i] = idx % cyclicOrders[i];
            idx /= cyclicOrders[i];
        }
        return v;
    };
    auto encode = [&](const std::vector<int>& v) {
        int idx = 0;
        for (int i = 0; i < k; ++i) idx = idx * cyclicOrders[i] + v[i];
        return idx;
    };
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) {
        auto va = decode(a);
        for (int b = 0; b < n; ++b) {
            auto vb = decode(b);
            std::vector<int> vc(k);
            for (int i = 0; i < k; ++i) vc[i] = (va[i] + vb[i]) % cyclicOrders[i];
            mul[a][b] = encode(vc);
        }
        std::string lab;
        for (int i = 0; i < k; ++i) {
            if (va[i] == 0) continue;
            if (!lab.empty()) lab += "*";
            lab += static_cast<char>('a' + i);
            if (va[i] > 1) lab += "^" + std::to_string(va[i]);
        }
        labels[a] = lab.empty() ? "1" : lab;
    }
    std::string name = "abelian";
    for (int d : cyclicOrders) name += ":" + std::to_string(d);
    return Group(name, std::move(mul), std::move(labels));
}

Group elementaryAbelianGroup(int p, int k) {
    std::vector<int> orders(k, p);
    Group A = abelianGroup(orders);
    std::vector<std::vector<int>> mul(A.order(), std::vector<int>(A.order()));
    for (int a = 0; a < A.order(); ++a)
        for (int b = 0; b < A.order(); ++b) mul[a][b] = A.mul(a, b);
    return Group("elementary:" + std::to_string(p) + ":" + std::to_string(k),
                 std::move(mul), A.labels(), p);
}

namespace {

// Word label over generators g, h for the two-generator 2-group families,
// elements stored as r^i s^e with r = gh (dihedral/quaternion) or r = h
// (semidihedral).
std::string dihedralLabel(int i, int e, int rOrder) {
    // element (gh)^i g^e
    if (i == 0 && e == 0) return "1";
    std::string lab;
    (void)rOrder;
    if (i > 0) {
        lab = "(gh)";
        if (i > 1) lab += "^" + std::to_string(i);
    }
    if (e) lab += lab.empty() ? "g" : "*g";
    return lab;
}

}  // namespace

Group dihedralGroup(int order) {
    if (order < 8 || (order & (order - 1)) != 0)
        throw GroupError("dihedral: order must be 2^n with n >= 3");
    const int m = order / 2;  // order of r = gh
    auto idx = [m](int i, int e) { return ((i % m + m) % m) * 2 + e; };
    std::vector<std::vector<int>> mul(order, std::vector<int>(order));
    std::vector<std::string> labels(order);
    for (int i = 0; i < m; ++i)
        for (int e = 0; e < 2; ++e) {
            labels[idx(i, e)] = dihedralLabel(i, e, m);
            for (int j = 0; j < m; ++j)
                for (int f = 0; f < 2; ++f)
                    // (r^i s^e)(r^j s^f) = r^(i + (-1)^e j) s^(e+f), s=g
                    mul[idx(i, e)][idx(j, f)] = idx(e ? i - j : i + j, (e + f) % 2);
        }
    labels[idx(m - 1, 1)] = "h";  // h = g^-1 (gh) = (gh)^(m-1) g
    return Group("dihedral:" + std::to_string(order), std::move(mul),
                 std::move(labels), 2);
}

Group quaternionGroup(int order) {
    if (order < 8 || (order & (order - 1)) != 0)
        throw GroupError("quaternion: order must be 2^n with n >= 3");
    const int m = order / 2;  // order of a = gh
    auto idx = [m](int i, int e) { return ((i % m + m) % m) * 2 + e; };
    std::vector<std::vector<int>> mul(order, std::vector<int>(order));
    std::vector<std::string> labels(order);
    for (int i = 0; i < m; ++i)
        for (int e = 0; e < 2; ++e) {
            labels[idx(i, e)] = dihedralLabel(i, e, m);
            for (int j = 0; j < m; ++j)
                for (int f = 0; f < 2; ++f) {
                    // a^m = 1, g^2 = a^(m/2), g a g^-1 = a^-1; element a^i g^e
                    int i2 = e ? i - j : i + j;
                    int e2 = e + f;
                    if (e2 == 2) i2 += m / 2;
                    mul[idx(i, e)][idx(j, f)] = idx(i2, e2 % 2);
                }
        }
    labels[idx(m / 2 - 1, 1)] = "h";  // h = g^-1 (gh) = (gh)^(m/2-1) g
    return Group("quaternion:" + std::to_string(order), std::move(mul),
                 std::move(labels), 2);
}

Group semidihedralGroup(int order) {
    if (order < 16 || (order & (order - 1)) != 0)
        throw GroupError("semidihedral: order must be 2^n with n >= 4");
    const int m = order / 2;  // order of h
    const int t = m / 2 - 1;  // g h g = h^t
    auto idx = [m](int i, int e) { return ((i % m + m) % m) * 2 + e; };
    std::vector<std::vector<int>> mul(order, std::vector<int>(order));
    std::vector<std::string> labels(order);
    for (int i = 0; i < m; ++i)
        for (int e = 0; e < 2; ++e) {
            std::string lab;
            if (i > 0) {
                lab = "h";
                if (i > 1) lab += "^" + std::to_string(i);
            }
            if (e) lab += lab.empty() ? "g" : "*g";
            labels[idx(i, e)] = lab.empty() ? "1" : lab;
            for (int j = 0; j < m; ++j)
                for (int f = 0; f < 2; ++f)
                    // element h^i g^e; g h^j = h^(t j) g
                    mul[idx(i, e)][idx(j, f)] = idx(i + (e ? t * j : j), (e + f) % 2);
        }
    return Group("semidihedral:" + std::to_string(order), std::move(mul),
                 std::move(labels), 2);
}

Group extraspecialExpP(int p, int order) {
    if (p == 2 || p < 2) throw GroupError("extraspecial: p must be an odd prime");
    if (order != p * p * p) {
        // higher extraspecial groups are built as central products
        if (order == p * p * p * p * p) {
            Group H = extraspecialExpP(p, p * p * p);
            return centralProduct(H, H);
        }
        throw GroupError("extraspecial: unsupported order");
    }
    // Heisenberg group: triples (a,b,c) with
    // (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a b').
    const int n = p * p * p;
    auto idx = [p](int a, int b, int c) { return (a * p + b) * p + c; };
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c) {
                std::string lab;
                if (a) lab += "g" + (a > 1 ? "^" + std::to_string(a) : "");
                if (b) lab += std::string(lab.empty() ? "" : "*") + "h" +
                              (b > 1 ? "^" + std::to_string(b) : "");
                if (c) lab += std::string(lab.empty() ? "" : "*") + "z" +
                              (c > 1 ? "^" + std::to_string(c) : "");
                labels[idx(a, b, c)] = lab.empty() ? "1" : lab;
                for (int a2 = 0; a2 < p; ++a2)
                    for (int b2 = 0; b2 < p; ++b2)
                        for (int c2 = 0; c2 < p; ++c2)
                            mul[idx(a, b, c)][idx(a2, b2, c2)] =
                                idx((a + a2) % p, (b + b2) % p,
                                    (c + c2 + a * b2) % p);
            }
    return Group("extraspecial:" + std::to_string(p) + ":" + std::to_string(order),
                 std::move(mul), std::move(labels), p);
}

Group modularMaximalCyclic(int p) {
    const long n = static_cast<long>(p) * p * p;
    if (n > kMaxGroupOrder) throw GroupError("modular: order exceeds maximum");
    // a of order p^2, h of order p, h a h^-1 = a^(1+p); element a^i h^j
    const int pp = p * p;
    auto id2 = [p, pp](int i, int j) { return ((i % pp + pp) % pp) * p + ((j % p + p) % p); };
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int i = 0; i < pp; ++i)
        for (int j = 0; j < p; ++j) {
            std::string lab;
            if (i) lab += "a" + (i > 1 ? "^" + std::to_string(i) : std::string());
            if (j) lab += std::string(lab.empty() ? "" : "*") + "h" +
                          (j > 1 ? "^" + std::to_string(j) : std::string());
            labels[id2(i, j)] = lab.empty() ? "1" : lab;
            for (int i2 = 0; i2 < pp; ++i2)
                for (int j2 = 0; j2 < p; ++j2) {
                    // h^j a^i2 = a^(i2 (1+p)^j) h^j
                    long f = 1;
                    for (int r = 0; r < j; ++r) f = f * (1 + p) % pp;
                    mul[id2(i, j)][id2(i2, j2)] =
                        id2(static_cast<int>((i + i2 * f) % pp), j + j2);
                }
        }
    return Group("modular:" + std::to_string(p), std::move(mul), std::move(labels), p);
}

ProductGroup directProduct(const Group& G, const Group& H) {
    const long n = static_cast<long>(G.order()) * H.order();
    if (n > kMaxGroupOrder) throw GroupError("product: order exceeds maximum");
    const int nG = G.order(), nH = H.order(), N = static_cast<int>(n);
    auto idx = [nH](int a, int b) { return a * nH + b; };
    std::vector<std::vector<int>> mul(N, std::vector<int>(N));
    std::vector<std::string> labels(N);
    ProductGroup out{Group("x", {{0}}), {}, {}, {}};
    out.projLeft.resize(N);
    out.projRight.resize(N);
    out.pair.assign(nG, std::vector<int>(nH));
    for (int a = 0; a < nG; ++a)
        for (int b = 0; b < nH; ++b) {
            const int i = idx(a, b);
            out.projLeft[i] = a;
            out.projRight[i] = b;
            out.pair[a][b] = i;
            labels[i] = "(" + G.label(a) + "," + H.label(b) + ")";
            for (int a2 = 0; a2 < nG; ++a2)
                for (int b2 = 0; b2 < nH; ++b2)
                    mul[i][idx(a2, b2)] = idx(G.mul(a, a2), H.mul(b, b2));
        }
    std::optional<int> hint;
    if (G.primeHint() && G.primeHint() == H.primeHint()) hint = G.primeHint();
    out.group = Group("product:" + G.name() + ":" + H.name(), std::move(mul),
                      std::move(labels), hint);
    return out;
}

Group centralProduct(const Group& G, const Group& H) {
    Subgroup zg = center(G), zh = center(H);
    if (zg.order() != zh.order())
        throw GroupError("centralproduct: centres have different orders");
    // Pick generators of the two centres (smallest non-identity element of
    // maximal order) and identify z_G with z_H^-1.
    auto centerGen = [](const Group& K, const Subgroup& Z) {
        int best = -1, bestOrd = 0;
        for (int e : Z.elements)
            if (e != K.identity() && K.elementOrder(e) > bestOrd) {
                best = e;
                bestOrd = K.elementOrder(e);
            }
        if (best < 0) throw GroupError("centralproduct: trivial centre");
        return best;
    };
    const int a = centerGen(G, zg), b = centerGen(H, zh);
    if (G.elementOrder(a) != H.elementOrder(b))
        throw GroupError("centralproduct: centre generators of different order");
    ProductGroup P = directProduct(G, H);
    std::vector<int> gens;
    gens.push_back(P.pair[a][H.inv(b)]);
    Subgroup N = subgroupGenerated(P.group, gens);
    return quotientGroup(P.group, N).group;
}

Group constructGroup(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty()) throw GroupError("empty group spec");
    const std::string& kind = parts[0];
    auto arg = [&](size_t i) {
        if (i >= parts.size()) throw GroupError(spec + ": missing parameter");
        return std::stoi(parts[i]);
    };
    if (kind == "cyclic") return cyclicGroup(arg(1));
    if (kind == "elementary") return elementaryAbelianGroup(arg(1), arg(2));
    if (kind == "abelian") {
        std::vector<int> orders;
        for (size_t i = 1; i < parts.size(); ++i) orders.push_back(std::stoi(parts[i]));
        return abelianGroup(orders);
    }
    if (kind == "dihedral") return dihedralGroup(arg(1));
    if (kind == "quaternion") return quaternionGroup(arg(1));
    if (kind == "semidihedral") return semidihedralGroup(arg(1));
    if (kind == "extraspecial") return extraspecialExpP(arg(1), arg(2));
    if (kind == "modular") return modularMaximalCyclic(arg(1));
    if (kind == "product" || kind == "centralproduct") {
        // split the remainder into two sub-specs; each sub-spec is a
        // catalog name followed by its numeric parameters
        std::vector<std::string> subs;
        std::string cur;
        for (size_t i = 1; i < parts.size(); ++i) {
            bool numeric = !parts[i].empty() &&
                           parts[i].find_first_not_of("0123456789") == std::string::npos;
            if (!numeric && !cur.empty()) {
                subs.push_back(cur);
                cur.clear();
            }
            cur += (cur.empty() ? "" : ":") + parts[i];
        }
        if (!cur.empty()) subs.push_back(cur);
        if (subs.size() != 2) throw GroupError(spec + ": expected two factors");
        Group A = constructGroup(subs[0]);
        Group B = constructGroup(subs[1]);
        if (kind == "product") return directProduct(A, B).group;
        return centralProduct(A, B);
    }
    throw GroupError("unknown group spec: " + spec);
}

Subgroup wholeGroup(const Group& G) {
    Subgroup S{&G, {}};
    S.elements.resize(G.order());
    std::iota(S.elements.begin(), S.elements.end(), 0);
    return S;
}

Subgroup trivialSubgroup(const Group& G) { return Subgroup{&G, {G.identity()}}; }

Subgroup subgroupGenerated(const Group& G, const std::vector<int>& gens) {
    std::set<int> elems{G.identity()};
    std::vector<int> frontier{G.identity()};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int g : gens) {
                for (int y : {G.mul(x, g), G.mul(x, G.inv(g))})
                    if (elems.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return Subgroup{&G, std::vector<int>(elems.begin(), elems.end())};
}

bool isSubgroup(const Group& G, const std::vector<int>& elements) {
    std::set<int> s(elements.begin(), elements.end());
    if (!s.count(G.identity())) return false;
    for (int a : s)
        for (int b : s)
            if (!s.count(G.mul(a, b))) return false;
    for (int a : s)
        if (!s.count(G.inv(a))) return false;
    return true;
}

Subgroup center(const Group& G) {
    std::vector<int> elems;
    for (int a = 0; a < G.order(); ++a) {
        bool central = true;
        for (int b = 0; b < G.order() && central; ++b)
            central = G.mul(a, b) == G.mul(b, a);
        if (central) elems.push_back(a);
    }
    return Subgroup{&G, elems};
}

Subgroup derivedSubgroup(const Group& G) {
    std::vector<int> comms;
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b)
            comms.push_back(G.mul(G.mul(a, b), G.inv(G.mul(b, a))));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return subgroupGenerated(G, comms);
}

Subgroup frattiniSubgroup(const Group& G) {
    int n = G.order(), p = 0;
    for (int q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61})
        if (n % q == 0) {
            p = q;
            break;
        }
    if (p == 0 || !G.isPGroup(p))
        throw GroupError("frattini: requires a p-group");
    Subgroup D = derivedSubgroup(G);
    std::vector<int> gens = D.elements;
    for (int a = 0; a < n; ++a) gens.push_back(G.power(a, p));
    return subgroupGenerated(G, gens);
}

CharacteristicSubgroups characteristicSubgroups(const Group& G) {
    return {center(G), derivedSubgroup(G), frattiniSubgroup(G)};
}

ConjugacyData conjugacyClasses(const Group& G) {
    const int n = G.order();
    ConjugacyData data;
    data.classOf.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        if (data.classOf[a] >= 0) continue;
        std::set<int> cls;
        for (int u = 0; u < n; ++u) cls.insert(G.conj(u, a));
        const int rep = *cls.begin();
        data.representatives.push_back(rep);
        data.classElements.emplace_back(cls.begin(), cls.end());
        for (int x : cls) data.classOf[x] = rep;
    }
    return data;
}

Subgroup centraliser(const Group& G, int g) {
    std::vector<int> elems;
    for (int x = 0; x < G.order(); ++x)
        if (G.mul(x, g) == G.mul(g, x)) elems.push_back(x);
    return Subgroup{&G, elems};
}

Subgroup centraliserOfSet(const Group& G, const Subgroup& H, int g) {
    std::vector<int> elems;
    for (int x : H.elements)
        if (G.mul(x, g) == G.mul(g, x)) elems.push_back(x);
    return Subgroup{&G, elems};
}

Subgroup intersect(const Subgroup& A, const Subgroup& B) {
    std::vector<int> out;
    std::set_intersection(A.elements.begin(), A.elements.end(),
                          B.elements.begin(), B.elements.end(),
                          std::back_inserter(out));
    return Subgroup{A.parent, out};
}

std::vector<int> doubleCosets(const Group& G, const Subgroup& H, const Subgroup& K) {
    if (!isSubgroup(G, H.elements) || !isSubgroup(G, K.elements))
        throw GroupError("doubleCosets: operands are not subgroups");
    std::vector<int> reps;
    std::vector<char> seen(G.order(), 0);
    for (int u = 0; u < G.order(); ++u) {
        if (seen[u]) continue;
        reps.push_back(u);
        for (int h : H.elements)
            for (int k : K.elements) seen[G.mul(G.mul(h, u), k)] = 1;
    }
    return reps;
}

std::vector<int> rightCosetReps(const Group& G, const Subgroup& H) {
    std::vector<int> reps;
    std::vector<char> seen(G.order(), 0);
    for (int r = 0; r < G.order(); ++r) {
        if (seen[r]) continue;
        reps.push_back(r);
        for (int h : H.elements) seen[G.mul(h, r)] = 1;
    }
    return reps;
}

Subgroup normaliser(const Group& G, const Subgroup& H) {
    std::vector<int> elems;
    for (int x = 0; x < G.order(); ++x) {
        bool ok = true;
        for (int h : H.elements)
            if (!H.contains(G.conj(x, h))) {
                ok = false;
                break;
            }
        if (ok) elems.push_back(x);
    }
    return Subgroup{&G, elems};
}

Subgroup sylowSubgroup(const Group& G, int p) {
    int pPartOrder = 1, n = G.order();
    while (n % p == 0) {
        n /= p;
        pPartOrder *= p;
    }
    Subgroup P = trivialSubgroup(G);
    while (P.order() < pPartOrder) {
        Subgroup N = normaliser(G, P);
        // find x in N \ P with x^(p^k) generating a p-element mod P
        int found = -1;
        for (int x : N.elements) {
            if (P.contains(x)) continue;
            int ord = G.elementOrder(x);
            while (ord % p == 0) ord /= p;
            int y = G.power(x, ord);  // p-part of x
            if (!P.contains(y)) {
                found = y;
                break;
            }
        }
        if (found < 0) throw GroupError("sylow: normaliser climb stalled");
        std::vector<int> gens = P.elements;
        gens.push_back(found);
        P = subgroupGenerated(G, gens);
    }
    return P;
}

EmbeddedGroup subgroupAsGroup(const Subgroup& H) {
    const Group& G = *H.parent;
    const int n = H.order();
    std::vector<int> fromParent(G.order(), -1);
    for (int i = 0; i < n; ++i) fromParent[H.elements[i]] = i;
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        labels[i] = G.label(H.elements[i]);
        for (int j = 0; j < n; ++j) {
            int prod = fromParent[G.mul(H.elements[i], H.elements[j])];
            if (prod < 0) throw GroupError("subgroupAsGroup: set not closed");
            mul[i][j] = prod;
        }
    }
    std::string name = G.name() + "/sub";
    for (int e : H.elements) name += "." + std::to_string(e);
    return EmbeddedGroup{Group(name, std::move(mul), std::move(labels), G.primeHint()),
                         H.elements, std::move(fromParent)};
}

QuotientGroup quotientGroup(const Group& G, const Subgroup& N) {
    // verify normality
    for (int x = 0; x < G.order(); ++x)
        for (int h : N.elements)
            if (!N.contains(G.conj(x, h)))
                throw GroupError("quotient: subgroup not normal");
    std::vector<int> cosetOf(G.order(), -1);
    std::vector<int> reps;
    for (int a = 0; a < G.order(); ++a) {
        if (cosetOf[a] >= 0) continue;
        const int c = static_cast<int>(reps.size());
        reps.push_back(a);
        for (int h : N.elements) cosetOf[G.mul(a, h)] = c;
    }
    const int m = static_cast<int>(reps.size());
    std::vector<std::vector<int>> mul(m, std::vector<int>(m));
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i) {
        labels[i] = "[" + G.label(reps[i]) + "]";
        for (int j = 0; j < m; ++j) mul[i][j] = cosetOf[G.mul(reps[i], reps[j])];
    }
    return QuotientGroup{Group(G.name() + "/N", std::move(mul), std::move(labels),
                               G.primeHint()),
                         std::move(cosetOf)};
}

std::optional<Homomorphism> groupHomomorphism(
    const Group& G, const Group& H,
    const std::vector<std::pair<int, int>>& generatorImages) {
    std::vector<int> image(G.order(), -1);
    image[G.identity()] = H.identity();
    for (auto [g, h] : generatorImages) {
        if (image[g] >= 0 && image[g] != h) return std::nullopt;
        image[g] = h;
    }
    // close under multiplication by generators
    bool progress = true;
    while (progress) {
        progress = false;
        for (int a = 0; a < G.order(); ++a) {
            if (image[a] < 0) continue;
            for (auto [g, h] : generatorImages) {
                int ag = G.mul(a, g), im = H.mul(image[a], h);
                if (image[ag] < 0) {
                    image[ag] = im;
                    progress = true;
                } else if (image[ag] != im) {
                    return std::nullopt;
                }
            }
        }
    }
    for (int a = 0; a < G.order(); ++a)
        if (image[a] < 0) return std::nullopt;  // images do not generate
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b)
            if (image[G.mul(a, b)] != H.mul(image[a], image[b])) return std::nullopt;
    return Homomorphism{&G, &H, std::move(image)};
}

int pPart(const Group& G, int g, int p) {
    int ord = G.elementOrder(g);
    int q = 1;
    while (ord % p == 0) {
        ord /= p;
        q *= p;
    }
    // ord is now the p'-part of |g|; g_p = g^(ord * t) with ord*t = 1 mod q
    if (q == 1) return G.identity();
    long t = 1;
    while ((ord * t) % q != 1) ++t;
    return G.power(g, ord * t);
}

int conjugatingElement(const Group& G, int a, int b) {
    for (int u = 0; u < G.order(); ++u)
        if (G.conj(u, a) == b) return u;
    return -1;
}

}  // namespace bvh
