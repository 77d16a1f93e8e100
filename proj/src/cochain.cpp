#include "bvh/cochain.hpp"

#include <algorithm>
#include <sstream>

namespace bvh {

namespace {

constexpr int kBitsPerEntry = 7;  // element indices < 128
constexpr int kMaxPackedDegree = 9;

int signUnit(int i, int p) { return (i & 1) ? p - 1 : 1; }

void requireCentral(const Group& G, int g) {
    for (int a = 0; a < G.order(); ++a) {
        if (G.mul(g, a) != G.mul(a, g)) {
            std::ostringstream os;
            os << "element " << G.label(g) << " is not central in " << G.name();
            throw CochainError(os.str());
        }
    }
}

}  // namespace

TupleSpace::TupleSpace(const Group& G, int degree) : group_(&G), degree_(degree) {
    if (degree < 0) throw CochainError("tuple space degree must be >= 0");
    m_ = G.order() - 1;
    digitOf_.assign(G.order(), -1);
    for (int a = 0; a < G.order(); ++a) {
        if (a == G.identity()) continue;
        digitOf_[a] = static_cast<int>(nonId_.size());
        nonId_.push_back(a);
    }
    size_ = 1;
    for (int i = 0; i < degree; ++i) {
        if (size_ > (1L << 62) / std::max(m_, 1)) throw CochainError("tuple space too large");
        size_ *= m_;
    }
}

std::vector<int> TupleSpace::decode(long index) const {
    std::vector<int> tuple(degree_);
    for (int i = 0; i < degree_; ++i) {
        tuple[i] = nonId_[index % m_];
        index /= m_;
    }
    return tuple;
}

long TupleSpace::encode(const std::vector<int>& tuple) const {
    long index = 0;
    for (int i = degree_ - 1; i >= 0; --i) {
        int d = digitOf_[tuple[i]];
        if (d < 0) return -1;
        index = index * m_ + d;
    }
    return index;
}

Cochain::Cochain(const Group& G, int p, int degree)
    : group_(&G), p_(p), degree_(degree) {
    if (!isPrime(p)) throw CochainError("coefficient modulus must be prime");
    if (degree < 0 || degree > kMaxPackedDegree)
        throw CochainError("unsupported cochain degree");
}

uint64_t Cochain::pack(const std::vector<int>& tuple) {
    uint64_t key = 0;
    for (size_t i = 0; i < tuple.size(); ++i)
        key |= static_cast<uint64_t>(tuple[i]) << (kBitsPerEntry * i);
    return key;
}

std::vector<int> Cochain::unpack(uint64_t key) const {
    std::vector<int> tuple(degree_);
    for (int i = 0; i < degree_; ++i)
        tuple[i] = static_cast<int>((key >> (kBitsPerEntry * i)) & 0x7f);
    return tuple;
}

int Cochain::value(const std::vector<int>& tuple) const {
    if (static_cast<int>(tuple.size()) != degree_)
        throw CochainError("tuple length does not match cochain degree");
    for (int a : tuple)
        if (a == group_->identity()) return 0;
    auto it = values_.find(pack(tuple));
    return it == values_.end() ? 0 : it->second;
}

void Cochain::setValue(const std::vector<int>& tuple, int v) {
    if (static_cast<int>(tuple.size()) != degree_)
        throw CochainError("tuple length does not match cochain degree");
    v %= p_;
    if (v < 0) v += p_;
    for (int a : tuple) {
        if (a == group_->identity()) {
            if (v != 0) throw CochainError("normalized cochains vanish on identity entries");
            return;
        }
    }
    uint64_t key = pack(tuple);
    if (v == 0)
        values_.erase(key);
    else
        values_[key] = static_cast<uint16_t>(v);
}

void Cochain::addValue(const std::vector<int>& tuple, int v) {
    setValue(tuple, value(tuple) + v % p_ + p_);
}

Cochain Cochain::operator+(const Cochain& o) const {
    if (degree_ != o.degree_ || p_ != o.p_ || group_->order() != o.group_->order())
        throw CochainError("cochain sum shape mismatch");
    Cochain r = *this;
    for (const auto& [key, val] : o.values_) {
        int nv = (r.values_.count(key) ? r.values_[key] : 0) + val;
        nv %= p_;
        if (nv == 0)
            r.values_.erase(key);
        else
            r.values_[key] = static_cast<uint16_t>(nv);
    }
    return r;
}

Cochain Cochain::operator-(const Cochain& o) const { return *this + o.scaled(p_ - 1); }

Cochain Cochain::scaled(int c) const {
    c %= p_;
    if (c < 0) c += p_;
    Cochain r(*group_, p_, degree_);
    if (c == 0) return r;
    for (const auto& [key, val] : values_)
        r.values_[key] = static_cast<uint16_t>((val * c) % p_);
    return r;
}

bool Cochain::operator==(const Cochain& o) const {
    return degree_ == o.degree_ && p_ == o.p_ && values_ == o.values_;
}

FpDenseVec Cochain::toDense(const TupleSpace& ts) const {
    if (ts.degree() != degree_) throw CochainError("tuple space degree mismatch");
    FpDenseVec v(ts.size(), p_);
    for (const auto& [key, val] : values_)
        v.set(ts.encode(unpack(key)), val);
    return v;
}

Cochain Cochain::fromDense(const Group& G, int p, int degree,
                           const FpDenseVec& v, const TupleSpace& ts) {
    Cochain r(G, p, degree);
    long i = v.leading(0);
    while (i >= 0) {
        r.setValue(ts.decode(i), v.get(i));
        i = v.leading(i + 1);
    }
    return r;
}

Cochain coboundary(const Cochain& phi) {
    const Group& G = phi.group();
    const int p = phi.modulus();
    const int n = phi.degree();
    TupleSpace rows(G, n + 1);
    Cochain d(G, p, n + 1);
    const int outer = signUnit(n + 1, p);
    std::vector<int> merged(n);
    for (long r = 0; r < rows.size(); ++r) {
        std::vector<int> t = rows.decode(r);
        long acc = 0;
        // drop a_1
        merged.assign(t.begin() + 1, t.end());
        acc += phi.value(merged);
        // merge a_i a_{i+1}
        for (int i = 1; i <= n; ++i) {
            int prod = G.mul(t[i - 1], t[i]);
            if (prod == G.identity()) continue;
            merged.clear();
            merged.insert(merged.end(), t.begin(), t.begin() + (i - 1));
            merged.push_back(prod);
            merged.insert(merged.end(), t.begin() + (i + 1), t.end());
            acc += static_cast<long>(signUnit(i, p)) * phi.value(merged);
        }
        // drop a_{n+1}
        merged.assign(t.begin(), t.end() - 1);
        acc += static_cast<long>(signUnit(n + 1, p)) * phi.value(merged);
        int v = static_cast<int>((acc % p) * outer % p);
        if (v != 0) d.setValue(t, v);
    }
    return d;
}

bool isCocycle(const Cochain& phi) { return coboundary(phi).isZero(); }

Cochain deltaGCochain(const Cochain& phi, int g) {
    const Group& G = phi.group();
    const int p = phi.modulus();
    const int n = phi.degree();
    if (n < 1) throw CochainError("degree -1 map needs positive degree");
    requireCentral(G, g);
    Cochain r(G, p, n - 1);
    if (g == G.identity()) return r;
    TupleSpace rows(G, n - 1);
    std::vector<int> ins(n);
    for (long idx = 0; idx < rows.size(); ++idx) {
        std::vector<int> t = rows.decode(idx);
        long acc = 0;
        for (int i = 0; i < n; ++i) {
            ins.clear();
            ins.insert(ins.end(), t.begin(), t.begin() + i);
            ins.push_back(g);
            ins.insert(ins.end(), t.begin() + i, t.end());
            acc += static_cast<long>(signUnit(i, p)) * phi.value(ins);
        }
        int v = static_cast<int>(acc % p);
        if (v != 0) r.setValue(t, v);
    }
    return r;
}

Cochain cup(const Cochain& phi, const Cochain& psi) {
    if (&phi.group() != &psi.group() &&
        phi.group().name() != psi.group().name())
        throw CochainError("cup product needs cochains on the same group");
    if (phi.modulus() != psi.modulus()) throw CochainError("cup product modulus mismatch");
    const int m = phi.degree();
    Cochain r(phi.group(), phi.modulus(), m + psi.degree());
    for (const auto& [ka, va] : phi.entries()) {
        for (const auto& [kb, vb] : psi.entries()) {
            uint64_t key = ka | (kb << (kBitsPerEntry * m));
            std::vector<int> tuple = r.unpack(key);
            r.addValue(tuple, va * vb);
        }
    }
    return r;
}

Cochain pullback(const Homomorphism& f, const Cochain& phi) {
    if (f.codomain->order() != phi.group().order() ||
        f.codomain->name() != phi.group().name())
        throw CochainError("pullback codomain mismatch");
    const Group& G = *f.domain;
    const int n = phi.degree();
    TupleSpace rows(G, n);
    Cochain r(G, phi.modulus(), n);
    std::vector<int> img(n);
    for (long idx = 0; idx < rows.size(); ++idx) {
        std::vector<int> t = rows.decode(idx);
        bool dead = false;
        for (int i = 0; i < n; ++i) {
            img[i] = f.image[t[i]];
            if (img[i] == phi.group().identity()) { dead = true; break; }
        }
        if (dead) continue;
        int v = phi.value(img);
        if (v != 0) r.setValue(t, v);
    }
    return r;
}

Cochain restrictCochain(const Cochain& phi, const EmbeddedGroup& H) {
    Cochain r(H.group, phi.modulus(), phi.degree());
    for (const auto& [key, val] : phi.entries()) {
        std::vector<int> t = phi.unpack(key);
        bool inside = true;
        for (int& a : t) {
            int b = H.fromParent[a];
            if (b < 0) { inside = false; break; }
            a = b;
        }
        if (inside) r.setValue(t, val);
    }
    return r;
}

Cochain transferCochain(const Cochain& phi, const Group& T,
                        const std::vector<int>& embed) {
    const Group& H = phi.group();
    if (static_cast<int>(embed.size()) != H.order())
        throw CochainError("transfer embedding size mismatch");
    Subgroup Hsub{&T, embed};
    std::sort(Hsub.elements.begin(), Hsub.elements.end());
    if (!isSubgroup(T, Hsub.elements)) throw CochainError("transfer image is not a subgroup");
    std::vector<int> intoH(T.order(), -1);  // parent index -> phi-group index
    for (int i = 0; i < H.order(); ++i) intoH[embed[i]] = i;

    std::vector<int> reps = rightCosetReps(T, Hsub);
    std::vector<int> repOf(T.order());  // element -> its coset representative
    for (int r : reps)
        for (int h : Hsub.elements) repOf[T.mul(h, r)] = r;

    const int n = phi.degree();
    const int p = phi.modulus();
    TupleSpace rows(T, n);
    Cochain out(T, p, n);
    std::vector<int> ht(n);
    for (long idx = 0; idx < rows.size(); ++idx) {
        std::vector<int> t = rows.decode(idx);
        long acc = 0;
        for (int r0 : reps) {
            int r = r0;
            bool dead = false;
            for (int i = 0; i < n; ++i) {
                int x = T.mul(r, t[i]);
                int rn = repOf[x];
                int h = T.mul(x, T.inv(rn));
                if (h == T.identity()) { dead = true; break; }
                ht[i] = intoH[h];
                r = rn;
            }
            if (!dead) acc += phi.value(ht);
        }
        int v = static_cast<int>(acc % p);
        if (v != 0) out.setValue(t, v);
    }
    return out;
}

Cochain relabelCochain(const Cochain& phi, const Group& K,
                       const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != phi.group().order() ||
        phi.group().order() != K.order())
        throw CochainError("relabel map size mismatch");
    for (int a = 0; a < phi.group().order(); ++a)
        for (int b = 0; b < phi.group().order(); ++b)
            if (map[phi.group().mul(a, b)] != K.mul(map[a], map[b]))
                throw CochainError("relabel map is not an isomorphism");
    Cochain r(K, phi.modulus(), phi.degree());
    for (const auto& [key, val] : phi.entries()) {
        std::vector<int> t = phi.unpack(key);
        for (int& a : t) a = map[a];
        r.setValue(t, val);
    }
    return r;
}

Cochain crossProduct(const Cochain& phi, const Cochain& psi, const ProductGroup& P) {
    if (phi.modulus() != psi.modulus()) throw CochainError("cross product modulus mismatch");
    const int m = phi.degree();
    const int n = psi.degree();
    TupleSpace rows(P.group, m + n);
    Cochain r(P.group, phi.modulus(), m + n);
    std::vector<int> left(m), right(n);
    for (long idx = 0; idx < rows.size(); ++idx) {
        std::vector<int> t = rows.decode(idx);
        bool dead = false;
        for (int i = 0; i < m; ++i) {
            left[i] = P.projLeft[t[i]];
            if (left[i] == phi.group().identity()) { dead = true; break; }
        }
        if (dead) continue;
        for (int j = 0; j < n; ++j) {
            right[j] = P.projRight[t[m + j]];
            if (right[j] == psi.group().identity()) { dead = true; break; }
        }
        if (dead) continue;
        int v = phi.value(left) * psi.value(right) % phi.modulus();
        if (v != 0) r.setValue(t, v);
    }
    return r;
}

Cochain bockstein(const Cochain& phi) {
    if (!isCocycle(phi)) throw CochainError("Bockstein requires a cocycle");
    const Group& G = phi.group();
    const int p = phi.modulus();
    const int n = phi.degree();
    TupleSpace rows(G, n + 1);
    Cochain out(G, p, n + 1);
    const int outer = (n % 2 == 0) ? 1 : -1;  // (-1)^(n+1)
    std::vector<int> merged(n);
    for (long r = 0; r < rows.size(); ++r) {
        std::vector<int> t = rows.decode(r);
        // integral coboundary of the [0, p) lift
        long acc = 0;
        merged.assign(t.begin() + 1, t.end());
        acc += phi.value(merged);
        for (int i = 1; i <= n; ++i) {
            int prod = G.mul(t[i - 1], t[i]);
            if (prod == G.identity()) continue;
            merged.clear();
            merged.insert(merged.end(), t.begin(), t.begin() + (i - 1));
            merged.push_back(prod);
            merged.insert(merged.end(), t.begin() + (i + 1), t.end());
            acc += static_cast<long>((i & 1) ? -1 : 1) * phi.value(merged);
        }
        merged.assign(t.begin(), t.end() - 1);
        acc += static_cast<long>((n % 2 == 0) ? -1 : 1) * phi.value(merged);
        acc *= outer;
        if (acc % p != 0) throw CochainError("integral lift coboundary not divisible by p");
        int v = static_cast<int>(((acc / p) % p + p) % p);
        if (v != 0) out.setValue(t, v);
    }
    return out;
}

Cochain randomCochain(const Group& G, int p, int degree, std::mt19937& rng) {
    TupleSpace ts(G, degree);
    std::uniform_int_distribution<int> coin(0, p - 1);
    Cochain r(G, p, degree);
    for (long i = 0; i < ts.size(); ++i) {
        int v = coin(rng);
        if (v != 0) r.setValue(ts.decode(i), v);
    }
    return r;
}

Cochain homCochain(const Group& G, int p, const std::vector<int>& values) {
    if (static_cast<int>(values.size()) != G.order())
        throw CochainError("hom value table size mismatch");
    Cochain r(G, p, 1);
    for (int a = 0; a < G.order(); ++a) {
        if (a == G.identity()) {
            if (values[a] % p != 0) throw CochainError("hom must vanish at the identity");
            continue;
        }
        r.setValue({a}, values[a]);
    }
    auto red = [p](int v) { return (v % p + p) % p; };
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b)
            if (red(values[a] + values[b]) != red(values[G.mul(a, b)]))
                throw CochainError("values do not define a homomorphism to F_p");
    return r;
}

int ExtensionCocycle::kernelElement(int lambda) const {
    return base->identity() * modulus + ((lambda % modulus + modulus) % modulus);
}

ExtensionCocycle extensionFromCocycle(const Group& G, const Cochain& alpha) {
    if (alpha.degree() != 2) throw CochainError("extension needs a 2-cochain");
    if (&alpha.group() != &G && alpha.group().name() != G.name())
        throw CochainError("extension cocycle lives on the wrong group");
    if (!isCocycle(alpha)) throw CochainError("extension datum is not a 2-cocycle");
    const int p = alpha.modulus();
    const int order = G.order() * p;
    if (order > kMaxGroupOrder) throw CochainError("extension exceeds the order cap");
    std::vector<std::vector<int>> mul(order, std::vector<int>(order));
    for (int a = 0; a < G.order(); ++a)
        for (int lam = 0; lam < p; ++lam)
            for (int b = 0; b < G.order(); ++b)
                for (int mu = 0; mu < p; ++mu) {
                    int c = G.mul(a, b);
                    int nu = (lam + mu +
                              (a == G.identity() || b == G.identity()
                                   ? 0
                                   : alpha.value({a, b}))) % p;
                    mul[a * p + lam][b * p + mu] = c * p + nu;
                }
    std::vector<std::string> labels(order);
    for (int a = 0; a < G.order(); ++a)
        for (int lam = 0; lam < p; ++lam)
            labels[a * p + lam] = "(" + std::to_string(lam) + "," + G.label(a) + ")";
    Group K = groupFromTable("ext(" + G.name() + ")", std::move(mul),
                             std::move(labels), p);
    return ExtensionCocycle{&G, alpha, std::move(K), p};
}

int extensionCommutator(const ExtensionCocycle& E, int g, int h) {
    const Group& K = E.extension;
    int gh = E.lift(g), hh = E.lift(h);
    int c = K.mul(K.mul(gh, hh), K.mul(K.inv(gh), K.inv(hh)));
    if (E.baseOf(c) != E.base->identity())
        throw CochainError("commutator does not land in the central kernel");
    return E.lambdaOf(c);
}

namespace {

using Chain = std::map<std::vector<int>, long>;  // normalized (a_0; a_1..a_k)

void chainAdd(Chain& c, std::vector<int> t, long coeff, const Group& G) {
    for (size_t i = 1; i < t.size(); ++i)
        if (t[i] == G.identity()) return;  // degenerate, zero in normalized complex
    long& slot = c[t];
    slot += coeff;
    if (slot == 0) c.erase(t);
}

// bar differential on (a_0, .., a_k)
Chain barDiff(const Chain& x, const Group& G) {
    Chain out;
    for (const auto& [t, coeff] : x) {
        int k = static_cast<int>(t.size()) - 1;
        for (int i = 0; i < k; ++i) {
            std::vector<int> m(t.begin(), t.begin() + i);
            m.push_back(G.mul(t[i], t[i + 1]));
            m.insert(m.end(), t.begin() + i + 2, t.end());
            chainAdd(out, std::move(m), (i & 1) ? -coeff : coeff, G);
        }
        std::vector<int> m(t.begin(), t.end() - 1);
        chainAdd(out, std::move(m), (k & 1) ? -coeff : coeff, G);
    }
    return out;
}

// contracting-style map: insert g after each position with alternating sign
Chain homotopyS(const Chain& x, const Group& G, int g) {
    Chain out;
    for (const auto& [t, coeff] : x) {
        for (size_t i = 0; i < t.size(); ++i) {
            std::vector<int> m(t.begin(), t.begin() + i + 1);
            m.push_back(g);
            m.insert(m.end(), t.begin() + i + 1, t.end());
            chainAdd(out, std::move(m), (i & 1) ? -coeff : coeff, G);
        }
    }
    return out;
}

}  // namespace

HomotopyCheckResult verifyHomotopyIdentity(const Group& G, int g, int n) {
    requireCentral(G, g);
    HomotopyCheckResult res;
    TupleSpace ts(G, n);
    for (long idx = 0; idx < ts.size(); ++idx) {
        std::vector<int> tail = ts.decode(idx);
        std::vector<int> basis;
        basis.push_back(G.identity());
        basis.insert(basis.end(), tail.begin(), tail.end());
        Chain x;
        chainAdd(x, basis, 1, G);

        Chain lhs = barDiff(homotopyS(x, G, g), G);
        for (const auto& [t, c] : homotopyS(barDiff(x, G), G, g)) chainAdd(lhs, t, c, G);

        Chain rhs;
        std::vector<int> gx = basis;
        gx[0] = G.mul(g, basis[0]);
        chainAdd(rhs, gx, 1, G);
        chainAdd(rhs, basis, -1, G);

        ++res.checkedTuples;
        if (lhs != rhs) {
            res.pass = false;
            res.witnessTuple = tail;
            return res;
        }
    }
    return res;
}

}  // namespace bvh
