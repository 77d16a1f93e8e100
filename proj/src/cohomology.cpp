#include "bvh/cohomology.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

namespace bvh {

namespace {

int signUnit(int i, int p) { return (i & 1) ? p - 1 : 1; }

// d_{n} applied to the basis cochain at `below` index, scattered as
// columns: for every (n+1)-tuple tau we add the face coefficients of
// (d e_sigma)(tau) into img[sigma].
std::vector<FpDenseVec> coboundaryImages(const Group& G, int p, int degree) {
    TupleSpace below(G, degree - 1);
    TupleSpace here(G, degree);
    std::vector<FpDenseVec> img(below.size(), FpDenseVec(here.size(), p));
    const int outer = signUnit(degree, p);
    std::vector<int> face;
    for (long r = 0; r < here.size(); ++r) {
        std::vector<int> t = here.decode(r);
        face.assign(t.begin() + 1, t.end());
        img[below.encode(face)].addAt(r, outer);
        for (int i = 1; i < degree; ++i) {
            int prod = G.mul(t[i - 1], t[i]);
            if (prod == G.identity()) continue;
            face.clear();
            face.insert(face.end(), t.begin(), t.begin() + (i - 1));
            face.push_back(prod);
            face.insert(face.end(), t.begin() + (i + 1), t.end());
            img[below.encode(face)].addAt(r, outer * signUnit(i, p) % p);
        }
        face.assign(t.begin(), t.end() - 1);
        img[below.encode(face)].addAt(r, 1);  // outer * sign(degree) = +1
    }
    return img;
}

}  // namespace

CohomologySpace::CohomologySpace(const Group& G, int p, int degree)
    : group_(G), p_(p), degree_(degree), tuples_(group_, degree) {
    if (!isPrime(p)) throw CohomologyError("coefficient modulus must be prime");
    if (degree < 0) throw CohomologyError("negative degree");
    ambient_ = tuples_.size();

    // cocycles: kernel of the d_degree functional rows
    TupleSpace rows(group_, degree + 1);
    FpRowEchelon ech(ambient_, p);
    const int outer = signUnit(degree + 1, p);
    std::map<long, int> entries;
    std::vector<int> face;
    std::vector<std::pair<long, int>> sparse;
    for (long r = 0; r < rows.size(); ++r) {
        std::vector<int> t = rows.decode(r);
        entries.clear();
        face.assign(t.begin() + 1, t.end());
        entries[tuples_.encode(face)] += outer;
        for (int i = 1; i <= degree; ++i) {
            int prod = group_.mul(t[i - 1], t[i]);
            if (prod == group_.identity()) continue;
            face.clear();
            face.insert(face.end(), t.begin(), t.begin() + (i - 1));
            face.push_back(prod);
            face.insert(face.end(), t.begin() + (i + 1), t.end());
            entries[tuples_.encode(face)] += outer * signUnit(i, p) % p;
        }
        face.assign(t.begin(), t.end() - 1);
        entries[tuples_.encode(face)] += 1;  // outer * sign(degree+1)
        sparse.clear();
        for (const auto& [col, c] : entries) {
            int v = (c % p + p) % p;
            if (v != 0) sparse.emplace_back(col, v);
        }
        if (!sparse.empty()) ech.insertSparse(sparse);
    }
    cocycleDim_ = ech.nullity();

    // coboundaries: images of the degree-1-lower basis cochains
    std::vector<FpDenseVec> img;
    if (degree >= 1) img = coboundaryImages(group_, p, degree);
    FpSubspaceBasis boundaries = echelonise(std::move(img), ambient_, p);
    coboundaryDim_ = static_cast<long>(boundaries.vectors.size());
    quotient_ = std::make_unique<QuotientSpace>(std::move(boundaries));

    const long target = cocycleDim_ - coboundaryDim_;
    if (target < 0) throw CohomologyError("coboundary space escaped the cocycles");
    if (target > 0) {
        for (long c : ech.freeColumns()) {
            if (quotient_->tryAddComplement(ech.kernelVector(c)) >= 0 &&
                quotient_->dim() == target)
                break;
        }
    }
    if (quotient_->dim() != target)
        throw CohomologyError("kernel enumeration missed the expected dimension");
    for (int i = 0; i < quotient_->dim(); ++i)
        reps_.push_back(Cochain::fromDense(group_, p, degree,
                                           quotient_->representative(i), tuples_));
}

FpVec CohomologySpace::coordinatesOf(const Cochain& z) const {
    if (z.degree() != degree_ || z.modulus() != p_)
        throw CohomologyError("cochain does not match this space");
    try {
        return quotient_->coordinates(z.toDense(tuples_));
    } catch (const LinalgError&) {
        throw CohomologyError("class_of: the cochain is not a cocycle");
    }
}

bool CohomologySpace::isCoboundaryCochain(const Cochain& z) const {
    FpVec c = coordinatesOf(z);
    return std::all_of(c.begin(), c.end(), [](uint16_t v) { return v == 0; });
}

Cochain CohomologySpace::combination(const FpVec& coords) const {
    if (static_cast<int>(coords.size()) != dim())
        throw CohomologyError("coordinate length mismatch");
    Cochain out(group_, p_, degree_);
    for (int i = 0; i < dim(); ++i)
        if (coords[i] != 0) out = out + reps_[i].scaled(coords[i]);
    return out;
}

bool CohomologyClass::isZero() const {
    return std::all_of(coords.begin(), coords.end(),
                       [](uint16_t v) { return v == 0; });
}

CohomologyClass CohomologyClass::operator+(const CohomologyClass& o) const {
    if (space.get() != o.space.get())
        throw CohomologyError("class sum across different spaces");
    CohomologyClass r = *this;
    for (size_t i = 0; i < coords.size(); ++i)
        r.coords[i] = static_cast<uint16_t>((coords[i] + o.coords[i]) % space->modulus());
    return r;
}

CohomologyClass CohomologyClass::scaled(int c) const {
    const int p = space->modulus();
    c = (c % p + p) % p;
    CohomologyClass r = *this;
    for (auto& v : r.coords) v = static_cast<uint16_t>(v * c % p);
    return r;
}

bool CohomologyClass::operator==(const CohomologyClass& o) const {
    return space.get() == o.space.get() && coords == o.coords;
}

CohomologyContext::CohomologyContext() : budget_(1000000) {
    if (const char* e = std::getenv("BVH_WORK_BUDGET")) {
        char* end = nullptr;
        long v = std::strtol(e, &end, 10);
        if (end && *end == '\0' && v > 0) budget_ = v;
    }
}

std::shared_ptr<const CohomologySpace> CohomologyContext::space(const Group& G,
                                                                int p, int degree) {
    long cost = 1;
    for (int i = 0; i <= degree; ++i) cost *= G.order() - 1;
    const long limit = heavy_ ? budget_ * 1000 : budget_;
    if (cost > limit) {
        std::ostringstream os;
        os << "work budget exceeded for H^" << degree << "(" << G.name()
           << "): needs " << cost << " coordinates ("
           << (G.order() - 1) << "^" << (degree + 1) << "), budget " << limit
           << "; enable --heavy or raise BVH_WORK_BUDGET";
        throw CohomologyError(os.str());
    }
    std::ostringstream key;
    key << G.name() << "#" << G.order() << "#" << p << "#" << degree << "#"
        << G.tableHash();
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(key.str());
    if (it != memo_.end()) return it->second;
    auto sp = std::make_shared<const CohomologySpace>(G, p, degree);
    memo_[key.str()] = sp;
    return sp;
}

CohomologyClass CohomologyContext::classOf(const Cochain& z) {
    auto sp = space(z.group(), z.modulus(), z.degree());
    return CohomologyClass{sp, sp->coordinatesOf(z)};
}

CohomologyClass CohomologyContext::zeroClass(const Group& G, int p, int degree) {
    auto sp = space(G, p, degree);
    return CohomologyClass{sp, FpVec(sp->dim(), 0)};
}

std::vector<Cochain> h1Homs(const Group& G, int p) {
    // N = [G,G] * G^p; Hom(G, F_p) = Hom(G/N, F_p) with G/N elementary abelian
    std::vector<int> gens;
    for (int a = 0; a < G.order(); ++a) {
        gens.push_back(G.power(a, p));
        for (int b = 0; b < G.order(); ++b)
            gens.push_back(G.mul(G.mul(a, b), G.inv(G.mul(b, a))));
    }
    Subgroup N = subgroupGenerated(G, gens);
    QuotientGroup Q = quotientGroup(G, N);
    const Group& A = Q.group;

    // greedy basis of the elementary abelian quotient
    std::vector<int> basis;
    std::set<int> span = {A.identity()};
    for (int q = 0; q < A.order(); ++q) {
        if (span.count(q)) continue;
        basis.push_back(q);
        std::set<int> next;
        for (int s : span)
            for (int k = 0; k < p; ++k) next.insert(A.mul(s, A.power(q, k)));
        span = std::move(next);
    }
    const int r = static_cast<int>(basis.size());

    // exponent coordinates of every quotient element
    std::vector<FpVec> coordOf(A.order());
    std::vector<int> expo(r, 0);
    for (long t = 0; t < static_cast<long>(A.order()); ++t) {
        long rem = t;
        int elt = A.identity();
        for (int i = 0; i < r; ++i) {
            expo[i] = static_cast<int>(rem % p);
            rem /= p;
            elt = A.mul(elt, A.power(basis[i], expo[i]));
        }
        coordOf[elt] = FpVec(expo.begin(), expo.begin() + r);
    }

    std::vector<Cochain> homs;
    for (int i = 0; i < r; ++i) {
        std::vector<int> values(G.order());
        for (int a = 0; a < G.order(); ++a)
            values[a] = coordOf[Q.projection[a]][i];
        homs.push_back(homCochain(G, p, values));
    }
    return homs;
}

namespace {

int elementByLabel(const Group& G, const std::string& lab) {
    for (int a = 0; a < G.order(); ++a)
        if (G.label(a) == lab) return a;
    throw CohomologyError(G.name() + ": no element labelled '" + lab + "'");
}

// degree-1 classes dual to the two listed generators
std::map<std::string, CohomologyClass> dualPair(CohomologyContext& ctx,
                                                const Group& G, int p) {
    const int g = elementByLabel(G, "g");
    const int h = elementByLabel(G, "h");
    auto sp = ctx.space(G, p, 1);
    if (sp->dim() != 2) throw CohomologyError(G.name() + ": expected 2-dim H^1");
    // invert the 2x2 evaluation matrix at (g, h)
    int a = sp->representative(0).value({g}), b = sp->representative(1).value({g});
    int c = sp->representative(0).value({h}), d = sp->representative(1).value({h});
    int det = ((a * d - b * c) % p + p) % p;
    if (det == 0) throw CohomologyError(G.name() + ": generators not separated by H^1");
    int inv = fpInv(det, p);
    auto cls = [&](int u, int v) {
        FpVec co = {static_cast<uint16_t>((u % p + p) % p),
                    static_cast<uint16_t>((v % p + p) % p)};
        return CohomologyClass{sp, co};
    };
    std::map<std::string, CohomologyClass> out;
    out.emplace("x", cls(d * inv, -c * inv));   // x(g)=1, x(h)=0
    out.emplace("y", cls(-b * inv, a * inv));   // y(g)=0, y(h)=1
    return out;
}

}  // namespace

std::map<std::string, CohomologyClass> identifyNamedClasses(
    CohomologyContext& ctx, const Group& G, int p) {
    const std::string name = G.name();
    std::map<std::string, CohomologyClass> out;

    if (name.rfind("cyclic:", 0) == 0) {
        const int n = G.order();
        // y: the hom with y(g) = 1
        std::vector<int> values(n);
        for (int i = 0; i < n; ++i) values[i] = i % p;
        if (n % p != 0) throw CohomologyError("cyclic group order prime to p");
        out.emplace("y", ctx.classOf(homCochain(G, p, values)));
        // x: the degree-2 carry cocycle of 0 -> Z/n -> Z/n^2 -> Z/n -> 0
        Cochain carry(G, p, 2);
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j)
                if (i + j >= n) carry.setValue({i, j}, 1);
        out.emplace("x", ctx.classOf(carry));
        return out;
    }
    if (name == "dihedral:8" || name.rfind("quaternion:", 0) == 0)
        return dualPair(ctx, G, p);
    if (name == "semidihedral:16") {
        if (p != 2) throw CohomologyError("semidihedral named classes need p = 2");
        auto sp = ctx.space(G, 2, 1);
        if (sp->dim() != 2) throw CohomologyError("semidihedral: expected 2-dim H^1");
        std::vector<CohomologyClass> nonzero;
        for (uint16_t u = 0; u < 2; ++u)
            for (uint16_t v = 0; v < 2; ++v)
                if (u || v) nonzero.push_back(CohomologyClass{sp, FpVec{u, v}});
        // x: the unique nonzero degree-1 class with x^3 = 0
        std::vector<int> cubeZero;
        for (size_t i = 0; i < nonzero.size(); ++i) {
            Cochain z = nonzero[i].representative();
            if (ctx.classOf(cup(cup(z, z), z)).isZero()) cubeZero.push_back(i);
        }
        if (cubeZero.size() != 1)
            throw CohomologyError("semidihedral: nilpotent degree-1 class not unique");
        CohomologyClass x = nonzero[cubeZero[0]];
        // y: the unique class outside {0, x} with x.y = 0
        Cochain xr = x.representative();
        std::vector<int> annih;
        for (size_t i = 0; i < nonzero.size(); ++i) {
            if (static_cast<int>(i) == cubeZero[0]) continue;
            if (ctx.classOf(cup(xr, nonzero[i].representative())).isZero())
                annih.push_back(i);
        }
        if (annih.size() != 1)
            throw CohomologyError("semidihedral: annihilator class not unique");
        out.emplace("x", x);
        out.emplace("y", nonzero[annih[0]]);
        return out;
    }
    throw CohomologyError("no named classes for " + name);
}

}  // namespace bvh
