#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace bvh {

struct LinalgError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool isPrime(int p);
int fpInv(int a, int p);
inline int fpNeg(int a, int p) { return a == 0 ? 0 : p - a; }

// Dense interchange vector over F_p, entries reduced in [0, p).
using FpVec = std::vector<uint16_t>;

// Dense F_p vector with a packed-bit fast path for p = 2. The bar
// coboundary matrices over F_2 get large enough (50625 columns for the
// order-16 groups in degree 4) that bit packing is what keeps row
// elimination in memory.
class FpDenseVec {
public:
    FpDenseVec() = default;
    FpDenseVec(long n, int p);
    static FpDenseVec fromVec(const FpVec& v, int p);

    long size() const { return n_; }
    int modulus() const { return p_; }

    int get(long i) const;
    void set(long i, int v);
    void addAt(long i, int v);  // entry += v mod p

    // this += c * other, scanning from word/index `from` onward
    void axpy(const FpDenseVec& other, int c, long from = 0);
    void scale(int c);

    // first nonzero index >= from, or -1
    long leading(long from = 0) const;
    bool isZero() const;
    FpVec toVec() const;

    bool operator==(const FpDenseVec& o) const;

private:
    long n_ = 0;
    int p_ = 2;
    std::vector<uint64_t> bits_;   // p == 2
    std::vector<uint16_t> vals_;   // p > 2
};

// Sparse matrix over F_p as coordinate triplets.
struct FpMatrix {
    long rows = 0;
    long cols = 0;
    int modulus = 2;
    struct Entry {
        long row;
        long col;
        uint16_t value;
    };
    std::vector<Entry> entries;

    void add(long r, long c, long v);
    void finalize();  // sort by (row, col), merge, drop zeros
};

// Incremental row echelon form. Rows are inserted one at a time and
// reduced against the pivot rows found so far; pivot rows are kept with
// unit leading entries. Kernel vectors are produced on demand per free
// column by back substitution, so a nearly-full-rank matrix never forces
// materialising its whole kernel.
class FpRowEchelon {
public:
    FpRowEchelon(long cols, int p);

    // returns the pivot column if the row was independent, -1 otherwise
    long insert(FpDenseVec row);
    long insertSparse(const std::vector<std::pair<long, int>>& entries);

    long rank() const { return static_cast<long>(rows_.size()); }
    long cols() const { return cols_; }
    long nullity() const { return cols_ - rank(); }
    bool isPivot(long col) const { return pivotRow_.count(col) > 0; }
    std::vector<long> freeColumns() const;

    // kernel vector with value 1 at `freeCol` and zeros at the other
    // free columns
    FpDenseVec kernelVector(long freeCol) const;

    // residue of v after greedy reduction against the pivot rows
    FpDenseVec reduce(FpDenseVec v) const;

private:
    long cols_;
    int p_;
    std::vector<FpDenseVec> rows_;
    std::vector<long> pivots_;          // pivot col of rows_[i]
    std::map<long, size_t> pivotRow_;   // pivot col -> row index
};

// Row-reduced basis of a subspace of F_p^ambient (echelon form with unit
// pivots, strictly increasing pivot columns after sorting).
struct FpSubspaceBasis {
    long ambient = 0;
    int modulus = 2;
    std::vector<FpDenseVec> vectors;
    std::vector<long> pivots;

    int dim() const { return static_cast<int>(vectors.size()); }
    bool contains(const FpDenseVec& v) const;
};

FpSubspaceBasis echelonise(const std::vector<FpDenseVec>& rows, long ambient, int p);

struct RankKernelImage {
    long rank = 0;
    FpSubspaceBasis kernel;  // subspace of F_p^cols (full basis)
    FpSubspaceBasis image;   // subspace of F_p^rows (echelonised columns)
};
RankKernelImage rankKernelImage(const FpMatrix& M);

struct SpanSolution {
    bool inSpan = false;
    FpVec coords;  // length B.dim()
};
SpanSolution solveInSpan(const FpSubspaceBasis& B, const FpDenseVec& v);

// Quotient Z/B with a fixed complement. Built from the boundary basis
// plus explicit complement representatives (each independent of B and of
// the earlier representatives). Two vectors of Z get equal coordinates
// iff their difference lies in B.
class QuotientSpace {
public:
    QuotientSpace(FpSubspaceBasis boundaries);

    // Returns the complement index if v extended the space, -1 if v was
    // already in the current span.
    int tryAddComplement(const FpDenseVec& representative);

    int dim() const { return static_cast<int>(reps_.size()); }
    const FpDenseVec& representative(int i) const { return reps_[i]; }

    // Coordinates of v in the complement basis; throws LinalgError if v
    // is outside B + span(complement).
    FpVec coordinates(const FpDenseVec& v) const;

private:
    int p_;
    long ambient_;
    std::vector<FpDenseVec> echelon_;
    std::vector<long> pivots_;
    std::map<long, size_t> pivotRow_;
    std::vector<int> tag_;        // -1 for boundary rows, else complement index
    std::vector<FpDenseVec> reps_;
};

// Independent dense-elimination oracle (test substrate; no sharing with
// the sparse path).
long denseRankOracle(std::vector<FpVec> rows, int p);

}  // namespace bvh
