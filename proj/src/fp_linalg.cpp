#include "bvh/fp_linalg.hpp"

#include <algorithm>
#include <bit>

namespace bvh {

bool isPrime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int fpInv(int a, int p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw LinalgError("fpInv: zero has no inverse");
    // p is tiny here; scan
    for (int x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    throw LinalgError("fpInv: modulus not prime");
}

FpDenseVec::FpDenseVec(long n, int p) : n_(n), p_(p) {
    if (!isPrime(p)) throw LinalgError("FpDenseVec: modulus not prime");
    if (p == 2)
        bits_.assign((n + 63) / 64, 0);
    else
        vals_.assign(n, 0);
}

FpDenseVec FpDenseVec::fromVec(const FpVec& v, int p) {
    FpDenseVec out(static_cast<long>(v.size()), p);
    for (long i = 0; i < out.n_; ++i)
        if (v[i] % p) out.set(i, v[i] % p);
    return out;
}

int FpDenseVec::get(long i) const {
    if (p_ == 2) return static_cast<int>((bits_[i >> 6] >> (i & 63)) & 1);
    return vals_[i];
}

void FpDenseVec::set(long i, int v) {
    v %= p_;
    if (v < 0) v += p_;
    if (p_ == 2) {
        const uint64_t mask = uint64_t(1) << (i & 63);
        if (v)
            bits_[i >> 6] |= mask;
        else
            bits_[i >> 6] &= ~mask;
    } else {
        vals_[i] = static_cast<uint16_t>(v);
    }
}

void FpDenseVec::addAt(long i, int v) { set(i, get(i) + v % p_ + p_); }

void FpDenseVec::axpy(const FpDenseVec& other, int c, long from) {
    c %= p_;
    if (c < 0) c += p_;
    if (c == 0) return;
    if (p_ == 2) {
        const size_t w0 = static_cast<size_t>(from >> 6);
        for (size_t w = w0; w < bits_.size(); ++w) bits_[w] ^= other.bits_[w];
    } else {
        for (long i = from; i < n_; ++i)
            vals_[i] = static_cast<uint16_t>((vals_[i] + c * other.vals_[i]) % p_);
    }
}

void FpDenseVec::scale(int c) {
    c %= p_;
    if (c < 0) c += p_;
    if (p_ == 2) {
        if (c == 0) std::fill(bits_.begin(), bits_.end(), 0);
        return;
    }
    for (auto& v : vals_) v = static_cast<uint16_t>(v * c % p_);
}

long FpDenseVec::leading(long from) const {
    if (p_ == 2) {
        size_t w = static_cast<size_t>(from >> 6);
        if (w >= bits_.size()) return -1;
        uint64_t word = bits_[w] & (~uint64_t(0) << (from & 63));
        while (true) {
            if (word) {
                long idx = static_cast<long>(w) * 64 + std::countr_zero(word);
                return idx < n_ ? idx : -1;
            }
            if (++w >= bits_.size()) return -1;
            word = bits_[w];
        }
    }
    for (long i = from; i < n_; ++i)
        if (vals_[i]) return i;
    return -1;
}

bool FpDenseVec::isZero() const { return leading(0) < 0; }

FpVec FpDenseVec::toVec() const {
    FpVec out(n_, 0);
    for (long i = 0; i < n_; ++i) out[i] = static_cast<uint16_t>(get(i));
    return out;
}

bool FpDenseVec::operator==(const FpDenseVec& o) const {
    return n_ == o.n_ && p_ == o.p_ && bits_ == o.bits_ && vals_ == o.vals_;
}

void FpMatrix::add(long r, long c, long v) {
    if (r < 0 || r >= rows || c < 0 || c >= cols)
        throw LinalgError("FpMatrix: index out of range");
    long red = v % modulus;
    if (red < 0) red += modulus;
    if (red) entries.push_back({r, c, static_cast<uint16_t>(red)});
}

void FpMatrix::finalize() {
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    std::vector<Entry> merged;
    for (const auto& e : entries) {
        if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col) {
            merged.back().value = static_cast<uint16_t>((merged.back().value + e.value) % modulus);
        } else {
            merged.push_back(e);
        }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Entry& e) { return e.value == 0; }),
                 merged.end());
    entries = std::move(merged);
}

FpRowEchelon::FpRowEchelon(long cols, int p) : cols_(cols), p_(p) {
    if (!isPrime(p)) throw LinalgError("FpRowEchelon: modulus not prime");
}

long FpRowEchelon::insert(FpDenseVec row) {
    long lead = row.leading(0);
    while (lead >= 0) {
        auto it = pivotRow_.find(lead);
        if (it == pivotRow_.end()) break;
        row.axpy(rows_[it->second], fpNeg(row.get(lead), p_), lead);
        lead = row.leading(lead);
    }
    if (lead < 0) return -1;
    row.scale(fpInv(row.get(lead), p_));
    pivotRow_[lead] = rows_.size();
    rows_.push_back(std::move(row));
    pivots_.push_back(lead);
    return lead;
}

long FpRowEchelon::insertSparse(const std::vector<std::pair<long, int>>& entries) {
    FpDenseVec row(cols_, p_);
    for (auto [c, v] : entries) row.addAt(c, v);
    return insert(std::move(row));
}

std::vector<long> FpRowEchelon::freeColumns() const {
    std::vector<long> out;
    for (long c = 0; c < cols_; ++c)
        if (!pivotRow_.count(c)) out.push_back(c);
    return out;
}

FpDenseVec FpRowEchelon::kernelVector(long freeCol) const {
    if (pivotRow_.count(freeCol))
        throw LinalgError("kernelVector: column is a pivot");
    FpDenseVec x(cols_, p_);
    x.set(freeCol, 1);
    // back substitution in decreasing pivot order; pivotRow_ is an
    // ordered map, iterate in reverse
    for (auto it = pivotRow_.rbegin(); it != pivotRow_.rend(); ++it) {
        const long pc = it->first;
        const FpDenseVec& row = rows_[it->second];
        // x[pc] = -sum_{c>pc} row[c] * x[c]
        long acc = 0;
        long c = row.leading(pc + 1);
        while (c >= 0) {
            acc = (acc + static_cast<long>(row.get(c)) * x.get(c)) % p_;
            c = row.leading(c + 1);
        }
        x.set(pc, fpNeg(static_cast<int>(acc), p_));
    }
    return x;
}

FpDenseVec FpRowEchelon::reduce(FpDenseVec v) const {
    long lead = v.leading(0);
    while (lead >= 0) {
        auto it = pivotRow_.find(lead);
        if (it == pivotRow_.end()) {
            lead = v.leading(lead + 1);
            continue;
        }
        v.axpy(rows_[it->second], fpNeg(v.get(lead), p_), lead);
        lead = v.leading(lead);
    }
    return v;
}

FpSubspaceBasis echelonise(const std::vector<FpDenseVec>& rows, long ambient, int p) {
    FpSubspaceBasis out;
    out.ambient = ambient;
    out.modulus = p;
    struct Row {
        long pivot;
        FpDenseVec vec;
    };
    std::vector<Row> collected;
    {
        FpRowEchelon e2(ambient, p);
        for (const auto& r : rows) {
            FpDenseVec reduced = e2.reduce(r);
            long lead = reduced.leading(0);
            if (lead < 0) continue;
            reduced.scale(fpInv(reduced.get(lead), p));
            collected.push_back({lead, reduced});
            e2.insert(std::move(reduced));
        }
    }
    std::sort(collected.begin(), collected.end(),
              [](const Row& a, const Row& b) { return a.pivot < b.pivot; });
    for (auto& r : collected) {
        out.pivots.push_back(r.pivot);
        out.vectors.push_back(std::move(r.vec));
    }
    return out;
}

bool FpSubspaceBasis::contains(const FpDenseVec& v) const {
    FpDenseVec r = v;
    long lead = r.leading(0);
    size_t i = 0;
    while (lead >= 0) {
        while (i < pivots.size() && pivots[i] < lead) ++i;
        if (i >= pivots.size() || pivots[i] != lead) return false;
        r.axpy(vectors[i], fpNeg(r.get(lead), modulus), lead);
        lead = r.leading(lead);
    }
    return true;
}

RankKernelImage rankKernelImage(const FpMatrix& M) {
    if (!isPrime(M.modulus)) throw LinalgError("rankKernelImage: modulus not prime");
    RankKernelImage out;
    // row echelon for rank + kernel
    FpRowEchelon ech(M.cols, M.modulus);
    {
        size_t i = 0;
        while (i < M.entries.size()) {
            size_t j = i;
            std::vector<std::pair<long, int>> row;
            while (j < M.entries.size() && M.entries[j].row == M.entries[i].row) {
                row.emplace_back(M.entries[j].col, M.entries[j].value);
                ++j;
            }
            ech.insertSparse(row);
            i = j;
        }
    }
    out.rank = ech.rank();
    std::vector<FpDenseVec> kernelVecs;
    for (long f : ech.freeColumns()) kernelVecs.push_back(ech.kernelVector(f));
    out.kernel = echelonise(kernelVecs, M.cols, M.modulus);
    // image: echelonised columns
    std::vector<FpDenseVec> columns;
    {
        auto sorted = M.entries;
        std::sort(sorted.begin(), sorted.end(),
                  [](const FpMatrix::Entry& a, const FpMatrix::Entry& b) {
                      return a.col != b.col ? a.col < b.col : a.row < b.row;
                  });
        size_t i = 0;
        while (i < sorted.size()) {
            size_t j = i;
            FpDenseVec col(M.rows, M.modulus);
            while (j < sorted.size() && sorted[j].col == sorted[i].col) {
                col.addAt(sorted[j].row, sorted[j].value);
                ++j;
            }
            columns.push_back(std::move(col));
            i = j;
        }
    }
    out.image = echelonise(columns, M.rows, M.modulus);
    if (out.image.dim() != out.rank)
        throw LinalgError("rankKernelImage: row/column rank mismatch");
    return out;
}

SpanSolution solveInSpan(const FpSubspaceBasis& B, const FpDenseVec& v) {
    if (v.size() != B.ambient)
        throw LinalgError("solveInSpan: ambient dimension mismatch");
    SpanSolution out;
    out.coords.assign(B.dim(), 0);
    FpDenseVec r = v;
    long lead = r.leading(0);
    while (lead >= 0) {
        auto it = std::lower_bound(B.pivots.begin(), B.pivots.end(), lead);
        if (it == B.pivots.end() || *it != lead) return out;  // not in span
        const size_t i = static_cast<size_t>(it - B.pivots.begin());
        const int c = r.get(lead);
        out.coords[i] = static_cast<uint16_t>(c);
        r.axpy(B.vectors[i], fpNeg(c, B.modulus), lead);
        lead = r.leading(lead);
    }
    out.inSpan = true;
    return out;
}

QuotientSpace::QuotientSpace(FpSubspaceBasis boundaries)
    : p_(boundaries.modulus), ambient_(boundaries.ambient) {
    for (size_t i = 0; i < boundaries.vectors.size(); ++i) {
        pivotRow_[boundaries.pivots[i]] = echelon_.size();
        pivots_.push_back(boundaries.pivots[i]);
        echelon_.push_back(std::move(boundaries.vectors[i]));
        tag_.push_back(-1);
    }
}

int QuotientSpace::tryAddComplement(const FpDenseVec& representative) {
    FpDenseVec r = representative;
    long lead = r.leading(0);
    while (lead >= 0) {
        auto it = pivotRow_.find(lead);
        if (it == pivotRow_.end()) break;
        r.axpy(echelon_[it->second], fpNeg(r.get(lead), p_), lead);
        lead = r.leading(lead);
    }
    if (lead < 0) return -1;
    r.scale(fpInv(r.get(lead), p_));
    const int idx = static_cast<int>(reps_.size());
    pivotRow_[lead] = echelon_.size();
    pivots_.push_back(lead);
    // The stored class representative is the reduced row, not the raw
    // input: coordinates() reduces greedily against the echelon, so the
    // dual basis it computes is the one of the reduced rows.
    reps_.push_back(r);
    echelon_.push_back(std::move(r));
    tag_.push_back(idx);
    return idx;
}

FpVec QuotientSpace::coordinates(const FpDenseVec& v) const {
    if (v.size() != ambient_) throw LinalgError("coordinates: dimension mismatch");
    FpVec coords(reps_.size(), 0);
    FpDenseVec r = v;
    long lead = r.leading(0);
    while (lead >= 0) {
        auto it = pivotRow_.find(lead);
        if (it == pivotRow_.end())
            throw LinalgError("coordinates: vector not in the cocycle space");
        const size_t row = it->second;
        const int c = r.get(lead);
        if (tag_[row] >= 0)
            coords[tag_[row]] = static_cast<uint16_t>((coords[tag_[row]] + c) % p_);
        r.axpy(echelon_[row], fpNeg(c, p_), lead);
        lead = r.leading(lead);
    }
    return coords;
}

long denseRankOracle(std::vector<FpVec> rows, int p) {
    if (!isPrime(p)) throw LinalgError("denseRankOracle: modulus not prime");
    long rank = 0;
    if (rows.empty()) return 0;
    const size_t cols = rows[0].size();
    size_t pivotRow = 0;
    for (size_t c = 0; c < cols && pivotRow < rows.size(); ++c) {
        size_t sel = pivotRow;
        while (sel < rows.size() && rows[sel][c] % p == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[pivotRow]);
        const int inv = fpInv(rows[pivotRow][c], p);
        for (auto& x : rows[pivotRow]) x = static_cast<uint16_t>(x * inv % p);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == pivotRow || rows[r][c] % p == 0) continue;
            const int f = p - rows[r][c] % p;
            for (size_t j = 0; j < cols; ++j)
                rows[r][j] = static_cast<uint16_t>((rows[r][j] + f * rows[pivotRow][j]) % p);
        }
        ++pivotRow;
        ++rank;
    }
    return rank;
}

}  // namespace bvh
