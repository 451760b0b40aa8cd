#pragma once

// Bit-packed dense linear algebra over GF(2). Rows are packed into 64-bit
// words, row-major; bits past the column count are kept zero so word-level
// comparisons and popcounts are valid without masking.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstddef>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qldpc {

using word_t = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class BinVec {
public:
    BinVec() = default;
    explicit BinVec(std::size_t len) : len_(len), w_(words_for(len), 0) {}

    static BinVec unit(std::size_t len, std::size_t i) {
        BinVec v(len);
        v.set(i, true);
        return v;
    }

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const { return (w_[i / kWordBits] >> (i % kWordBits)) & 1u; }

    void set(std::size_t i, bool b) {
        word_t m = word_t{1} << (i % kWordBits);
        if (b) w_[i / kWordBits] |= m; else w_[i / kWordBits] &= ~m;
    }

    void flip(std::size_t i) { w_[i / kWordBits] ^= word_t{1} << (i % kWordBits); }

    void xor_with(const BinVec& o) {
        if (o.len_ != len_) throw DimensionError("BinVec length mismatch");
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    }

    std::size_t weight() const {
        std::size_t s = 0;
        for (word_t x : w_) s += static_cast<std::size_t>(std::popcount(x));
        return s;
    }

    bool any() const {
        for (word_t x : w_) if (x) return true;
        return false;
    }

    bool none() const { return !any(); }

    // index of lowest set bit; size() when zero
    std::size_t lowest_set() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(w_[k]));
        return len_;
    }

    const std::vector<word_t>& words() const { return w_; }
    std::vector<word_t>& words() { return w_; }

    friend bool operator==(const BinVec& a, const BinVec& b) {
        return a.len_ == b.len_ && a.w_ == b.w_;
    }

    // concatenation: this (low indices) followed by o
    BinVec concat(const BinVec& o) const {
        BinVec r(len_ + o.len_);
        for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k];
        for (std::size_t i = 0; i < o.len_; ++i)
            if (o.get(i)) r.set(len_ + i, true);
        return r;
    }

    BinVec subvec(std::size_t start, std::size_t len) const {
        BinVec r(len);
        for (std::size_t i = 0; i < len; ++i)
            if (get(start + i)) r.set(i, true);
        return r;
    }

private:
    std::size_t len_ = 0;
    std::vector<word_t> w_;
};

inline std::size_t or_weight(const BinVec& a, const BinVec& b) {
    std::size_t s = 0;
    for (std::size_t k = 0; k < a.words().size(); ++k)
        s += static_cast<std::size_t>(std::popcount(a.words()[k] | b.words()[k]));
    return s;
}

class BinMat {
public:
    BinMat() = default;
    BinMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_(words_for(cols)), w_(rows * stride_, 0) {}

    static BinMat identity(std::size_t n) {
        BinMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    static BinMat zero(std::size_t rows, std::size_t cols) { return BinMat(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t stride() const { return stride_; }

    bool get(std::size_t i, std::size_t j) const {
        return (w_[i * stride_ + j / kWordBits] >> (j % kWordBits)) & 1u;
    }

    void set(std::size_t i, std::size_t j, bool b) {
        word_t m = word_t{1} << (j % kWordBits);
        word_t& w = w_[i * stride_ + j / kWordBits];
        if (b) w |= m; else w &= ~m;
    }

    const word_t* row_ptr(std::size_t i) const { return w_.data() + i * stride_; }
    word_t* row_ptr(std::size_t i) { return w_.data() + i * stride_; }

    void xor_row_from(std::size_t dst, std::size_t src) {
        word_t* d = row_ptr(dst);
        const word_t* s = row_ptr(src);
        for (std::size_t k = 0; k < stride_; ++k) d[k] ^= s[k];
    }

    void xor_row_with(std::size_t dst, const BinVec& v) {
        word_t* d = row_ptr(dst);
        for (std::size_t k = 0; k < stride_; ++k) d[k] ^= v.words()[k];
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        word_t* a = row_ptr(i);
        word_t* b = row_ptr(j);
        for (std::size_t k = 0; k < stride_; ++k) std::swap(a[k], b[k]);
    }

    BinVec row(std::size_t i) const {
        BinVec v(cols_);
        const word_t* p = row_ptr(i);
        for (std::size_t k = 0; k < stride_; ++k) v.words()[k] = p[k];
        return v;
    }

    void set_row(std::size_t i, const BinVec& v) {
        if (v.size() != cols_) throw DimensionError("set_row length mismatch");
        word_t* p = row_ptr(i);
        for (std::size_t k = 0; k < stride_; ++k) p[k] = v.words()[k];
    }

    std::size_t row_weight(std::size_t i) const {
        std::size_t s = 0;
        const word_t* p = row_ptr(i);
        for (std::size_t k = 0; k < stride_; ++k) s += static_cast<std::size_t>(std::popcount(p[k]));
        return s;
    }

    bool row_is_zero(std::size_t i) const {
        const word_t* p = row_ptr(i);
        for (std::size_t k = 0; k < stride_; ++k) if (p[k]) return false;
        return true;
    }

    bool is_zero() const {
        for (word_t x : w_) if (x) return false;
        return true;
    }

    friend bool operator==(const BinMat& a, const BinMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.w_ == b.w_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
    std::vector<word_t> w_;
};

inline BinMat add(const BinMat& a, const BinMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("add: shape mismatch");
    BinMat r = a;
    for (std::size_t i = 0; i < r.rows(); ++i) r.xor_row_with(i, b.row(i));
    return r;
}

inline BinMat mul(const BinMat& a, const BinMat& b) {
    if (a.cols() != b.rows()) throw DimensionError("mul: inner dimension mismatch");
    BinMat r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const word_t* ap = a.row_ptr(i);
        word_t* rp = r.row_ptr(i);
        for (std::size_t kw = 0; kw < a.stride(); ++kw) {
            word_t w = ap[kw];
            while (w) {
                std::size_t k = kw * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
                w &= w - 1;
                const word_t* bp = b.row_ptr(k);
                for (std::size_t t = 0; t < b.stride(); ++t) rp[t] ^= bp[t];
            }
        }
    }
    return r;
}

inline BinVec mat_vec(const BinMat& m, const BinVec& v) {
    if (m.cols() != v.size()) throw DimensionError("mat_vec: dimension mismatch");
    BinVec r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const word_t* p = m.row_ptr(i);
        word_t acc = 0;
        for (std::size_t k = 0; k < m.stride(); ++k) acc ^= p[k] & v.words()[k];
        if (std::popcount(acc) & 1) r.set(i, true);
    }
    return r;
}

inline BinMat transpose(const BinMat& m) {
    BinMat r(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const word_t* p = m.row_ptr(i);
        for (std::size_t kw = 0; kw < m.stride(); ++kw) {
            word_t w = p[kw];
            while (w) {
                std::size_t j = kw * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
                w &= w - 1;
                r.set(j, i, true);
            }
        }
    }
    return r;
}

inline BinMat kron(const BinMat& a, const BinMat& b) {
    BinMat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ia = 0; ia < a.rows(); ++ia)
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            if (!a.get(ia, ja)) continue;
            for (std::size_t ib = 0; ib < b.rows(); ++ib) {
                const word_t* bp = b.row_ptr(ib);
                std::size_t ri = ia * b.rows() + ib;
                std::size_t c0 = ja * b.cols();
                for (std::size_t kw = 0; kw < b.stride(); ++kw) {
                    word_t w = bp[kw];
                    while (w) {
                        std::size_t jb = kw * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
                        w &= w - 1;
                        r.set(ri, c0 + jb, true);
                    }
                }
            }
        }
    return r;
}

inline BinMat hstack(const BinMat& a, const BinMat& b) {
    if (a.rows() != b.rows()) throw DimensionError("hstack: row count mismatch");
    BinMat r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t kw = 0; kw < a.stride(); ++kw) {
            word_t w = a.row_ptr(i)[kw];
            while (w) {
                std::size_t j = kw * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
                w &= w - 1;
                r.set(i, j, true);
            }
        }
        for (std::size_t kw = 0; kw < b.stride(); ++kw) {
            word_t w = b.row_ptr(i)[kw];
            while (w) {
                std::size_t j = kw * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
                w &= w - 1;
                r.set(i, a.cols() + j, true);
            }
        }
    }
    return r;
}

inline BinMat vstack(const BinMat& a, const BinMat& b) {
    if (a.cols() != b.cols()) throw DimensionError("vstack: column count mismatch");
    BinMat r(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) r.set_row(i, a.row(i));
    for (std::size_t i = 0; i < b.rows(); ++i) r.set_row(a.rows() + i, b.row(i));
    return r;
}

// Row echelon machinery. Deterministic: leftmost pivot, topmost row.
struct Rref {
    BinMat mat;                      // reduced rows, zero rows dropped
    std::vector<std::size_t> pivots; // pivot column per kept row
};

inline Rref rref(const BinMat& m) {
    BinMat a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t sel = a.rows();
        for (std::size_t i = r; i < a.rows(); ++i)
            if (a.get(i, c)) { sel = i; break; }
        if (sel == a.rows()) continue;
        a.swap_rows(r, sel);
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (i != r && a.get(i, c)) a.xor_row_from(i, r);
        pivots.push_back(c);
        ++r;
    }
    BinMat out(pivots.size(), a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) out.set_row(i, a.row(i));
    return {std::move(out), std::move(pivots)};
}

inline std::size_t rank(const BinMat& m) { return rref(m).pivots.size(); }

// Basis of {v : m v = 0}, rows in reduced echelon form (identity on the free
// columns), deterministic.
inline BinMat kernel_basis(const BinMat& m) {
    Rref R = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : R.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    BinMat out(free_cols.size(), m.cols());
    for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
        std::size_t f = free_cols[fi];
        out.set(fi, f, true);
        for (std::size_t i = 0; i < R.pivots.size(); ++i)
            if (R.mat.get(i, f)) out.set(fi, R.pivots[i], true);
    }
    return out;
}

// Incremental echelon basis of a row space; supports O(rank) membership tests.
class RowBasis {
public:
    RowBasis() = default;
    explicit RowBasis(std::size_t cols) : cols_(cols) {}
    explicit RowBasis(const BinMat& m) : cols_(m.cols()) {
        for (std::size_t i = 0; i < m.rows(); ++i) insert(m.row(i));
    }

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }

    BinVec reduce(BinVec v) const {
        for (const auto& [p, row] : rows_) {
            if (v.get(p)) v.xor_with(row);
        }
        return v;
    }

    bool contains(const BinVec& v) const { return reduce(v).none(); }

    // returns false if v was already in the span
    bool insert(BinVec v) {
        v = reduce(std::move(v));
        std::size_t p = v.lowest_set();
        if (p == v.size()) return false;
        // keep existing rows reduced against the new one
        for (auto& [q, row] : rows_)
            if (row.get(p)) row.xor_with(v);
        auto it = std::lower_bound(rows_.begin(), rows_.end(), p,
                                   [](const auto& a, std::size_t b) { return a.first < b; });
        rows_.insert(it, {p, std::move(v)});
        return true;
    }

private:
    std::size_t cols_ = 0;
    std::vector<std::pair<std::size_t, BinVec>> rows_; // sorted by pivot
};

inline bool row_space_contains(const BinMat& m, const BinVec& v) {
    if (v.size() != m.cols()) throw DimensionError("row_space_contains: length mismatch");
    RowBasis b(m);
    return b.contains(v);
}

// Permutation matrices of the block-cyclic machinery. 0-based forms of the
// paper-style 1-based delta conditions; this is the single place where the
// index convention is fixed.
inline BinMat circshift_perm(std::size_t c, std::size_t i) {
    BinMat m(c, c);
    for (std::size_t k = 0; k < c; ++k) m.set(k, (k + i) % c, true);
    return m;
}

struct CommensurateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline BinMat skew_perm(std::size_t c, std::size_t chi) {
    if (std::gcd(c, chi) != 1)
        throw CommensurateError("skew_perm: c and chi must be coprime (commensurate case unanalyzed)");
    BinMat m(c, c);
    for (std::size_t k = 0; k < c; ++k) m.set(k, (k * chi) % c, true);
    return m;
}

// ---- text formats ----

// dense01: first line "rows cols", then one 0/1 line per row.
inline std::string write_dense01(const BinMat& m) {
    std::string s = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) s += m.get(i, j) ? '1' : '0';
        s += '\n';
    }
    return s;
}

inline BinMat read_dense01(std::istream& in) {
    std::size_t rows = 0, cols = 0;
    if (!(in >> rows >> cols)) throw std::runtime_error("dense01: bad header");
    BinMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        std::string line;
        if (!(in >> line) || line.size() != cols)
            throw std::runtime_error("dense01: bad row " + std::to_string(i));
        for (std::size_t j = 0; j < cols; ++j) {
            if (line[j] == '1') m.set(i, j, true);
            else if (line[j] != '0') throw std::runtime_error("dense01: bad character");
        }
    }
    return m;
}

inline BinMat read_dense01(const std::string& s) {
    std::istringstream in(s);
    return read_dense01(in);
}

// alist sparse format. Written padded; the reader accepts padded and unpadded forms.
inline std::string write_alist(const BinMat& m) {
    std::size_t n = m.cols(), r = m.rows();
    std::vector<std::vector<std::size_t>> col_idx(n), row_idx(r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (m.get(i, j)) { col_idx[j].push_back(i + 1); row_idx[i].push_back(j + 1); }
    std::size_t cmax = 0, rmax = 0;
    for (auto& v : col_idx) cmax = std::max(cmax, v.size());
    for (auto& v : row_idx) rmax = std::max(rmax, v.size());
    std::ostringstream out;
    out << n << " " << r << "\n" << cmax << " " << rmax << "\n";
    for (std::size_t j = 0; j < n; ++j) out << col_idx[j].size() << (j + 1 < n ? " " : "\n");
    if (n == 0) out << "\n";
    for (std::size_t i = 0; i < r; ++i) out << row_idx[i].size() << (i + 1 < r ? " " : "\n");
    if (r == 0) out << "\n";
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < cmax; ++k)
            out << (k < col_idx[j].size() ? col_idx[j][k] : 0) << (k + 1 < cmax ? " " : "");
        out << "\n";
    }
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < rmax; ++k)
            out << (k < row_idx[i].size() ? row_idx[i][k] : 0) << (k + 1 < rmax ? " " : "");
        out << "\n";
    }
    return out.str();
}

inline BinMat read_alist(std::istream& in) {
    std::size_t n = 0, r = 0, cmax = 0, rmax = 0;
    if (!(in >> n >> r >> cmax >> rmax)) throw std::runtime_error("alist: bad header");
    std::vector<std::size_t> cdeg(n), rdeg(r);
    for (auto& d : cdeg) in >> d;
    for (auto& d : rdeg) in >> d;
    if (!in) throw std::runtime_error("alist: bad degree lists");
    BinMat m(r, n);
    // Column lists fully determine the matrix. Pad zeros are
    // skipped wherever they appear, which also accepts unpadded files.
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t seen = 0;
        while (seen < cdeg[j]) {
            long long v;
            if (!(in >> v)) throw std::runtime_error("alist: truncated column list");
            if (v == 0) continue;
            if (v < 1 || static_cast<std::size_t>(v) > r) throw std::runtime_error("alist: row index out of range");
            m.set(static_cast<std::size_t>(v) - 1, j, true);
            ++seen;
        }
    }
    // Row lists are redundant; consume and cross-check the total count.
    std::size_t expect = 0, nonzero = 0;
    for (std::size_t i = 0; i < r; ++i) expect += rdeg[i];
    long long v;
    while (in >> v) {
        if (v == 0) continue;
        if (v < 1 || static_cast<std::size_t>(v) > n) throw std::runtime_error("alist: column index out of range");
        ++nonzero;
    }
    if (nonzero != 0 && nonzero != expect) throw std::runtime_error("alist: row list count mismatch");
    return m;
}

inline BinMat read_alist(const std::string& s) {
    std::istringstream in(s);
    return read_alist(in);
}

} // namespace qldpc
