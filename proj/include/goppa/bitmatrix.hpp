#pragma once

// Bit-packed vectors and matrices over GF(2). Rows are stored in 64-bit
// words; unused high bits in the last word stay zero so whole-word
// comparison and popcount are valid.

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace goppa {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits)
        : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool get(std::size_t i) const {
        check_index(i);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool v) {
        check_index(i);
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            w_[i >> 6] |= mask;
        else
            w_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) {
        check_index(i);
        w_[i >> 6] ^= std::uint64_t{1} << (i & 63);
    }

    int weight() const {
        int s = 0;
        for (std::uint64_t x : w_) s += std::popcount(x);
        return s;
    }

    bool is_zero() const {
        for (std::uint64_t x : w_)
            if (x) return false;
        return true;
    }

    BitVec& operator^=(const BitVec& o) {
        if (o.nbits_ != nbits_)
            throw std::invalid_argument("bitvec: size mismatch in xor");
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }

    void xor_words(std::span<const std::uint64_t> words) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= words[i];
    }

    std::span<const std::uint64_t> words() const { return w_; }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < nbits_; ++i)
            if (get(i)) s.push_back(i);
        return s;
    }

    std::string to_string() const {
        std::string s(nbits_, '0');
        for (std::size_t i = 0; i < nbits_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    bool operator==(const BitVec&) const = default;

private:
    void check_index(std::size_t i) const {
        if (i >= nbits_) throw std::out_of_range("bitvec: index out of range");
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + 63) / 64),
          w_(rows * stride_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        check(r, c);
        return (w_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u;
    }

    void set(std::size_t r, std::size_t c, bool v) {
        check(r, c);
        std::uint64_t mask = std::uint64_t{1} << (c & 63);
        if (v)
            w_[r * stride_ + (c >> 6)] |= mask;
        else
            w_[r * stride_ + (c >> 6)] &= ~mask;
    }

    std::span<const std::uint64_t> row_words(std::size_t r) const {
        return {w_.data() + r * stride_, stride_};
    }

    BitVec row(std::size_t r) const {
        BitVec v(cols_);
        v.xor_words(row_words(r));
        return v;
    }

    void set_row(std::size_t r, const BitVec& v) {
        if (v.size() != cols_)
            throw std::invalid_argument("bitmatrix: row size mismatch");
        auto ws = v.words();
        for (std::size_t i = 0; i < stride_; ++i) w_[r * stride_ + i] = ws[i];
    }

    void append_row(const BitVec& v) {
        if (cols_ == 0 && rows_ == 0) {
            cols_ = v.size();
            stride_ = (cols_ + 63) / 64;
        }
        if (v.size() != cols_)
            throw std::invalid_argument("bitmatrix: row size mismatch");
        w_.resize((rows_ + 1) * stride_, 0);
        ++rows_;
        set_row(rows_ - 1, v);
    }

    void xor_row(std::size_t dst, std::size_t src) {
        for (std::size_t i = 0; i < stride_; ++i)
            w_[dst * stride_ + i] ^= w_[src * stride_ + i];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < stride_; ++i)
            std::swap(w_[a * stride_ + i], w_[b * stride_ + i]);
    }

    void truncate_rows(std::size_t n) {
        if (n > rows_) throw std::invalid_argument("bitmatrix: bad truncation");
        rows_ = n;
        w_.resize(rows_ * stride_);
    }

    std::string to_text() const {
        std::string s;
        s.reserve(rows_ * (cols_ + 1));
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c)
                s.push_back(get(r, c) ? '1' : '0');
            s.push_back('\n');
        }
        return s;
    }

    bool operator==(const BitMatrix&) const = default;

private:
    void check(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_)
            throw std::out_of_range("bitmatrix: index out of range");
    }

    std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
    std::vector<std::uint64_t> w_;
};

// Reduced row echelon form with zero rows dropped: a canonical label for the
// row space, so row spaces compare by matrix equality.
inline BitMatrix rref(BitMatrix M) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
        std::size_t p = r;
        while (p < M.rows() && !M.get(p, c)) ++p;
        if (p == M.rows()) continue;
        M.swap_rows(r, p);
        for (std::size_t i = 0; i < M.rows(); ++i)
            if (i != r && M.get(i, c)) M.xor_row(i, r);
        ++r;
    }
    M.truncate_rows(r);
    return M;
}

inline std::size_t rank(const BitMatrix& M) { return rref(M).rows(); }

inline bool row_space_equal(const BitMatrix& A, const BitMatrix& B) {
    if (A.cols() != B.cols())
        throw std::invalid_argument("row_space_equal: column count mismatch");
    return rref(A) == rref(B);
}

// Reduce v against an already-reduced matrix; v lies in the row space iff
// the residue is zero.
inline bool in_row_space(const BitMatrix& reduced, const BitVec& v) {
    if (v.size() != reduced.cols())
        throw std::invalid_argument("in_row_space: size mismatch");
    BitVec r = v;
    for (std::size_t i = 0; i < reduced.rows(); ++i) {
        std::size_t pivot = 0;
        while (pivot < reduced.cols() && !reduced.get(i, pivot)) ++pivot;
        if (pivot < reduced.cols() && r.get(pivot))
            r.xor_words(reduced.row_words(i));
    }
    return r.is_zero();
}

// Basis of {v : M v^T = 0}, one row per free column, ordered by free column.
inline BitMatrix nullspace_basis(const BitMatrix& M) {
    BitMatrix R = rref(M);
    const std::size_t n = M.cols();
    std::vector<std::size_t> pivot_col(R.rows());
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < R.rows(); ++i) {
        std::size_t c = 0;
        while (!R.get(i, c)) ++c;
        pivot_col[i] = c;
        is_pivot[c] = true;
    }
    BitMatrix basis(n - R.rows(), n);
    std::size_t out = 0;
    for (std::size_t fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        BitVec v(n);
        v.set(fc, true);
        for (std::size_t i = 0; i < R.rows(); ++i)
            if (R.get(i, fc)) v.set(pivot_col[i], true);
        basis.set_row(out++, v);
    }
    return basis;
}

inline bool mul_vec_is_zero(const BitMatrix& M, const BitVec& v) {
    if (v.size() != M.cols())
        throw std::invalid_argument("mul_vec_is_zero: size mismatch");
    auto vw = v.words();
    for (std::size_t r = 0; r < M.rows(); ++r) {
        auto rw = M.row_words(r);
        int parity = 0;
        for (std::size_t i = 0; i < rw.size(); ++i)
            parity ^= std::popcount(rw[i] & vw[i]) & 1;
        if (parity) return false;
    }
    return true;
}

// Column gather: result column i is M's column cols[i].
inline BitMatrix gather_columns(const BitMatrix& M,
                                const std::vector<std::size_t>& cols) {
    BitMatrix R(M.rows(), cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (cols[i] >= M.cols())
            throw std::out_of_range("gather_columns: column out of range");
        for (std::size_t r = 0; r < M.rows(); ++r)
            if (M.get(r, cols[i])) R.set(r, i, true);
    }
    return R;
}

struct cap_exceeded_error : std::runtime_error {
    cap_exceeded_error(std::size_t k, int cap)
        : std::runtime_error("enumeration: dimension " + std::to_string(k) +
                             " exceeds cap " + std::to_string(cap)) {}
};

// Visits all 2^k - 1 nonzero codewords of the row space in Gray-code order,
// one row xor per step. The visitor receives (word, weight).
template <class Visitor>
void enumerate_codewords(const BitMatrix& gen, Visitor&& visit, int cap = 28) {
    const std::size_t k = gen.rows();
    if (k > static_cast<std::size_t>(cap)) throw cap_exceeded_error(k, cap);
    BitVec w(gen.cols());
    const std::uint64_t total =
        k == 0 ? 0 : (std::uint64_t{1} << k) - 1;
    for (std::uint64_t idx = 1; idx <= total; ++idx) {
        int j = std::countr_zero(idx);
        w.xor_words(gen.row_words(static_cast<std::size_t>(j)));
        visit(static_cast<const BitVec&>(w), w.weight());
    }
}

// Reference enumeration: explicit coefficient masks, fresh xor per word.
template <class Visitor>
void enumerate_codewords_naive(const BitMatrix& gen, Visitor&& visit,
                               int cap = 28) {
    const std::size_t k = gen.rows();
    if (k > static_cast<std::size_t>(cap)) throw cap_exceeded_error(k, cap);
    const std::uint64_t total =
        k == 0 ? 0 : (std::uint64_t{1} << k) - 1;
    for (std::uint64_t mask = 1; mask <= total; ++mask) {
        BitVec w(gen.cols());
        for (std::size_t j = 0; j < k; ++j)
            if ((mask >> j) & 1) w.xor_words(gen.row_words(j));
        visit(static_cast<const BitVec&>(w), w.weight());
    }
}

}  // namespace goppa
