#pragma once

// Separable binary Goppa codes: a location set L of field elements avoiding
// the roots of G, the parity matrix H[i][j] = L[j]^i / G(L[j]) over the
// field, and its GF(2) expansion (each field entry contributes m = 2l binary
// rows). A binary word is a codeword iff the sum of its 1/(x - L[j]) inverses
// vanishes mod G.

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include <goppa/bitmatrix.hpp>
#include <goppa/field.hpp>
#include <goppa/poly.hpp>

namespace goppa {

struct LocationSet {
    std::vector<Elem> elems;

    std::size_t size() const { return elems.size(); }

    int index_of(Elem e) const {
        auto it = std::find(elems.begin(), elems.end(), e);
        return it == elems.end() ? -1
                                 : static_cast<int>(it - elems.begin());
    }

    bool contains(Elem e) const { return index_of(e) >= 0; }
    bool has_zero() const { return contains(0); }

    LocationSet without_zero() const {
        if (!has_zero())
            throw std::invalid_argument("location set: 0 is not a member");
        LocationSet r;
        for (Elem e : elems)
            if (e != 0) r.elems.push_back(e);
        return r;
    }

    bool operator==(const LocationSet&) const = default;
};

// Canonical order: powers alpha^0, alpha^1, ... filtered by G(e) != 0, with
// the element 0 appended last when G(0) != 0.
inline LocationSet location_set(const Field& f, const Poly& G) {
    if (G.is_zero())
        throw std::invalid_argument("location set: zero polynomial");
    LocationSet L;
    for (std::uint32_t i = 0; i < f.order(); ++i) {
        Elem e = f.exp(i);
        if (poly_eval(f, G, e) != 0) L.elems.push_back(e);
    }
    if (poly_eval(f, G, 0) != 0) L.elems.push_back(0);
    return L;
}

// The m binary rows spanned by a row of field elements: row j holds bit j of
// every entry. Frobenius combinations of field rows act GF(2)-linearly on
// these expansions, which is what makes row-space checks meaningful.
inline BitMatrix binary_expansion(const Field& f,
                                  const std::vector<Elem>& row) {
    BitMatrix R(static_cast<std::size_t>(f.m()), row.size());
    for (std::size_t c = 0; c < row.size(); ++c)
        for (int j = 0; j < f.m(); ++j)
            if ((row[c] >> j) & 1) R.set(static_cast<std::size_t>(j), c, true);
    return R;
}

class Code {
public:
    Code(std::shared_ptr<const Field> f, Poly G, LocationSet L)
        : f_(std::move(f)), g_(std::move(G)), loc_(std::move(L)) {
        if (!f_) throw std::invalid_argument("code: null field");
        if (g_.degree() < 1)
            throw std::invalid_argument("code: polynomial degree must be >= 1");
        const std::size_t n = loc_.size();
        if (n == 0) throw std::invalid_argument("code: empty location set");
        ginv_.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            Elem ge = poly_eval(*f_, g_, loc_.elems[j]);
            if (ge == 0)
                throw std::invalid_argument(
                    "code: location is a root of the polynomial");
            ginv_[j] = f_->inv(ge);
        }
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t j2 = j + 1; j2 < n; ++j2)
                if (loc_.elems[j] == loc_.elems[j2])
                    throw std::invalid_argument("code: duplicate location");

        const std::size_t deg = static_cast<std::size_t>(g_.degree());
        hf_.assign(deg, std::vector<Elem>(n));
        for (std::size_t j = 0; j < n; ++j) {
            Elem p = ginv_[j];
            for (std::size_t i = 0; i < deg; ++i) {
                hf_[i][j] = p;
                p = f_->mul(p, loc_.elems[j]);
            }
        }
        const std::size_t m = static_cast<std::size_t>(f_->m());
        hb_ = BitMatrix(m * deg, n);
        for (std::size_t i = 0; i < deg; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t b = 0; b < m; ++b)
                    if ((hf_[i][j] >> b) & 1) hb_.set(m * i + b, j, true);
        rank_ = goppa::rank(hb_);
    }

    const Field& field() const { return *f_; }
    const std::shared_ptr<const Field>& field_ptr() const { return f_; }
    const Poly& g() const { return g_; }
    const LocationSet& locations() const { return loc_; }
    std::size_t n() const { return loc_.size(); }
    std::size_t k() const { return n() - rank_; }
    std::size_t h_rank() const { return rank_; }
    int design_distance() const { return 2 * g_.degree() + 1; }
    const std::vector<std::vector<Elem>>& h_field() const { return hf_; }
    const BitMatrix& h_bin() const { return hb_; }

    int zero_position() const { return loc_.index_of(0); }

    // Residue test: sum over the support of (G(x) - G(a)) / ((x - a) G(a)),
    // computed by synthetic division; the word is a codeword iff the residue
    // polynomial vanishes. Kept independent of h_bin on purpose so the two
    // routes cross-check each other.
    bool syndrome_is_zero(const BitVec& word) const {
        if (word.size() != n())
            throw std::invalid_argument("code: word length mismatch");
        const int deg = g_.degree();
        std::vector<Elem> res(static_cast<std::size_t>(deg), 0);
        for (std::size_t j = 0; j < n(); ++j) {
            if (!word.get(j)) continue;
            const Elem a = loc_.elems[j];
            const Elem w = ginv_[j];
            Elem c = g_.coeffs[static_cast<std::size_t>(deg)];
            res[static_cast<std::size_t>(deg - 1)] =
                Field::add(res[static_cast<std::size_t>(deg - 1)], f_->mul(c, w));
            for (int i = deg - 1; i >= 1; --i) {
                c = Field::add(g_.coeffs[static_cast<std::size_t>(i)],
                               f_->mul(a, c));
                res[static_cast<std::size_t>(i - 1)] = Field::add(
                    res[static_cast<std::size_t>(i - 1)], f_->mul(c, w));
            }
        }
        for (Elem r : res)
            if (r != 0) return false;
        return true;
    }

private:
    std::shared_ptr<const Field> f_;
    Poly g_;
    LocationSet loc_;
    std::vector<Elem> ginv_;  // 1 / G(L[j])
    std::vector<std::vector<Elem>> hf_;
    BitMatrix hb_;
    std::size_t rank_ = 0;
};

inline BitMatrix generator_matrix(const Code& c) {
    return nullspace_basis(c.h_bin());
}

// A plain binary linear code, used for views that are no longer Goppa codes
// by construction (shortened codes mostly).
struct LinearCode {
    std::size_t n = 0;
    BitMatrix gen;
    std::size_t k() const { return gen.rows(); }
};

// Shorten on the generator view: keep codewords that vanish at the position,
// then delete that coordinate. Expects a basis; k drops by one iff some
// basis word is nonzero there.
inline LinearCode shorten(const BitMatrix& gen, std::size_t pos) {
    if (pos >= gen.cols())
        throw std::out_of_range("shorten: position out of range");
    BitMatrix work = gen;
    int hit = -1;
    for (std::size_t r = 0; r < work.rows(); ++r) {
        if (!work.get(r, pos)) continue;
        if (hit < 0)
            hit = static_cast<int>(r);
        else
            work.xor_row(r, static_cast<std::size_t>(hit));
    }
    LinearCode out;
    out.n = gen.cols() - 1;
    out.gen = BitMatrix(work.rows() - (hit >= 0 ? 1 : 0), out.n);
    std::size_t or_ = 0;
    for (std::size_t r = 0; r < work.rows(); ++r) {
        if (static_cast<int>(r) == hit) continue;
        std::size_t oc = 0;
        for (std::size_t c = 0; c < work.cols(); ++c) {
            if (c == pos) continue;
            if (work.get(r, c)) out.gen.set(or_, oc, true);
            ++oc;
        }
        ++or_;
    }
    return out;
}

inline LinearCode shorten(const Code& c, std::size_t pos) {
    return shorten(generator_matrix(c), pos);
}

inline LinearCode shorten(const LinearCode& c, std::size_t pos) {
    return shorten(c.gen, pos);
}

enum class RedundantRow { inverse_weighted, all_ones };

// Membership of a derived parity row in the GF(2) row space of h_bin.
//   inverse_weighted: the field row 1 / (a * G(a)), needs 0 outside L;
//   all_ones: the binary row with 1 at every position whose location is
//   nonzero (and 0 at the location 0, when present).
inline bool verify_redundant_row(const Code& c, RedundantRow kind) {
    const BitMatrix reduced = rref(c.h_bin());
    if (kind == RedundantRow::inverse_weighted) {
        if (c.zero_position() >= 0)
            throw std::domain_error(
                "redundant row: inverse-weighted row needs a location set "
                "without 0");
        std::vector<Elem> row(c.n());
        for (std::size_t j = 0; j < c.n(); ++j) {
            Elem a = c.locations().elems[j];
            row[j] = c.field().inv(
                c.field().mul(a, poly_eval(c.field(), c.g(), a)));
        }
        BitMatrix rows = binary_expansion(c.field(), row);
        for (std::size_t r = 0; r < rows.rows(); ++r)
            if (!in_row_space(reduced, rows.row(r))) return false;
        return true;
    }
    BitVec ones(c.n());
    for (std::size_t j = 0; j < c.n(); ++j)
        if (c.locations().elems[j] != 0) ones.set(j, true);
    return in_row_space(reduced, ones);
}

}  // namespace goppa
