#pragma once

// Arithmetic in GF(2^m) with m = 2l, backed by log/antilog tables.
// Elements are bit masks over the polynomial basis, LSB = constant term,
// so the element x (a primitive root by construction) is the mask 2.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace goppa {

using Elem = std::uint16_t;

class Field {
public:
    // Default modulus per extension degree; l must lie in [2, 8].
    explicit Field(int l) : Field(l, default_modulus(2 * check_l(l))) {}

    // Custom modulus mask (bit m set, constant term 1). Rejected unless the
    // polynomial is primitive over GF(2).
    Field(int l, std::uint32_t modulus_mask)
        : l_(check_l(l)), m_(2 * l), mod_(modulus_mask),
          size_(1u << m_), order_(size_ - 1) {
        if ((mod_ >> m_) != 1u || (mod_ & 1u) == 0)
            throw std::invalid_argument("field: modulus mask must be a degree-" +
                                        std::to_string(m_) +
                                        " polynomial with constant term 1");
        if (!build_tables())
            throw std::invalid_argument("field: modulus mask " +
                                        std::to_string(mod_) +
                                        " is not primitive over GF(2)");
    }

    int l() const { return l_; }
    int m() const { return m_; }
    std::uint32_t modulus() const { return mod_; }
    std::uint32_t size() const { return size_; }    // 2^m
    std::uint32_t order() const { return order_; }  // 2^m - 1
    Elem alpha() const { return 2; }
    std::uint32_t t() const { return 1u << l_; }    // 2^l

    static Elem add(Elem a, Elem b) { return a ^ b; }

    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return antilog_[(static_cast<std::uint32_t>(log_[a]) + log_[b]) % order_];
    }

    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("field: division by zero");
        return antilog_[(order_ - log_[a]) % order_];
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    // Exponent is reduced mod 2^m - 1 for nonzero bases; pow(a, 0) = 1 needs
    // a != 0, and pow(0, e) = 0 only for e > 0.
    Elem pow(Elem a, long long e) const {
        if (a == 0) {
            if (e > 0) return 0;
            throw std::domain_error("field: pow of zero with non-positive exponent");
        }
        long long r = e % order_;
        if (r < 0) r += order_;
        return antilog_[static_cast<std::uint64_t>(log_[a]) * r % order_];
    }

    Elem sqr(Elem a) const { return mul(a, a); }

    // Membership in the subfield GF(2^l): fixed points of the l-fold Frobenius.
    bool in_subfield(Elem a) const {
        Elem r = a;
        for (int i = 0; i < l_; ++i) r = sqr(r);
        return r == a;
    }

    int log(Elem a) const {
        if (a == 0) throw std::domain_error("field: log of zero");
        return log_[a];
    }

    Elem exp(std::uint64_t i) const { return antilog_[i % order_]; }

    std::uint32_t element_order(Elem a) const {
        if (a == 0) throw std::domain_error("field: order of zero");
        return order_ / std::gcd<std::uint32_t>(log_[a], order_);
    }

    bool operator==(const Field& o) const { return l_ == o.l_ && mod_ == o.mod_; }

    // Lexicographically first primitive modulus for the given degree. The
    // small degrees are pinned; larger ones are found by scanning masks.
    static std::uint32_t default_modulus(int m) {
        switch (m) {
            case 4: return 0x13;   // x^4 + x + 1
            case 6: return 0x43;   // x^6 + x + 1
            case 8: return 0x11D;  // x^8 + x^4 + x^3 + x^2 + 1
            default: break;
        }
        for (std::uint32_t cand = (1u << m) + 1; cand < (2u << m); cand += 2) {
            Field probe(m, cand, internal_tag{});
            if (probe.build_tables()) return cand;
        }
        throw std::logic_error("field: no primitive modulus of degree " +
                               std::to_string(m));
    }

private:
    struct internal_tag {};

    // Raw constructor for the modulus scan: no validation, no tables.
    Field(int m, std::uint32_t modulus_mask, internal_tag)
        : l_(m / 2), m_(m), mod_(modulus_mask), size_(1u << m_),
          order_(size_ - 1) {}

    static int check_l(int l) {
        if (l < 2 || l > 8)
            throw std::invalid_argument("field: l must lie in [2, 8]");
        return l;
    }

    // Fills the tables by iterating b -> x*b mod modulus. The walk visits all
    // 2^m - 1 nonzero masks exactly once iff the modulus is primitive.
    bool build_tables() {
        antilog_.assign(size_, 0);
        log_.assign(size_, -1);
        Elem b = 1;
        for (std::uint32_t i = 0; i < order_; ++i) {
            if (log_[b] != -1) return false;  // cycle shorter than 2^m - 1
            antilog_[i] = b;
            log_[b] = static_cast<std::int32_t>(i);
            std::uint32_t n = static_cast<std::uint32_t>(b) << 1;
            if (n & size_) n ^= mod_;
            b = static_cast<Elem>(n);
        }
        if (b != 1) return false;
        antilog_[order_] = 1;  // wrap entry: antilog has period 2^m - 1
        return true;
    }

    int l_, m_;
    std::uint32_t mod_, size_, order_;
    std::vector<Elem> antilog_;       // size 2^m, index = discrete log
    std::vector<std::int32_t> log_;   // size 2^m, log_[0] = -1
};

}  // namespace goppa
