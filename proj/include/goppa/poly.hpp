#pragma once

// Dense polynomials over GF(2^m), coefficient vector with constant term
// first. All operations keep the vector trimmed (no trailing zeros), so the
// zero polynomial has an empty coefficient vector and degree -1.

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include <goppa/field.hpp>

namespace goppa {

struct Poly {
    std::vector<Elem> coeffs;

    Poly() = default;
    Poly(std::initializer_list<Elem> c) : coeffs(c) { trim(); }
    explicit Poly(std::vector<Elem> c) : coeffs(std::move(c)) { trim(); }

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    Elem coeff(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : 0; }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    bool operator==(const Poly&) const = default;
};

inline Elem poly_eval(const Field& f, const Poly& p, Elem x) {
    Elem acc = 0;
    for (std::size_t i = p.coeffs.size(); i-- > 0;)
        acc = Field::add(f.mul(acc, x), p.coeffs[i]);
    return acc;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
    Poly r;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
        r.coeffs[i] = Field::add(a.coeff(i), b.coeff(i));
    r.trim();
    return r;
}

inline Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    Poly r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] =
                Field::add(r.coeffs[i + j], f.mul(a.coeffs[i], b.coeffs[j]));
    }
    r.trim();
    return r;
}

inline Poly poly_scale(const Field& f, const Poly& p, Elem c) {
    if (c == 0) throw std::invalid_argument("poly: scale by zero");
    Poly r = p;
    for (Elem& x : r.coeffs) x = f.mul(x, c);
    return r;
}

// In characteristic 2 only odd-degree terms survive differentiation.
inline Poly formal_derivative(const Poly& p) {
    Poly r;
    if (p.coeffs.size() < 2) return r;
    r.coeffs.assign(p.coeffs.size() - 1, 0);
    for (std::size_t k = 1; k < p.coeffs.size(); k += 2)
        r.coeffs[k - 1] = p.coeffs[k];
    r.trim();
    return r;
}

// p(b*x + g); b must be invertible so the substitution is one too.
inline Poly substitute_affine(const Field& f, const Poly& p, Elem b, Elem g) {
    if (b == 0)
        throw std::invalid_argument("poly: affine substitution needs b != 0");
    Poly acc;
    for (std::size_t i = p.coeffs.size(); i-- > 0;) {
        // acc = acc * (b*x + g) + coeff(i)
        Poly next;
        next.coeffs.assign(acc.coeffs.size() + 1, 0);
        for (std::size_t j = 0; j < acc.coeffs.size(); ++j) {
            next.coeffs[j + 1] =
                Field::add(next.coeffs[j + 1], f.mul(acc.coeffs[j], b));
            next.coeffs[j] = Field::add(next.coeffs[j], f.mul(acc.coeffs[j], g));
        }
        next.coeffs[0] = Field::add(next.coeffs[0], p.coeffs[i]);
        next.trim();
        acc = std::move(next);
    }
    return acc;
}

// Separability over the constructed field: no root is shared with the
// derivative. Root finding is exhaustive evaluation; fine at these sizes.
inline bool is_separable(const Field& f, const Poly& p) {
    if (p.is_zero()) return false;
    Poly d = formal_derivative(p);
    for (std::uint32_t e = 0; e < f.size(); ++e) {
        Elem x = static_cast<Elem>(e);
        if (poly_eval(f, p, x) == 0 && poly_eval(f, d, x) == 0) return false;
    }
    return true;
}

struct GoppaParams {
    Elem A = 0, C = 0, R = 0, V = 0, B = 0;
};

namespace detail {
inline void need_nonzero(Elem v, const char* name) {
    if (v == 0)
        throw std::invalid_argument(std::string("goppa polynomial: parameter ") +
                                    name + " must be nonzero");
}
inline void need_subfield(const Field& f, Elem v, const char* name) {
    if (!f.in_subfield(v))
        throw std::invalid_argument(std::string("goppa polynomial: parameter ") +
                                    name + " must lie in the subfield GF(2^l)");
}
}  // namespace detail

// The seven separable polynomial families the code chain is built from.
// Degrees: family 1 -> t-1, families 2..4 -> t, families 5..7 -> t+1,
// with t = 2^l.
inline Poly goppa_polynomial(const Field& f, int family, const GoppaParams& P) {
    const std::uint32_t t = f.t();
    Poly p;
    switch (family) {
        case 1: {  // x^(t-1) + 1
            p.coeffs.assign(t, 0);
            p.coeffs[0] = 1;
            p.coeffs[t - 1] = 1;
            return p;
        }
        case 2: {  // A^t x^t + A x
            detail::need_nonzero(P.A, "A");
            p.coeffs.assign(t + 1, 0);
            p.coeffs[1] = P.A;
            p.coeffs[t] = f.pow(P.A, t);
            return p;
        }
        case 3: {  // A^t x^t + A x + C
            detail::need_nonzero(P.A, "A");
            detail::need_nonzero(P.C, "C");
            detail::need_subfield(f, P.C, "C");
            p.coeffs.assign(t + 1, 0);
            p.coeffs[0] = P.C;
            p.coeffs[1] = P.A;
            p.coeffs[t] = f.pow(P.A, t);
            return p;
        }
        case 4: {  // A^t x^t + A^(t-1) x^(t-1) + 1
            detail::need_nonzero(P.A, "A");
            p.coeffs.assign(t + 1, 0);
            p.coeffs[0] = 1;
            p.coeffs[t - 1] = f.pow(P.A, t - 1);
            p.coeffs[t] = f.pow(P.A, t);
            return p;
        }
        case 5: {  // C x^(t+1) + A^t x^t + A x
            detail::need_nonzero(P.A, "A");
            detail::need_nonzero(P.C, "C");
            detail::need_subfield(f, P.C, "C");
            p.coeffs.assign(t + 2, 0);
            p.coeffs[1] = P.A;
            p.coeffs[t] = f.pow(P.A, t);
            p.coeffs[t + 1] = P.C;
            return p;
        }
        case 6: {  // R x^(t+1) + V^t x^t + V x + 1
            detail::need_nonzero(P.R, "R");
            detail::need_subfield(f, P.R, "R");
            detail::need_nonzero(P.V, "V");
            p.coeffs.assign(t + 2, 0);
            p.coeffs[0] = 1;
            p.coeffs[1] = P.V;
            p.coeffs[t] = f.pow(P.V, t);
            p.coeffs[t + 1] = P.R;
            return p;
        }
        case 7: {  // B x^(t+1) + 1
            detail::need_nonzero(P.B, "B");
            p.coeffs.assign(t + 2, 0);
            p.coeffs[0] = 1;
            p.coeffs[t + 1] = P.B;
            return p;
        }
        default:
            throw std::invalid_argument("goppa polynomial: family must be 1..7");
    }
}

}  // namespace goppa
