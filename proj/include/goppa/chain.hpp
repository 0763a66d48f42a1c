#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <goppa/code.hpp>

namespace goppa {

// The ten chain members in build order. Starred ids (suffix s) are the
// codes over the same polynomial with the zero location removed.
enum class CodeId { L1, L1s, L2, L3, L3s, L4, L4s, L5, L6, L7 };

inline constexpr std::array<CodeId, 10> chain_order = {
    CodeId::L1, CodeId::L1s, CodeId::L2, CodeId::L3, CodeId::L3s,
    CodeId::L4, CodeId::L4s, CodeId::L5, CodeId::L6, CodeId::L7};

inline const char* to_string(CodeId id) {
    switch (id) {
        case CodeId::L1: return "L1";
        case CodeId::L1s: return "L1s";
        case CodeId::L2: return "L2";
        case CodeId::L3: return "L3";
        case CodeId::L3s: return "L3s";
        case CodeId::L4: return "L4";
        case CodeId::L4s: return "L4s";
        case CodeId::L5: return "L5";
        case CodeId::L6: return "L6";
        case CodeId::L7: return "L7";
    }
    return "?";
}

inline int family_of(CodeId id) {
    switch (id) {
        case CodeId::L1:
        case CodeId::L1s: return 1;
        case CodeId::L2: return 2;
        case CodeId::L3:
        case CodeId::L3s: return 3;
        case CodeId::L4:
        case CodeId::L4s: return 4;
        case CodeId::L5: return 5;
        case CodeId::L6: return 6;
        case CodeId::L7: return 7;
    }
    return 0;
}

// Accepts the short spellings used on the command line: 1, 1s, 2, ... 7.
inline std::optional<CodeId> parse_code_id(std::string_view s) {
    for (CodeId id : chain_order) {
        std::string_view name = to_string(id);
        name.remove_prefix(1);
        if (s == name) return id;
    }
    return std::nullopt;
}

// One admissible parameter tuple. A and the two shift elements are drawn at
// random; everything else is forced by them. C, R and B always land in the
// subfield GF(2^l); D is kept only implicitly through R and V.
struct ChainParams {
    int l = 0;
    std::uint64_t seed = 0;
    Elem A = 0;
    Elem beta3 = 0;
    Elem C = 0;
    Elem beta8 = 0;
    Elem R = 0;
    Elem V = 0;
    Elem beta9 = 0;
    Elem B = 0;
    int draws = 0;       // PRNG draws consumed
    int c_zero_gap = 0;  // beta3 draws the plain exclusion admits but C = 0 rejects
};

struct param_exhaustion_error : std::runtime_error {
    param_exhaustion_error(std::uint64_t seed, int cap)
        : std::runtime_error("parameter sampling exhausted " +
                             std::to_string(cap) + " draws (seed " +
                             std::to_string(seed) +
                             "); field arithmetic is suspect") {}
};

// Rejection sampling. Accepted tuples satisfy:
//   A != 0
//   beta3 != A^-(t-1) and C = A^t beta3^t + A beta3 != 0
//   beta8 != A^t / C (makes V != 0) and D = C beta8^(t+1) + A^t beta8^t + A beta8 != 0
//   V^(t+1) != R, so the shift by beta9 = V^t / R leaves a nonzero constant
//   term and B = R / (V^(t+1)/R + 1) exists
// The modulo draw is biased by less than 2^-48 and is identical on every
// platform, unlike uniform_int_distribution.
inline ChainParams sample_params(const Field& f, std::uint64_t seed,
                                 int max_draws = 10000) {
    std::mt19937_64 rng(seed);
    ChainParams p;
    p.l = f.l();
    p.seed = seed;
    const std::uint32_t t = f.t();
    auto draw_nonzero = [&]() -> Elem {
        if (p.draws >= max_draws) throw param_exhaustion_error(seed, max_draws);
        ++p.draws;
        return f.exp(rng() % f.order());
    };

    p.A = draw_nonzero();  // every nonzero A is admissible
    const Elem At = f.pow(p.A, t);

    const Elem beta3_excluded = f.pow(f.inv(p.A), t - 1);
    for (;;) {
        Elem b = draw_nonzero();
        if (b == beta3_excluded) continue;
        Elem C = Field::add(f.mul(At, f.pow(b, t)), f.mul(p.A, b));
        if (C == 0) {
            ++p.c_zero_gap;
            continue;
        }
        p.beta3 = b;
        p.C = C;
        break;
    }

    const Elem beta8_excluded = f.div(At, p.C);
    for (;;) {
        Elem b = draw_nonzero();
        if (b == beta8_excluded) continue;
        Elem bt = f.pow(b, t);
        Elem D = Field::add(f.mul(p.C, f.mul(bt, b)),
                            Field::add(f.mul(At, bt), f.mul(p.A, b)));
        if (D == 0) continue;
        Elem R = f.div(p.C, D);
        Elem V = f.div(Field::add(p.A, f.mul(p.C, bt)), D);
        Elem c = Field::add(f.div(f.pow(V, t + 1), R), 1);
        if (c == 0) continue;
        p.beta8 = b;
        p.R = R;
        p.V = V;
        p.beta9 = f.div(f.pow(V, t), R);
        p.B = f.div(R, c);
        break;
    }
    return p;
}

// Relocation of code positions induced by a map on field elements.
// perm[i] is the target position of source position i; -1 marks the one
// source position a drop_zero map deletes.
struct PositionMap {
    enum class Kind { identity, affine, inversion, drop_zero };
    Kind kind = Kind::identity;
    Elem scale = 1;  // affine: e -> scale*e + shift;  inversion: e -> scale / e
    Elem shift = 0;
    std::vector<int> perm;

    bool bijective() const {
        for (int v : perm) {
            if (v < 0) return false;
        }
        return true;
    }
};

namespace detail {

// Resolves element images against the target set and rejects collisions.
inline PositionMap resolve_map(PositionMap mp, const LocationSet& dst,
                               const std::vector<Elem>& images) {
    std::vector<char> seen(dst.size(), 0);
    mp.perm.reserve(images.size());
    for (Elem e : images) {
        int j = dst.index_of(e);
        if (j < 0)
            throw std::invalid_argument(
                "position map: image element is not a target location");
        if (seen[static_cast<std::size_t>(j)])
            throw std::invalid_argument("position map: image element repeats");
        seen[static_cast<std::size_t>(j)] = 1;
        mp.perm.push_back(j);
    }
    return mp;
}

}  // namespace detail

inline PositionMap identity_map(const LocationSet& src,
                                const LocationSet& dst) {
    PositionMap mp;
    mp.kind = PositionMap::Kind::identity;
    return detail::resolve_map(std::move(mp), dst, src.elems);
}

inline PositionMap affine_map(const Field& f, const LocationSet& src,
                              const LocationSet& dst, Elem scale, Elem shift) {
    if (scale == 0) throw std::invalid_argument("position map: zero scale");
    PositionMap mp;
    mp.kind = PositionMap::Kind::affine;
    mp.scale = scale;
    mp.shift = shift;
    std::vector<Elem> images;
    images.reserve(src.size());
    for (Elem e : src.elems)
        images.push_back(Field::add(f.mul(scale, e), shift));
    return detail::resolve_map(std::move(mp), dst, images);
}

inline PositionMap inversion_map(const Field& f, const LocationSet& src,
                                 const LocationSet& dst, Elem scale) {
    if (scale == 0) throw std::invalid_argument("position map: zero scale");
    PositionMap mp;
    mp.kind = PositionMap::Kind::inversion;
    mp.scale = scale;
    std::vector<Elem> images;
    images.reserve(src.size());
    for (Elem e : src.elems) {
        if (e == 0)
            throw std::invalid_argument("position map: cannot invert 0");
        images.push_back(f.div(scale, e));
    }
    return detail::resolve_map(std::move(mp), dst, images);
}

inline PositionMap drop_zero_map(const LocationSet& src,
                                 const LocationSet& dst) {
    if (!src.has_zero() || dst.size() + 1 != src.size())
        throw std::invalid_argument(
            "position map: drop_zero needs the same set minus 0");
    PositionMap mp;
    mp.kind = PositionMap::Kind::drop_zero;
    mp.perm.reserve(src.size());
    for (Elem e : src.elems) {
        if (e == 0) {
            mp.perm.push_back(-1);
            continue;
        }
        int j = dst.index_of(e);
        if (j < 0)
            throw std::invalid_argument(
                "position map: drop_zero needs the same set minus 0");
        mp.perm.push_back(j);
    }
    return mp;
}

// Code equality under the relocation: gather b's parity columns into a's
// position frame and compare binary row spaces.
inline bool verify_equivalence(const Code& a, const Code& b,
                               const PositionMap& mp) {
    if (a.n() != b.n() || mp.perm.size() != a.n() || !mp.bijective())
        throw std::invalid_argument("verify_equivalence: map is not a bijection");
    std::vector<std::size_t> cols(a.n());
    for (std::size_t i = 0; i < cols.size(); ++i)
        cols[i] = static_cast<std::size_t>(mp.perm[i]);
    return row_space_equal(a.h_bin(), gather_columns(b.h_bin(), cols));
}

// True iff every codeword is zero at the position of the element 0.
inline bool verify_zero_position(const Code& c) {
    int zp = c.zero_position();
    if (zp < 0)
        throw std::domain_error("verify_zero_position: 0 is not a location");
    BitMatrix gen = generator_matrix(c);
    for (std::size_t r = 0; r < gen.rows(); ++r)
        if (gen.get(r, static_cast<std::size_t>(zp))) return false;
    return true;
}

// Relocates every generator row of sub into sup's position frame (positions
// nothing maps onto stay zero) and syndrome-tests it there.
inline bool verify_subcode(const Code& sub, const Code& sup,
                           const PositionMap& mp) {
    if (mp.perm.size() != sub.n() || !mp.bijective() || sub.n() > sup.n())
        throw std::invalid_argument("verify_subcode: map is not injective");
    BitMatrix gen = generator_matrix(sub);
    for (std::size_t r = 0; r < gen.rows(); ++r) {
        BitVec w(sup.n());
        for (std::size_t i = 0; i < sub.n(); ++i)
            if (gen.get(r, i)) w.set(static_cast<std::size_t>(mp.perm[i]), true);
        if (!sup.syndrome_is_zero(w)) return false;
    }
    return true;
}

struct Chain {
    std::shared_ptr<const Field> field;
    ChainParams params;
    std::vector<Code> codes;        // chain_order
    std::vector<PositionMap> maps;  // maps[i] relocates codes[i] onto codes[i+1]

    const Code& code(CodeId id) const {
        return codes[static_cast<std::size_t>(id)];
    }
};

inline Chain build_chain(std::shared_ptr<const Field> f,
                         const ChainParams& p) {
    const Field& F = *f;
    const std::uint32_t t = F.t();
    GoppaParams gp;
    gp.A = p.A;
    gp.C = p.C;
    gp.R = p.R;
    gp.V = p.V;
    gp.B = p.B;

    std::array<Poly, 8> g;  // g[family]
    for (int fam = 1; fam <= 7; ++fam) g[fam] = goppa_polynomial(F, fam, gp);

    LocationSet L1 = location_set(F, g[1]);
    LocationSet L1s = L1.without_zero();
    LocationSet L2 = location_set(F, g[2]);
    LocationSet L3 = location_set(F, g[3]);
    LocationSet L3s = L3.without_zero();
    LocationSet L4 = location_set(F, g[4]);
    LocationSet L4s = L4.without_zero();
    LocationSet L5 = location_set(F, g[5]);
    LocationSet L6 = location_set(F, g[6]);
    LocationSet L7 = location_set(F, g[7]);

    Chain ch;
    ch.field = f;
    ch.params = p;
    ch.codes.reserve(10);
    ch.codes.emplace_back(f, g[1], L1);
    ch.codes.emplace_back(f, g[1], L1s);
    ch.codes.emplace_back(f, g[2], L2);
    ch.codes.emplace_back(f, g[3], L3);
    ch.codes.emplace_back(f, g[3], L3s);
    ch.codes.emplace_back(f, g[4], L4);
    ch.codes.emplace_back(f, g[4], L4s);
    ch.codes.emplace_back(f, g[5], L5);
    ch.codes.emplace_back(f, g[6], L6);
    ch.codes.emplace_back(f, g[7], L7);

    // The element maps the substitutions induce between adjacent members:
    //   L1s -> L2 : a -> a / A
    //   L2  -> L3 : a -> a + beta3
    //   L3s -> L4 : a -> (C / A^2) / a, missing exactly 0 in L4
    //   L4s -> L5 : a -> omega a with omega = A^(t+1) / C in GF(2^l)
    //   L5  -> L6 : a -> a + beta8
    //   L6  -> L7 : a -> a + beta9
    const Elem Ainv = F.inv(p.A);
    const Elem omega = F.div(F.pow(p.A, t + 1), p.C);
    const Elem inv_scale = F.mul(p.C, F.sqr(Ainv));
    ch.maps.reserve(9);
    ch.maps.push_back(drop_zero_map(L1, L1s));
    ch.maps.push_back(affine_map(F, L1s, L2, Ainv, 0));
    ch.maps.push_back(affine_map(F, L2, L3, 1, p.beta3));
    ch.maps.push_back(drop_zero_map(L3, L3s));
    ch.maps.push_back(inversion_map(F, L3s, L4, inv_scale));
    ch.maps.push_back(drop_zero_map(L4, L4s));
    ch.maps.push_back(affine_map(F, L4s, L5, omega, 0));
    ch.maps.push_back(affine_map(F, L5, L6, 1, p.beta8));
    ch.maps.push_back(affine_map(F, L6, L7, 1, p.beta9));
    return ch;
}

inline Chain build_chain(std::shared_ptr<const Field> f, std::uint64_t seed) {
    return build_chain(f, sample_params(*f, seed));
}

// The two parity matrices of the star codes at the ends of the bijective
// chain stretches describe the same 2^(2l)-t column frame once the first
// star code's columns are carried through the composed maps: the first
// matrix gains an all-ones row, the second a zero column (taken by the one
// position mapping to 0) plus an all-ones row covering that column too.
inline bool verify_block_identity(const Chain& ch) {
    const Code& c1s = ch.code(CodeId::L1s);
    const Code& c4s = ch.code(CodeId::L4s);
    const Field& F = *ch.field;
    const std::size_t n = c1s.n();
    if (n != c4s.n() + 1) return false;

    const Elem Ainv = F.inv(ch.params.A);
    const Elem gamma = F.mul(ch.params.C, F.sqr(Ainv));
    std::vector<int> target(n);  // c4s column per c1s column; -1 = slot
    int slots = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Elem a = c1s.locations().elems[i];
        Elem psi = Field::add(F.mul(Ainv, a), ch.params.beta3);
        if (psi == 0) {
            target[i] = -1;
            ++slots;
            continue;
        }
        int j = c4s.locations().index_of(F.div(gamma, psi));
        if (j < 0) return false;
        target[i] = j;
    }
    if (slots != 1) return false;

    BitVec ones(n);
    for (std::size_t i = 0; i < n; ++i) ones.set(i, true);

    BitMatrix lhs = c1s.h_bin();
    lhs.append_row(ones);

    BitMatrix rhs(0, n);
    const BitMatrix& h4 = c4s.h_bin();
    for (std::size_t r = 0; r < h4.rows(); ++r) {
        BitVec row(n);
        for (std::size_t i = 0; i < n; ++i)
            if (target[i] >= 0 && h4.get(r, static_cast<std::size_t>(target[i])))
                row.set(i, true);
        rhs.append_row(row);
    }
    rhs.append_row(ones);
    return row_space_equal(lhs, rhs);
}

struct CheckResult {
    std::string name;
    bool pass = false;
};

// Every structural claim about one built chain, each as a named pass/fail.
inline std::vector<CheckResult> run_chain_checks(const Chain& ch) {
    using enum CodeId;
    const Field& F = *ch.field;
    const ChainParams& p = ch.params;
    std::vector<CheckResult> out;
    auto add = [&](const char* name, bool pass) {
        out.push_back({name, pass});
    };
    auto n_of = [&](CodeId id) { return ch.code(id).n(); };
    auto k_of = [&](CodeId id) { return ch.code(id).k(); };

    add("params_in_subfield", F.in_subfield(p.C) && F.in_subfield(p.R) &&
                                  F.in_subfield(p.B) && p.B != 0);

    const std::size_t q = F.size();
    const std::size_t t = F.t();
    add("lengths_formula",
        n_of(L1) == q - t + 1 && n_of(L1s) == q - t && n_of(L2) == q - t &&
            n_of(L3) == q - t && n_of(L3s) == q - t - 1 && n_of(L4) == q - t &&
            n_of(L4s) == q - t - 1 && n_of(L5) == q - t - 1 &&
            n_of(L6) == q - t - 1 && n_of(L7) == q - t - 1);
    add("dimension_relations",
        k_of(L1s) == k_of(L1) - 1 && k_of(L2) == k_of(L1) - 1 &&
            k_of(L3) == k_of(L2) && k_of(L3s) == k_of(L3) - 1 &&
            k_of(L4) == k_of(L3) && k_of(L4s) == k_of(L4) &&
            k_of(L5) == k_of(L4) && k_of(L6) == k_of(L5) &&
            k_of(L7) == k_of(L6));

    add("redundant_row_L1s",
        verify_redundant_row(ch.code(L1s), RedundantRow::inverse_weighted));
    add("all_ones_row_L1",
        verify_redundant_row(ch.code(L1), RedundantRow::all_ones));
    add("redundant_row_L4s",
        verify_redundant_row(ch.code(L4s), RedundantRow::inverse_weighted));

    add("equiv_L1s_L2", verify_equivalence(ch.code(L1s), ch.code(L2), ch.maps[1]));
    add("equiv_L2_L3", verify_equivalence(ch.code(L2), ch.code(L3), ch.maps[2]));
    add("zero_position_L4", verify_zero_position(ch.code(L4)));
    add("zero_position_L1_absent", !verify_zero_position(ch.code(L1)));
    add("subcode_L3s_L4", verify_subcode(ch.code(L3s), ch.code(L4), ch.maps[4]));
    add("subcode_dimension_gap", k_of(L3s) + 1 == k_of(L4));
    add("equiv_L4s_L5", verify_equivalence(ch.code(L4s), ch.code(L5), ch.maps[6]));
    add("equiv_L5_L6", verify_equivalence(ch.code(L5), ch.code(L6), ch.maps[7]));
    add("equiv_L6_L7", verify_equivalence(ch.code(L6), ch.code(L7), ch.maps[8]));
    add("block_identity", verify_block_identity(ch));

    // Single-step maps across each bijective stretch of the chain.
    const Elem Ainv = F.inv(p.A);
    const Elem omega = F.div(F.pow(p.A, F.t() + 1), p.C);
    PositionMap m13 = affine_map(F, ch.code(L1s).locations(),
                                 ch.code(L3).locations(), Ainv, p.beta3);
    add("composed_equiv_L1s_L3",
        verify_equivalence(ch.code(L1s), ch.code(L3), m13));
    PositionMap m47 =
        affine_map(F, ch.code(L4s).locations(), ch.code(L7).locations(), omega,
                   Field::add(p.beta8, p.beta9));
    add("composed_equiv_L4s_L7",
        verify_equivalence(ch.code(L4s), ch.code(L7), m47));

    return out;
}

}  // namespace goppa
