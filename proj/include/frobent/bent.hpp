/**************************************************************************
 * bent.hpp
 *
 * Copyright 2026 The frobent authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "perms.hpp"

namespace frobent {

/// Provenance of a Maiorana-McFarland function: the permutation and inner
/// function it was assembled from. Carried as an optional tag so downstream
/// code can recover the structure without re-deriving it.
struct MMProvenance {
    std::vector<felt> phi;
    std::vector<std::uint8_t> h;  // empty means h = 0
};

/// Truth table of a Boolean function on m variables, indexed by the integer
/// encoding of the input. Functions built on a field pair GF(2^n)^2 pack the
/// input as index(y) * 2^n + index(x).
struct BooleanFunction {
    unsigned m = 0;
    std::vector<std::uint8_t> bits;
    std::shared_ptr<const MMProvenance> mm_tag;  // set by mm_function

    std::size_t size() const { return bits.size(); }
    unsigned operator()(std::size_t idx) const { return bits[idx]; }
};

inline BooleanFunction constant_function(unsigned m, unsigned bit) {
    BooleanFunction f;
    f.m = m;
    f.bits.assign(std::size_t{1} << m, static_cast<std::uint8_t>(bit & 1));
    return f;
}

inline BooleanFunction xor_functions(const BooleanFunction& a, const BooleanFunction& b) {
    require(a.m == b.m, errc::DegreeMismatch, "cannot xor functions on different variable counts");
    BooleanFunction r = a;
    r.mm_tag = nullptr;  // the sum has no single MM provenance
    for (std::size_t j = 0; j < r.bits.size(); ++j) r.bits[j] ^= b.bits[j];
    return r;
}

/// W(a) = sum_x (-1)^{f(x) + <a,x>} with the bitwise dot product pairing;
/// exact integers via the in-place butterfly.
struct WalshSpectrum {
    unsigned m = 0;
    std::vector<std::int32_t> w;
};

inline WalshSpectrum walsh_transform(const BooleanFunction& f) {
    require(f.m >= 1, errc::DegreeMismatch, "walsh transform needs m >= 1");
    WalshSpectrum s;
    s.m = f.m;
    s.w.resize(f.bits.size());
    for (std::size_t j = 0; j < f.bits.size(); ++j) s.w[j] = f.bits[j] ? -1 : 1;
    for (std::size_t h = 1; h < s.w.size(); h <<= 1) {
        for (std::size_t i = 0; i < s.w.size(); i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                std::int32_t x = s.w[j], y = s.w[j + h];
                s.w[j] = x + y;
                s.w[j + h] = x - y;
            }
        }
    }
    return s;
}

/// Re-indexing of the Walsh spectrum that realizes a non-standard bilinear
/// pairing. For field-pair inputs the pairing is <(a,b),(x,y)> = Tr(ax) +
/// Tr(by): the spectrum value at the dual point (a,b) sits at the butterfly
/// output index perm[(b << n) | a]. An empty map is the identity (plain dot
/// product pairing).
struct PairingMap {
    std::vector<std::uint32_t> perm;

    bool identity() const { return perm.empty(); }
    std::uint32_t map(std::uint32_t j) const { return perm.empty() ? j : perm[j]; }
};

/// Trace pairing for functions on GF(2^n) x GF(2^n) (m = 2n).
inline PairingMap trace_pairing(const Field& F) {
    require(F.p() == 2, errc::OddCharacteristic, "trace pairing is built for p = 2");
    unsigned n = F.n();
    std::vector<std::uint32_t> m0(F.q());
    for (felt a = 0; a < F.q(); ++a) {
        std::uint32_t v = 0;
        for (unsigned j = 0; j < n; ++j)
            v |= static_cast<std::uint32_t>(F.trace_bit(F.mul(a, felt{1} << j))) << j;
        m0[a] = v;
    }
    PairingMap pm;
    pm.perm.resize(static_cast<std::size_t>(F.q()) * F.q());
    for (felt b = 0; b < F.q(); ++b)
        for (felt a = 0; a < F.q(); ++a)
            pm.perm[(static_cast<std::size_t>(b) << n) | a] =
                (m0[b] << n) | m0[a];
    return pm;
}

/// Extends a pairing with `extra` plain dot-product variables on top.
inline PairingMap extend_pairing(const PairingMap& pm, unsigned extra) {
    if (pm.identity()) return {};
    PairingMap out;
    std::size_t base = pm.perm.size();
    out.perm.resize(base << extra);
    for (std::size_t hi = 0; hi < (std::size_t{1} << extra); ++hi)
        for (std::size_t j = 0; j < base; ++j)
            out.perm[(hi * base) | j] = static_cast<std::uint32_t>(hi * base) | pm.perm[j];
    return out;
}

inline bool is_bent(const BooleanFunction& f) {
    require(f.m % 2 == 0, errc::OddM, "bent functions need an even number of variables");
    auto s = walsh_transform(f);
    std::int32_t v = std::int32_t{1} << (f.m / 2);
    for (std::int32_t c : s.w)
        if (c != v && c != -v) return false;
    return true;
}

/// Bentness certificate: the spectrum extremes and the dual read off the
/// spectrum signs, dual(a) defined by (-1)^{dual(a)} = W(a) / 2^{m/2}. The
/// dual is itself certified (dual of dual equals the function) on every call.
struct BentCertificate {
    BooleanFunction function;
    BooleanFunction dual;
    std::int32_t min_abs = 0;
    std::int32_t max_abs = 0;
    PairingMap pairing;
};

inline BentCertificate certify_bent(const BooleanFunction& f, PairingMap pairing = {}) {
    require(f.m % 2 == 0, errc::OddM, "bent functions need an even number of variables");
    auto s = walsh_transform(f);
    std::int32_t v = std::int32_t{1} << (f.m / 2);
    BentCertificate cert;
    cert.function = f;
    cert.pairing = std::move(pairing);
    cert.min_abs = std::abs(s.w[0]);
    cert.max_abs = cert.min_abs;
    for (std::int32_t c : s.w) {
        std::int32_t a = std::abs(c);
        cert.min_abs = std::min(cert.min_abs, a);
        cert.max_abs = std::max(cert.max_abs, a);
    }
    require(cert.min_abs == v && cert.max_abs == v, errc::NotBent,
            "spectrum is not flat at 2^{m/2}");
    cert.dual.m = f.m;
    cert.dual.bits.resize(f.bits.size());
    for (std::uint32_t j = 0; j < f.bits.size(); ++j)
        cert.dual.bits[j] = s.w[cert.pairing.map(j)] == -v ? 1 : 0;
    // duality is an involution; verify dual(dual) = f through a second transform
    auto s2 = walsh_transform(cert.dual);
    for (std::uint32_t j = 0; j < f.bits.size(); ++j) {
        std::uint8_t back = s2.w[cert.pairing.map(j)] == -v ? 1 : 0;
        require(back == f.bits[j], errc::InternalInconsistency, "dual involution failed");
    }
    return cert;
}

// ---------------------------------------------------------------------------
// Maiorana-McFarland layer
// ---------------------------------------------------------------------------

/// f(x,y) = Tr(x phi(y)) + h(y) on 2n variables; bent whenever phi is a
/// permutation. Non-permutations are accepted only with the explicit override
/// (negative tests).
inline BooleanFunction mm_function(const PermTable& phi, const BooleanFunction* h = nullptr,
                                   bool allow_non_permutation = false) {
    const Field& F = *phi.field;
    require(F.p() == 2, errc::OddCharacteristic, "boolean layer works over GF(2^n)");
    require(phi.certified || allow_non_permutation, errc::NotAPermutation,
            "phi must be a certified permutation (or pass the override)");
    unsigned n = F.n();
    if (h) require(h->m == n, errc::DegreeMismatch, "h must live on n variables");
    BooleanFunction f;
    f.m = 2 * n;
    f.bits.resize(std::size_t{1} << f.m);
    for (felt y = 0; y < F.q(); ++y) {
        felt py = phi(y);
        std::uint8_t hy = h ? h->bits[y] : 0;
        std::size_t row = static_cast<std::size_t>(y) << n;
        for (felt x = 0; x < F.q(); ++x)
            f.bits[row | x] = static_cast<std::uint8_t>(F.trace_bit(F.mul(x, py)) ^ hy);
    }
    auto tag = std::make_shared<MMProvenance>();
    tag->phi = phi.values;
    if (h) tag->h = h->bits;
    f.mm_tag = std::move(tag);
    return f;
}

/// Closed-form dual of the Maiorana-McFarland function:
/// f*(x,y) = Tr(y phi^{-1}(x)) + h(phi^{-1}(x)).
inline BooleanFunction mm_dual_closed_form(const PermTable& phi, const BooleanFunction* h = nullptr) {
    const Field& F = *phi.field;
    PermTable inv = invert_perm(phi);
    unsigned n = F.n();
    BooleanFunction d;
    d.m = 2 * n;
    d.bits.resize(std::size_t{1} << d.m);
    for (felt y = 0; y < F.q(); ++y) {
        std::size_t row = static_cast<std::size_t>(y) << n;
        for (felt x = 0; x < F.q(); ++x) {
            felt ix = inv(x);
            d.bits[row | x] = static_cast<std::uint8_t>(F.trace_bit(F.mul(y, ix)) ^
                                                        (h ? h->bits[ix] : 0));
        }
    }
    return d;
}

namespace detail {

inline BooleanFunction majority_of_mm(const Field& F, const PermTable& p1, const PermTable& p2,
                                      const PermTable& p3) {
    unsigned n = F.n();
    BooleanFunction H;
    H.m = 2 * n;
    H.bits.resize(std::size_t{1} << H.m);
    for (felt y = 0; y < F.q(); ++y) {
        felt a1 = p1(y), a2 = p2(y), a3 = p3(y);
        std::size_t row = static_cast<std::size_t>(y) << n;
        for (felt x = 0; x < F.q(); ++x) {
            unsigned t1 = F.trace_bit(F.mul(x, a1));
            unsigned t2 = F.trace_bit(F.mul(x, a2));
            unsigned t3 = F.trace_bit(F.mul(x, a3));
            H.bits[row | x] = static_cast<std::uint8_t>((t1 & t2) ^ (t1 & t3) ^ (t2 & t3));
        }
    }
    return H;
}

// majority built from the inverses, evaluated at (x, y) with the inverse
// applied to x -- the closed-form dual of the majority construction
inline BooleanFunction majority_of_inverses(const Field& F, const PermTable& i1, const PermTable& i2,
                                            const PermTable& i3) {
    unsigned n = F.n();
    BooleanFunction H;
    H.m = 2 * n;
    H.bits.resize(std::size_t{1} << H.m);
    for (felt y = 0; y < F.q(); ++y) {
        std::size_t row = static_cast<std::size_t>(y) << n;
        for (felt x = 0; x < F.q(); ++x) {
            unsigned t1 = F.trace_bit(F.mul(i1(x), y));
            unsigned t2 = F.trace_bit(F.mul(i2(x), y));
            unsigned t3 = F.trace_bit(F.mul(i3(x), y));
            H.bits[row | x] = static_cast<std::uint8_t>((t1 & t2) ^ (t1 & t3) ^ (t2 & t3));
        }
    }
    return H;
}

}  // namespace detail

/// H(x,y) = majority of the three MM functions Tr(x phi_j(y)) for a triple
/// satisfying the sum condition; bent with dual equal to the same majority
/// over the inverse permutations, asserted against the spectrum.
inline BentCertificate bent_from_perm_triple(const PermTable& p1, const PermTable& p2,
                                             const PermTable& p3) {
    const Field& F = *p1.field;
    require(an_condition(p1, p2, p3), errc::AnConditionFailed,
            "triple does not satisfy the sum condition");
    BooleanFunction H = detail::majority_of_mm(F, p1, p2, p3);
    BentCertificate cert = certify_bent(H, trace_pairing(F));
    BooleanFunction closed =
        detail::majority_of_inverses(F, invert_perm(p1), invert_perm(p2), invert_perm(p3));
    require(cert.dual.bits == closed.bits, errc::DualMismatch,
            "spectrum dual differs from the closed-form dual");
    return cert;
}

// ---------------------------------------------------------------------------
// Bent functions from Frobenius translators
// ---------------------------------------------------------------------------

/// Output of the translator-triple construction. The dual closed form uses
/// the inverse scalar a^{-2^{n-i}} that the underlying permutation inverses
/// force; `stated_scalar_matches` records whether the alternative a^{2^i}
/// scaling also reproduces the spectrum dual (it generally does not).
struct TranslatorBentFamily {
    BentCertificate cert;
    BooleanFunction dual_closed_form;
    bool stated_scalar_matches = false;
    std::array<PermPair, 3> perms;
};

inline TranslatorBentFamily bent_from_translator_family(const LinearizedMap& L,
                                                        const FunctionTable& f,
                                                        const FunctionTable& g,
                                                        const std::array<felt, 3>& gammas, felt a,
                                                        unsigned i) {
    const Field& F = *f.field;
    require(F.p() == 2, errc::OddCharacteristic, "construction is stated for p = 2");
    require(a != 0, errc::ZeroA, "a must be nonzero");
    unsigned k = f.codomain_k;
    unsigned n = F.n();

    std::array<TranslatorWitness, 3> ws;
    for (int j = 0; j < 3; ++j) {
        ws[j] = TranslatorWitness(F, k, gammas[j], i, a);
        require(check_translator(f, ws[j]), errc::TranslatorPreconditionFailed,
                "gamma is not an (i, a)-translator of f");
    }
    felt gsum = F.add(F.add(gammas[0], gammas[1]), gammas[2]);
    require(gsum != 0, errc::TranslatorPreconditionFailed, "gamma1 + gamma2 + gamma3 = 0");
    require(check_translator(f, TranslatorWitness(F, k, gsum, i, a)),
            errc::TranslatorPreconditionFailed, "gamma sum is not an (i, a)-translator");

    TranslatorBentFamily out;
    for (int j = 0; j < 3; ++j) out.perms[j] = build_perm_pair(L, ws[j], g, f);

    // rho(y) = (g(f(y)) + f(y)/a)^{2^{n-i}}
    std::vector<felt> rho(F.q());
    for (felt y = 0; y < F.q(); ++y)
        rho[y] = F.frobenius(F.add(g.at(f.values[y]), F.div(f.values[y], a)), n - i);

    BooleanFunction H;
    H.m = 2 * n;
    H.bits.resize(std::size_t{1} << H.m);
    std::array<felt, 3> Lg{L.apply(gammas[0]), L.apply(gammas[1]), L.apply(gammas[2])};
    for (felt y = 0; y < F.q(); ++y) {
        felt ly = L.apply(y);
        std::array<felt, 3> wj{F.mul(Lg[0], rho[y]), F.mul(Lg[1], rho[y]), F.mul(Lg[2], rho[y])};
        std::size_t row = static_cast<std::size_t>(y) << n;
        for (felt x = 0; x < F.q(); ++x) {
            unsigned t1 = F.trace_bit(F.mul(x, wj[0]));
            unsigned t2 = F.trace_bit(F.mul(x, wj[1]));
            unsigned t3 = F.trace_bit(F.mul(x, wj[2]));
            H.bits[row | x] = static_cast<std::uint8_t>(F.trace_bit(F.mul(x, ly)) ^ (t1 & t2) ^
                                                        (t1 & t3) ^ (t2 & t3));
        }
    }
    BooleanFunction Hmaj =
        detail::majority_of_mm(F, out.perms[0].phi, out.perms[1].phi, out.perms[2].phi);
    require(H.bits == Hmaj.bits, errc::InternalInconsistency,
            "displayed form differs from the majority expansion");

    out.cert = certify_bent(H, trace_pairing(F));

    PermTable Linv = linmap_invert(L);
    FunctionTable ginv = invert_subfield_perm(g);
    auto closed_with_scalar = [&](bool stated) {
        std::vector<felt> rt(F.q());
        felt scale = stated ? F.frobenius(a, i) : F.inv(F.frobenius(a, n - i));
        for (felt z = 0; z < F.q(); ++z) {
            felt fz = f.values[z];
            rt[z] = F.mul(scale, F.frobenius(F.add(ginv.at(F.div(fz, a)), fz), n - i));
        }
        BooleanFunction D;
        D.m = 2 * n;
        D.bits.resize(std::size_t{1} << D.m);
        for (felt x = 0; x < F.q(); ++x) {
            felt z = Linv(x);
            std::array<felt, 3> gj{F.mul(gammas[0], rt[z]), F.mul(gammas[1], rt[z]),
                                   F.mul(gammas[2], rt[z])};
            for (felt y = 0; y < F.q(); ++y) {
                unsigned t1 = F.trace_bit(F.mul(y, gj[0]));
                unsigned t2 = F.trace_bit(F.mul(y, gj[1]));
                unsigned t3 = F.trace_bit(F.mul(y, gj[2]));
                D.bits[(static_cast<std::size_t>(y) << n) | x] = static_cast<std::uint8_t>(
                    F.trace_bit(F.mul(y, z)) ^ (t1 & t2) ^ (t1 & t3) ^ (t2 & t3));
            }
        }
        return D;
    };
    out.dual_closed_form = closed_with_scalar(false);
    require(out.cert.dual.bits == out.dual_closed_form.bits, errc::DualMismatch,
            "spectrum dual differs from the closed form");
    out.stated_scalar_matches = (closed_with_scalar(true).bits == out.cert.dual.bits);
    return out;
}

// ---------------------------------------------------------------------------
// Quadruples with duals summing to one
// ---------------------------------------------------------------------------

struct BentQuadruple {
    std::array<BentCertificate, 4> certs;  // f1, f2, f3, f4 = f1+f2+f3
    BooleanFunction duals_sum;             // f1* + f2* + f3* + f4*
    bool duals_sum_to_one = false;
};

/// Builds f_j = Tr(x phi_j(y)) + h_j(y) and f4 = f1 + f2 + f3, certifies all
/// four, and reports whether the four duals sum to the all-ones function. The
/// dual sum is verified on every call to reduce to
/// h_1(phi_1^{-1}(x)) + h_2(phi_2^{-1}(x)) + h_3(phi_3^{-1}(x)) +
/// (h_1+h_2+h_3)((phi_1+phi_2+phi_3)^{-1}(x)), a function of x alone; any
/// disagreement raises TheoremViolation.
inline BentQuadruple build_bent_quadruple(const std::array<const PermTable*, 3>& phis,
                                          const std::array<const BooleanFunction*, 3>& hs) {
    const Field& F = *phis[0]->field;
    require(an_condition(*phis[0], *phis[1], *phis[2]), errc::AnConditionFailed,
            "triple does not satisfy the sum condition");
    unsigned n = F.n();
    PairingMap pm = trace_pairing(F);

    BentQuadruple out;
    for (int j = 0; j < 3; ++j)
        out.certs[j] = certify_bent(mm_function(*phis[j], hs[j]), pm);

    BooleanFunction f4 =
        xor_functions(xor_functions(out.certs[0].function, out.certs[1].function),
                      out.certs[2].function);
    PermTable psi = certify(make_perm_candidate(phis[0]->field, [&](felt x) {
        return F.add(F.add((*phis[0])(x), (*phis[1])(x)), (*phis[2])(x));
    }));
    BooleanFunction hsum = xor_functions(xor_functions(*hs[0], *hs[1]), *hs[2]);
    BooleanFunction f4_mm = mm_function(psi, &hsum);
    require(f4.bits == f4_mm.bits, errc::InternalInconsistency,
            "f4 is not the MM function of the summed data");
    f4.mm_tag = f4_mm.mm_tag;
    out.certs[3] = certify_bent(f4, pm);

    out.duals_sum = xor_functions(xor_functions(out.certs[0].dual, out.certs[1].dual),
                                  xor_functions(out.certs[2].dual, out.certs[3].dual));

    std::array<PermTable, 3> invs{invert_perm(*phis[0]), invert_perm(*phis[1]),
                                  invert_perm(*phis[2])};
    PermTable psi_inv = invert_perm(psi);
    std::vector<std::uint8_t> lhs(F.q());
    for (felt x = 0; x < F.q(); ++x)
        lhs[x] = static_cast<std::uint8_t>(hs[0]->bits[invs[0](x)] ^ hs[1]->bits[invs[1](x)] ^
                                           hs[2]->bits[invs[2](x)] ^ hsum.bits[psi_inv(x)]);
    for (felt y = 0; y < F.q(); ++y) {
        std::size_t row = static_cast<std::size_t>(y) << n;
        for (felt x = 0; x < F.q(); ++x)
            require(out.duals_sum.bits[row | x] == lhs[x], errc::TheoremViolation,
                    "dual sum does not reduce to the stated condition");
    }
    out.duals_sum_to_one = true;
    for (std::uint8_t b : lhs)
        if (!b) out.duals_sum_to_one = false;
    return out;
}

/// Boolean function with h(y) + h(y + c) = 1 for every y: the field splits
/// into {y, y+c} cosets; the smaller representative takes the given bit
/// (default 0) and its partner the complement.
inline BooleanFunction build_shift_complement(const Field& F, felt c,
                                              const std::vector<std::uint8_t>* rep_bits = nullptr) {
    require(F.p() == 2, errc::OddCharacteristic, "defined over GF(2^n)");
    require(c != 0, errc::ZeroShift, "shift c = 0 makes the constraint unsatisfiable");
    BooleanFunction h;
    h.m = F.n();
    h.bits.assign(F.q(), 2);  // 2 = unassigned
    std::size_t coset = 0;
    for (felt y = 0; y < F.q(); ++y) {
        if (h.bits[y] != 2) continue;
        std::uint8_t bit = rep_bits && coset < rep_bits->size() ? ((*rep_bits)[coset] & 1) : 0;
        h.bits[y] = bit;
        h.bits[F.add(y, c)] = static_cast<std::uint8_t>(bit ^ 1);
        ++coset;
    }
    return h;
}

/// F(X, y1, y2) = f1(X) + y1 (f1+f3)(X) + y2 (f1+f2)(X) on m+2 variables;
/// bent when f4 = f1+f2+f3 is bent and the four duals sum to one. With
/// enforce_condition = false the precondition is skipped so that negative
/// controls can observe the failed spectrum directly.
inline BentCertificate extend_bent(const BentCertificate& c1, const BentCertificate& c2,
                                   const BentCertificate& c3, bool enforce_condition = true) {
    unsigned m = c1.function.m;
    require(c2.function.m == m && c3.function.m == m, errc::DegreeMismatch,
            "inputs live on different variable counts");
    if (enforce_condition) {
        BooleanFunction f4 = xor_functions(xor_functions(c1.function, c2.function), c3.function);
        require(is_bent(f4), errc::PreconditionFailed, "f1 + f2 + f3 is not bent");
        BentCertificate cert4 = certify_bent(f4, c1.pairing);
        BooleanFunction ds = xor_functions(xor_functions(c1.dual, c2.dual),
                                           xor_functions(c3.dual, cert4.dual));
        for (std::uint8_t b : ds.bits)
            require(b == 1, errc::PreconditionFailed, "duals do not sum to the all-ones function");
    }
    BooleanFunction F;
    F.m = m + 2;
    F.bits.resize(std::size_t{1} << F.m);
    std::size_t N = std::size_t{1} << m;
    for (std::size_t z = 0; z < N; ++z) {
        std::uint8_t a0 = c1.function.bits[z];
        std::uint8_t a13 = static_cast<std::uint8_t>(c1.function.bits[z] ^ c3.function.bits[z]);
        std::uint8_t a12 = static_cast<std::uint8_t>(c1.function.bits[z] ^ c2.function.bits[z]);
        F.bits[z] = a0;
        F.bits[z | N] = static_cast<std::uint8_t>(a0 ^ a13);
        F.bits[z | 2 * N] = static_cast<std::uint8_t>(a0 ^ a12);
        F.bits[z | 3 * N] = static_cast<std::uint8_t>(a0 ^ a13 ^ a12);
    }
    return certify_bent(F, extend_pairing(c1.pairing, 2));
}

// ---------------------------------------------------------------------------
// Families from 0-translators
// ---------------------------------------------------------------------------

inline BooleanFunction transpose_pair_function(const Field& F, const BooleanFunction& f) {
    unsigned n = F.n();
    require(f.m == 2 * n, errc::DegreeMismatch, "transpose needs a field-pair function");
    BooleanFunction t;
    t.m = f.m;
    t.bits.resize(f.bits.size());
    for (felt y = 0; y < F.q(); ++y)
        for (felt x = 0; x < F.q(); ++x)
            t.bits[(static_cast<std::size_t>(y) << n) | x] =
                f.bits[(static_cast<std::size_t>(x) << n) | y];
    return t;
}

/// Majority construction over the involutions x + gamma_j g(f(x)) built from
/// three distinct 0-translators. Asserts pointwise self-duality of the result
/// and raises NotSelfDual when the dual instead equals H with its two field
/// arguments exchanged (which is what the inverse formula yields).
inline BentCertificate bent_selfdual_from_translators(const std::array<felt, 3>& gammas,
                                                      const FunctionTable& g,
                                                      const FunctionTable& f) {
    const Field& F = *f.field;
    require(F.p() == 2, errc::OddCharacteristic, "stated for p = 2");
    unsigned k = f.codomain_k;
    require(gammas[0] != gammas[1] && gammas[0] != gammas[2] && gammas[1] != gammas[2],
            errc::NotDistinct, "gammas must be pairwise distinct");
    std::array<TranslatorWitness, 3> ws;
    for (int j = 0; j < 3; ++j) {
        ws[j] = TranslatorWitness(F, k, gammas[j], 0, 0);
        require(check_translator(f, ws[j]), errc::NotATranslator,
                "gamma is not a 0-translator of f");
    }
    translator_sum(translator_sum(ws[0], ws[1], f), ws[2], f);  // raises ZeroGamma on zero sum
    std::array<PermTable, 3> invs;
    for (int j = 0; j < 3; ++j) invs[j] = involution_from_zero_translator(ws[j], g, f);
    BentCertificate cert = bent_from_perm_triple(invs[0], invs[1], invs[2]);
    if (cert.dual.bits != cert.function.bits) {
        bool transposed = cert.dual.bits == transpose_pair_function(F, cert.function).bits;
        raise(errc::NotSelfDual,
              transposed ? "dual equals H with x and y exchanged, not H itself"
                         : "dual differs from H");
    }
    return cert;
}

/// F_j(x) = L(x) + L(gamma_j) g(T^n_k(beta x)) for trace-orthogonal gammas;
/// certifies the permutation triple (recording which closed-form inverse
/// actually inverts), feeds it through the majority construction, and checks
/// the spectrum dual against the derived closed form.
struct TraceBentFamily {
    BentCertificate cert;
    BooleanFunction dual_closed_form;
    bool gamma_inverse_form_works = false;    // F^{-1} = L^{-1}(x) + gamma g(T(beta L^{-1}(x)))
    bool printed_inverse_form_works = false;  // the variant with L(gamma) in place of gamma
    std::array<PermTable, 3> perms;
};

inline TraceBentFamily bent_from_trace_family(const LinearizedMap& L, felt beta,
                                              const FunctionTable& g,
                                              const std::array<felt, 3>& gammas) {
    const Field& F = *L.field;
    require(F.p() == 2, errc::OddCharacteristic, "stated for p = 2");
    require(beta != 0, errc::ZeroB, "beta must be nonzero");
    unsigned k = g.domain_k;
    require(g.codomain_k == k, errc::CodomainMismatch, "g must map GF(p^k) to GF(p^k)");
    require(linmap_is_permutation(L) && L.k == k, errc::SingularMap,
            "L must be a GF(p^k)-linear permutation");
    FunctionTable f =
        make_table(L.field, k, [&](felt x) { return F.trace(F.mul(beta, x), k); });
    for (felt gm : gammas)
        require(F.trace(F.mul(gm, beta), k) == 0, errc::TraceConditionFailed,
                "T^n_k(gamma beta) must vanish");
    felt gsum = F.add(F.add(gammas[0], gammas[1]), gammas[2]);
    require(gsum != 0, errc::ZeroGamma, "gamma1 + gamma2 + gamma3 = 0");
    require(F.trace(F.mul(gsum, beta), k) == 0, errc::InternalInconsistency,
            "trace condition not additive");

    TraceBentFamily out;
    PermTable Linv = linmap_invert(L);
    out.gamma_inverse_form_works = true;
    out.printed_inverse_form_works = true;
    for (int j = 0; j < 3; ++j) {
        felt gm = gammas[j];
        PermTable Fj = make_perm_candidate(L.field, [&](felt x) {
            return F.add(L.apply(x), F.mul(L.apply(gm), g.at(f.values[x])));
        });
        require(is_permutation(Fj), errc::TheoremViolation, "family member is not a permutation");
        auto compose_ok = [&](bool printed) {
            felt mult = printed ? L.apply(gm) : gm;
            for (felt x = 0; x < F.q(); ++x) {
                felt z = Linv(x);
                felt inv = F.add(z, F.mul(mult, g.at(f.values[z])));
                if (Fj(inv) != x) return false;
            }
            return true;
        };
        out.gamma_inverse_form_works = out.gamma_inverse_form_works && compose_ok(false);
        out.printed_inverse_form_works = out.printed_inverse_form_works && compose_ok(true);
        out.perms[j] = std::move(Fj);
    }
    require(out.gamma_inverse_form_works || out.printed_inverse_form_works, errc::InverseMismatch,
            "no closed-form inverse composes to the identity");

    out.cert = bent_from_perm_triple(out.perms[0], out.perms[1], out.perms[2]);

    unsigned n = F.n();
    BooleanFunction cd;
    cd.m = 2 * n;
    cd.bits.resize(std::size_t{1} << cd.m);
    for (felt x = 0; x < F.q(); ++x) {
        felt z = Linv(x);
        felt gz = g.at(f.values[z]);
        std::array<felt, 3> gj{F.mul(gammas[0], gz), F.mul(gammas[1], gz), F.mul(gammas[2], gz)};
        for (felt y = 0; y < F.q(); ++y) {
            unsigned t1 = F.trace_bit(F.mul(y, gj[0]));
            unsigned t2 = F.trace_bit(F.mul(y, gj[1]));
            unsigned t3 = F.trace_bit(F.mul(y, gj[2]));
            cd.bits[(static_cast<std::size_t>(y) << n) | x] = static_cast<std::uint8_t>(
                F.trace_bit(F.mul(y, z)) ^ (t1 & t2) ^ (t1 & t3) ^ (t2 & t3));
        }
    }
    out.dual_closed_form = cd;
    require(out.cert.dual.bits == cd.bits, errc::DualMismatch,
            "spectrum dual differs from the derived closed form");
    return out;
}

// ---------------------------------------------------------------------------
// Algebraic normal form
// ---------------------------------------------------------------------------

/// Binary Moebius transform; the output bit at index u is the ANF coefficient
/// of the monomial prod_{j in u} x_j.
inline BooleanFunction anf(const BooleanFunction& f) {
    BooleanFunction a = f;
    for (std::size_t h = 1; h < a.bits.size(); h <<= 1)
        for (std::size_t i = 0; i < a.bits.size(); i += 2 * h)
            for (std::size_t j = i; j < i + h; ++j) a.bits[j + h] ^= a.bits[j];
    return a;
}

inline unsigned algebraic_degree(const BooleanFunction& f) {
    BooleanFunction a = anf(f);
    unsigned deg = 0;
    for (std::size_t u = 0; u < a.bits.size(); ++u)
        if (a.bits[u]) deg = std::max(deg, static_cast<unsigned>(std::popcount(u)));
    return deg;
}

}  // namespace frobent
