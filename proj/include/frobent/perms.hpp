/**************************************************************************
 * perms.hpp
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

#include <array>
#include <cstdint>
#include <vector>

#include "translators.hpp"

namespace frobent {

/// GF(p^k)-linear map L(x) = sum_j lambda_j x^{p^{kj}} with r = n/k terms.
/// Additivity and GF(p^k)-homogeneity hold for any coefficient choice; maps
/// used with the subspace-permutation equivalence must additionally have all
/// coefficients inside GF(p^k) (see coeffs_in_subfield).
struct LinearizedMap {
    FieldPtr field;
    unsigned k = 0;
    std::vector<felt> lambdas;

    felt apply(felt x) const {
        const Field& F = *field;
        felt acc = 0;
        felt term = x;
        for (std::size_t j = 0; j < lambdas.size(); ++j) {
            acc = F.add(acc, F.mul(lambdas[j], term));
            term = F.frobenius(term, k);
        }
        return acc;
    }

    bool coeffs_in_subfield() const {
        for (felt l : lambdas)
            if (!field->in_subfield(l, k)) return false;
        return true;
    }
};

inline LinearizedMap make_linmap(FieldPtr field, unsigned k, std::vector<felt> lambdas) {
    require(k >= 1 && field->n() % k == 0, errc::NonDivisorK, "k must divide n");
    require(lambdas.size() == field->n() / k, errc::DegreeMismatch,
            "a GF(p^k)-linearized map over GF(p^n) has n/k coefficients");
    return LinearizedMap{std::move(field), k, std::move(lambdas)};
}

inline LinearizedMap identity_linmap(FieldPtr field, unsigned k) {
    std::vector<felt> l(field->n() / k, 0);
    l[0] = 1;
    return make_linmap(std::move(field), k, std::move(l));
}

/// Evaluation table of a map GF(p^n) -> GF(p^n); `certified` is set only
/// after is_permutation verified bijectivity by occupancy scan.
struct PermTable {
    FieldPtr field;
    std::vector<felt> values;
    bool certified = false;

    felt operator()(felt x) const { return values[x]; }
};

template <typename Fn>
PermTable make_perm_candidate(FieldPtr field, Fn&& fn) {
    PermTable t;
    t.field = std::move(field);
    t.values.resize(t.field->q());
    for (felt x = 0; x < t.field->q(); ++x) t.values[x] = fn(x);
    return t;
}

/// Occupancy-scan bijectivity check; certifies the table on success.
inline bool is_permutation(PermTable& t) {
    std::vector<std::uint8_t> seen(t.field->q(), 0);
    for (felt v : t.values) {
        if (seen[v]) return false;
        seen[v] = 1;
    }
    t.certified = true;
    return true;
}

inline PermTable certify(PermTable t) {
    require(is_permutation(t), errc::NotAPermutation, "table is not a bijection");
    return t;
}

inline PermTable invert_perm(const PermTable& t) {
    require(t.certified, errc::NotAPermutation, "cannot invert an uncertified table");
    PermTable r;
    r.field = t.field;
    r.values.resize(t.values.size());
    for (felt x = 0; x < t.values.size(); ++x) r.values[t.values[x]] = x;
    r.certified = true;
    return r;
}

inline PermTable linmap_table(const LinearizedMap& L) {
    return make_perm_candidate(L.field, [&](felt x) { return L.apply(x); });
}

/// Kernel test: an additive map is bijective iff only 0 maps to 0.
inline bool linmap_is_permutation(const LinearizedMap& L) {
    const Field& F = *L.field;
    for (felt x = 1; x < F.q(); ++x)
        if (L.apply(x) == 0) return false;
    return true;
}

inline PermTable linmap_invert(const LinearizedMap& L) {
    require(linmap_is_permutation(L), errc::SingularMap, "linearized map has nontrivial kernel");
    PermTable t = linmap_table(L);
    t.certified = true;
    return invert_perm(t);
}

// ---------------------------------------------------------------------------
// Permutations from translators
// ---------------------------------------------------------------------------

/// G(x) = L(x)^{p^i} + L(gamma)^{p^i} h(f(x)) for an (i, b)-translator gamma
/// of f. G permutes GF(p^n) iff u -> u + b h(u) permutes GF(p^k); both sides
/// of that equivalence are computed on every call and any disagreement raises
/// InternalInconsistency. The returned table is certified iff they hold.
inline PermTable build_perm_frobenius(const LinearizedMap& L, const TranslatorWitness& w,
                                      const FunctionTable& h, const FunctionTable& f) {
    const Field& F = *f.field;
    require(L.field->same(F) && h.field->same(F), errc::MixedFields, "mismatched fields");
    require(h.domain_k == w.k && h.codomain_k == w.k, errc::CodomainMismatch,
            "h must map GF(p^k) to GF(p^k)");
    require(linmap_is_permutation(L), errc::SingularMap, "L must be a permutation");
    require(check_translator(f, w), errc::NotATranslator, "witness failed verification");

    PermTable G = make_perm_candidate(f.field, [&](felt x) {
        felt lx = F.frobenius(L.apply(x), w.i);
        felt lg = F.frobenius(L.apply(w.gamma), w.i);
        return F.add(lx, F.mul(lg, h.at(f.values[x])));
    });
    bool g_permutes = [&] {
        const auto& sub = F.subfield(w.k).elements;
        std::vector<std::uint8_t> seen(sub.size(), 0);
        for (std::size_t pos = 0; pos < sub.size(); ++pos) {
            felt v = F.add(sub[pos], F.mul(w.b, h.at_pos(pos)));
            std::size_t vp = F.subfield_pos(v, w.k);
            if (seen[vp]) return false;
            seen[vp] = 1;
        }
        return true;
    }();
    bool G_permutes = is_permutation(G);
    require(g_permutes == G_permutes, errc::InternalInconsistency,
            "permutation equivalence violated");
    G.certified = G_permutes;
    return G;
}

/// h with u + b h(u) = g(u), i.e. h(u) = (g(u) - u) / b.
inline FunctionTable make_h_from_g(const FunctionTable& g, felt b) {
    require(b != 0, errc::ZeroB, "b must be nonzero");
    require(is_subfield_permutation(g), errc::NotAPermutationG, "g must permute GF(p^k)");
    const Field& F = *g.field;
    FunctionTable h = g;
    const auto& el = g.domain();
    for (std::size_t pos = 0; pos < el.size(); ++pos)
        h.values[pos] = F.div(F.sub(g.values[pos], el[pos]), b);
    return h;
}

/// phi(x) = L(x) + L(gamma) (g(f(x)) + f(x)/a)^{2^{n-i}} together with its
/// closed-form inverse; p = 2 and the witness value a must be nonzero. The
/// inverse scalar follows the derivation that actually composes to the
/// identity, a^{-2^{n-i}}, and the composition is verified on every build.
struct PermPair {
    PermTable phi;
    PermTable phi_inv;
};

inline PermPair build_perm_pair(const LinearizedMap& L, const TranslatorWitness& w,
                                const FunctionTable& g, const FunctionTable& f) {
    const Field& F = *f.field;
    require(F.p() == 2, errc::OddCharacteristic, "construction is stated for p = 2");
    felt a = w.b;
    require(a != 0, errc::ZeroA, "witness value a must be nonzero");
    require(g.domain_k == w.k && g.codomain_k == w.k, errc::CodomainMismatch,
            "g must map GF(p^k) to GF(p^k)");
    require(check_translator(f, w), errc::NotATranslator, "witness failed verification");
    require(is_subfield_permutation(g), errc::NotAPermutationG, "g must permute GF(p^k)");
    PermTable Linv = linmap_invert(L);
    FunctionTable ginv = invert_subfield_perm(g);

    unsigned n = F.n();
    unsigned i = w.i;
    PermTable phi = make_perm_candidate(f.field, [&](felt x) {
        felt fx = f.values[x];
        felt base = F.add(g.at(fx), F.div(fx, a));
        return F.add(L.apply(x), F.mul(L.apply(w.gamma), F.frobenius(base, n - i)));
    });
    felt a_scale = F.inv(F.frobenius(a, n - i));
    PermTable phi_inv = make_perm_candidate(f.field, [&](felt x) {
        felt z = Linv(x);
        felt fz = f.values[z];
        felt base = F.add(fz, ginv.at(F.div(fz, a)));
        return F.add(z, F.mul(F.mul(w.gamma, a_scale), F.frobenius(base, n - i)));
    });
    for (felt x = 0; x < F.q(); ++x) {
        require(phi(phi_inv(x)) == x && phi_inv(phi(x)) == x, errc::CompositionFailure,
                "phi and its closed-form inverse do not compose to the identity");
    }
    phi.certified = true;
    phi_inv.certified = true;
    return {std::move(phi), std::move(phi_inv)};
}

/// Condition on three pairwise distinct permutations: their pointwise sum
/// permutes and its inverse equals the pointwise sum of their inverses.
inline bool an_condition(const PermTable& p1, const PermTable& p2, const PermTable& p3) {
    const Field& F = *p1.field;
    require(p2.field->same(F) && p3.field->same(F), errc::MixedFields, "mismatched fields");
    require(p1.certified && p2.certified && p3.certified, errc::NotAPermutation,
            "all three tables must be certified permutations");
    require(p1.values != p2.values && p1.values != p3.values && p2.values != p3.values,
            errc::NotDistinct, "permutations must be pairwise distinct");
    PermTable psi = make_perm_candidate(p1.field, [&](felt x) {
        return F.add(F.add(p1(x), p2(x)), p3(x));
    });
    if (!is_permutation(psi)) return false;
    PermTable psi_inv = invert_perm(psi);
    PermTable i1 = invert_perm(p1), i2 = invert_perm(p2), i3 = invert_perm(p3);
    for (felt x = 0; x < F.q(); ++x)
        if (psi_inv(x) != F.add(F.add(i1(x), i2(x)), i3(x))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Subspace permutations (odd characteristic, n = 2k)
// ---------------------------------------------------------------------------

/// S = ker T^n_k, computed twice: as the trace kernel and as the image
/// {beta - beta^{p^k}}; the two must agree.
inline std::vector<felt> trace_zero_subspace(const Field& F, unsigned k) {
    require(F.n() == 2 * k, errc::NNotTwoK, "subspace is defined for n = 2k");
    std::vector<felt> ker;
    for (felt y = 0; y < F.q(); ++y)
        if (F.trace(y, k) == 0) ker.push_back(y);
    std::vector<felt> img;
    for (felt b = 0; b < F.q(); ++b) img.push_back(F.sub(b, F.frobenius(b, k)));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    require(ker == img, errc::InternalInconsistency,
            "trace kernel and difference image disagree");
    return ker;
}

/// F(x) = L(x) + (x^{p^k} - x + delta)^s versus G(y) = -L(y) + (y+delta)^s -
/// (y+delta)^{p^k s} restricted to S: the two permutation properties are
/// equivalent, and this builder checks the equivalence on every call. When
/// p^k s ≡ s (mod p^n - 1), F is additionally asserted to be a permutation.
struct SubspaceEquivalence {
    PermTable F;
    std::vector<felt> S;
    std::vector<felt> G_on_S;
    bool F_permutes = false;
    bool G_permutes = false;
    bool equivalence = false;
};

inline SubspaceEquivalence subspace_perm_equivalence(const LinearizedMap& L, std::int64_t s,
                                                     felt delta) {
    const Field& F = *L.field;
    require(F.p() != 2, errc::EvenCharacteristic, "stated for odd characteristic");
    unsigned k = L.k;
    require(F.n() == 2 * k, errc::NNotTwoK, "needs n = 2k");
    require(L.coeffs_in_subfield(), errc::CoefficientOutsideSubfield,
            "L must have coefficients in GF(p^k)");
    require(linmap_is_permutation(L), errc::SingularMap, "L must be a permutation");
    require(s >= 0, errc::OddS, "exponent must be non-negative");

    SubspaceEquivalence out;
    out.S = trace_zero_subspace(F, k);
    out.F = make_perm_candidate(L.field, [&](felt x) {
        felt base = F.add(F.sub(F.frobenius(x, k), x), delta);
        return F.add(L.apply(x), F.pow(base, s));
    });
    out.F_permutes = is_permutation(out.F);
    out.F.certified = out.F_permutes;

    std::vector<std::uint8_t> seen(out.S.size(), 0);
    out.G_permutes = true;
    for (felt y : out.S) {
        felt t = F.pow(F.add(y, delta), s);
        felt g = F.add(F.neg(L.apply(y)), F.sub(t, F.frobenius(t, k)));
        out.G_on_S.push_back(g);
        auto it = std::lower_bound(out.S.begin(), out.S.end(), g);
        require(it != out.S.end() && *it == g, errc::InternalInconsistency,
                "G does not map S into S");
        std::size_t pos = static_cast<std::size_t>(it - out.S.begin());
        if (seen[pos]) out.G_permutes = false;
        seen[pos] = 1;
    }
    out.equivalence = (out.F_permutes == out.G_permutes);
    require(out.equivalence, errc::TheoremViolation,
            "subspace equivalence violated: F and G|S disagree");
    std::int64_t M = F.q() - 1;
    std::int64_t pk = 1;
    for (unsigned j = 0; j < k; ++j) pk *= F.p();
    if ((pk % M) * (s % M) % M == ((s % M) + M) % M)
        require(out.F_permutes, errc::TheoremViolation,
                "p^k s ≡ s (mod p^n - 1) but F is not a permutation");
    return out;
}

/// F(x) = L(x) + (x^{p^k} - x + delta)^s for delta in S and even s in
/// [2, p^n - 1]; always a permutation. The proof identity a^{s p^k} = a^s for
/// a in S is asserted pointwise.
inline PermTable perm_family_even_exponent(const LinearizedMap& L, std::int64_t s, felt delta) {
    const Field& F = *L.field;
    require(F.p() != 2, errc::EvenCharacteristic, "stated for odd characteristic");
    unsigned k = L.k;
    require(F.n() == 2 * k, errc::NNotTwoK, "needs n = 2k");
    require(s >= 2 && s <= static_cast<std::int64_t>(F.q()) - 1 && s % 2 == 0, errc::OddS,
            "s must be even and in [2, p^n - 1]");
    auto S = trace_zero_subspace(F, k);
    require(std::binary_search(S.begin(), S.end(), delta), errc::DeltaNotInS, "delta not in S");
    std::int64_t pk = 1;
    for (unsigned j = 0; j < k; ++j) pk *= F.p();
    for (felt a : S)
        require(F.pow(a, s * pk) == F.pow(a, s), errc::TheoremViolation,
                "even-exponent identity failed on S");
    auto eq = subspace_perm_equivalence(L, s, delta);
    require(eq.F_permutes, errc::TheoremViolation, "even-exponent family failed to permute");
    return std::move(eq.F);
}

/// F(x) = L(x) + (x^{p^k} - x + delta)^{t(p^k+1)} for arbitrary delta and
/// t >= 0; always a permutation. The proof identity x^{t(p^k+1)} =
/// x^{p^k t(p^k+1)} is asserted over the whole field.
inline PermTable perm_family_norm_exponent(const LinearizedMap& L, std::int64_t t, felt delta) {
    const Field& F = *L.field;
    require(F.p() != 2, errc::EvenCharacteristic, "stated for odd characteristic");
    unsigned k = L.k;
    require(F.n() == 2 * k, errc::NNotTwoK, "needs n = 2k");
    require(t >= 0, errc::OddS, "t must be non-negative");
    std::int64_t pk = 1;
    for (unsigned j = 0; j < k; ++j) pk *= F.p();
    std::int64_t s = t * (pk + 1);
    for (felt x = 0; x < F.q(); ++x)
        require(F.pow(x, s) == F.pow(x, s * pk), errc::TheoremViolation,
                "norm-exponent identity failed");
    auto eq = subspace_perm_equivalence(L, s, delta);
    require(eq.F_permutes, errc::TheoremViolation, "norm-exponent family failed to permute");
    return std::move(eq.F);
}

/// F(x) = x + gamma g(f(x)) for a 0-translator gamma of f; an involution in
/// characteristic 2. F∘F = id is asserted pointwise.
inline PermTable involution_from_zero_translator(const TranslatorWitness& w, const FunctionTable& g,
                                                 const FunctionTable& f) {
    const Field& F = *f.field;
    require(F.p() == 2, errc::OddCharacteristic, "involutions are stated for p = 2");
    require(w.b == 0, errc::NonzeroB, "witness must be a 0-translator");
    require(g.domain_k == w.k && g.codomain_k == w.k, errc::CodomainMismatch,
            "g must map GF(p^k) to GF(p^k)");
    require(check_translator(f, w), errc::NotATranslator, "witness failed verification");
    PermTable t = make_perm_candidate(f.field, [&](felt x) {
        return F.add(x, F.mul(w.gamma, g.at(f.values[x])));
    });
    for (felt x = 0; x < F.q(); ++x)
        require(t(t(x)) == x, errc::InvolutionFailure, "F∘F is not the identity");
    t.certified = true;
    return t;
}

}  // namespace frobent
