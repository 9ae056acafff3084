/**************************************************************************
 * translators.hpp
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

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "function_table.hpp"

namespace frobent {

/// Witness that gamma is an (i, b)-Frobenius translator of some map
/// f: GF(p^n) -> GF(p^k), i.e. f(x + u*gamma) - f(x) = u^{p^i} * b for all x
/// in GF(p^n) and all u in GF(p^k). The index i is normalized into [0, k)
/// (u^{p^i} only depends on i mod k for u in the subfield); i = 0 is a
/// classical linear translator.
struct TranslatorWitness {
    felt gamma = 0;
    unsigned i = 0;
    felt b = 0;
    unsigned k = 0;

    TranslatorWitness() = default;
    TranslatorWitness(const Field& fld, unsigned k_, felt gamma_, std::int64_t i_, felt b_)
        : gamma(gamma_), b(b_), k(k_) {
        require(k_ >= 1 && fld.n() % k_ == 0, errc::NonDivisorK, "witness k must divide n");
        require(gamma_ != 0, errc::ZeroGamma, "gamma must be nonzero");
        require(fld.in_subfield(b_, k_), errc::ScalarOutsideSubfield, "b must lie in GF(p^k)");
        i = static_cast<unsigned>(((i_ % k_) + k_) % k_);
    }
};

/// Exhaustive check of the translator identity over all p^n * p^k pairs.
inline bool check_translator(const FunctionTable& f, const TranslatorWitness& w) {
    require(f.full_domain(), errc::DegreeMismatch, "f must be defined on the whole field");
    require(f.codomain_k == w.k, errc::CodomainMismatch, "witness k differs from f codomain");
    require(w.gamma != 0, errc::ZeroGamma, "gamma must be nonzero");
    const Field& F = *f.field;
    std::int64_t pi = 1;
    for (unsigned j = 0; j < w.i; ++j) pi *= F.p();
    for (felt u : F.subfield(w.k).elements) {
        felt rhs = F.mul(F.pow(u, pi), w.b);
        felt ug = F.mul(u, w.gamma);
        for (felt x = 0; x < F.q(); ++x)
            if (F.sub(f.values[F.add(x, ug)], f.values[x]) != rhs) return false;
    }
    return true;
}

/// All translators of f, sorted by (dlog(gamma), i). Complete: for each
/// (gamma, i) the candidate b is forced by the identity at (x, u) = (0, 1),
/// namely b = f(gamma) - f(0), so no witness outside the scan exists.
inline std::vector<TranslatorWitness> find_translators(const FunctionTable& f) {
    require(f.full_domain(), errc::DegreeMismatch, "f must be defined on the whole field");
    const Field& F = *f.field;
    unsigned k = f.codomain_k;
    std::vector<TranslatorWitness> out;
    for (felt g = 1; g < F.q(); ++g) {
        felt b = F.sub(f.values[g], f.values[0]);
        for (unsigned i = 0; i < k; ++i) {
            TranslatorWitness w(F, k, g, i, b);
            if (check_translator(f, w)) out.push_back(w);
        }
    }
    std::sort(out.begin(), out.end(), [&](const TranslatorWitness& a, const TranslatorWitness& b2) {
        auto da = F.dlog(a.gamma), db = F.dlog(b2.gamma);
        return da != db ? da < db : a.i < b2.i;
    });
    return out;
}

/// (gamma1, i, b1) + (gamma2, i, b2) -> (gamma1 + gamma2, i, b1 + b2).
inline TranslatorWitness translator_sum(const TranslatorWitness& w1, const TranslatorWitness& w2,
                                        const FunctionTable& f) {
    require(w1.i == w2.i && w1.k == w2.k, errc::MismatchedFrobeniusIndex,
            "witnesses have different Frobenius indices");
    const Field& F = *f.field;
    felt g = F.add(w1.gamma, w2.gamma);
    require(g != 0, errc::ZeroGamma, "gamma1 + gamma2 = 0");
    TranslatorWitness w(F, w1.k, g, w1.i, F.add(w1.b, w2.b));
    require(check_translator(f, w), errc::InternalInconsistency, "sum witness failed verification");
    return w;
}

/// (gamma, i, b) scaled by c in GF(p^k)^* -> (c*gamma, i, c^{p^i} * b).
inline TranslatorWitness translator_scale(const TranslatorWitness& w, felt c, const FunctionTable& f) {
    const Field& F = *f.field;
    require(c != 0 && F.in_subfield(c, w.k), errc::ScalarOutsideSubfield,
            "scalar must be a nonzero element of GF(p^k)");
    std::int64_t pi = 1;
    for (unsigned j = 0; j < w.i; ++j) pi *= F.p();
    TranslatorWitness r(F, w.k, F.mul(c, w.gamma), w.i, F.mul(F.pow(c, pi), w.b));
    require(check_translator(f, r), errc::InternalInconsistency, "scaled witness failed verification");
    return r;
}

// ---------------------------------------------------------------------------
// Families of maps with known translators
// ---------------------------------------------------------------------------

/// f(x) = T^n_k(x^{2^{l k}+1}) over GF(2^n), n = rk. Exactly the gammas fixed
/// by the 2lk-th Frobenius power admit a witness, namely (gamma, 1, b) with
/// b = T^n_k(gamma^{2^{l k}+1}).
struct TracePowerFamily {
    FunctionTable f;
    unsigned k = 0;
    unsigned ell = 0;
    std::vector<felt> admissible;  // nonzero gamma with gamma^{2^{2lk}} = gamma

    TranslatorWitness witness(felt gamma) const {
        const Field& F = *f.field;
        std::int64_t e = (static_cast<std::int64_t>(1) << (ell * k)) + 1;
        return TranslatorWitness(F, k, gamma, 1, F.trace(F.pow(gamma, e), k));
    }
};

inline TracePowerFamily family_trace_power(FieldPtr field, unsigned k, unsigned ell) {
    require(field->p() == 2, errc::OddCharacteristic, "family is defined for p = 2");
    require(k >= 1 && field->n() % k == 0, errc::NonDivisorK, "k must divide n");
    unsigned r = field->n() / k;
    require(ell >= 1 && ell <= r - 1, errc::BadL, "l must lie in [1, r-1]");
    TracePowerFamily fam;
    fam.k = k;
    fam.ell = ell;
    std::int64_t e = (static_cast<std::int64_t>(1) << (ell * k)) + 1;
    const Field& F = *field;
    fam.f = make_table(field, k, [&](felt x) { return F.trace(F.pow(x, e), k); });
    for (felt g = 1; g < F.q(); ++g)
        if (F.frobenius(g, 2 * ell * k) == g) fam.admissible.push_back(g);
    return fam;
}

/// f(x) = x^{p^{i'}} + x^{p^{i'+n/2}} onto GF(p^{n/2}); every nonzero gamma is
/// an (i', gamma^{p^{i'}} + gamma^{p^{i'+n/2}}) translator.
struct BinomialFamily {
    FunctionTable f;
    unsigned i_prime = 0;

    TranslatorWitness witness(felt gamma) const {
        const Field& F = *f.field;
        unsigned k = f.codomain_k;
        felt b = F.add(F.frobenius(gamma, i_prime), F.frobenius(gamma, i_prime + k));
        return TranslatorWitness(F, k, gamma, i_prime, b);
    }
};

inline BinomialFamily family_binomial(FieldPtr field, unsigned i_prime) {
    require(field->n() % 2 == 0, errc::OddN, "binomial family needs even n");
    unsigned k = field->n() / 2;
    BinomialFamily fam;
    fam.i_prime = i_prime % k;
    const Field& F = *field;
    fam.f = make_table(field, k, [&](felt x) {
        return F.add(F.frobenius(x, i_prime), F.frobenius(x, i_prime + k));
    });
    return fam;  // make_table validates that every value lies in GF(p^{n/2})
}

/// f(x) = T^n_k(x) + T^n_{2k}(x) for n = 4k, valued in GF(p^{2k}). For p = 2
/// every nonzero gamma is a (k, gamma^{p^k} + gamma^{p^{3k}}) translator; for
/// odd p exactly the gammas with gamma + gamma^{p^{2k}} = 0 are 0-translators.
struct DoubleTraceFamily {
    FunctionTable f;
    unsigned k = 0;
    std::vector<TranslatorWitness> witnesses;
};

inline DoubleTraceFamily family_double_trace(FieldPtr field, unsigned k) {
    require(field->n() == 4 * k, errc::NNotFourK, "family needs n = 4k");
    DoubleTraceFamily fam;
    fam.k = k;
    const Field& F = *field;
    fam.f = make_table(field, 2 * k, [&](felt x) { return F.add(F.trace(x, k), F.trace(x, 2 * k)); });
    for (felt g = 1; g < F.q(); ++g) {
        if (F.p() == 2) {
            felt b = F.add(F.frobenius(g, k), F.frobenius(g, 3 * k));
            fam.witnesses.emplace_back(F, 2 * k, g, k, b);
        } else if (F.add(g, F.frobenius(g, 2 * k)) == 0) {
            fam.witnesses.emplace_back(F, 2 * k, g, 0, 0);
        }
    }
    return fam;
}

// ---------------------------------------------------------------------------
// Quadratic trace maps f(x) = T^n_k(beta x^{p^i + p^{i+kl}})
// ---------------------------------------------------------------------------

inline FunctionTable quad_trace_table(FieldPtr field, unsigned k, felt beta, unsigned i, unsigned l) {
    const Field& F = *field;
    std::int64_t pi = 1, pj = 1;
    for (unsigned j = 0; j < i; ++j) pi *= F.p();
    for (unsigned j = 0; j < i + k * l; ++j) pj *= F.p();
    return make_table(field, k, [&](felt x) { return F.trace(F.mul(beta, F.pow(x, pi + pj)), k); });
}

/// The x-independence condition for the derivative of the quadratic trace
/// map: beta * gamma^{p^{i+lk}} + beta^{p^{(r-l)k}} * gamma^{p^{i+(r-l)k}} = 0.
inline bool quad_trace_condition(const Field& F, unsigned k, felt beta, felt gamma, unsigned i,
                                 unsigned l) {
    require(k >= 1 && F.n() % k == 0, errc::NonDivisorK, "k must divide n");
    unsigned r = F.n() / k;
    require(l >= 1 && l < r, errc::BadL, "l must lie in (0, r)");
    require(beta != 0 && gamma != 0, errc::ZeroGamma, "beta and gamma must be nonzero");
    felt lhs = F.add(F.mul(beta, F.frobenius(gamma, i + l * k)),
                     F.mul(F.frobenius(beta, (r - l) * k), F.frobenius(gamma, i + (r - l) * k)));
    return lhs == 0;
}

/// All exponents b with quad_trace_condition(alpha^b, alpha^a) true, found by
/// solving the defining congruence and filtering each candidate against the
/// condition itself; the closed form is never trusted unverified.
inline std::vector<std::int64_t> solve_beta_exponent_all(const Field& F, unsigned k, std::int64_t a,
                                                         unsigned i, unsigned l) {
    unsigned r = F.n() / k;
    require(l >= 1 && l < r, errc::BadL, "l must lie in (0, r)");
    const std::int64_t M = F.q() - 1;
    auto pmod = [&](unsigned e) {
        std::int64_t v = 1;
        for (unsigned j = 0; j < e; ++j) v = v * F.p() % M;
        return v;
    };
    std::vector<std::int64_t> found;
    felt gamma = F.from_dlog(static_cast<std::uint64_t>(((a % M) + M) % M));
    if (F.p() == 2) {
        std::int64_t b = (-a % M + M) % M;
        b = b * pmod(i + l * k) % M;
        b = b * ((pmod((r - l) * k) + 1) % M) % M;
        found.push_back(b);
    } else {
        // 2 b (1 - p^{(r-l)k}) ≡ 2 a p^{i+lk} (p^{2(r-l)k} - 1)  (mod p^n - 1)
        std::int64_t A = 2 * ((1 - pmod((r - l) * k)) % M + M) % M;
        std::int64_t C = 2 * ((a % M) + M) % M;
        C = C * pmod(i + l * k) % M;
        C = C * ((pmod(2 * (r - l) * k) - 1 + M) % M) % M;
        std::int64_t g = std::gcd(A == 0 ? M : A, M);
        if (C % g != 0) return {};
        std::int64_t M2 = M / g;
        std::int64_t b0 = 0;
        if (M2 > 1) {
            std::int64_t Ainv = static_cast<std::int64_t>(
                detail::mod_inverse(static_cast<std::uint64_t>(((A / g) % M2 + M2) % M2),
                                    static_cast<std::uint64_t>(M2)));
            b0 = (C / g) % M2 * Ainv % M2;
        }
        for (std::int64_t t = 0; t < g; ++t) found.push_back((b0 + t * M2) % M);
    }
    std::vector<std::int64_t> verified;
    for (std::int64_t b : found)
        if (quad_trace_condition(F, k, F.from_dlog(static_cast<std::uint64_t>(b)), gamma, i, l))
            verified.push_back(b);
    std::sort(verified.begin(), verified.end());
    verified.erase(std::unique(verified.begin(), verified.end()), verified.end());
    return verified;
}

/// For p = 2 the closed form b = -a p^{i+lk} (p^{(r-l)k} + 1) mod (p^n - 1),
/// post-verified; for odd p the smallest verified solution of the congruence.
inline std::int64_t solve_beta_exponent(const Field& F, unsigned k, std::int64_t a, unsigned i,
                                        unsigned l) {
    auto all = solve_beta_exponent_all(F, k, a, i, l);
    if (F.p() == 2) {
        require(!all.empty(), errc::InternalInconsistency,
                "closed-form exponent failed post-verification");
        return all.front();
    }
    require(!all.empty(), errc::NoSolution, "no exponent satisfies the condition for this a");
    return all.front();
}

/// Translator of the quadratic trace map once the x-independence condition
/// holds: (gamma, i+1, T^n_k(beta gamma^{p^i+p^{i+lk}})) for p = 2; for odd p
/// a 0-translator when that trace vanishes and no translator otherwise.
inline std::optional<TranslatorWitness> quad_trace_translator(FieldPtr field, unsigned k, felt beta,
                                                              felt gamma, unsigned i, unsigned l) {
    const Field& F = *field;
    require(quad_trace_condition(F, k, beta, gamma, i, l), errc::ConditionNotSatisfied,
            "beta and gamma do not satisfy the derivative condition");
    std::int64_t pi = 1, pj = 1;
    for (unsigned j = 0; j < i; ++j) pi *= F.p();
    for (unsigned j = 0; j < i + k * l; ++j) pj *= F.p();
    felt bval = F.trace(F.mul(beta, F.pow(gamma, pi + pj)), k);
    FunctionTable f = quad_trace_table(field, k, beta, i, l);
    if (F.p() == 2) {
        TranslatorWitness w(F, k, gamma, static_cast<std::int64_t>(i) + 1, bval);
        require(check_translator(f, w), errc::InternalInconsistency,
                "quadratic trace witness failed verification");
        return w;
    }
    if (bval != 0) return std::nullopt;
    TranslatorWitness w(F, k, gamma, 0, 0);
    require(check_translator(f, w), errc::InternalInconsistency,
            "odd-characteristic 0-translator failed verification");
    return w;
}

}  // namespace frobent
