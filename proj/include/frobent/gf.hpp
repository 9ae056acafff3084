/**************************************************************************
 * gf.hpp
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
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <vector>

#include "errors.hpp"

namespace frobent {

/// Element code of GF(p^n): the coefficient vector (c_0, ..., c_{n-1}) in the
/// polynomial basis 1, X, ..., X^{n-1}, read as a base-p integer with c_0 as
/// the least significant digit. Canonical element order is code order.
using felt = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// The subfield GF(p^k) inside GF(p^n), materialized as the fixed points of
/// the k-th Frobenius power, listed in canonical order.
struct SubfieldView {
    unsigned k = 0;
    std::vector<felt> elements;
};

namespace detail {

inline bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            fs.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) fs.push_back(v);
    return fs;
}

/// Dense little-endian coefficient vectors over GF(p); construction-time only.
struct PolyCtx {
    unsigned p;
    unsigned n;
    std::vector<unsigned> mod;  // size n+1, monic

    // products go through 64-bit: p alone can approach 2^20 when n = 1
    std::vector<unsigned> mul(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
        std::vector<unsigned> prod(2 * n, 0);
        for (unsigned i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            for (unsigned j = 0; j < b.size(); ++j)
                prod[i + j] = static_cast<unsigned>(
                    (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
        }
        for (unsigned i = 2 * n - 1; i >= n; --i) {
            unsigned c = prod[i];
            if (!c) continue;
            prod[i] = 0;
            for (unsigned j = 0; j <= n; ++j) {
                unsigned& t = prod[i - n + j];
                t = static_cast<unsigned>(
                    (t + static_cast<std::uint64_t>(p - c) * mod[j]) % p);  // t -= c*mod[j]
            }
            if (i == n) break;
        }
        prod.resize(n);
        return prod;
    }

    std::vector<unsigned> pow(std::vector<unsigned> base, std::uint64_t e) const {
        std::vector<unsigned> r(n, 0);
        r[0] = 1;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    std::vector<unsigned> x() const {
        std::vector<unsigned> v(n, 0);
        if (n == 1)
            v[0] = (p - mod[0] % p) % p;  // X ≡ -c_0 (mod X + c_0)
        else
            v[1] = 1;
        return v;
    }
};

inline int poly_deg(const std::vector<unsigned>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
        if (v[i]) return i;
    return -1;
}

inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(m), newr = static_cast<std::int64_t>(a % m);
    while (newr != 0) {
        std::int64_t q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (r != 1) raise(errc::InternalInconsistency, "mod_inverse of non-unit");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(m) : t);
}

// gcd(a, mod) == constant, over GF(p)
inline bool poly_coprime(unsigned p, std::vector<unsigned> a, std::vector<unsigned> b) {
    while (true) {
        int db = poly_deg(b);
        if (db < 0) return poly_deg(a) == 0;
        if (db == 0) return true;
        int da = poly_deg(a);
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        unsigned c = static_cast<unsigned>(static_cast<std::uint64_t>(a[da]) *
                                           mod_inverse(b[db], p) % p);
        for (int j = 0; j <= db; ++j)
            a[da - db + j] = static_cast<unsigned>(
                (a[da - db + j] + static_cast<std::uint64_t>(p - c) * b[j]) % p);
    }
}

/// Deterministic irreducibility test: X^{p^n} ≡ X (mod f) together with
/// gcd(X^{p^{n/d}} - X, f) = 1 for every prime d | n.
inline bool is_irreducible(unsigned p, unsigned n, const std::vector<unsigned>& mod) {
    if (n == 1) return true;
    PolyCtx ctx{p, n, mod};
    auto xx = ctx.x();
    std::uint64_t q = 1;
    for (unsigned i = 0; i < n; ++i) q *= p;
    if (ctx.pow(ctx.x(), q) != xx) return false;
    for (std::uint64_t d : prime_factors(n)) {
        std::uint64_t e = 1;
        for (unsigned i = 0; i < n / d; ++i) e *= p;
        auto xpm = ctx.pow(ctx.x(), e);
        std::vector<unsigned> diff(n);
        for (unsigned j = 0; j < n; ++j) diff[j] = (xpm[j] + (p - 1) * xx[j]) % p;
        if (!poly_coprime(p, diff, mod)) return false;
    }
    return true;
}

}  // namespace detail

/// A concrete model of GF(p^n): validated modulus, a primitive element alpha,
/// and eagerly built log/antilog tables. Immutable after construction and safe
/// to share across threads; every operation is a pure function of its inputs.
class Field {
  public:
    static constexpr std::uint64_t max_order = 1u << 20;  // desk-scale guard

    /// Constructs GF(p^n) with an explicit monic modulus (coefficients most
    /// significant first, n+1 of them) and optionally a fixed alpha code.
    static FieldPtr make(unsigned p, unsigned n, const std::vector<unsigned>& modulus_msb,
                         std::optional<felt> alpha = std::nullopt) {
        return FieldPtr(new Field(p, n, modulus_msb, alpha));
    }

    /// AUTO construction: picks the lexicographically smallest monic
    /// irreducible modulus of degree n whose root X is primitive, falling back
    /// to the smallest irreducible modulus plus a separately found primitive
    /// element if no such polynomial exists.
    static FieldPtr make(unsigned p, unsigned n) {
        check_p_n(p, n);
        std::uint64_t q = order_of(p, n);
        std::optional<std::vector<unsigned>> first_irreducible;
        for (std::uint64_t rest = 0; rest < q; ++rest) {
            std::vector<unsigned> mod(n + 1, 0);
            std::uint64_t v = rest;
            for (unsigned j = 0; j < n; ++j) {
                mod[j] = static_cast<unsigned>(v % p);
                v /= p;
            }
            mod[n] = 1;
            if (!detail::is_irreducible(p, n, mod)) continue;
            if (!first_irreducible) first_irreducible = mod;
            if (x_is_primitive(p, n, mod)) {
                std::vector<unsigned> msb(mod.rbegin(), mod.rend());
                return make(p, n, msb);
            }
        }
        if (!first_irreducible) raise(errc::InternalInconsistency, "no irreducible modulus found");
        std::vector<unsigned> msb(first_irreducible->rbegin(), first_irreducible->rend());
        return make(p, n, msb);
    }

    unsigned p() const { return p_; }
    unsigned n() const { return n_; }
    std::uint32_t q() const { return q_; }
    felt alpha() const { return alpha_; }

    /// Modulus coefficients, most significant first (c_n ... c_0).
    std::vector<unsigned> modulus() const { return {mod_.rbegin(), mod_.rend()}; }

    bool same(const Field& o) const { return p_ == o.p_ && n_ == o.n_ && mod_ == o.mod_; }

    // ---- arithmetic on element codes ----

    felt add(felt a, felt b) const {
        if (p_ == 2) return a ^ b;
        felt r = 0;
        std::uint32_t w = 1;
        for (unsigned j = 0; j < n_; ++j) {
            unsigned da = a % p_, db = b % p_;
            r += w * ((da + db) % p_);
            a /= p_;
            b /= p_;
            w *= p_;
        }
        return r;
    }

    felt neg(felt a) const {
        if (p_ == 2) return a;
        felt r = 0;
        std::uint32_t w = 1;
        for (unsigned j = 0; j < n_; ++j) {
            unsigned da = a % p_;
            r += w * ((p_ - da) % p_);
            a /= p_;
            w *= p_;
        }
        return r;
    }

    felt sub(felt a, felt b) const { return p_ == 2 ? a ^ b : add(a, neg(b)); }

    felt mul(felt a, felt b) const {
        if (a == 0 || b == 0) return 0;
        std::uint64_t e = static_cast<std::uint64_t>(log_[a]) + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return antilog_[e];
    }

    felt inv(felt a) const {
        require(a != 0, errc::DivisionByZero, "inverse of zero");
        return antilog_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }

    felt div(felt a, felt b) const {
        require(b != 0, errc::DivisionByZero, "division by zero");
        if (a == 0) return 0;
        std::uint64_t e = static_cast<std::uint64_t>(log_[a]) + (q_ - 1 - log_[b]);
        if (e >= q_ - 1) e -= q_ - 1;
        return antilog_[e];
    }

    /// x^e for any integer exponent; for nonzero x the exponent is reduced
    /// modulo p^n - 1. 0^0 = 1, 0^e = 0 for e > 0, 0^e errors for e < 0.
    felt pow(felt a, std::int64_t e) const {
        if (a == 0) {
            if (e == 0) return one();
            require(e > 0, errc::DivisionByZero, "zero raised to a negative power");
            return 0;
        }
        std::int64_t m = q_ - 1;
        std::int64_t r = ((static_cast<std::int64_t>(log_[a]) * (e % m)) % m + m) % m;
        return antilog_[r];
    }

    /// x^{p^i}; the effective exponent is p^{i mod n}, so any integer i works.
    felt frobenius(felt a, std::int64_t i) const {
        if (a == 0) return 0;
        unsigned im = static_cast<unsigned>(((i % n_) + n_) % n_);
        std::uint64_t e = 1;
        for (unsigned j = 0; j < im; ++j) e = e * p_ % (q_ - 1);
        return antilog_[log_[a] * e % (q_ - 1)];
    }

    /// Relative trace onto GF(p^k): x + x^{p^k} + ... + x^{p^{n-k}}.
    felt trace(felt a, unsigned k) const {
        check_divisor(k);
        felt t = 0;
        felt term = a;
        for (unsigned j = 0; j < n_ / k; ++j) {
            t = add(t, term);
            term = frobenius(term, k);
        }
        return t;
    }

    /// Absolute trace as a bit; p = 2 only.
    unsigned trace_bit(felt a) const { return abs_trace_[a]; }

    const SubfieldView& subfield(unsigned k) const {
        check_divisor(k);
        for (const auto& s : subfields_)
            if (s.k == k) return s;
        raise(errc::InternalInconsistency, "subfield view missing");
    }

    bool in_subfield(felt a, unsigned k) const { return frobenius(a, k) == a; }

    /// Position of a within subfield(k).elements; the element must belong.
    std::size_t subfield_pos(felt a, unsigned k) const {
        const auto& el = subfield(k).elements;
        auto it = std::lower_bound(el.begin(), el.end(), a);
        require(it != el.end() && *it == a, errc::ScalarOutsideSubfield,
                "element not in GF(p^" + std::to_string(k) + ")");
        return static_cast<std::size_t>(it - el.begin());
    }

    std::uint32_t dlog(felt a) const {
        require(a != 0, errc::LogOfZero, "discrete log of zero");
        return log_[a];
    }

    felt from_dlog(std::uint64_t e) const { return antilog_[e % (q_ - 1)]; }

    felt one() const { return 1; }

    std::uint64_t mult_order(felt a) const {
        require(a != 0, errc::LogOfZero, "order of zero");
        return (q_ - 1) / std::gcd<std::uint64_t>(q_ - 1, log_[a]);
    }

    std::vector<unsigned> coeffs(felt a) const {
        std::vector<unsigned> d(n_);
        for (unsigned j = 0; j < n_; ++j) {
            d[j] = a % p_;
            a /= p_;
        }
        return d;
    }

    felt from_coeffs(const std::vector<unsigned>& d) const {
        require(d.size() <= n_, errc::DegreeMismatch, "too many coefficients for element");
        felt r = 0;
        std::uint32_t w = 1;
        for (unsigned j = 0; j < n_; ++j) {
            unsigned c = j < d.size() ? d[j] : 0;
            require(c < p_, errc::ParseError, "coefficient out of range");
            r += w * c;
            w *= p_;
        }
        return r;
    }

  private:
    Field(unsigned p, unsigned n, const std::vector<unsigned>& modulus_msb, std::optional<felt> alpha_code)
        : p_(p), n_(n) {
        check_p_n(p, n);
        q_ = static_cast<std::uint32_t>(order_of(p, n));
        require(modulus_msb.size() == n + 1, errc::DegreeMismatch, "modulus must have degree n");
        mod_.assign(modulus_msb.rbegin(), modulus_msb.rend());
        require(mod_[n] == 1, errc::DegreeMismatch, "modulus must be monic");
        for (unsigned c : mod_) require(c < p, errc::DegreeMismatch, "modulus coefficient out of range");
        require(detail::is_irreducible(p, n, mod_), errc::ReducibleModulus,
                "modulus is reducible over GF(p)");
        build_tables(alpha_code);
        build_subfields();
        if (p_ == 2) {
            abs_trace_.resize(q_);
            for (felt x = 0; x < q_; ++x) abs_trace_[x] = static_cast<std::uint8_t>(trace(x, 1));
        }
    }

    static std::uint64_t order_of(unsigned p, unsigned n) {
        std::uint64_t q = 1;
        for (unsigned i = 0; i < n; ++i) {
            q *= p;
            require(q <= max_order, errc::FieldTooLarge,
                    "p^n exceeds the 2^20 desk-scale guard");
        }
        return q;
    }

    static void check_p_n(unsigned p, unsigned n) {
        require(detail::is_prime(p), errc::NonPrimeP, "p must be prime");
        require(n >= 1, errc::DegreeMismatch, "n must be positive");
    }

    void check_divisor(unsigned k) const {
        require(k >= 1 && n_ % k == 0, errc::NonDivisorK,
                "k = " + std::to_string(k) + " does not divide n = " + std::to_string(n_));
    }

    static bool x_is_primitive(unsigned p, unsigned n, const std::vector<unsigned>& mod) {
        detail::PolyCtx ctx{p, n, mod};
        std::uint64_t q = order_of(p, n);
        auto one = std::vector<unsigned>(n, 0);
        one[0] = 1;
        if (ctx.x() == std::vector<unsigned>(n, 0)) return false;
        if (q == 2) return true;
        if (ctx.pow(ctx.x(), q - 1) != one) return false;
        for (std::uint64_t f : detail::prime_factors(q - 1))
            if (ctx.pow(ctx.x(), (q - 1) / f) == one) return false;
        return true;
    }

    felt code_of(const std::vector<unsigned>& v) const {
        felt r = 0;
        std::uint32_t w = 1;
        for (unsigned j = 0; j < n_; ++j) {
            r += w * v[j];
            w *= p_;
        }
        return r;
    }

    std::vector<unsigned> vec_of(felt a) const { return coeffs(a); }

    void build_tables(std::optional<felt> alpha_code) {
        detail::PolyCtx ctx{p_, n_, mod_};
        auto one_v = std::vector<unsigned>(n_, 0);
        one_v[0] = 1;
        auto fac = detail::prime_factors(q_ - 1);
        auto is_primitive = [&](felt cand) {
            if (cand == 0) return false;
            if (q_ == 2) return cand == 1;
            auto cv = vec_of(cand);
            if (ctx.pow(cv, q_ - 1) != one_v) return false;
            for (std::uint64_t f : fac)
                if (ctx.pow(cv, (q_ - 1) / f) == one_v) return false;
            return true;
        };

        if (alpha_code) {
            require(*alpha_code < q_ && is_primitive(*alpha_code), errc::NotPrimitiveAlpha,
                    "supplied alpha does not have order p^n - 1");
            alpha_ = *alpha_code;
        } else {
            felt xc = code_of(ctx.x());
            if (is_primitive(xc)) {
                alpha_ = xc;
            } else {
                alpha_ = 0;
                for (felt cand = 1; cand < q_; ++cand)
                    if (is_primitive(cand)) {
                        alpha_ = cand;
                        break;
                    }
                require(alpha_ != 0, errc::InternalInconsistency, "no primitive element found");
            }
        }

        antilog_.assign(q_ - 1, 0);
        log_.assign(q_, 0);
        auto av = vec_of(alpha_);
        auto cur = one_v;
        for (std::uint32_t j = 0; j < q_ - 1; ++j) {
            felt c = code_of(cur);
            require(j == 0 || c != 1, errc::InternalInconsistency, "alpha order below p^n - 1");
            antilog_[j] = c;
            log_[c] = j;
            cur = ctx.mul(cur, av);
        }
        require(code_of(cur) == 1, errc::InternalInconsistency, "alpha order is not p^n - 1");
    }

    void build_subfields() {
        for (unsigned k = 1; k <= n_; ++k) {
            if (n_ % k) continue;
            SubfieldView sv;
            sv.k = k;
            // fixed points of x -> x^(p^k), computed from exponents: for x != 0 the
            // condition is (p^k - 1) * log(x) ≡ 0 (mod p^n - 1)
            std::uint64_t pk = 1;
            for (unsigned j = 0; j < k; ++j) pk *= p_;
            sv.elements.push_back(0);
            for (felt x = 1; x < q_; ++x)
                if (static_cast<std::uint64_t>(log_[x]) * (pk - 1) % (q_ - 1) == 0)
                    sv.elements.push_back(x);
            std::sort(sv.elements.begin(), sv.elements.end());
            std::uint64_t expect = 1;
            for (unsigned j = 0; j < k; ++j) expect *= p_;
            require(sv.elements.size() == expect, errc::InternalInconsistency, "subfield size mismatch");
            subfields_.push_back(std::move(sv));
        }
    }

    unsigned p_;
    unsigned n_;
    std::uint32_t q_;
    std::vector<unsigned> mod_;  // little endian, size n+1
    felt alpha_ = 0;
    std::vector<std::uint32_t> log_;
    std::vector<felt> antilog_;
    std::vector<SubfieldView> subfields_;
    std::vector<std::uint8_t> abs_trace_;  // p = 2 only
};

/// Value-semantic element handle; checks field compatibility on every mixed
/// operation. Hot paths work on raw codes through Field instead.
class Element {
  public:
    Element() = default;
    Element(const Field& f, felt v) : f_(&f), v_(v) {}

    felt code() const { return v_; }
    const Field& field() const { return *f_; }
    bool is_zero() const { return v_ == 0; }

    friend Element operator+(Element a, Element b) { return {a.match(b), a.f_->add(a.v_, b.v_)}; }
    friend Element operator-(Element a, Element b) { return {a.match(b), a.f_->sub(a.v_, b.v_)}; }
    friend Element operator*(Element a, Element b) { return {a.match(b), a.f_->mul(a.v_, b.v_)}; }
    friend Element operator/(Element a, Element b) { return {a.match(b), a.f_->div(a.v_, b.v_)}; }
    Element operator-() const { return {*f_, f_->neg(v_)}; }

    Element pow(std::int64_t e) const { return {*f_, f_->pow(v_, e)}; }
    Element frobenius(std::int64_t i) const { return {*f_, f_->frobenius(v_, i)}; }
    Element trace(unsigned k) const { return {*f_, f_->trace(v_, k)}; }
    Element inv() const { return {*f_, f_->inv(v_)}; }

    friend bool operator==(const Element& a, const Element& b) {
        return a.f_->same(*b.f_) && a.v_ == b.v_;
    }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  private:
    Element(const Field* f, felt v) : f_(f), v_(v) {}
    const Field* match(const Element& o) const {
        require(f_ && o.f_ && f_->same(*o.f_), errc::MixedFields,
                "operands belong to different fields");
        return f_;
    }

    const Field* f_ = nullptr;
    felt v_ = 0;
};

}  // namespace frobent
