/**************************************************************************
 * oracle_gf.hpp
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

// Test-only oracle: naive GF(p^n) arithmetic on coefficient vectors with no
// lookup tables or discrete logs. Deliberately independent of the library's
// arithmetic path so the two can cross-check each other.

#pragma once

#include <cstdint>
#include <vector>

namespace oracle {

struct NaiveGF {
    unsigned p;
    unsigned n;
    std::vector<unsigned> mod;  // little endian, degree n, monic
    std::uint32_t q;

    NaiveGF(unsigned p_, unsigned n_, std::vector<unsigned> mod_little)
        : p(p_), n(n_), mod(std::move(mod_little)) {
        q = 1;
        for (unsigned i = 0; i < n; ++i) q *= p;
    }

    std::vector<unsigned> digits(std::uint32_t a) const {
        std::vector<unsigned> d(n);
        for (unsigned j = 0; j < n; ++j) {
            d[j] = a % p;
            a /= p;
        }
        return d;
    }

    std::uint32_t code(const std::vector<unsigned>& d) const {
        std::uint32_t r = 0, w = 1;
        for (unsigned j = 0; j < n; ++j) {
            r += w * d[j];
            w *= p;
        }
        return r;
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        auto da = digits(a), db = digits(b);
        for (unsigned j = 0; j < n; ++j) da[j] = (da[j] + db[j]) % p;
        return code(da);
    }

    std::uint32_t neg(std::uint32_t a) const {
        auto d = digits(a);
        for (unsigned j = 0; j < n; ++j) d[j] = (p - d[j]) % p;
        return code(d);
    }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        auto da = digits(a), db = digits(b);
        std::vector<unsigned> prod(2 * n, 0);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        for (unsigned i = 2 * n - 1; i >= n; --i) {
            unsigned c = prod[i];
            if (c) {
                prod[i] = 0;
                for (unsigned j = 0; j <= n; ++j)
                    prod[i - n + j] = (prod[i - n + j] + (p - 1) * c % p * mod[j]) % p;
            }
            if (i == n) break;
        }
        prod.resize(n);
        return code(prod);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    std::uint32_t frob(std::uint32_t a, unsigned i) const {
        std::uint64_t e = 1;
        for (unsigned j = 0; j < i; ++j) e *= p;
        return pow(a, e);
    }

    std::uint32_t trace(std::uint32_t a, unsigned k) const {
        std::uint32_t t = 0, term = a;
        for (unsigned j = 0; j < n / k; ++j) {
            t = add(t, term);
            term = frob(term, k);
        }
        return t;
    }
};

}  // namespace oracle
