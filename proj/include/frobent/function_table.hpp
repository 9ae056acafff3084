/**************************************************************************
 * function_table.hpp
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

#include <functional>
#include <utility>
#include <vector>

#include "gf.hpp"

namespace frobent {

/// Explicit lookup table for a map GF(p^domain_k) -> GF(p^codomain_k), both
/// viewed inside one ambient field GF(p^n). domain_k == n is the common case
/// (a map defined on the whole field); smaller domain_k tables (e.g. the h and
/// g maps living on a subfield) are indexed by subfield position in canonical
/// order. Every stored value must lie in the codomain subfield.
struct FunctionTable {
    FieldPtr field;
    unsigned domain_k = 0;
    unsigned codomain_k = 0;
    std::vector<felt> values;

    bool full_domain() const { return domain_k == field->n(); }

    /// Value at x, where x is an element code of the ambient field lying in
    /// the domain subfield.
    felt at(felt x) const {
        if (full_domain()) return values[x];
        return values[field->subfield_pos(x, domain_k)];
    }

    felt at_pos(std::size_t pos) const { return values[pos]; }

    const std::vector<felt>& domain() const { return field->subfield(domain_k).elements; }
};

inline void validate_table(const FunctionTable& t) {
    require(t.field != nullptr, errc::ParseError, "table without field");
    require(t.domain_k >= 1 && t.field->n() % t.domain_k == 0, errc::NonDivisorK,
            "table domain is not a subfield");
    require(t.codomain_k >= 1 && t.field->n() % t.codomain_k == 0, errc::NonDivisorK,
            "table codomain is not a subfield");
    require(t.values.size() == t.field->subfield(t.domain_k).elements.size(), errc::DegreeMismatch,
            "table length does not match domain size");
    for (felt v : t.values)
        require(t.field->in_subfield(v, t.codomain_k), errc::CodomainMismatch,
                "table value outside codomain subfield");
}

/// Builds a full-domain table from a callable on element codes.
template <typename Fn>
FunctionTable make_table(FieldPtr field, unsigned codomain_k, Fn&& fn) {
    FunctionTable t;
    t.field = std::move(field);
    t.domain_k = t.field->n();
    t.codomain_k = codomain_k;
    t.values.resize(t.field->q());
    for (felt x = 0; x < t.field->q(); ++x) t.values[x] = fn(x);
    validate_table(t);
    return t;
}

/// Builds a table on the subfield GF(p^k) (both domain and codomain) from a
/// callable on element codes.
template <typename Fn>
FunctionTable make_subfield_table(FieldPtr field, unsigned k, Fn&& fn) {
    FunctionTable t;
    t.field = std::move(field);
    t.domain_k = k;
    t.codomain_k = k;
    const auto& el = t.field->subfield(k).elements;
    t.values.reserve(el.size());
    for (felt x : el) t.values.push_back(fn(x));
    validate_table(t);
    return t;
}

inline FunctionTable subfield_identity(FieldPtr field, unsigned k) {
    return make_subfield_table(std::move(field), k, [](felt x) { return x; });
}

/// True iff the table is a bijection of its (sub)field domain onto itself.
inline bool is_subfield_permutation(const FunctionTable& t) {
    if (t.codomain_k != t.domain_k) return false;
    std::vector<std::uint8_t> seen(t.values.size(), 0);
    for (felt v : t.values) {
        std::size_t pos = t.field->subfield_pos(v, t.domain_k);
        if (seen[pos]) return false;
        seen[pos] = 1;
    }
    return true;
}

inline FunctionTable invert_subfield_perm(const FunctionTable& g) {
    require(is_subfield_permutation(g), errc::NotAPermutationG,
            "table is not a permutation of its domain");
    FunctionTable r = g;
    const auto& el = g.domain();
    for (std::size_t pos = 0; pos < el.size(); ++pos)
        r.values[g.field->subfield_pos(g.values[pos], g.domain_k)] = el[pos];
    return r;
}

}  // namespace frobent
