/**************************************************************************
 * io.hpp
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

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "bent.hpp"

namespace frobent {

namespace iodetail {

inline std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(trim(cur));
    return out;
}

inline std::int64_t to_int(const std::string& s) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    require(ec == std::errc() && p == s.data() + s.size(), errc::ParseError,
            "not an integer: '" + s + "'");
    return v;
}

}  // namespace iodetail

// ---------------------------------------------------------------------------
// Elements: canonical output is the coefficient list c_{n-1},...,c_0 (most
// significant first); input also accepts exponent notation a^<e> on alpha.
// ---------------------------------------------------------------------------

inline std::string format_element(const Field& F, felt x) {
    auto d = F.coeffs(x);  // little endian
    std::string out;
    for (unsigned j = 0; j < F.n(); ++j) {
        if (j) out += ',';
        out += std::to_string(d[F.n() - 1 - j]);
    }
    return out;
}

/// Exponent form: `0` for zero, `a^<e>` otherwise.
inline std::string format_element_exp(const Field& F, felt x) {
    if (x == 0) return "0";
    return "a^" + std::to_string(F.dlog(x));
}

inline felt parse_element(const Field& F, const std::string& text) {
    std::string s = iodetail::trim(text);
    require(!s.empty(), errc::ParseError, "empty element");
    if (s.size() >= 2 && (s[0] == 'a' || s[0] == 'A') && s[1] == '^') {
        std::int64_t e = iodetail::to_int(s.substr(2));
        return F.pow(F.alpha(), e);
    }
    auto parts = iodetail::split(s, ',');
    require(parts.size() <= F.n(), errc::ParseError, "too many coefficients");
    std::vector<unsigned> little(F.n(), 0);
    for (std::size_t j = 0; j < parts.size(); ++j) {
        std::int64_t c = iodetail::to_int(parts[j]);
        require(c >= 0 && c < static_cast<std::int64_t>(F.p()), errc::ParseError,
                "coefficient out of range: " + parts[j]);
        // most significant first; short lists are left-padded with zeros
        little[parts.size() - 1 - j] = static_cast<unsigned>(c);
    }
    return F.from_coeffs(little);
}

// ---------------------------------------------------------------------------
// Field specification files: one datum per line, `p=`, `n=`,
// `modulus=<c_n,...,c_0>`, optional `alpha=<c_{n-1},...,c_0>`.
// ---------------------------------------------------------------------------

inline std::string format_field_file(const Field& F) {
    std::string out;
    out += "p=" + std::to_string(F.p()) + "\n";
    out += "n=" + std::to_string(F.n()) + "\n";
    out += "modulus=";
    auto mod = F.modulus();
    for (std::size_t j = 0; j < mod.size(); ++j) out += (j ? "," : "") + std::to_string(mod[j]);
    out += "\nalpha=" + format_element(F, F.alpha()) + "\n";
    return out;
}

inline FieldPtr parse_field_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::int64_t p = 0, n = 0;
    std::vector<unsigned> modulus;
    bool auto_modulus = false;
    std::string alpha_text;
    while (std::getline(is, line)) {
        line = iodetail::trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        require(eq != std::string::npos, errc::ParseError, "expected key=value: '" + line + "'");
        std::string key = iodetail::trim(line.substr(0, eq));
        std::string val = iodetail::trim(line.substr(eq + 1));
        if (key == "p")
            p = iodetail::to_int(val);
        else if (key == "n")
            n = iodetail::to_int(val);
        else if (key == "modulus") {
            if (val == "AUTO" || val == "auto") {
                auto_modulus = true;
            } else {
                for (const auto& c : iodetail::split(val, ','))
                    modulus.push_back(static_cast<unsigned>(iodetail::to_int(c)));
            }
        } else if (key == "alpha")
            alpha_text = val;
        else
            raise(errc::ParseError, "unknown field key '" + key + "'");
    }
    require(p > 0 && n > 0, errc::ParseError, "field file must set p and n");
    FieldPtr F;
    if (auto_modulus || modulus.empty()) {
        F = Field::make(static_cast<unsigned>(p), static_cast<unsigned>(n));
    } else {
        F = Field::make(static_cast<unsigned>(p), static_cast<unsigned>(n), modulus);
    }
    if (!alpha_text.empty()) {
        felt a = parse_element(*F, alpha_text);
        F = Field::make(static_cast<unsigned>(p), static_cast<unsigned>(n), F->modulus(), a);
    }
    return F;
}

inline FieldPtr load_field_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), errc::ParseError, "cannot open field file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_field_text(ss.str());
}

/// Accepts either a path to a field file or an inline spec
/// `p,n,AUTO` / `p,n,c_n,...,c_0`.
inline FieldPtr parse_field_arg(const std::string& arg) {
    if (std::ifstream(arg).good()) return load_field_file(arg);
    auto parts = iodetail::split(arg, ',');
    require(parts.size() >= 3, errc::ParseError,
            "field spec must be a file or 'p,n,AUTO' / 'p,n,c_n,...,c_0'");
    unsigned p = static_cast<unsigned>(iodetail::to_int(parts[0]));
    unsigned n = static_cast<unsigned>(iodetail::to_int(parts[1]));
    if (parts[2] == "AUTO" || parts[2] == "auto") return Field::make(p, n);
    std::vector<unsigned> mod;
    for (std::size_t j = 2; j < parts.size(); ++j)
        mod.push_back(static_cast<unsigned>(iodetail::to_int(parts[j])));
    return Field::make(p, n, mod);
}

// ---------------------------------------------------------------------------
// Function tables: header `field=<p>^<n> codomain=<k>` (plus `domain=<k>`
// for subfield-domain tables), then one `<element> -> <value>` line per
// domain element in canonical order.
// ---------------------------------------------------------------------------

inline std::string format_function_table(const FunctionTable& t) {
    const Field& F = *t.field;
    std::string out = "field=" + std::to_string(F.p()) + "^" + std::to_string(F.n()) +
                      " codomain=" + std::to_string(t.codomain_k);
    if (!t.full_domain()) out += " domain=" + std::to_string(t.domain_k);
    out += "\n";
    const auto& dom = t.domain();
    for (std::size_t pos = 0; pos < dom.size(); ++pos)
        out += format_element(F, dom[pos]) + " -> " + format_element(F, t.values[pos]) + "\n";
    return out;
}

inline FunctionTable parse_function_table(FieldPtr field, const std::string& text) {
    std::istringstream is(text);
    std::string line;
    require(static_cast<bool>(std::getline(is, line)), errc::ParseError, "empty table file");
    FunctionTable t;
    t.field = field;
    t.domain_k = field->n();
    t.codomain_k = 0;
    {
        std::istringstream hs(line);
        std::string tok;
        while (hs >> tok) {
            auto eq = tok.find('=');
            require(eq != std::string::npos, errc::ParseError, "bad table header token: " + tok);
            std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
            if (key == "field") {
                auto caret = val.find('^');
                require(caret != std::string::npos, errc::ParseError, "bad field token");
                require(iodetail::to_int(val.substr(0, caret)) == field->p() &&
                            iodetail::to_int(val.substr(caret + 1)) == field->n(),
                        errc::MixedFields, "table field differs from the supplied field");
            } else if (key == "codomain")
                t.codomain_k = static_cast<unsigned>(iodetail::to_int(val));
            else if (key == "domain")
                t.domain_k = static_cast<unsigned>(iodetail::to_int(val));
            else
                raise(errc::ParseError, "unknown table header key '" + key + "'");
        }
    }
    require(t.codomain_k != 0, errc::ParseError, "table header must set codomain");
    const auto& dom = field->subfield(t.domain_k).elements;
    t.values.assign(dom.size(), 0);
    std::size_t count = 0;
    while (std::getline(is, line)) {
        line = iodetail::trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto arrow = line.find("->");
        require(arrow != std::string::npos, errc::ParseError, "expected '<element> -> <value>'");
        felt x = parse_element(*field, line.substr(0, arrow));
        felt v = parse_element(*field, line.substr(arrow + 2));
        require(count < dom.size() && dom[count] == x, errc::ParseError,
                "table rows must follow canonical element order");
        t.values[count++] = v;
    }
    require(count == dom.size(), errc::ParseError, "table is missing rows");
    validate_table(t);
    return t;
}

inline FunctionTable load_function_table(FieldPtr field, const std::string& path) {
    std::ifstream in(path);
    require(in.good(), errc::ParseError, "cannot open table file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_function_table(std::move(field), ss.str());
}

// ---------------------------------------------------------------------------
// Boolean functions: header `m=<int>`, then the 2^m truth bits packed into
// 64-bit rows printed as 16 hex digits; bit j of row r is f(64 r + j).
// ---------------------------------------------------------------------------

inline std::string format_boolean_function(const BooleanFunction& f) {
    std::string out = "m=" + std::to_string(f.m) + "\n";
    std::size_t rows = (f.bits.size() + 63) / 64;
    for (std::size_t r = 0; r < rows; ++r) {
        std::uint64_t w = 0;
        for (std::size_t j = 0; j < 64 && 64 * r + j < f.bits.size(); ++j)
            w |= static_cast<std::uint64_t>(f.bits[64 * r + j] & 1) << j;
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(w));
        out += buf;
        out += "\n";
    }
    return out;
}

inline BooleanFunction parse_boolean_function(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    require(static_cast<bool>(std::getline(is, line)), errc::ParseError, "empty boolean file");
    line = iodetail::trim(line);
    require(line.rfind("m=", 0) == 0, errc::ParseError, "boolean file must start with m=<int>");
    BooleanFunction f;
    f.m = static_cast<unsigned>(iodetail::to_int(line.substr(2)));
    require(f.m >= 1 && f.m <= 24, errc::ParseError, "m out of range");
    f.bits.assign(std::size_t{1} << f.m, 0);
    std::size_t r = 0;
    std::size_t rows = (f.bits.size() + 63) / 64;
    while (std::getline(is, line)) {
        line = iodetail::trim(line);
        if (line.empty() || line[0] == '#') continue;
        require(r < rows, errc::ParseError, "too many rows");
        require(line.size() == 16, errc::ParseError, "rows must be 16 hex digits");
        std::uint64_t w = 0;
        for (char c : line) {
            unsigned d;
            if (c >= '0' && c <= '9')
                d = static_cast<unsigned>(c - '0');
            else if (c >= 'a' && c <= 'f')
                d = static_cast<unsigned>(c - 'a') + 10;
            else if (c >= 'A' && c <= 'F')
                d = static_cast<unsigned>(c - 'A') + 10;
            else
                raise(errc::ParseError, "bad hex digit");
            w = (w << 4) | d;
        }
        for (std::size_t j = 0; j < 64 && 64 * r + j < f.bits.size(); ++j)
            f.bits[64 * r + j] = static_cast<std::uint8_t>((w >> j) & 1);
        ++r;
    }
    require(r == rows, errc::ParseError, "boolean file is missing rows");
    return f;
}

inline BooleanFunction load_boolean_function(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), errc::ParseError, "cannot open boolean file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_boolean_function(ss.str());
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    require(out.good(), errc::ParseError, "cannot write '" + path + "'");
    out << text;
}

// ---------------------------------------------------------------------------
// Run reports
// ---------------------------------------------------------------------------

enum class Verdict { Pass, Fail, Error };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Error: return "ERROR";
    }
    return "?";
}

/// Machine-readable result of one CLI command: command echo, field spec
/// (always including the modulus), inputs, counters, verdict and duration.
struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> fields;
    Verdict verdict = Verdict::Error;
    double duration_ms = 0.0;

    void add(const std::string& key, const std::string& value) { fields.emplace_back(key, value); }
    void add_field_spec(const Field& F) {
        add("field", "GF(" + std::to_string(F.p()) + "^" + std::to_string(F.n()) + ")");
        std::string mod;
        for (unsigned c : F.modulus()) mod += (mod.empty() ? "" : ",") + std::to_string(c);
        add("modulus", mod);
        add("alpha", format_element(F, F.alpha()));
    }

    std::string to_text() const {
        std::string out = "command=" + command + "\n";
        for (const auto& [k, v] : fields) out += k + "=" + v + "\n";
        out += "verdict=" + std::string(verdict_name(verdict)) + "\n";
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", duration_ms);
        out += "duration_ms=" + std::string(buf) + "\n";
        return out;
    }

    int exit_code() const {
        return verdict == Verdict::Pass ? 0 : verdict == Verdict::Fail ? 1 : 2;
    }
};

}  // namespace frobent
