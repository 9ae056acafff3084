/**************************************************************************
 * frobent_main.cpp
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

#include <chrono>
#include <iostream>

#include <CLI11.hpp>
#include <frobent/repro.hpp>

namespace {

using namespace frobent;

struct GlobalOpts {
    std::string field_arg;
    std::string out_path;
    int threads = 1;  // hint only; all operations are deterministic
    std::uint64_t seed = 0;
};

int finish(RunReport& rep, const GlobalOpts& g) {
    if (!g.out_path.empty()) write_text_file(g.out_path, rep.to_text());
    std::cout << rep.to_text();
    return rep.exit_code();
}

/// Elements separated by ';' (or ',' when no ';' present, which suits the
/// a^<e> exponent notation).
std::vector<felt> parse_element_list(const Field& F, const std::string& s) {
    char sep = s.find(';') != std::string::npos ? ';' : ',';
    std::vector<felt> out;
    for (const auto& tok : iodetail::split(s, sep)) out.push_back(parse_element(F, tok));
    return out;
}

LinearizedMap parse_linmap(FieldPtr field, unsigned k, const std::string& s) {
    auto lam = parse_element_list(*field, s);
    return make_linmap(std::move(field), k, std::move(lam));
}

class Timer {
  public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

int cmd_field_info(const GlobalOpts& g) {
    Timer t;
    RunReport rep;
    rep.command = "field info";
    FieldPtr F = parse_field_arg(g.field_arg);
    rep.add_field_spec(*F);
    rep.add("order", std::to_string(F->q()));
    std::string divisors;
    for (unsigned k = 1; k <= F->n(); ++k)
        if (F->n() % k == 0) divisors += (divisors.empty() ? "" : ",") + std::to_string(k);
    rep.add("subfield_degrees", divisors);
    rep.verdict = Verdict::Pass;
    rep.duration_ms = t.ms();
    return finish(rep, g);
}

int cmd_translators_find(const GlobalOpts& g, const std::string& fn_path) {
    Timer t;
    RunReport rep;
    rep.command = "translators find";
    FieldPtr F = parse_field_arg(g.field_arg);
    rep.add_field_spec(*F);
    FunctionTable f = load_function_table(F, fn_path);
    rep.add("input.function", fn_path);
    auto ws = find_translators(f);
    for (const auto& w : ws)
        std::cout << "(gamma=" << format_element_exp(*F, w.gamma) << ", i=" << w.i
                  << ", b=" << format_element_exp(*F, w.b) << ")\n";
    rep.add("counter.witnesses", std::to_string(ws.size()));
    rep.add("counter.gammas_scanned", std::to_string(F->q() - 1));
    rep.verdict = Verdict::Pass;
    rep.duration_ms = t.ms();
    return finish(rep, g);
}

int cmd_perm_build_frobenius(const GlobalOpts& g, const std::string& L_arg,
                             const std::string& gamma_arg, std::int64_t i,
                             const std::string& h_path, const std::string& f_path,
                             const std::string& save_path) {
    Timer t;
    RunReport rep;
    rep.command = "perm build-frobenius";
    FieldPtr F = parse_field_arg(g.field_arg);
    rep.add_field_spec(*F);
    FunctionTable f = load_function_table(F, f_path);
    FunctionTable h = load_function_table(F, h_path);
    felt gamma = parse_element(*F, gamma_arg);
    felt b = F->sub(f.values[gamma], f.values[0]);
    TranslatorWitness w(*F, f.codomain_k, gamma, i, b);
    LinearizedMap L = parse_linmap(F, f.codomain_k, L_arg);
    rep.add("input.gamma", format_element_exp(*F, gamma));
    rep.add("input.i", std::to_string(w.i));
    rep.add("input.b", format_element_exp(*F, b));
    PermTable G = build_perm_frobenius(L, w, h, f);
    rep.add("result.permutation", G.certified ? "yes" : "no");
    if (!save_path.empty()) {
        FunctionTable out = make_table(F, F->n(), [&](felt x) { return G(x); });
        write_text_file(save_path, format_function_table(out));
        rep.add("result.saved", save_path);
    }
    rep.verdict = G.certified ? Verdict::Pass : Verdict::Fail;
    rep.duration_ms = t.ms();
    return finish(rep, g);
}

PermTable load_perm_candidate(FieldPtr F, const std::string& path) {
    FunctionTable t = load_function_table(F, path);
    require(t.full_domain() && t.codomain_k == F->n(), errc::ParseError,
            "permutation tables must map the whole field to itself");
    PermTable p;
    p.field = F;
    p.values = t.values;
    return p;
}

int cmd_perm_verify(const GlobalOpts& g, const std::string& path) {
    Timer t;
    RunReport rep;
    rep.command = "perm verify";
    FieldPtr F = parse_field_arg(g.field_arg);
    rep.add_field_spec(*F);
    PermTable p = load_perm_candidate(F, path);
    bool ok = is_permutation(p);
    rep.add("input.table", path);
    rep.add("result.permutation", ok ? "yes" : "no");
    rep.add("counter.elements_scanned", std::to_string(F->q()));
    rep.verdict = ok ? Verdict::Pass : Verdict::Fail;
    rep.duration_ms = t.ms();
    return finish(rep, g);
}

int cmd_perm_check_an(const GlobalOpts& g, const std::string& p1, const std::string& p2,
                      const std::string& p3) {
    Timer t;
    RunReport rep;
    rep.command = "perm check-an";
    FieldPtr F = parse_field_arg(g.field_arg);
    rep.add_field_spec(*F);
    PermTable a = certify(load_perm_candidate(F, p1));
    PermTable b = certify(load_perm_candidate(F, p2));
    PermTable c = certify(load_perm_candidate(F, p3));
    bool ok = an_condition(a, b, c);
    rep.add("result.condition", ok ? "holds" : "fails");
    rep.verdict = ok ? Verdict::Pass : Verdict::Fail;
    rep.duration_ms = t.ms();
    return finish(rep, g);
}

int cmd_perm_var2(const GlobalOpts& g, const std::string& L_arg, std::int64_t s,
                  const std::string& delta_arg) {
    Timer t;
    RunReport rep;
    rep.command = "perm var2";
    FieldPtr F = parse_field_arg(g.field_arg);
    rep.add_field_spec(*F);
    LinearizedMap L = parse_linmap(F, F->n() / 2, L_arg);
    felt delta = parse_element(*F, delta_arg);
    auto eq = subspace_perm_equivalence(L, s, delta);
    rep.add("input.s", std::to_string(s));
    rep.add("input.delta", format_element(*F, delta));
    rep.add("result.F_permutes", eq.F_permutes ? "yes" : "no");
    rep.add("result.G_permutes_S", eq.G_permutes ? "yes" : "no");
    rep.add("result.equivalence", eq.equivalence ? "holds" : "fails");
    rep.add("counter.subspace_size", std::to_string(eq.S.size()));
    rep.verdict = eq.equivalence ? Verdict::Pass : Verdict::Fail;
    rep.duration_ms = t.ms();
    return finish(rep, g);
}

int cmd_bent_verify(const GlobalOpts& g, const std::string& path) {
    Timer t;
    RunReport rep;
    rep.command = "bent verify";
    BooleanFunction f = load_boolean_function(path);
    rep.add("input.function", path);
    rep.add("input.m", std::to_string(f.m));
    auto s = walsh_transform(f);
    std::int32_t lo = std::abs(s.w[0]), hi = lo;
    for (std::int32_t c : s.w) {
        lo = std::min(lo, std::abs(c));
        hi = std::max(hi, std::abs(c));
    }
    rep.add("counter.spectrum_min_abs", std::to_string(lo));
    rep.add("counter.spectrum_max_abs", std::to_string(hi));
    bool ok = f.m % 2 == 0 && lo == hi && hi == (std::int32_t{1} << (f.m / 2));
    rep.add("result.bent", ok ? "yes" : "no");
    rep.verdict = ok ? Verdict::Pass : Verdict::Fail;
    rep.duration_ms = t.ms();
    return finish(rep, g);
}

int cmd_bent_dual(const GlobalOpts& g, const std::string& path, const std::string& save_path) {
    Timer t;
    RunReport rep;
    rep.command = "bent dual";
    BooleanFunction f = load_boolean_function(path);
    auto cert = certify_bent(f);
    rep.add("input.function", path);
    rep.add("result.spectrum_abs", std::to_string(cert.max_abs));
    std::string text = format_boolean_function(cert.dual);
    if (!save_path.empty()) {
        write_text_file(save_path, text);
        rep.add("result.saved", save_path);
    } else {
        std::cout << text;
    }
    rep.verdict = Verdict::Pass;
    rep.duration_ms = t.ms();
    return finish(rep, g);
}

int cmd_bent_con1(const GlobalOpts& g, const std::string& f_path, const std::string& g_path,
                  const std::string& gammas_arg, std::int64_t i, const std::string& L_arg) {
    Timer t;
    RunReport rep;
    rep.command = "bent con1";
    FieldPtr F = parse_field_arg(g.field_arg);
    rep.add_field_spec(*F);
    FunctionTable f = load_function_table(F, f_path);
    FunctionTable gt = load_function_table(F, g_path);
    auto gammas = parse_element_list(*F, gammas_arg);
    require(gammas.size() == 3, errc::ParseError, "--gammas needs exactly three elements");
    felt a = F->sub(f.values[gammas[0]], f.values[0]);
    LinearizedMap L = L_arg.empty() ? identity_linmap(F, f.codomain_k)
                                    : parse_linmap(F, f.codomain_k, L_arg);
    rep.add("input.a", format_element_exp(*F, a));
    auto built = bent_from_translator_family(L, f, gt, {gammas[0], gammas[1], gammas[2]}, a,
                                             static_cast<unsigned>(i));
    rep.add("result.bent_vars", std::to_string(built.cert.function.m));
    rep.add("result.dual_matches_closed_form", "yes");
    rep.add("result.stated_scalar_matches", built.stated_scalar_matches ? "yes" : "no");
    rep.add("counter.wht_points", std::to_string(built.cert.function.size()));
    rep.verdict = Verdict::Pass;
    rep.duration_ms = t.ms();
    return finish(rep, g);
}

int cmd_bent_open_problem(const GlobalOpts& g, const std::string& shifts_arg) {
    Timer t;
    RunReport rep;
    rep.command = "bent open-problem";
    FieldPtr Fp = parse_field_arg(g.field_arg);
    const Field& F = *Fp;
    rep.add_field_spec(F);
    auto shifts = parse_element_list(F, shifts_arg);
    require(shifts.size() == 3, errc::ParseError, "--shifts needs exactly three elements");
    std::array<PermTable, 3> phis;
    for (int j = 0; j < 3; ++j)
        phis[j] = certify(make_perm_candidate(Fp, [&](felt y) { return F.add(y, shifts[j]); }));
    felt cshift = F.add(shifts[1], shifts[2]);
    BooleanFunction h1 = build_shift_complement(F, cshift);
    BooleanFunction h2 = constant_function(F.n(), 0);
    BooleanFunction h3 = constant_function(F.n(), 1);
    auto quad = build_bent_quadruple({&phis[0], &phis[1], &phis[2]}, {&h1, &h2, &h3});
    rep.add("result.duals_sum_to_one", quad.duals_sum_to_one ? "yes" : "no");
    auto ext = extend_bent(quad.certs[0], quad.certs[1], quad.certs[2]);
    rep.add("result.extension_vars", std::to_string(ext.function.m));
    rep.add("counter.wht_points", std::to_string(ext.function.size()));
    rep.verdict = quad.duals_sum_to_one ? Verdict::Pass : Verdict::Fail;
    rep.duration_ms = t.ms();
    return finish(rep, g);
}

int cmd_repro(const GlobalOpts& g, const std::string& id, unsigned k, unsigned ell) {
    RunReport rep = run_repro(id, g.seed, k, ell);
    return finish(rep, g);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"frobent: permutations of GF(p^n) from Frobenius translators and bent functions "
                 "built from them"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may appear after the subcommand too
    GlobalOpts g;
    app.add_option("--field", g.field_arg,
                   "field spec: file path, or inline 'p,n,AUTO' / 'p,n,c_n,...,c_0'");
    app.add_option("--out", g.out_path, "write the run report (key=value lines) to this path");
    app.add_option("--threads", g.threads, "worker hint; results never depend on it");
    app.add_option("--seed", g.seed, "seed for randomized sweeps (default 0)");

    auto* field_cmd = app.add_subcommand("field", "field construction");
    field_cmd->add_subcommand("info", "construct the field and print its spec");

    auto* tr = app.add_subcommand("translators", "translator search");
    auto* tr_find = tr->add_subcommand("find", "list all translators of a function table");
    std::string fn_path;
    tr_find->add_option("--function", fn_path, "function table file")->required();

    auto* perm = app.add_subcommand("perm", "permutation builders and checks");
    auto* pb = perm->add_subcommand("build-frobenius", "G(x) = L(x)^{p^i} + L(gamma)^{p^i} h(f(x))");
    pb->set_help_flag("--help", "print help");  // frees -h for the --h table option
    std::string L_arg, gamma_arg, h_path, f_path, save_path;
    std::int64_t i_arg = 0;
    pb->add_option("--L", L_arg, "linearized map coefficients (elements, ';'-separated)")->required();
    pb->add_option("--gamma", gamma_arg, "translator gamma")->required();
    pb->add_option("--i", i_arg, "Frobenius index")->required();
    pb->add_option("--h", h_path, "h table file (subfield domain)")->required();
    pb->add_option("--f", f_path, "f table file")->required();
    pb->add_option("--save", save_path, "write the built table here");
    auto* pv = perm->add_subcommand("verify", "occupancy-scan permutation check");
    std::string table_path;
    pv->add_option("table", table_path, "table file")->required();
    auto* pan = perm->add_subcommand("check-an", "sum-of-three permutation condition");
    std::string an1, an2, an3;
    pan->add_option("t1", an1)->required();
    pan->add_option("t2", an2)->required();
    pan->add_option("t3", an3)->required();
    auto* pv2 = perm->add_subcommand("var2", "subspace permutation equivalence");
    std::string var2_L, delta_arg;
    std::int64_t s_arg = 0;
    pv2->add_option("--L", var2_L, "linearized map coefficients in GF(p^k)")->required();
    pv2->add_option("--s", s_arg, "exponent")->required();
    pv2->add_option("--delta", delta_arg, "shift element")->required();

    auto* bent = app.add_subcommand("bent", "bent function certification and constructions");
    auto* bv = bent->add_subcommand("verify", "flat-spectrum check");
    std::string bf_path;
    bv->add_option("fn", bf_path, "truth table file")->required();
    auto* bd = bent->add_subcommand("dual", "compute the dual of a bent function");
    std::string bd_path, bd_save;
    bd->add_option("fn", bd_path, "truth table file")->required();
    bd->add_option("--save", bd_save, "write the dual here instead of stdout");
    auto* bc = bent->add_subcommand("con1", "bent function from a translator triple");
    std::string c1_f, c1_g, c1_gammas, c1_L;
    std::int64_t c1_i = 0;
    bc->add_option("--f", c1_f, "f table file")->required();
    bc->add_option("--g", c1_g, "permutation g table file (subfield domain)")->required();
    bc->add_option("--gammas", c1_gammas, "three translator gammas")->required();
    bc->add_option("--i", c1_i, "Frobenius index")->required();
    bc->add_option("--L", c1_L, "linearized permutation coefficients (default identity)");
    auto* bo = bent->add_subcommand("open-problem", "quadruple with duals summing to one");
    std::string shifts_arg;
    bo->add_option("--shifts", shifts_arg, "three shift elements")->required();

    auto* rp = app.add_subcommand("repro", "replay a worked example end to end");
    std::string repro_id;
    unsigned repro_k = 2, repro_ell = 1;
    rp->add_option("id", repro_id, "ex1|th-lt-example|ex-3frobenius|sec52-example|persp-example")
        ->required();
    rp->add_option("--k", repro_k, "subfield degree for ex1 (default 2)");
    rp->add_option("--ell", repro_ell, "power parameter for ex1 (default 1)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (field_cmd->parsed()) return cmd_field_info(g);
        if (tr_find->parsed()) return cmd_translators_find(g, fn_path);
        if (pb->parsed())
            return cmd_perm_build_frobenius(g, L_arg, gamma_arg, i_arg, h_path, f_path, save_path);
        if (pv->parsed()) return cmd_perm_verify(g, table_path);
        if (pan->parsed()) return cmd_perm_check_an(g, an1, an2, an3);
        if (pv2->parsed()) return cmd_perm_var2(g, var2_L, s_arg, delta_arg);
        if (bv->parsed()) return cmd_bent_verify(g, bf_path);
        if (bd->parsed()) return cmd_bent_dual(g, bd_path, bd_save);
        if (bc->parsed()) return cmd_bent_con1(g, c1_f, c1_g, c1_gammas, c1_i, c1_L);
        if (bo->parsed()) return cmd_bent_open_problem(g, shifts_arg);
        if (rp->parsed()) return cmd_repro(g, repro_id, repro_k, repro_ell);
    } catch (const frobent::error& e) {
        std::cerr << "ERROR " << e.what() << "\n";
        if (!g.out_path.empty()) {
            frobent::RunReport rep;
            rep.command = "error";
            rep.add("error", e.name());
            rep.add("message", e.what());
            rep.verdict = frobent::Verdict::Error;
            frobent::write_text_file(g.out_path, rep.to_text());
        }
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "ERROR " << e.what() << "\n";
        return 2;
    }
    std::cerr << "no subcommand\n";
    return 2;
}
