/**************************************************************************
 * test_cli_exec.cpp
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

// End-to-end CLI tests: drive the built binary through files and check the
// documented exit-code contract (0 PASS, 1 FAIL, 2 ERROR).

#include <catch2/catch_amalgamated.hpp>
#include <frobent/repro.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

using namespace frobent;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    fs::path out = fs::temp_directory_path() / "frobent_cli_output.txt";
    std::string cmd = std::string(FROBENT_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    int code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return {code, ss.str()};
}

fs::path scratch_dir() {
    fs::path d = fs::temp_directory_path() / "frobent_cli_test";
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("translators find on the binomial family prints p^n - 1 witnesses") {
    auto F = Field::make(2, 6);
    auto fam = family_binomial(F, 1);
    fs::path dir = scratch_dir();
    fs::path field_file = dir / "field.txt";
    fs::path fn_file = dir / "binomial.txt";
    write_text_file(field_file.string(), format_field_file(*F));
    write_text_file(fn_file.string(), format_function_table(fam.f));

    auto r = run_cli("--field " + field_file.string() + " translators find --function " +
                     fn_file.string());
    REQUIRE(r.exit_code == 0);
    std::set<std::string> gammas;
    std::size_t lines = 0;
    std::istringstream is(r.output);
    std::string line;
    while (std::getline(is, line))
        if (line.rfind("(gamma=", 0) == 0) {
            ++lines;
            gammas.insert(line.substr(7, line.find(',') - 7));
        }
    REQUIRE(gammas.size() == 63);  // every nonzero gamma qualifies
    // the 7 gammas in GF(2^3) are 0-translators and carry one witness per index
    REQUIRE(lines == 63 + 7 * 2);
    REQUIRE(r.output.find("(gamma=a^1, i=1, b=") != std::string::npos);
}

TEST_CASE("perm verify: identity passes, constant fails") {
    auto F = Field::make(2, 4);
    fs::path dir = scratch_dir();
    fs::path id_file = dir / "identity.txt";
    fs::path const_file = dir / "constant.txt";
    write_text_file(id_file.string(),
                    format_function_table(make_table(F, 4, [](felt x) { return x; })));
    write_text_file(const_file.string(),
                    format_function_table(make_table(F, 4, [](felt) { return felt(1); })));
    REQUIRE(run_cli("--field 2,4,AUTO perm verify " + id_file.string()).exit_code == 0);
    auto r = run_cli("--field 2,4,AUTO perm verify " + const_file.string());
    REQUIRE(r.exit_code == 1);
    REQUIRE(r.output.find("verdict=FAIL") != std::string::npos);
}

TEST_CASE("perm build-frobenius from files") {
    auto F = Field::make(2, 6);
    auto fam = family_binomial(F, 0);  // k = 3
    auto w = fam.witness(F->alpha());
    REQUIRE(w.b != 0);
    auto g = random_subfield_permutation(F, 3, 99);
    auto h = make_h_from_g(g, w.b);
    fs::path dir = scratch_dir();
    fs::path f_file = dir / "bf_f.txt", h_file = dir / "bf_h.txt", out_file = dir / "bf_out.txt";
    write_text_file(f_file.string(), format_function_table(fam.f));
    write_text_file(h_file.string(), format_function_table(h));
    auto r = run_cli("--field 2,6,AUTO perm build-frobenius --L '1;0' --gamma a^1 --i " +
                     std::to_string(w.i) + " --h " + h_file.string() + " --f " + f_file.string() +
                     " --save " + out_file.string());
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output.find("result.permutation=yes") != std::string::npos);
    // the saved table round-trips as a certified permutation
    REQUIRE(run_cli("--field 2,6,AUTO perm verify " + out_file.string()).exit_code == 0);
}

TEST_CASE("perm check-an on shift permutations") {
    auto F = Field::make(2, 4);
    fs::path dir = scratch_dir();
    std::vector<std::string> paths;
    for (int j = 1; j <= 3; ++j) {
        felt c = F->pow(F->alpha(), j);
        auto t = make_table(F, 4, [&](felt x) { return F->add(x, c); });
        fs::path p = dir / ("shift" + std::to_string(j) + ".txt");
        write_text_file(p.string(), format_function_table(t));
        paths.push_back(p.string());
    }
    REQUIRE(run_cli("--field 2,4,AUTO perm check-an " + paths[0] + " " + paths[1] + " " +
                    paths[2])
                .exit_code == 0);
}

TEST_CASE("perm var2 reports the equivalence") {
    auto r = run_cli("--field 3,2,AUTO perm var2 --L '1;0' --s 4 --delta 0,0");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output.find("result.equivalence=holds") != std::string::npos);
    REQUIRE(r.output.find("result.F_permutes=yes") != std::string::npos);  // 3s ≡ s mod 8
}

TEST_CASE("bent verify exit codes") {
    fs::path dir = scratch_dir();
    BooleanFunction quad;  // x1x2 + x3x4
    quad.m = 4;
    for (unsigned z = 0; z < 16; ++z)
        quad.bits.push_back(
            static_cast<std::uint8_t>(((z & 1) & ((z >> 1) & 1)) ^ (((z >> 2) & 1) & ((z >> 3) & 1))));
    fs::path bent_file = dir / "bent.txt";
    write_text_file(bent_file.string(), format_boolean_function(quad));
    REQUIRE(run_cli("bent verify " + bent_file.string()).exit_code == 0);

    fs::path affine_file = dir / "affine.txt";
    write_text_file(affine_file.string(), format_boolean_function(constant_function(4, 1)));
    REQUIRE(run_cli("bent verify " + affine_file.string()).exit_code == 1);

    SECTION("bent dual round-trips through a file") {
        fs::path dual_file = dir / "dual.txt";
        REQUIRE(run_cli("bent dual " + bent_file.string() + " --save " + dual_file.string())
                    .exit_code == 0);
        auto dual = load_boolean_function(dual_file.string());
        REQUIRE(dual.bits == quad.bits);  // the quadratic bent function is self-dual
    }
}

TEST_CASE("bent con1 runs from files") {
    auto F = Field::make(2, 6);
    auto fam = family_binomial(F, 1);
    fs::path dir = scratch_dir();
    fs::path f_file = dir / "f.txt";
    write_text_file(f_file.string(), format_function_table(fam.f));
    fs::path g_file = dir / "g.txt";
    write_text_file(g_file.string(), format_function_table(subfield_identity(F, 3)));
    // gammas with a shared translator value: alpha, alpha+c1, alpha+c2
    const auto& sub = F->subfield(3).elements;
    std::string gammas = format_element_exp(*F, F->alpha()) + "," +
                         format_element_exp(*F, F->add(F->alpha(), sub[1])) + "," +
                         format_element_exp(*F, F->add(F->alpha(), sub[2]));
    auto r = run_cli("--field 2,6,AUTO bent con1 --f " + f_file.string() + " --g " +
                     g_file.string() + " --gammas " + gammas + " --i 1");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output.find("result.bent_vars=12") != std::string::npos);
}

TEST_CASE("bent open-problem pipeline") {
    auto r = run_cli("--field 2,6,AUTO bent open-problem --shifts a^1,a^2,a^3");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output.find("result.duals_sum_to_one=yes") != std::string::npos);
    REQUIRE(r.output.find("result.extension_vars=14") != std::string::npos);
}

TEST_CASE("error paths exit with code 2") {
    auto r = run_cli("repro nonsense-id");
    REQUIRE(r.exit_code == 2);
    REQUIRE(r.output.find("UnknownExample") != std::string::npos);
    SECTION("ex1 with out-of-range l") {
        auto r2 = run_cli("repro ex1 --ell 9");
        REQUIRE(r2.exit_code == 2);
        REQUIRE(r2.output.find("UnknownParameters") != std::string::npos);
    }
    SECTION("reducible modulus") {
        auto r3 = run_cli("--field 2,4,1,0,1,0,1 field info");
        REQUIRE(r3.exit_code == 2);
        REQUIRE(r3.output.find("ReducibleModulus") != std::string::npos);
    }
}

TEST_CASE("reports can be written to a file") {
    fs::path dir = scratch_dir();
    fs::path out = dir / "report.txt";
    auto r = run_cli("--out " + out.string() + " repro th-lt-example");
    REQUIRE(r.exit_code == 0);
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    REQUIRE(ss.str().find("result.b=195") != std::string::npos);
    REQUIRE(ss.str().find("modulus=1,0,0,0,1,1,1,0,1") != std::string::npos);
    REQUIRE(ss.str().find("verdict=PASS") != std::string::npos);
}
