// Copyright 2026 the ontocheck authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

// The exit-code contract exercised here: 0 success (a model "break" is a
// verified answer, not a failure), 1 verification failure, 2 usage or model
// errors. All commands are driven through the installed binary so the
// contract holds for the shipped tool, not just the library.

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + ONTOCHECK_BIN " " + args + " 2>&1";
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    while (std::fgets(buf, sizeof buf, p) != nullptr) r.out += buf;
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_fixture(const std::string& name, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "ontocheck-cli-tests";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream out(p);
    out << content;
    return p.string();
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

// ---------------------------------------------------------------------------
// Usage errors
// ---------------------------------------------------------------------------

TEST_CASE("usage errors exit 2") {
    CHECK(run("").code == 2);
    CHECK(run("triple-test --format bogus").code == 2);
    CHECK(run("pipeline").code == 2);  // needs --model or --abstract
    CHECK(run("adequacy").code == 2);  // --model is required
}

TEST_CASE("model errors exit 2 with a diagnostic") {
    const auto r = run("adequacy --model nope");
    CHECK(r.code == 2);
    CHECK(contains(r.out, "unknown model 'nope'"));

    const std::string broken = write_fixture("broken.json", "{\n  \"space\": {\n  BOOM\n}\n");
    const auto f = run("adequacy --model " + broken);
    CHECK(f.code == 2);
    CHECK(contains(f.out, broken));
    CHECK(contains(f.out, ":3:"));

    const auto s = run("witness --model ks --quadrature 16x32 --step 0");
    CHECK(s.code == 2);
    CHECK(contains(s.out, "step must lie in (0, 1]"));

    const auto q = run("adequacy --model ks --quadrature 16x3b");
    CHECK(q.code == 2);
}

// ---------------------------------------------------------------------------
// adequacy
// ---------------------------------------------------------------------------

TEST_CASE("adequacy passes exactly on the finite exact model") {
    const auto r = run("adequacy --model spekkens");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "adequacy: model spekkens"));
    CHECK(contains(r.out, "max deviation 0.0, tolerance 0.0"));
    CHECK(contains(r.out, "result: PASS"));
}

TEST_CASE("adequacy reports the honest quadrature error at the default tolerance") {
    const auto strict = run("adequacy --model ks --quadrature 16x32 --tests 3");
    CHECK(strict.code == 1);
    CHECK(contains(strict.out, "tolerance 1e-06"));
    CHECK(contains(strict.out, "result: FAIL"));

    const auto loose = run("adequacy --model ks --quadrature 16x32 --tests 3 --tol 0.02");
    CHECK(loose.code == 0);
    CHECK(contains(loose.out, "result: PASS"));
}

TEST_CASE("adequacy json carries the same records as the text") {
    const auto j = run("adequacy --model spekkens --format json");
    CHECK(j.code == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc.at("command") == "adequacy");
    CHECK(doc.at("model") == "spekkens");
    CHECK(doc.at("pass") == true);
    CHECK(doc.at("max_deviation") == 0.0);
    CHECK(doc.at("records").size() == 18);  // 6 preparations x 3 axis tests
}

// ---------------------------------------------------------------------------
// triple-test
// ---------------------------------------------------------------------------

TEST_CASE("the default triple run prints the full derivation") {
    const auto r = run("triple-test");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "(g1, g2): 1/4"));
    CHECK(contains(r.out, "P(1,1) = 1/8"));
    CHECK(contains(r.out, "p000 + p001 = 1/8"));
    CHECK(contains(r.out, "multipliers (1, -1, 1)"));
    CHECK(contains(r.out, "p000 + p111 = -1/8 : INFEASIBLE"));
    CHECK(contains(r.out, "marginal certificate verified: yes"));
    CHECK(contains(r.out, "full moment system (7 equations, 8 atoms): infeasible"));
    CHECK(contains(r.out, "result: PASS"));
}

TEST_CASE("triple-test json is structured and byte-stable") {
    const auto a = run("triple-test --format json");
    const auto b = run("triple-test --format json");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);  // reruns must be byte-identical
    const auto doc = nlohmann::json::parse(a.out);
    CHECK(doc.at("command") == "triple-test");
    CHECK(doc.at("pass") == true);
    CHECK(doc.at("combined_rhs") == "-1/8");
    CHECK(doc.at("multipliers") == nlohmann::json::array({"1", "-1", "1"}));
    CHECK(doc.at("marginal_certificate_verified") == true);
    CHECK(doc.at("decision") == "INFEASIBLE");
}

TEST_CASE("the orthogonal pair stays feasible with a verified witness") {
    const auto r = run("triple-test --rays orthogonal-pair");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "witness distribution:"));
    CHECK(contains(r.out, "p01 = 1/2"));
    CHECK(contains(r.out, "witness verified: yes"));
    CHECK(contains(r.out, "exhaustive oracle cross-check: agrees"));
    CHECK(contains(r.out, "result: PASS"));
}

TEST_CASE("ray files drive the moment decision either way") {
    const std::string triple = write_fixture("triple.json", R"({
        "rays": [
            [[1, 0], [0, 0]],
            [["1/2", 0], ["1/2*r3", 0]],
            [["1/2", 0], ["-1/2*r3", 0]]
        ]
    })");
    const auto inf = run("triple-test --rays " + triple);
    CHECK(inf.code == 0);
    CHECK(contains(inf.out, "certificate verified: yes"));
    CHECK(contains(inf.out, "result: PASS"));

    const std::string mub = write_fixture("mub.json", R"({
        "bloch": [[0, 0, 1], [1, 0, 0], [0, 1, 0]]
    })");
    const auto feas = run("triple-test --rays " + mub);
    CHECK(feas.code == 0);
    CHECK(contains(feas.out, "witness verified: yes"));

    const std::string irr = write_fixture("irrational.json", R"({
        "rays": [
            [[1, 0], [0, 0], [0, 0]],
            [["1/4+1/4*r3", 0], ["1/4-1/4*r3", 0], ["1/2", "1/2"]]
        ]
    })");
    const auto bad = run("triple-test --rays " + irr);
    CHECK(bad.code == 2);
    CHECK(contains(bad.out, "not rational"));
}

// ---------------------------------------------------------------------------
// pipeline
// ---------------------------------------------------------------------------

TEST_CASE("the quadrature model pipeline stops at its break") {
    const auto r = run("pipeline --model ks --quadrature 16x32");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "proof pipeline: ks"));
    CHECK(contains(r.out, "injectivity-scan"));
    CHECK(contains(r.out, "break"));
    CHECK(contains(r.out, "not reached (break at stage 2)"));
    CHECK(contains(r.out, "break stage: 2 (injectivity-scan)"));
    CHECK(contains(r.out, "result: ok"));
}

TEST_CASE("keep-going certifies the contradiction past the break") {
    const auto r = run("pipeline --model ks --quadrature 16x32 --keep-going");
    CHECK(r.code == 0);
    CHECK(!contains(r.out, "skipped"));
    CHECK(contains(r.out, "moment-feasibility"));
    CHECK(contains(r.out, "contradiction: p000 + p111 = -1/8 (certified)"));
}

TEST_CASE("the finite-repertoire model breaks at stage 0") {
    const auto r = run("pipeline --model spekkens");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "break stage: 0 (hypothesis-audit)"));
}

TEST_CASE("the abstract run grants the hypotheses and certifies -1/8") {
    const auto r = run("pipeline --abstract");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "assumed"));
    CHECK(contains(r.out, "break stage: none"));
    CHECK(contains(r.out, "contradiction: p000 + p111 = -1/8 (certified)"));
    CHECK(contains(r.out, "result: ok"));
}

TEST_CASE("pipeline json mirrors the staged report") {
    const auto r = run("pipeline --model ks --quadrature 16x32 --format json");
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("command") == "pipeline");
    CHECK(doc.at("model") == "ks");
    CHECK(doc.at("backend") == "float");
    CHECK(doc.at("break_stage") == 2);
    CHECK(doc.at("ok") == true);
    CHECK(doc.at("stages").size() == 7);
    CHECK(doc.at("stages")[2].at("verdict") == "break");
    CHECK(doc.at("stages")[6].at("verdict") == "skipped");
    CHECK(doc.at("config").at("quadrature") == "16x32");
}

TEST_CASE("the quadrature environment variable sets the default mesh") {
    const auto r = run("pipeline --model ks --format json", "ONTOCHECK_QUADRATURE=8x16");
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("config").at("quadrature") == "8x16");
    // An explicit flag still wins over the environment.
    const auto f = run("pipeline --model ks --quadrature 16x32 --format json",
                       "ONTOCHECK_QUADRATURE=8x16");
    CHECK(nlohmann::json::parse(f.out).at("config").at("quadrature") == "16x32");
}

// ---------------------------------------------------------------------------
// witness
// ---------------------------------------------------------------------------

TEST_CASE("the witness scan prints the collision pair") {
    const auto r = run("witness --model ks --quadrature 16x32 --step 1/4 --tests 3");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "witness found:"));
    CHECK(contains(r.out, "a = mix(0.5; z+, z-)"));
    CHECK(contains(r.out, "b = mix(0.5; x+, x-)"));
    CHECK(contains(r.out, "shared D-map value: [[0.5, 0.0], [0.0, 0.5]]"));
    CHECK(contains(r.out, "result: PASS"));
}

TEST_CASE("a scan with no collision reports none and still exits 0") {
    const auto r = run("witness --model spekkens");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "no witness found"));
    CHECK(contains(r.out, "result: none found"));
}

TEST_CASE("witness text and json carry identical digits") {
    const std::string args = "witness --model ks --quadrature 16x32 --step 1/4 --tests 3";
    const auto text = run(args);
    const auto j = run(args + " --format json");
    const auto doc = nlohmann::json::parse(j.out);

    // Pull "total variation: <digits>" out of the text and require the json
    // number to render to the same digits: both views come from one report.
    const std::string key = "total variation: ";
    const auto pos = text.out.find(key);
    REQUIRE(pos != std::string::npos);
    const auto end = text.out.find('\n', pos);
    const std::string digits = text.out.substr(pos + key.size(), end - pos - key.size());
    CHECK(nlohmann::json(doc.at("total_variation")).dump() == digits);

    const auto again = run(args + " --format json");
    CHECK(j.out == again.out);
}
