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

#include <filesystem>
#include <fstream>
#include <string>
#include <variant>
#include <vector>

#include "ontocheck/modelfile.hpp"
#include "ontocheck/theorem.hpp"

using namespace ontocheck;

namespace {

using FB = FloatBackend;
using EB = ExactBackend;

/// Writes a fixture file into a per-run scratch directory and returns its
/// path. Unique file names keep the cases independent.
std::string write_fixture(const std::string& name, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "ontocheck-modelfile-tests";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream out(p);
    out << content;
    out.close();
    return p.string();
}

std::string error_of(const std::string& path) {
    try {
        load_model_file(path);
        return "";
    } catch (const ModelFileError& e) {
        return e.what();
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Built-in resolution
// ---------------------------------------------------------------------------

TEST_CASE("built-in names resolve to the zoo models") {
    const auto ks = resolve_model("ks", {16, 32});
    CHECK(!ks.exact);
    CHECK(std::get<0>(ks.model).name == "ks");
    CHECK(std::get<0>(ks.model).space->size() == 16 * 32);

    const auto sp = resolve_model("spekkens", {16, 32});
    CHECK(sp.exact);
    CHECK(std::get<1>(sp.model).name == "spekkens");
    CHECK(std::get<1>(sp.model).space->size() == 4);

    const auto po = resolve_model("psi-ontic-4", {16, 32});
    CHECK(!po.exact);
    CHECK(std::get<0>(po.model).name == "psi-ontic-4");
    CHECK(std::get<0>(po.model).space->size() == 4);
}

TEST_CASE("unknown names are rejected with the built-in list") {
    try {
        resolve_model("no-such-model", {16, 32});
        FAIL("expected ModelFileError");
    } catch (const ModelFileError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("unknown model 'no-such-model'") != std::string::npos);
        CHECK(msg.find("ks | spekkens | psi-ontic-4") != std::string::npos);
    }
}

TEST_CASE("a path argument loads the definition file") {
    const std::string path = write_fixture("resolve-file.json", R"({
        "space": {"kind": "rays", "rays": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]},
        "response": "born"
    })");
    const auto lm = resolve_model(path, {16, 32});
    CHECK(!lm.exact);
    CHECK(std::get<0>(lm.model).space->size() == 2);
}

// ---------------------------------------------------------------------------
// Rays spaces
// ---------------------------------------------------------------------------

TEST_CASE("a float rays model defaults to node point masses") {
    const std::string path = write_fixture("rays-float.json", R"({
        "name": "pair",
        "space": {
            "kind": "rays",
            "rays": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]],
            "names": ["up", "down"]
        },
        "response": "born"
    })");
    const auto lm = load_model_file(path);
    REQUIRE(!lm.exact);
    const auto& m = std::get<0>(lm.model);
    CHECK(m.name == "pair");  // top-level name overrides the builder's
    CHECK(m.space->node_ids == std::vector<std::string>{"up", "down"});
    REQUIRE(m.generators.size() == 2);
    CHECK(m.generators[0].name == "up");
    // Point mass: the generator predicts its own ray test with certainty.
    const auto p = predict(m, m.generators[0], ray_test<FB>("up", Ray<FB>{{{1, 0}, {0, 0}}}));
    CHECK(p[0] == doctest::Approx(1.0));
    CHECK(m.prepare_ray != nullptr);
}

TEST_CASE("an exact rays model carries exact scalars end to end") {
    const std::string path = write_fixture("rays-exact.json", R"({
        "backend": "exact",
        "space": {
            "kind": "rays",
            "rays": [
                [[1, 0], [0, 0]],
                [["1/2", 0], ["1/2*r3", 0]]
            ],
            "names": ["e0", "g2"]
        },
        "response": "born"
    })");
    const auto lm = load_model_file(path);
    REQUIRE(lm.exact);
    const auto& m = std::get<1>(lm.model);
    REQUIRE(m.generators.size() == 2);
    // Overlap of the two nodes is exactly 1/4; predict must reproduce it
    // with zero error.
    const Ray<EB> e0{{ExactComplex(ExactReal(Rational(1))), ExactComplex()}};
    const auto p = predict(m, m.generators[1], ray_test<EB>("e0 test", e0));
    CHECK(p[0] == ExactReal(Rational(1, 4)));
    CHECK(p[1] == ExactReal(Rational(3, 4)));
}

TEST_CASE("explicit response tables replace the built-in rule") {
    const std::string path = write_fixture("rays-tables.json", R"({
        "space": {"kind": "rays", "rays": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]},
        "response": {
            "tables": [{
                "name": "z",
                "labels": [1, 0],
                "effects": [
                    [[[1, 0], [0, 0]], [[0, 0], [0, 0]]],
                    [[[0, 0], [0, 0]], [[0, 0], [1, 0]]]
                ],
                "rows": [[1, 0], [0, 1]]
            }]
        }
    })");
    const auto lm = load_model_file(path);
    const auto& m = std::get<0>(lm.model);
    // The born inverse no longer describes the model.
    CHECK(m.prepare_ray == nullptr);

    // Experiments are matched by POVM content, not by name.
    const auto z_other_name = ray_test<FB>("anything", Ray<FB>{{{1, 0}, {0, 0}}});
    CHECK(m.response->supports(z_other_name));
    const auto row = m.response->respond(0, z_other_name, *m.space);
    REQUIRE(row.size() == 2);
    CHECK(row[0] == 1.0);
    CHECK(row[1] == 0.0);
    // respond and response_table must agree.
    const auto table = m.response->response_table(z_other_name, *m.space);
    CHECK(table[0][0] == 1.0);
    CHECK(table[1][1] == 1.0);

    // A POVM outside the table is unsupported and refuses to respond.
    const auto x_test = ray_test<FB>("x", Ray<FB>{{{std::sqrt(0.5), 0}, {std::sqrt(0.5), 0}}});
    CHECK(!m.response->supports(x_test));
    CHECK_THROWS_AS(m.response->respond(0, x_test, *m.space), UnsupportedExperiment);
}

TEST_CASE("custom generators override the point masses") {
    const std::string path = write_fixture("rays-generators.json", R"({
        "space": {"kind": "rays", "rays": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]},
        "response": "born",
        "generators": [{
            "name": "even",
            "density": [0.5, 0.5],
            "dmap": [[[0.5, 0], [0, 0]], [[0, 0], [0.5, 0]]]
        }]
    })");
    const auto lm = load_model_file(path);
    const auto& m = std::get<0>(lm.model);
    REQUIRE(m.generators.size() == 1);
    CHECK(m.generators[0].name == "even");
    CHECK(FB::to_double(total_mass(m.generators[0])) == doctest::Approx(1.0));
    REQUIRE(m.generators[0].quantum.has_value());
    CHECK(FB::re(m.generators[0].quantum->op.at(0, 0)) == doctest::Approx(0.5));
}

// ---------------------------------------------------------------------------
// The finite exact space and the quadrature sphere
// ---------------------------------------------------------------------------

TEST_CASE("spekkens4 space wires the built-in rule on the exact backend") {
    const std::string path = write_fixture("sp.json", R"({
        "space": {"kind": "spekkens4"},
        "response": "spekkens"
    })");
    const auto lm = load_model_file(path);
    REQUIRE(lm.exact);
    CHECK(std::get<1>(lm.model).space->size() == 4);

    const std::string bad = write_fixture("sp-bad-backend.json", R"({
        "backend": "float",
        "space": {"kind": "spekkens4"},
        "response": "spekkens"
    })");
    CHECK(error_of(bad).find("requires \"exact\"") != std::string::npos);
}

TEST_CASE("spekkens4 accepts custom tables with exact entries") {
    const std::string path = write_fixture("sp-tables.json", R"({
        "space": {"kind": "spekkens4"},
        "response": {
            "tables": [{
                "name": "z only",
                "labels": [1, 0],
                "effects": [
                    [[[1, 0], [0, 0]], [[0, 0], [0, 0]]],
                    [[[0, 0], [0, 0]], [[0, 0], [1, 0]]]
                ],
                "rows": [["1", "1", "0", "0"], ["0", "0", "1", "1"]]
            }]
        },
        "generators": [{"name": "u", "density": ["1/2", "1/2", "0", "0"]}]
    })");
    const auto lm = load_model_file(path);
    REQUIRE(lm.exact);
    const auto& m = std::get<1>(lm.model);
    REQUIRE(m.generators.size() == 1);
    CHECK(total_mass(m.generators[0]) == ExactReal(Rational(1)));
    // The single listed test responds; the y test is outside the table.
    const auto probes = axis_probe_tests<EB>();
    CHECK(m.response->supports(probes[0]));
    CHECK(!m.response->supports(probes[2]));
}

TEST_CASE("sphere spaces pin their own mesh and validate axes") {
    const std::string pinned = write_fixture("sphere-pinned.json", R"({
        "space": {"kind": "sphere-quadrature", "polar": 8, "azimuth": 16},
        "response": "half-sphere",
        "generators": [{"name": "tilt", "axis": [0.6, 0, 0.8]}]
    })");
    // The file's own mesh order wins over the caller fallback.
    const auto lm = load_model_file(pinned, {64, 128});
    const auto& m = std::get<0>(lm.model);
    CHECK(m.space->size() == 8 * 16);
    REQUIRE(m.generators.size() == 1);
    CHECK(m.generators[0].name == "tilt");
    CHECK(FB::to_double(total_mass(m.generators[0])) == doctest::Approx(1.0).epsilon(1e-9));
    REQUIRE(m.generators[0].quantum.has_value());

    const std::string fallback = write_fixture("sphere-fallback.json", R"({
        "space": {"kind": "sphere-quadrature"},
        "response": "half-sphere"
    })");
    CHECK(std::get<0>(load_model_file(fallback, {16, 32}).model).space->size() == 16 * 32);

    const std::string bad_axis = write_fixture("sphere-bad-axis.json", R"({
        "space": {"kind": "sphere-quadrature", "polar": 8, "azimuth": 16},
        "response": "half-sphere",
        "generators": [{"name": "long", "axis": [1, 1, 0]}]
    })");
    CHECK(error_of(bad_axis).find("unit vector") != std::string::npos);

    const std::string bad_resp = write_fixture("sphere-bad-resp.json", R"({
        "space": {"kind": "sphere-quadrature"},
        "response": "born"
    })");
    CHECK(error_of(bad_resp).find("half-sphere") != std::string::npos);
}

// ---------------------------------------------------------------------------
// Diagnostics
// ---------------------------------------------------------------------------

TEST_CASE("parse errors carry path, line, and column") {
    const std::string path = write_fixture("broken.json", "{\n  \"space\": {\n  BOOM\n}\n");
    try {
        load_model_file(path);
        FAIL("expected ModelFileError");
    } catch (const ModelFileError& e) {
        const std::string msg = e.what();
        CHECK(msg.find(path) == 0);           // leads with the file
        CHECK(msg.find(":3:") != std::string::npos);  // the offending line
    }
}

TEST_CASE("semantic errors name the offending key") {
    const std::string no_space = write_fixture("no-space.json", R"({"response": "born"})");
    CHECK(error_of(no_space).find("missing key 'space'") != std::string::npos);

    const std::string bad_kind = write_fixture("bad-kind.json", R"({
        "space": {"kind": "torus"},
        "response": "born"
    })");
    CHECK(error_of(bad_kind).find("unknown kind 'torus'") != std::string::npos);

    const std::string top_array = write_fixture("top-array.json", R"([1, 2, 3])");
    CHECK(error_of(top_array).find("top level must be an object") != std::string::npos);

    const std::string short_density = write_fixture("short-density.json", R"({
        "space": {"kind": "spekkens4"},
        "response": "spekkens",
        "generators": [{"name": "u", "density": ["1/2", "1/2"]}]
    })");
    const std::string msg = error_of(short_density);
    CHECK(msg.find("generators[0]") != std::string::npos);
    CHECK(msg.find("one entry per node (4)") != std::string::npos);
}

TEST_CASE("the exact backend refuses floating-point literals") {
    const std::string path = write_fixture("exact-float-literal.json", R"({
        "backend": "exact",
        "space": {"kind": "rays", "rays": [[[0.5, 0], ["1/2*r3", 0]]]},
        "response": "born"
    })");
    const std::string msg = error_of(path);
    CHECK(msg.find("floating-point literal") != std::string::npos);
    CHECK(msg.find("space.rays[0]") != std::string::npos);

    const std::string bad_token = write_fixture("exact-bad-token.json", R"({
        "backend": "exact",
        "space": {"kind": "rays", "rays": [[["1/2*r2", 0], [0, 0]]]},
        "response": "born"
    })");
    CHECK(!error_of(bad_token).empty());
}

TEST_CASE("generator defects are reported through the file error") {
    const std::string negative = write_fixture("neg-density.json", R"({
        "space": {"kind": "spekkens4"},
        "response": "spekkens",
        "generators": [{"name": "u", "density": ["1/2", "-1/2", "1/2", "1/2"]}]
    })");
    CHECK(error_of(negative).find("negative density") != std::string::npos);

    const std::string bad_dmap = write_fixture("bad-dmap.json", R"({
        "space": {"kind": "spekkens4"},
        "response": "spekkens",
        "generators": [{
            "name": "u",
            "density": ["1/4", "1/4", "1/4", "1/4"],
            "dmap": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]
        }]
    })");
    const std::string msg = error_of(bad_dmap);
    CHECK(msg.find("generators[0].dmap") != std::string::npos);
    CHECK(msg.find("trace") != std::string::npos);
}

// ---------------------------------------------------------------------------
// Ray list files
// ---------------------------------------------------------------------------

TEST_CASE("ray files load exact amplitude lists") {
    const std::string path = write_fixture("rays-list.json", R"({
        "rays": [
            [[1, 0], [0, 0]],
            [["1/2", 0], ["1/2*r3", 0]]
        ],
        "names": ["e0", "g2"]
    })");
    const auto content = load_ray_file(path);
    REQUIRE(content.rays.size() == 2);
    CHECK(content.bloch.empty());
    CHECK(content.names == std::vector<std::string>{"e0", "g2"});
    CHECK(overlap(content.rays[0], content.rays[1]) == ExactReal(Rational(1, 4)));
}

TEST_CASE("ray files load exact Bloch lists") {
    const std::string path = write_fixture("bloch-list.json", R"({
        "bloch": [["3/5", "4/5", 0], [0, 0, 1]]
    })");
    const auto content = load_ray_file(path);
    REQUIRE(content.bloch.size() == 2);
    CHECK(content.rays.empty());
    Rational q(3, 5);
    CHECK(content.bloch[0][0] == q);
    CHECK(content.bloch[1][2] == Rational(1));
    // The loaded vectors feed straight into the moment builder.
    const auto ms = build_moment_system_bloch(content.bloch);
    CHECK(ms.overlaps[0][1] == Rational(1, 2));
}

TEST_CASE("ray files demand exactly one of the two list forms") {
    const std::string both = write_fixture("rays-both.json", R"({
        "rays": [[[1, 0], [0, 0]]],
        "bloch": [[0, 0, 1]]
    })");
    CHECK_THROWS_AS(load_ray_file(both), ModelFileError);

    const std::string neither = write_fixture("rays-neither.json", R"({"names": []})");
    try {
        load_ray_file(neither);
        FAIL("expected ModelFileError");
    } catch (const ModelFileError& e) {
        CHECK(std::string(e.what()).find("exactly one of 'rays' or 'bloch'") != std::string::npos);
    }

    const std::string bad_bloch = write_fixture("bad-bloch.json", R"({"bloch": [[0, 0]]})");
    try {
        load_ray_file(bad_bloch);
        FAIL("expected ModelFileError");
    } catch (const ModelFileError& e) {
        CHECK(std::string(e.what()).find("[x, y, z]") != std::string::npos);
    }

    const std::string irr = write_fixture("irrational-bloch.json", R"({"bloch": [[0, 0, "1/2*r3"]]})");
    try {
        load_ray_file(irr);
        FAIL("expected ModelFileError");
    } catch (const ModelFileError& e) {
        CHECK(std::string(e.what()).find("sqrt(3) component") != std::string::npos);
    }
}

// ---------------------------------------------------------------------------
// Loaded models feed the pipeline
// ---------------------------------------------------------------------------

TEST_CASE("a definition-file model runs the staged audit") {
    const std::string path = write_fixture("pipeline-rays.json", R"({
        "backend": "exact",
        "space": {
            "kind": "rays",
            "rays": [
                [[1, 0], [0, 0]],
                [[0, 0], [1, 0]],
                [["1/2", 0], ["1/2*r3", 0]],
                [["1/2", 0], ["-1/2*r3", 0]]
            ],
            "names": ["e0", "e1", "g2", "g3"]
        },
        "response": "born"
    })");
    const auto lm = load_model_file(path);
    REQUIRE(lm.exact);
    PipelineOptions opt;
    const auto rep = proof_pipeline_audit(std::get<1>(lm.model), opt);
    // Distinct half-mixes share the maximally mixed D-map value.
    CHECK(rep.break_stage == 2);
}
