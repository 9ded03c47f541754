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

/// Command-line front end. Subcommands:
///   adequacy     model statistics vs Born statistics over a test battery
///   triple-test  the three-ray moment-system contradiction (or other ray sets)
///   pipeline     the staged no-go audit on a model, or the abstract run
///   witness      D-map collision scan over generator mixtures
/// Exit codes: 0 all checks passed, 1 a check failed, 2 usage or model error.
/// Fixed seed and configuration give byte-identical output.

#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <utility>
#include <variant>

#include <CLI11.hpp>

#include "ontocheck/modelfile.hpp"
#include "ontocheck/report.hpp"
#include "ontocheck/rng.hpp"

namespace {

using namespace ontocheck;
using report::Json;

void emit(const Json& j, const std::string& text, bool json_out) {
    if (json_out) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

std::pair<std::size_t, std::size_t> mesh_of(const std::string& quad) {
    return parse_quadrature_spec(quad);
}

std::string default_quadrature() {
    if (const char* env = std::getenv("ONTOCHECK_QUADRATURE")) return env;
    return "64x128";
}

// ---------------------------------------------------------------------------
// adequacy
// ---------------------------------------------------------------------------

template <class B>
int run_adequacy(const OntologicalModel<B>& model, std::size_t tests, double tol_d,
                 std::uint64_t seed, const std::string& quad, bool json_out) {
    typename B::Real tol;
    if constexpr (B::is_exact) {
        tol = ExactReal(Rational(tol_d));
    } else {
        tol = tol_d;
    }

    std::vector<Experiment<B>> battery = axis_probe_tests<B>();
    if constexpr (B::is_exact) {
        std::size_t k = 0;
        for (const auto& r : exact_probe_rays()) {
            battery.push_back(ray_test<B>("in-field ray test #" + std::to_string(++k), r));
        }
    } else {
        Rng rng(seed);
        for (std::size_t k = 0; k < tests; ++k) {
            battery.push_back(ray_test<B>("random ray test #" + std::to_string(k + 1), rng.ray()));
        }
    }

    Json j;
    j["command"] = "adequacy";
    j["model"] = model.name;
    j["backend"] = B::is_exact ? "exact" : "float";
    j["quadrature"] = quad;
    j["tol"] = tol_d;
    j["seed"] = seed;
    j["tests"] = tests;

    Json records = Json::array();
    std::set<std::string> skipped;
    double max_dev = 0.0;
    bool pass = true;
    for (const auto& gen : model.generators) {
        if (!gen.quantum) {
            skipped.insert("preparation " + gen.name + " (no D-map value)");
            continue;
        }
        for (const auto& x : battery) {
            if (!model.response->supports(x)) {
                skipped.insert("experiment " + x.name);
                continue;
            }
            const AdequacyReport<B> rep = adequacy_check(model, gen, x, tol);
            max_dev = std::max(max_dev, B::to_double(rep.max_dev));
            pass = pass && rep.pass;
            records.push_back(report::adequacy_record_json<B>(gen.name, rep));
        }
    }
    j["records"] = std::move(records);
    j["skipped"] = Json::array();
    for (const auto& s : skipped) j["skipped"].push_back(s);
    j["max_deviation"] = max_dev;
    j["pass"] = pass;

    emit(j, report::adequacy_text(j), json_out);
    return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// triple-test
// ---------------------------------------------------------------------------

int run_triple_default(bool json_out) {
    const TripleTestResult t = triple_test();
    const Json j = report::triple_json(t);
    emit(j, report::triple_text(j), json_out);
    return t.pass ? 0 : 1;
}

int run_moment_rays(const std::string& rays_arg, bool json_out) {
    MomentSystem ms;
    if (rays_arg == "orthogonal-pair") {
        using C = ExactComplex;
        const std::vector<Ray<ExactBackend>> rays{
            Ray<ExactBackend>{{C(ExactReal(1)), C()}},
            Ray<ExactBackend>{{C(), C(ExactReal(1))}},
        };
        ms = build_moment_system(rays);
    } else {
        const RayFileContent rf = load_ray_file(rays_arg);
        ms = rf.bloch.empty() ? build_moment_system(rf.rays)
                              : build_moment_system_bloch(rf.bloch, rf.names);
    }
    const FeasibilityOutcome out = solve_feasibility(ms);

    // Exhaustive oracle: only where the subset enumeration stays small.
    std::optional<bool> oracle;
    if (ms.n <= 4) {
        oracle = lp::brute_force_feasible(ms.sys) == out.feasible;
    }
    const Json j = report::moment_json(ms, out, oracle);
    emit(j, report::moment_text(j), json_out);
    return j["pass"].get<bool>() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// pipeline
// ---------------------------------------------------------------------------

int run_pipeline(const PipelineReport& rep, const std::string& backend, std::uint64_t seed,
                 bool keep_going, const std::string& quad, bool json_out) {
    Json j = report::pipeline_json(rep);
    j["backend"] = backend;
    j["config"] = Json{{"seed", seed}, {"keep_going", keep_going}, {"quadrature", quad}};
    emit(j, report::pipeline_text(j), json_out);
    return rep.ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// witness
// ---------------------------------------------------------------------------

template <class B>
int run_witness(const OntologicalModel<B>& model, const Rational& step, double tv_threshold,
                std::size_t tests, std::uint64_t seed, const std::string& step_str,
                bool json_out) {
    const DmapWitness<B> w = dmap_witness_scan<B>(model, step, tv_threshold, 1e-12, tests, seed);
    Json j;
    j["command"] = "witness";
    j["model"] = model.name;
    j["backend"] = B::is_exact ? "exact" : "float";
    j["step"] = step_str;
    j["tv_threshold"] = tv_threshold;
    j["random_tests"] = tests;
    j["seed"] = seed;
    j.update(report::witness_json<B>(w));
    emit(j, report::witness_text(j), json_out);
    return 0;
}

template <class F>
int visit_model(LoadedModel& lm, F&& f) {
    return std::visit(
        [&](auto& model) {
            using M = std::decay_t<decltype(model)>;
            constexpr bool exact = std::is_same_v<M, OntologicalModel<ExactBackend>>;
            using B = std::conditional_t<exact, ExactBackend, FloatBackend>;
            return f(model, B{});
        },
        lm.model);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ontological-model verification toolkit"};
    app.require_subcommand(1);

    const std::string quad_default = default_quadrature();

    std::string model_arg;
    std::string quad = quad_default;
    std::string format = "text";
    std::uint64_t seed = 12345;
    std::size_t tests = 8;
    double tol = -1.0;

    auto* adequacy = app.add_subcommand("adequacy", "model statistics vs Born statistics");
    adequacy->add_option("--model", model_arg, "built-in name or definition file")->required();
    adequacy->add_option("--quadrature", quad, "sphere mesh order NxM");
    adequacy->add_option("--tests", tests, "random ray tests per preparation");
    adequacy->add_option("--tol", tol, "tolerance (default 1e-6 float, 0 exact)");
    adequacy->add_option("--seed", seed, "RNG seed");
    adequacy->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string rays_arg = "default";
    auto* triple = app.add_subcommand("triple-test", "three-ray moment feasibility");
    triple->add_option("--rays", rays_arg, "default | orthogonal-pair | ray list file");
    triple->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

    bool abstract_run = false;
    bool keep_going = false;
    auto* pipeline = app.add_subcommand("pipeline", "staged no-go audit");
    pipeline->add_option("--model", model_arg, "built-in name or definition file");
    pipeline->add_flag("--abstract", abstract_run, "run the abstract qubit audit");
    pipeline->add_flag("--keep-going", keep_going, "run the later stages past a break");
    pipeline->add_option("--quadrature", quad, "sphere mesh order NxM");
    pipeline->add_option("--seed", seed, "RNG seed");
    pipeline->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string step_str = "1/16";
    double tv_threshold = 0.1;
    std::size_t wtests = 100;
    auto* witness = app.add_subcommand("witness", "D-map collision scan");
    witness->add_option("--model", model_arg, "built-in name or definition file")->required();
    witness->add_option("--step", step_str, "mixture grid step (rational, default 1/16)");
    witness->add_option("--tv-threshold", tv_threshold, "minimum total variation");
    witness->add_option("--tests", wtests, "random tests for the statistics gap");
    witness->add_option("--quadrature", quad, "sphere mesh order NxM");
    witness->add_option("--seed", seed, "RNG seed");
    witness->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    const bool json_out = format == "json";

    try {
        if (adequacy->parsed()) {
            LoadedModel lm = resolve_model(model_arg, mesh_of(quad));
            if (tol < 0) tol = lm.exact ? 0.0 : 1e-6;
            const double tol_v = tol;
            return visit_model(lm, [&](auto& model, auto backend_tag) {
                using B = decltype(backend_tag);
                return run_adequacy<B>(model, tests, tol_v, seed, quad, json_out);
            });
        }
        if (triple->parsed()) {
            if (rays_arg == "default") return run_triple_default(json_out);
            return run_moment_rays(rays_arg, json_out);
        }
        if (pipeline->parsed()) {
            if (abstract_run) {
                return run_pipeline(abstract_pipeline_audit(), "exact", seed, keep_going, quad,
                                    json_out);
            }
            if (model_arg.empty()) {
                std::cerr << "error: pipeline needs --model or --abstract\n";
                return 2;
            }
            LoadedModel lm = resolve_model(model_arg, mesh_of(quad));
            PipelineOptions opts;
            opts.keep_going = keep_going;
            opts.seed = seed;
            return visit_model(lm, [&](auto& model, auto backend_tag) {
                using B = decltype(backend_tag);
                const PipelineReport rep = proof_pipeline_audit<B>(model, opts);
                return run_pipeline(rep, B::is_exact ? "exact" : "float", seed, keep_going, quad,
                                    json_out);
            });
        }
        if (witness->parsed()) {
            LoadedModel lm = resolve_model(model_arg, mesh_of(quad));
            const Rational step = rational_from_string(step_str);
            return visit_model(lm, [&](auto& model, auto backend_tag) {
                using B = decltype(backend_tag);
                return run_witness<B>(model, step, tv_threshold, wtests, seed, step_str, json_out);
            });
        }
    } catch (const ModelFileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
