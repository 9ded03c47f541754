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

// Reduction kernels: naive reference vs the blocked kernel with OpenMP off
// and on. The blocked result is bit-identical in both modes by construction
// (fixed block partials folded in block order), so this measures pure
// speed. The predict benchmarks time the end-to-end hot path: one
// quadrature integral per POVM outcome on the product-mesh model.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "ontocheck/kernels.hpp"
#include "ontocheck/models.hpp"
#include "ontocheck/ontology.hpp"
#include "ontocheck/rng.hpp"

namespace {

using namespace ontocheck;

struct Data {
    std::vector<double> a, b, c;
    std::vector<std::uint8_t> mask;
};

Data make_data(std::size_t n) {
    Rng rng(42);
    Data d;
    d.a.reserve(n);
    d.b.reserve(n);
    d.c.reserve(n);
    d.mask.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        d.a.push_back(rng.u01());
        d.b.push_back(rng.u01());
        d.c.push_back(rng.u01());
        d.mask.push_back(rng.u01() < 0.5 ? 1 : 0);
    }
    return d;
}

enum class Mode { kRef, kBlocked, kParallel };

void apply(Mode m) {
    kernels::set_parallel(m == Mode::kParallel);
}

void bm_sum(benchmark::State& state, Mode m) {
    const auto d = make_data(static_cast<std::size_t>(state.range(0)));
    apply(m);
    for (auto _ : state) {
        double r = m == Mode::kRef ? kernels::ref::sum(d.a) : kernels::sum(d.a);
        benchmark::DoNotOptimize(r);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_triple_dot(benchmark::State& state, Mode m) {
    const auto d = make_data(static_cast<std::size_t>(state.range(0)));
    apply(m);
    for (auto _ : state) {
        double r = m == Mode::kRef ? kernels::ref::triple_dot(d.a, d.b, d.c)
                                   : kernels::triple_dot(d.a, d.b, d.c);
        benchmark::DoNotOptimize(r);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_masked_dot(benchmark::State& state, Mode m) {
    const auto d = make_data(static_cast<std::size_t>(state.range(0)));
    apply(m);
    for (auto _ : state) {
        double r = m == Mode::kRef ? kernels::ref::masked_dot(d.a, d.b, d.mask)
                                   : kernels::masked_dot(d.a, d.b, d.mask);
        benchmark::DoNotOptimize(r);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_abs_diff_dot(benchmark::State& state, Mode m) {
    const auto d = make_data(static_cast<std::size_t>(state.range(0)));
    apply(m);
    for (auto _ : state) {
        double r = m == Mode::kRef ? kernels::ref::abs_diff_dot(d.a, d.b, d.c)
                                   : kernels::abs_diff_dot(d.a, d.b, d.c);
        benchmark::DoNotOptimize(r);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

/// End to end: the statistics of one random preparation on one random ray
/// test of the 64x128 model (8192 nodes, two quadrature integrals).
void bm_predict(benchmark::State& state, Mode m) {
    const auto model = make_ks_model(64, 128);
    Rng rng(7);
    const auto rho = ks_prepare(model, rng.ray());
    const auto x = ray_test<FloatBackend>("probe", rng.ray());
    apply(m);
    for (auto _ : state) {
        auto p = predict(model, rho, x);
        benchmark::DoNotOptimize(p);
    }
    state.SetItemsProcessed(state.iterations() * 8192);
}

void register_modes(const char* name, void (*fn)(benchmark::State&, Mode)) {
    const std::int64_t sizes[] = {8192, std::int64_t{1} << 20};
    for (const auto size : sizes) {
        benchmark::RegisterBenchmark((std::string(name) + "/ref").c_str(), fn, Mode::kRef)
            ->Arg(size);
        benchmark::RegisterBenchmark((std::string(name) + "/blocked").c_str(), fn, Mode::kBlocked)
            ->Arg(size);
        benchmark::RegisterBenchmark((std::string(name) + "/parallel").c_str(), fn,
                                     Mode::kParallel)
            ->Arg(size);
    }
}

}  // namespace

int main(int argc, char** argv) {
    register_modes("sum", bm_sum);
    register_modes("triple_dot", bm_triple_dot);
    register_modes("masked_dot", bm_masked_dot);
    register_modes("abs_diff_dot", bm_abs_diff_dot);
    benchmark::RegisterBenchmark("predict_64x128/blocked", bm_predict, Mode::kBlocked);
    benchmark::RegisterBenchmark("predict_64x128/parallel", bm_predict, Mode::kParallel);
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
