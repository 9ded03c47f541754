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

#include <cmath>
#include <cstdint>
#include <vector>

#include "ontocheck/kernels.hpp"
#include "ontocheck/rng.hpp"

using namespace ontocheck;

namespace {

/// Restores the parallel toggle on scope exit; the toggle is process-global.
struct ParallelGuard {
    bool saved = kernels::parallel_enabled();
    ~ParallelGuard() { kernels::set_parallel(saved); }
};

std::vector<double> random_vec(Rng& rng, std::size_t n, double lo = -1.0, double hi = 1.0) {
    std::vector<double> v(n);
    for (auto& x : v) x = lo + (hi - lo) * rng.u01();
    return v;
}

std::vector<std::uint8_t> random_mask(Rng& rng, std::size_t n) {
    std::vector<std::uint8_t> m(n);
    for (auto& x : m) x = rng.u01() < 0.5 ? 0 : 1;
    return m;
}

}  // namespace

TEST_CASE("blocked kernels are bit-identical with OpenMP on and off") {
    ParallelGuard guard;
    Rng rng(42);
    // Sizes straddle the blocking boundaries: empty, single, partial block,
    // exact blocks, and a large prime that ends mid-block.
    for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{7}, std::size_t{1024},
                          std::size_t{8192}, std::size_t{100003}}) {
        const auto a = random_vec(rng, n);
        const auto b = random_vec(rng, n);
        const auto c = random_vec(rng, n);
        const auto m = random_mask(rng, n);

        kernels::set_parallel(false);
        const double s0 = kernels::sum(a);
        const double d0 = kernels::dot(a, b);
        const double t0 = kernels::triple_dot(a, b, c);
        const double k0 = kernels::masked_dot(a, b, m);
        const double v0 = kernels::abs_diff_dot(a, b, c);

        kernels::set_parallel(true);
        CHECK(kernels::sum(a) == s0);
        CHECK(kernels::dot(a, b) == d0);
        CHECK(kernels::triple_dot(a, b, c) == t0);
        CHECK(kernels::masked_dot(a, b, m) == k0);
        CHECK(kernels::abs_diff_dot(a, b, c) == v0);
    }
}

TEST_CASE("repeated calls return identical bits") {
    ParallelGuard guard;
    kernels::set_parallel(true);
    Rng rng(43);
    const auto a = random_vec(rng, 100003);
    const auto b = random_vec(rng, 100003);
    const double first = kernels::dot(a, b);
    for (int k = 0; k < 10; ++k) CHECK(kernels::dot(a, b) == first);
}

TEST_CASE("blocked kernels agree with the serial reference") {
    ParallelGuard guard;
    kernels::set_parallel(true);
    Rng rng(44);
    for (std::size_t n : {std::size_t{9}, std::size_t{8192}, std::size_t{100003}}) {
        const auto a = random_vec(rng, n);
        const auto b = random_vec(rng, n);
        const auto c = random_vec(rng, n);
        const auto m = random_mask(rng, n);
        // The blocked fold reorders additions, so agreement is to roundoff,
        // not bitwise; these data are O(1) so 1e-9 absolute is generous.
        CHECK(kernels::sum(a) == doctest::Approx(kernels::ref::sum(a)).epsilon(1e-9));
        CHECK(kernels::dot(a, b) == doctest::Approx(kernels::ref::dot(a, b)).epsilon(1e-9));
        CHECK(kernels::triple_dot(a, b, c) ==
              doctest::Approx(kernels::ref::triple_dot(a, b, c)).epsilon(1e-9));
        CHECK(kernels::masked_dot(a, b, m) ==
              doctest::Approx(kernels::ref::masked_dot(a, b, m)).epsilon(1e-9));
        CHECK(kernels::abs_diff_dot(a, b, c) ==
              doctest::Approx(kernels::ref::abs_diff_dot(a, b, c)).epsilon(1e-9));
    }
}

TEST_CASE("hand-checked values on small inputs") {
    const std::vector<double> a{1.0, 2.0, 3.0, 4.0};
    const std::vector<double> b{1.0, -1.0, 1.0, -1.0};
    const std::vector<double> c{2.0, 2.0, 2.0, 2.0};
    const std::vector<std::uint8_t> m{1, 0, 1, 0};

    CHECK(kernels::sum(a) == 10.0);
    CHECK(kernels::dot(a, b) == -2.0);
    CHECK(kernels::triple_dot(a, b, c) == -4.0);
    CHECK(kernels::masked_dot(a, b, m) == 4.0);       // 1*1 + 3*1
    CHECK(kernels::abs_diff_dot(c, a, b) == 20.0);    // 2*(0+3+2+5)
    CHECK(kernels::ref::sum(a) == 10.0);
    CHECK(kernels::ref::masked_dot(a, b, m) == 4.0);
    CHECK(kernels::ref::abs_diff_dot(c, a, b) == 20.0);

    CHECK(kernels::sum(std::vector<double>{}) == 0.0);
    CHECK(kernels::dot(std::vector<double>{}, std::vector<double>{}) == 0.0);
}

TEST_CASE("integer data sums exactly") {
    // Doubles hold these integers exactly, so both implementations must
    // produce the exact total regardless of summation order.
    std::vector<double> a(10000);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<double>(i + 1);
    const double expect = 10000.0 * 10001.0 / 2.0;
    CHECK(kernels::sum(a) == expect);
    CHECK(kernels::ref::sum(a) == expect);
}
