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
#include <numbers>

#include "ontocheck/rng.hpp"
#include "ontocheck/sphere.hpp"

using namespace ontocheck;

TEST_CASE("gauss-legendre nodes and weights") {
    for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{5}, std::size_t{16},
                          std::size_t{64}}) {
        const GaussLegendreRule gl = gauss_legendre(n);
        REQUIRE(gl.nodes.size() == n);
        REQUIRE(gl.weights.size() == n);
        double wsum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(gl.nodes[i] > -1.0);
            CHECK(gl.nodes[i] < 1.0);
            if (i > 0) CHECK(gl.nodes[i] > gl.nodes[i - 1]);
            CHECK(gl.weights[i] > 0.0);
            wsum += gl.weights[i];
        }
        CHECK(wsum == doctest::Approx(2.0).epsilon(1e-13));
        // Symmetry of the rule about 0.
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(gl.nodes[i] == doctest::Approx(-gl.nodes[n - 1 - i]).epsilon(1e-12));
            CHECK(gl.weights[i] == doctest::Approx(gl.weights[n - 1 - i]).epsilon(1e-12));
        }
    }
}

TEST_CASE("gauss-legendre integrates polynomials of degree 2n-1 exactly") {
    const std::size_t n = 8;
    const GaussLegendreRule gl = gauss_legendre(n);
    for (int k = 0; k <= 15; ++k) {  // 2n - 1 = 15
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += gl.weights[i] * std::pow(gl.nodes[i], k);
        const double expect = (k % 2 == 0) ? 2.0 / (k + 1) : 0.0;
        CHECK(s == doctest::Approx(expect).epsilon(1e-12));
    }
    // Degree 2n misses: x^16 is not integrated exactly by an 8-point rule.
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += gl.weights[i] * std::pow(gl.nodes[i], 16);
    CHECK(std::fabs(s - 2.0 / 17.0) > 1e-9);
}

TEST_CASE("sphere mesh measures the sphere") {
    for (auto [np, na] : {std::pair<std::size_t, std::size_t>{16, 32}, {64, 128}}) {
        const SphereMesh mesh = make_sphere_mesh(np, na);
        REQUIRE(mesh.size() == np * na);
        double wsum = 0.0;
        double z2 = 0.0;
        for (std::size_t i = 0; i < mesh.size(); ++i) {
            const auto& p = mesh.xyz[i];
            CHECK(p[0] * p[0] + p[1] * p[1] + p[2] * p[2] == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(mesh.weight[i] > 0.0);
            wsum += mesh.weight[i];
            z2 += mesh.weight[i] * p[2] * p[2];
        }
        const double fourpi = 4.0 * std::numbers::pi;
        CHECK(wsum == doctest::Approx(fourpi).epsilon(1e-12));
        CHECK(z2 == doctest::Approx(fourpi / 3.0).epsilon(1e-12));
    }
}

TEST_CASE("mesh is closed under the antipodal map with equal weights") {
    // Polar-major layout: node (j, i) sits at index j * n_azimuth + i. The
    // antipode of polar slot j is slot n_polar-1-j (Gauss-Legendre symmetry)
    // and of azimuth slot i is i + n_azimuth/2 mod n_azimuth (midpoint rule
    // with an even count). This closure is what makes antipodal half-mixes
    // integrate to exactly half the mass.
    const std::size_t np = 16;
    const std::size_t na = 32;
    const SphereMesh mesh = make_sphere_mesh(np, na);
    for (std::size_t j = 0; j < np; ++j) {
        for (std::size_t i = 0; i < na; ++i) {
            const std::size_t k = j * na + i;
            const std::size_t anti = (np - 1 - j) * na + (i + na / 2) % na;
            CHECK(mesh.xyz[k][0] == doctest::Approx(-mesh.xyz[anti][0]).epsilon(1e-12));
            CHECK(mesh.xyz[k][1] == doctest::Approx(-mesh.xyz[anti][1]).epsilon(1e-12));
            CHECK(mesh.xyz[k][2] == doctest::Approx(-mesh.xyz[anti][2]).epsilon(1e-12));
            CHECK(mesh.weight[k] == doctest::Approx(mesh.weight[anti]).epsilon(1e-12));
        }
    }
}

TEST_CASE("no node lies on a coordinate great circle") {
    // The Pauli-axis response boundaries are the great circles x=0, y=0,
    // z=0; the mesh keeps all nodes strictly off them so axis tests never
    // sample a discontinuity.
    const SphereMesh mesh = make_sphere_mesh(64, 128);
    for (const auto& p : mesh.xyz) {
        CHECK(std::fabs(p[0]) > 1e-12);
        CHECK(std::fabs(p[1]) > 1e-12);
        CHECK(std::fabs(p[2]) > 1e-12);
    }
}

TEST_CASE("hinge integrand converges at the expected quadrature scale") {
    // integral over S^2 of (1/pi) max(0, n . lambda) = 1 for every unit n.
    // The kink at the equator limits the rule to roughly mesh-squared
    // accuracy; 64x128 keeps the residue near 1e-4.
    const SphereMesh mesh = make_sphere_mesh(64, 128);
    Rng rng(9);
    for (int k = 0; k < 5; ++k) {
        const auto n = rng.bloch_direction();
        double s = 0.0;
        for (std::size_t i = 0; i < mesh.size(); ++i) {
            const double d =
                n.x * mesh.xyz[i][0] + n.y * mesh.xyz[i][1] + n.z * mesh.xyz[i][2];
            if (d > 0.0) s += mesh.weight[i] * d;
        }
        CHECK(s / std::numbers::pi == doctest::Approx(1.0).epsilon(2e-3));
    }
}

TEST_CASE("quadrature spec parsing") {
    CHECK(parse_quadrature_spec("64x128") == std::make_pair(std::size_t{64}, std::size_t{128}));
    CHECK(parse_quadrature_spec("1x1") == std::make_pair(std::size_t{1}, std::size_t{1}));
    CHECK_THROWS_AS(parse_quadrature_spec(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_quadrature_spec("64"), std::invalid_argument);
    CHECK_THROWS_AS(parse_quadrature_spec("x128"), std::invalid_argument);
    CHECK_THROWS_AS(parse_quadrature_spec("64x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_quadrature_spec("0x128"), std::invalid_argument);
    CHECK_THROWS_AS(parse_quadrature_spec("64x12a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_quadrature_spec("axb"), std::invalid_argument);
    CHECK_THROWS_AS(make_sphere_mesh(0, 10), std::invalid_argument);
}
