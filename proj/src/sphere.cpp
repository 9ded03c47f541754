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

#include "ontocheck/sphere.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ontocheck {

GaussLegendreRule gauss_legendre(std::size_t n) {
    if (n == 0) throw std::invalid_argument("gauss_legendre: n must be positive");
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double dn = static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        // Tricomi initial guess, then Newton on P_n.
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (dn + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double dk = static_cast<double>(k);
                const double p2 = ((2.0 * dk - 1.0) * x * p1 - (dk - 1.0) * p0) / dk;
                p0 = p1;
                p1 = p2;
            }
            dp = dn * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        // The cosine seed walks from +1 down to -1; store reversed to meet
        // the ascending-order contract.
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

SphereMesh make_sphere_mesh(std::size_t n_polar, std::size_t n_azimuth) {
    if (n_polar == 0 || n_azimuth == 0) {
        throw std::invalid_argument("make_sphere_mesh: orders must be positive");
    }
    const GaussLegendreRule gl = gauss_legendre(n_polar);
    SphereMesh mesh;
    mesh.n_polar = n_polar;
    mesh.n_azimuth = n_azimuth;
    mesh.xyz.reserve(n_polar * n_azimuth);
    mesh.weight.reserve(n_polar * n_azimuth);
    const double dphi = 2.0 * std::numbers::pi / static_cast<double>(n_azimuth);
    for (std::size_t j = 0; j < n_polar; ++j) {
        const double u = gl.nodes[j];  // cos(theta)
        const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
        const double w = gl.weights[j] * dphi;
        for (std::size_t k = 0; k < n_azimuth; ++k) {
            const double phi = (static_cast<double>(k) + 0.5) * dphi;
            mesh.xyz.push_back({s * std::cos(phi), s * std::sin(phi), u});
            mesh.weight.push_back(w);
        }
    }
    return mesh;
}

std::pair<std::size_t, std::size_t> parse_quadrature_spec(const std::string& spec) {
    const std::size_t x = spec.find('x');
    if (x == std::string::npos || x == 0 || x + 1 == spec.size()) {
        throw std::invalid_argument("quadrature spec must be NxM, got '" + spec + "'");
    }
    std::size_t pos1 = 0, pos2 = 0;
    unsigned long a = 0, b = 0;
    try {
        a = std::stoul(spec.substr(0, x), &pos1);
        b = std::stoul(spec.substr(x + 1), &pos2);
    } catch (const std::exception&) {
        throw std::invalid_argument("quadrature spec must be NxM, got '" + spec + "'");
    }
    if (pos1 != x || pos2 != spec.size() - x - 1 || a == 0 || b == 0) {
        throw std::invalid_argument("quadrature spec must be NxM, got '" + spec + "'");
    }
    return {a, b};
}

}  // namespace ontocheck
