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

#ifndef ONTOCHECK_SPHERE_HPP
#define ONTOCHECK_SPHERE_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace ontocheck {

struct GaussLegendreRule {
    std::vector<double> nodes;    // ascending in (-1, 1)
    std::vector<double> weights;  // sum to 2
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1], via
/// Newton iteration on the Legendre recurrence.
GaussLegendreRule gauss_legendre(std::size_t n);

/// Product quadrature mesh on the unit sphere: Gauss-Legendre in cos(theta)
/// times uniform midpoint nodes in phi. Weights sum to 4*pi. Midpoint phi
/// nodes and an even polar order keep nodes off the coordinate great
/// circles, so the Pauli-axis tests never see a node exactly on a response
/// boundary.
struct SphereMesh {
    std::size_t n_polar = 0;
    std::size_t n_azimuth = 0;
    std::vector<std::array<double, 3>> xyz;
    std::vector<double> weight;

    std::size_t size() const { return xyz.size(); }
};

SphereMesh make_sphere_mesh(std::size_t n_polar, std::size_t n_azimuth);

/// Quadrature order spec "NxM" (e.g. "64x128") -> (n_polar, n_azimuth).
/// Throws std::invalid_argument on malformed input.
std::pair<std::size_t, std::size_t> parse_quadrature_spec(const std::string& spec);

}  // namespace ontocheck

#endif  // ONTOCHECK_SPHERE_HPP
