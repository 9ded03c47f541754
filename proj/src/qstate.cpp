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

#include "ontocheck/qstate.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace ontocheck {

std::vector<double> hermitian_eigenvalues(const Mat<FloatBackend>& m) {
    if (m.dim == 0) return {};
    if (m.dim == 2) {
        const auto d = pauli_decompose<FloatBackend>(m);
        const double r = std::sqrt(d.x * d.x + d.y * d.y + d.z * d.z);
        return {d.c - r, d.c + r};
    }
    Eigen::MatrixXcd em(m.dim, m.dim);
    for (std::size_t i = 0; i < m.dim; ++i) {
        for (std::size_t j = 0; j < m.dim; ++j) {
            em(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m.at(i, j);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(em, Eigen::EigenvaluesOnly);
    std::vector<double> eigs(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + m.dim);
    std::sort(eigs.begin(), eigs.end());
    return eigs;
}

bool is_psd_exact(Mat<ExactBackend> m) {
    std::vector<std::size_t> live(m.dim);
    for (std::size_t i = 0; i < m.dim; ++i) live[i] = i;

    while (!live.empty()) {
        std::size_t pivot = live.size();
        for (std::size_t ii = 0; ii < live.size(); ++ii) {
            const ExactReal d = m.at(live[ii], live[ii]).re;
            const int s = d.sign();
            if (s < 0) return false;
            if (s > 0 && pivot == live.size()) pivot = ii;
        }
        if (pivot == live.size()) {
            // All remaining diagonal entries are zero: PSD iff the remaining
            // block is identically zero.
            for (std::size_t ii : live) {
                for (std::size_t jj : live) {
                    if (m.at(ii, jj) != ExactComplex{}) return false;
                }
            }
            return true;
        }
        const std::size_t p = live[pivot];
        const ExactReal d = m.at(p, p).re;
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(pivot));
        for (std::size_t ii : live) {
            for (std::size_t jj : live) {
                const ExactComplex upd = m.at(ii, p) * m.at(p, jj) / ExactComplex(d);
                m.at(ii, jj) -= upd;
            }
        }
    }
    return true;
}

Mat<FloatBackend> principal_eigenprojector(const Mat<FloatBackend>& m) {
    if (m.dim == 0) throw std::invalid_argument("principal_eigenprojector: empty matrix");
    Eigen::MatrixXcd em(m.dim, m.dim);
    for (std::size_t i = 0; i < m.dim; ++i) {
        for (std::size_t j = 0; j < m.dim; ++j) {
            em(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m.at(i, j);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(em);
    Eigen::Index which = 0;
    solver.eigenvalues().cwiseAbs().maxCoeff(&which);
    const Eigen::VectorXcd v = solver.eigenvectors().col(which);
    Mat<FloatBackend> p(m.dim);
    for (std::size_t i = 0; i < m.dim; ++i) {
        for (std::size_t j = 0; j < m.dim; ++j) {
            p.at(i, j) = v(static_cast<Eigen::Index>(i)) *
                         std::conj(v(static_cast<Eigen::Index>(j)));
        }
    }
    return p;
}

Ray<FloatBackend> bloch_to_ray(const Bloch<FloatBackend>& b) {
    const double n2 = b.x * b.x + b.y * b.y + b.z * b.z;
    if (std::fabs(n2 - 1.0) > 2 * FloatBackend::eps()) {
        throw std::invalid_argument("bloch_to_ray: non-unit Bloch vector");
    }
    if (b.z <= -1.0 + 1e-14) {
        return Ray<FloatBackend>{{{0.0, 0.0}, {1.0, 0.0}}};
    }
    const double c0 = std::sqrt((1.0 + b.z) / 2.0);
    return Ray<FloatBackend>{{{c0, 0.0}, {b.x / (2.0 * c0), b.y / (2.0 * c0)}}};
}

}  // namespace ontocheck
