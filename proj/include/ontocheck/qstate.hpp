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

#ifndef ONTOCHECK_QSTATE_HPP
#define ONTOCHECK_QSTATE_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ontocheck/matrix.hpp"

namespace ontocheck {

/// Outcome of a validity check; message names the first violated condition
/// together with the offending magnitude.
struct ValidityReport {
    bool ok = true;
    std::string message;
    double magnitude = 0.0;

    static ValidityReport pass() { return {}; }
    static ValidityReport fail(std::string msg, double mag) {
        return {false, std::move(msg), mag};
    }
};

/// Unit-norm complex vector identified up to global phase.
template <class B>
struct Ray {
    std::vector<typename B::Complex> v;

    std::size_t dim() const { return v.size(); }
};

template <class B>
struct DensityMatrix {
    Mat<B> op;
};

template <class B>
struct Effect {
    Mat<B> op;
};

/// Finite-outcome POVM: distinct real labels, one effect per label.
template <class B>
struct Povm {
    std::vector<double> labels;
    std::vector<Effect<B>> effects;

    std::size_t size() const { return labels.size(); }
};

template <class B>
struct Bloch {
    typename B::Real x{}, y{}, z{};
};

/// Eigenvalues of a hermitian float matrix, ascending. 2x2 uses the
/// closed-form characteristic polynomial; general d defers to an iterative
/// hermitian solver.
std::vector<double> hermitian_eigenvalues(const Mat<FloatBackend>& m);

/// Exact positive-semidefiniteness of a hermitian matrix by pivoted Schur
/// complement reduction: a hermitian matrix with zero diagonal is PSD iff it
/// is zero; otherwise a negative pivot refutes and a positive pivot reduces.
bool is_psd_exact(Mat<ExactBackend> m);

/// Rank-1 projector onto the eigenvector of the largest-magnitude eigenvalue
/// of a hermitian float matrix.
Mat<FloatBackend> principal_eigenprojector(const Mat<FloatBackend>& m);

namespace detail {

inline bool psd_within(const Mat<FloatBackend>& m, double slack) {
    const auto eigs = hermitian_eigenvalues(m);
    return eigs.empty() || eigs.front() >= -slack;
}

inline bool psd_within(const Mat<ExactBackend>& m, const ExactReal& /*slack is zero*/) {
    return is_psd_exact(m);
}

}  // namespace detail

template <class B>
typename B::Complex inner(const Ray<B>& g, const Ray<B>& h) {
    typename B::Complex s{};
    for (std::size_t i = 0; i < g.v.size(); ++i) s += B::conj(g.v[i]) * h.v[i];
    return s;
}

template <class B>
typename B::Real norm_sq(const Ray<B>& g) {
    typename B::Real s{};
    for (const auto& c : g.v) s += B::re(B::conj(c) * c);
    return s;
}

template <class B>
ValidityReport validate_ray(const Ray<B>& g) {
    if (g.v.empty()) return ValidityReport::fail("ray: empty vector", 0.0);
    const typename B::Real dev = B::abs(norm_sq(g) - typename B::Real(1));
    // |norm^2 - 1| <= 2*eps_norm + eps_norm^2 whenever |norm - 1| <= eps_norm.
    if (dev > B::eps() + B::eps()) {
        return ValidityReport::fail("ray: norm != 1", B::to_double(dev));
    }
    return ValidityReport::pass();
}

/// P_g = |psi><psi| for any unit representative psi of g; phase cancels.
template <class B>
Mat<B> projector(const Ray<B>& g) {
    Mat<B> p(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i) {
        for (std::size_t j = 0; j < g.dim(); ++j) {
            p.at(i, j) = g.v[i] * B::conj(g.v[j]);
        }
    }
    return p;
}

/// tr(P_g P_h) computed as |<g|h>|^2.
template <class B>
typename B::Real overlap(const Ray<B>& g, const Ray<B>& h) {
    if (g.dim() != h.dim()) throw std::invalid_argument("overlap: dimension mismatch");
    const typename B::Complex ip = inner(g, h);
    return B::re(ip * B::conj(ip));
}

/// Phase-invariant ray equality: |<g|h>| = 1.
template <class B>
bool same_ray(const Ray<B>& g, const Ray<B>& h, const typename B::Real& tol) {
    if (g.dim() != h.dim()) return false;
    return B::abs(overlap(g, h) - typename B::Real(1)) <= tol + tol;
}

/// Orthogonal complement of a qubit ray.
template <class B>
Ray<B> perp_ray(const Ray<B>& g) {
    if (g.dim() != 2) throw std::invalid_argument("perp_ray: qubit only");
    return Ray<B>{{-B::conj(g.v[1]), B::conj(g.v[0])}};
}

/// tr(D E), real part. The trace is mathematically real for hermitian
/// arguments; the imaginary part only carries roundoff.
template <class B>
typename B::Real born(const DensityMatrix<B>& d, const Effect<B>& e) {
    if (d.op.dim != e.op.dim) throw std::invalid_argument("born: dimension mismatch");
    return B::re(trace(d.op * e.op));
}

template <class B>
ValidityReport validate_density(const Mat<B>& m) {
    if (!is_hermitian<B>(m, B::eps())) {
        return ValidityReport::fail("density: not hermitian",
                                    B::to_double(max_entry_dev<B>(m, adjoint(m))));
    }
    const typename B::Real tr_dev = B::abs(B::re(trace(m)) - typename B::Real(1));
    if (tr_dev > B::eps()) {
        return ValidityReport::fail("density: trace != 1", B::to_double(tr_dev));
    }
    if (!detail::psd_within(m, B::eps())) {
        return ValidityReport::fail("density: negative eigenvalue", 0.0);
    }
    return ValidityReport::pass();
}

template <class B>
DensityMatrix<B> make_density(Mat<B> m) {
    const ValidityReport r = validate_density<B>(m);
    if (!r.ok) throw std::invalid_argument("make_density: " + r.message);
    return DensityMatrix<B>{std::move(m)};
}

template <class B>
ValidityReport validate_effect(const Mat<B>& m) {
    if (!is_hermitian<B>(m, B::eps())) {
        return ValidityReport::fail("effect: not hermitian",
                                    B::to_double(max_entry_dev<B>(m, adjoint(m))));
    }
    if (!detail::psd_within(m, B::eps())) {
        return ValidityReport::fail("effect: eigenvalue < 0", 0.0);
    }
    if (!detail::psd_within(Mat<B>::identity(m.dim) - m, B::eps())) {
        return ValidityReport::fail("effect: eigenvalue > 1", 0.0);
    }
    return ValidityReport::pass();
}

template <class B>
Effect<B> make_effect(Mat<B> m) {
    const ValidityReport r = validate_effect<B>(m);
    if (!r.ok) throw std::invalid_argument("make_effect: " + r.message);
    return Effect<B>{std::move(m)};
}

/// Accepts iff every effect is valid, labels are distinct, and the effects
/// sum to the identity.
template <class B>
ValidityReport validate_povm(const Povm<B>& p) {
    if (p.labels.size() != p.effects.size() || p.labels.empty()) {
        return ValidityReport::fail("povm: label/effect count mismatch",
                                    static_cast<double>(p.labels.size()));
    }
    for (std::size_t i = 0; i < p.labels.size(); ++i) {
        for (std::size_t j = i + 1; j < p.labels.size(); ++j) {
            if (p.labels[i] == p.labels[j]) {
                return ValidityReport::fail("povm: duplicate outcome label", p.labels[i]);
            }
        }
    }
    const std::size_t d = p.effects.front().op.dim;
    Mat<B> sum(d);
    for (std::size_t i = 0; i < p.effects.size(); ++i) {
        const ValidityReport r = validate_effect<B>(p.effects[i].op);
        if (!r.ok) {
            return ValidityReport::fail("povm: effect " + std::to_string(i) + " invalid: " + r.message,
                                        r.magnitude);
        }
        if (p.effects[i].op.dim != d) {
            return ValidityReport::fail("povm: effect dimension mismatch",
                                        static_cast<double>(p.effects[i].op.dim));
        }
        sum = sum + p.effects[i].op;
    }
    const typename B::Real dev = max_entry_dev<B>(sum, Mat<B>::identity(d));
    if (dev > B::eps()) {
        return ValidityReport::fail("povm: effects do not sum to identity", B::to_double(dev));
    }
    return ValidityReport::pass();
}

/// Two-outcome projective test of a ray: label 1 carries P_g, label 0
/// carries P_{g perp}.
template <class B>
Povm<B> projective_povm(const Ray<B>& g) {
    return Povm<B>{{1.0, 0.0}, {Effect<B>{projector(g)}, Effect<B>{projector(perp_ray(g))}}};
}

/// Hermitian qubit operator in the Pauli basis: m = c*I + x*sx + y*sy + z*sz.
template <class B>
struct PauliDecomp {
    typename B::Real c{}, x{}, y{}, z{};
};

template <class B>
PauliDecomp<B> pauli_decompose(const Mat<B>& m) {
    if (m.dim != 2) throw std::invalid_argument("pauli_decompose: qubit only");
    PauliDecomp<B> d;
    const typename B::Real two(2);
    d.c = (B::re(m.at(0, 0)) + B::re(m.at(1, 1))) / two;
    d.z = (B::re(m.at(0, 0)) - B::re(m.at(1, 1))) / two;
    d.x = (B::re(m.at(0, 1)) + B::re(m.at(1, 0))) / two;
    d.y = (B::im(m.at(1, 0)) - B::im(m.at(0, 1))) / two;
    return d;
}

template <class B>
Mat<B> pauli_compose(const PauliDecomp<B>& d) {
    Mat<B> m(2);
    m.at(0, 0) = B::make_complex(d.c + d.z, typename B::Real(0));
    m.at(1, 1) = B::make_complex(d.c - d.z, typename B::Real(0));
    m.at(0, 1) = B::make_complex(d.x, -d.y);
    m.at(1, 0) = B::make_complex(d.x, d.y);
    return m;
}

/// Bloch vector of a qubit ray: span(1,0) maps to (0,0,1).
template <class B>
Bloch<B> ray_to_bloch(const Ray<B>& g) {
    if (g.dim() != 2) throw std::invalid_argument("ray_to_bloch: qubit only");
    const typename B::Complex cross = B::conj(g.v[0]) * g.v[1];
    Bloch<B> b;
    b.x = B::re(cross) + B::re(cross);
    b.y = B::im(cross) + B::im(cross);
    b.z = B::re(B::conj(g.v[0]) * g.v[0]) - B::re(B::conj(g.v[1]) * g.v[1]);
    return b;
}

/// Inverse of ray_to_bloch for unit Bloch vectors (float backend: needs a
/// square root).
Ray<FloatBackend> bloch_to_ray(const Bloch<FloatBackend>& b);

/// P = (I + b . sigma)/2 for a unit Bloch vector.
template <class B>
Mat<B> projector_from_bloch(const Bloch<B>& b) {
    PauliDecomp<B> d;
    const typename B::Real two(2);
    d.c = typename B::Real(1) / two;
    d.x = b.x / two;
    d.y = b.y / two;
    d.z = b.z / two;
    return pauli_compose(d);
}

}  // namespace ontocheck

#endif  // ONTOCHECK_QSTATE_HPP
