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

#ifndef ONTOCHECK_BACKEND_HPP
#define ONTOCHECK_BACKEND_HPP

#include <cmath>
#include <complex>
#include <cstdlib>

#include "ontocheck/exact.hpp"

namespace ontocheck {

/// Floating-point backend for quadrature-based models. One tolerance value
/// serves every epsilon in the validity checks; dimension-2 arithmetic is
/// well-conditioned enough that finer distinctions buy nothing.
struct FloatBackend {
    using Real = double;
    using Complex = std::complex<double>;
    static constexpr bool is_exact = false;

    static Real eps() { return 1e-9; }
    static Real from_rational(const Rational& q) { return q.get_d(); }
    static double to_double(Real x) { return x; }
    static Real abs(Real x) { return std::fabs(x); }
    static Real re(const Complex& c) { return c.real(); }
    static Real im(const Complex& c) { return c.imag(); }
    static Complex conj(const Complex& c) { return std::conj(c); }
    static Complex make_complex(Real r, Real i) { return {r, i}; }
};

/// Exact backend over Q(sqrt(3)). All tolerances are zero: every comparison
/// is a field equality.
struct ExactBackend {
    using Real = ExactReal;
    using Complex = ExactComplex;
    static constexpr bool is_exact = true;

    static Real eps() { return ExactReal(0); }
    static Real from_rational(const Rational& q) { return ExactReal(q); }
    static double to_double(const Real& x) { return x.to_double(); }
    static Real abs(const Real& x) { return ontocheck::abs(x); }
    static Real re(const Complex& c) { return c.re; }
    static Real im(const Complex& c) { return c.im; }
    static Complex conj(const Complex& c) { return ontocheck::conj(c); }
    static Complex make_complex(Real r, Real i) { return {std::move(r), std::move(i)}; }
};

/// max(|re|, |im|): a norm on Complex that stays inside the scalar field
/// (no square roots), so it works for both backends.
template <class B>
typename B::Real cmax_abs(const typename B::Complex& c) {
    const typename B::Real r = B::abs(B::re(c));
    const typename B::Real i = B::abs(B::im(c));
    return r < i ? i : r;
}

}  // namespace ontocheck

#endif  // ONTOCHECK_BACKEND_HPP
