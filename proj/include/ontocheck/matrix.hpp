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

#ifndef ONTOCHECK_MATRIX_HPP
#define ONTOCHECK_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ontocheck/backend.hpp"

namespace ontocheck {

/// Dense square complex matrix over a numeric backend. Dimensions here are
/// tiny (qubits, occasionally a user-supplied d), so no effort is spent on
/// layout or blocking.
template <class B>
struct Mat {
    using Real = typename B::Real;
    using Complex = typename B::Complex;

    std::size_t dim = 0;
    std::vector<Complex> a;  // row-major, dim*dim entries

    Mat() = default;
    explicit Mat(std::size_t d) : dim(d), a(d * d, Complex{}) {}
    Mat(std::size_t d, std::vector<Complex> entries) : dim(d), a(std::move(entries)) {
        if (a.size() != dim * dim) throw std::invalid_argument("Mat: entry count != dim^2");
    }

    Complex& at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
    const Complex& at(std::size_t r, std::size_t c) const { return a[r * dim + c]; }

    static Mat identity(std::size_t d) {
        Mat m(d);
        for (std::size_t i = 0; i < d; ++i) m.at(i, i) = Complex{Real(1), Real(0)};
        return m;
    }
};

template <class B>
Mat<B> operator+(const Mat<B>& x, const Mat<B>& y) {
    if (x.dim != y.dim) throw std::invalid_argument("Mat: dimension mismatch");
    Mat<B> r(x.dim);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
}

template <class B>
Mat<B> operator-(const Mat<B>& x, const Mat<B>& y) {
    if (x.dim != y.dim) throw std::invalid_argument("Mat: dimension mismatch");
    Mat<B> r(x.dim);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
}

template <class B>
Mat<B> scale(const typename B::Real& s, const Mat<B>& x) {
    Mat<B> r(x.dim);
    const typename B::Complex c = B::make_complex(s, typename B::Real(0));
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = c * x.a[i];
    return r;
}

template <class B>
Mat<B> operator*(const Mat<B>& x, const Mat<B>& y) {
    if (x.dim != y.dim) throw std::invalid_argument("Mat: dimension mismatch");
    Mat<B> r(x.dim);
    for (std::size_t i = 0; i < x.dim; ++i) {
        for (std::size_t k = 0; k < x.dim; ++k) {
            const typename B::Complex xik = x.at(i, k);
            for (std::size_t j = 0; j < x.dim; ++j) {
                r.at(i, j) += xik * y.at(k, j);
            }
        }
    }
    return r;
}

template <class B>
Mat<B> adjoint(const Mat<B>& x) {
    Mat<B> r(x.dim);
    for (std::size_t i = 0; i < x.dim; ++i) {
        for (std::size_t j = 0; j < x.dim; ++j) {
            r.at(j, i) = B::conj(x.at(i, j));
        }
    }
    return r;
}

template <class B>
typename B::Complex trace(const Mat<B>& x) {
    typename B::Complex t{};
    for (std::size_t i = 0; i < x.dim; ++i) t += x.at(i, i);
    return t;
}

/// max over entries of max(|re|, |im|) of (x - y); sqrt-free so it is exact
/// for the exact backend.
template <class B>
typename B::Real max_entry_dev(const Mat<B>& x, const Mat<B>& y) {
    if (x.dim != y.dim) throw std::invalid_argument("Mat: dimension mismatch");
    typename B::Real m{};
    for (std::size_t i = 0; i < x.a.size(); ++i) {
        const typename B::Real d = cmax_abs<B>(x.a[i] - y.a[i]);
        if (m < d) m = d;
    }
    return m;
}

template <class B>
bool is_hermitian(const Mat<B>& x, const typename B::Real& tol) {
    return max_entry_dev<B>(x, adjoint(x)) <= tol;
}

}  // namespace ontocheck

#endif  // ONTOCHECK_MATRIX_HPP
