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

#ifndef ONTOCHECK_EXACT_HPP
#define ONTOCHECK_EXACT_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ontocheck {

using Rational = mpq_class;

/// Parses "n" or "n/d" (optional sign, arbitrary precision). Throws
/// std::invalid_argument on malformed input or zero denominator.
Rational rational_from_string(std::string_view s);

/// Formats in lowest terms as "n" or "n/d".
std::string rational_to_string(const Rational& q);

/// Element of the real quadratic field Q(sqrt(3)): value = a + b*sqrt(3).
/// Closed under +,-,*,/ and has decidable sign, so equality and ordering
/// are exact. Covers every number the exact backend needs (the rays with
/// sqrt(3)/2 entries, their overlaps, and all rational data).
struct ExactReal {
    Rational a;  // rational part
    Rational b;  // coefficient of sqrt(3)

    ExactReal() : a(0), b(0) {}
    ExactReal(int v) : a(v), b(0) {}                       // NOLINT(google-explicit-constructor)
    ExactReal(const Rational& v) : a(v), b(0) {}           // NOLINT(google-explicit-constructor)
    ExactReal(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}

    static ExactReal sqrt3() { return ExactReal(Rational(0), Rational(1)); }

    bool is_rational() const { return b == 0; }

    /// -1, 0, or +1. Exact: on mixed signs of a and b, compares a^2 with 3 b^2.
    int sign() const;

    double to_double() const { return a.get_d() + b.get_d() * std::sqrt(3.0); }

    /// "a", "b*r3", or "a+b*r3" with rational tokens in lowest terms.
    std::string str() const;
};

ExactReal operator+(const ExactReal& x, const ExactReal& y);
ExactReal operator-(const ExactReal& x, const ExactReal& y);
ExactReal operator-(const ExactReal& x);
ExactReal operator*(const ExactReal& x, const ExactReal& y);
ExactReal operator/(const ExactReal& x, const ExactReal& y);
ExactReal& operator+=(ExactReal& x, const ExactReal& y);
ExactReal& operator-=(ExactReal& x, const ExactReal& y);
ExactReal& operator*=(ExactReal& x, const ExactReal& y);

bool operator==(const ExactReal& x, const ExactReal& y);
bool operator!=(const ExactReal& x, const ExactReal& y);
bool operator<(const ExactReal& x, const ExactReal& y);
bool operator<=(const ExactReal& x, const ExactReal& y);
bool operator>(const ExactReal& x, const ExactReal& y);
bool operator>=(const ExactReal& x, const ExactReal& y);

ExactReal abs(const ExactReal& x);

/// True iff x = y^2 for some y in Q(sqrt(3)); on success stores a root with
/// nonnegative sign in *root. Used to normalize eigenvector witnesses without
/// leaving the field.
bool exact_sqrt(const ExactReal& x, ExactReal* root);

/// Parses the serialized forms produced by ExactReal::str, plus bare
/// rationals; "r3" denotes sqrt(3).
ExactReal exact_real_from_string(std::string_view s);

/// Complex number with ExactReal components.
struct ExactComplex {
    ExactReal re;
    ExactReal im;

    ExactComplex() = default;
    ExactComplex(int v) : re(v) {}                         // NOLINT(google-explicit-constructor)
    ExactComplex(const ExactReal& r) : re(r) {}            // NOLINT(google-explicit-constructor)
    ExactComplex(ExactReal r, ExactReal i) : re(std::move(r)), im(std::move(i)) {}

    ExactReal norm_sq() const { return re * re + im * im; }
    std::string str() const;
};

ExactComplex operator+(const ExactComplex& x, const ExactComplex& y);
ExactComplex operator-(const ExactComplex& x, const ExactComplex& y);
ExactComplex operator-(const ExactComplex& x);
ExactComplex operator*(const ExactComplex& x, const ExactComplex& y);
ExactComplex operator/(const ExactComplex& x, const ExactComplex& y);
ExactComplex& operator+=(ExactComplex& x, const ExactComplex& y);
ExactComplex& operator-=(ExactComplex& x, const ExactComplex& y);
bool operator==(const ExactComplex& x, const ExactComplex& y);
bool operator!=(const ExactComplex& x, const ExactComplex& y);

ExactComplex conj(const ExactComplex& x);

}  // namespace ontocheck

#endif  // ONTOCHECK_EXACT_HPP
