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

#include "ontocheck/exact.hpp"

#include <algorithm>
#include <cctype>

namespace ontocheck {

namespace {

bool is_rational_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    bool seen_slash = false;
    bool digit_since_slash = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/') {
            if (seen_slash || !digit_since_slash) return false;
            seen_slash = true;
            digit_since_slash = false;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digit_since_slash = true;
        } else {
            return false;
        }
    }
    return digit_since_slash;
}

}  // namespace

Rational rational_from_string(std::string_view s) {
    if (!is_rational_token(s)) {
        throw std::invalid_argument("not a rational token: '" + std::string(s) + "'");
    }
    if (s.front() == '+') s.remove_prefix(1);  // mpq set_str takes no leading '+'
    Rational q;
    if (q.set_str(std::string(s), 10) != 0) {
        throw std::invalid_argument("not a rational token: '" + std::string(s) + "'");
    }
    if (q.get_den() == 0) {
        throw std::invalid_argument("zero denominator: '" + std::string(s) + "'");
    }
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

int ExactReal::sign() const {
    const int sa = sgn(a);
    const int sb = sgn(b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Mixed signs: a + b*sqrt(3) has the sign of the dominant term,
    // decided by comparing a^2 against 3 b^2.
    const int c = cmp(a * a, 3 * b * b);
    if (c == 0) return 0;  // unreachable: sqrt(3) is irrational
    return c > 0 ? sa : sb;
}

std::string ExactReal::str() const {
    auto r3_term = [](const Rational& c) -> std::string {
        if (c == 1) return "r3";
        if (c == -1) return "-r3";
        return rational_to_string(c) + "*r3";
    };
    if (b == 0) return rational_to_string(a);
    if (a == 0) return r3_term(b);
    std::string out = rational_to_string(a);
    if (b > 0) out += "+";
    out += r3_term(b);
    return out;
}

ExactReal operator+(const ExactReal& x, const ExactReal& y) { return {x.a + y.a, x.b + y.b}; }
ExactReal operator-(const ExactReal& x, const ExactReal& y) { return {x.a - y.a, x.b - y.b}; }
ExactReal operator-(const ExactReal& x) { return {-x.a, -x.b}; }

ExactReal operator*(const ExactReal& x, const ExactReal& y) {
    return {x.a * y.a + 3 * x.b * y.b, x.a * y.b + x.b * y.a};
}

ExactReal operator/(const ExactReal& x, const ExactReal& y) {
    // 1/(c + d*sqrt(3)) = (c - d*sqrt(3)) / (c^2 - 3 d^2); the denominator is
    // nonzero for y != 0 because sqrt(3) is irrational.
    const Rational den = y.a * y.a - 3 * y.b * y.b;
    if (den == 0) {
        if (y.a == 0 && y.b == 0) throw std::domain_error("ExactReal division by zero");
        throw std::domain_error("ExactReal division: impossible denominator");
    }
    const ExactReal num = x * ExactReal(y.a, -y.b);
    return {num.a / den, num.b / den};
}

ExactReal& operator+=(ExactReal& x, const ExactReal& y) { x = x + y; return x; }
ExactReal& operator-=(ExactReal& x, const ExactReal& y) { x = x - y; return x; }
ExactReal& operator*=(ExactReal& x, const ExactReal& y) { x = x * y; return x; }

bool operator==(const ExactReal& x, const ExactReal& y) { return x.a == y.a && x.b == y.b; }
bool operator!=(const ExactReal& x, const ExactReal& y) { return !(x == y); }
bool operator<(const ExactReal& x, const ExactReal& y) { return (x - y).sign() < 0; }
bool operator<=(const ExactReal& x, const ExactReal& y) { return (x - y).sign() <= 0; }
bool operator>(const ExactReal& x, const ExactReal& y) { return (x - y).sign() > 0; }
bool operator>=(const ExactReal& x, const ExactReal& y) { return (x - y).sign() >= 0; }

ExactReal abs(const ExactReal& x) { return x.sign() < 0 ? -x : x; }

namespace {

bool rational_sqrt(const Rational& q, Rational* root) {
    if (q < 0) return false;
    const mpz_class num = q.get_num();
    const mpz_class den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rational result(rn, rd);
    result.canonicalize();
    *root = result;
    return true;
}

}  // namespace

bool exact_sqrt(const ExactReal& x, ExactReal* root) {
    if (x.sign() < 0) return false;
    const Rational& p = x.a;
    const Rational& q = x.b;
    Rational r;
    if (q == 0) {
        // y = u (rational) with u^2 = p, or y = v*sqrt(3) with 3 v^2 = p.
        if (rational_sqrt(p, &r)) {
            *root = ExactReal(r, Rational(0));
            return true;
        }
        if (rational_sqrt(p / 3, &r)) {
            *root = ExactReal(Rational(0), r);
            return true;
        }
        return false;
    }
    // (u + v*sqrt(3))^2 = (u^2 + 3 v^2) + 2uv*sqrt(3): need u^2 + 3 v^2 = p,
    // 2uv = q. Eliminating v gives u^2 = (p +- sqrt(p^2 - 3 q^2)) / 2.
    Rational s;
    if (!rational_sqrt(p * p - 3 * q * q, &s)) return false;
    const Rational cand[2] = {Rational((p + s) / 2), Rational((p - s) / 2)};
    for (const Rational& t : cand) {
        Rational u;
        if (t > 0 && rational_sqrt(t, &u)) {
            const Rational v = q / (2 * u);
            const ExactReal candidate(u, v);
            if (candidate * candidate == x) {
                *root = candidate.sign() >= 0 ? candidate : -candidate;
                return true;
            }
        }
    }
    return false;
}

ExactReal exact_real_from_string(std::string_view s) {
    std::string t;
    t.reserve(s.size());
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    }
    if (t.empty()) throw std::invalid_argument("empty ExactReal token");
    if (!t.ends_with("r3")) {
        return ExactReal(rational_from_string(t));
    }
    std::string head = t.substr(0, t.size() - 2);
    if (!head.empty() && head.back() == '*') head.pop_back();
    // Split "A+B" / "A-B" at the last sign that follows a digit; whatever
    // remains in front of the r3 coefficient is the rational part.
    std::size_t split = std::string::npos;
    for (std::size_t i = head.size(); i-- > 1;) {
        if ((head[i] == '+' || head[i] == '-') &&
            std::isdigit(static_cast<unsigned char>(head[i - 1]))) {
            split = i;
            break;
        }
    }
    Rational a(0), b;
    std::string bpart = head;
    if (split != std::string::npos) {
        a = rational_from_string(head.substr(0, split));
        bpart = head.substr(split);
    }
    if (bpart.empty() || bpart == "+") {
        b = 1;
    } else if (bpart == "-") {
        b = -1;
    } else {
        b = rational_from_string(bpart);
    }
    return {a, b};
}

std::string ExactComplex::str() const {
    if (im == ExactReal(0)) return re.str();
    return "(" + re.str() + ")+(" + im.str() + ")i";
}

ExactComplex operator+(const ExactComplex& x, const ExactComplex& y) {
    return {x.re + y.re, x.im + y.im};
}
ExactComplex operator-(const ExactComplex& x, const ExactComplex& y) {
    return {x.re - y.re, x.im - y.im};
}
ExactComplex operator-(const ExactComplex& x) { return {-x.re, -x.im}; }

ExactComplex operator*(const ExactComplex& x, const ExactComplex& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

ExactComplex operator/(const ExactComplex& x, const ExactComplex& y) {
    const ExactReal n = y.norm_sq();
    if (n.sign() == 0) throw std::domain_error("ExactComplex division by zero");
    const ExactComplex num = x * conj(y);
    return {num.re / n, num.im / n};
}

ExactComplex& operator+=(ExactComplex& x, const ExactComplex& y) { x = x + y; return x; }
ExactComplex& operator-=(ExactComplex& x, const ExactComplex& y) { x = x - y; return x; }

bool operator==(const ExactComplex& x, const ExactComplex& y) {
    return x.re == y.re && x.im == y.im;
}
bool operator!=(const ExactComplex& x, const ExactComplex& y) { return !(x == y); }

ExactComplex conj(const ExactComplex& x) { return {x.re, -x.im}; }

}  // namespace ontocheck
