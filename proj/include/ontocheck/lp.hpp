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

#ifndef ONTOCHECK_LP_HPP
#define ONTOCHECK_LP_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ontocheck/exact.hpp"

namespace ontocheck::lp {

/// m equality rows over k nonnegative variables: find x >= 0 with Ax = b.
/// Entries must be canonical mpq values: arithmetic results always are, but
/// raw two-integer construction is not (call canonicalize() after it).
struct RationalMatrixSystem {
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;

    std::size_t num_rows() const { return rows.size(); }
    std::size_t num_cols() const { return rows.empty() ? 0 : rows.front().size(); }
};

/// Farkas infeasibility certificate: row multipliers c such that the
/// combined row sum_i c_i * row_i has every coefficient >= 0 while the
/// combined right-hand side is < 0. No nonnegative x can satisfy that.
struct Certificate {
    std::vector<Rational> mult;
};

struct SolveResult {
    bool feasible = false;
    std::vector<Rational> witness;  // set iff feasible
    Certificate certificate;        // set iff infeasible
};

/// Exact decision via phase-one simplex with Bland's rule (terminating, and
/// deterministic: identical systems yield identical outcomes). A returned
/// witness or certificate has already been re-verified by substitution.
SolveResult solve(const RationalMatrixSystem& sys);

bool verify_witness(const RationalMatrixSystem& sys, const std::vector<Rational>& x);
bool verify_certificate(const RationalMatrixSystem& sys, const Certificate& cert);

/// Independent feasibility decision by enumerating basic solutions: rank
/// test on [A|b] vs A, then every rank-sized column subset. Exponential in
/// the column count; meant as a cross-check oracle for small systems, not a
/// solver.
bool brute_force_feasible(const RationalMatrixSystem& sys);

/// Line-oriented exact text format:
///   line 1: "<m> <k>"
///   lines 2..m+1: k rational tokens, "=", rhs token
/// Certificates: the m multiplier tokens on one line.
std::string system_to_text(const RationalMatrixSystem& sys);
RationalMatrixSystem system_from_text(const std::string& text);
std::string certificate_to_text(const Certificate& cert);
Certificate certificate_from_text(const std::string& text);

}  // namespace ontocheck::lp

#endif  // ONTOCHECK_LP_HPP
