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

#include "ontocheck/lp.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ontocheck::lp {

namespace {

void check_shape(const RationalMatrixSystem& sys) {
    if (sys.rows.empty() || sys.rows.front().empty()) {
        throw std::invalid_argument("lp: system needs at least one row and one column");
    }
    if (sys.rhs.size() != sys.rows.size()) {
        throw std::invalid_argument("lp: rhs size != row count");
    }
    for (const auto& row : sys.rows) {
        if (row.size() != sys.rows.front().size()) {
            throw std::invalid_argument("lp: ragged coefficient rows");
        }
    }
}

std::size_t rank_of(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

/// Unique solution of A_S y = b for the column subset S, or nullopt when the
/// columns are dependent or the system inconsistent.
std::optional<std::vector<Rational>> solve_columns(const RationalMatrixSystem& sys,
                                                   const std::vector<std::size_t>& cols) {
    const std::size_t m = sys.num_rows();
    const std::size_t r = cols.size();
    std::vector<std::vector<Rational>> aug(m, std::vector<Rational>(r + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < r; ++j) aug[i][j] = sys.rows[i][cols[j]];
        aug[i][r] = sys.rhs[i];
    }
    std::vector<std::size_t> pivot_row(r, m);
    std::size_t row = 0;
    for (std::size_t c = 0; c < r; ++c) {
        std::size_t piv = row;
        while (piv < m && aug[piv][c] == 0) ++piv;
        if (piv == m) return std::nullopt;  // dependent columns
        std::swap(aug[piv], aug[row]);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || aug[i][c] == 0) continue;
            const Rational f = aug[i][c] / aug[row][c];
            for (std::size_t j = c; j <= r; ++j) aug[i][j] -= f * aug[row][j];
        }
        pivot_row[c] = row;
        ++row;
    }
    for (std::size_t i = row; i < m; ++i) {
        if (aug[i][r] != 0) return std::nullopt;  // inconsistent
    }
    std::vector<Rational> y(r);
    for (std::size_t c = 0; c < r; ++c) y[c] = aug[pivot_row[c]][r] / aug[pivot_row[c]][c];
    return y;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t r = c.size();
    std::size_t i = r;
    while (i-- > 0) {
        if (c[i] != i + n - r) {
            ++c[i];
            for (std::size_t j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

bool verify_witness(const RationalMatrixSystem& sys, const std::vector<Rational>& x) {
    check_shape(sys);
    if (x.size() != sys.num_cols()) return false;
    for (const auto& xi : x) {
        if (xi < 0) return false;
    }
    for (std::size_t i = 0; i < sys.num_rows(); ++i) {
        Rational lhs(0);
        for (std::size_t j = 0; j < sys.num_cols(); ++j) lhs += sys.rows[i][j] * x[j];
        if (lhs != sys.rhs[i]) return false;
    }
    return true;
}

bool verify_certificate(const RationalMatrixSystem& sys, const Certificate& cert) {
    check_shape(sys);
    if (cert.mult.size() != sys.num_rows()) return false;
    for (std::size_t j = 0; j < sys.num_cols(); ++j) {
        Rational coeff(0);
        for (std::size_t i = 0; i < sys.num_rows(); ++i) coeff += cert.mult[i] * sys.rows[i][j];
        if (coeff < 0) return false;
    }
    Rational rhs(0);
    for (std::size_t i = 0; i < sys.num_rows(); ++i) rhs += cert.mult[i] * sys.rhs[i];
    return rhs < 0;
}

bool brute_force_feasible(const RationalMatrixSystem& sys) {
    check_shape(sys);
    const std::size_t m = sys.num_rows();
    const std::size_t k = sys.num_cols();

    // rank([A|b]) > rank(A): the affine system has no solution, signed or not.
    std::vector<std::vector<Rational>> ab = sys.rows;
    for (std::size_t i = 0; i < m; ++i) ab[i].push_back(sys.rhs[i]);
    const std::size_t r = rank_of(sys.rows);
    if (rank_of(std::move(ab)) != r) return false;
    if (r == 0) return true;  // A = 0 and b = 0: x = 0 works

    // A nonempty polyhedron {x >= 0 : Ax = b} has a vertex whose support
    // columns are independent, hence extendable to exactly r independent
    // columns with zeros on the extension. Enumerate all r-subsets.
    std::vector<std::size_t> comb(r);
    for (std::size_t i = 0; i < r; ++i) comb[i] = i;
    do {
        if (auto y = solve_columns(sys, comb)) {
            bool nonneg = true;
            for (const auto& v : *y) {
                if (v < 0) {
                    nonneg = false;
                    break;
                }
            }
            if (nonneg) return true;
        }
    } while (next_combination(comb, k));
    return false;
}

SolveResult solve(const RationalMatrixSystem& sys) {
    check_shape(sys);
    const std::size_t m = sys.num_rows();
    const std::size_t k = sys.num_cols();

    // Phase-one program: min sum(s) s.t. A'x + s = b', x >= 0, s >= 0, where
    // rows are sign-flipped so b' >= 0 and the artificials s form the start
    // basis. Columns 0..k-1 are x, columns k..k+m-1 the artificials.
    std::vector<int> flip(m, 1);
    std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(k + m, Rational(0)));
    std::vector<Rational> b(m);
    for (std::size_t i = 0; i < m; ++i) {
        flip[i] = sys.rhs[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < k; ++j) tab[i][j] = flip[i] * sys.rows[i][j];
        b[i] = flip[i] * sys.rhs[i];
        tab[i][k + i] = 1;
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = k + i;

    // Reduced costs r_j = c_j - y^T A_j, kept in eliminated form: start from
    // c and subtract each artificial row (their cost is 1).
    std::vector<Rational> red(k + m, Rational(0));
    Rational obj(0);  // current objective value (sum of artificials)
    for (std::size_t j = k; j < k + m; ++j) red[j] = 1;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k + m; ++j) red[j] -= tab[i][j];
        obj += b[i];
    }

    for (;;) {
        // Bland's rule: entering = smallest column index with negative
        // reduced cost.
        std::size_t enter = k + m;
        for (std::size_t j = 0; j < k + m; ++j) {
            if (red[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == k + m) break;  // optimal

        // Ratio test; Bland tie-break on the smallest basis variable index.
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (tab[i][enter] > 0) {
                Rational ratio = b[i] / tab[i][enter];
                if (leave == m || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
        }
        if (leave == m) {
            // Unbounded phase-one is impossible: the objective is a sum of
            // nonnegative variables, bounded below by 0.
            throw std::logic_error("lp: phase-one ratio test found no pivot");
        }

        // Pivot on (leave, enter).
        const Rational piv = tab[leave][enter];
        for (std::size_t j = 0; j < k + m; ++j) tab[leave][j] /= piv;
        b[leave] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave) continue;
            const Rational f = tab[i][enter];
            if (f == 0) continue;
            for (std::size_t j = 0; j < k + m; ++j) tab[i][j] -= f * tab[leave][j];
            b[i] -= f * b[leave];
        }
        const Rational fr = red[enter];
        if (fr != 0) {
            for (std::size_t j = 0; j < k + m; ++j) red[j] -= fr * tab[leave][j];
            obj += fr * b[leave];  // fr < 0: the artificial mass shrinks
        }
        basis[leave] = enter;
    }

    SolveResult result;
    if (obj == 0) {
        result.feasible = true;
        result.witness.assign(k, Rational(0));
        for (std::size_t i = 0; i < m; ++i) {
            if (basis[i] < k) result.witness[basis[i]] = b[i];
        }
        if (!verify_witness(sys, result.witness)) {
            throw std::logic_error("lp: witness failed re-verification");
        }
    } else {
        // Phase-one duals: the reduced cost of artificial column k+i is
        // 1 - y_i, so y_i = 1 - red[k+i]. Mapping through the row flips and
        // negating gives multipliers with combined row >= 0, combined
        // rhs < 0.
        result.feasible = false;
        result.certificate.mult.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            const Rational y = 1 - red[k + i];
            result.certificate.mult[i] = -flip[i] * y;
        }
        if (!verify_certificate(sys, result.certificate)) {
            throw std::logic_error("lp: certificate failed re-verification");
        }
    }
    return result;
}

std::string system_to_text(const RationalMatrixSystem& sys) {
    check_shape(sys);
    std::ostringstream out;
    out << sys.num_rows() << ' ' << sys.num_cols() << '\n';
    for (std::size_t i = 0; i < sys.num_rows(); ++i) {
        for (std::size_t j = 0; j < sys.num_cols(); ++j) {
            out << rational_to_string(sys.rows[i][j]) << ' ';
        }
        out << "= " << rational_to_string(sys.rhs[i]) << '\n';
    }
    return out.str();
}

RationalMatrixSystem system_from_text(const std::string& text) {
    std::istringstream in(text);
    std::size_t m = 0, k = 0;
    if (!(in >> m >> k) || m == 0 || k == 0) {
        throw std::invalid_argument("lp text: bad header line");
    }
    RationalMatrixSystem sys;
    sys.rows.assign(m, std::vector<Rational>(k));
    sys.rhs.resize(m);
    std::string tok;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (!(in >> tok)) throw std::invalid_argument("lp text: truncated row");
            sys.rows[i][j] = rational_from_string(tok);
        }
        if (!(in >> tok) || tok != "=") {
            throw std::invalid_argument("lp text: expected '=' in row " + std::to_string(i + 1));
        }
        if (!(in >> tok)) throw std::invalid_argument("lp text: missing rhs");
        sys.rhs[i] = rational_from_string(tok);
    }
    return sys;
}

std::string certificate_to_text(const Certificate& cert) {
    std::ostringstream out;
    for (std::size_t i = 0; i < cert.mult.size(); ++i) {
        if (i) out << ' ';
        out << rational_to_string(cert.mult[i]);
    }
    out << '\n';
    return out.str();
}

Certificate certificate_from_text(const std::string& text) {
    std::istringstream in(text);
    Certificate cert;
    std::string tok;
    while (in >> tok) cert.mult.push_back(rational_from_string(tok));
    if (cert.mult.empty()) throw std::invalid_argument("lp text: empty certificate");
    return cert;
}

}  // namespace ontocheck::lp
