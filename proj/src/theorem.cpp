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

#include "ontocheck/theorem.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

#include "ontocheck/kernels.hpp"
#include "ontocheck/rng.hpp"

namespace ontocheck {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

template <class B>
std::string ray_desc(const Ray<B>& g) {
    std::string s = "(";
    for (std::size_t i = 0; i < g.dim(); ++i) {
        if (i) s += ", ";
        if constexpr (B::is_exact) {
            s += g.v[i].str();
        } else {
            s += fmt(g.v[i].real());
            if (g.v[i].imag() != 0.0) {
                s += g.v[i].imag() > 0.0 ? "+" : "-";
                s += fmt(std::fabs(g.v[i].imag()));
                s += "i";
            }
        }
    }
    return s + ")";
}

template <class B>
std::string mat_desc(const Mat<B>& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.dim; ++i) {
        if (i) s += ", ";
        s += "[";
        for (std::size_t j = 0; j < m.dim; ++j) {
            if (j) s += ", ";
            if constexpr (B::is_exact) {
                s += m.at(i, j).str();
            } else {
                const auto c = m.at(i, j);
                s += fmt(c.real());
                if (c.imag() != 0.0) {
                    s += c.imag() > 0.0 ? "+" : "-";
                    s += fmt(std::fabs(c.imag()));
                    s += "i";
                }
            }
        }
        s += "]";
    }
    return s + "]";
}

template <class B>
std::size_t outcome_index(const Experiment<B>& x, double label) {
    for (std::size_t o = 0; o < x.povm.labels.size(); ++o) {
        if (x.povm.labels[o] == label) return o;
    }
    throw std::invalid_argument("experiment '" + x.name + "' has no outcome labeled " + fmt(label));
}

template <class B>
IdentityCheck make_check(std::string id, std::string detail, const typename B::Real& measured,
                         const typename B::Real& expected, const typename B::Real& tol) {
    IdentityCheck c;
    c.id = std::move(id);
    c.detail = std::move(detail);
    c.measured = B::to_double(measured);
    c.expected = B::to_double(expected);
    const typename B::Real dev = B::abs(measured - expected);
    c.deviation = B::to_double(dev);
    c.pass = dev <= tol;
    return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// Support sets
// ---------------------------------------------------------------------------

template <class B>
typename B::Real measure_of(const EpistemicMeasure<B>& rho, const SupportSet<B>& s) {
    if (rho.space != s.space) throw SpaceMismatch("measure_of: set on a different space");
    if constexpr (std::is_same_v<typename B::Real, double>) {
        return kernels::masked_dot(rho.density, rho.space->weights, s.member);
    } else {
        typename B::Real acc{};
        for (std::size_t i = 0; i < s.member.size(); ++i) {
            if (s.member[i]) acc += rho.density[i] * rho.space->weights[i];
        }
        return acc;
    }
}

template <class B>
SupportSet<B> support_set(const OntologicalModel<B>& model, const Experiment<B>& x,
                          double outcome_label, const typename B::Real& tol) {
    if (!model.response->supports(x)) {
        throw UnsupportedExperiment("support_set: model '" + model.name +
                                    "' has no response for experiment '" + x.name + "'");
    }
    const std::size_t o = outcome_index(x, outcome_label);
    const auto table = model.response->response_table(x, *model.space);
    SupportSet<B> s{model.space, std::vector<std::uint8_t>(model.space->size(), 0)};
    const typename B::Real lo = typename B::Real(1) - tol;
    for (std::size_t i = 0; i < s.member.size(); ++i) {
        s.member[i] = table[o][i] >= lo ? 1 : 0;
    }
    return s;
}

template <class B>
SupportSet<B> support_set(const OntologicalModel<B>& model, const Ray<B>& h,
                          const typename B::Real& tol) {
    return support_set(model, ray_test<B>("ray test " + ray_desc(h), h), 1.0, tol);
}

template <class B>
SupportSet<B> residual_set(const OntologicalModel<B>& model, const Experiment<B>& x,
                           double outcome_label, const typename B::Real& tol) {
    if (!model.response->supports(x)) {
        throw UnsupportedExperiment("residual_set: model '" + model.name +
                                    "' has no response for experiment '" + x.name + "'");
    }
    const std::size_t o = outcome_index(x, outcome_label);
    const auto table = model.response->response_table(x, *model.space);
    SupportSet<B> s{model.space, std::vector<std::uint8_t>(model.space->size(), 0)};
    const typename B::Real lo = typename B::Real(1) - tol;
    for (std::size_t i = 0; i < s.member.size(); ++i) {
        s.member[i] = (table[o][i] > tol && table[o][i] < lo) ? 1 : 0;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Measure identities
// ---------------------------------------------------------------------------

template <class B>
EpistemicMeasure<B> measure_sum(const EpistemicMeasure<B>& a, const EpistemicMeasure<B>& b) {
    if (a.space != b.space) throw SpaceMismatch("measure_sum: measures on different spaces");
    EpistemicMeasure<B> out;
    out.space = a.space;
    out.density.resize(a.density.size());
    for (std::size_t i = 0; i < a.density.size(); ++i) {
        out.density[i] = a.density[i] + b.density[i];
    }
    out.name = a.name + " + " + b.name;
    return out;
}

template <class B>
SupportIdentityReport verify_support_identities(const OntologicalModel<B>& model,
                                                const Experiment<B>& x_g,
                                                const Experiment<B>& x_gperp,
                                                const EpistemicMeasure<B>& rho_g,
                                                const EpistemicMeasure<B>& rho_gperp,
                                                const EpistemicMeasure<B>& rho_1,
                                                const std::vector<SupportSet<B>>& test_sets,
                                                const typename B::Real& tol) {
    using Real = typename B::Real;
    SupportIdentityReport rep;
    const SupportSet<B> l_g = support_set(model, x_g, 1.0, tol);
    const SupportSet<B> l_gperp = support_set(model, x_gperp, 1.0, tol);

    rep.checks.push_back(make_check<B>("support-concentration", rho_g.name + " on its own support",
                                       measure_of(rho_g, l_g), Real(1), tol));
    rep.checks.push_back(make_check<B>("orthogonal-support-null",
                                       rho_g.name + " on the orthogonal support",
                                       measure_of(rho_g, l_gperp), Real(0), tol));
    rep.checks.push_back(make_check<B>("orthogonal-support-null",
                                       rho_gperp.name + " on the orthogonal support",
                                       measure_of(rho_gperp, l_g), Real(0), tol));
    rep.checks.push_back(make_check<B>("disjoint-support",
                                       rho_1.name + " on the support intersection",
                                       measure_of(rho_1, intersect(l_g, l_gperp)), Real(0), tol));
    rep.checks.push_back(make_check<B>(
        "residual-mass", rho_g.name + " where the test of " + x_gperp.name + " is undecided",
        measure_of(rho_g, residual_set(model, x_gperp, 1.0, tol)), Real(0), tol));

    for (std::size_t k = 0; k < test_sets.size(); ++k) {
        rep.checks.push_back(make_check<B>(
            "restriction-consistency", rho_g.name + " against test set #" + std::to_string(k + 1),
            measure_of(rho_g, test_sets[k]), measure_of(rho_1, intersect(test_sets[k], l_g)),
            tol));
    }

    rep.max_deviation = 0.0;
    rep.pass = true;
    for (const auto& c : rep.checks) {
        rep.max_deviation = std::max(rep.max_deviation, c.deviation);
        rep.pass = rep.pass && c.pass;
    }
    return rep;
}

template <class B>
SupportIdentityReport verify_support_identities(const OntologicalModel<B>& model, const Ray<B>& g,
                                                const EpistemicMeasure<B>& rho_g,
                                                const EpistemicMeasure<B>& rho_gperp,
                                                const EpistemicMeasure<B>& rho_1,
                                                const std::vector<SupportSet<B>>& test_sets,
                                                const typename B::Real& tol) {
    const Ray<B> gp = perp_ray(g);
    return verify_support_identities(model, ray_test<B>("ray test " + ray_desc(g), g),
                                     ray_test<B>("ray test " + ray_desc(gp), gp), rho_g, rho_gperp,
                                     rho_1, test_sets, tol);
}

template <class B>
OverlapIdentityReport overlap_identity_check(const OntologicalModel<B>& model,
                                             const EpistemicMeasure<B>& rho_1,
                                             const Experiment<B>& x_g, const Experiment<B>& x_h,
                                             const typename B::Real& expected,
                                             const typename B::Real& tol) {
    OverlapIdentityReport rep;
    rep.pair = x_g.name + " and " + x_h.name;
    const SupportSet<B> l_g = support_set(model, x_g, 1.0, tol);
    const SupportSet<B> l_h = support_set(model, x_h, 1.0, tol);
    const typename B::Real measured = measure_of(rho_1, intersect(l_g, l_h));
    rep.measured = B::to_double(measured);
    rep.expected = B::to_double(expected);
    const typename B::Real dev = B::abs(measured - expected);
    rep.deviation = B::to_double(dev);
    rep.pass = dev <= tol;
    return rep;
}

template <class B>
OverlapIdentityReport overlap_identity_check(const OntologicalModel<B>& model,
                                             const EpistemicMeasure<B>& rho_1, const Ray<B>& g,
                                             const Ray<B>& h, const typename B::Real& tol) {
    OverlapIdentityReport rep =
        overlap_identity_check(model, rho_1, ray_test<B>("ray test " + ray_desc(g), g),
                               ray_test<B>("ray test " + ray_desc(h), h), overlap(g, h), tol);
    if (model.prepare_ray) {
        try {
            const auto rho_h = model.prepare_ray(h);
            const auto rho_hperp = model.prepare_ray(perp_ray(h));
            rep.basis_dependence_tv =
                B::to_double(total_variation(measure_sum(rho_h, rho_hperp), rho_1));
        } catch (const std::invalid_argument&) {
            // No preimage for this ray: the inverse is partial, which stage 3
            // of the pipeline reports on its own.
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Moment systems
// ---------------------------------------------------------------------------

std::string MomentSystem::atom_name(std::size_t atom, std::size_t n) {
    std::string s = "p";
    for (std::size_t i = 0; i < n; ++i) {
        s += static_cast<char>('0' + ((atom >> (n - 1 - i)) & 1u));
    }
    return s;
}

namespace {

MomentSystem build_from_overlaps(std::vector<std::vector<Rational>> ov,
                                 std::vector<std::string> names) {
    const std::size_t n = ov.size();
    if (n == 0 || n > 20) {
        throw std::invalid_argument("moment system: ray count must be in 1..20");
    }
    MomentSystem ms;
    ms.n = n;
    ms.ray_names = std::move(names);
    ms.overlaps = std::move(ov);
    const std::size_t atoms = std::size_t{1} << n;
    const auto bit = [n](std::size_t atom, std::size_t i) {
        return ((atom >> (n - 1 - i)) & 1u) != 0;
    };

    ms.sys.rows.emplace_back(atoms, Rational(1));
    ms.sys.rhs.emplace_back(1);
    ms.row_names.emplace_back("normalization");

    const Rational half(1, 2);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> row(atoms, Rational(0));
        for (std::size_t a = 0; a < atoms; ++a) {
            if (bit(a, i)) row[a] = 1;
        }
        ms.sys.rows.push_back(std::move(row));
        ms.sys.rhs.push_back(half);
        ms.row_names.push_back("P(X_" + ms.ray_names[i] + " = 1)");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Rational& o = ms.overlaps[i][j];
            if (o < 0 || o > 1) {
                throw std::invalid_argument("moment system: overlap outside [0, 1]");
            }
            std::vector<Rational> row(atoms, Rational(0));
            for (std::size_t a = 0; a < atoms; ++a) {
                if (bit(a, i) && bit(a, j)) row[a] = 1;
            }
            ms.sys.rows.push_back(std::move(row));
            ms.sys.rhs.push_back(o / 2);
            ms.row_names.push_back("P(X_" + ms.ray_names[i] + " = 1, X_" + ms.ray_names[j] +
                                   " = 1)");
        }
    }
    return ms;
}

std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i + 1));
    return names;
}

}  // namespace

MomentSystem build_moment_system(const std::vector<Ray<ExactBackend>>& rays) {
    const std::size_t n = rays.size();
    if (n == 0 || n > 20) {
        throw std::invalid_argument("moment system: ray count must be in 1..20");
    }
    for (const auto& r : rays) {
        const ValidityReport vr = validate_ray(r);
        if (!vr.ok) throw std::invalid_argument("moment system: " + vr.message);
        if (r.dim() != rays.front().dim()) {
            throw std::invalid_argument("moment system: rays of mixed dimension");
        }
    }
    std::vector<std::vector<Rational>> ov(n, std::vector<Rational>(n, Rational(1)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const ExactReal o = overlap(rays[i], rays[j]);
            if (!o.is_rational()) {
                throw std::invalid_argument(
                    "moment system: overlap of rays " + std::to_string(i + 1) + " and " +
                    std::to_string(j + 1) + " is " + o.str() +
                    ", not rational; the joint-probability constraints need rational values");
            }
            ov[i][j] = o.a;
            ov[j][i] = o.a;
        }
    }
    return build_from_overlaps(std::move(ov), default_names(n));
}

MomentSystem build_moment_system_bloch(const std::vector<std::array<Rational, 3>>& bloch,
                                       std::vector<std::string> names) {
    const std::size_t n = bloch.size();
    if (n == 0 || n > 20) {
        throw std::invalid_argument("moment system: ray count must be in 1..20");
    }
    if (names.empty()) names = default_names(n);
    if (names.size() != n) {
        throw std::invalid_argument("moment system: name/ray count mismatch");
    }
    const auto dot = [](const std::array<Rational, 3>& u,
                        const std::array<Rational, 3>& v) -> Rational {
        return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    };
    for (const auto& b : bloch) {
        if (dot(b, b) != 1) {
            throw std::invalid_argument("moment system: Bloch vector is not unit length");
        }
    }
    std::vector<std::vector<Rational>> ov(n, std::vector<Rational>(n, Rational(1)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            ov[i][j] = (1 + dot(bloch[i], bloch[j])) / 2;
            ov[j][i] = ov[i][j];
        }
    }
    return build_from_overlaps(std::move(ov), std::move(names));
}

FeasibilityOutcome solve_feasibility(const MomentSystem& ms) {
    FeasibilityOutcome out;
    const lp::SolveResult r = lp::solve(ms.sys);
    out.feasible = r.feasible;
    if (r.feasible) {
        out.atoms = r.witness;
        out.verified = lp::verify_witness(ms.sys, r.witness);
    } else {
        out.certificate = r.certificate;
        out.verified = lp::verify_certificate(ms.sys, r.certificate);
        Rational v(0);
        for (std::size_t i = 0; i < ms.sys.num_rows(); ++i) {
            v += r.certificate.mult[i] * ms.sys.rhs[i];
        }
        out.contradiction = v;
    }
    return out;
}

TripleTestResult triple_test() {
    using C = ExactComplex;
    TripleTestResult t;

    const Rational half(1, 2);
    const ExactReal h(half);
    const ExactReal s3h(Rational(0), half);  // sqrt(3)/2
    const std::vector<Ray<ExactBackend>> rays{
        Ray<ExactBackend>{{C(ExactReal(1)), C()}},
        Ray<ExactBackend>{{C(h), C(s3h)}},
        Ray<ExactBackend>{{C(h), C(-s3h)}},
    };
    for (const auto& r : rays) t.ray_desc.push_back(ray_desc(r));

    t.moment = build_moment_system(rays);
    t.pairwise_overlaps = {t.moment.overlaps[0][1], t.moment.overlaps[0][2],
                           t.moment.overlaps[1][2]};
    const Rational quarter(1, 4);
    bool overlaps_ok = true;
    for (const auto& o : t.pairwise_overlaps) overlaps_ok = overlaps_ok && o == quarter;

    // Two-indicator joint table for a pair with overlap 1/4 (all three pairs
    // share it): P(1,1) = ov/2 and the rest follow from the 1/2 marginals.
    const Rational ov = t.pairwise_overlaps.front();
    t.joint_p11 = ov / 2;
    t.joint_p10 = half - t.joint_p11;
    t.joint_p01 = half - t.joint_p11;
    t.joint_p00 = 1 - half - half + t.joint_p11;
    const bool table_ok = t.joint_p11 == Rational(1, 8) && t.joint_p10 == Rational(3, 8) &&
                          t.joint_p01 == Rational(3, 8) && t.joint_p00 == Rational(1, 8);

    // Three marginal equations over the 8 atoms (ray 1 is the leading bit):
    //   P(X1=0, X2=0) = p000 + p001, P(X1=0, X3=1) = p001 + p011,
    //   P(X2=1, X3=1) = p011 + p111.
    const std::size_t atoms = t.moment.atom_count();
    const auto bit = [](std::size_t a, std::size_t i) { return ((a >> (2 - i)) & 1u) != 0; };
    auto marginal_row = [&](std::size_t i, bool vi, std::size_t j, bool vj, const Rational& rhs,
                            const std::string& name) {
        std::vector<Rational> row(atoms, Rational(0));
        for (std::size_t a = 0; a < atoms; ++a) {
            if (bit(a, i) == vi && bit(a, j) == vj) row[a] = 1;
        }
        t.marginal_sys.rows.push_back(std::move(row));
        t.marginal_sys.rhs.push_back(rhs);
        t.marginal_names.push_back(name);
    };
    marginal_row(0, false, 1, false, t.joint_p00, "p000 + p001 = 1/8");
    marginal_row(0, false, 2, true, t.joint_p01, "p001 + p011 = 3/8");
    marginal_row(1, true, 2, true, t.joint_p11, "p011 + p111 = 1/8");

    t.marginal_cert.mult = {Rational(1), Rational(-1), Rational(1)};
    t.marginal_cert_verified = lp::verify_certificate(t.marginal_sys, t.marginal_cert);

    // The combined row of the certificate: +row1 - row2 + row3 cancels p001
    // and p011, leaving p000 + p111; the combined rhs is -1/8.
    t.combined_rhs = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        t.combined_rhs += t.marginal_cert.mult[i] * t.marginal_sys.rhs[i];
    }
    for (std::size_t a = 0; a < atoms; ++a) {
        Rational coeff(0);
        for (std::size_t i = 0; i < 3; ++i) {
            coeff += t.marginal_cert.mult[i] * t.marginal_sys.rows[i][a];
        }
        if (coeff != 0) t.combined_atoms.push_back(a);
    }

    t.full_outcome = solve_feasibility(t.moment);

    t.pass = overlaps_ok && table_ok && t.marginal_cert_verified &&
             t.combined_rhs == Rational(-1, 8) && t.combined_atoms == std::vector<std::size_t>{0, 7} &&
             !t.full_outcome.feasible && t.full_outcome.verified;
    return t;
}

// ---------------------------------------------------------------------------
// Probe batteries
// ---------------------------------------------------------------------------

template <class B>
std::vector<Experiment<B>> axis_probe_tests() {
    using Real = typename B::Real;
    const Real zero(0);
    const Real one(1);
    const Real half = B::from_rational(Rational(1, 2));
    auto mk = [](std::string name, Mat<B> p) {
        Mat<B> q = Mat<B>::identity(2) - p;
        return Experiment<B>{std::move(name),
                             Povm<B>{{1.0, 0.0}, {Effect<B>{std::move(p)}, Effect<B>{std::move(q)}}}};
    };
    Mat<B> pz(2);
    pz.at(0, 0) = B::make_complex(one, zero);
    Mat<B> px(2);
    px.at(0, 0) = B::make_complex(half, zero);
    px.at(0, 1) = B::make_complex(half, zero);
    px.at(1, 0) = B::make_complex(half, zero);
    px.at(1, 1) = B::make_complex(half, zero);
    Mat<B> py(2);
    py.at(0, 0) = B::make_complex(half, zero);
    py.at(0, 1) = B::make_complex(zero, Real(0) - half);
    py.at(1, 0) = B::make_complex(zero, half);
    py.at(1, 1) = B::make_complex(half, zero);
    std::vector<Experiment<B>> tests;
    tests.push_back(mk("z test", std::move(pz)));
    tests.push_back(mk("x test", std::move(px)));
    tests.push_back(mk("y test", std::move(py)));
    return tests;
}

template std::vector<Experiment<FloatBackend>> axis_probe_tests();
template std::vector<Experiment<ExactBackend>> axis_probe_tests();

std::vector<Ray<ExactBackend>> exact_probe_rays() {
    using C = ExactComplex;
    const ExactReal h(Rational(1, 2));
    const ExactReal s3h(Rational(0), Rational(1, 2));
    return {Ray<ExactBackend>{{C(h), C(s3h)}}, Ray<ExactBackend>{{C(h), C(-s3h)}}};
}

// ---------------------------------------------------------------------------
// Staged pipeline
// ---------------------------------------------------------------------------

namespace {

template <class B>
struct BasisPair {
    EpistemicMeasure<B> g;
    EpistemicMeasure<B> gperp;
    std::string label;
};

/// Two-outcome tests attached to a basis pair, built from the D-map values
/// so the label-0 effect is exactly the complement.
template <class B>
Experiment<B> basis_test(const BasisPair<B>& basis, bool swapped) {
    const Mat<B>& p = dmap(swapped ? basis.gperp : basis.g).op;
    Mat<B> q = Mat<B>::identity(p.dim) - p;
    return Experiment<B>{"basis test " + basis.label + (swapped ? " (swapped)" : ""),
                         Povm<B>{{1.0, 0.0}, {Effect<B>{p}, Effect<B>{std::move(q)}}}};
}

struct MomentStageOutcome {
    PipelineStage stage;
    bool certified = false;
    Rational contradiction;
};

MomentStageOutcome moment_stage(int break_stage) {
    MomentStageOutcome out;
    PipelineStage& st = out.stage;
    st.index = 6;
    st.name = "moment-feasibility";
    const TripleTestResult t = triple_test();

    const ExactReal zero(0);
    for (std::size_t k = 0; k < 3; ++k) {
        static const char* kPairs[] = {"rays 1 and 2", "rays 1 and 3", "rays 2 and 3"};
        st.checks.push_back(make_check<ExactBackend>("pairwise-overlap", kPairs[k],
                                                     ExactReal(t.pairwise_overlaps[k]),
                                                     ExactReal(Rational(1, 4)), zero));
    }
    st.checks.push_back(make_check<ExactBackend>("joint-table", "P(1,1) of each pair",
                                                 ExactReal(t.joint_p11),
                                                 ExactReal(Rational(1, 8)), zero));
    st.checks.push_back(make_check<ExactBackend>("joint-table", "P(1,0) of each pair",
                                                 ExactReal(t.joint_p10),
                                                 ExactReal(Rational(3, 8)), zero));
    IdentityCheck contradiction = make_check<ExactBackend>(
        "marginal-contradiction", "multipliers (1, -1, 1) on the three marginal equations",
        ExactReal(t.combined_rhs), ExactReal(Rational(-1, 8)), zero);
    contradiction.pass = contradiction.pass && t.marginal_cert_verified;
    st.checks.push_back(std::move(contradiction));
    IdentityCheck machine;
    machine.id = "machine-certificate";
    machine.detail = "simplex decision on the full moment system";
    machine.measured = t.full_outcome.feasible ? 1.0 : 0.0;
    machine.expected = 0.0;
    machine.deviation = machine.measured;
    machine.pass = !t.full_outcome.feasible && t.full_outcome.verified;
    st.checks.push_back(std::move(machine));

    out.certified = t.pass;
    out.contradiction = t.combined_rhs;
    st.verdict = t.pass ? "pass" : "error";
    st.detail =
        "the three-ray indicator moments admit no joint distribution; multipliers (1, -1, 1) "
        "combine the marginal equations into p000 + p111 = -1/8";
    if (break_stage >= 0) {
        st.detail += "; the model evades the contradiction through its break at stage " +
                     std::to_string(break_stage);
    }
    return out;
}

}  // namespace

template <class B>
PipelineReport proof_pipeline_audit(const OntologicalModel<B>& model,
                                    const PipelineOptions& options) {
    using Real = typename B::Real;
    PipelineReport rep;
    rep.model_name = model.name;
    const Real tol_exactish = B::is_exact ? Real(0) : Real(B::eps());
    const Real born_tol = B::is_exact ? Real(0) : Real(options.adequacy_tol);
    const Real support_tol = B::is_exact ? Real(0) : Real(options.support_tol);
    const Real overlap_tol = B::is_exact ? Real(0) : Real(options.overlap_tol);

    bool stopped = false;
    auto note_break = [&rep, &stopped, &options](int stage) {
        if (rep.break_stage < 0) rep.break_stage = stage;
        if (!options.keep_going) stopped = true;
    };
    auto skip_stage = [&rep](int index, const char* name) {
        PipelineStage st;
        st.index = index;
        st.name = name;
        st.verdict = "skipped";
        st.detail = "not reached (break at stage " + std::to_string(rep.break_stage) + ")";
        rep.stages.push_back(std::move(st));
    };

    // Stage 0: hypothesis audit. Generators must be probability measures and
    // the response rule must cover the two-outcome ray tests the argument
    // uses, with normalized rows.
    std::vector<Experiment<B>> probes = axis_probe_tests<B>();
    if constexpr (B::is_exact) {
        for (const auto& r : exact_probe_rays()) {
            probes.push_back(ray_test<B>("ray test " + ray_desc(r), r));
        }
    } else {
        Rng rng(options.seed);
        for (std::size_t k = 0; k < options.probe_tests; ++k) {
            const Ray<B> r = rng.ray();
            probes.push_back(ray_test<B>("random ray test #" + std::to_string(k + 1), r));
        }
    }
    std::vector<Experiment<B>> supported;
    {
        PipelineStage st;
        st.index = 0;
        st.name = "hypothesis-audit";
        st.verdict = "pass";
        std::string first_missing;
        for (const auto& gen : model.generators) {
            st.checks.push_back(make_check<B>("generator-normalization", gen.name,
                                              total_mass(gen), Real(1), tol_exactish));
        }
        for (const auto& x : probes) {
            if (!model.response->supports(x)) {
                if (first_missing.empty()) first_missing = x.name;
                IdentityCheck c;
                c.id = "experiment-coverage";
                c.detail = x.name;
                c.measured = 0.0;
                c.expected = 1.0;
                c.deviation = 1.0;
                c.pass = false;
                st.checks.push_back(std::move(c));
                continue;
            }
            supported.push_back(x);
            const ValidityReport vr = response_validity(model, x, tol_exactish);
            IdentityCheck c;
            c.id = "response-normalization";
            c.detail = x.name;
            c.measured = vr.magnitude;
            c.expected = 0.0;
            c.deviation = vr.magnitude;
            c.pass = vr.ok;
            st.checks.push_back(std::move(c));
        }
        bool all_pass = true;
        for (const auto& c : st.checks) all_pass = all_pass && c.pass;
        if (!first_missing.empty()) {
            st.verdict = "break";
            st.detail = "no response defined for '" + first_missing +
                        "': the experiment repertoire does not cover the two-outcome ray tests";
            note_break(0);
        } else if (!all_pass) {
            st.verdict = "break";
            st.detail = "a generator or response row fails its normalization";
            note_break(0);
        } else {
            st.detail = "generators normalized; all " + std::to_string(probes.size()) +
                        " probe tests answered with normalized rows";
        }
        rep.stages.push_back(std::move(st));
    }

    // Stage 1: convex linearity of the D-map along generator mixtures.
    if (stopped) {
        skip_stage(1, "dmap-convexity");
    } else {
        PipelineStage st;
        st.index = 1;
        st.name = "dmap-convexity";
        st.verdict = "pass";
        const Rational weights[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
        std::size_t probe_idx = 0;
        for (std::size_t i = 0; i < model.generators.size(); ++i) {
            for (std::size_t j = i + 1; j < model.generators.size(); ++j) {
                const auto& a = model.generators[i];
                const auto& b = model.generators[j];
                if (!a.quantum || !b.quantum || supported.empty()) continue;
                for (const auto& w : weights) {
                    const Real s = B::from_rational(w);
                    const Experiment<B>& x = supported[probe_idx++ % supported.size()];
                    const ConvexityReport<B> cr = dmap_convexity_audit(model, a, b, s, x, born_tol);
                    const Real worst_alg =
                        cr.dmap_entry_dev < cr.linearity_dev ? cr.linearity_dev : cr.dmap_entry_dev;
                    st.checks.push_back(make_check<B>(
                        "mixture-linearity",
                        "s=" + fmt(B::to_double(s)) + " of " + a.name + ", " + b.name + " on '" +
                            x.name + "'",
                        worst_alg, Real(0), B::eps()));
                    st.checks.push_back(make_check<B>(
                        "mixture-born-chain",
                        "s=" + fmt(B::to_double(s)) + " of " + a.name + ", " + b.name + " on '" +
                            x.name + "'",
                        cr.born_chain_dev, Real(0), born_tol));
                }
            }
        }
        bool all_pass = true;
        for (const auto& c : st.checks) all_pass = all_pass && c.pass;
        if (st.checks.empty()) {
            st.detail = "fewer than two generators carry D-map values; nothing to mix";
        } else if (all_pass) {
            st.detail = "the D-map and the statistics are linear along " +
                        std::to_string(st.checks.size() / 2) + " generator mixtures";
        } else {
            st.verdict = "break";
            st.detail = "a mixture violates convex linearity";
            note_break(1);
        }
        rep.stages.push_back(std::move(st));
    }

    // Stage 2: injectivity scan over preparable measures.
    if (stopped) {
        skip_stage(2, "injectivity-scan");
    } else {
        PipelineStage st;
        st.index = 2;
        st.name = "injectivity-scan";
        st.verdict = "pass";
        std::vector<EpistemicMeasure<B>> candidates;
        for (const auto& gen : model.generators) {
            if (gen.quantum) candidates.push_back(gen);
        }
        const std::size_t n_gen = candidates.size();
        const Rational weights[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
        for (std::size_t i = 0; i < n_gen; ++i) {
            for (std::size_t j = i + 1; j < n_gen; ++j) {
                for (const auto& w : weights) {
                    candidates.push_back(
                        mix(B::from_rational(w), candidates[i], candidates[j]));
                }
            }
        }
        bool found = false;
        for (std::size_t i = 0; i < candidates.size() && !found; ++i) {
            for (std::size_t j = i + 1; j < candidates.size() && !found; ++j) {
                const Real dev =
                    max_entry_dev<B>(dmap(candidates[i]).op, dmap(candidates[j]).op);
                if (dev > tol_exactish) continue;
                const double tv = B::to_double(total_variation(candidates[i], candidates[j]));
                if (tv <= 1e-9) continue;  // same measure twice, not a counterexample
                found = true;
                IdentityCheck c;
                c.id = "double-preimage";
                c.detail = candidates[i].name + " vs " + candidates[j].name;
                c.measured = tv;
                c.expected = 0.0;
                c.deviation = tv;
                c.pass = false;
                st.checks.push_back(std::move(c));
                st.verdict = "break";
                st.detail = "distinct preparable measures share one D-map value: '" +
                            candidates[i].name + "' and '" + candidates[j].name +
                            "' (total variation " + fmt(tv) + ") both map to " +
                            mat_desc(dmap(candidates[i]).op);
            }
        }
        if (found) {
            note_break(2);
        } else {
            st.detail = "no distinct pair among " + std::to_string(candidates.size()) +
                        " preparable measures shares a D-map value";
        }
        rep.stages.push_back(std::move(st));
    }

    // Stage 3: inverse construction. Collect (rho_g, rho_gperp) basis pairs,
    // either through prepare_ray or from generator pairs whose D-map values
    // sum to the identity.
    std::vector<BasisPair<B>> bases;
    if (stopped) {
        skip_stage(3, "inverse-construction");
    } else {
        PipelineStage st;
        st.index = 3;
        st.name = "inverse-construction";
        st.verdict = "pass";
        std::size_t rejected = 0;
        if (model.prepare_ray) {
            std::vector<Ray<B>> basis_rays;
            if constexpr (B::is_exact) {
                using C = ExactComplex;
                basis_rays.push_back(Ray<B>{{C(ExactReal(1)), C()}});
                basis_rays.push_back(exact_probe_rays().front());
            } else {
                const double r = 1.0 / std::sqrt(2.0);
                basis_rays.push_back(Ray<B>{{{1.0, 0.0}, {0.0, 0.0}}});
                basis_rays.push_back(Ray<B>{{{r, 0.0}, {r, 0.0}}});
                basis_rays.push_back(Ray<B>{{{r, 0.0}, {0.0, r}}});
                Rng rng(options.seed + 1);
                for (std::size_t k = 0; k < options.bases; ++k) basis_rays.push_back(rng.ray());
            }
            for (const auto& g : basis_rays) {
                try {
                    BasisPair<B> bp{model.prepare_ray(g), model.prepare_ray(perp_ray(g)),
                                    "basis " + ray_desc(g)};
                    bases.push_back(std::move(bp));
                } catch (const std::invalid_argument&) {
                    ++rejected;
                }
            }
        } else {
            const Mat<B> ident = Mat<B>::identity(2);
            for (std::size_t i = 0; i < model.generators.size(); ++i) {
                for (std::size_t j = i + 1; j < model.generators.size(); ++j) {
                    const auto& a = model.generators[i];
                    const auto& b = model.generators[j];
                    if (!a.quantum || !b.quantum) continue;
                    if (a.quantum->op.dim != 2) continue;
                    if (max_entry_dev<B>(a.quantum->op + b.quantum->op, ident) > tol_exactish) {
                        continue;
                    }
                    bases.push_back(BasisPair<B>{a, b, "basis " + a.name + "/" + b.name});
                }
            }
        }
        for (const auto& bp : bases) {
            st.checks.push_back(make_check<B>("preimage-normalization", bp.label + ", rho_g",
                                              total_mass(bp.g), Real(1), born_tol));
            st.checks.push_back(make_check<B>("preimage-normalization", bp.label + ", rho_gperp",
                                              total_mass(bp.gperp), Real(1), born_tol));
            st.checks.push_back(make_check<B>("preimage-completion", bp.label + ", rho_1 mass",
                                              total_mass(measure_sum(bp.g, bp.gperp)), Real(2),
                                              born_tol));
        }
        double basis_tv = 0.0;
        for (std::size_t i = 0; i + 1 < bases.size(); ++i) {
            const auto sum_i = measure_sum(bases[i].g, bases[i].gperp);
            for (std::size_t j = i + 1; j < bases.size(); ++j) {
                const auto sum_j = measure_sum(bases[j].g, bases[j].gperp);
                basis_tv =
                    std::max(basis_tv, B::to_double(total_variation(sum_i, sum_j)));
            }
        }
        bool all_pass = true;
        for (const auto& c : st.checks) all_pass = all_pass && c.pass;
        if (bases.empty()) {
            st.verdict = "finding";
            st.detail = "no basis pair is preparable (" + std::to_string(rejected) +
                        " rays rejected): the D-map has no usable inverse here";
        } else if (!all_pass) {
            st.verdict = "break";
            st.detail = "a constructed preimage has the wrong mass";
            note_break(3);
        } else if (basis_tv > 1e-9) {
            st.verdict = "finding";
            st.detail = "rho_1 varies with the generating basis (total variation up to " +
                        fmt(basis_tv) +
                        " across " + std::to_string(bases.size()) +
                        " bases); an injective D-map would force a single value";
        } else {
            st.detail = "preimages constructed for " + std::to_string(bases.size()) +
                        " bases; rho_1 is basis-independent";
        }
        rep.stages.push_back(std::move(st));
    }

    // Stage 4: support identities, basis by basis.
    if (stopped || bases.empty()) {
        if (!stopped && bases.empty()) {
            PipelineStage st;
            st.index = 4;
            st.name = "support-identities";
            st.verdict = "skipped";
            st.detail = "no preparable basis pair to test";
            rep.stages.push_back(std::move(st));
        } else if (stopped) {
            skip_stage(4, "support-identities");
        }
    } else {
        PipelineStage st;
        st.index = 4;
        st.name = "support-identities";
        st.verdict = "pass";
        for (std::size_t bi = 0; bi < bases.size(); ++bi) {
            const auto& bp = bases[bi];
            const EpistemicMeasure<B> rho_1 = measure_sum(bp.g, bp.gperp);
            const Experiment<B> x_g = basis_test(bp, false);
            const Experiment<B> x_gperp = basis_test(bp, true);
            std::vector<SupportSet<B>> sets;
            sets.push_back(full_set(model.space));
            Rng subset_rng(options.seed + 100 + 64 * bi);
            for (std::size_t k = 0; k < options.subsets; ++k) {
                SupportSet<B> s = empty_set(model.space);
                for (auto& m : s.member) m = subset_rng.u01() < 0.5 ? 1 : 0;
                sets.push_back(std::move(s));
            }
            if (model.space->coords.size() == model.space->size()) {
                for (std::size_t k = 0; k < 2; ++k) {
                    const Bloch<FloatBackend> d = subset_rng.bloch_direction();
                    SupportSet<B> s = empty_set(model.space);
                    for (std::size_t i = 0; i < s.member.size(); ++i) {
                        const auto& c = model.space->coords[i];
                        s.member[i] = (c[0] * d.x + c[1] * d.y + c[2] * d.z) > 0.0 ? 1 : 0;
                    }
                    sets.push_back(std::move(s));
                }
            }
            SupportIdentityReport sir = verify_support_identities(
                model, x_g, x_gperp, bp.g, bp.gperp, rho_1, sets, support_tol);
            for (auto& c : sir.checks) {
                c.detail = bp.label + ": " + c.detail;
                st.checks.push_back(std::move(c));
            }
        }
        bool all_pass = true;
        for (const auto& c : st.checks) all_pass = all_pass && c.pass;
        if (!all_pass) {
            st.verdict = rep.break_stage >= 0 ? "finding" : "break";
            st.detail = "a support identity fails";
            if (rep.break_stage < 0) note_break(4);
        } else {
            st.detail = "all support identities hold across " + std::to_string(bases.size()) +
                        " bases (" + std::to_string(st.checks.size()) + " checks)";
        }
        rep.stages.push_back(std::move(st));
    }

    // Stage 5: overlap intersections against the first basis' rho_1.
    if (stopped || bases.empty()) {
        if (!stopped && bases.empty()) {
            PipelineStage st;
            st.index = 5;
            st.name = "overlap-intersections";
            st.verdict = "skipped";
            st.detail = "no preparable basis pair to test";
            rep.stages.push_back(std::move(st));
        } else if (stopped) {
            skip_stage(5, "overlap-intersections");
        }
    } else {
        PipelineStage st;
        st.index = 5;
        st.name = "overlap-intersections";
        st.verdict = "pass";
        const EpistemicMeasure<B> rho_1 = measure_sum(bases.front().g, bases.front().gperp);
        std::vector<OverlapIdentityReport> reports;
        if (model.prepare_ray) {
            if constexpr (!B::is_exact) {
                const Ray<B> g{{{1.0, 0.0}, {0.0, 0.0}}};
                Rng rng(options.seed + 2);
                for (std::size_t k = 0; k < 3; ++k) {
                    reports.push_back(
                        overlap_identity_check(model, rho_1, g, rng.ray(), overlap_tol));
                }
                // Both rays off the generating basis: the regime where a
                // basis-bound rho_1 can disagree with the trace value.
                const double s3h = std::sqrt(3.0) / 2.0;
                const Ray<B> g2{{{0.5, 0.0}, {s3h, 0.0}}};
                const Ray<B> g3{{{0.5, 0.0}, {-s3h, 0.0}}};
                reports.push_back(overlap_identity_check(model, rho_1, g2, g3, overlap_tol));
            } else {
                const Ray<B> g{{ExactComplex(ExactReal(1)), ExactComplex()}};
                const auto probe = exact_probe_rays();
                reports.push_back(
                    overlap_identity_check(model, rho_1, g, probe[0], overlap_tol));
                reports.push_back(
                    overlap_identity_check(model, rho_1, probe[0], probe[1], overlap_tol));
            }
        } else {
            for (std::size_t i = 0; i < bases.size(); ++i) {
                for (std::size_t j = i + 1; j < bases.size(); ++j) {
                    const Mat<B>& pi = dmap(bases[i].g).op;
                    const Mat<B>& pj = dmap(bases[j].g).op;
                    const Real expected = B::re(trace(pi * pj));
                    reports.push_back(overlap_identity_check(model, rho_1,
                                                             basis_test(bases[i], false),
                                                             basis_test(bases[j], false),
                                                             expected, overlap_tol));
                }
            }
        }
        for (const auto& r : reports) {
            IdentityCheck c;
            c.id = "overlap-intersection";
            c.detail = r.pair;
            c.measured = r.measured;
            c.expected = r.expected;
            c.deviation = r.deviation;
            c.pass = r.pass;
            st.checks.push_back(std::move(c));
        }
        bool all_pass = true;
        for (const auto& c : st.checks) all_pass = all_pass && c.pass;
        if (st.checks.empty()) {
            st.verdict = "skipped";
            st.detail = "no ray pairs available";
        } else if (!all_pass) {
            st.verdict = rep.break_stage >= 0 ? "finding" : "break";
            st.detail = "the intersection identity fails off the generating basis; the mass-2 "
                        "measure is basis-bound, as the earlier break predicts";
            if (rep.break_stage < 0) note_break(5);
        } else {
            st.detail = "rho_1 reproduces tr(P_g P_h) on all " +
                        std::to_string(st.checks.size()) + " pairs";
        }
        rep.stages.push_back(std::move(st));
    }

    // Stage 6: the moment-system contradiction (model-independent).
    if (stopped) {
        skip_stage(6, "moment-feasibility");
        rep.ok = true;
        return rep;
    }
    MomentStageOutcome mo = moment_stage(rep.break_stage);
    rep.contradiction_certified = mo.certified;
    if (mo.certified) rep.contradiction = mo.contradiction;
    const bool moment_ok = mo.certified;
    rep.stages.push_back(std::move(mo.stage));
    rep.ok = moment_ok;
    return rep;
}

PipelineReport abstract_pipeline_audit() {
    PipelineReport rep;
    rep.model_name = "abstract";
    const char* names[] = {"hypothesis-audit",     "dmap-convexity",
                           "injectivity-scan",     "inverse-construction",
                           "support-identities",   "overlap-intersections"};
    const char* details[] = {
        "granted: experiments cover every two-outcome ray test",
        "granted: the D-map is convex-linear on preparable measures",
        "granted: the D-map is injective, so preimages are unique",
        "granted: rho_1 and the ray preimages exist and are basis-independent",
        "granted: each preimage concentrates on its ray's support set",
        "granted: the intersection identities fix the pairwise indicator moments",
    };
    for (int i = 0; i < 6; ++i) {
        PipelineStage st;
        st.index = i;
        st.name = names[i];
        st.verdict = "assumed";
        st.detail = details[i];
        rep.stages.push_back(std::move(st));
    }
    MomentStageOutcome mo = moment_stage(-1);
    rep.contradiction_certified = mo.certified;
    if (mo.certified) rep.contradiction = mo.contradiction;
    rep.ok = mo.certified;
    rep.stages.push_back(std::move(mo.stage));
    return rep;
}

// ---------------------------------------------------------------------------
// D-map collision scan
// ---------------------------------------------------------------------------

template <class B>
DmapWitness<B> dmap_witness_scan(const OntologicalModel<B>& model, const Rational& step,
                                 double tv_threshold, double dmap_tol, std::size_t n_tests,
                                 std::uint64_t seed) {
    if (step <= 0 || step > 1) {
        throw std::invalid_argument("dmap_witness_scan: step must lie in (0, 1]");
    }
    DmapWitness<B> out;

    std::vector<EpistemicMeasure<B>> candidates;
    for (const auto& gen : model.generators) {
        if (gen.quantum) candidates.push_back(gen);
    }
    const std::size_t n_gen = candidates.size();
    std::vector<Rational> grid;
    for (Rational s = step; s < 1; s += step) grid.push_back(s);
    for (std::size_t i = 0; i < n_gen; ++i) {
        for (std::size_t j = i + 1; j < n_gen; ++j) {
            for (const auto& s : grid) {
                candidates.push_back(mix(B::from_rational(s), candidates[i], candidates[j]));
            }
        }
    }
    out.candidates = candidates.size();

    std::size_t wi = 0;
    std::size_t wj = 0;
    for (std::size_t i = 0; i < candidates.size() && !out.found; ++i) {
        for (std::size_t j = i + 1; j < candidates.size() && !out.found; ++j) {
            const double dev =
                B::to_double(max_entry_dev<B>(dmap(candidates[i]).op, dmap(candidates[j]).op));
            if (dev > dmap_tol) continue;
            const double tv = B::to_double(total_variation(candidates[i], candidates[j]));
            if (tv < tv_threshold) continue;
            out.found = true;
            wi = i;
            wj = j;
            out.a = candidates[i].name;
            out.b = candidates[j].name;
            out.tv = tv;
            out.dmap_deviation = dev;
            out.dmap = dmap(candidates[i]).op;
        }
    }
    if (!out.found) return out;

    std::vector<Experiment<B>> battery;
    for (auto& x : axis_probe_tests<B>()) {
        if (model.response->supports(x)) battery.push_back(std::move(x));
    }
    if constexpr (B::is_exact) {
        for (const auto& r : exact_probe_rays()) {
            Experiment<B> x = ray_test<B>("ray test " + ray_desc(r), r);
            if (model.response->supports(x)) battery.push_back(std::move(x));
        }
        (void)n_tests;
        (void)seed;
    } else {
        Rng rng(seed);
        for (std::size_t k = 0; k < n_tests; ++k) {
            Experiment<B> x = ray_test<B>("random ray test #" + std::to_string(k + 1), rng.ray());
            if (model.response->supports(x)) battery.push_back(std::move(x));
        }
    }
    out.tests = battery.size();
    double gap = 0.0;
    for (const auto& x : battery) {
        const auto pa = predict(model, candidates[wi], x);
        const auto pb = predict(model, candidates[wj], x);
        for (std::size_t o = 0; o < pa.size(); ++o) {
            gap = std::max(gap, B::to_double(B::abs(pa[o] - pb[o])));
        }
    }
    out.predict_gap = gap;
    return out;
}

// ---------------------------------------------------------------------------
// Explicit instantiations
// ---------------------------------------------------------------------------

template typename FloatBackend::Real measure_of(const EpistemicMeasure<FloatBackend>&,
                                                const SupportSet<FloatBackend>&);
template typename ExactBackend::Real measure_of(const EpistemicMeasure<ExactBackend>&,
                                                const SupportSet<ExactBackend>&);

template SupportSet<FloatBackend> support_set(const OntologicalModel<FloatBackend>&,
                                              const Experiment<FloatBackend>&, double,
                                              const FloatBackend::Real&);
template SupportSet<ExactBackend> support_set(const OntologicalModel<ExactBackend>&,
                                              const Experiment<ExactBackend>&, double,
                                              const ExactBackend::Real&);
template SupportSet<FloatBackend> support_set(const OntologicalModel<FloatBackend>&,
                                              const Ray<FloatBackend>&, const FloatBackend::Real&);
template SupportSet<ExactBackend> support_set(const OntologicalModel<ExactBackend>&,
                                              const Ray<ExactBackend>&, const ExactBackend::Real&);

template SupportSet<FloatBackend> residual_set(const OntologicalModel<FloatBackend>&,
                                               const Experiment<FloatBackend>&, double,
                                               const FloatBackend::Real&);
template SupportSet<ExactBackend> residual_set(const OntologicalModel<ExactBackend>&,
                                               const Experiment<ExactBackend>&, double,
                                               const ExactBackend::Real&);

template EpistemicMeasure<FloatBackend> measure_sum(const EpistemicMeasure<FloatBackend>&,
                                                    const EpistemicMeasure<FloatBackend>&);
template EpistemicMeasure<ExactBackend> measure_sum(const EpistemicMeasure<ExactBackend>&,
                                                    const EpistemicMeasure<ExactBackend>&);

template SupportIdentityReport verify_support_identities(
    const OntologicalModel<FloatBackend>&, const Experiment<FloatBackend>&,
    const Experiment<FloatBackend>&, const EpistemicMeasure<FloatBackend>&,
    const EpistemicMeasure<FloatBackend>&, const EpistemicMeasure<FloatBackend>&,
    const std::vector<SupportSet<FloatBackend>>&, const FloatBackend::Real&);
template SupportIdentityReport verify_support_identities(
    const OntologicalModel<ExactBackend>&, const Experiment<ExactBackend>&,
    const Experiment<ExactBackend>&, const EpistemicMeasure<ExactBackend>&,
    const EpistemicMeasure<ExactBackend>&, const EpistemicMeasure<ExactBackend>&,
    const std::vector<SupportSet<ExactBackend>>&, const ExactBackend::Real&);
template SupportIdentityReport verify_support_identities(
    const OntologicalModel<FloatBackend>&, const Ray<FloatBackend>&,
    const EpistemicMeasure<FloatBackend>&, const EpistemicMeasure<FloatBackend>&,
    const EpistemicMeasure<FloatBackend>&, const std::vector<SupportSet<FloatBackend>>&,
    const FloatBackend::Real&);
template SupportIdentityReport verify_support_identities(
    const OntologicalModel<ExactBackend>&, const Ray<ExactBackend>&,
    const EpistemicMeasure<ExactBackend>&, const EpistemicMeasure<ExactBackend>&,
    const EpistemicMeasure<ExactBackend>&, const std::vector<SupportSet<ExactBackend>>&,
    const ExactBackend::Real&);

template OverlapIdentityReport overlap_identity_check(const OntologicalModel<FloatBackend>&,
                                                      const EpistemicMeasure<FloatBackend>&,
                                                      const Experiment<FloatBackend>&,
                                                      const Experiment<FloatBackend>&,
                                                      const FloatBackend::Real&,
                                                      const FloatBackend::Real&);
template OverlapIdentityReport overlap_identity_check(const OntologicalModel<ExactBackend>&,
                                                      const EpistemicMeasure<ExactBackend>&,
                                                      const Experiment<ExactBackend>&,
                                                      const Experiment<ExactBackend>&,
                                                      const ExactBackend::Real&,
                                                      const ExactBackend::Real&);
template OverlapIdentityReport overlap_identity_check(const OntologicalModel<FloatBackend>&,
                                                      const EpistemicMeasure<FloatBackend>&,
                                                      const Ray<FloatBackend>&,
                                                      const Ray<FloatBackend>&,
                                                      const FloatBackend::Real&);
template OverlapIdentityReport overlap_identity_check(const OntologicalModel<ExactBackend>&,
                                                      const EpistemicMeasure<ExactBackend>&,
                                                      const Ray<ExactBackend>&,
                                                      const Ray<ExactBackend>&,
                                                      const ExactBackend::Real&);

template DmapWitness<FloatBackend> dmap_witness_scan(const OntologicalModel<FloatBackend>&,
                                                     const Rational&, double, double, std::size_t,
                                                     std::uint64_t);
template DmapWitness<ExactBackend> dmap_witness_scan(const OntologicalModel<ExactBackend>&,
                                                     const Rational&, double, double, std::size_t,
                                                     std::uint64_t);

template PipelineReport proof_pipeline_audit(const OntologicalModel<FloatBackend>&,
                                             const PipelineOptions&);
template PipelineReport proof_pipeline_audit(const OntologicalModel<ExactBackend>&,
                                             const PipelineOptions&);

}  // namespace ontocheck
