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

#include "ontocheck/models.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "ontocheck/rng.hpp"

namespace ontocheck {

namespace {

/// Effects of a KS-supported experiment in shared-eigenaxis form.
struct KsDecomp {
    bool ok = false;
    std::string why;
    std::array<double, 3> axis{0.0, 0.0, 0.0};
    std::vector<double> alpha;  // response on {axis . lambda > 0}
    std::vector<double> beta;   // response on the complement
};

KsDecomp ks_decompose(const Experiment<FloatBackend>& x) {
    KsDecomp d;
    const std::size_t n = x.povm.size();
    if (n == 0 || x.povm.effects.front().op.dim != 2) {
        d.why = "KS model is defined on qubit experiments";
        return d;
    }
    std::vector<PauliDecomp<FloatBackend>> parts(n);
    std::vector<double> vnorm(n);
    constexpr double kScalarTol = 1e-12;
    std::size_t pivot = n;
    for (std::size_t o = 0; o < n; ++o) {
        parts[o] = pauli_decompose<FloatBackend>(x.povm.effects[o].op);
        vnorm[o] = std::sqrt(parts[o].x * parts[o].x + parts[o].y * parts[o].y +
                             parts[o].z * parts[o].z);
        if (vnorm[o] > kScalarTol &&
            (pivot == n || x.povm.labels[o] > x.povm.labels[pivot])) {
            pivot = o;
        }
    }
    d.alpha.resize(n);
    d.beta.resize(n);
    if (pivot == n) {  // trivial POVM: every effect is a multiple of I
        for (std::size_t o = 0; o < n; ++o) d.alpha[o] = d.beta[o] = parts[o].c;
        d.ok = true;
        return d;
    }
    d.axis = {parts[pivot].x / vnorm[pivot], parts[pivot].y / vnorm[pivot],
              parts[pivot].z / vnorm[pivot]};
    for (std::size_t o = 0; o < n; ++o) {
        const double s =
            parts[o].x * d.axis[0] + parts[o].y * d.axis[1] + parts[o].z * d.axis[2];
        const double rx = parts[o].x - s * d.axis[0];
        const double ry = parts[o].y - s * d.axis[1];
        const double rz = parts[o].z - s * d.axis[2];
        if (std::sqrt(rx * rx + ry * ry + rz * rz) > FloatBackend::eps()) {
            d.why = "effects do not commute (no shared eigenaxis), so the half-sphere "
                    "rule yields no per-node distribution";
            return d;
        }
        d.alpha[o] = parts[o].c + s;
        d.beta[o] = parts[o].c - s;
    }
    d.ok = true;
    return d;
}

std::string bloch_name(const char* prefix, const Bloch<FloatBackend>& b) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s(%.6g,%.6g,%.6g)", prefix, b.x, b.y, b.z);
    return buf;
}

EpistemicMeasure<FloatBackend> ks_prepare_on(const SpacePtr<FloatBackend>& space,
                                             const Ray<FloatBackend>& g, std::string name) {
    const Bloch<FloatBackend> b = ray_to_bloch(g);
    const std::size_t n = space->size();
    std::vector<double> density(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& p = space->coords[i];
        density[i] = std::max(0.0, b.x * p[0] + b.y * p[1] + b.z * p[2]) / std::numbers::pi;
    }
    // The analytic mass is 1; dividing out the quadrature residue makes the
    // discrete mass exactly 1, so the support identities downstream see no
    // mesh noise.
    const double mass = kernels::dot(density, space->weights);
    for (double& d : density) d /= mass;
    if (name.empty()) name = bloch_name("ks", b);
    return make_measure<FloatBackend>(space, std::move(density),
                                      DensityMatrix<FloatBackend>{projector(g)}, std::move(name));
}

}  // namespace

std::vector<double> KsResponse::respond(std::size_t node, const Experiment<FloatBackend>& x,
                                        const OnticSpace<FloatBackend>& space) const {
    const KsDecomp d = ks_decompose(x);
    if (!d.ok) throw UnsupportedExperiment("KS: " + d.why);
    const auto& p = space.coords[node];
    const double dot = d.axis[0] * p[0] + d.axis[1] * p[1] + d.axis[2] * p[2];
    return dot > 0.0 ? d.alpha : d.beta;
}

bool KsResponse::supports(const Experiment<FloatBackend>& x) const {
    return ks_decompose(x).ok;
}

std::vector<std::vector<double>> KsResponse::response_table(
    const Experiment<FloatBackend>& x, const OnticSpace<FloatBackend>& space) const {
    const KsDecomp d = ks_decompose(x);
    if (!d.ok) throw UnsupportedExperiment("KS: " + d.why);
    const std::size_t n = space.size();
    std::vector<std::vector<double>> table(x.povm.size(), std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const auto& p = space.coords[i];
        const bool up =
            d.axis[0] * p[0] + d.axis[1] * p[1] + d.axis[2] * p[2] > 0.0;
        for (std::size_t o = 0; o < x.povm.size(); ++o) {
            table[o][i] = up ? d.alpha[o] : d.beta[o];
        }
    }
    return table;
}

OntologicalModel<FloatBackend> make_ks_model(std::size_t n_polar, std::size_t n_azimuth) {
    const SphereMesh mesh = make_sphere_mesh(n_polar, n_azimuth);
    auto space = std::make_shared<OnticSpace<FloatBackend>>();
    space->name = "sphere-quadrature";
    space->coords = mesh.xyz;
    space->weights = mesh.weight;
    space->node_ids.reserve(mesh.size());
    for (std::size_t i = 0; i < mesh.size(); ++i) {
        space->node_ids.push_back("n" + std::to_string(i));
    }

    OntologicalModel<FloatBackend> model;
    model.name = "ks";
    model.space = space;
    model.response = std::make_shared<KsResponse>();

    const Ray<FloatBackend> zp{{{1.0, 0.0}, {0.0, 0.0}}};
    const Ray<FloatBackend> zm{{{0.0, 0.0}, {1.0, 0.0}}};
    const double r = 1.0 / std::sqrt(2.0);
    const Ray<FloatBackend> xp{{{r, 0.0}, {r, 0.0}}};
    const Ray<FloatBackend> xm{{{r, 0.0}, {-r, 0.0}}};
    const Ray<FloatBackend> yp{{{r, 0.0}, {0.0, r}}};
    const Ray<FloatBackend> ym{{{r, 0.0}, {0.0, -r}}};
    model.generators = {
        ks_prepare_on(space, zp, "z+"), ks_prepare_on(space, zm, "z-"),
        ks_prepare_on(space, xp, "x+"), ks_prepare_on(space, xm, "x-"),
        ks_prepare_on(space, yp, "y+"), ks_prepare_on(space, ym, "y-"),
    };
    model.prepare_ray = [space](const Ray<FloatBackend>& g) {
        return ks_prepare_on(space, g, "");
    };
    return model;
}

EpistemicMeasure<FloatBackend> ks_prepare(const OntologicalModel<FloatBackend>& model,
                                          const Ray<FloatBackend>& g, std::string name) {
    return ks_prepare_on(model.space, g, std::move(name));
}

KsWitnessReport ks_noninjectivity_witness(const OntologicalModel<FloatBackend>& model,
                                          std::size_t n_tests, std::uint64_t seed) {
    KsWitnessReport rep;
    const double half = 0.5;
    rep.rho_a = mix<FloatBackend>(half, model.generators[0], model.generators[1]);
    rep.rho_b = mix<FloatBackend>(half, model.generators[2], model.generators[3]);
    rep.rho_a.name = "(z+ + z-)/2";
    rep.rho_b.name = "(x+ + x-)/2";

    rep.tv = total_variation<FloatBackend>(rep.rho_a, rep.rho_b);
    rep.dmap_dev = max_entry_dev<FloatBackend>(dmap(rep.rho_a).op, dmap(rep.rho_b).op);
    rep.dmap_vs_half_id = max_entry_dev<FloatBackend>(
        dmap(rep.rho_a).op, scale<FloatBackend>(0.5, Mat<FloatBackend>::identity(2)));

    Rng rng(seed);
    rep.tests = n_tests;
    for (std::size_t t = 0; t < n_tests; ++t) {
        const Experiment<FloatBackend> x =
            ray_test<FloatBackend>("random projective test " + std::to_string(t), rng.ray());
        const auto pa = predict(model, rep.rho_a, x);
        const auto pb = predict(model, rep.rho_b, x);
        for (std::size_t o = 0; o < pa.size(); ++o) {
            rep.predict_max_gap = std::max(rep.predict_max_gap, std::fabs(pa[o] - pb[o]));
        }
    }
    rep.pass = rep.tv >= 0.1 && rep.dmap_dev <= 1e-12 && rep.dmap_vs_half_id <= 1e-12 &&
               rep.predict_max_gap <= 1e-6;
    return rep;
}

// ---------------------------------------------------------------------------
// Spekkens
// ---------------------------------------------------------------------------

namespace {

const Rational kHalf(1, 2);

/// Ontic supports of the 6 generators / eigenprojectors, 0-based nodes.
constexpr bool kSupport[6][4] = {
    {true, true, false, false},   // z+
    {false, false, true, true},   // z-
    {true, false, true, false},   // x+
    {false, true, false, true},   // x-
    {true, false, false, true},   // y+
    {false, true, true, false},   // y-
};

/// Classification of an exact effect: -1 unsupported, 6 scalar, else the
/// projector index.
int classify_effect(const Mat<ExactBackend>& e, ExactReal* scalar) {
    const auto projs = spekkens_projectors();
    for (int k = 0; k < 6; ++k) {
        if (max_entry_dev<ExactBackend>(e, projs[static_cast<std::size_t>(k)]) == ExactReal(0)) {
            return k;
        }
    }
    if (e.at(0, 1) == ExactComplex{} && e.at(1, 0) == ExactComplex{} &&
        e.at(0, 0) == e.at(1, 1) && e.at(0, 0).im == ExactReal(0)) {
        *scalar = e.at(0, 0).re;
        return 6;
    }
    return -1;
}

}  // namespace

std::vector<Mat<ExactBackend>> spekkens_projectors() {
    using C = ExactComplex;
    const ExactReal h(kHalf);
    const ExactReal mh(-kHalf);
    const ExactReal zero(0), one(1);
    std::vector<Mat<ExactBackend>> p;
    p.push_back(Mat<ExactBackend>(2, {C(one), C(zero), C(zero), C(zero)}));          // z+
    p.push_back(Mat<ExactBackend>(2, {C(zero), C(zero), C(zero), C(one)}));          // z-
    p.push_back(Mat<ExactBackend>(2, {C(h), C(h), C(h), C(h)}));                     // x+
    p.push_back(Mat<ExactBackend>(2, {C(h), C(mh), C(mh), C(h)}));                   // x-
    p.push_back(Mat<ExactBackend>(2, {C(h), C(zero, mh), C(zero, h), C(h)}));        // y+
    p.push_back(Mat<ExactBackend>(2, {C(h), C(zero, h), C(zero, mh), C(h)}));        // y-
    return p;
}

std::vector<Experiment<ExactBackend>> spekkens_pauli_tests() {
    const auto projs = spekkens_projectors();
    std::vector<Experiment<ExactBackend>> tests;
    const char* names[3] = {"sigma_z", "sigma_x", "sigma_y"};
    for (std::size_t t = 0; t < 3; ++t) {
        Povm<ExactBackend> povm{{+1.0, -1.0},
                                {Effect<ExactBackend>{projs[2 * t]},
                                 Effect<ExactBackend>{projs[2 * t + 1]}}};
        tests.push_back(Experiment<ExactBackend>{names[t], std::move(povm)});
    }
    return tests;
}

std::vector<ExactReal> SpekkensResponse::respond(std::size_t node,
                                                 const Experiment<ExactBackend>& x,
                                                 const OnticSpace<ExactBackend>&) const {
    std::vector<ExactReal> out(x.povm.size());
    for (std::size_t o = 0; o < x.povm.size(); ++o) {
        ExactReal scalar;
        const int k = classify_effect(x.povm.effects[o].op, &scalar);
        if (k < 0) {
            throw UnsupportedExperiment(
                "Spekkens: effect is neither scalar nor a Pauli eigenprojector");
        }
        out[o] = k == 6 ? scalar : ExactReal(kSupport[k][node] ? 1 : 0);
    }
    return out;
}

bool SpekkensResponse::supports(const Experiment<ExactBackend>& x) const {
    if (x.povm.effects.empty() || x.povm.effects.front().op.dim != 2) return false;
    for (const auto& e : x.povm.effects) {
        ExactReal scalar;
        if (classify_effect(e.op, &scalar) < 0) return false;
    }
    return true;
}

OntologicalModel<ExactBackend> make_spekkens_model() {
    auto space = std::make_shared<OnticSpace<ExactBackend>>();
    space->name = "spekkens4";
    space->node_ids = {"1", "2", "3", "4"};
    space->weights.assign(4, ExactReal(1));

    OntologicalModel<ExactBackend> model;
    model.name = "spekkens";
    model.space = space;
    model.response = std::make_shared<SpekkensResponse>();

    const auto projs = spekkens_projectors();
    const char* names[6] = {"z+", "z-", "x+", "x-", "y+", "y-"};
    for (std::size_t k = 0; k < 6; ++k) {
        std::vector<ExactReal> density(4, ExactReal(0));
        for (std::size_t i = 0; i < 4; ++i) {
            if (kSupport[k][i]) density[i] = ExactReal(kHalf);
        }
        model.generators.push_back(make_measure<ExactBackend>(
            space, std::move(density), DensityMatrix<ExactBackend>{projs[k]}, names[k]));
    }
    return model;
}

SpekkensAudit spekkens_audit() {
    const auto model = make_spekkens_model();
    const auto tests = spekkens_pauli_tests();
    SpekkensAudit audit;
    audit.adequate = true;
    for (const auto& gen : model.generators) {
        for (const auto& t : tests) {
            auto rep = adequacy_check<ExactBackend>(model, gen, t, ExactReal(0));
            audit.max_adequacy_dev =
                std::max(audit.max_adequacy_dev, ExactBackend::to_double(rep.max_dev));
            audit.adequate = audit.adequate && rep.pass;
            audit.adequacy.push_back(std::move(rep));
        }
    }

    // Surjectivity probe: a projective test outside the Pauli triple. The
    // ray (1/2, sqrt(3)/2) is exactly representable, and the model has no
    // response for it.
    const ExactReal h(kHalf);
    const ExactReal sq3h(Rational(0), kHalf);  // sqrt(3)/2
    const Ray<ExactBackend> g{{ExactComplex(h), ExactComplex(sq3h)}};
    audit.surjective = model.response->supports(ray_test<ExactBackend>("off-Pauli test", g));
    audit.surjectivity_note =
        audit.surjective ? "supports arbitrary qubit POVMs"
                         : "FAIL (3 tests only): no response outside the Pauli tests";

    audit.dmap_injective_on_generators = true;
    for (std::size_t i = 0; i < model.generators.size(); ++i) {
        for (std::size_t j = i + 1; j < model.generators.size(); ++j) {
            if (max_entry_dev<ExactBackend>(dmap(model.generators[i]).op,
                                            dmap(model.generators[j]).op) == ExactReal(0)) {
                audit.dmap_injective_on_generators = false;
            }
        }
    }
    return audit;
}

OntologicalModel<FloatBackend> make_psi_ontic4() {
    const double r = 1.0 / std::sqrt(2.0);
    const std::vector<Ray<FloatBackend>> rays = {
        {{{1.0, 0.0}, {0.0, 0.0}}},
        {{{0.0, 0.0}, {1.0, 0.0}}},
        {{{r, 0.0}, {r, 0.0}}},
        {{{r, 0.0}, {-r, 0.0}}},
    };
    auto model = psi_ontic_build<FloatBackend>(rays, {"z+", "z-", "x+", "x-"});
    model.name = "psi-ontic-4";
    return model;
}

}  // namespace ontocheck
