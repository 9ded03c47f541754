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

#ifndef ONTOCHECK_MODELS_HPP
#define ONTOCHECK_MODELS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ontocheck/ontology.hpp"
#include "ontocheck/sphere.hpp"

namespace ontocheck {

// ---------------------------------------------------------------------------
// Kochen-Specker qubit model: Lambda is the unit sphere (as a quadrature
// mesh), the preparation for a ray with Bloch vector n has density
// (1/pi) max(0, n . lambda), and responses are deterministic half-sphere
// indicators.
// ---------------------------------------------------------------------------

/// Response rule: write each effect as e = c I + v . sigma. The experiment's
/// effects must share an eigenaxis m (commute); m is oriented by the
/// non-scalar effect with the largest outcome label, so for a standard ray
/// test {1: P_g, 0: P_{g perp}} the boundary circle b_g . lambda = 0 lands
/// on outcome 0. Node response: c + v.m on {m . lambda > 0}, c - v.m on the
/// complement. These are the effect's eigenvalues, so each node's outcome
/// row is a probability distribution.
class KsResponse final : public ResponseFunction<FloatBackend> {
  public:
    std::vector<double> respond(std::size_t node, const Experiment<FloatBackend>& x,
                                const OnticSpace<FloatBackend>& space) const override;
    bool supports(const Experiment<FloatBackend>& x) const override;
    std::vector<std::vector<double>> response_table(
        const Experiment<FloatBackend>& x,
        const OnticSpace<FloatBackend>& space) const override;
};

/// KS model over the given product mesh, with the six Pauli-axis
/// preparations (z+, z-, x+, x-, y+, y-) as generators and ks_prepare wired
/// in as the pure-state inverse D-map.
OntologicalModel<FloatBackend> make_ks_model(std::size_t n_polar, std::size_t n_azimuth);

/// Preparation measure for a qubit ray: density (1/pi) max(0, n . lambda),
/// rescaled so the discrete total mass is exactly 1 (the analytic integral
/// is 1; the rescale removes the quadrature residue, which would otherwise
/// pollute every support identity downstream). D-map value: P_g.
EpistemicMeasure<FloatBackend> ks_prepare(const OntologicalModel<FloatBackend>& model,
                                          const Ray<FloatBackend>& g, std::string name = "");

struct KsWitnessReport {
    EpistemicMeasure<FloatBackend> rho_a;  // (z+ + z-)/2
    EpistemicMeasure<FloatBackend> rho_b;  // (x+ + x-)/2
    double tv = 0.0;
    double dmap_dev = 0.0;            // entrywise |dmap(a) - dmap(b)|
    double dmap_vs_half_id = 0.0;     // entrywise |dmap(a) - I/2|
    double predict_max_gap = 0.0;     // over the random projective battery
    std::size_t tests = 0;
    bool pass = false;
};

/// Constructive non-injectivity exhibit: two distinct preparable measures
/// (total variation > 0.1) with the same D-map value I/2, statistically
/// identical on every experiment. pass requires tv >= 0.1, both D-map
/// agreements <= 1e-12, and predict agreement <= 1e-6 on the battery.
KsWitnessReport ks_noninjectivity_witness(const OntologicalModel<FloatBackend>& model,
                                          std::size_t n_tests = 100, std::uint64_t seed = 1);

// ---------------------------------------------------------------------------
// Spekkens toy model: 4 ontic states, 6 epistemic generators (one per Pauli
// eigenstate), deterministic responses for the 3 Pauli tests. Exact.
// ---------------------------------------------------------------------------

class SpekkensResponse final : public ResponseFunction<ExactBackend> {
  public:
    std::vector<ExactReal> respond(std::size_t node, const Experiment<ExactBackend>& x,
                                   const OnticSpace<ExactBackend>& space) const override;
    bool supports(const Experiment<ExactBackend>& x) const override;
};

/// The 6 Pauli eigenprojectors as exact matrices, in generator order
/// z+, z-, x+, x-, y+, y-.
std::vector<Mat<ExactBackend>> spekkens_projectors();

/// Pauli test experiments sigma_z, sigma_x, sigma_y with outcome labels
/// {+1, -1}.
std::vector<Experiment<ExactBackend>> spekkens_pauli_tests();

OntologicalModel<ExactBackend> make_spekkens_model();

struct SpekkensAudit {
    std::vector<AdequacyReport<ExactBackend>> adequacy;  // 6 generators x 3 tests
    double max_adequacy_dev = 0.0;                       // exactly 0 when adequate
    bool adequate = false;
    bool surjective = false;       // experiment map onto all qubit POVMs
    std::string surjectivity_note;
    bool dmap_injective_on_generators = false;
};

/// Exact check that all 6 generators reproduce Born statistics for the 3
/// Pauli tests, that the experiment map is not surjective (the model
/// responds to 3 tests only, a hypothesis failure of the no-go theorem),
/// and that the D-map restricted to the generators is injective.
SpekkensAudit spekkens_audit();

// ---------------------------------------------------------------------------
// Trivial psi-ontic model: nodes are rays, the preparation for a node is the
// point mass on it, and the response IS the Born rule, so adequacy is exact
// by construction.
// ---------------------------------------------------------------------------

template <class B>
class BornResponse final : public ResponseFunction<B> {
  public:
    explicit BornResponse(std::vector<DensityMatrix<B>> node_states)
        : node_states_(std::move(node_states)) {}

    std::vector<typename B::Real> respond(std::size_t node, const Experiment<B>& x,
                                          const OnticSpace<B>& /*space*/) const override {
        std::vector<typename B::Real> out(x.povm.size());
        for (std::size_t o = 0; o < x.povm.size(); ++o) {
            out[o] = born(node_states_[node], x.povm.effects[o]);
        }
        return out;
    }

    bool supports(const Experiment<B>& x) const override {
        return !node_states_.empty() &&
               x.povm.effects.front().op.dim == node_states_.front().op.dim;
    }

  private:
    std::vector<DensityMatrix<B>> node_states_;
};

template <class B>
OntologicalModel<B> psi_ontic_build(const std::vector<Ray<B>>& rays,
                                    std::vector<std::string> names = {}) {
    if (rays.empty()) throw std::invalid_argument("psi_ontic_build: empty ray list");
    if (names.empty()) {
        for (std::size_t i = 0; i < rays.size(); ++i) names.push_back("ray" + std::to_string(i));
    }
    if (names.size() != rays.size()) {
        throw std::invalid_argument("psi_ontic_build: name/ray count mismatch");
    }
    auto space = std::make_shared<OnticSpace<B>>();
    space->name = "rays";
    std::vector<DensityMatrix<B>> states;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        const ValidityReport vr = validate_ray(rays[i]);
        if (!vr.ok) throw std::invalid_argument("psi_ontic_build: " + vr.message);
        space->node_ids.push_back(names[i]);
        space->weights.push_back(typename B::Real(1));
        states.push_back(DensityMatrix<B>{projector(rays[i])});
        if constexpr (!B::is_exact) {
            if (rays[i].dim() == 2) {
                const auto bl = ray_to_bloch(rays[i]);
                space->coords.push_back({bl.x, bl.y, bl.z});
            }
        }
    }
    OntologicalModel<B> model;
    model.name = "psi-ontic";
    model.space = space;
    model.response = std::make_shared<BornResponse<B>>(states);
    for (std::size_t i = 0; i < rays.size(); ++i) {
        std::vector<typename B::Real> density(rays.size(), typename B::Real(0));
        density[i] = typename B::Real(1);
        model.generators.push_back(make_measure<B>(
            model.space, std::move(density), DensityMatrix<B>{projector(rays[i])}, names[i]));
    }
    const std::vector<Ray<B>> node_rays = rays;
    const SpacePtr<B> space_ref = model.space;
    auto generators_ref = model.generators;
    model.prepare_ray = [node_rays, generators_ref](const Ray<B>& g) {
        for (std::size_t i = 0; i < node_rays.size(); ++i) {
            if (same_ray<B>(g, node_rays[i], B::eps())) return generators_ref[i];
        }
        throw std::invalid_argument("psi-ontic: ray is not an ontic node");
    };
    return model;
}

/// The four-ray instance used throughout: eigenbases of sigma_z and
/// sigma_x. Its two uniform pair-mixtures share the D-map value I/2.
OntologicalModel<FloatBackend> make_psi_ontic4();

}  // namespace ontocheck

#endif  // ONTOCHECK_MODELS_HPP
