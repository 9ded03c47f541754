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

#ifndef ONTOCHECK_MODELFILE_HPP
#define ONTOCHECK_MODELFILE_HPP

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ontocheck/models.hpp"

namespace ontocheck {

/// Definition-file failure. Parse errors carry "path:line:column:" context;
/// semantic errors carry the path and the offending key.
struct ModelFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A loaded model bound to whichever numeric backend its definition names.
using AnyModel = std::variant<OntologicalModel<FloatBackend>, OntologicalModel<ExactBackend>>;

struct LoadedModel {
    AnyModel model;
    bool exact = false;
};

/// Response rule given by explicit per-experiment tables; experiments are
/// matched by POVM content (labels and effect entries), not by name.
template <class B>
class TableResponse final : public ResponseFunction<B> {
  public:
    struct Entry {
        Experiment<B> x;
        std::vector<std::vector<typename B::Real>> rows;  // [outcome][node]
    };

    explicit TableResponse(std::vector<Entry> entries) : entries_(std::move(entries)) {}

    std::vector<typename B::Real> respond(std::size_t node, const Experiment<B>& x,
                                          const OnticSpace<B>& space) const override;
    bool supports(const Experiment<B>& x) const override;
    std::vector<std::vector<typename B::Real>> response_table(
        const Experiment<B>& x, const OnticSpace<B>& space) const override;

  private:
    std::vector<Entry> entries_;

    const Entry* find(const Experiment<B>& x) const;
};

/// Builds a zoo model by name ("ks", "spekkens", "psi-ontic-4"); any other
/// argument is taken as a definition-file path. The mesh order applies to
/// built-in sphere models only. Throws ModelFileError when the name is
/// neither a built-in nor a readable file.
LoadedModel resolve_model(const std::string& name_or_path,
                          std::pair<std::size_t, std::size_t> mesh);

/// Loads a model definition file: a JSON object naming the space
/// ("spekkens4" | "sphere-quadrature" | "rays"), the response (a built-in
/// rule by name, or explicit tables for custom finite models), and the
/// generators (densities with optional D-map values). Exact scalars are
/// written as "n/d" or "a+b*r3" string tokens; complex entries as [re, im].
/// The mesh order is the fallback for sphere spaces that do not pin their
/// own "polar"/"azimuth" keys.
LoadedModel load_model_file(const std::string& path,
                            std::pair<std::size_t, std::size_t> mesh = {64, 128});

/// Ray list file for moment-system commands: {"bloch": [[x, y, z], ...]}
/// with exact rational components summing in squares to 1, or
/// {"rays": [[[re, im], [re, im]], ...]} with exact scalar tokens. Exactly
/// one of the two fields must be present.
struct RayFileContent {
    std::vector<Ray<ExactBackend>> rays;
    std::vector<std::array<Rational, 3>> bloch;
    std::vector<std::string> names;
};

RayFileContent load_ray_file(const std::string& path);

}  // namespace ontocheck

#endif  // ONTOCHECK_MODELFILE_HPP
