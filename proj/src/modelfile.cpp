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

#include "ontocheck/modelfile.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ontocheck {

namespace {

using Json = nlohmann::json;

/// 1-based (line, column) of a byte offset, for parse diagnostics.
std::pair<std::size_t, std::size_t> line_of_offset(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

[[noreturn]] void fail(const std::string& path, const std::string& ctx, const std::string& what) {
    throw ModelFileError(path + ": " + ctx + ": " + what);
}

Json parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ModelFileError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        const auto [line, col] = line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0);
        // e.what() leads with a bracketed tag and its own position; keep only
        // the human-readable tail after "column N: ".
        std::string what = e.what();
        if (const auto cpos = what.find("column "); cpos != std::string::npos) {
            if (const auto tail = what.find(": ", cpos); tail != std::string::npos) {
                what = what.substr(tail + 2);
            }
        }
        throw ModelFileError(path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                             what);
    }
}

const Json& need(const Json& j, const char* key, const std::string& path, const std::string& ctx) {
    if (!j.is_object() || !j.contains(key)) fail(path, ctx, std::string("missing key '") + key + "'");
    return j.at(key);
}

std::string need_string(const Json& j, const char* key, const std::string& path,
                        const std::string& ctx) {
    const Json& v = need(j, key, path, ctx);
    if (!v.is_string()) fail(path, ctx, std::string("'") + key + "' must be a string");
    return v.get<std::string>();
}

// ---------------------------------------------------------------------------
// Scalar extraction. Exact scalars are "n/d" or "a+b*r3" string tokens (plus
// bare integers); the exact backend refuses floating-point literals, the
// float backend accepts both forms.
// ---------------------------------------------------------------------------

ExactReal exact_token(const Json& v, const std::string& path, const std::string& ctx) {
    if (v.is_number_integer()) return ExactReal(Rational(v.get<long>()));
    if (v.is_string()) {
        try {
            return exact_real_from_string(v.get<std::string>());
        } catch (const std::invalid_argument& e) {
            fail(path, ctx, e.what());
        }
    }
    if (v.is_number_float()) {
        fail(path, ctx, "floating-point literal in an exact scalar; write \"n/d\" or \"a+b*r3\"");
    }
    fail(path, ctx, "expected an exact scalar token");
}

Rational rational_token(const Json& v, const std::string& path, const std::string& ctx) {
    const ExactReal r = exact_token(v, path, ctx);
    if (!r.is_rational()) fail(path, ctx, "expected a rational token, got a sqrt(3) component");
    return r.a;
}

template <class B>
typename B::Real real_from_json(const Json& v, const std::string& path, const std::string& ctx) {
    if constexpr (B::is_exact) {
        return exact_token(v, path, ctx);
    } else {
        if (v.is_number()) return v.get<double>();
        return exact_token(v, path, ctx).to_double();
    }
}

template <class B>
typename B::Complex complex_from_json(const Json& v, const std::string& path,
                                      const std::string& ctx) {
    if (v.is_array()) {
        if (v.size() != 2) fail(path, ctx, "complex entry must be [re, im]");
        return B::make_complex(real_from_json<B>(v[0], path, ctx + "[0]"),
                               real_from_json<B>(v[1], path, ctx + "[1]"));
    }
    return B::make_complex(real_from_json<B>(v, path, ctx), typename B::Real(0));
}

template <class B>
Mat<B> mat_from_json(const Json& v, const std::string& path, const std::string& ctx) {
    if (!v.is_array() || v.empty()) fail(path, ctx, "matrix must be a nonempty array of rows");
    const std::size_t d = v.size();
    Mat<B> m(d);
    for (std::size_t r = 0; r < d; ++r) {
        if (!v[r].is_array() || v[r].size() != d) {
            fail(path, ctx, "matrix row " + std::to_string(r) + " must have " + std::to_string(d) +
                                " entries");
        }
        for (std::size_t c = 0; c < d; ++c) {
            m.at(r, c) = complex_from_json<B>(
                v[r][c], path, ctx + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
        }
    }
    return m;
}

template <class B>
Ray<B> ray_from_json(const Json& v, const std::string& path, const std::string& ctx) {
    if (!v.is_array() || v.size() < 2) fail(path, ctx, "ray must be an array of >= 2 amplitudes");
    Ray<B> g;
    for (std::size_t i = 0; i < v.size(); ++i) {
        g.v.push_back(complex_from_json<B>(v[i], path, ctx + "[" + std::to_string(i) + "]"));
    }
    const ValidityReport vr = validate_ray(g);
    if (!vr.ok) fail(path, ctx, vr.message);
    return g;
}

// ---------------------------------------------------------------------------
// Custom model assembly
// ---------------------------------------------------------------------------

template <class B>
std::shared_ptr<TableResponse<B>> tables_from_json(const Json& v, std::size_t n_nodes,
                                                   const std::string& path) {
    if (!v.is_array() || v.empty()) {
        fail(path, "response.tables", "must be a nonempty array of table entries");
    }
    std::vector<typename TableResponse<B>::Entry> entries;
    for (std::size_t t = 0; t < v.size(); ++t) {
        const std::string ctx = "response.tables[" + std::to_string(t) + "]";
        const Json& e = v[t];
        const std::string name = need_string(e, "name", path, ctx);
        const Json& labels = need(e, "labels", path, ctx);
        const Json& effects = need(e, "effects", path, ctx);
        const Json& rows = need(e, "rows", path, ctx);
        if (!labels.is_array() || !effects.is_array() || labels.size() != effects.size() ||
            labels.empty()) {
            fail(path, ctx, "'labels' and 'effects' must be arrays of equal nonzero length");
        }
        Povm<B> povm;
        for (std::size_t o = 0; o < labels.size(); ++o) {
            if (!labels[o].is_number()) fail(path, ctx, "labels must be numbers");
            povm.labels.push_back(labels[o].get<double>());
            povm.effects.push_back(Effect<B>{
                mat_from_json<B>(effects[o], path, ctx + ".effects[" + std::to_string(o) + "]")});
        }
        Experiment<B> x;
        try {
            x = make_experiment<B>(name, std::move(povm));
        } catch (const std::invalid_argument& err) {
            fail(path, ctx, err.what());
        }
        if (!rows.is_array() || rows.size() != labels.size()) {
            fail(path, ctx, "'rows' must hold one row per outcome label");
        }
        std::vector<std::vector<typename B::Real>> table(rows.size());
        for (std::size_t o = 0; o < rows.size(); ++o) {
            const Json& row = rows[o];
            if (!row.is_array() || row.size() != n_nodes) {
                fail(path, ctx, "row " + std::to_string(o) + " must have one entry per node (" +
                                    std::to_string(n_nodes) + ")");
            }
            for (std::size_t i = 0; i < n_nodes; ++i) {
                table[o].push_back(real_from_json<B>(
                    row[i], path, ctx + ".rows[" + std::to_string(o) + "][" + std::to_string(i) + "]"));
            }
        }
        entries.push_back({std::move(x), std::move(table)});
    }
    return std::make_shared<TableResponse<B>>(std::move(entries));
}

template <class B>
std::vector<EpistemicMeasure<B>> generators_from_json(const Json& v, const SpacePtr<B>& space,
                                                      const std::string& path) {
    if (!v.is_array() || v.empty()) {
        fail(path, "generators", "must be a nonempty array of generator objects");
    }
    std::vector<EpistemicMeasure<B>> out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        const std::string ctx = "generators[" + std::to_string(k) + "]";
        const Json& g = v[k];
        const std::string name = need_string(g, "name", path, ctx);
        const Json& dens = need(g, "density", path, ctx);
        if (!dens.is_array() || dens.size() != space->size()) {
            fail(path, ctx, "'density' must have one entry per node (" +
                                std::to_string(space->size()) + ")");
        }
        std::vector<typename B::Real> density;
        for (std::size_t i = 0; i < dens.size(); ++i) {
            density.push_back(
                real_from_json<B>(dens[i], path, ctx + ".density[" + std::to_string(i) + "]"));
        }
        std::optional<DensityMatrix<B>> quantum;
        if (g.contains("dmap")) {
            Mat<B> m = mat_from_json<B>(g.at("dmap"), path, ctx + ".dmap");
            const ValidityReport vr = validate_density<B>(m);
            if (!vr.ok) fail(path, ctx + ".dmap", vr.message);
            quantum = DensityMatrix<B>{std::move(m)};
        }
        try {
            out.push_back(make_measure<B>(space, std::move(density), std::move(quantum), name));
        } catch (const std::exception& err) {
            fail(path, ctx, err.what());
        }
    }
    return out;
}

/// Rays-space model: nodes named by the ray list. The response is "born" or
/// explicit tables; generators default to the node point masses.
template <class B>
OntologicalModel<B> build_rays_model(const Json& j, const std::string& path) {
    const Json& sp = j.at("space");
    const Json& rays_j = need(sp, "rays", path, "space");
    if (!rays_j.is_array() || rays_j.empty()) fail(path, "space.rays", "must be a nonempty array");
    std::vector<Ray<B>> rays;
    for (std::size_t i = 0; i < rays_j.size(); ++i) {
        rays.push_back(ray_from_json<B>(rays_j[i], path, "space.rays[" + std::to_string(i) + "]"));
    }
    std::vector<std::string> names;
    if (sp.contains("names")) {
        const Json& nm = sp.at("names");
        if (!nm.is_array() || nm.size() != rays.size()) {
            fail(path, "space.names", "must list one name per ray");
        }
        for (const auto& n : nm) names.push_back(n.get<std::string>());
    }
    OntologicalModel<B> model = psi_ontic_build<B>(rays, names);

    const Json& resp = need(j, "response", path, "model");
    if (resp.is_string()) {
        if (resp.get<std::string>() != "born") {
            fail(path, "response", "rays space supports the built-in rule \"born\"");
        }
    } else if (resp.is_object() && resp.contains("tables")) {
        model.response = tables_from_json<B>(resp.at("tables"), model.space->size(), path);
        model.prepare_ray = nullptr;  // the born inverse no longer applies
    } else {
        fail(path, "response", "expected \"born\" or an object with 'tables'");
    }
    if (j.contains("generators")) {
        model.generators = generators_from_json<B>(j.at("generators"), model.space, path);
    }
    return model;
}

OntologicalModel<ExactBackend> build_spekkens4_model(const Json& j, const std::string& path) {
    OntologicalModel<ExactBackend> model = make_spekkens_model();
    const Json& resp = need(j, "response", path, "model");
    if (resp.is_string()) {
        if (resp.get<std::string>() != "spekkens") {
            fail(path, "response", "spekkens4 space supports the built-in rule \"spekkens\"");
        }
    } else if (resp.is_object() && resp.contains("tables")) {
        model.response =
            tables_from_json<ExactBackend>(resp.at("tables"), model.space->size(), path);
    } else {
        fail(path, "response", "expected \"spekkens\" or an object with 'tables'");
    }
    if (j.contains("generators")) {
        model.generators =
            generators_from_json<ExactBackend>(j.at("generators"), model.space, path);
    }
    return model;
}

OntologicalModel<FloatBackend> build_sphere_model(const Json& j, const std::string& path,
                                                  std::pair<std::size_t, std::size_t> mesh) {
    const Json& sp = j.at("space");
    std::size_t n_polar = mesh.first;
    std::size_t n_azimuth = mesh.second;
    if (sp.contains("polar")) n_polar = sp.at("polar").get<std::size_t>();
    if (sp.contains("azimuth")) n_azimuth = sp.at("azimuth").get<std::size_t>();
    OntologicalModel<FloatBackend> model = make_ks_model(n_polar, n_azimuth);

    const Json& resp = need(j, "response", path, "model");
    if (!resp.is_string() || resp.get<std::string>() != "half-sphere") {
        fail(path, "response",
             "sphere-quadrature space supports the built-in rule \"half-sphere\"");
    }
    if (j.contains("generators")) {
        const Json& gens = j.at("generators");
        if (!gens.is_array() || gens.empty()) {
            fail(path, "generators", "must be a nonempty array of {name, axis} objects");
        }
        std::vector<EpistemicMeasure<FloatBackend>> out;
        for (std::size_t k = 0; k < gens.size(); ++k) {
            const std::string ctx = "generators[" + std::to_string(k) + "]";
            const std::string name = need_string(gens[k], "name", path, ctx);
            const Json& ax = need(gens[k], "axis", path, ctx);
            if (!ax.is_array() || ax.size() != 3) fail(path, ctx, "'axis' must be [x, y, z]");
            Bloch<FloatBackend> b;
            b.x = real_from_json<FloatBackend>(ax[0], path, ctx + ".axis[0]");
            b.y = real_from_json<FloatBackend>(ax[1], path, ctx + ".axis[1]");
            b.z = real_from_json<FloatBackend>(ax[2], path, ctx + ".axis[2]");
            const double n2 = b.x * b.x + b.y * b.y + b.z * b.z;
            if (std::abs(n2 - 1.0) > 1e-9) fail(path, ctx, "'axis' must be a unit vector");
            out.push_back(ks_prepare(model, bloch_to_ray(b), name));
        }
        model.generators = std::move(out);
    }
    return model;
}

}  // namespace

// ---------------------------------------------------------------------------
// TableResponse
// ---------------------------------------------------------------------------

template <class B>
const typename TableResponse<B>::Entry* TableResponse<B>::find(const Experiment<B>& x) const {
    for (const auto& e : entries_) {
        if (e.x.povm.labels != x.povm.labels) continue;
        bool same = true;
        for (std::size_t o = 0; same && o < x.povm.size(); ++o) {
            const Mat<B>& a = e.x.povm.effects[o].op;
            const Mat<B>& b = x.povm.effects[o].op;
            if (a.dim != b.dim || max_entry_dev<B>(a, b) > B::eps()) same = false;
        }
        if (same) return &e;
    }
    return nullptr;
}

template <class B>
std::vector<typename B::Real> TableResponse<B>::respond(std::size_t node, const Experiment<B>& x,
                                                        const OnticSpace<B>& /*space*/) const {
    const Entry* e = find(x);
    if (e == nullptr) {
        throw UnsupportedExperiment("no response table for experiment '" + x.name + "'");
    }
    std::vector<typename B::Real> out;
    for (const auto& row : e->rows) out.push_back(row[node]);
    return out;
}

template <class B>
bool TableResponse<B>::supports(const Experiment<B>& x) const {
    return find(x) != nullptr;
}

template <class B>
std::vector<std::vector<typename B::Real>> TableResponse<B>::response_table(
    const Experiment<B>& x, const OnticSpace<B>& /*space*/) const {
    const Entry* e = find(x);
    if (e == nullptr) {
        throw UnsupportedExperiment("no response table for experiment '" + x.name + "'");
    }
    return e->rows;
}

template class TableResponse<FloatBackend>;
template class TableResponse<ExactBackend>;

// ---------------------------------------------------------------------------
// Entry points
// ---------------------------------------------------------------------------

LoadedModel load_model_file(const std::string& path, std::pair<std::size_t, std::size_t> mesh) {
    const Json j = parse_file(path);
    if (!j.is_object()) throw ModelFileError(path + ": top level must be an object");
    const Json& sp = need(j, "space", path, "model");
    const std::string kind = need_string(sp, "kind", path, "space");
    std::string backend = j.value("backend", "");

    if (kind == "spekkens4") {
        if (backend.empty()) backend = "exact";
        if (backend != "exact") fail(path, "backend", "spekkens4 space requires \"exact\"");
        LoadedModel lm{build_spekkens4_model(j, path), true};
        if (j.contains("name")) std::get<1>(lm.model).name = j.at("name").get<std::string>();
        return lm;
    }
    if (kind == "sphere-quadrature") {
        if (backend.empty()) backend = "float";
        if (backend != "float") fail(path, "backend", "sphere-quadrature space requires \"float\"");
        LoadedModel lm{build_sphere_model(j, path, mesh), false};
        if (j.contains("name")) std::get<0>(lm.model).name = j.at("name").get<std::string>();
        return lm;
    }
    if (kind == "rays") {
        if (backend.empty()) backend = "float";
        if (backend == "exact") {
            LoadedModel lm{build_rays_model<ExactBackend>(j, path), true};
            if (j.contains("name")) std::get<1>(lm.model).name = j.at("name").get<std::string>();
            return lm;
        }
        if (backend != "float") fail(path, "backend", "expected \"float\" or \"exact\"");
        LoadedModel lm{build_rays_model<FloatBackend>(j, path), false};
        if (j.contains("name")) std::get<0>(lm.model).name = j.at("name").get<std::string>();
        return lm;
    }
    fail(path, "space.kind",
         "unknown kind '" + kind + "' (expected spekkens4 | sphere-quadrature | rays)");
}

LoadedModel resolve_model(const std::string& name_or_path,
                          std::pair<std::size_t, std::size_t> mesh) {
    if (name_or_path == "ks") {
        return LoadedModel{make_ks_model(mesh.first, mesh.second), false};
    }
    if (name_or_path == "spekkens") {
        return LoadedModel{make_spekkens_model(), true};
    }
    if (name_or_path == "psi-ontic-4") {
        return LoadedModel{make_psi_ontic4(), false};
    }
    std::ifstream probe(name_or_path);
    if (!probe) {
        throw ModelFileError("unknown model '" + name_or_path +
                             "': not a built-in (ks | spekkens | psi-ontic-4) and not a readable "
                             "definition file");
    }
    probe.close();
    return load_model_file(name_or_path, mesh);
}

RayFileContent load_ray_file(const std::string& path) {
    const Json j = parse_file(path);
    if (!j.is_object()) throw ModelFileError(path + ": top level must be an object");
    const bool has_rays = j.contains("rays");
    const bool has_bloch = j.contains("bloch");
    if (has_rays == has_bloch) {
        fail(path, "rays", "exactly one of 'rays' or 'bloch' must be present");
    }
    RayFileContent out;
    if (j.contains("names")) {
        for (const auto& n : j.at("names")) out.names.push_back(n.get<std::string>());
    }
    if (has_rays) {
        const Json& v = j.at("rays");
        if (!v.is_array() || v.empty()) fail(path, "rays", "must be a nonempty array");
        for (std::size_t i = 0; i < v.size(); ++i) {
            out.rays.push_back(
                ray_from_json<ExactBackend>(v[i], path, "rays[" + std::to_string(i) + "]"));
        }
        return out;
    }
    const Json& v = j.at("bloch");
    if (!v.is_array() || v.empty()) fail(path, "bloch", "must be a nonempty array");
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string ctx = "bloch[" + std::to_string(i) + "]";
        const Json& b = v[i];
        if (!b.is_array() || b.size() != 3) fail(path, ctx, "must be [x, y, z]");
        std::array<Rational, 3> r;
        for (std::size_t c = 0; c < 3; ++c) {
            r[c] = rational_token(b[c], path, ctx + "[" + std::to_string(c) + "]");
        }
        out.bloch.push_back(std::move(r));
    }
    return out;
}

}  // namespace ontocheck
