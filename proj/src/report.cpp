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

#include "ontocheck/report.hpp"

#include <sstream>

namespace ontocheck::report {

namespace {

/// Left-pads name to a fixed column for the stage table.
std::string pad(const std::string& s, std::size_t width) {
    std::string out = s;
    while (out.size() < width) out.push_back(' ');
    return out;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string rat(const Rational& q) { return rational_to_string(q); }

}  // namespace

std::string num(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string complex_str(const Json& entry) {
    const Json& re = entry[0];
    const Json& im = entry[1];
    const bool im_zero = im.is_string() ? im.get<std::string>() == "0"
                                        : (im.is_number() && im.get<double>() == 0.0);
    if (im_zero) return num(re);
    const std::string ims = num(im);
    if (!ims.empty() && ims[0] == '-') return num(re) + ims + "i";
    return num(re) + "+" + ims + "i";
}

std::string matrix_str(const Json& m) {
    std::string out = "[";
    for (std::size_t r = 0; r < m.size(); ++r) {
        if (r > 0) out += ", ";
        out += "[";
        for (std::size_t c = 0; c < m[r].size(); ++c) {
            if (c > 0) out += ", ";
            out += complex_str(m[r][c]);
        }
        out += "]";
    }
    return out + "]";
}

Json check_json(const IdentityCheck& c) {
    Json j;
    j["id"] = c.id;
    j["detail"] = c.detail;
    j["measured"] = c.measured;
    j["expected"] = c.expected;
    j["deviation"] = c.deviation;
    j["pass"] = c.pass;
    return j;
}

// ---------------------------------------------------------------------------
// Pipeline
// ---------------------------------------------------------------------------

Json pipeline_json(const PipelineReport& rep) {
    Json j;
    j["command"] = "pipeline";
    j["model"] = rep.model_name;
    Json stages = Json::array();
    for (const auto& st : rep.stages) {
        Json s;
        s["index"] = st.index;
        s["name"] = st.name;
        s["verdict"] = st.verdict;
        s["detail"] = st.detail;
        double max_dev = 0.0;
        Json checks = Json::array();
        for (const auto& c : st.checks) {
            if (c.deviation > max_dev) max_dev = c.deviation;
            checks.push_back(check_json(c));
        }
        s["max_deviation"] = max_dev;
        s["checks"] = std::move(checks);
        stages.push_back(std::move(s));
    }
    j["stages"] = std::move(stages);
    j["break_stage"] = rep.break_stage;
    j["contradiction_certified"] = rep.contradiction_certified;
    if (rep.contradiction_certified) j["contradiction"] = rat(rep.contradiction);
    j["ok"] = rep.ok;
    return j;
}

std::string pipeline_text(const Json& j) {
    std::ostringstream out;
    out << "proof pipeline: " << j["model"].get<std::string>() << "\n";
    for (const auto& st : j["stages"]) {
        const std::string verdict = st["verdict"].get<std::string>();
        out << "  stage " << st["index"].get<int>() << "  "
            << pad(st["name"].get<std::string>(), 22) << pad(verdict, 9)
            << st["detail"].get<std::string>() << "\n";
        const auto& checks = st["checks"];
        if (!checks.empty()) {
            out << "           (" << checks.size() << (checks.size() == 1 ? " check" : " checks")
                << ", max deviation " << num(st["max_deviation"]) << ")\n";
        }
        const bool all = st["index"].get<int>() == 6 || verdict == "break" || verdict == "error";
        for (const auto& c : checks) {
            if (!all && c["pass"].get<bool>()) continue;
            out << "           check " << c["id"].get<std::string>() << " ["
                << c["detail"].get<std::string>() << "]: measured " << num(c["measured"])
                << ", expected " << num(c["expected"]) << ", deviation " << num(c["deviation"])
                << (c["pass"].get<bool>() ? " [pass]" : " [FAIL]") << "\n";
        }
    }
    const int bs = j["break_stage"].get<int>();
    if (bs < 0) {
        out << "break stage: none\n";
    } else {
        out << "break stage: " << bs << " ("
            << j["stages"][static_cast<std::size_t>(bs)]["name"].get<std::string>() << ")\n";
    }
    if (j["contradiction_certified"].get<bool>()) {
        out << "contradiction: p000 + p111 = " << num(j["contradiction"]) << " (certified)\n";
    }
    out << "result: " << (j["ok"].get<bool>() ? "ok" : "FAIL") << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Moment systems
// ---------------------------------------------------------------------------

namespace {

Json outcome_json(const MomentSystem& ms, const FeasibilityOutcome& out) {
    Json j;
    j["equations"] = ms.sys.num_rows();
    j["atoms"] = ms.atom_count();
    j["feasible"] = out.feasible;
    if (out.feasible) {
        Json w;
        for (std::size_t a = 0; a < out.atoms.size(); ++a) {
            w[MomentSystem::atom_name(a, ms.n)] = rat(out.atoms[a]);
        }
        j["witness"] = std::move(w);
    } else {
        Json c = Json::array();
        for (const auto& m : out.certificate.mult) c.push_back(rat(m));
        j["certificate"] = std::move(c);
        j["contradiction"] = rat(out.contradiction);
    }
    j["verified"] = out.verified;
    return j;
}

}  // namespace

Json triple_json(const TripleTestResult& t) {
    Json j;
    j["command"] = "triple-test";
    j["rays"] = Json::array();
    for (std::size_t i = 0; i < t.ray_desc.size(); ++i) {
        Json r;
        r["name"] = t.moment.ray_names[i];
        r["ray"] = t.ray_desc[i];
        j["rays"].push_back(std::move(r));
    }
    Json ov = Json::array();
    const std::pair<std::size_t, std::size_t> pairs[] = {{0, 1}, {0, 2}, {1, 2}};
    for (std::size_t k = 0; k < 3; ++k) {
        Json e;
        e["pair"] = "(" + t.moment.ray_names[pairs[k].first] + ", " +
                    t.moment.ray_names[pairs[k].second] + ")";
        e["value"] = rat(t.pairwise_overlaps[k]);
        ov.push_back(std::move(e));
    }
    j["pairwise_overlaps"] = std::move(ov);
    j["joint_table"] = Json{{"p11", rat(t.joint_p11)},
                            {"p10", rat(t.joint_p10)},
                            {"p01", rat(t.joint_p01)},
                            {"p00", rat(t.joint_p00)}};
    j["marginal_equations"] = t.marginal_names;
    Json mult = Json::array();
    for (const auto& m : t.marginal_cert.mult) mult.push_back(rat(m));
    j["multipliers"] = std::move(mult);
    std::string row;
    for (std::size_t k = 0; k < t.combined_atoms.size(); ++k) {
        if (k > 0) row += " + ";
        row += MomentSystem::atom_name(t.combined_atoms[k], t.moment.n);
    }
    j["combined_row"] = row;
    j["combined_rhs"] = rat(t.combined_rhs);
    j["decision"] = t.full_outcome.feasible ? "FEASIBLE" : "INFEASIBLE";
    j["marginal_certificate_verified"] = t.marginal_cert_verified;
    j["full_system"] = outcome_json(t.moment, t.full_outcome);
    j["pass"] = t.pass;
    return j;
}

std::string triple_text(const Json& j) {
    std::ostringstream out;
    out << "three-ray moment feasibility\n";
    out << "rays:\n";
    for (const auto& r : j["rays"]) {
        out << "  " << r["name"].get<std::string>() << " = " << r["ray"].get<std::string>() << "\n";
    }
    out << "pairwise overlaps:\n";
    for (const auto& e : j["pairwise_overlaps"]) {
        out << "  " << e["pair"].get<std::string>() << ": " << num(e["value"]) << "\n";
    }
    const auto& tb = j["joint_table"];
    out << "joint indicator table per pair:\n";
    out << "  P(1,1) = " << num(tb["p11"]) << "  P(1,0) = " << num(tb["p10"])
        << "  P(0,1) = " << num(tb["p01"]) << "  P(0,0) = " << num(tb["p00"]) << "\n";
    out << "marginal equations:\n";
    for (const auto& e : j["marginal_equations"]) out << "  " << e.get<std::string>() << "\n";
    out << "multipliers (";
    const auto& mult = j["multipliers"];
    for (std::size_t k = 0; k < mult.size(); ++k) {
        if (k > 0) out << ", ";
        out << num(mult[k]);
    }
    out << ") combine them into:\n";
    out << "  " << j["combined_row"].get<std::string>() << " = " << num(j["combined_rhs"]) << " : "
        << j["decision"].get<std::string>() << "\n";
    out << "marginal certificate verified: "
        << yesno(j["marginal_certificate_verified"].get<bool>()) << "\n";
    const auto& fs = j["full_system"];
    out << "full moment system (" << fs["equations"].get<std::size_t>() << " equations, "
        << fs["atoms"].get<std::size_t>() << " atoms): "
        << (fs["feasible"].get<bool>() ? "feasible" : "infeasible") << ", "
        << (fs["feasible"].get<bool>() ? "witness" : "certificate")
        << (fs["verified"].get<bool>() ? " verified" : " NOT verified") << "\n";
    out << "result: " << (j["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

Json moment_json(const MomentSystem& ms, const FeasibilityOutcome& out,
                 std::optional<bool> oracle_agrees) {
    Json j;
    j["command"] = "triple-test";
    j["ray_names"] = ms.ray_names;
    Json ov = Json::array();
    for (std::size_t i = 0; i < ms.n; ++i) {
        for (std::size_t k = i + 1; k < ms.n; ++k) {
            Json e;
            e["pair"] = "(" + ms.ray_names[i] + ", " + ms.ray_names[k] + ")";
            e["value"] = rat(ms.overlaps[i][k]);
            ov.push_back(std::move(e));
        }
    }
    j["pairwise_overlaps"] = std::move(ov);
    Json eqs = Json::array();
    for (std::size_t r = 0; r < ms.sys.num_rows(); ++r) {
        Json e;
        e["name"] = ms.row_names[r];
        e["rhs"] = rat(ms.sys.rhs[r]);
        eqs.push_back(std::move(e));
    }
    j["equations"] = std::move(eqs);
    j["decision"] = out.feasible ? "FEASIBLE" : "INFEASIBLE";
    j["outcome"] = outcome_json(ms, out);
    if (oracle_agrees.has_value()) {
        j["oracle"] = Json{{"ran", true}, {"agrees", *oracle_agrees}};
    }
    bool pass = out.verified;
    if (oracle_agrees.has_value()) pass = pass && *oracle_agrees;
    j["pass"] = pass;
    return j;
}

std::string moment_text(const Json& j) {
    std::ostringstream out;
    out << "moment feasibility over " << j["ray_names"].size() << " rays\n";
    out << "pairwise overlaps:\n";
    for (const auto& e : j["pairwise_overlaps"]) {
        out << "  " << e["pair"].get<std::string>() << ": " << num(e["value"]) << "\n";
    }
    out << "equations:\n";
    for (const auto& e : j["equations"]) {
        out << "  " << e["name"].get<std::string>() << " = " << num(e["rhs"]) << "\n";
    }
    const auto& oc = j["outcome"];
    out << "decision: " << j["decision"].get<std::string>() << "\n";
    if (oc["feasible"].get<bool>()) {
        out << "witness distribution:\n";
        for (const auto& [k, v] : oc["witness"].items()) {
            out << "  " << k << " = " << num(v) << "\n";
        }
    } else {
        out << "certificate multipliers: (";
        const auto& c = oc["certificate"];
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k > 0) out << ", ";
            out << num(c[k]);
        }
        out << ")\n";
        out << "combined rhs: " << num(oc["contradiction"]) << "\n";
    }
    out << (oc["feasible"].get<bool>() ? "witness" : "certificate")
        << " verified: " << yesno(oc["verified"].get<bool>()) << "\n";
    if (j.contains("oracle")) {
        out << "exhaustive oracle cross-check: "
            << (j["oracle"]["agrees"].get<bool>() ? "agrees" : "DISAGREES") << "\n";
    }
    out << "result: " << (j["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Adequacy
// ---------------------------------------------------------------------------

std::string adequacy_text(const Json& j) {
    std::ostringstream out;
    out << "adequacy: model " << j["model"].get<std::string>() << "\n";
    for (const auto& r : j["records"]) {
        out << "  " << r["preparation"].get<std::string>() << " / "
            << r["experiment"].get<std::string>() << ": max deviation "
            << num(r["max_deviation"]) << (r["pass"].get<bool>() ? " [pass]" : " [FAIL]") << "\n";
    }
    if (j.contains("skipped") && !j["skipped"].empty()) {
        out << "skipped (unsupported by the model's experiment repertoire):\n";
        for (const auto& s : j["skipped"]) out << "  " << s.get<std::string>() << "\n";
    }
    out << "records: " << j["records"].size() << ", max deviation " << num(j["max_deviation"])
        << ", tolerance " << num(j["tol"]) << "\n";
    out << "result: " << (j["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// D-map collision witness
// ---------------------------------------------------------------------------

std::string witness_text(const Json& j) {
    std::ostringstream out;
    out << "D-map collision scan: model " << j["model"].get<std::string>() << ", "
        << num(j["candidates"]) << " candidate measures\n";
    if (!j["found"].get<bool>()) {
        out << "no witness found (tv threshold " << num(j["tv_threshold"]) << ")\n";
        out << "result: none found\n";
        return out.str();
    }
    out << "witness found:\n";
    out << "  a = " << j["a"].get<std::string>() << "\n";
    out << "  b = " << j["b"].get<std::string>() << "\n";
    out << "  total variation: " << num(j["total_variation"]) << "\n";
    out << "  D-map entrywise deviation: " << num(j["dmap_deviation"]) << "\n";
    out << "  shared D-map value: " << matrix_str(j["dmap"]) << "\n";
    out << "  max statistics gap over " << num(j["tests"])
        << " tests: " << num(j["max_predict_gap"]) << "\n";
    out << "result: PASS\n";
    return out.str();
}

}  // namespace ontocheck::report
