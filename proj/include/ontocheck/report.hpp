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

#ifndef ONTOCHECK_REPORT_HPP
#define ONTOCHECK_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "ontocheck/theorem.hpp"

namespace ontocheck::report {

/// All reports are built as one JSON document first; the text renderers pull
/// every number back out of that document, so the two output formats carry
/// identical digits by construction.
using Json = nlohmann::ordered_json;

/// Serialized form of a JSON value (shortest round-trip for numbers).
std::string num(const Json& v);

/// Complex entry [re, im] as "re", "re+im i", or "re-|im| i".
std::string complex_str(const Json& entry);

/// Matrix (array of rows of complex entries) on one line.
std::string matrix_str(const Json& m);

Json check_json(const IdentityCheck& c);

/// Matrix -> JSON rows; float entries as numbers, exact entries as tokens.
template <class B>
Json mat_json(const Mat<B>& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.dim; ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.dim; ++c) {
            const auto& z = m.at(r, c);
            if constexpr (B::is_exact) {
                row.push_back(Json::array({B::re(z).str(), B::im(z).str()}));
            } else {
                row.push_back(Json::array({B::re(z), B::im(z)}));
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Pipeline
// ---------------------------------------------------------------------------

Json pipeline_json(const PipelineReport& rep);
std::string pipeline_text(const Json& j);

// ---------------------------------------------------------------------------
// Moment systems
// ---------------------------------------------------------------------------

/// The canonical three-ray run.
Json triple_json(const TripleTestResult& t);
std::string triple_text(const Json& j);

/// A user-supplied or alternative ray set; oracle_agrees is present when the
/// exhaustive cross-check ran.
Json moment_json(const MomentSystem& ms, const FeasibilityOutcome& out,
                 std::optional<bool> oracle_agrees);
std::string moment_text(const Json& j);

// ---------------------------------------------------------------------------
// Adequacy
// ---------------------------------------------------------------------------

template <class B>
Json adequacy_record_json(const std::string& preparation, const AdequacyReport<B>& rep) {
    Json j;
    j["preparation"] = preparation;
    j["experiment"] = rep.experiment;
    Json outs = Json::array();
    for (std::size_t o = 0; o < rep.labels.size(); ++o) {
        Json e;
        e["label"] = rep.labels[o];
        e["measured"] = B::to_double(rep.probs[o].first);
        e["expected"] = B::to_double(rep.probs[o].second);
        e["deviation"] = B::to_double(B::abs(rep.probs[o].first - rep.probs[o].second));
        outs.push_back(std::move(e));
    }
    j["outcomes"] = std::move(outs);
    j["max_deviation"] = B::to_double(rep.max_dev);
    j["pass"] = rep.pass;
    return j;
}

std::string adequacy_text(const Json& j);

// ---------------------------------------------------------------------------
// D-map collision witness
// ---------------------------------------------------------------------------

template <class B>
Json witness_json(const DmapWitness<B>& w) {
    Json j;
    j["candidates"] = w.candidates;
    j["found"] = w.found;
    if (w.found) {
        j["a"] = w.a;
        j["b"] = w.b;
        j["total_variation"] = w.tv;
        j["dmap_deviation"] = w.dmap_deviation;
        j["dmap"] = mat_json<B>(w.dmap);
        j["tests"] = w.tests;
        j["max_predict_gap"] = w.predict_gap;
    }
    return j;
}

std::string witness_text(const Json& j);

}  // namespace ontocheck::report

#endif  // ONTOCHECK_REPORT_HPP
