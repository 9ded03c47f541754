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

// Acceptance gate: eight independently runnable criteria, one line each:
//
//   criterion N: PASS - <measured numbers> (<elapsed>s)
//
// Each criterion re-derives its expected values instead of trusting the
// library's own summaries, and pins its tolerance in the line it prints.
// Exit code 0 when every selected criterion passes, 1 otherwise. Criterion 3
// holds the quadrature model to 1e-6, which a 64x128 product mesh cannot
// reach near the response boundary; it reports the measured error honestly
// rather than loosening the bound (see README, acceptance matrix).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "ontocheck/lp.hpp"
#include "ontocheck/modelfile.hpp"
#include "ontocheck/models.hpp"
#include "ontocheck/rng.hpp"
#include "ontocheck/theorem.hpp"

using namespace ontocheck;

namespace {

using FB = FloatBackend;
using EB = ExactBackend;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------------------
// 1. The three-ray contradiction, exact values, under one second.
// ---------------------------------------------------------------------------

Outcome criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    const TripleTestResult t = triple_test();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    bool ok = t.pass;
    for (const auto& o : t.pairwise_overlaps) ok = ok && o == rat(1, 4);
    ok = ok && t.joint_p11 == rat(1, 8) && t.joint_p00 == rat(1, 8);
    ok = ok && t.joint_p10 == rat(3, 8) && t.joint_p01 == rat(3, 8);
    ok = ok && t.marginal_sys.num_rows() == 3 && t.marginal_cert_verified;
    ok = ok && t.combined_rhs == rat(-1, 8) && !t.full_outcome.feasible && t.full_outcome.verified;
    ok = ok && secs < 1.0;

    Outcome out;
    out.pass = ok;
    out.detail = "overlaps 1/4, joint table 1/8 and 3/8, combined rhs -1/8, zero tolerance, " +
                 fmt(secs) + "s of 1s budget";
    return out;
}

// ---------------------------------------------------------------------------
// 2. Certificate soundness against the exhaustive oracle.
// ---------------------------------------------------------------------------

Outcome criterion2() {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(20260815);
    std::size_t agreements = 0;
    std::size_t witnesses = 0;
    std::size_t certificates = 0;
    const std::size_t trials = 200;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const std::size_t m = 1 + rng.index(5);
        const std::size_t k = 1 + rng.index(6);
        lp::RationalMatrixSystem sys;
        sys.rows.assign(m, std::vector<Rational>(k));
        sys.rhs.assign(m, Rational(0));
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t c = 0; c < k; ++c) {
                sys.rows[r][c] = rat(static_cast<long>(rng.index(7)) - 3);
            }
            sys.rhs[r] = rat(static_cast<long>(rng.index(7)) - 3);
        }
        const auto res = lp::solve(sys);
        if (res.feasible != lp::brute_force_feasible(sys)) continue;
        if (res.feasible) {
            if (!lp::verify_witness(sys, res.witness)) continue;
            ++witnesses;
        } else {
            if (!lp::verify_certificate(sys, res.certificate)) continue;
            ++certificates;
        }
        ++agreements;
    }

    // The certificates the toolkit itself ships must also re-verify.
    const TripleTestResult t = triple_test();
    const bool shipped = lp::verify_certificate(t.marginal_sys, t.marginal_cert) &&
                         lp::verify_certificate(t.moment.sys, t.full_outcome.certificate);

    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Outcome out;
    out.pass = agreements == trials && shipped && certificates > 0 && witnesses > 0 && secs < 30.0;
    out.detail = std::to_string(agreements) + "/" + std::to_string(trials) +
                 " oracle agreements (" + std::to_string(witnesses) + " witnesses, " +
                 std::to_string(certificates) +
                 " certificates re-verified), shipped certificates " +
                 (shipped ? "verified" : "REJECTED") + ", " + fmt(secs) + "s of 30s budget";
    return out;
}

// ---------------------------------------------------------------------------
// 3. Quadrature-model statistics against the Born values at 1e-6.
// ---------------------------------------------------------------------------

Outcome criterion3() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto model = make_ks_model(64, 128);
    Rng rng(3);
    std::vector<double> gaps;
    gaps.reserve(500);
    for (std::size_t k = 0; k < 500; ++k) {
        const Ray<FB> prep = rng.ray();
        const Ray<FB> test = rng.ray();
        const auto rho = ks_prepare(model, prep);
        const auto p = predict(model, rho, ray_test<FB>("probe", test));
        gaps.push_back(std::abs(p[0] - overlap(prep, test)));
    }
    std::sort(gaps.begin(), gaps.end());
    const double max_gap = gaps.back();
    const double median = gaps[gaps.size() / 2];
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    Outcome out;
    out.pass = max_gap <= 1e-6 && secs < 60.0;
    out.detail = "max |model - Born| = " + fmt(max_gap) + ", median " + fmt(median) +
                 ", over 500 random pairs at 64x128, tolerance 1e-06, " + fmt(secs) +
                 "s of 60s budget";
    return out;
}

// ---------------------------------------------------------------------------
// 4. The constructive non-injectivity witness.
// ---------------------------------------------------------------------------

Outcome criterion4() {
    const auto model = make_ks_model(64, 128);
    const KsWitnessReport w = ks_noninjectivity_witness(model, 100, 1);

    // Independent scan cross-check: the grid search must land on the same
    // collision value.
    const auto scan = dmap_witness_scan<FB>(model, rat(1, 2), 0.1, 1e-12, 0, 1);

    Outcome out;
    out.pass = w.pass && w.tv >= 0.1 && w.dmap_dev <= 1e-12 && w.dmap_vs_half_id <= 1e-12 &&
               w.predict_max_gap <= 1e-6 && w.tests >= 100 && scan.found &&
               scan.dmap_deviation <= 1e-12;
    out.detail = "tv = " + fmt(w.tv) + " (>= 0.1), D-map gap " + fmt(w.dmap_dev) +
                 ", vs I/2 " + fmt(w.dmap_vs_half_id) + " (<= 1e-12), statistics gap " +
                 fmt(w.predict_max_gap) + " (<= 1e-06) over " + std::to_string(w.tests) +
                 " tests; grid scan agrees";
    return out;
}

// ---------------------------------------------------------------------------
// 5. Finite exact model: adequacy exactly zero, repertoire not surjective.
// ---------------------------------------------------------------------------

Outcome criterion5() {
    const SpekkensAudit audit = spekkens_audit();
    std::size_t exact_zero = 0;
    for (const auto& rec : audit.adequacy) {
        if (rec.max_dev == ExactReal(0) && rec.pass) ++exact_zero;
    }
    Outcome out;
    out.pass = audit.adequate && exact_zero == 18 && audit.max_adequacy_dev == 0.0 &&
               !audit.surjective && !audit.surjectivity_note.empty();
    out.detail = std::to_string(exact_zero) +
                 "/18 generator x test records exactly zero error; experiment coverage " +
                 (audit.surjective ? "unexpectedly surjective"
                                   : "not surjective (responds to the 3 Pauli tests only)");
    return out;
}

// ---------------------------------------------------------------------------
// 6. Support identities across random bases and test sets.
// ---------------------------------------------------------------------------

Outcome criterion6() {
    const auto model = make_ks_model(64, 128);
    Rng rng(6);
    double max_dev = 0.0;
    std::size_t residual_exact_zero = 0;
    bool all_pass = true;
    const std::size_t n_bases = 50;
    const std::size_t n_sets = 20;
    for (std::size_t b = 0; b < n_bases; ++b) {
        const Ray<FB> g = rng.ray();
        const auto rho_g = ks_prepare(model, g);
        const auto rho_gperp = ks_prepare(model, perp_ray(g));
        const auto rho_1 = measure_sum(rho_g, rho_gperp);
        std::vector<SupportSet<FB>> sets;
        sets.reserve(n_sets);
        for (std::size_t s = 0; s < n_sets; ++s) {
            sets.push_back(support_set<FB>(model, rng.ray(), 1e-9));
        }
        const auto rep = verify_support_identities(model, g, rho_g, rho_gperp, rho_1, sets, 1e-6);
        all_pass = all_pass && rep.pass;
        max_dev = std::max(max_dev, rep.max_deviation);
        for (const auto& c : rep.checks) {
            if (c.id == "residual-mass" && c.measured == 0.0) ++residual_exact_zero;
        }
    }
    Outcome out;
    out.pass = all_pass && max_dev <= 1e-6 && residual_exact_zero == n_bases;
    out.detail = "50 bases x 20 test sets: max deviation " + fmt(max_dev) +
                 " (<= 1e-06); residual mass exactly 0 in " +
                 std::to_string(residual_exact_zero) + "/50 bases";
    return out;
}

// ---------------------------------------------------------------------------
// 7. Mixture linearity, exact backend, exactly zero.
// ---------------------------------------------------------------------------

Outcome criterion7() {
    // Four-node exact model over e0, e1 and the two probe rays.
    const ExactReal one(Rational(1));
    const ExactReal half(rat(1, 2));
    const ExactReal r3h(Rational(0), rat(1, 2));
    std::vector<Ray<EB>> rays{
        Ray<EB>{{ExactComplex(one), ExactComplex()}},
        Ray<EB>{{ExactComplex(), ExactComplex(one)}},
        Ray<EB>{{ExactComplex(half), ExactComplex(r3h)}},
        Ray<EB>{{ExactComplex(half), ExactComplex(ExactReal() - r3h)}},
    };
    const auto model = psi_ontic_build<EB>(rays, {"e0", "e1", "g2", "g3"});

    std::vector<Experiment<EB>> battery = axis_probe_tests<EB>();
    for (const auto& r : exact_probe_rays()) {
        battery.push_back(ray_test<EB>("probe", r));
    }

    Rng rng(7);
    std::size_t exact_zero = 0;
    const std::size_t trials = 100;
    for (std::size_t k = 0; k < trials; ++k) {
        const Rational s = rat(1 + static_cast<long>(rng.index(15)), 16);
        const auto& a = model.generators[rng.index(4)];
        const auto& b = model.generators[rng.index(4)];
        const auto& x = battery[rng.index(battery.size())];
        const auto rep = dmap_convexity_audit<EB>(model, a, b, ExactReal(s), x, ExactReal(0));
        if (rep.pass && rep.dmap_entry_dev == ExactReal(0) && rep.linearity_dev == ExactReal(0) &&
            rep.born_chain_dev == ExactReal(0)) {
            ++exact_zero;
        }
    }
    Outcome out;
    out.pass = exact_zero == trials;
    out.detail = std::to_string(exact_zero) + "/" + std::to_string(trials) +
                 " random (s, rho_a, rho_b, test) tuples with D-map, linearity, and Born-chain "
                 "deviations all exactly 0";
    return out;
}

// ---------------------------------------------------------------------------
// 8. Pipeline narratives through the installed binary.
// ---------------------------------------------------------------------------

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    RunResult r;
    const std::string cmd = ONTOCHECK_BIN " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    if (p == nullptr) return r;
    char buf[4096];
    while (std::fgets(buf, sizeof buf, p) != nullptr) r.out += buf;
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool has(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

Outcome criterion8() {
    const auto abstract_run = run_cli("pipeline --abstract");
    const bool abstract_ok = abstract_run.code == 0 &&
                             has(abstract_run.out, "moment-feasibility") &&
                             has(abstract_run.out, "break stage: none") &&
                             has(abstract_run.out, "contradiction: p000 + p111 = -1/8 (certified)");

    const auto ontic_run = run_cli("pipeline --model psi-ontic-4");
    const bool ontic_ok = ontic_run.code == 0 &&
                          has(ontic_run.out, "break stage: 2 (injectivity-scan)") &&
                          has(ontic_run.out, "[[0.5, 0], [0, 0.5]]");

    Outcome out;
    out.pass = abstract_ok && ontic_ok;
    out.detail = std::string("abstract run certifies -1/8 at stage 6 [") +
                 (abstract_ok ? "ok" : "FAIL") +
                 "]; psi-ontic-4 stops at the injectivity break printing the shared value I/2 [" +
                 (ontic_ok ? "ok" : "FAIL") + "]";
    return out;
}

using CriterionFn = Outcome (*)();

constexpr CriterionFn kCriteria[] = {criterion1, criterion2, criterion3, criterion4,
                                     criterion5, criterion6, criterion7, criterion8};

}  // namespace

int main(int argc, char** argv) {
    int selected = 0;  // 0 means all
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            selected = std::atoi(argv[i + 1]);
            ++i;
        } else {
            std::fprintf(stderr, "usage: acceptance [--criterion N]\n");
            return 2;
        }
    }
    if (selected < 0 || selected > 8) {
        std::fprintf(stderr, "acceptance: criterion must be 1..8\n");
        return 2;
    }

    bool all_pass = true;
    for (int n = 1; n <= 8; ++n) {
        if (selected != 0 && n != selected) continue;
        const auto t0 = std::chrono::steady_clock::now();
        const Outcome o = kCriteria[n - 1]();
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %d: %s - %s (%.2fs)\n", n, o.pass ? "PASS" : "FAIL",
                    o.detail.c_str(), secs);
        all_pass = all_pass && o.pass;
    }
    return all_pass ? 0 : 1;
}
