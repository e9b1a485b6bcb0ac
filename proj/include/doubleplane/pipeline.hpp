/*
   Copyright 2026 The doubleplane authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <chrono>
#include <optional>

#include "doubleplane/construct.hpp"
#include "doubleplane/rao.hpp"
#include "doubleplane/report.hpp"
#include "doubleplane/resolution.hpp"

namespace doubleplane {

struct PipelineOptions {
    bool with_oracle = false;    // cross-check Hilbert functions by brute force
    bool skip_resolution = false;
    bool skip_rao = false;
};

// Runs build -> residual -> triple -> curve -> resolution -> Rao module and
// assembles the report. Builder errors (invalid instances) propagate as
// exceptions; verification failures become fail verdicts.
inline Report run_pipeline(const BMatrix& b, std::optional<std::uint64_t> seed = {},
                           const PipelineOptions& opt = {}) {
    const auto start = std::chrono::steady_clock::now();
    Report r;
    r.instance = instance_from_bmatrix(b, seed);

    CurveIdeal c = build_curve_ideal(b);
    const bool residual_ok = verify_expected_residual(c);
    r.residual = residual_ok ? Verdict::pass() : Verdict::fail();
    r.equivalences = check_good_residual_equivalences(c).all_agree ? "agree" : "disagree";
    r.hp2 = residual_ok ? (check_hp2(c) ? Verdict::pass() : Verdict::fail())
                        : Verdict::skipped("no expected residual sequence");

    Triple t = extract_triple(c);
    r.d = t.d;
    r.delta = t.delta;
    r.deg_h = t.deg_h;
    r.deg_z = t.deg_z;
    r.genus = t.genus;

    bool curve_ok = false;
    if (b.s() == 0) {
        r.curve = Verdict::skipped("s = 0: no residual points, criterion not applicable");
    } else {
        curve_ok = is_curve(c);
        r.curve = curve_ok ? Verdict::pass() : Verdict::fail();
    }

    std::optional<ResolutionData> resolution;
    if (opt.skip_resolution) {
        r.exactness = Verdict::skipped("not requested");
        r.minimality = Verdict::skipped("not requested");
        r.hilbert_match = Verdict::skipped("not requested");
    } else if (b.s() < 1) {
        r.exactness = Verdict::skipped("s = 0");
        r.minimality = Verdict::skipped("s = 0");
        r.hilbert_match = Verdict::skipped("s = 0");
    } else if (!residual_ok) {
        r.exactness = Verdict::skipped("no expected residual sequence");
        r.minimality = Verdict::skipped("no expected residual sequence");
        r.hilbert_match = Verdict::skipped("no expected residual sequence");
    } else {
        resolution = build_resolution(c);
        ExactnessCertificate cert = buchsbaum_eisenbud_certify(*resolution);
        r.exactness = cert.pass ? Verdict::pass() : Verdict::fail();
        r.ranks.assign(cert.ranks.begin(), cert.ranks.end());
        r.codim_bounds.assign(cert.codim_bounds.begin(), cert.codim_bounds.end());
        bool minimal = is_minimal(resolution->complex);
        r.minimality = minimal ? Verdict::pass() : Verdict::fail();
        if (minimal)
            r.betti = betti_table(*resolution).degrees;
        r.alpha2_signs = resolution->alpha2_sign_pattern;
        try {
            auto hp = hilbert_polynomial(resolution->complex);
            r.hilbert_match = (hp.first == t.d && hp.second == t.genus)
                                  ? Verdict::pass()
                                  : Verdict::fail();
        } catch (const Error&) {
            r.hilbert_match = Verdict::fail();
        }
    }

    if (opt.skip_rao) {
        r.duality = Verdict::skipped("not requested");
        r.annihilator = Verdict::skipped("not requested");
    } else if (b.s() < 1) {
        r.duality = Verdict::skipped("s = 0");
        r.annihilator = Verdict::skipped("s = 0");
    } else {
        RaoPresentation rp = curve_ok ? RaoPresentation::from_curve(c)
                                      : RaoPresentation::from_curve_unchecked(c);
        RaoFunction rho = rao_function(rp);
        r.rao = rho.rho;
        r.rao_status = rho.finite ? "finite" : "infinite";
        if (curve_ok && rho.finite) {
            r.duality = check_self_duality(rho, t.d) ? Verdict::pass() : Verdict::fail();
            r.annihilator = annihilator_check(rp).pass ? Verdict::pass() : Verdict::fail();
            r.mingen = minimal_generator_count(rp);
            r.relation_count = minimal_relation_count(rp);
        } else {
            r.duality = Verdict::skipped("Rao module has infinite length");
            r.annihilator = Verdict::skipped("Rao module has infinite length");
        }
    }

    if (!opt.with_oracle) {
        r.oracle = Verdict::skipped("not requested");
    } else if (!resolution) {
        r.oracle = Verdict::skipped("no resolution to cross-check");
    } else {
        bool ok = true;
        int top = 0;
        for (const auto& term : resolution->complex.terms())
            for (int a : term.twists) top = std::max(top, a);
        for (int n = top; n <= top + 3 && ok; ++n) {
            int direct = hilbert_function(c.ideal(), n);
            int brute = hilbert_function_bruteforce(c.ideal(), n);
            long long from_twists = hilbert_series_at(resolution->complex, n);
            ok = (direct == brute) && (from_twists == direct);
        }
        // the residual points, against the stabilization window
        std::vector<Polynomial> zgens;
        for (int i = 0; i <= c.s(); ++i) zgens.push_back(c.source().a_minor(i));
        Ideal iz(Ring::S, c.prime(), std::move(zgens));
        int start_n = 0;
        for (int j = 0; j <= c.s(); ++j)
            start_n = std::max(start_n, c.source().forced_a_minor_degree(j));
        for (int n = start_n; n <= start_n + 3 && ok; ++n)
            ok = hilbert_function(iz, n) == hilbert_function_bruteforce(iz, n);
        r.oracle = ok ? Verdict::pass() : Verdict::fail();
    }

    r.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    return r;
}

}  // namespace doubleplane
