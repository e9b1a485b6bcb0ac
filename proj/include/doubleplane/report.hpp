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

#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "doubleplane/instance.hpp"

namespace doubleplane {

struct Verdict {
    enum class State { Pass, Fail, Skipped } state = State::Skipped;
    std::string reason;  // set for Skipped

    static Verdict pass() { return {State::Pass, {}}; }
    static Verdict fail() { return {State::Fail, {}}; }
    static Verdict skipped(std::string why) { return {State::Skipped, std::move(why)}; }

    bool ok() const { return state != State::Fail; }
    bool is_pass() const { return state == State::Pass; }

    friend bool operator==(const Verdict& a, const Verdict& b) {
        return a.state == b.state && a.reason == b.reason;
    }

    std::string str() const {
        switch (state) {
            case State::Pass: return "pass";
            case State::Fail: return "fail";
            case State::Skipped: return "skipped: " + reason;
        }
        return "fail";
    }
    static Verdict from_string(const std::string& s) {
        if (s == "pass") return pass();
        if (s == "fail") return fail();
        if (s.rfind("skipped: ", 0) == 0) return skipped(s.substr(9));
        throw Error("malformed verdict '" + s + "'");
    }
};

// Full pipeline outcome. The machine-readable emission is deterministic for
// a given (instance, seed): the wall-clock timing is excluded from both the
// emitted text and the equality comparison, and only surfaces in the
// human-readable summary.
struct Report {
    InstanceFile instance;
    Verdict residual, curve, exactness, minimality, duality, annihilator;
    Verdict hp2;
    Verdict hilbert_match;
    Verdict oracle;
    std::string equivalences = "skipped";  // "agree" / "disagree" / "skipped"
    int d = 0, delta = 0, deg_h = 0, deg_z = 0;
    long long genus = 0;
    std::vector<std::vector<int>> betti;      // beta_0..beta_2, empty when absent
    std::vector<int> ranks;                   // alpha ranks, empty when absent
    std::vector<int> codim_bounds;
    std::string alpha2_signs = "none";
    std::map<int, int> rao;
    std::string rao_status = "skipped";       // "finite" / "infinite" / "skipped"
    std::optional<int> mingen;
    std::optional<int> relation_count;
    double elapsed_ms = 0;                    // not emitted, not compared

    bool all_pass() const {
        for (const Verdict* v : {&residual, &curve, &exactness, &minimality,
                                 &duality, &annihilator, &hp2, &hilbert_match,
                                 &oracle})
            if (!v->ok()) return false;
        return equivalences != "disagree";
    }

    friend bool operator==(const Report& a, const Report& b);
};

namespace detail {

inline std::string int_list(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

inline std::vector<int> parse_int_list(const std::string& v, int line) {
    std::vector<int> out;
    for (const auto& item : split_list(v, line)) out.push_back(parse_int(item, line));
    return out;
}

}  // namespace detail

inline std::string emit_report(const Report& r) {
    std::ostringstream out;
    out << "report = doubleplane/1\n";
    out << "prime = " << r.instance.prime << "\n";
    out << "s = " << r.instance.s << "\n";
    {
        InstanceFile echo = r.instance;
        echo.seed.reset();
        std::string body = emit_instance(echo);
        // reuse the instance emission minus the prime/s lines already written
        std::istringstream in(body);
        std::string line;
        while (std::getline(in, line)) {
            if (line.rfind("prime =", 0) == 0 || line.rfind("s =", 0) == 0) continue;
            out << line << "\n";
        }
    }
    out << "seed = ";
    if (r.instance.seed) out << *r.instance.seed;
    else out << "none";
    out << "\n";
    out << "verdict_residual = " << r.residual.str() << "\n";
    out << "verdict_curve = " << r.curve.str() << "\n";
    out << "verdict_exactness = " << r.exactness.str() << "\n";
    out << "verdict_minimality = " << r.minimality.str() << "\n";
    out << "verdict_duality = " << r.duality.str() << "\n";
    out << "verdict_annihilator = " << r.annihilator.str() << "\n";
    out << "verdict_hp2 = " << r.hp2.str() << "\n";
    out << "verdict_hilbert = " << r.hilbert_match.str() << "\n";
    out << "verdict_oracle = " << r.oracle.str() << "\n";
    out << "equivalences = " << r.equivalences << "\n";
    out << "d = " << r.d << "\n";
    out << "delta = " << r.delta << "\n";
    out << "deg_h = " << r.deg_h << "\n";
    out << "deg_Z = " << r.deg_z << "\n";
    out << "genus = " << r.genus << "\n";
    for (int k = 0; k < 3; ++k) {
        out << "betti_" << k << " = ";
        if (static_cast<std::size_t>(k) < r.betti.size())
            out << detail::int_list(r.betti[static_cast<std::size_t>(k)]);
        else
            out << "[]";
        out << "\n";
    }
    out << "ranks = " << detail::int_list(r.ranks) << "\n";
    out << "codim_bounds = " << detail::int_list(r.codim_bounds) << "\n";
    out << "alpha2_signs = " << r.alpha2_signs << "\n";
    out << "rao = {";
    bool first = true;
    for (const auto& [j, v] : r.rao) {
        if (!first) out << ", ";
        out << j << ": " << v;
        first = false;
    }
    out << "}\n";
    out << "rao_status = " << r.rao_status << "\n";
    out << "mingen = " << (r.mingen ? std::to_string(*r.mingen) : "none") << "\n";
    out << "relations = "
        << (r.relation_count ? std::to_string(*r.relation_count) : "none") << "\n";
    return out.str();
}

inline Report parse_report(const std::string& text) {
    Report r;
    bool saw_header = false;
    for (const auto& kv : detail::read_key_values(text)) {
        const std::string& k = kv.key;
        const std::string& v = kv.value;
        if (k == "report") {
            if (v != "doubleplane/1") throw Error("unknown report version '" + v + "'");
            saw_header = true;
        } else if (k == "prime") {
            r.instance.prime = static_cast<std::uint32_t>(detail::parse_u64(v, kv.line));
        } else if (k == "s") {
            r.instance.s = detail::parse_int(v, kv.line);
        } else if (k == "A") {
            r.instance.a = detail::split_matrix(v, kv.line);
        } else if (k == "p_row") {
            r.instance.p_row = detail::split_list(v, kv.line);
        } else if (k == "f_col") {
            r.instance.f_col = detail::split_list(v, kv.line);
        } else if (k == "h") {
            r.instance.h = v;
        } else if (k == "seed") {
            if (v == "none") r.instance.seed.reset();
            else r.instance.seed = detail::parse_u64(v, kv.line);
        } else if (k == "verdict_residual") {
            r.residual = Verdict::from_string(v);
        } else if (k == "verdict_curve") {
            r.curve = Verdict::from_string(v);
        } else if (k == "verdict_exactness") {
            r.exactness = Verdict::from_string(v);
        } else if (k == "verdict_minimality") {
            r.minimality = Verdict::from_string(v);
        } else if (k == "verdict_duality") {
            r.duality = Verdict::from_string(v);
        } else if (k == "verdict_annihilator") {
            r.annihilator = Verdict::from_string(v);
        } else if (k == "verdict_hp2") {
            r.hp2 = Verdict::from_string(v);
        } else if (k == "verdict_hilbert") {
            r.hilbert_match = Verdict::from_string(v);
        } else if (k == "verdict_oracle") {
            r.oracle = Verdict::from_string(v);
        } else if (k == "equivalences") {
            r.equivalences = v;
        } else if (k == "d") {
            r.d = detail::parse_int(v, kv.line);
        } else if (k == "delta") {
            r.delta = detail::parse_int(v, kv.line);
        } else if (k == "deg_h") {
            r.deg_h = detail::parse_int(v, kv.line);
        } else if (k == "deg_Z") {
            r.deg_z = detail::parse_int(v, kv.line);
        } else if (k == "genus") {
            r.genus = detail::parse_int(v, kv.line);
        } else if (k.rfind("betti_", 0) == 0) {
            std::size_t idx = static_cast<std::size_t>(k[6] - '0');
            if (r.betti.size() <= idx) r.betti.resize(idx + 1);
            r.betti[idx] = detail::parse_int_list(v, kv.line);
        } else if (k == "ranks") {
            r.ranks = detail::parse_int_list(v, kv.line);
        } else if (k == "codim_bounds") {
            r.codim_bounds = detail::parse_int_list(v, kv.line);
        } else if (k == "alpha2_signs") {
            r.alpha2_signs = v;
        } else if (k == "rao") {
            std::string inner = v;
            if (inner.size() < 2 || inner.front() != '{' || inner.back() != '}')
                throw ParseError("expected a braced table", kv.line, 1);
            inner = inner.substr(1, inner.size() - 2);
            std::istringstream items(inner);
            std::string item;
            while (std::getline(items, item, ',')) {
                std::size_t colon = item.find(':');
                if (colon == std::string::npos)
                    throw ParseError("expected 'degree: dimension'", kv.line, 1);
                int deg = detail::parse_int(
                    item.substr(0, colon).erase(0, item.find_first_not_of(' ')), kv.line);
                std::string val = item.substr(colon + 1);
                val.erase(0, val.find_first_not_of(' '));
                r.rao[deg] = detail::parse_int(val, kv.line);
            }
        } else if (k == "rao_status") {
            r.rao_status = v;
        } else if (k == "mingen") {
            if (v == "none") r.mingen.reset();
            else r.mingen = detail::parse_int(v, kv.line);
        } else if (k == "relations") {
            if (v == "none") r.relation_count.reset();
            else r.relation_count = detail::parse_int(v, kv.line);
        } else {
            throw ParseError("unknown report key '" + k + "'", kv.line, 1);
        }
    }
    if (!saw_header) throw Error("missing report header");
    // normalize the trailing empty betti rows the emitter always writes
    while (r.betti.size() < 3) r.betti.emplace_back();
    return r;
}

inline bool operator==(const Report& a, const Report& b) {
    auto key = [](const Report& r) { return emit_report(r); };
    return key(a) == key(b);
}

// Human-oriented summary for the terminal.
inline std::string format_report_human(const Report& r) {
    std::ostringstream out;
    auto line = [&](const std::string& k, const std::string& v) {
        out << "  " << k;
        for (std::size_t i = k.size(); i < 16; ++i) out << ' ';
        out << v << "\n";
    };
    out << "instance: s = " << r.instance.s << ", prime = " << r.instance.prime << "\n";
    line("residual", r.residual.str());
    line("equivalences", r.equivalences);
    line("hp^2 member", r.hp2.str());
    line("curve", r.curve.str());
    line("exactness", r.exactness.str());
    line("minimality", r.minimality.str());
    line("hilbert", r.hilbert_match.str());
    line("duality", r.duality.str());
    line("annihilator", r.annihilator.str());
    line("oracle", r.oracle.str());
    out << "invariants: d = " << r.d << ", delta = " << r.delta
        << ", deg h = " << r.deg_h << ", deg Z = " << r.deg_z
        << ", genus = " << r.genus << "\n";
    if (!r.betti.empty()) {
        out << "betti:";
        for (std::size_t k = 0; k < r.betti.size(); ++k)
            out << " b" << k << " = " << detail::int_list(r.betti[k]);
        out << "\n";
    }
    out << "rao:";
    if (r.rao.empty()) out << " (zero)";
    for (const auto& [j, v] : r.rao) out << " rho(" << j << ") = " << v;
    out << "  [" << r.rao_status << "]\n";
    if (r.mingen) out << "minimal generators: " << *r.mingen << "\n";
    if (r.relation_count) out << "minimal relations: " << *r.relation_count << "\n";
    out << "elapsed: " << r.elapsed_ms << " ms\n";
    out << (r.all_pass() ? "ALL CHECKS PASS" : "CHECKS FAILED") << "\n";
    return out.str();
}

}  // namespace doubleplane
