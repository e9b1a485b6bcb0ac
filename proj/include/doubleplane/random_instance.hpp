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

#include <optional>
#include <string>

#include "doubleplane/normal_form.hpp"
#include "doubleplane/rng.hpp"

namespace doubleplane {

// Uniform degree profile for random instances: every entry of A has degree
// a_deg, every p-row entry degree p_deg, h degree h_deg. The f-column degrees
// are forced by the grading; an explicit f_deg must match them.
struct DegreeProfile {
    int a_deg = 1;
    int p_deg = 1;
    int h_deg = 0;
    std::optional<int> f_deg;
};

// "a[:p[:h[:f]]]", e.g. "1", "2:1:1", "1:1:0:1"
inline DegreeProfile parse_degree_profile(const std::string& text) {
    DegreeProfile prof;
    std::vector<int> parts;
    std::string cur;
    for (char c : text + ":") {
        if (c == ':') {
            if (cur.empty()) throw Error("malformed degree profile '" + text + "'");
            try {
                parts.push_back(std::stoi(cur));
            } catch (const std::exception&) {
                throw Error("malformed degree profile '" + text + "'");
            }
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (parts.empty() || parts.size() > 4)
        throw Error("malformed degree profile '" + text + "'");
    prof.a_deg = parts[0];
    prof.p_deg = parts.size() > 1 ? parts[1] : parts[0];
    prof.h_deg = parts.size() > 2 ? parts[2] : 0;
    if (parts.size() > 3) prof.f_deg = parts[3];
    return prof;
}

struct RandomInstance {
    BMatrix b;
    int attempts = 0;
};

inline RandomInstance random_instance(int s, const DegreeProfile& prof,
                                      std::uint64_t seed, std::uint32_t prime,
                                      int max_attempts = 64) {
    check_prime(prime);
    if (s < 1) throw Error("random instances require s >= 1");
    if (prof.a_deg < 1) throw Error("entries of A must have positive degree");
    if (prof.p_deg < 0 || prof.h_deg < 0) throw Error("negative degree in profile");
    const int forced_f = prof.a_deg + s * prof.a_deg + prof.h_deg - 1;
    if (prof.f_deg && *prof.f_deg < forced_f)
        throw Error("profile inconsistent: deg f_1 = " + std::to_string(*prof.f_deg) +
                    " is below the degree condition deg f_1 >= deg a_{1,1} + "
                    "sum_j deg a_{j,j+1} - 1 (= " + std::to_string(forced_f) + ")");
    if (prof.f_deg && *prof.f_deg > forced_f)
        throw Error("profile inconsistent: deg f_1 = " + std::to_string(*prof.f_deg) +
                    " exceeds the degree forced by deg h = " + std::to_string(prof.h_deg));

    Sampler sampler(seed, prime);
    std::string last_error = "no attempt made";
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        try {
            PolyMatrix a(s, s + 1, Ring::S, prime);
            for (int i = 0; i < s; ++i)
                for (int j = 0; j <= s; ++j)
                    a.set(i, j, sampler.dense_homogeneous(Ring::S, prof.a_deg));
            std::vector<Polynomial> p_row, f_col;
            for (int j = 0; j <= s; ++j)
                p_row.push_back(sampler.dense_homogeneous(Ring::S, prof.p_deg));
            for (int i = 0; i < s; ++i)
                f_col.push_back(sampler.dense_homogeneous(Ring::S, forced_f));
            f_col.push_back(sampler.dense_homogeneous(
                Ring::S, prof.p_deg + s * prof.a_deg + prof.h_deg - 1));
            Polynomial h = sampler.dense_homogeneous_nonzero(Ring::S, prof.h_deg);
            BMatrix b(std::move(a), std::move(p_row), std::move(f_col), std::move(h));
            return RandomInstance{std::move(b), attempt};
        } catch (const Error& e) {
            last_error = e.what();
        }
    }
    throw Error("random instance generation failed after " +
                std::to_string(max_attempts) + " attempts (seed " +
                std::to_string(seed) + "): " + last_error);
}

}  // namespace doubleplane
