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

#include <cstdint>
#include <random>

#include "doubleplane/ideal.hpp"
#include "doubleplane/polynomial.hpp"

namespace doubleplane {

// Seeded, reproducible source of random field elements and dense homogeneous
// polynomials. mt19937_64 has a pinned algorithm, so the same seed yields the
// same stream on every platform.
class Sampler {
public:
    Sampler(std::uint64_t seed, std::uint32_t prime) : rng_(seed), prime_(prime) {}

    std::uint32_t coefficient() {
        return static_cast<std::uint32_t>(rng_() % prime_);
    }
    std::uint32_t nonzero_coefficient() {
        return 1 + static_cast<std::uint32_t>(rng_() % (prime_ - 1));
    }
    std::uint64_t raw() { return rng_(); }

    // all monomials of the given degree, coefficients uniform in F_p
    Polynomial dense_homogeneous(Ring ring, int degree) {
        std::vector<Term> ts;
        for (const auto& m : detail::monomials_of_degree(ring, degree))
            ts.push_back({m, coefficient()});
        return Polynomial::from_terms(ring, prime_, std::move(ts));
    }

    Polynomial dense_homogeneous_nonzero(Ring ring, int degree) {
        for (int tries = 0; tries < 64; ++tries) {
            Polynomial f = dense_homogeneous(ring, degree);
            if (!f.is_zero()) return f;
        }
        throw Error("random sampling failed to produce a nonzero polynomial");
    }

private:
    std::mt19937_64 rng_;
    std::uint32_t prime_;
};

}  // namespace doubleplane
