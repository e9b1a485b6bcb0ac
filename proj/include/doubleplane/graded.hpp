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
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "doubleplane/ideal.hpp"
#include "doubleplane/matrix.hpp"

namespace doubleplane {

// Direct sum of twisted free modules: twists (a_1,...,a_r) stands for
// R(-a_1) + ... + R(-a_r), so generator i lives in degree a_i. The zero
// module has no twists.
struct GradedFreeModule {
    Ring ring;
    std::vector<int> twists;

    int rank() const { return static_cast<int>(twists.size()); }
    friend bool operator==(const GradedFreeModule& a, const GradedFreeModule& b) {
        return a.ring == b.ring && a.twists == b.twists;
    }
};

// Homogeneous map between graded free modules. The matrix acts on column
// vectors of source coordinates: rows match the target, columns the source,
// and a nonzero entry (i,j) is homogeneous of degree source_j - target_i.
class GradedMap {
public:
    GradedMap(GradedFreeModule source, GradedFreeModule target, PolyMatrix matrix)
        : source_(std::move(source)), target_(std::move(target)),
          matrix_(std::move(matrix)) {
        if (source_.ring != target_.ring || matrix_.ring() != source_.ring)
            throw Error("graded map ring mismatch");
        if (matrix_.rows() != target_.rank() || matrix_.cols() != source_.rank())
            throw Error("graded map shape does not match its modules");
        for (int i = 0; i < matrix_.rows(); ++i)
            for (int j = 0; j < matrix_.cols(); ++j) {
                const Polynomial& e = matrix_.at(i, j);
                if (e.is_zero()) continue;
                int want = source_.twists[static_cast<std::size_t>(j)] -
                           target_.twists[static_cast<std::size_t>(i)];
                if (!e.is_homogeneous() || e.degree() != want)
                    throw Error("graded map entry is not homogeneous of the forced degree");
            }
    }

    const GradedFreeModule& source() const { return source_; }
    const GradedFreeModule& target() const { return target_; }
    const PolyMatrix& matrix() const { return matrix_; }

    bool is_zero_map() const { return matrix_.is_zero(); }

private:
    GradedFreeModule source_, target_;
    PolyMatrix matrix_;
};

inline GradedMap compose(const GradedMap& f, const GradedMap& g) {
    if (!(g.target() == f.source()))
        throw Error("composition twist mismatch");
    return GradedMap(g.source(), f.target(), f.matrix() * g.matrix());
}

inline int rank_of_map(const GradedMap& f) { return rank(f.matrix()); }

inline Ideal minors_ideal(const GradedMap& f, int order) {
    return minors_ideal_of(f.matrix(), order);
}

// Chain F_0 <- F_1 <- ... <- F_k of graded free modules; maps[i] has target
// terms[i] and source terms[i+1]. Consecutive maps must compose to zero.
class FreeComplex {
public:
    FreeComplex(std::vector<GradedMap> maps, std::optional<Ideal> augmentation = {})
        : maps_(std::move(maps)), augmentation_(std::move(augmentation)) {
        for (std::size_t i = 0; i + 1 < maps_.size(); ++i)
            if (!(maps_[i].source() == maps_[i + 1].target()))
                throw Error("complex maps do not chain");
    }

    const std::vector<GradedMap>& maps() const { return maps_; }
    const std::optional<Ideal>& augmentation() const { return augmentation_; }

    int length() const { return static_cast<int>(maps_.size()); }

    std::vector<GradedFreeModule> terms() const {
        std::vector<GradedFreeModule> t;
        if (maps_.empty()) return t;
        t.push_back(maps_.front().target());
        for (const auto& m : maps_) t.push_back(m.source());
        return t;
    }

    bool compositions_vanish() const {
        for (std::size_t i = 0; i + 1 < maps_.size(); ++i)
            if (!compose(maps_[i], maps_[i + 1]).is_zero_map()) return false;
        return true;
    }

private:
    std::vector<GradedMap> maps_;
    std::optional<Ideal> augmentation_;
};

// Minimality: no map carries a nonzero constant entry.
inline bool is_minimal(const FreeComplex& c) {
    for (const auto& f : c.maps())
        for (int i = 0; i < f.matrix().rows(); ++i)
            for (int j = 0; j < f.matrix().cols(); ++j) {
                const Polynomial& e = f.matrix().at(i, j);
                if (!e.is_zero() && e.is_constant()) return false;
            }
    return true;
}

namespace detail {

inline std::int64_t monomial_count(int degree, int vars) {
    if (degree < 0) return 0;
    // C(degree + vars - 1, vars - 1)
    std::int64_t num = 1, den = 1;
    for (int i = 1; i < vars; ++i) {
        num *= degree + i;
        den *= i;
    }
    return num / den;
}

}  // namespace detail

// Alternating sum of the graded pieces of the complex terms at degree n;
// when the complex resolves ring/I this is the Hilbert function of ring/I.
inline std::int64_t hilbert_series_at(const FreeComplex& c, int n) {
    const auto terms = c.terms();
    if (terms.empty()) return 0;
    const int vars = var_count(terms.front().ring);
    std::int64_t acc = 0;
    int sign = 1;
    for (const auto& term : terms) {
        for (int a : term.twists) acc += sign * detail::monomial_count(n - a, vars);
        sign = -sign;
    }
    return acc;
}

// Collapses the alternating binomial sum to the Hilbert polynomial, which
// must be linear: P(n) = d*n + (1 - p_a). Returns (degree, arithmetic genus).
inline std::pair<int, int> hilbert_polynomial(const FreeComplex& c) {
    const auto terms = c.terms();
    if (terms.empty()) throw Error("Hilbert polynomial of an empty complex");
    const int vars = var_count(terms.front().ring);
    if (vars != 4)
        throw Error("Hilbert polynomial extraction expects a complex over R");
    // coefficients of 6*P(n) in n^3, n^2, n, 1
    std::int64_t c3 = 0, c2 = 0, c1 = 0, c0 = 0;
    int sign = 1;
    for (const auto& term : terms) {
        for (int a : term.twists) {
            // (n - a + 3)(n - a + 2)(n - a + 1)
            std::int64_t r1 = 3 - a, r2 = 2 - a, r3 = 1 - a;
            c3 += sign;
            c2 += sign * (r1 + r2 + r3);
            c1 += sign * (r1 * r2 + r1 * r3 + r2 * r3);
            c0 += sign * (r1 * r2 * r3);
        }
        sign = -sign;
    }
    if (c3 != 0 || c2 != 0 || c1 % 6 != 0 || (6 - c0) % 6 != 0)
        throw Error("Hilbert polynomial of the complex is not linear in n");
    std::int64_t d = c1 / 6;
    std::int64_t pa = 1 - c0 / 6;
    if (d <= 0) throw Error("Hilbert polynomial of the complex is not linear in n");
    return {static_cast<int>(d), static_cast<int>(pa)};
}

}  // namespace doubleplane
