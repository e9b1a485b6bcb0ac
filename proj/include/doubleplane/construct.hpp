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
#include <utility>
#include <vector>

#include "doubleplane/rao.hpp"
#include "doubleplane/rng.hpp"

namespace doubleplane {

// Decides whether a homogeneous matrix with the given twists presents the
// Hartshorne-Rao module of some curve in the double plane: up to row/column
// permutation it must be [x E_s  M] with M over S, entries of positive
// degree, an f-column choice satisfying the degree condition with deg h >= 0,
// and irrelevant maximal minors.
struct ShapeCheck {
    bool ok = false;
    std::string reason;          // first violated clause when !ok
    int s = 0;
    std::optional<PolyMatrix> m; // extracted s x (s+2) block over S
    int f_column = -1;           // column of m chosen as the f-column
    int required_h_degree = -1;
};

inline ShapeCheck presentation_shape_check(const PolyMatrix& candidate,
                                           const std::vector<int>& target_deg,
                                           const std::vector<int>& source_deg) {
    if (candidate.ring() != Ring::R)
        throw Error("shape check expects a matrix over R");
    if (static_cast<int>(target_deg.size()) != candidate.rows() ||
        static_cast<int>(source_deg.size()) != candidate.cols())
        throw Error("malformed twist data");

    ShapeCheck res;
    const int s = candidate.rows();
    res.s = s;
    if (candidate.cols() != 2 * s + 2) {
        res.reason = "matrix is not of shape s x (2s+2)";
        return res;
    }
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < candidate.cols(); ++j) {
            const Polynomial& e = candidate.at(i, j);
            if (e.is_zero()) continue;
            int want = source_deg[static_cast<std::size_t>(j)] -
                       target_deg[static_cast<std::size_t>(i)];
            if (!e.is_homogeneous() || e.degree() != want) {
                res.reason = "entry (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ") is not homogeneous for the twists";
                return res;
            }
        }

    // locate the identity-times-x block: s columns of the form x * e_i
    Polynomial xv = Polynomial::variable(Ring::R, 0, candidate.prime());
    std::vector<int> x_col_of_row(static_cast<std::size_t>(s), -1);
    std::vector<bool> is_x_col(static_cast<std::size_t>(candidate.cols()), false);
    for (int j = 0; j < candidate.cols(); ++j) {
        int hit = -1;
        bool clean = true;
        for (int i = 0; i < s; ++i) {
            const Polynomial& e = candidate.at(i, j);
            if (e.is_zero()) continue;
            if (e == xv && hit < 0) {
                hit = i;
            } else {
                clean = false;
                break;
            }
        }
        if (clean && hit >= 0) {
            if (x_col_of_row[static_cast<std::size_t>(hit)] < 0) {
                x_col_of_row[static_cast<std::size_t>(hit)] = j;
                is_x_col[static_cast<std::size_t>(j)] = true;
            }
        }
    }
    for (int i = 0; i < s; ++i)
        if (x_col_of_row[static_cast<std::size_t>(i)] < 0) {
            res.reason = "no x-identity column for row " + std::to_string(i + 1);
            return res;
        }

    // the remaining s+2 columns form M and must be x-free with entries of
    // positive degree
    std::vector<int> m_cols;
    for (int j = 0; j < candidate.cols(); ++j)
        if (!is_x_col[static_cast<std::size_t>(j)]) m_cols.push_back(j);
    if (static_cast<int>(m_cols.size()) != s + 2) {
        res.reason = "x-identity block does not leave s+2 remaining columns";
        return res;
    }
    PolyMatrix m(s, s + 2, Ring::S, candidate.prime());
    for (int i = 0; i < s; ++i)
        for (std::size_t k = 0; k < m_cols.size(); ++k) {
            const Polynomial& e = candidate.at(i, m_cols[k]);
            if (contains_variable(e, 0)) {
                res.reason = "entry (" + std::to_string(i + 1) + "," +
                             std::to_string(static_cast<int>(k) + 1) +
                             ") of M involves x";
                return res;
            }
            if (!e.is_zero() && e.is_constant()) {
                res.reason = "constant entry at row " + std::to_string(i + 1) +
                             ", column " + std::to_string(static_cast<int>(k) + 1) +
                             " of M";
                return res;
            }
            m.set(i, static_cast<int>(k), restrict_to(e, Ring::S));
        }

    MatrixGrading grading;
    try {
        grading = infer_grading(m);
    } catch (const Error& e) {
        res.reason = e.what();
        return res;
    }

    // choose an f-column making deg h >= 0; prefer the last column
    int row_sum = 0, col_sum = 0;
    for (int v : grading.row) row_sum += v;
    for (int v : grading.col) col_sum += v;
    res.f_column = -1;
    for (int off = 0; off < s + 2; ++off) {
        int j = (s + 1 - off + (s + 2)) % (s + 2);
        int need = 1 - row_sum + col_sum - 2 * grading.col[static_cast<std::size_t>(j)];
        if (need >= 0) {
            res.f_column = j;
            res.required_h_degree = need;
            break;
        }
    }
    if (res.f_column < 0) {
        res.reason = "degree condition unsatisfiable: no f-column choice "
                     "admits deg h >= 0";
        return res;
    }

    if (!is_irrelevant(minors_ideal_of(m, s))) {
        res.reason = "the maximal minors of M have a common zero in the plane";
        return res;
    }

    res.m = std::move(m);
    res.ok = true;
    return res;
}

// Convenience overload: assembles [x E_s  M] with the canonical twists from
// an M given over S, taking the last column as the f-column.
inline ShapeCheck presentation_shape_check(const PolyMatrix& m_over_s) {
    if (m_over_s.ring() != Ring::S) throw Error("expected a matrix over S");
    const int s = m_over_s.rows();
    if (m_over_s.cols() != s + 2) throw Error("M must be s x (s+2)");
    MatrixGrading grading = infer_grading(m_over_s);  // may throw

    // normalize row weights to the generator degrees tau_i = 0 by shifting:
    // only degree differences matter for the check, so target 0 and source
    // -row/-col differences work
    std::vector<int> target, source;
    for (int i = 0; i < s; ++i) target.push_back(-grading.row[static_cast<std::size_t>(i)]);
    for (int i = 0; i < s; ++i) source.push_back(1 - grading.row[static_cast<std::size_t>(i)]);
    for (int j = 0; j < s + 2; ++j) source.push_back(-grading.col[static_cast<std::size_t>(j)]);

    PolyMatrix cand(s, 2 * s + 2, Ring::R, m_over_s.prime());
    Polynomial xv = Polynomial::variable(Ring::R, 0, m_over_s.prime());
    for (int i = 0; i < s; ++i) cand.set(i, i, xv);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s + 2; ++j)
            cand.set(i, s + j, lift(m_over_s.at(i, j), Ring::R));
    return presentation_shape_check(cand, target, source);
}

// Constructs a normal-form matrix whose curve has the prescribed module
// presentation: h is the minimal monomial power of t, the p-row is sampled
// densely at the minimal admissible degrees until the determinant is nonzero.
struct ModuleConstruction {
    BMatrix b;
    int attempts = 0;
    std::uint64_t seed = 0;
};

inline ModuleConstruction construct_curve_from_module(const PolyMatrix& m_over_s,
                                                      std::uint64_t seed,
                                                      int max_attempts = 64) {
    ShapeCheck shape = presentation_shape_check(m_over_s);
    if (!shape.ok) throw Error("module shape check failed: " + shape.reason);
    const int s = m_over_s.rows();
    const std::uint32_t pr = m_over_s.prime();

    // use the last column as the f-column (input convention); re-derive the
    // h degree for that choice
    MatrixGrading grading = infer_grading(m_over_s);
    int row_sum = 0, col_sum = 0;
    for (int v : grading.row) row_sum += v;
    for (int v : grading.col) col_sum += v;
    const int f_col = s + 1;
    int deg_h = 1 - row_sum + col_sum - 2 * grading.col[static_cast<std::size_t>(f_col)];
    if (deg_h < 0)
        throw Error("degree condition violated for the last column as f-column: "
                    "deg h would be negative");

    Polynomial h = Polynomial::constant(1, Ring::S, pr);
    Polynomial tv = Polynomial::variable(Ring::S, 2, pr);
    for (int k = 0; k < deg_h; ++k) h = h * tv;

    PolyMatrix a(s, s + 1, Ring::S, pr);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j <= s; ++j) a.set(i, j, m_over_s.at(i, j));

    // minimal admissible weight for the p-row
    int d_a = 0;
    for (int i = 0; i < s; ++i) d_a += grading.row[static_cast<std::size_t>(i)];
    for (int j = 0; j <= s; ++j) d_a -= grading.col[static_cast<std::size_t>(j)];
    int u_p = 1 - d_a;  // ensures deg p >= 1
    for (int j = 0; j <= s; ++j)  // positive-degree p-row entries
        u_p = std::max(u_p, grading.col[static_cast<std::size_t>(j)] + 1);
    u_p = std::max(u_p, grading.col[static_cast<std::size_t>(f_col)]);

    Sampler sampler(seed, pr);
    std::string last_error = "no attempt made";
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        std::vector<Polynomial> p_row, f_full;
        for (int j = 0; j <= s; ++j)
            p_row.push_back(sampler.dense_homogeneous(
                Ring::S, u_p - grading.col[static_cast<std::size_t>(j)]));
        for (int i = 0; i < s; ++i) f_full.push_back(m_over_s.at(i, f_col));
        f_full.push_back(sampler.dense_homogeneous(
            Ring::S, u_p - grading.col[static_cast<std::size_t>(f_col)]));
        try {
            BMatrix b(a, std::move(p_row), std::move(f_full), h);
            return ModuleConstruction{std::move(b), attempt, seed};
        } catch (const Error& e) {
            last_error = e.what();
        }
    }
    throw Error("module construction failed after " + std::to_string(max_attempts) +
                " attempts (seed " + std::to_string(seed) + "): " + last_error);
}

// One-sided randomized witness search for the local complete intersection
// property of Z: sample f-columns of the minimal admissible degrees; an
// irrelevant I_s([A|f]) certifies, failure to find one is inconclusive.
struct LciVerdict {
    bool certified = false;
    int trials_used = 0;
    std::uint64_t seed = 0;
    std::optional<PolyMatrix> witness;  // the certifying [A | f]
};

inline LciVerdict lci_randomized_check(const PolyMatrix& hilbert_burch,
                                       int trials, std::uint64_t seed) {
    if (trials < 1) throw Error("trial count must be at least 1");
    if (hilbert_burch.ring() != Ring::S) throw Error("expected a matrix over S");
    const int s = hilbert_burch.rows();
    if (hilbert_burch.cols() != s + 1 || s < 1)
        throw Error("Hilbert-Burch block must be s x (s+1) with s >= 1");
    const std::uint32_t pr = hilbert_burch.prime();
    if (codimension(Ideal(Ring::S, pr, minors(hilbert_burch, s))) != 2)
        throw Error("Hilbert-Burch condition failed: the maximal minors of A "
                    "do not have codimension 2");
    MatrixGrading grading = infer_grading(hilbert_burch);
    int d_a = 0;
    for (int i = 0; i < s; ++i) d_a += grading.row[static_cast<std::size_t>(i)];
    for (int j = 0; j <= s; ++j) d_a -= grading.col[static_cast<std::size_t>(j)];

    Sampler sampler(seed, pr);
    LciVerdict v;
    v.seed = seed;
    for (int trial = 1; trial <= trials; ++trial) {
        v.trials_used = trial;
        PolyMatrix m(s, s + 2, Ring::S, pr);
        for (int i = 0; i < s; ++i) {
            for (int j = 0; j <= s; ++j) m.set(i, j, hilbert_burch.at(i, j));
            // deg f_i = deg a_{i,j} + deg A_j - 1 (the deg h = 0 choice)
            int fdeg = grading.row[static_cast<std::size_t>(i)] + d_a - 1;
            m.set(i, s + 1, sampler.dense_homogeneous(Ring::S, fdeg));
        }
        if (is_irrelevant(minors_ideal_of(m, s))) {
            v.certified = true;
            v.witness = std::move(m);
            return v;
        }
    }
    return v;
}

}  // namespace doubleplane
