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

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "doubleplane/resolution.hpp"

namespace doubleplane {

// A graded cokernel presentation: free target with generator degrees
// target_deg, columns of generator degrees source_deg.
struct GradedCoker {
    PolyMatrix matrix;
    std::vector<int> target_deg;
    std::vector<int> source_deg;

    GradedCoker(PolyMatrix m, std::vector<int> tgt, std::vector<int> src)
        : matrix(std::move(m)), target_deg(std::move(tgt)), source_deg(std::move(src)) {
        if (matrix.rows() != static_cast<int>(target_deg.size()) ||
            matrix.cols() != static_cast<int>(source_deg.size()))
            throw Error("malformed twist data for a cokernel presentation");
        for (int i = 0; i < matrix.rows(); ++i)
            for (int j = 0; j < matrix.cols(); ++j) {
                const Polynomial& e = matrix.at(i, j);
                if (e.is_zero()) continue;
                int want = source_deg[static_cast<std::size_t>(j)] -
                           target_deg[static_cast<std::size_t>(i)];
                if (!e.is_homogeneous() || e.degree() != want)
                    throw Error("presentation entry not homogeneous of the forced degree");
            }
    }

    int max_entry_degree() const {
        int d = 0;
        for (int i = 0; i < matrix.rows(); ++i)
            for (int j = 0; j < matrix.cols(); ++j)
                d = std::max(d, matrix.at(i, j).degree());
        return d;
    }
};

namespace detail {

// Graded piece of a free module with generator degrees target_deg: the basis
// is the concatenation of the monomial bases of each block.
struct CokerDegreeData {
    int total = 0;
    std::vector<int> offsets;                    // per block
    std::vector<MonomialIndexer> block_basis;    // per block (may be empty)
    RowReducer image;                            // pivots spanning the image

    CokerDegreeData(std::size_t cols, std::uint32_t p) : image(cols, p) {}
};

inline std::vector<std::uint32_t> block_vector(const GradedCoker& c,
                                               const CokerDegreeData& data,
                                               int block, const Polynomial& f) {
    std::vector<std::uint32_t> row(static_cast<std::size_t>(data.total), 0);
    const auto& basis = data.block_basis[static_cast<std::size_t>(block)];
    for (const auto& t : f.terms())
        row[static_cast<std::size_t>(data.offsets[static_cast<std::size_t>(block)]) +
            basis.at(t.mono)] = t.coeff;
    (void)c;
    return row;
}

inline CokerDegreeData coker_degree(const GradedCoker& c, int j) {
    const Ring ring = c.matrix.ring();
    const std::uint32_t p = c.matrix.prime();
    const int rows = c.matrix.rows();
    std::vector<MonomialIndexer> bases;
    std::vector<int> offsets;
    int total = 0;
    for (int i = 0; i < rows; ++i) {
        offsets.push_back(total);
        bases.emplace_back(monomials_of_degree(ring, j - c.target_deg[static_cast<std::size_t>(i)]));
        total += static_cast<int>(bases.back().list.size());
    }
    CokerDegreeData data(static_cast<std::size_t>(total), p);
    data.total = total;
    data.offsets = std::move(offsets);
    data.block_basis = std::move(bases);
    if (total == 0) return data;
    for (int k = 0; k < c.matrix.cols(); ++k) {
        int dm = j - c.source_deg[static_cast<std::size_t>(k)];
        if (dm < 0) continue;
        for (const auto& m : monomials_of_degree(ring, dm)) {
            std::vector<std::uint32_t> row(static_cast<std::size_t>(total), 0);
            for (int i = 0; i < rows; ++i) {
                const Polynomial& e = c.matrix.at(i, k);
                if (e.is_zero()) continue;
                Polynomial shifted = e.times_term(m, 1);
                const auto& basis = data.block_basis[static_cast<std::size_t>(i)];
                for (const auto& t : shifted.terms())
                    row[static_cast<std::size_t>(data.offsets[static_cast<std::size_t>(i)]) +
                        basis.at(t.mono)] = t.coeff;
            }
            data.image.add(std::move(row));
        }
    }
    return data;
}

inline int coker_dimension_at(const GradedCoker& c, int j) {
    CokerDegreeData data = coker_degree(c, j);
    return data.total - static_cast<int>(data.image.rank());
}

}  // namespace detail

// Degreewise dimension table of a graded cokernel, with the window search
// used to certify finite length: the scan runs from the smallest generator
// degree and stops after three consecutive zeros past
// max(target) + max entry degree; hitting the hard cap first flags the
// module as infinite-dimensional.
struct RaoFunction {
    std::map<int, int> rho;  // nonzero values only
    bool finite = false;
    int window_lo = 0;
    int window_hi = 0;

    int at(int j) const {
        auto it = rho.find(j);
        return it == rho.end() ? 0 : it->second;
    }
    int total_dimension() const {
        int t = 0;
        for (auto& [j, v] : rho) t += v;
        return t;
    }
    int top_degree() const {  // window_lo - 1 when the module vanishes
        int top = window_lo - 1;
        for (auto& [j, v] : rho)
            if (v > 0) top = std::max(top, j);
        return top;
    }
};

inline RaoFunction coker_hilbert_function(const GradedCoker& c,
                                          std::optional<int> duality_top = {}) {
    RaoFunction f;
    if (c.target_deg.empty()) {
        f.finite = true;
        return f;
    }
    int lo = *std::min_element(c.target_deg.begin(), c.target_deg.end());
    int base_hi = *std::max_element(c.target_deg.begin(), c.target_deg.end()) +
                  c.max_entry_degree();
    int cap = base_hi;
    if (duality_top) cap = std::max(cap, *duality_top);
    cap += 8;
    f.window_lo = lo;
    int zeros = 0;
    int j = lo;
    for (;; ++j) {
        int v = detail::coker_dimension_at(c, j);
        if (v > 0) {
            f.rho[j] = v;
            zeros = 0;
        } else {
            ++zeros;
        }
        if (j >= base_hi && zeros >= 3) {
            f.finite = true;
            break;
        }
        if (j >= cap) {
            f.finite = false;
            break;
        }
    }
    f.window_hi = j;
    return f;
}

// Presentation of the Hartshorne-Rao module of a curve in the double plane:
//   coker( [ x E_s  M ] : R^{2s+2} -> sum_i R(-tau_i) ),  tau_i = delta+1-b_i,
// with M = [A | f_1..f_s] over S.
class RaoPresentation {
public:
    static RaoPresentation from_curve(const CurveIdeal& c) {
        if (!is_curve(c))
            throw Error("not a curve: the maximal minors of M have a common zero, "
                        "so the module would have infinite length");
        return assemble(c, true);
    }

    // No finite-length gate; used for the infinite-length diagnostics.
    static RaoPresentation from_curve_unchecked(const CurveIdeal& c) {
        if (c.s() < 1) throw Error("the module presentation requires s >= 1");
        return assemble(c, false);
    }

    int s() const { return s_; }
    std::uint32_t prime() const { return m_.prime(); }
    const PolyMatrix& m() const { return m_; }
    const GradedCoker& coker() const { return coker_; }
    int d() const { return d_; }
    int delta() const { return delta_; }
    bool length_checked() const { return checked_; }

    Ideal minors_of_m() const { return minors_ideal_of(m_, s_); }

private:
    static RaoPresentation assemble(const CurveIdeal& c, bool checked) {
        const int s = c.s();
        if (s < 1) throw Error("the module presentation requires s >= 1");
        const std::uint32_t pr = c.prime();
        const BMatrix& b = c.source();
        PolyMatrix m = b.m_matrix();
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s + 2; ++j) {
                const Polynomial& e = m.at(i, j);
                if (!e.is_zero() && e.is_constant())
                    throw Error("M carries a unit entry; the presentation is not minimal");
            }
        const int delta = c.p().degree();
        const int d = 2 * delta + c.h().degree();
        std::vector<int> b_twists = b.syzygy_twists();
        std::vector<int> target;
        for (int i = 0; i < s; ++i) target.push_back(delta + 1 - b_twists[static_cast<std::size_t>(i)]);
        std::vector<int> source;
        for (int i = 0; i < s; ++i) source.push_back(target[static_cast<std::size_t>(i)] + 1);
        for (int j = 0; j <= s; ++j)
            source.push_back(delta + 1 - b.forced_a_minor_degree(j));
        source.push_back(d - delta);

        PolyMatrix asm_(s, 2 * s + 2, Ring::R, pr);
        Polynomial xv = Polynomial::variable(Ring::R, 0, pr);
        for (int i = 0; i < s; ++i) asm_.set(i, i, xv);
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s + 2; ++j) asm_.set(i, s + j, lift(m.at(i, j), Ring::R));
        return RaoPresentation(s, std::move(m), GradedCoker(std::move(asm_), target, source),
                               d, delta, checked);
    }

    RaoPresentation(int s, PolyMatrix m, GradedCoker coker, int d, int delta, bool checked)
        : s_(s), m_(std::move(m)), coker_(std::move(coker)), d_(d), delta_(delta),
          checked_(checked) {}

    int s_;
    PolyMatrix m_;
    GradedCoker coker_;
    int d_;
    int delta_;
    bool checked_;
};

inline RaoPresentation rao_presentation(const CurveIdeal& c) {
    return RaoPresentation::from_curve(c);
}

inline RaoFunction rao_function(const RaoPresentation& r) {
    // the self-dual support is bounded by d-2-min(tau); widen the cap so the
    // window always covers it
    int lo = *std::min_element(r.coker().target_deg.begin(), r.coker().target_deg.end());
    return coker_hilbert_function(r.coker(), r.d() - 2 - lo);
}

inline bool check_self_duality(const RaoFunction& rho, int d) {
    if (!rho.finite) return false;
    std::map<int, int> seen = rho.rho;
    for (auto& [j, v] : rho.rho)
        if (rho.at(d - 2 - j) != v) return false;
    return true;
}

inline bool check_self_duality(const RaoPresentation& r, int d) {
    return check_self_duality(rao_function(r), d);
}

// Number of minimal generators: dim of coker / (irrelevant ideal * coker),
// computed degreewise. All presentation entries have positive degree, so this
// must come out as the target rank s.
inline int minimal_generator_count(const RaoPresentation& r) {
    const GradedCoker& c = r.coker();
    std::vector<int> degrees = c.target_deg;
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    int total = 0;
    for (int j : degrees) {
        detail::CokerDegreeData data = detail::coker_degree(c, j);
        // add the span of R_1 * T_{j-1}: all basis vectors with a positive
        // degree monomial part
        for (int i = 0; i < c.matrix.rows(); ++i) {
            const auto& basis = data.block_basis[static_cast<std::size_t>(i)];
            for (std::size_t k = 0; k < basis.list.size(); ++k) {
                if (basis.list[k].degree() == 0) continue;
                std::vector<std::uint32_t> row(static_cast<std::size_t>(data.total), 0);
                row[static_cast<std::size_t>(data.offsets[static_cast<std::size_t>(i)]) + k] = 1;
                data.image.add(std::move(row));
            }
        }
        total += data.total - static_cast<int>(data.image.rank());
    }
    return total;
}

// Number of minimal relations: minimal generators of the column module,
// computed as dim K_j - dim (R_1 K)_j over the column degrees.
inline int minimal_relation_count(const RaoPresentation& r) {
    const GradedCoker& c = r.coker();
    std::vector<int> degrees = c.source_deg;
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    const Ring ring = c.matrix.ring();
    const std::uint32_t p = c.matrix.prime();
    int total = 0;
    for (int j : degrees) {
        detail::CokerDegreeData full = detail::coker_degree(c, j);
        // image of R_1 * K_{j-1}: columns times monomials of positive degree
        detail::CokerDegreeData sub(static_cast<std::size_t>(full.total), p);
        sub.total = full.total;
        sub.offsets = full.offsets;
        sub.block_basis = full.block_basis;
        for (int k = 0; k < c.matrix.cols(); ++k) {
            int dm = j - c.source_deg[static_cast<std::size_t>(k)];
            if (dm < 1) continue;
            for (const auto& m : detail::monomials_of_degree(ring, dm)) {
                std::vector<std::uint32_t> row(static_cast<std::size_t>(full.total), 0);
                for (int i = 0; i < c.matrix.rows(); ++i) {
                    const Polynomial& e = c.matrix.at(i, k);
                    if (e.is_zero()) continue;
                    Polynomial shifted = e.times_term(m, 1);
                    const auto& basis = sub.block_basis[static_cast<std::size_t>(i)];
                    for (const auto& t : shifted.terms())
                        row[static_cast<std::size_t>(sub.offsets[static_cast<std::size_t>(i)]) +
                            basis.at(t.mono)] = t.coeff;
                }
                sub.image.add(std::move(row));
            }
        }
        total += static_cast<int>(full.image.rank() - sub.image.rank());
    }
    return total;
}

namespace detail {

// Reduced row echelon nullspace of the system rows * c = 0; returns a basis
// of the solution space (vectors of length ncols).
inline std::vector<std::vector<std::uint32_t>> nullspace(
    std::vector<std::vector<std::uint32_t>> rows, std::size_t ncols, std::uint32_t p) {
    std::vector<std::vector<std::uint32_t>> pivot_rows;
    std::vector<std::size_t> pivot_cols;
    for (auto& row : rows) {
        // reduce against existing pivots
        for (std::size_t k = 0; k < pivot_rows.size(); ++k) {
            std::uint32_t f = row[pivot_cols[k]];
            if (!f) continue;
            for (std::size_t c = 0; c < ncols; ++c)
                if (pivot_rows[k][c])
                    row[c] = mod_sub(row[c], mod_mul(f, pivot_rows[k][c], p), p);
        }
        std::size_t lead = ncols;
        for (std::size_t c = 0; c < ncols; ++c)
            if (row[c]) { lead = c; break; }
        if (lead == ncols) continue;
        std::uint32_t inv = mod_inv(row[lead], p);
        for (std::size_t c = 0; c < ncols; ++c)
            if (row[c]) row[c] = mod_mul(row[c], inv, p);
        // back-substitute into earlier pivots
        for (std::size_t k = 0; k < pivot_rows.size(); ++k) {
            std::uint32_t f = pivot_rows[k][lead];
            if (!f) continue;
            for (std::size_t c = 0; c < ncols; ++c)
                if (row[c])
                    pivot_rows[k][c] = mod_sub(pivot_rows[k][c], mod_mul(f, row[c], p), p);
        }
        pivot_rows.push_back(std::move(row));
        pivot_cols.push_back(lead);
    }
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free_c = 0; free_c < ncols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<std::uint32_t> v(ncols, 0);
        v[free_c] = 1;
        for (std::size_t k = 0; k < pivot_rows.size(); ++k) {
            std::uint32_t val = pivot_rows[k][free_c];
            if (val) v[pivot_cols[k]] = p - val;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace detail

// Degreewise verification that the annihilator of the module equals the
// candidate ideal: over S the candidate is I_s(M), over R it is
// x R + I_s(M) R. Containment of the candidate is checked generator by
// generator; the reverse inclusion degreewise up to the vanishing bound,
// which is exact for finite-length modules.
struct AnnihilatorReport {
    bool candidate_annihilates = false;
    bool ann_s_matches = false;
    bool ann_r_matches = false;
    int degree_bound = 0;
    std::vector<int> failing_degrees_s;
    std::vector<int> failing_degrees_r;
    bool pass = false;
};

inline AnnihilatorReport annihilator_check(const RaoPresentation& r) {
    AnnihilatorReport rep;
    const GradedCoker& c = r.coker();
    const std::uint32_t p = r.prime();
    RaoFunction rho = rao_function(r);
    if (!rho.finite)
        throw Error("annihilator comparison requires a finite-length module");

    std::vector<Polynomial> m_minors = minors(r.m(), r.s());
    Polynomial xv = Polynomial::variable(Ring::R, 0, p);

    // candidate generators annihilate the module
    auto annihilates = [&](const Polynomial& g_in_r) {
        if (g_in_r.is_zero()) return true;
        for (int i = 0; i < c.matrix.rows(); ++i) {
            int j = c.target_deg[static_cast<std::size_t>(i)] + g_in_r.degree();
            detail::CokerDegreeData data = detail::coker_degree(c, j);
            if (data.total == 0) continue;
            auto row = detail::block_vector(c, data, i, g_in_r);
            if (data.image.reduce(row)) return false;  // nonzero residue
        }
        return true;
    };
    rep.candidate_annihilates = annihilates(xv);
    for (const auto& mm : m_minors)
        if (!annihilates(lift(mm, Ring::R))) rep.candidate_annihilates = false;

    // degree bound: past it both sides are all of S_n (resp R_n)
    Ideal is_m = r.minors_of_m();
    int vanish_s = 0;
    {
        int n = 0;
        while (hilbert_function(is_m, n) != 0) {
            ++n;
            if (n > 256) throw Error("minor ideal fails to become irrelevant");
        }
        vanish_s = n;
    }
    int lo = *std::min_element(c.target_deg.begin(), c.target_deg.end());
    rep.degree_bound = std::max(vanish_s, rho.top_degree() - lo + 1);

    // reverse inclusion, degree by degree
    auto check_side = [&](bool over_r) {
        std::vector<int>& failing = over_r ? rep.failing_degrees_r : rep.failing_degrees_s;
        const Ring ring = over_r ? Ring::R : Ring::S;
        for (int n = 0; n <= rep.degree_bound; ++n) {
            auto monos = detail::monomials_of_degree(ring, n);
            const std::size_t nunk = monos.size();
            // constraint rows: for each target generator, the class of m*e_i
            // modulo the image, stacked as one linear system
            std::vector<std::vector<std::uint32_t>> constraints;
            for (int i = 0; i < c.matrix.rows(); ++i) {
                int j = c.target_deg[static_cast<std::size_t>(i)] + n;
                detail::CokerDegreeData data = detail::coker_degree(c, j);
                if (data.total == 0) continue;
                // column u of this block: reduced coordinates of monos[u]*e_i
                std::vector<std::vector<std::uint32_t>> reduced;
                for (std::size_t u = 0; u < nunk; ++u) {
                    Polynomial f = Polynomial::term(monos[u], 1, p);
                    Polynomial fr = over_r ? f : lift(f, Ring::R);
                    auto row = detail::block_vector(c, data, i, fr);
                    data.image.reduce(row);
                    reduced.push_back(std::move(row));
                }
                for (int coord = 0; coord < data.total; ++coord) {
                    std::vector<std::uint32_t> cons(nunk, 0);
                    bool nonzero = false;
                    for (std::size_t u = 0; u < nunk; ++u) {
                        cons[u] = reduced[u][static_cast<std::size_t>(coord)];
                        if (cons[u]) nonzero = true;
                    }
                    if (nonzero) constraints.push_back(std::move(cons));
                }
            }
            auto ann_basis = detail::nullspace(std::move(constraints), nunk, p);
            if (ann_basis.empty()) continue;
            // candidate ideal piece in the same coordinates
            detail::MonomialIndexer idx(monos);
            detail::RowReducer cand(nunk, p);
            auto add_multiples = [&](const Polynomial& g) {
                if (g.is_zero() || g.degree() > n) return;
                for (const auto& m : detail::monomials_of_degree(ring, n - g.degree()))
                    cand.add(detail::coefficient_row(g.times_term(m, 1), idx));
            };
            for (const auto& mm : m_minors)
                add_multiples(over_r ? lift(mm, Ring::R) : mm);
            if (over_r) add_multiples(xv);
            bool ok = true;
            for (auto& v : ann_basis) {
                auto copy = v;
                if (cand.reduce(copy)) { ok = false; break; }
            }
            if (!ok) failing.push_back(n);
        }
    };
    check_side(false);
    check_side(true);
    rep.ann_s_matches = rep.failing_degrees_s.empty();
    rep.ann_r_matches = rep.failing_degrees_r.empty();
    rep.pass = rep.candidate_annihilates && rep.ann_s_matches && rep.ann_r_matches;
    return rep;
}

// The twisted dual presentation coker(a3^t)(-4) from the resolution; its
// Hilbert function must be the reflection of the Rao function.
inline GradedCoker dual_shifted_coker(const ResolutionData& r) {
    PolyMatrix mt = r.alpha3().matrix().transposed();
    std::vector<int> target, source;
    for (int a : r.alpha3().source().twists) target.push_back(4 - a);
    for (int a : r.alpha3().target().twists) source.push_back(4 - a);
    return GradedCoker(std::move(mt), std::move(target), std::move(source));
}

}  // namespace doubleplane
