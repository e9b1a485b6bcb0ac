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
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "doubleplane/graded.hpp"
#include "doubleplane/ideal.hpp"
#include "doubleplane/weights.hpp"

namespace doubleplane {

// The (s+1) x (s+2) matrix over S that encodes a one-dimensional subscheme of
// the double plane {x^2 = 0}:
//
//     B = [ A        f_1..f_s ]        A   s x (s+1), Hilbert-Burch data
//         [ p_1..p_{s+1}  f_{s+1} ]    p_i, f_i, h homogeneous in S
//
// together with a nonzero homogeneous h. The degenerate case s = 0 (empty
// residual zero-scheme) is B = [p_1 f_1] and is accepted by the builder only.
class BMatrix {
public:
    BMatrix(PolyMatrix hilbert_burch, std::vector<Polynomial> p_row,
            std::vector<Polynomial> f_col, Polynomial h)
        : A_(std::move(hilbert_burch)), p_row_(std::move(p_row)),
          f_col_(std::move(f_col)), h_(std::move(h)),
          B_(0, 0, A_.ring(), A_.prime()) {
        validate_and_assemble();
    }

    int s() const { return A_.rows(); }
    std::uint32_t prime() const { return A_.prime(); }
    const PolyMatrix& hilbert_burch() const { return A_; }
    const std::vector<Polynomial>& p_row() const { return p_row_; }
    const std::vector<Polynomial>& f_col() const { return f_col_; }
    const Polynomial& h() const { return h_; }
    const PolyMatrix& assembled() const { return B_; }
    const MatrixGrading& grading() const { return grading_; }

    // the square stack [A over p_row], i.e. B without its last column
    PolyMatrix stack() const { return B_.without_column(s() + 1); }

    // B minus its last row: the presentation matrix M = [A | f_1..f_s]
    PolyMatrix m_matrix() const {
        if (s() < 1) throw Error("the matrix M requires s >= 1");
        PolyMatrix m(s(), s() + 2, A_.ring(), A_.prime());
        for (int i = 0; i < s(); ++i) {
            for (int j = 0; j <= s(); ++j) m.set(i, j, A_.at(i, j));
            m.set(i, s() + 1, f_col_[static_cast<std::size_t>(i)]);
        }
        return m;
    }

    // maximal minors A_i (index deleting column i, 0-based); det of the empty
    // matrix is 1, which covers s = 0
    Polynomial a_minor(int i) const { return maximal_minor(A_, i); }
    // maximal minors B_i of the full matrix
    Polynomial b_minor(int i) const { return maximal_minor(B_, i); }

    int forced_a_minor_degree(int j) const {
        std::vector<int> rows, cols;
        for (int i = 0; i < s(); ++i) rows.push_back(i);
        for (int c = 0; c <= s(); ++c)
            if (c != j) cols.push_back(c);
        return grading_.minor_degree(rows, cols);
    }

    // sum of the top-block row weights minus the A-column weights; the forced
    // minor degree is deg A_j = hb_weight_sum() + col weight j
    int hb_weight_sum() const {
        int d_a = 0;
        for (int i = 0; i < s(); ++i) d_a += grading_.row[static_cast<std::size_t>(i)];
        for (int j = 0; j <= s(); ++j) d_a -= grading_.col[static_cast<std::size_t>(j)];
        return d_a;
    }

    int required_h_degree() const {
        // deg f_1 - (deg a_{1,1} + sum_j deg a_{j,j+1} - 1), in forced degrees
        return 1 - hb_weight_sum() - grading_.col[static_cast<std::size_t>(s() + 1)];
    }

    // generator degrees b_i of the syzygy module in the Hilbert-Burch
    // resolution 0 -> sum S(-b_i) -> sum S(-deg A_j) -> I_{Z,H} -> 0
    std::vector<int> syzygy_twists() const {
        std::vector<int> b;
        int d_a = hb_weight_sum();
        for (int i = 0; i < s(); ++i)
            b.push_back(grading_.row[static_cast<std::size_t>(i)] + d_a);
        return b;
    }

private:
    void validate_and_assemble() {
        const Ring ring = A_.ring();
        const std::uint32_t p = A_.prime();
        if (ring != Ring::S) throw Error("B-matrix data must live in S = k[y,z,t]");
        const int s = A_.rows();
        if (s < 0 || A_.cols() != s + 1)
            throw Error("Hilbert-Burch block must be s x (s+1)");
        if (static_cast<int>(p_row_.size()) != s + 1 ||
            static_cast<int>(f_col_.size()) != s + 1)
            throw Error("p-row and f-column must have length s+1");
        for (const auto& f : p_row_)
            if (f.ring() != ring || f.prime() != p) throw Error("p-row entry from the wrong ring");
        for (const auto& f : f_col_)
            if (f.ring() != ring || f.prime() != p) throw Error("f-column entry from the wrong ring");
        if (h_.ring() != ring || h_.prime() != p) throw Error("h from the wrong ring");
        if (h_.is_zero()) throw Error("h must be nonzero");
        if (!h_.is_homogeneous()) throw Error("h must be homogeneous");

        B_ = PolyMatrix(s + 1, s + 2, ring, p);
        for (int i = 0; i < s; ++i) {
            for (int j = 0; j <= s; ++j) B_.set(i, j, A_.at(i, j));
            B_.set(i, s + 1, f_col_[static_cast<std::size_t>(i)]);
        }
        for (int j = 0; j <= s; ++j) B_.set(s, j, p_row_[static_cast<std::size_t>(j)]);
        B_.set(s, s + 1, f_col_[static_cast<std::size_t>(s)]);

        grading_ = infer_grading(B_);

        if (s >= 1) {
            // the maximal minors of A must cut out a zero-dimensional subscheme
            Ideal iz(ring, p, minors(A_, s));
            if (codimension(iz) != 2)
                throw Error("Hilbert-Burch condition failed: the maximal minors of A "
                            "do not have codimension 2");
        }

        int want_h = required_h_degree();
        if (want_h < 0)
            throw Error("degree condition violated: deg f_1 must be at least "
                        "deg a_{1,1} + sum_j deg a_{j,j+1} - 1");
        if (h_.degree() != want_h)
            throw Error("h has degree " + std::to_string(h_.degree()) +
                        " but the grading forces degree " + std::to_string(want_h));

        // degree guards on the f-column
        for (int i = 0; i < s; ++i)
            for (int j = 0; j <= s; ++j) {
                int f_deg = grading_.row[static_cast<std::size_t>(i)] -
                            grading_.col[static_cast<std::size_t>(s + 1)];
                int a_deg = grading_.row[static_cast<std::size_t>(i)] -
                            grading_.col[static_cast<std::size_t>(j)];
                if (f_deg < a_deg)
                    throw Error("degree guard violated: deg f_i < deg a_{i,j}");
                if (f_deg == a_deg && !(forced_a_minor_degree(j) == 1 && s == 1))
                    throw Error("degree guard violated: deg f_i = deg a_{i,j} "
                                "requires deg A_j = 1 and s = 1");
            }
    }

    PolyMatrix A_;
    std::vector<Polynomial> p_row_;
    std::vector<Polynomial> f_col_;
    Polynomial h_;
    PolyMatrix B_;
    MatrixGrading grading_;
};

// p = (-1)^s det [A over p-row]; fails when the determinant vanishes.
inline Polynomial compute_p(const BMatrix& b) {
    Polynomial det = determinant(b.stack());
    if (b.s() % 2 == 1) det = det.negated();
    if (det.is_zero())
        throw Error("degenerate p: the stacked matrix [A; p-row] has zero determinant");
    return det;
}

// The triple of nested subschemes cut out by the normal form, with its
// numerical invariants.
struct Triple {
    Ideal residual_points;   // I_{Z,H} in S, generated by the minors of A
    Ideal residual_curve;    // I_{C'} = (x, p) in R
    Ideal planar_part;       // I_P = (x, p h) in R
    int delta = 0;           // deg C' = deg p
    int deg_h = 0;
    int d = 0;               // d = 2*delta + deg h
    int deg_z = 0;           // length of Z
    long long genus = 0;
};

inline long long genus_formula(int d, int delta, int deg_z) {
    auto choose2 = [](long long k) { return k >= 2 ? k * (k - 1) / 2 : 0; };
    return choose2(d - delta - 1) + choose2(delta - 1) + delta - deg_z - 1;
}

// The ideal J = (x^2, xp, (-1)^{i-1} p h A_i + x G_i) in R, together with the
// data it was built from. The default relations are G_i = (-1)^{i-1} B_i;
// custom relation vectors cover the general shape of such ideals.
class CurveIdeal {
public:
    static CurveIdeal build(const BMatrix& b) {
        std::vector<Polynomial> relations;
        for (int i = 0; i <= b.s(); ++i) {
            Polynomial g = b.b_minor(i);
            if (i % 2 == 1) g = g.negated();
            relations.push_back(std::move(g));
        }
        return CurveIdeal(b, std::move(relations), false);
    }

    static CurveIdeal build_with_relations(const BMatrix& b,
                                           std::vector<Polynomial> relations) {
        if (static_cast<int>(relations.size()) != b.s() + 1)
            throw Error("relation vector must have length s+1");
        for (const auto& g : relations)
            if (g.ring() != Ring::S || g.prime() != b.prime())
                throw Error("relation entry from the wrong ring");
        return CurveIdeal(b, std::move(relations), true);
    }

    const BMatrix& source() const { return b_; }
    int s() const { return b_.s(); }
    std::uint32_t prime() const { return b_.prime(); }
    const Polynomial& p() const { return p_; }
    const Polynomial& h() const { return b_.h(); }
    const std::vector<Polynomial>& relations() const { return relations_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    const Ideal& ideal() const { return ideal_; }
    bool has_custom_relations() const { return custom_; }

    Polynomial x() const { return Polynomial::variable(Ring::R, 0, prime()); }

    Ideal residual_curve_ideal() const {  // (x, p) in R
        return Ideal(Ring::R, prime(), {x(), lift(p_, Ring::R)});
    }

private:
    CurveIdeal(const BMatrix& b, std::vector<Polynomial> relations, bool custom)
        : b_(b), p_(compute_p(b)), relations_(std::move(relations)),
          ideal_(Ring::R, b.prime()), custom_(custom),
          residual_cell_(std::make_shared<ResidualCell>()) {
        if (p_.degree() < 1)
            throw Error("p is a nonzero constant: the residual curve is degenerate");
        const std::uint32_t pr = prime();
        Polynomial xv = Polynomial::variable(Ring::R, 0, pr);
        Polynomial pR = lift(p_, Ring::R);
        Polynomial phR = lift(p_ * b_.h(), Ring::R);
        gens_.push_back(xv * xv);
        gens_.push_back(xv * pR);
        for (int i = 0; i <= b_.s(); ++i) {
            // distinguished generator p h A_i + x  (-1)^{i-1} G_i; for the
            // default relations G_i = (-1)^{i-1} B_i this is p h A_i + x B_i
            Polynomial gi = relations_[static_cast<std::size_t>(i)];
            if (i % 2 == 1) gi = gi.negated();
            gens_.push_back(phR * lift(b_.a_minor(i), Ring::R) + xv * lift(gi, Ring::R));
        }
        ideal_ = Ideal(Ring::R, pr, gens_);
    }

    struct ResidualCell {
        std::once_flag flag;
        bool value = false;
    };

    BMatrix b_;
    Polynomial p_;
    std::vector<Polynomial> relations_;
    std::vector<Polynomial> gens_;
    Ideal ideal_;
    bool custom_;
    std::shared_ptr<ResidualCell> residual_cell_;

    friend bool verify_expected_residual(const CurveIdeal& c);
};

inline CurveIdeal build_curve_ideal(const BMatrix& b) { return CurveIdeal::build(b); }

// J behaves like the ideal of a curve in the double plane iff
//   J : x = (x, p)   and   J + xR = xR + p h (A_1,...,A_{s+1}) R,
// both decided through reduced Groebner bases.
inline bool verify_expected_residual(const CurveIdeal& c) {
    std::call_once(c.residual_cell_->flag, [&c] {
        const std::uint32_t pr = c.prime();
        Polynomial xv = c.x();
        Ideal quot = ideal_quotient(c.ideal(), xv);
        bool ok = quot == c.residual_curve_ideal();
        if (ok) {
            Ideal lhs = c.ideal().plus({xv});
            std::vector<Polynomial> rhs_gens{xv};
            Polynomial phR = lift(c.p() * c.h(), Ring::R);
            for (int i = 0; i <= c.s(); ++i)
                rhs_gens.push_back(phR * lift(c.source().a_minor(i), Ring::R));
            ok = lhs == Ideal(Ring::R, pr, std::move(rhs_gens));
        }
        c.residual_cell_->value = ok;
    });
    return c.residual_cell_->value;
}

// The three equivalent characterizations, evaluated independently:
//   quotient:       J : x = (x, p)
//   division:       A * (G_1..G_{s+1})^t = p * (f_1..f_s)^t for some f_i
//   reconstruction: the G_i are the signed maximal minors of some valid B
struct GoodResidualReport {
    bool quotient_condition = false;
    bool division_condition = false;
    bool reconstruction_condition = false;
    bool all_agree = false;
    std::vector<Polynomial> recovered_f;  // the f_1..f_s from the division route
};

inline GoodResidualReport check_good_residual_equivalences(const CurveIdeal& c) {
    GoodResidualReport rep;
    const std::uint32_t pr = c.prime();
    const int s = c.s();

    rep.quotient_condition =
        ideal_quotient(c.ideal(), c.x()) == c.residual_curve_ideal();

    // division route: multiply the rows of A into the relation vector
    const PolyMatrix& a = c.source().hilbert_burch();
    rep.division_condition = true;
    for (int i = 0; i < s && rep.division_condition; ++i) {
        Polynomial dot = Polynomial::zero(Ring::S, pr);
        for (int j = 0; j <= s; ++j)
            dot = dot + a.at(i, j) * c.relations()[static_cast<std::size_t>(j)];
        if (dot.is_zero()) {
            rep.recovered_f.push_back(dot);
            continue;
        }
        auto q = try_divide_exact(dot, c.p());
        if (q)
            rep.recovered_f.push_back(std::move(*q));
        else
            rep.division_condition = false;
    }
    if (!rep.division_condition) rep.recovered_f.clear();

    // reconstruction route: recover the full f-column by Cramer and compare
    // the relations against the signed minors of the rebuilt matrix
    rep.reconstruction_condition = true;
    std::vector<Polynomial> f_cand;
    const PolyMatrix st = c.source().stack();
    for (int i = 0; i <= s && rep.reconstruction_condition; ++i) {
        Polynomial dot = Polynomial::zero(Ring::S, pr);
        for (int j = 0; j <= s; ++j)
            dot = dot + st.at(i, j) * c.relations()[static_cast<std::size_t>(j)];
        if (dot.is_zero()) {
            f_cand.push_back(dot);
            continue;
        }
        auto q = try_divide_exact(dot, c.p());
        if (q)
            f_cand.push_back(std::move(*q));
        else
            rep.reconstruction_condition = false;
    }
    if (rep.reconstruction_condition) {
        // homogeneity of the candidate column against the stack grading
        const MatrixGrading& g = c.source().grading();
        std::optional<int> fcol_weight;
        for (int i = 0; i <= s && rep.reconstruction_condition; ++i) {
            const Polynomial& f = f_cand[static_cast<std::size_t>(i)];
            if (f.is_zero()) continue;
            if (!f.is_homogeneous()) { rep.reconstruction_condition = false; break; }
            int w = g.row[static_cast<std::size_t>(i)] - f.degree();
            if (!fcol_weight)
                fcol_weight = w;
            else if (*fcol_weight != w)
                rep.reconstruction_condition = false;
        }
        if (rep.reconstruction_condition) {
            PolyMatrix rebuilt(s + 1, s + 2, Ring::S, pr);
            for (int i = 0; i <= s; ++i) {
                for (int j = 0; j <= s; ++j) rebuilt.set(i, j, st.at(i, j));
                rebuilt.set(i, s + 1, f_cand[static_cast<std::size_t>(i)]);
            }
            for (int i = 0; i <= s && rep.reconstruction_condition; ++i) {
                Polynomial minor = maximal_minor(rebuilt, i);
                if (i % 2 == 1) minor = minor.negated();
                if (!(minor == c.relations()[static_cast<std::size_t>(i)]))
                    rep.reconstruction_condition = false;
            }
        }
    }

    rep.all_agree = (rep.quotient_condition == rep.division_condition) &&
                    (rep.quotient_condition == rep.reconstruction_condition);
    return rep;
}

// h p^2 always lies in an ideal with the expected residual behavior.
inline bool check_hp2(const CurveIdeal& c) {
    if (!verify_expected_residual(c))
        throw Error("hp^2 membership requires the expected residual sequence");
    Polynomial hp2 = lift(c.h() * c.p() * c.p(), Ring::R);
    return c.ideal().contains(hp2);
}

inline int stabilized_point_degree(const Ideal& residual_points, int start) {
    int n = start < 0 ? 0 : start;
    int v0 = hilbert_function(residual_points, n);
    int v1 = hilbert_function(residual_points, n + 1);
    for (;;) {
        int v2 = hilbert_function(residual_points, n + 2);
        if (v0 == v1 && v1 == v2) return v0;
        v0 = v1;
        v1 = v2;
        ++n;
        if (n > 512) throw Error("Hilbert function of Z failed to stabilize");
    }
}

inline Triple extract_triple(const CurveIdeal& c) {
    const std::uint32_t pr = c.prime();
    std::vector<Polynomial> zgens;
    for (int i = 0; i <= c.s(); ++i) zgens.push_back(c.source().a_minor(i));
    Ideal iz(Ring::S, pr, std::move(zgens));
    Polynomial xv = c.x();
    Ideal icp(Ring::R, pr, {xv, lift(c.p(), Ring::R)});
    Ideal ip(Ring::R, pr, {xv, lift(c.p() * c.h(), Ring::R)});

    Triple t{iz, icp, ip};
    t.delta = c.p().degree();
    t.deg_h = c.h().degree();
    t.d = 2 * t.delta + t.deg_h;
    if (c.s() >= 1) {
        int start = 0;
        for (int j = 0; j <= c.s(); ++j)
            start = std::max(start, c.source().forced_a_minor_degree(j));
        t.deg_z = stabilized_point_degree(iz, start);
    } else {
        t.deg_z = 0;  // empty residual zero-scheme
    }
    t.genus = genus_formula(t.d, t.delta, t.deg_z);
    return t;
}

// The scheme is an honest curve (locally Cohen-Macaulay) iff the maximal
// minors of M = [A | f_1..f_s] have no common zero in the plane.
inline bool is_curve(const CurveIdeal& c) {
    if (c.s() < 1)
        throw Error("the curve criterion requires s >= 1");
    PolyMatrix m = c.source().m_matrix();
    return is_irrelevant(minors_ideal_of(m, c.s()));
}

// Elementary row operations on B.
struct RowOp {
    enum class Kind { Scale, AddMultiple } kind;
    int row = 0;                       // scaled row, or destination row
    FieldElement factor;               // Scale only; nonzero
    int src_row = 0;                   // AddMultiple only
    Polynomial multiplier;             // AddMultiple only; homogeneous in S

    static RowOp scale(int row, FieldElement c) {
        RowOp op{Kind::Scale, row, c, 0, Polynomial::zero(Ring::S, c.modulus())};
        return op;
    }
    static RowOp add_multiple(int dst, int src, Polynomial q) {
        RowOp op{Kind::AddMultiple, dst, FieldElement(1, q.prime()), src, std::move(q)};
        return op;
    }
};

inline BMatrix apply_row_op(const BMatrix& b, const RowOp& op) {
    const int rows = b.s() + 1;
    const PolyMatrix& B = b.assembled();
    PolyMatrix out = B;
    if (op.kind == RowOp::Kind::Scale) {
        if (op.row < 0 || op.row >= rows) throw Error("row index out of range");
        if (op.factor.is_zero()) throw Error("row scaling by zero");
        for (int j = 0; j < B.cols(); ++j)
            out.set(op.row, j, B.at(op.row, j).scaled(op.factor));
    } else {
        if (op.row < 0 || op.row >= rows || op.src_row < 0 || op.src_row >= rows)
            throw Error("row index out of range");
        if (op.row == op.src_row) throw Error("source and destination rows coincide");
        const Polynomial& q = op.multiplier;
        if (!q.is_zero()) {
            if (!q.is_homogeneous()) throw Error("row operation multiplier must be homogeneous");
            int want = b.grading().row[static_cast<std::size_t>(op.row)] -
                       b.grading().row[static_cast<std::size_t>(op.src_row)];
            if (q.degree() != want)
                throw Error("row operation multiplier has degree " +
                            std::to_string(q.degree()) + " but the grading forces " +
                            std::to_string(want));
            for (int j = 0; j < B.cols(); ++j)
                out.set(op.row, j, B.at(op.row, j) + q * B.at(op.src_row, j));
        }
    }
    // reassemble through the public constructor so all invariants re-run
    const int s = b.s();
    PolyMatrix a(s, s + 1, Ring::S, b.prime());
    std::vector<Polynomial> prow, fcol;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j <= s; ++j) a.set(i, j, out.at(i, j));
    for (int j = 0; j <= s; ++j) prow.push_back(out.at(s, j));
    for (int i = 0; i <= s; ++i) fcol.push_back(out.at(i, s + 1));
    return BMatrix(std::move(a), std::move(prow), std::move(fcol), b.h());
}

struct RowOpResult {
    bool same_ideal = false;
    // true when the operation adds a multiple of the last row to one of the
    // first s rows, which may legitimately change the curve
    bool may_change_curve = false;
    // Scaling one of the first s rows by a unit c does not fix J itself but
    // carries it into the coordinate change x -> c^{-1} x; this reports that
    // weaker equality for scale operations.
    std::optional<bool> same_up_to_x_rescaling;
};

// True when rebuilding J after the operation provably yields the same ideal:
// additions are allowed except last-row-into-top-block, and only the last row
// may be rescaled.
inline bool row_op_preserves_ideal(const BMatrix& b, const RowOp& op) {
    if (op.kind == RowOp::Kind::Scale) return op.row == b.s();
    return !(op.src_row == b.s() && op.row < b.s());
}

inline RowOpResult row_equivalence_test(const BMatrix& b, const RowOp& op) {
    RowOpResult r;
    r.may_change_curve = op.kind == RowOp::Kind::AddMultiple &&
                         op.src_row == b.s() && op.row < b.s();
    CurveIdeal before = build_curve_ideal(b);
    CurveIdeal after = build_curve_ideal(apply_row_op(b, op));
    r.same_ideal = before.ideal() == after.ideal();
    if (op.kind == RowOp::Kind::Scale && op.row < b.s()) {
        FieldElement u = op.factor.inverse();
        std::vector<Polynomial> moved;
        for (const auto& g : before.generators())
            moved.push_back(scale_variable(g, 0, u));
        r.same_up_to_x_rescaling =
            Ideal(Ring::R, b.prime(), std::move(moved)) == after.ideal();
    }
    return r;
}

}  // namespace doubleplane
