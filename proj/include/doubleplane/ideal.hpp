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
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "doubleplane/matrix.hpp"
#include "doubleplane/polynomial.hpp"

namespace doubleplane {

namespace detail {

// Full normal form of f against a set of monic reducers.
inline Polynomial normal_form(const Polynomial& f,
                              const std::vector<Polynomial>& basis) {
    if (f.is_zero() || basis.empty()) return f;
    const std::uint32_t p = f.prime();
    Polynomial work = f;
    std::vector<Term> out;
    while (!work.is_zero()) {
        const Monomial& lm = work.leading_monomial();
        const Polynomial* red = nullptr;
        for (const auto& g : basis) {
            if (g.leading_monomial().divides(lm)) { red = &g; break; }
        }
        if (red) {
            Monomial m = red->leading_monomial().divide_into(lm);
            work = work - red->times_term(m, work.leading_coeff());
        } else {
            out.push_back(work.terms().front());
            // continue with the tail
            Polynomial tail(work.ring(), p);
            tail = work - Polynomial::term(work.terms().front().mono,
                                           work.terms().front().coeff, p);
            work = std::move(tail);
        }
    }
    return Polynomial::from_terms(f.ring(), p, std::move(out));
}

struct SPair {
    int i, j;
    Monomial lcm_mono;
};

// Buchberger with the Gebauer-Moeller pair criteria; basis kept monic.
inline std::vector<Polynomial> buchberger(std::vector<Polynomial> gens) {
    if (gens.empty()) return gens;
    std::vector<Polynomial> basis;
    std::vector<SPair> pairs;

    auto add_element = [&](Polynomial g) {
        const int t = static_cast<int>(basis.size());
        const Monomial& lmt = g.leading_monomial();
        // discard old pairs strictly superseded by the newcomer
        std::vector<SPair> kept;
        kept.reserve(pairs.size());
        for (auto& pr : pairs) {
            const Monomial& lij = pr.lcm_mono;
            if (lmt.divides(lij) &&
                !(lcm(basis[static_cast<std::size_t>(pr.i)].leading_monomial(), lmt) == lij) &&
                !(lcm(basis[static_cast<std::size_t>(pr.j)].leading_monomial(), lmt) == lij))
                continue;
            kept.push_back(std::move(pr));
        }
        pairs = std::move(kept);

        // candidate pairs with the newcomer
        std::vector<SPair> cand;
        cand.reserve(basis.size());
        for (int i = 0; i < t; ++i)
            cand.push_back({i, t, lcm(basis[static_cast<std::size_t>(i)].leading_monomial(), lmt)});
        // keep only pairs with order-minimal lcm among those dividing them
        std::vector<bool> drop(cand.size(), false);
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (drop[a]) continue;
            for (std::size_t b = 0; b < cand.size(); ++b) {
                if (a == b || drop[a]) continue;
                if (drop[b]) continue;
                if (cand[b].lcm_mono.divides(cand[a].lcm_mono)) {
                    if (!(cand[b].lcm_mono == cand[a].lcm_mono) || b < a) drop[a] = true;
                }
            }
        }
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (drop[a]) continue;
            if (coprime(basis[static_cast<std::size_t>(cand[a].i)].leading_monomial(), lmt))
                continue;  // Buchberger's product criterion
            pairs.push_back(std::move(cand[a]));
        }
        basis.push_back(std::move(g));
    };

    // lightly interreduce the inputs before the main loop
    std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
        if (a.is_zero()) return false;
        if (b.is_zero()) return true;
        return mono_less(a.leading_monomial(), b.leading_monomial());
    });
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        Polynomial r = normal_form(g, basis);
        if (!r.is_zero()) add_element(r.monic());
    }

    while (!pairs.empty()) {
        std::size_t best = 0;
        for (std::size_t a = 1; a < pairs.size(); ++a)
            if (mono_less(pairs[a].lcm_mono, pairs[best].lcm_mono)) best = a;
        SPair pr = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

        const Polynomial& fi = basis[static_cast<std::size_t>(pr.i)];
        const Polynomial& fj = basis[static_cast<std::size_t>(pr.j)];
        Monomial mi = fi.leading_monomial().divide_into(pr.lcm_mono);
        Monomial mj = fj.leading_monomial().divide_into(pr.lcm_mono);
        Polynomial s = fi.times_term(mi, 1) - fj.times_term(mj, 1);
        Polynomial r = normal_form(s, basis);
        if (!r.is_zero()) add_element(r.monic());
    }

    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<Polynomial> minimal;
    for (std::size_t a = 0; a < basis.size(); ++a) {
        bool redundant = false;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (a == b) continue;
            const Monomial& la = basis[a].leading_monomial();
            const Monomial& lb = basis[b].leading_monomial();
            if (lb.divides(la) && (!(lb == la) || b < a)) { redundant = true; break; }
        }
        if (!redundant) minimal.push_back(basis[a]);
    }
    // tail-reduce into the canonical reduced basis
    std::vector<Polynomial> reduced;
    for (std::size_t a = 0; a < minimal.size(); ++a) {
        std::vector<Polynomial> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t b = 0; b < minimal.size(); ++b)
            if (b != a) others.push_back(minimal[b]);
        reduced.push_back(normal_form(minimal[a], others).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
        return mono_less(a.leading_monomial(), b.leading_monomial());
    });
    return reduced;
}

}  // namespace detail

// Finitely generated ideal with a lazily cached reduced Groebner basis.
// Values are immutable; the cache cell is shared across copies and filled
// at most once.
class Ideal {
public:
    Ideal(Ring ring, std::uint32_t prime, std::vector<Polynomial> gens = {})
        : ring_(ring), prime_(prime), gens_(std::move(gens)),
          cell_(std::make_shared<Cell>()) {
        for (const auto& g : gens_)
            if (g.ring() != ring_ || g.prime() != prime_)
                throw Error("ideal generator from the wrong ring");
    }

    Ring ring() const { return ring_; }
    std::uint32_t prime() const { return prime_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    const std::vector<Polynomial>& groebner_basis() const {
        std::call_once(cell_->flag, [this] { cell_->gb = detail::buchberger(gens_); });
        return cell_->gb;
    }

    Polynomial normal_form(const Polynomial& f) const {
        if (f.ring() != ring_ || f.prime() != prime_)
            throw Error("ring mismatch in normal form");
        return detail::normal_form(f, groebner_basis());
    }

    bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

    bool is_zero_ideal() const { return groebner_basis().empty(); }
    bool is_unit_ideal() const {
        const auto& gb = groebner_basis();
        return gb.size() == 1 && gb[0].is_unit();
    }

    // reduced bases are canonical, so this decides ideal equality
    friend bool operator==(const Ideal& a, const Ideal& b) {
        if (a.ring_ != b.ring_ || a.prime_ != b.prime_) return false;
        return a.groebner_basis() == b.groebner_basis();
    }
    friend bool operator!=(const Ideal& a, const Ideal& b) { return !(a == b); }

    Ideal plus(const std::vector<Polynomial>& more) const {
        std::vector<Polynomial> g = gens_;
        g.insert(g.end(), more.begin(), more.end());
        return Ideal(ring_, prime_, std::move(g));
    }

private:
    struct Cell {
        std::once_flag flag;
        std::vector<Polynomial> gb;
    };

    Ring ring_;
    std::uint32_t prime_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cell> cell_;
};

// The reduced Groebner basis, repackaged as an ideal (idempotent).
inline Ideal groebner(const Ideal& ideal) {
    return Ideal(ideal.ring(), ideal.prime(), ideal.groebner_basis());
}

inline bool membership(const Polynomial& f, const Ideal& ideal) {
    return ideal.contains(f);
}

// I cap J through a single auxiliary variable w and a block order:
// w*I + (1-w)*J, then discard everything containing w.
inline Ideal intersect(const Ideal& a, const Ideal& b) {
    if (a.ring() != b.ring() || a.prime() != b.prime())
        throw Error("ring mismatch in ideal intersection");
    const Ring base = a.ring();
    const Ring ext = elim_extension(base);
    const std::uint32_t p = a.prime();
    Polynomial w = Polynomial::variable(ext, 0, p);
    Polynomial one_minus_w = Polynomial::constant(1, ext, p) - w;
    std::vector<Polynomial> gens;
    for (const auto& g : a.generators()) gens.push_back(w * lift(g, ext));
    for (const auto& g : b.generators()) gens.push_back(one_minus_w * lift(g, ext));
    Ideal big(ext, p, std::move(gens));
    std::vector<Polynomial> down;
    for (const auto& g : big.groebner_basis())
        if (!contains_variable(g, 0)) down.push_back(restrict_to(g, base));
    return Ideal(base, p, std::move(down));
}

// Colon ideal I : f, computed as (I cap (f)) / f.
inline Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f) {
    if (f.is_zero()) throw Error("ideal quotient by zero");
    if (f.ring() != ideal.ring() || f.prime() != ideal.prime())
        throw Error("ring mismatch in ideal quotient");
    Ideal inter = intersect(ideal, Ideal(ideal.ring(), ideal.prime(), {f}));
    std::vector<Polynomial> out;
    for (const auto& g : inter.generators()) {
        auto q = try_divide_exact(g, f);
        if (!q) throw Error("intersection element not divisible in ideal quotient");
        out.push_back(std::move(*q));
    }
    return Ideal(ideal.ring(), ideal.prime(), std::move(out));
}

// Saturation test against the irrelevant maximal ideal m of all variables:
// I is saturated iff I : m = I, with I : m the intersection of the I : v.
// A single variable with I : v = I already settles the question.
inline bool saturation_check(const Ideal& ideal) {
    const Ring ring = ideal.ring();
    const int n = var_count(ring);
    std::vector<Ideal> quotients;
    for (int v = 0; v < n; ++v) {
        Polynomial var = Polynomial::variable(ring, v, ideal.prime());
        Ideal q = ideal_quotient(ideal, var);
        if (q == ideal) return true;
        quotients.push_back(std::move(q));
    }
    Ideal meet = quotients[0];
    for (std::size_t i = 1; i < quotients.size(); ++i)
        meet = intersect(meet, quotients[i]);
    return meet == ideal;
}

// Krull dimension of ring/I for the affine cone, read combinatorially off
// the initial ideal: the largest set of variables meeting no lead support.
inline int dimension(const Ideal& ideal) {
    const auto& gb = ideal.groebner_basis();
    const int n = var_count(ideal.ring());
    if (!gb.empty() && gb[0].is_unit()) return -1;
    std::vector<unsigned> supports;
    for (const auto& g : gb) {
        unsigned s = 0;
        for (int i = 0; i < n; ++i)
            if (g.leading_monomial().exp(i)) s |= 1u << i;
        supports.push_back(s);
    }
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (unsigned s : supports)
            if ((s & ~mask) == 0) { independent = false; break; }
        if (independent) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

inline int codimension(const Ideal& ideal) {
    return var_count(ideal.ring()) - dimension(ideal);
}

// An ideal of S is irrelevant when its zero set in the plane is empty,
// i.e. the affine cone over it is a point (or empty).
inline bool is_irrelevant(const Ideal& ideal) {
    if (ideal.ring() != Ring::S) throw Error("irrelevance test expects an ideal of S");
    return dimension(ideal) <= 0;
}

namespace detail {

inline void monomials_of_degree_rec(Ring ring, int var, int remaining,
                                    Monomial& cur, std::vector<Monomial>& out) {
    const int n = var_count(ring);
    if (var == n - 1) {
        cur.set_exp(var, remaining);
        out.push_back(cur);
        cur.set_exp(var, 0);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur.set_exp(var, e);
        monomials_of_degree_rec(ring, var + 1, remaining - e, cur, out);
    }
    cur.set_exp(var, 0);
}

inline std::vector<Monomial> monomials_of_degree(Ring ring, int n) {
    std::vector<Monomial> out;
    if (n < 0) return out;
    Monomial cur(ring);
    monomials_of_degree_rec(ring, 0, n, cur, out);
    return out;
}

inline std::uint64_t packed_key(const Monomial& m) {
    std::uint64_t k = 0;
    for (int i = 0; i < m.vars(); ++i)
        k = (k << 9) | static_cast<std::uint64_t>(m.exp(i));
    return k;
}

struct MonomialIndexer {
    explicit MonomialIndexer(std::vector<Monomial> ms) : list(std::move(ms)) {
        for (std::size_t i = 0; i < list.size(); ++i)
            index.emplace(packed_key(list[i]), i);
    }
    std::size_t at(const Monomial& m) const {
        auto it = index.find(packed_key(m));
        if (it == index.end()) throw Error("monomial outside the indexed basis");
        return it->second;
    }
    std::vector<Monomial> list;
    std::unordered_map<std::uint64_t, std::size_t> index;
};

// Streaming Gaussian elimination over F_p with dense rows.
class RowReducer {
public:
    RowReducer(std::size_t cols, std::uint32_t p) : cols_(cols), p_(p) {}

    // reduces in place; returns false when the row drops to zero
    bool reduce(std::vector<std::uint32_t>& row) const {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!row[c]) continue;
            auto it = pivots_.find(c);
            if (it == pivots_.end()) return true;
            const auto& pr = rows_[it->second];
            std::uint32_t f = row[c];
            for (std::size_t k = c; k < cols_; ++k)
                if (pr[k]) row[k] = mod_sub(row[k], mod_mul(f, pr[k], p_), p_);
        }
        return false;
    }

    bool add(std::vector<std::uint32_t> row) {
        if (!reduce(row)) return false;
        std::size_t c = 0;
        while (c < cols_ && !row[c]) ++c;
        std::uint32_t inv = mod_inv(row[c], p_);
        for (std::size_t k = c; k < cols_; ++k)
            if (row[k]) row[k] = mod_mul(row[k], inv, p_);
        pivots_.emplace(c, rows_.size());
        rows_.push_back(std::move(row));
        return true;
    }

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

private:
    std::size_t cols_;
    std::uint32_t p_;
    std::unordered_map<std::size_t, std::size_t> pivots_;
    std::vector<std::vector<std::uint32_t>> rows_;
};

inline std::vector<std::uint32_t> coefficient_row(const Polynomial& f,
                                                  const MonomialIndexer& basis) {
    std::vector<std::uint32_t> row(basis.list.size(), 0);
    for (const auto& t : f.terms()) row[basis.at(t.mono)] = t.coeff;
    return row;
}

}  // namespace detail

// Graded dimension of (ring/I)_n via the initial ideal (fast path).
inline int hilbert_function(const Ideal& ideal, int n) {
    if (n < 0) throw Error("Hilbert function argument must be non-negative");
    const auto& gb = ideal.groebner_basis();
    auto monos = detail::monomials_of_degree(ideal.ring(), n);
    int count = 0;
    for (const auto& m : monos) {
        bool in_initial = false;
        for (const auto& g : gb)
            if (g.leading_monomial().divides(m)) { in_initial = true; break; }
        if (!in_initial) ++count;
    }
    return count;
}

// Independent slow path: the degree-n piece of I is spanned by monomial
// multiples of the generators; its rank is computed by plain linear algebra
// without any Groebner machinery.
inline int hilbert_function_bruteforce(const Ideal& ideal, int n) {
    if (n < 0) throw Error("Hilbert function argument must be non-negative");
    for (const auto& g : ideal.generators())
        if (!g.is_homogeneous())
            throw Error("brute-force Hilbert function expects homogeneous generators");
    detail::MonomialIndexer basis(detail::monomials_of_degree(ideal.ring(), n));
    detail::RowReducer red(basis.list.size(), ideal.prime());
    for (const auto& g : ideal.generators()) {
        if (g.is_zero()) continue;
        int dg = g.degree();
        if (dg > n) continue;
        for (const auto& m : detail::monomials_of_degree(ideal.ring(), n - dg))
            red.add(detail::coefficient_row(g.times_term(m, 1), basis));
    }
    return static_cast<int>(basis.list.size() - red.rank());
}

// Rabinowitsch trick: g lies in rad(I) iff 1 in I + (1 - w g).
inline bool radical_contains(const Ideal& ideal, const Polynomial& g) {
    if (g.is_zero()) return true;
    const Ring ext = elim_extension(ideal.ring());
    const std::uint32_t p = ideal.prime();
    std::vector<Polynomial> gens;
    for (const auto& f : ideal.generators()) gens.push_back(lift(f, ext));
    Polynomial w = Polynomial::variable(ext, 0, p);
    gens.push_back(Polynomial::constant(1, ext, p) - w * lift(g, ext));
    return Ideal(ext, p, std::move(gens)).is_unit_ideal();
}

inline Ideal minors_ideal_of(const PolyMatrix& m, int order) {
    return Ideal(m.ring(), m.prime(), minors(m, order));
}

}  // namespace doubleplane
