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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "doubleplane/field.hpp"
#include "doubleplane/monomial.hpp"

namespace doubleplane {

struct Term {
    Monomial mono;
    std::uint32_t coeff;  // nonzero, reduced mod the polynomial's prime
};

// Sparse polynomial in canonical form: terms strictly descending in the
// monomial order, no zero coefficients.
class Polynomial {
public:
    Polynomial(Ring ring, std::uint32_t prime) : ring_(ring), prime_(prime) {}

    static Polynomial zero(Ring ring, std::uint32_t prime) {
        return Polynomial(ring, prime);
    }
    static Polynomial constant(std::int64_t c, Ring ring, std::uint32_t prime) {
        Polynomial f(ring, prime);
        FieldElement fe(c, prime);
        if (!fe.is_zero()) f.terms_.push_back({one_monomial(ring), fe.value()});
        return f;
    }
    static Polynomial term(const Monomial& m, std::int64_t c, std::uint32_t prime) {
        Polynomial f(m.ring(), prime);
        FieldElement fe(c, prime);
        if (!fe.is_zero()) f.terms_.push_back({m, fe.value()});
        return f;
    }
    static Polynomial variable(Ring ring, int index, std::uint32_t prime) {
        return term(variable_monomial(ring, index), 1, prime);
    }

    // Builds canonical form from arbitrary (monomial, coefficient) pairs.
    static Polynomial from_terms(Ring ring, std::uint32_t prime,
                                 std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
            return mono_greater(a.mono, b.mono);
        });
        Polynomial f(ring, prime);
        for (auto& t : terms) {
            std::uint32_t c = t.coeff % prime;
            if (!c) continue;
            if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
                f.terms_.back().coeff = mod_add(f.terms_.back().coeff, c, prime);
                if (!f.terms_.back().coeff) f.terms_.pop_back();
            } else {
                f.terms_.push_back({t.mono, c});
            }
        }
        return f;
    }

    Ring ring() const { return ring_; }
    std::uint32_t prime() const { return prime_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    const Monomial& leading_monomial() const {
        if (is_zero()) throw Error("leading term of the zero polynomial");
        return terms_.front().mono;
    }
    std::uint32_t leading_coeff() const {
        if (is_zero()) throw Error("leading term of the zero polynomial");
        return terms_.front().coeff;
    }

    int degree() const {  // total degree; -1 for the zero polynomial
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.front().mono.degree();
        for (const auto& t : terms_)
            if (t.mono.degree() != d) return false;
        return true;
    }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }

    bool is_unit() const {
        return terms_.size() == 1 && terms_[0].mono.is_one();
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.ring_ != b.ring_ || a.prime_ != b.prime_) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].coeff != b.terms_[i].coeff ||
                !(a.terms_[i].mono == b.terms_[i].mono))
                return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.match(b);
        Polynomial r(a.ring_, a.prime_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int c = cmp(a.terms_[i].mono, b.terms_[j].mono);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                std::uint32_t s = mod_add(a.terms_[i].coeff, b.terms_[j].coeff, a.prime_);
                if (s) r.terms_.push_back({a.terms_[i].mono, s});
                ++i; ++j;
            }
        }
        while (i < a.terms_.size()) r.terms_.push_back(a.terms_[i++]);
        while (j < b.terms_.size()) r.terms_.push_back(b.terms_[j++]);
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        return a + b.negated();
    }

    Polynomial negated() const {
        Polynomial r(*this);
        for (auto& t : r.terms_) t.coeff = prime_ - t.coeff;
        return r;
    }

    Polynomial scaled(std::uint32_t c) const {  // c reduced mod p by caller
        c %= prime_;
        Polynomial r(ring_, prime_);
        if (!c) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            r.terms_.push_back({t.mono, mod_mul(t.coeff, c, prime_)});
        return r;
    }
    Polynomial scaled(FieldElement c) const {
        if (c.modulus() != prime_) throw Error("mixed field moduli");
        return scaled(c.value());
    }

    // this * (c * m)
    Polynomial times_term(const Monomial& m, std::uint32_t c) const {
        Polynomial r(ring_, prime_);
        c %= prime_;
        if (!c) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            r.terms_.push_back({t.mono * m, mod_mul(t.coeff, c, prime_)});
        return r;  // multiplying by a monomial preserves the term order
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.match(b);
        if (a.is_zero() || b.is_zero()) return zero(a.ring_, a.prime_);
        // accumulate against the shorter factor
        const Polynomial& small = a.terms_.size() <= b.terms_.size() ? a : b;
        const Polynomial& big = a.terms_.size() <= b.terms_.size() ? b : a;
        Polynomial acc = zero(a.ring_, a.prime_);
        for (const auto& t : small.terms_)
            acc = acc + big.times_term(t.mono, t.coeff);
        return acc;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(mod_inv(leading_coeff(), prime_));
    }

    std::string str() const;

private:
    void match(const Polynomial& other) const {
        if (ring_ != other.ring_) throw Error("ring mismatch between polynomials");
        if (prime_ != other.prime_) throw Error("mixed field moduli");
    }

    Ring ring_;
    std::uint32_t prime_;
    std::vector<Term> terms_;
};

// Attempts exact division a / b; returns nullopt when b does not divide a.
inline std::optional<Polynomial> try_divide_exact(const Polynomial& a,
                                                  const Polynomial& b) {
    if (a.ring() != b.ring() || a.prime() != b.prime())
        throw Error("ring mismatch in division");
    if (b.is_zero()) throw Error("division by the zero polynomial");
    Polynomial q = Polynomial::zero(a.ring(), a.prime());
    Polynomial r = a;
    const Monomial& lb = b.leading_monomial();
    std::uint32_t lbinv = mod_inv(b.leading_coeff(), b.prime());
    while (!r.is_zero()) {
        const Monomial& lr = r.leading_monomial();
        if (!lb.divides(lr)) return std::nullopt;
        std::uint32_t c = mod_mul(r.leading_coeff(), lbinv, a.prime());
        Monomial m = lb.divide_into(lr);
        q = q + Polynomial::term(m, c, a.prime());
        r = r - b.times_term(m, c);
    }
    return q;
}

// Moves a polynomial into a ring with more leading variables (S -> R,
// S -> SE, R -> RE, S -> RE): variable i maps to variable i + shift.
inline Polynomial lift(const Polynomial& f, Ring target) {
    int shift = var_count(target) - var_count(f.ring());
    if (shift < 0) throw Error("cannot lift into a smaller ring");
    std::vector<Term> ts;
    ts.reserve(f.term_count());
    for (const auto& t : f.terms()) {
        Monomial m(target);
        for (int i = 0; i < var_count(f.ring()); ++i) m.set_exp(i + shift, t.mono.exp(i));
        ts.push_back({m, t.coeff});
    }
    return Polynomial::from_terms(target, f.prime(), std::move(ts));
}

// Inverse of lift: requires every term to be free of the leading variables.
inline Polynomial restrict_to(const Polynomial& f, Ring target) {
    int shift = var_count(f.ring()) - var_count(target);
    if (shift < 0) throw Error("cannot restrict into a larger ring");
    std::vector<Term> ts;
    ts.reserve(f.term_count());
    for (const auto& t : f.terms()) {
        for (int i = 0; i < shift; ++i)
            if (t.mono.exp(i))
                throw Error("polynomial not contained in the target subring");
        Monomial m(target);
        for (int i = 0; i < var_count(target); ++i) m.set_exp(i, t.mono.exp(i + shift));
        ts.push_back({m, t.coeff});
    }
    return Polynomial::from_terms(target, f.prime(), std::move(ts));
}

inline bool contains_variable(const Polynomial& f, int index) {
    for (const auto& t : f.terms())
        if (t.mono.exp(index)) return true;
    return false;
}

// Substitution v -> u*v for a unit u: rescales each term by u^exp(v).
inline Polynomial scale_variable(const Polynomial& f, int index, FieldElement unit) {
    if (unit.modulus() != f.prime()) throw Error("mixed field moduli");
    if (unit.is_zero()) throw Error("variable rescaling by zero");
    std::vector<Term> ts;
    ts.reserve(f.term_count());
    for (const auto& t : f.terms()) {
        FieldElement c(t.coeff, f.prime());
        for (int e = 0; e < t.mono.exp(index); ++e) c = c * unit;
        ts.push_back({t.mono, c.value()});
    }
    return Polynomial::from_terms(f.ring(), f.prime(), std::move(ts));
}

inline std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::string s;
    std::uint32_t half = prime_ / 2;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        // print balanced representatives so small negative coefficients stay readable
        bool neg = t.coeff > half;
        std::uint32_t mag = neg ? prime_ - t.coeff : t.coeff;
        if (i == 0) {
            if (neg) s += '-';
        } else {
            s += neg ? " - " : " + ";
        }
        if (t.mono.is_one()) {
            s += std::to_string(mag);
        } else {
            if (mag != 1) s += std::to_string(mag) + "*";
            s += t.mono.str();
        }
    }
    return s;
}

}  // namespace doubleplane
