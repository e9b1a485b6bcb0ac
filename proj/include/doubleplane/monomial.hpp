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
#include <cstdint>
#include <string>

#include "doubleplane/field.hpp"

namespace doubleplane {

// The two working rings and their elimination extensions:
//   S  = k[y,z,t]          degrevlex, y > z > t
//   R  = k[x,y,z,t]        degrevlex, x > y > z > t
//   SE = k[w,y,z,t]        w-block first (eliminates w), then degrevlex
//   RE = k[w,x,y,z,t]      likewise
enum class Ring : std::uint8_t { S = 0, R = 1, SE = 2, RE = 3 };

constexpr int kMaxVars = 5;

inline int var_count(Ring r) {
    switch (r) {
        case Ring::S: return 3;
        case Ring::R: return 4;
        case Ring::SE: return 4;
        case Ring::RE: return 5;
    }
    return 0;
}

// true when variable 0 is an elimination block of its own
inline bool has_elim_var(Ring r) { return r == Ring::SE || r == Ring::RE; }

inline const char* var_names(Ring r) {
    switch (r) {
        case Ring::S: return "yzt";
        case Ring::R: return "xyzt";
        case Ring::SE: return "wyzt";
        case Ring::RE: return "wxyzt";
    }
    return "";
}

inline Ring elim_extension(Ring r) {
    if (r == Ring::S) return Ring::SE;
    if (r == Ring::R) return Ring::RE;
    throw Error("ring already carries an elimination variable");
}

inline Ring elim_base(Ring r) {
    if (r == Ring::SE) return Ring::S;
    if (r == Ring::RE) return Ring::R;
    throw Error("ring has no elimination variable");
}

class Monomial {
public:
    explicit Monomial(Ring ring) : ring_(ring) { e_.fill(0); }
    Monomial(Ring ring, std::initializer_list<int> exps) : ring_(ring) {
        e_.fill(0);
        int i = 0;
        for (int v : exps) set_exp(i++, v);
    }

    Ring ring() const { return ring_; }
    int vars() const { return var_count(ring_); }
    int exp(int i) const { return e_[static_cast<std::size_t>(i)]; }
    void set_exp(int i, int v) {
        if (v < 0 || v > 255) throw Error("monomial exponent out of range");
        e_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
    }

    int degree() const {
        int d = 0;
        for (int i = 0; i < vars(); ++i) d += e_[static_cast<std::size_t>(i)];
        return d;
    }

    bool is_one() const {
        for (int i = 0; i < vars(); ++i)
            if (e_[static_cast<std::size_t>(i)]) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.ring_ == b.ring_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        a.match(b);
        Monomial r(a.ring_);
        for (int i = 0; i < a.vars(); ++i) {
            int s = a.exp(i) + b.exp(i);
            r.set_exp(i, s);
        }
        return r;
    }

    bool divides(const Monomial& other) const {
        match(other);
        for (int i = 0; i < vars(); ++i)
            if (exp(i) > other.exp(i)) return false;
        return true;
    }

    // other / this, valid only when divides(other)
    Monomial divide_into(const Monomial& other) const {
        match(other);
        Monomial r(ring_);
        for (int i = 0; i < vars(); ++i) r.set_exp(i, other.exp(i) - exp(i));
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        a.match(b);
        Monomial r(a.ring_);
        for (int i = 0; i < a.vars(); ++i)
            r.set_exp(i, a.exp(i) > b.exp(i) ? a.exp(i) : b.exp(i));
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        a.match(b);
        for (int i = 0; i < a.vars(); ++i)
            if (a.exp(i) && b.exp(i)) return false;
        return true;
    }

    std::string str() const {
        if (is_one()) return "1";
        const char* names = var_names(ring_);
        std::string s;
        for (int i = 0; i < vars(); ++i) {
            if (!exp(i)) continue;
            if (!s.empty()) s += '*';
            s += names[i];
            if (exp(i) > 1) s += '^' + std::to_string(exp(i));
        }
        return s;
    }

private:
    void match(const Monomial& other) const {
        if (ring_ != other.ring_) throw Error("ring mismatch between monomials");
    }

    std::array<std::uint8_t, kMaxVars> e_;
    Ring ring_;
};

// degrevlex over the index window [lo, n): higher degree wins; on ties the
// monomial with the smaller exponent at the last differing position wins.
inline int cmp_degrevlex(const Monomial& a, const Monomial& b, int lo, int n) {
    int da = 0, db = 0;
    for (int i = lo; i < n; ++i) { da += a.exp(i); db += b.exp(i); }
    if (da != db) return da < db ? -1 : 1;
    for (int i = n - 1; i >= lo; --i) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? -1 : 1;
    }
    return 0;
}

// Total order used everywhere: plain degrevlex on S and R; on SE/RE the
// elimination variable forms its own leading block.
inline int cmp(const Monomial& a, const Monomial& b) {
    if (a.ring() != b.ring()) throw Error("ring mismatch in monomial comparison");
    const int n = a.vars();
    if (has_elim_var(a.ring())) {
        if (a.exp(0) != b.exp(0)) return a.exp(0) < b.exp(0) ? -1 : 1;
        return cmp_degrevlex(a, b, 1, n);
    }
    return cmp_degrevlex(a, b, 0, n);
}

inline bool mono_less(const Monomial& a, const Monomial& b) { return cmp(a, b) < 0; }
inline bool mono_greater(const Monomial& a, const Monomial& b) { return cmp(a, b) > 0; }

inline Monomial one_monomial(Ring r) { return Monomial(r); }

inline Monomial variable_monomial(Ring r, int index) {
    Monomial m(r);
    if (index < 0 || index >= var_count(r)) throw Error("variable index out of range");
    m.set_exp(index, 1);
    return m;
}

}  // namespace doubleplane
