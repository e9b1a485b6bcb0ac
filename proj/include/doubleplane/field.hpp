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
#include <stdexcept>
#include <string>

namespace doubleplane {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

constexpr std::uint32_t kDefaultPrime = 32003;

// Deterministic primality test, adequate for 32-bit moduli.
inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (n % d == 0) return n == d;
    }
    std::uint64_t d = 17;
    while (d * d <= n) {
        if (n % d == 0) return false;
        d += 2;
    }
    return true;
}

inline void check_prime(std::uint32_t p) {
    if (p < 2 || p >= (1u << 31) || !is_prime_u32(p))
        throw Error("modulus " + std::to_string(p) + " is not a prime below 2^31");
}

// Element of the prime field F_p. Carries its modulus so that values from
// different fields can never be combined silently.
class FieldElement {
public:
    FieldElement() : v_(0), p_(kDefaultPrime) {}
    FieldElement(std::int64_t value, std::uint32_t p) : p_(p) {
        std::int64_t r = value % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        v_ = static_cast<std::uint32_t>(r);
    }

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    friend bool operator==(FieldElement a, FieldElement b) {
        return a.v_ == b.v_ && a.p_ == b.p_;
    }
    friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        a.match(b);
        std::uint32_t s = a.v_ + b.v_;
        if (s >= a.p_) s -= a.p_;
        return FieldElement(s, a.p_, 0);
    }
    friend FieldElement operator-(FieldElement a, FieldElement b) {
        a.match(b);
        std::uint32_t s = a.v_ + a.p_ - b.v_;
        if (s >= a.p_) s -= a.p_;
        return FieldElement(s, a.p_, 0);
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        a.match(b);
        std::uint64_t t = static_cast<std::uint64_t>(a.v_) * b.v_;
        return FieldElement(static_cast<std::uint32_t>(t % a.p_), a.p_, 0);
    }
    FieldElement operator-() const {
        return FieldElement(v_ == 0 ? 0 : p_ - v_, p_, 0);
    }

    FieldElement inverse() const {
        if (v_ == 0) throw Error("division by zero in F_p");
        // extended Euclid
        std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        std::int64_t r = x0 % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return FieldElement(static_cast<std::uint32_t>(r), p_, 0);
    }
    friend FieldElement operator/(FieldElement a, FieldElement b) {
        return a * b.inverse();
    }

private:
    FieldElement(std::uint32_t v, std::uint32_t p, int) : v_(v), p_(p) {}
    void match(FieldElement other) const {
        if (p_ != other.p_) throw Error("mixed field moduli");
    }

    std::uint32_t v_;
    std::uint32_t p_;
};

// Raw mod-p helpers for hot linear-algebra loops (values assumed < p).
inline std::uint32_t mod_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}
inline std::uint32_t mod_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : a + p - b;
}
inline std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}
inline std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
    return FieldElement(a, p).inverse().value();
}

}  // namespace doubleplane
