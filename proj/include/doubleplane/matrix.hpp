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

#include <cstddef>
#include <vector>

#include "doubleplane/polynomial.hpp"

namespace doubleplane {

// Dense matrix of polynomials over a fixed ring.
class PolyMatrix {
public:
    PolyMatrix(int rows, int cols, Ring ring, std::uint32_t prime)
        : rows_(rows), cols_(cols), ring_(ring), prime_(prime),
          data_(static_cast<std::size_t>(rows) * cols,
                Polynomial::zero(ring, prime)) {
        if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Ring ring() const { return ring_; }
    std::uint32_t prime() const { return prime_; }

    const Polynomial& at(int i, int j) const { return data_[index(i, j)]; }
    void set(int i, int j, Polynomial f) {
        if (f.ring() != ring_ || f.prime() != prime_)
            throw Error("matrix entry from the wrong ring");
        data_[index(i, j)] = std::move(f);
    }

    PolyMatrix transposed() const {
        PolyMatrix r(cols_, rows_, ring_, prime_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
        return r;
    }

    PolyMatrix submatrix(const std::vector<int>& row_idx,
                         const std::vector<int>& col_idx) const {
        PolyMatrix r(static_cast<int>(row_idx.size()),
                     static_cast<int>(col_idx.size()), ring_, prime_);
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j)
                r.set(static_cast<int>(i), static_cast<int>(j),
                      at(row_idx[i], col_idx[j]));
        return r;
    }

    PolyMatrix without_column(int col) const {
        std::vector<int> rs, cs;
        for (int i = 0; i < rows_; ++i) rs.push_back(i);
        for (int j = 0; j < cols_; ++j)
            if (j != col) cs.push_back(j);
        return submatrix(rs, cs);
    }

    bool is_zero() const {
        for (const auto& f : data_)
            if (!f.is_zero()) return false;
        return true;
    }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.ring_ == b.ring_ &&
               a.prime_ == b.prime_ && a.data_ == b.data_;
    }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        if (a.ring_ != b.ring_ || a.prime_ != b.prime_)
            throw Error("ring mismatch in matrix product");
        if (a.cols_ != b.rows_) throw Error("dimension mismatch in matrix product");
        PolyMatrix r(a.rows_, b.cols_, a.ring_, a.prime_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) {
                Polynomial acc = Polynomial::zero(a.ring_, a.prime_);
                for (int k = 0; k < a.cols_; ++k) {
                    if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
                    acc = acc + a.at(i, k) * b.at(k, j);
                }
                r.set(i, j, std::move(acc));
            }
        return r;
    }

private:
    std::size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw Error("matrix index out of range");
        return static_cast<std::size_t>(i) * cols_ + j;
    }

    int rows_, cols_;
    Ring ring_;
    std::uint32_t prime_;
    std::vector<Polynomial> data_;
};

namespace detail {

// Cofactor expansion with memoization over column subsets; the determinant of
// the rows 0..popcount(mask)-1 against the column set `mask` is cached.
inline Polynomial det_subsets(const PolyMatrix& m) {
    const int n = m.rows();
    const std::uint32_t full = (n >= 31) ? 0 : (1u << n) - 1;
    std::vector<std::optional<Polynomial>> memo(1u << n);
    // iterative DP over subsets ordered by popcount
    memo[0] = Polynomial::constant(1, m.ring(), m.prime());
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        int k = __builtin_popcount(mask);
        int row = k - 1;  // expand along the last row of the chosen block
        Polynomial acc = Polynomial::zero(m.ring(), m.prime());
        int pos = 0;
        for (int j = 0; j < n; ++j) {
            if (!(mask & (1u << j))) continue;
            const Polynomial& e = m.at(row, j);
            if (!e.is_zero()) {
                const Polynomial& sub = *memo[mask ^ (1u << j)];
                if (!sub.is_zero()) {
                    Polynomial p = e * sub;
                    acc = ((row + pos) % 2 == 0) ? acc + p : acc - p;
                }
            }
            ++pos;
        }
        memo[mask] = std::move(acc);
    }
    return *memo[full];
}

// Fraction-free (Bareiss) elimination; exact divisions are guaranteed over an
// integral domain. Returns the determinant.
inline Polynomial det_bareiss(PolyMatrix m) {
    const int n = m.rows();
    Polynomial prev = Polynomial::constant(1, m.ring(), m.prime());
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k).is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m.at(i, k).is_zero()) { piv = i; break; }
            if (piv < 0) return Polynomial::zero(m.ring(), m.prime());
            for (int j = 0; j < n; ++j) {
                Polynomial tmp = m.at(k, j);
                m.set(k, j, m.at(piv, j));
                m.set(piv, j, std::move(tmp));
            }
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Polynomial num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                auto q = try_divide_exact(num, prev);
                if (!q) throw Error("non-exact division in fraction-free elimination");
                m.set(i, j, std::move(*q));
            }
            m.set(i, k, Polynomial::zero(m.ring(), m.prime()));
        }
        prev = m.at(k, k);
        if (prev.is_zero()) return prev;
    }
    Polynomial d = m.at(n - 1, n - 1);
    return sign > 0 ? d : d.negated();
}

}  // namespace detail

inline Polynomial determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
    if (m.rows() == 0) return Polynomial::constant(1, m.ring(), m.prime());
    if (m.rows() <= 4) return detail::det_subsets(m);
    return detail::det_bareiss(m);
}

// Largest r such that some r x r minor is nonzero, by fraction-free
// elimination with full pivoting.
inline int rank(PolyMatrix m) {
    const int nr = m.rows(), nc = m.cols();
    Polynomial prev = Polynomial::constant(1, m.ring(), m.prime());
    int r = 0;
    while (r < nr && r < nc) {
        int pi = -1, pj = -1;
        for (int i = r; i < nr && pi < 0; ++i)
            for (int j = r; j < nc; ++j)
                if (!m.at(i, j).is_zero()) { pi = i; pj = j; break; }
        if (pi < 0) break;
        if (pi != r)
            for (int j = 0; j < nc; ++j) {
                Polynomial tmp = m.at(r, j);
                m.set(r, j, m.at(pi, j));
                m.set(pi, j, std::move(tmp));
            }
        if (pj != r)
            for (int i = 0; i < nr; ++i) {
                Polynomial tmp = m.at(i, r);
                m.set(i, r, m.at(i, pj));
                m.set(i, pj, std::move(tmp));
            }
        for (int i = r + 1; i < nr; ++i) {
            for (int j = r + 1; j < nc; ++j) {
                Polynomial num = m.at(i, j) * m.at(r, r) - m.at(i, r) * m.at(r, j);
                auto q = try_divide_exact(num, prev);
                if (!q) throw Error("non-exact division in fraction-free elimination");
                m.set(i, j, std::move(*q));
            }
            m.set(i, r, Polynomial::zero(m.ring(), m.prime()));
        }
        prev = m.at(r, r);
        ++r;
    }
    return r;
}

// All r x r minors (row and column index sets in lexicographic order).
inline std::vector<Polynomial> minors(const PolyMatrix& m, int r) {
    if (r < 1 || r > m.rows() || r > m.cols())
        throw Error("minor order out of range");
    std::vector<Polynomial> out;
    std::vector<int> ri(static_cast<std::size_t>(r)), ci(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) ri[static_cast<std::size_t>(i)] = i;
    auto advance = [&](std::vector<int>& idx, int n) {
        int k = r - 1;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == n - r + k) --k;
        if (k < 0) return false;
        ++idx[static_cast<std::size_t>(k)];
        for (int l = k + 1; l < r; ++l)
            idx[static_cast<std::size_t>(l)] = idx[static_cast<std::size_t>(l - 1)] + 1;
        return true;
    };
    do {
        for (int j = 0; j < r; ++j) ci[static_cast<std::size_t>(j)] = j;
        do {
            out.push_back(determinant(m.submatrix(ri, ci)));
        } while (advance(ci, m.cols()));
    } while (advance(ri, m.rows()));
    return out;
}

// Determinant of the matrix with column `col` removed, for an n x (n+1)
// input: the classical maximal minors.
inline Polynomial maximal_minor(const PolyMatrix& m, int col) {
    return determinant(m.without_column(col));
}

}  // namespace doubleplane
