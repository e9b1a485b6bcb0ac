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

#include <deque>
#include <numeric>
#include <vector>

#include "doubleplane/matrix.hpp"

namespace doubleplane {

// Row/column weights of a homogeneous matrix: every nonzero entry (i,j) is
// homogeneous of degree row[i] - col[j]. Zero entries are unconstrained.
// Weights are determined up to a common shift when the nonzero pattern is
// connected; the anchor is col[0] = 0.
struct MatrixGrading {
    std::vector<int> row;
    std::vector<int> col;

    // forced degree of the minor on the given row and column subsets
    int minor_degree(const std::vector<int>& rows, const std::vector<int>& cols) const {
        int d = 0;
        for (int i : rows) d += row[static_cast<std::size_t>(i)];
        for (int j : cols) d -= col[static_cast<std::size_t>(j)];
        return d;
    }
};

// Infers the grading by propagation over the nonzero entries. Throws when an
// entry is inhomogeneous, the constraints are inconsistent, or the pattern is
// too disconnected to pin the weights down.
inline MatrixGrading infer_grading(const PolyMatrix& m) {
    const int nr = m.rows(), nc = m.cols();
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j)
            if (!m.at(i, j).is_homogeneous())
                throw Error("matrix entry (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ") is not homogeneous");
    // nodes: 0..nr-1 rows, nr..nr+nc-1 cols
    const int n = nr + nc;
    std::vector<int> value(static_cast<std::size_t>(n), 0);
    std::vector<bool> known(static_cast<std::size_t>(n), false);
    std::deque<int> queue;
    value[static_cast<std::size_t>(nr)] = 0;  // anchor first column
    known[static_cast<std::size_t>(nr)] = true;
    queue.push_back(nr);
    auto relax = [&](int node, int val) {
        if (known[static_cast<std::size_t>(node)]) {
            if (value[static_cast<std::size_t>(node)] != val)
                throw Error("matrix is not homogeneous with respect to any weights");
        } else {
            value[static_cast<std::size_t>(node)] = val;
            known[static_cast<std::size_t>(node)] = true;
            queue.push_back(node);
        }
    };
    while (!queue.empty()) {
        int node = queue.front();
        queue.pop_front();
        if (node < nr) {
            for (int j = 0; j < nc; ++j) {
                const Polynomial& e = m.at(node, j);
                if (e.is_zero()) continue;
                relax(nr + j, value[static_cast<std::size_t>(node)] - e.degree());
            }
        } else {
            int j = node - nr;
            for (int i = 0; i < nr; ++i) {
                const Polynomial& e = m.at(i, j);
                if (e.is_zero()) continue;
                relax(i, value[static_cast<std::size_t>(node)] + e.degree());
            }
        }
    }
    for (int k = 0; k < n; ++k)
        if (!known[static_cast<std::size_t>(k)])
            throw Error("matrix weights are not determined: the nonzero pattern is disconnected");
    MatrixGrading g;
    g.row.assign(value.begin(), value.begin() + nr);
    g.col.assign(value.begin() + nr, value.end());
    return g;
}

}  // namespace doubleplane
