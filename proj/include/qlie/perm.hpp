/*
   Copyright 2026 The qlie authors

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

#include "qlie/base.hpp"

#include <algorithm>
#include <vector>

namespace qlie {

/// Permutation of {1..n} in one-line notation: perm[i-1] is the image of i.
using Perm = std::vector<unsigned>;

inline Perm perm_identity(unsigned n) {
    Perm p(n);
    for (unsigned i = 0; i < n; ++i) p[i] = i + 1;
    return p;
}

inline unsigned perm_apply(const Perm& p, unsigned i) { return p[i - 1]; }

/// Composition in exponential convention: i^(ab) = (i^a)^b, i.e. apply a first.
inline Perm perm_compose(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i] - 1];
    return c;
}

inline Perm perm_inverse(const Perm& a) {
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[a[i] - 1] = static_cast<unsigned>(i + 1);
    return c;
}

/// All of S_n, lexicographic by one-line notation.
inline std::vector<Perm> symmetric_group(unsigned n) {
    std::vector<Perm> out;
    Perm p = perm_identity(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// The subgroup fixing 1, lexicographic by one-line notation.
inline std::vector<Perm> symmetric_group_fixing_first(unsigned n) {
    std::vector<Perm> out;
    Perm p = perm_identity(n);
    if (n <= 1) return {p};
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin() + 1, p.end()));
    return out;
}

/// S_4^1 in the order id, (23), (234), (34), (24), (243).
inline std::vector<Perm> s41_operation_order() {
    return {{1, 2, 3, 4}, {1, 3, 2, 4}, {1, 3, 4, 2}, {1, 2, 4, 3}, {1, 4, 3, 2}, {1, 4, 2, 3}};
}

/// Column order used when parametrizing multilinear operations by S_n^1.
inline std::vector<Perm> operation_perm_order(unsigned n) {
    if (n == 4) return s41_operation_order();
    return symmetric_group_fixing_first(n);
}

inline std::string perm_to_string(const Perm& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p[i]);
    return s + "]";
}

}  // namespace qlie
