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

#include "qlie/field.hpp"

#include <optional>
#include <vector>

namespace qlie {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;

namespace detail {

// Rescale a row of rational functions so every entry is denominator-free and
// the numerators have no common polynomial factor.  Row scaling by a nonzero
// scalar leaves row spaces, ranks, and null spaces unchanged.
template <class K>
void normalize_ratfun_row(Vec& row, const FieldPtr& f) {
    using RF = RatFun<K>;
    MPoly<K> den;
    bool init = false;
    for (const Scalar& s : row) {
        const RF* r = std::get_if<RF>(&s.rep());
        if (!r || is_zero(*r)) continue;
        if (!init) {
            den = r->den;
            init = true;
        } else {
            den = den * exact_div(r->den, gcd(den, r->den));
        }
    }
    if (!init) return;
    std::vector<MPoly<K>> nums(row.size(), MPoly<K>(den.nvars));
    MPoly<K> content;
    bool cinit = false;
    for (std::size_t i = 0; i < row.size(); ++i) {
        const RF* r = std::get_if<RF>(&row[i].rep());
        if (!r || is_zero(*r)) continue;
        nums[i] = r->num * exact_div(den, r->den);
        if (!cinit) {
            content = monic(nums[i]);
            cinit = true;
        } else if (!content.is_constant()) {
            content = gcd(content, nums[i]);
        }
    }
    bool strip = cinit && !content.is_constant();
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (nums[i].is_zero_poly()) continue;
        RF v;
        v.num = strip ? exact_div(nums[i], content) : nums[i];
        K lead = v.num.leading().second;
        v.den = MPoly<K>::constant(den.nvars, lead * inv(lead));
        row[i] = Scalar(f, Scalar::Rep(std::move(v)));
    }
}

inline void normalize_row(Vec& row, const FieldPtr& f) {
    if (f->kind != FieldKind::rational_functions) return;
    switch (f->base->kind) {
        case FieldKind::rationals: normalize_ratfun_row<Rational>(row, f); break;
        case FieldKind::cyclotomic: normalize_ratfun_row<CycElem>(row, f); break;
        case FieldKind::prime_char: normalize_ratfun_row<FpElem>(row, f); break;
        default: break;
    }
}

}  // namespace detail

/// Reduced row echelon form with deterministic pivoting: columns are scanned
/// left to right and the first row with a nonzero entry becomes the pivot.
struct Rref {
    Mat m;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

/// Elimination is fraction-free over rational-function fields: rows combine
/// as piv * r - fac * p with denominators cleared and content stripped, and
/// the unit-pivot division happens once at the end.  Over numeric fields the
/// canonical reduced values stay small under division, so rows are combined
/// the classic way there.  Either route yields the unique RREF of the input.
inline Rref rref(Mat m, std::size_t ncols, const FieldPtr& f) {
    const bool fraction_free = f->kind == FieldKind::rational_functions;
    Rref out;
    if (fraction_free)
        for (auto& row : m) detail::normalize_row(row, f);
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        if (!fraction_free) {
            Scalar pivinv = m[row][col].inv();
            for (std::size_t c = col; c < ncols; ++c) m[row][c] = m[row][c] * pivinv;
        }
        const Scalar piv = m[row][col];
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Scalar factor = m[r][col];
            if (fraction_free) {
                for (std::size_t c = 0; c < ncols; ++c)
                    m[r][c] = piv * m[r][c] - factor * m[row][c];
                detail::normalize_row(m[r], f);
            } else {
                for (std::size_t c = col; c < ncols; ++c)
                    m[r][c] = m[r][c] - factor * m[row][c];
            }
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    if (fraction_free) {
        for (std::size_t r = 0; r < out.pivot_cols.size(); ++r) {
            Scalar pivinv = m[r][out.pivot_cols[r]].inv();
            for (std::size_t c = 0; c < ncols; ++c) m[r][c] = m[r][c] * pivinv;
        }
    }
    out.rank = row;
    out.m = std::move(m);
    return out;
}

inline std::size_t rank(const Mat& m, std::size_t ncols, const FieldPtr& f) {
    if (m.empty()) return 0;
    return rref(m, ncols, f).rank;
}

/// Basis of the null space of the row system, one vector per free column,
/// ordered by free column index; entry 1 at the free column.
inline std::vector<Vec> nullspace(const Mat& m, std::size_t ncols, const FieldPtr& f) {
    Rref r = m.empty() ? Rref{} : rref(m, ncols, f);
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(ncols, f->zero());
        v[free] = f->one();
        for (std::size_t pr = 0; pr < r.pivot_cols.size(); ++pr)
            v[r.pivot_cols[pr]] = -r.m[pr][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Row-reduce a list of vectors; the result spans the same space with leading
/// 1 entries at the earliest possible coordinates (reduced-echelon
/// representatives).
inline std::vector<Vec> rref_rows(std::vector<Vec> rows, std::size_t ncols, const FieldPtr& f) {
    if (rows.empty()) return rows;
    Rref r = rref(std::move(rows), ncols, f);
    r.m.resize(r.rank, Vec(ncols, f->zero()));
    return r.m;
}

/// Solve sum_i c_i * columns[i] = rhs exactly; nullopt when inconsistent.
/// Free coefficients are set to zero.
inline std::optional<Vec> solve_columns(const std::vector<Vec>& columns, const Vec& rhs,
                                        const FieldPtr& f) {
    std::size_t dim = rhs.size();
    std::size_t k = columns.size();
    Mat aug(dim, Vec(k + 1, f->zero()));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug[i][j] = columns[j][i];
        aug[i][k] = rhs[i];
    }
    Rref r = rref(std::move(aug), k + 1, f);
    for (std::size_t c : r.pivot_cols)
        if (c == k) return std::nullopt;  // pivot in the rhs column
    Vec sol(k, f->zero());
    for (std::size_t pr = 0; pr < r.pivot_cols.size(); ++pr) sol[r.pivot_cols[pr]] = r.m[pr][k];
    return sol;
}

/// Exact span equality of two vector lists over the same coordinates.
inline bool spans_equal(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t ncols,
                        const FieldPtr& f) {
    std::size_t ra = rank(a, ncols, f);
    std::size_t rb = rank(b, ncols, f);
    if (ra != rb) return false;
    Mat uni = a;
    uni.insert(uni.end(), b.begin(), b.end());
    return rank(uni, ncols, f) == ra;
}

}  // namespace qlie
