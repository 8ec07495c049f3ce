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
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qlie {

/// Multivariate polynomial over an exact coefficient field K.
///
/// Terms are kept sorted in descending graded-lexicographic order with no
/// zero coefficients, so equality is structural.  The number of variables is
/// fixed per polynomial; all exponent vectors have that length.
template <class K>
struct MPoly {
    using Exp = std::vector<int>;
    using Term = std::pair<Exp, K>;

    int nvars = 0;
    std::vector<Term> terms;  // descending grlex

    MPoly() = default;
    explicit MPoly(int nv) : nvars(nv) {}

    static MPoly constant(int nv, const K& c) {
        MPoly f(nv);
        if (!is_zero(c)) f.terms.push_back({Exp(nv, 0), c});
        return f;
    }
    static MPoly variable(int nv, int i, const K& one_coeff) {
        MPoly f(nv);
        Exp e(nv, 0);
        e[i] = 1;
        f.terms.push_back({e, one_coeff});
        return f;
    }

    bool is_zero_poly() const { return terms.empty(); }
    bool is_constant() const {
        if (terms.empty()) return true;
        if (terms.size() > 1) return false;
        for (int e : terms[0].first)
            if (e) return false;
        return true;
    }
    int total_degree() const {
        int d = 0;
        if (terms.empty()) return 0;
        for (int e : terms[0].first) d += e;  // grlex: leading term has max degree
        return d;
    }
    int degree_in(int v) const {
        int d = 0;
        for (const auto& t : terms) d = std::max(d, t.first[v]);
        return d;
    }

    const Term& leading() const { return terms.front(); }

    bool operator==(const MPoly& o) const { return nvars == o.nvars && terms == o.terms; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }
};

namespace detail {

inline bool grlex_less(const std::vector<int>& a, const std::vector<int>& b) {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline bool grlex_greater(const std::vector<int>& a, const std::vector<int>& b) {
    return grlex_less(b, a);
}

}  // namespace detail

template <class K>
MPoly<K> mpoly_from_terms(int nvars, std::vector<typename MPoly<K>::Term> ts) {
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        return detail::grlex_greater(a.first, b.first);
    });
    MPoly<K> f(nvars);
    for (auto& t : ts) {
        if (!f.terms.empty() && f.terms.back().first == t.first) {
            f.terms.back().second = f.terms.back().second + t.second;
            if (is_zero(f.terms.back().second)) f.terms.pop_back();
        } else if (!is_zero(t.second)) {
            f.terms.push_back(std::move(t));
        }
    }
    return f;
}

template <class K>
MPoly<K> operator+(const MPoly<K>& a, const MPoly<K>& b) {
    MPoly<K> r(a.nvars);
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        if (a.terms[i].first == b.terms[j].first) {
            K c = a.terms[i].second + b.terms[j].second;
            if (!is_zero(c)) r.terms.push_back({a.terms[i].first, std::move(c)});
            ++i, ++j;
        } else if (detail::grlex_greater(a.terms[i].first, b.terms[j].first)) {
            r.terms.push_back(a.terms[i++]);
        } else {
            r.terms.push_back(b.terms[j++]);
        }
    }
    while (i < a.terms.size()) r.terms.push_back(a.terms[i++]);
    while (j < b.terms.size()) r.terms.push_back(b.terms[j++]);
    return r;
}

template <class K>
MPoly<K> operator-(const MPoly<K>& a) {
    MPoly<K> r = a;
    for (auto& t : r.terms) t.second = -t.second;
    return r;
}

template <class K>
MPoly<K> operator-(const MPoly<K>& a, const MPoly<K>& b) {
    return a + (-b);
}

template <class K>
MPoly<K> mul_term(const MPoly<K>& a, const typename MPoly<K>::Exp& e, const K& c) {
    MPoly<K> r(a.nvars);
    if (is_zero(c)) return r;
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) {
        auto ex = t.first;
        for (int v = 0; v < a.nvars; ++v) ex[v] += e[v];
        K cc = t.second * c;
        if (!is_zero(cc)) r.terms.push_back({std::move(ex), std::move(cc)});
    }
    return r;
}

template <class K>
MPoly<K> operator*(const MPoly<K>& a, const MPoly<K>& b) {
    if (a.terms.empty() || b.terms.empty()) return MPoly<K>(a.nvars);
    std::map<typename MPoly<K>::Exp, K, bool (*)(const std::vector<int>&, const std::vector<int>&)>
        acc(&detail::grlex_greater);
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) {
            auto e = ta.first;
            for (int v = 0; v < a.nvars; ++v) e[v] += tb.first[v];
            K c = ta.second * tb.second;
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(std::move(e), std::move(c));
            else {
                it->second = it->second + c;
                if (is_zero(it->second)) acc.erase(it);
            }
        }
    MPoly<K> r(a.nvars);
    r.terms.reserve(acc.size());
    for (auto& kv : acc) r.terms.push_back({kv.first, kv.second});
    return r;
}

template <class K>
MPoly<K> scale(const MPoly<K>& a, const K& c) {
    MPoly<K> r(a.nvars);
    if (is_zero(c)) return r;
    for (const auto& t : a.terms) r.terms.push_back({t.first, t.second * c});
    return r;
}

/// Exact quotient a / b; throws InternalError when the division is inexact.
template <class K>
MPoly<K> exact_div(MPoly<K> a, const MPoly<K>& b) {
    if (b.terms.empty()) throw DivisionByZero();
    MPoly<K> q(a.nvars);
    std::vector<typename MPoly<K>::Term> qt;
    const auto& lb = b.leading();
    K lbinv = inv(lb.second);
    while (!a.terms.empty()) {
        const auto& la = a.leading();
        typename MPoly<K>::Exp e(a.nvars);
        for (int v = 0; v < a.nvars; ++v) {
            e[v] = la.first[v] - lb.first[v];
            if (e[v] < 0) throw InternalError("inexact polynomial division");
        }
        K c = la.second * lbinv;
        qt.push_back({e, c});
        a = a - mul_term(b, e, c);
    }
    return mpoly_from_terms<K>(q.nvars, std::move(qt));
}

/// Leading-coefficient-1 normalization under grlex.
template <class K>
MPoly<K> monic(const MPoly<K>& a) {
    if (a.terms.empty()) return a;
    return scale(a, inv(a.leading().second));
}

namespace detail {

// strip the largest common monomial factor, returning it
template <class K>
std::vector<int> strip_monomial(MPoly<K>& f) {
    std::vector<int> m(f.nvars, 0);
    if (f.terms.empty()) return m;
    for (int v = 0; v < f.nvars; ++v) {
        int mn = f.terms[0].first[v];
        for (const auto& t : f.terms) mn = std::min(mn, t.first[v]);
        m[v] = mn;
    }
    bool trivial = true;
    for (int v = 0; v < f.nvars; ++v)
        if (m[v]) trivial = false;
    if (!trivial)
        for (auto& t : f.terms)
            for (int v = 0; v < f.nvars; ++v) t.first[v] -= m[v];
    return m;
}

// coefficients of f as a univariate polynomial in variable v
template <class K>
std::vector<MPoly<K>> univ_coeffs(const MPoly<K>& f, int v) {
    int d = f.degree_in(v);
    std::vector<MPoly<K>> cs(d + 1, MPoly<K>(f.nvars));
    for (const auto& t : f.terms) {
        auto e = t.first;
        int k = e[v];
        e[v] = 0;
        cs[k].terms.push_back({std::move(e), t.second});
    }
    for (auto& c : cs)
        std::sort(c.terms.begin(), c.terms.end(),
                  [](const auto& a, const auto& b) { return grlex_greater(a.first, b.first); });
    return cs;
}

template <class K>
MPoly<K> from_univ(int nvars, int v, const std::vector<MPoly<K>>& cs) {
    std::vector<typename MPoly<K>::Term> ts;
    for (std::size_t k = 0; k < cs.size(); ++k)
        for (const auto& t : cs[k].terms) {
            auto e = t.first;
            e[v] = static_cast<int>(k);
            ts.push_back({std::move(e), t.second});
        }
    return mpoly_from_terms<K>(nvars, std::move(ts));
}

template <class K>
MPoly<K> gcd_impl(MPoly<K> a, MPoly<K> b);

// gcd of the univariate coefficients of f w.r.t. variable v
template <class K>
MPoly<K> content_in(const MPoly<K>& f, int v) {
    auto cs = univ_coeffs(f, v);
    MPoly<K> c(f.nvars);
    for (const auto& ci : cs) {
        if (ci.is_zero_poly()) continue;
        c = c.is_zero_poly() ? monic(ci) : gcd_impl(c, ci);
        if (c.is_constant()) break;
    }
    return c;
}

// pseudo-remainder of f by g w.r.t. variable v (up to content)
template <class K>
MPoly<K> prem(MPoly<K> f, const MPoly<K>& g, int v) {
    int dg = g.degree_in(v);
    auto gcs = univ_coeffs(g, v);
    const MPoly<K>& lg = gcs[dg];
    int df = f.degree_in(v);
    while (!f.terms.empty() && df >= dg) {
        auto fcs = univ_coeffs(f, v);
        // f := lg * f - lf * x_v^(df-dg) * g
        MPoly<K> lfg = fcs[df] * g;
        MPoly<K> shifted(f.nvars);
        shifted.terms.reserve(lfg.terms.size());
        for (auto& t : lfg.terms) {
            t.first[v] += df - dg;  // uniform shift keeps grlex order
            shifted.terms.push_back(std::move(t));
        }
        f = lg * f - shifted;
        int nd = f.degree_in(v);
        if (!f.terms.empty() && nd >= df)
            throw InternalError("pseudo-division failed to reduce degree");
        df = nd;
    }
    return f;
}

// primitive PRS gcd; result monic
template <class K>
MPoly<K> gcd_impl(MPoly<K> a, MPoly<K> b) {
    if (a.is_zero_poly()) return monic(b);
    if (b.is_zero_poly()) return monic(a);

    const K one = a.leading().second * inv(a.leading().second);
    auto ma = strip_monomial(a);
    auto mb = strip_monomial(b);
    std::vector<int> mc(a.nvars);
    for (int v = 0; v < a.nvars; ++v) mc[v] = std::min(ma[v], mb[v]);

    MPoly<K> g(a.nvars);
    if (a.is_constant() || b.is_constant()) {
        g = MPoly<K>::constant(a.nvars, one);
    } else {
        int v = -1;
        for (int i = 0; i < a.nvars; ++i)
            if (a.degree_in(i) > 0 || b.degree_in(i) > 0) {
                v = i;
                break;
            }
        if (a.degree_in(v) == 0) {
            g = gcd_impl(a, content_in(b, v));
        } else if (b.degree_in(v) == 0) {
            g = gcd_impl(content_in(a, v), b);
        } else {
            MPoly<K> ca = content_in(a, v), cb = content_in(b, v);
            MPoly<K> pa = exact_div(a, ca), pb = exact_div(b, cb);
            MPoly<K> cg = gcd_impl(ca, cb);
            if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
            while (!pb.is_zero_poly()) {
                MPoly<K> r = prem(pa, pb, v);
                pa = pb;
                if (r.is_zero_poly()) {
                    pb = r;
                } else {
                    MPoly<K> cr = content_in(r, v);
                    pb = exact_div(r, cr);
                }
            }
            MPoly<K> cpa = content_in(pa, v);
            g = cg * exact_div(pa, cpa);
        }
    }
    // reattach common monomial factor
    return monic(mul_term(g, mc, one));
}

}  // namespace detail

/// Monic gcd over the coefficient field K.
template <class K>
MPoly<K> gcd(const MPoly<K>& a, const MPoly<K>& b) {
    return detail::gcd_impl(a, b);
}

}  // namespace qlie
