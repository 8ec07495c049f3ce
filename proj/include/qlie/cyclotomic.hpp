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

#include <map>
#include <memory>
#include <vector>

namespace qlie {

namespace detail {

// dense univariate polynomial over the rationals, lowest degree first
using UniPoly = std::vector<Rational>;

inline void uni_trim(UniPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

inline UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    uni_trim(r);
    return r;
}

// exact quotient; remainder of the division must vanish
inline UniPoly uni_exact_div(UniPoly a, const UniPoly& b) {
    if (b.empty()) throw DivisionByZero();
    UniPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        uni_trim(a);
    }
    if (!a.empty()) throw InternalError("inexact univariate division");
    uni_trim(q);
    return q;
}

}  // namespace detail

/// Reduction data for the cyclotomic field Q(zeta_m): the minimal polynomial
/// Phi_m of the generator, shared by every element of the field.
struct CycTable {
    unsigned m = 1;
    detail::UniPoly phi;  // monic, integer coefficients
    unsigned deg = 1;

    static std::shared_ptr<const CycTable> get(unsigned m) {
        static std::map<unsigned, std::shared_ptr<const CycTable>> cache;
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
        auto tab = std::make_shared<CycTable>();
        tab->m = m;
        tab->phi = cyclotomic_poly(m);
        tab->deg = static_cast<unsigned>(tab->phi.size() - 1);
        cache[m] = tab;
        return tab;
    }

    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    static detail::UniPoly cyclotomic_poly(unsigned m) {
        detail::UniPoly f(m + 1, Rational(0));
        f[0] = -1;
        f[m] = 1;
        for (unsigned d = 1; d < m; ++d)
            if (m % d == 0) f = detail::uni_exact_div(f, cyclotomic_poly(d));
        return f;
    }
};

/// Element of Q(zeta_m): a rational polynomial in the generator, fully
/// reduced modulo Phi_m (degree < deg Phi_m).
struct CycElem {
    std::shared_ptr<const CycTable> tab;
    std::vector<Rational> c;  // size tab->deg

    CycElem() = default;
    CycElem(std::shared_ptr<const CycTable> t, std::vector<Rational> coeffs)
        : tab(std::move(t)), c(std::move(coeffs)) {
        c.resize(tab->deg, Rational(0));
    }

    static CycElem from_int(std::shared_ptr<const CycTable> t, const Rational& r) {
        std::vector<Rational> v(t->deg, Rational(0));
        v[0] = r;
        return CycElem(std::move(t), std::move(v));
    }

    static CycElem generator(std::shared_ptr<const CycTable> t) {
        std::vector<Rational> v(t->deg, Rational(0));
        if (t->deg == 1) {
            // phi = x - zeta_value: zeta is rational (m = 1 or 2)
            v[0] = -t->phi[0];
        } else {
            v[1] = 1;
        }
        return CycElem(std::move(t), std::move(v));
    }

    bool operator==(const CycElem& o) const { return tab->m == o.tab->m && c == o.c; }
    bool operator!=(const CycElem& o) const { return !(*this == o); }
};

inline void check_same_order(const CycElem& a, const CycElem& b) {
    if (a.tab->m != b.tab->m) throw MixedFields();
}

inline bool is_zero(const CycElem& a) {
    for (const auto& x : a.c)
        if (!x.is_zero()) return false;
    return true;
}

inline CycElem operator+(const CycElem& a, const CycElem& b) {
    check_same_order(a, b);
    auto r = a.c;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.c[i];
    return CycElem(a.tab, std::move(r));
}
inline CycElem operator-(const CycElem& a, const CycElem& b) {
    check_same_order(a, b);
    auto r = a.c;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b.c[i];
    return CycElem(a.tab, std::move(r));
}
inline CycElem operator-(const CycElem& a) {
    auto r = a.c;
    for (auto& x : r) x = -x;
    return CycElem(a.tab, std::move(r));
}

inline CycElem operator*(const CycElem& a, const CycElem& b) {
    check_same_order(a, b);
    unsigned d = a.tab->deg;
    std::vector<Rational> prod(2 * d, Rational(0));
    for (unsigned i = 0; i < d; ++i) {
        if (a.c[i].is_zero()) continue;
        for (unsigned j = 0; j < d; ++j)
            if (!b.c[j].is_zero()) prod[i + j] += a.c[i] * b.c[j];
    }
    // reduce modulo monic phi
    const auto& phi = a.tab->phi;
    for (std::size_t k = prod.size(); k-- > d;) {
        if (prod[k].is_zero()) continue;
        Rational c = prod[k];
        prod[k] = 0;
        for (unsigned i = 0; i < d; ++i) prod[k - d + i] -= c * phi[i];
    }
    prod.resize(d);
    return CycElem(a.tab, std::move(prod));
}

inline CycElem inv(const CycElem& a) {
    if (is_zero(a)) throw DivisionByZero();
    // extended Euclid in Q[x] against the irreducible modulus
    detail::UniPoly r0 = a.tab->phi, r1(a.c.begin(), a.c.end());
    detail::uni_trim(r1);
    detail::UniPoly s0{}, s1{Rational(1)};  // coefficients of the input
    while (true) {
        // r1 is nonzero; divide r0 by r1
        detail::UniPoly q;
        detail::UniPoly rem = r0;
        q.assign(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, Rational(0));
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rational c = rem.back() / r1.back();
            std::size_t shift = rem.size() - r1.size();
            q[shift] += c;
            for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
            detail::uni_trim(rem);
        }
        if (rem.empty()) {
            // r1 = gcd, a nonzero constant times unit since phi is irreducible
            if (r1.size() != 1)
                throw InternalError("cyclotomic inverse: gcd not constant");
            std::vector<Rational> out(a.tab->deg, Rational(0));
            for (std::size_t i = 0; i < s1.size() && i < out.size(); ++i)
                out[i] = s1[i] / r1[0];
            return CycElem(a.tab, std::move(out));
        }
        // s_next = s0 - q*s1
        detail::UniPoly qs = detail::uni_mul(q, s1);
        detail::UniPoly s2 = s0;
        s2.resize(std::max(s2.size(), qs.size()), Rational(0));
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        detail::uni_trim(s2);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
}

inline CycElem operator/(const CycElem& a, const CycElem& b) { return a * inv(b); }

inline std::string to_string(const CycElem& a) {
    std::string out;
    for (std::size_t k = a.c.size(); k-- > 0;) {
        const Rational& r = a.c[k];
        if (r.is_zero()) continue;
        Rational mag = r < 0 ? Rational(-r) : r;
        std::string piece;
        if (k == 0) {
            piece = to_string(mag);
        } else {
            std::string zp = k == 1 ? "z" : "z^" + std::to_string(k);
            piece = mag == 1 ? zp : to_string(mag) + "*" + zp;
        }
        if (out.empty())
            out = (r < 0 ? "-" : "") + piece;
        else
            out += (r < 0 ? " - " : " + ") + piece;
    }
    return out.empty() ? "0" : out;
}

}  // namespace qlie
