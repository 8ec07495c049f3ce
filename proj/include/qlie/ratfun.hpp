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

#include "qlie/mpoly.hpp"

namespace qlie {

/// Reduced fraction of multivariate polynomials over a base field K.
///
/// Canonical form: gcd(num, den) = 1 and den monic under grlex, so equality
/// is structural.  Zero is 0/1.
template <class K>
struct RatFun {
    MPoly<K> num, den;

    RatFun() = default;
    RatFun(MPoly<K> n, MPoly<K> d) : num(std::move(n)), den(std::move(d)) { reduce(); }

    static RatFun from_poly(MPoly<K> n) {
        RatFun r;
        r.num = std::move(n);
        r.den = poly_one(r.num.nvars, r.num);
        return r;
    }

    void reduce() {
        if (den.is_zero_poly()) throw DivisionByZero();
        if (num.is_zero_poly()) {
            den = poly_one(num.nvars, den);
            return;
        }
        MPoly<K> g = gcd(num, den);
        if (!g.is_constant() || !is_one_coeff(g)) {
            num = exact_div(num, g);
            den = exact_div(den, g);
        }
        K lc = den.leading().second;
        if (!is_one_value(lc)) {
            K li = inv(lc);
            num = scale(num, li);
            den = scale(den, li);
        }
    }

    bool operator==(const RatFun& o) const { return num == o.num && den == o.den; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

   private:
    static bool is_one_value(const K& c) { return is_zero(c - c * c) && !is_zero(c); }
    static bool is_one_coeff(const MPoly<K>& g) {
        return g.is_constant() && !g.is_zero_poly() && is_one_value(g.leading().second);
    }
    // a polynomial equal to 1, synthesized from any nonzero exemplar
    static MPoly<K> poly_one(int nv, const MPoly<K>& exemplar) {
        K c = exemplar.terms.empty() ? K() : exemplar.leading().second;
        if (exemplar.terms.empty()) throw InternalError("cannot synthesize unit");
        return MPoly<K>::constant(nv, c * inv(c));
    }
};

template <class K>
bool is_zero(const RatFun<K>& a) {
    return a.num.is_zero_poly();
}

template <class K>
RatFun<K> operator+(const RatFun<K>& a, const RatFun<K>& b) {
    if (a.den == b.den) return RatFun<K>(a.num + b.num, a.den);
    return RatFun<K>(a.num * b.den + b.num * a.den, a.den * b.den);
}
template <class K>
RatFun<K> operator-(const RatFun<K>& a, const RatFun<K>& b) {
    if (a.den == b.den) return RatFun<K>(a.num - b.num, a.den);
    return RatFun<K>(a.num * b.den - b.num * a.den, a.den * b.den);
}
template <class K>
RatFun<K> operator-(const RatFun<K>& a) {
    RatFun<K> r = a;
    r.num = -r.num;
    return r;
}
template <class K>
RatFun<K> operator*(const RatFun<K>& a, const RatFun<K>& b) {
    return RatFun<K>(a.num * b.num, a.den * b.den);
}
template <class K>
RatFun<K> inv(const RatFun<K>& a) {
    if (is_zero(a)) throw DivisionByZero();
    return RatFun<K>(a.den, a.num);
}
template <class K>
RatFun<K> operator/(const RatFun<K>& a, const RatFun<K>& b) {
    if (is_zero(b)) throw DivisionByZero();
    return RatFun<K>(a.num * b.den, a.den * b.num);
}

}  // namespace qlie
