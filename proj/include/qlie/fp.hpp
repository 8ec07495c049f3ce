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

#include <cstdint>

namespace qlie {

/// Residue in the prime field GF(l).  Elements carry their modulus so that
/// arithmetic needs no external context.
struct FpElem {
    std::uint32_t p = 0;
    std::int64_t v = 0;  // always in [0, p)

    FpElem() = default;
    FpElem(std::uint32_t p_, std::int64_t x) : p(p_) {
        v = x % static_cast<std::int64_t>(p_);
        if (v < 0) v += p_;
    }

    bool operator==(const FpElem& o) const { return p == o.p && v == o.v; }
    bool operator!=(const FpElem& o) const { return !(*this == o); }
};

inline void check_same_modulus(const FpElem& a, const FpElem& b) {
    if (a.p != b.p) throw MixedFields();
}

inline FpElem operator+(const FpElem& a, const FpElem& b) {
    check_same_modulus(a, b);
    return FpElem(a.p, a.v + b.v);
}
inline FpElem operator-(const FpElem& a, const FpElem& b) {
    check_same_modulus(a, b);
    return FpElem(a.p, a.v - b.v);
}
inline FpElem operator-(const FpElem& a) { return FpElem(a.p, -a.v); }
inline FpElem operator*(const FpElem& a, const FpElem& b) {
    check_same_modulus(a, b);
    return FpElem(a.p, a.v * b.v);
}

inline bool is_zero(const FpElem& a) { return a.v == 0; }

inline FpElem inv(const FpElem& a) {
    if (a.v == 0) throw DivisionByZero();
    // extended Euclid
    std::int64_t t = 0, nt = 1, r = a.p, nr = a.v;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    return FpElem(a.p, t);
}

inline FpElem operator/(const FpElem& a, const FpElem& b) { return a * inv(b); }

inline std::string to_string(const FpElem& a) { return std::to_string(a.v); }

}  // namespace qlie
