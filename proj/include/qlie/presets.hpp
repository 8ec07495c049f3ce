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

#include "qlie/pairing.hpp"

namespace qlie {

struct CartanData {
    std::vector<std::vector<int>> a;
    std::vector<unsigned> d;  // symmetrizers: d_i a_ij = d_j a_ji
};

inline CartanData cartan_matrix(const std::string& name) {
    if (name == "A1") return {{{2}}, {1}};
    if (name == "A2") return {{{2, -1}, {-1, 2}}, {1, 1}};
    if (name == "A3") return {{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {1, 1, 1}};
    if (name == "B2") return {{{2, -1}, {-2, 2}}, {2, 1}};
    if (name == "G2") return {{{2, -1}, {-3, 2}}, {3, 1}};
    throw Error("unknown Cartan matrix: " + name);
}

/// One variable x with x g = q g x: a single symbol q as the self-pairing.
inline Ctx preset_quantum_plane() {
    FieldPtr f = Field::rational_functions(Field::rationals(), {"q"});
    return PairingContext::make(f, 1, {{f->symbol(0)}});
}

/// Skew-primitive generators e_1..e_r, f_1..f_r of the deformed enveloping
/// algebra attached to a symmetrizable Cartan matrix, over rational
/// functions in q.  Both e_i and f_i sit over the square of the i-th group
/// generator; their weights differ by the sign of the exponent.
inline Ctx preset_drinfeld_jimbo(const CartanData& c) {
    const std::size_t r = c.a.size();
    FieldPtr f = Field::rational_functions(Field::rationals(), {"q"});
    Scalar q = f->symbol(0);
    const std::size_t n = 2 * r;
    std::vector<std::vector<Scalar>> p(n, std::vector<Scalar>(n, f->one()));
    auto weight_exp = [&](std::size_t i, std::size_t j) {
        return 2L * c.d[i] * c.a[i][j];  // exponent of q in chi^{f_i}(g_j^2)
    };
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            long w = weight_exp(i, j);
            p[i][j] = q.pow(-w);          // e_i on g_{e_j}
            p[i][j + r] = q.pow(-w);      // e_i on g_{f_j}
            p[i + r][j] = q.pow(w);       // f_i on g_{e_j}
            p[i + r][j + r] = q.pow(w);   // f_i on g_{f_j}
        }
    return PairingContext::make(f, n, std::move(p));
}

/// The two-variable E-sector with A2 Cartan data: p_ij = q^(-2 a_ij).
inline Ctx preset_heisenberg() {
    FieldPtr f = Field::rational_functions(Field::rationals(), {"q"});
    Scalar q = f->symbol(0);
    std::vector<std::vector<Scalar>> p = {{q.pow(-4), q.pow(2)}, {q.pow(2), q.pow(-4)}};
    return PairingContext::make(f, 2, std::move(p));
}

/// n variables over cyclotomic(n) with every pairing equal to the generator,
/// so p_ij p_ji = zeta^2 throughout.
inline Ctx preset_pareigis(unsigned n) {
    if (n < 2) throw Error("signed-inversion preset needs n >= 2");
    FieldPtr f = Field::cyclotomic(n);
    Scalar z = f->generator();
    std::vector<std::vector<Scalar>> p(n, std::vector<Scalar>(n, z));
    return PairingContext::make(f, n, std::move(p));
}

/// Context realized by a symmetric bicharacter table lambda with
/// lambda_ij lambda_ji = 1: the pairing of color-superalgebra generators.
inline Ctx preset_color(FieldPtr field, std::vector<std::vector<Scalar>> lambda) {
    const std::size_t n = lambda.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!(lambda[i][j] * lambda[j][i] == field->one()))
                throw Error("bicharacter table must satisfy lambda_ij * lambda_ji = 1");
    return PairingContext::make(std::move(field), n, std::move(lambda));
}

}  // namespace qlie
