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

#include "qlie/primcheck.hpp"

#include <numeric>
#include <optional>

namespace qlie {

/* ---------- roots of unity ---------- */

/// Multiplicative order of p, when p is a root of unity; nullopt otherwise.
/// The search is bounded in every supported field: torsion units of Q are
/// {1,-1}, of Q(zeta_m) they divide lcm(2,m), of GF(l) they divide l-1, and a
/// nonconstant rational function is never a root of unity.
inline std::optional<unsigned> multiplicative_order(const Scalar& p) {
    if (p.is_zero()) throw Error("zero has no multiplicative order");
    const Field& f = *p.field();
    if (f.kind == FieldKind::rational_functions) {
        if (!p.is_constant()) return std::nullopt;
        return multiplicative_order(p.constant_value());
    }
    unsigned bound = 0;
    switch (f.kind) {
        case FieldKind::rationals: bound = 2; break;
        case FieldKind::cyclotomic: bound = std::lcm(2u, f.cyc_order); break;
        case FieldKind::prime_char: bound = f.char_prime - 1; break;
        default: throw InternalError("unexpected field kind");
    }
    const Scalar one = p.field()->one();
    Scalar acc = one;
    for (unsigned m = 1; m <= bound; ++m) {
        acc = acc * p;
        if (acc == one) return m;
    }
    return std::nullopt;
}

/// Least m >= 1 with q_int(p, m) = 0: the order of p when p != 1, the
/// characteristic when p = 1 (none in characteristic zero).
inline std::optional<unsigned> minimal_qint_zero(const Scalar& p) {
    if (p == p.field()->one()) {
        unsigned l = p.field()->characteristic();
        if (l == 0) return std::nullopt;
        return l;
    }
    return multiplicative_order(p);
}

/* ---------- unary operations ---------- */

struct UnaryVerdict {
    std::optional<unsigned> m;  // order of the self-pairing as a root of unity
    unsigned l = 1;             // characteristic, or 1 in characteristic zero

    /// True iff a power operation of exponent n exists: n = m * l^r.
    bool admissible(unsigned n) const {
        if (!m || n == 0 || n % *m != 0) return false;
        unsigned q = n / *m;
        if (l == 1) return q == 1;
        while (q % l == 0) q /= l;
        return q == 1;
    }

    std::string description() const {
        if (!m) return "none (self-pairing is not a root of unity)";
        std::string s = "{" + std::to_string(*m);
        if (l != 1) s += " * " + std::to_string(l) + "^r : r >= 0";
        return s + "}";
    }
};

inline UnaryVerdict unary_verdict(const Scalar& p) {
    UnaryVerdict v;
    v.m = multiplicative_order(p);
    unsigned l = p.field()->characteristic();
    v.l = l == 0 ? 1 : l;
    return v;
}

/// Main unary operation: a^m for the least m with vanishing q-integer of the
/// self-pairing; partial elsewhere.
inline Polynomial main_unary(const Ctx& ctx, const Polynomial& a) {
    auto rep = is_skew_primitive(a);
    if (!rep.verdict) throw UndefinedOperation("argument is not skew primitive");
    Scalar p = pairing_of(a, a);
    auto m = minimal_qint_zero(p);
    if (!m) throw UndefinedOperation("self-pairing has no vanishing q-integer");
    Polynomial w = power(a, *m);
    if (!is_skew_primitive(w).verdict)
        throw InternalError("main unary result failed the primitivity check");
    (void)ctx;
    return w;
}

/* ---------- binary operations linear in the first variable ---------- */

/// Coefficients of prod_{s=0}^{n-1} (t - p12 p22^s) by ascending power of t.
inline Vec binary_ladder_polynomial(const Ctx& ctx, unsigned x, unsigned y, unsigned n) {
    const FieldPtr& f = ctx->field;
    Scalar p12 = ctx->at(x, y), p22 = ctx->at(y, y);
    Vec coef{f->one()};
    for (unsigned s = 0; s < n; ++s) {
        Scalar root = p12 * p22.pow(static_cast<long>(s));
        Vec next(coef.size() + 1, f->zero());
        for (std::size_t i = 0; i < coef.size(); ++i) {
            next[i + 1] = next[i + 1] + coef[i];
            next[i] = next[i] - root * coef[i];
        }
        coef = std::move(next);
    }
    return coef;
}

/// The ladder [...[[x y]_{p12} y]_{p12 p22} ... y]_{p12 p22^{n-1}}.
inline Polynomial binary_ladder_forward(const Ctx& ctx, unsigned x, unsigned y, unsigned n) {
    Scalar p12 = ctx->at(x, y), p22 = ctx->at(y, y);
    Polynomial v = Polynomial::variable(ctx, x);
    Polynomial yv = Polynomial::variable(ctx, y);
    for (unsigned s = 0; s < n; ++s)
        v = skew_commutator(v, yv, p12 * p22.pow(static_cast<long>(s)));
    return v;
}

/// The companion ladder [...[[x y]_{p21^-1} y]_{p21^-1 p22^-1} ... ].
inline Polynomial binary_ladder_backward(const Ctx& ctx, unsigned x, unsigned y, unsigned n) {
    Scalar p21i = ctx->at(y, x).inv(), p22 = ctx->at(y, y);
    Polynomial v = Polynomial::variable(ctx, x);
    Polynomial yv = Polynomial::variable(ctx, y);
    for (unsigned s = 0; s < n; ++s)
        v = skew_commutator(v, yv, p21i * p22.pow(-static_cast<long>(s)));
    return v;
}

/// The block ladder [...[[x y^m]_{p12^m} y^m]_{p12^m} ... y^m]_{p12^m}.
inline Polynomial binary_ladder_blocks(const Ctx& ctx, unsigned x, unsigned y, unsigned m,
                                       unsigned count) {
    Scalar p12m = ctx->at(x, y).pow(static_cast<long>(m));
    Polynomial v = Polynomial::variable(ctx, x);
    Polynomial ym = power(Polynomial::variable(ctx, y), m);
    for (unsigned s = 0; s < count; ++s) v = skew_commutator(v, ym, p12m);
    return v;
}

/// The unique (up to scalar) quantum operation of y-degree n linear in x, or
/// nullopt when neither existence condition holds.
inline std::optional<Polynomial> binary_one_linear(const Ctx& ctx, unsigned x, unsigned y,
                                                   unsigned n) {
    if (x == y) throw Error("binary operation requires distinct variables");
    if (n == 0) throw Error("binary operation requires positive y-degree");
    Scalar p12 = ctx->at(x, y), p21 = ctx->at(y, x), p22 = ctx->at(y, y);
    const Scalar one = ctx->field->one();
    if (p12 * p21 == p22.pow(1 - static_cast<long>(n))) {
        Polynomial w = binary_ladder_forward(ctx, x, y, n);
        if (!is_skew_primitive(w).verdict)
            throw InternalError("binary ladder failed the primitivity check");
        return w;
    }
    auto m = multiplicative_order(p22);
    if (m && *m > 1 && n % *m == 0 && (p12 * p21).pow(static_cast<long>(*m)) == one) {
        Polynomial w = binary_ladder_blocks(ctx, x, y, *m, n / *m);
        if (!is_skew_primitive(w).verdict)
            throw InternalError("binary block ladder failed the primitivity check");
        return w;
    }
    return std::nullopt;
}

/* ---------- main bilinear operation ---------- */

inline Polynomial main_bilinear(const Ctx& ctx, const Polynomial& a, const Polynomial& b) {
    if (!is_skew_primitive(a).verdict || !is_skew_primitive(b).verdict)
        throw UndefinedOperation("arguments must be skew primitive");
    Scalar p12 = pairing_of(a, b), p21 = pairing_of(b, a);
    if (!(p12 * p21 == ctx->field->one()))
        throw UndefinedOperation("pair is not conforming (p12*p21 != 1)");
    Polynomial w = a * b - p12 * (b * a);
    if (!w.is_zero() && !is_skew_primitive(w).verdict)
        throw InternalError("main bilinear result failed the primitivity check");
    return w;
}

/* ---------- the D_nu parametrization ---------- */

struct DNu {
    Perm nu;
    Polynomial plus;   // left primitive w.r.t. the first variable
    Polynomial minus;  // right primitive w.r.t. the first variable
    Polynomial diff;   // plus - minus
};

inline DNu d_nu(const Ctx& ctx, const Perm& nu, std::vector<unsigned> vars = {}) {
    if (vars.empty())
        for (unsigned i = 1; i <= ctx->n; ++i) vars.push_back(i);
    DNu d;
    d.nu = nu;
    d.plus = commutator_ladder_plus(ctx, vars, nu);
    d.minus = commutator_ladder_minus(ctx, vars, nu);
    d.diff = d.plus - d.minus;
    return d;
}

/// Space of multilinear quantum operations in the listed variables: empty
/// unless the variables are conforming; otherwise parametrized by the linear
/// dependences of the D_nu polynomials.  Basis representatives are
/// reduced-echelon in the ladder coordinates.
inline OperationBasis multilinear_space(const Ctx& ctx, std::vector<unsigned> vars = {}) {
    if (vars.empty())
        for (unsigned i = 1; i <= ctx->n; ++i) vars.push_back(i);
    const auto k = static_cast<unsigned>(vars.size());
    const FieldPtr& f = ctx->field;
    OperationBasis out;
    out.ctx = ctx;
    out.vars = vars;
    if (k == 1) {
        Operation op;
        op.poly = Polynomial::variable(ctx, vars[0]);
        op.beta = {{perm_identity(1), f->one()}};
        out.ops.push_back(std::move(op));
        return out;
    }
    if (!ctx->is_conforming(vars)) return out;

    auto nus = operation_perm_order(k);
    std::vector<Polynomial> pluses, diffs;
    for (const auto& nu : nus) {
        pluses.push_back(commutator_ladder_plus(ctx, vars, nu));
        diffs.push_back(commutator_ladder_minus(ctx, vars, nu));
        diffs.back() = pluses.back() - diffs.back();
    }
    std::map<Monomial, Vec> rows;
    for (std::size_t c = 0; c < diffs.size(); ++c)
        for (const auto& [m, coef] : diffs[c].terms()) {
            auto it = rows.find(m);
            if (it == rows.end()) it = rows.emplace(m, Vec(nus.size(), f->zero())).first;
            it->second[c] = it->second[c] + coef;
        }
    Mat m;
    m.reserve(rows.size());
    for (auto& [mono, row] : rows) m.push_back(row);
    auto basis = rref_rows(nullspace(m, nus.size(), f), nus.size(), f);

    for (const auto& beta : basis) {
        Polynomial w = Polynomial::zero(ctx);
        Operation op;
        for (std::size_t c = 0; c < nus.size(); ++c) {
            op.beta.push_back({nus[c], beta[c]});
            if (!beta[c].is_zero()) w = w + beta[c] * pluses[c];
        }
        if (!is_skew_primitive(w).verdict)
            throw InternalError("ladder dependence produced a non-primitive element");
        op.poly = std::move(w);
        out.ops.push_back(std::move(op));
    }
    return out;
}

/* ---------- trilinear operations ---------- */

/// Main trilinear operation on skew-primitive arguments a, b, c whose
/// pairwise products conform as a whole while no pair conforms.
inline Polynomial main_trilinear(const Ctx& ctx, const Polynomial& a, const Polynomial& b,
                                 const Polynomial& c) {
    for (const Polynomial* t : {&a, &b, &c})
        if (!is_skew_primitive(*t).verdict)
            throw UndefinedOperation("arguments must be skew primitive");
    Scalar p12 = pairing_of(a, b), p21 = pairing_of(b, a);
    Scalar p13 = pairing_of(a, c), p31 = pairing_of(c, a);
    Scalar p23 = pairing_of(b, c), p32 = pairing_of(c, b);
    const Scalar one = ctx->field->one();
    if (!(p12 * p21 * p13 * p31 * p23 * p32 == one))
        throw UndefinedOperation("conformity product differs from 1");
    if (p12 * p21 == one || p13 * p31 == one || p23 * p32 == one)
        throw UndefinedOperation("a pair of arguments is conforming");
    Scalar q = (p31.inv() * p32.inv() - p13 * p23) / (p31.inv() - p13);
    Polynomial w = skew_commutator(skew_commutator(a, b, p12), c, p13 * p23) -
                   q * skew_commutator(skew_commutator(a, c, p13), b, p12 * p32);
    if (!is_skew_primitive(w).verdict)
        throw InternalError("main trilinear result failed the primitivity check");
    return w;
}

/// The unique (up to scalar) trilinear operation on a conforming triple with
/// at least one nonconforming pair, normalized to a reduced-echelon
/// representative (coefficient 1 at the earliest word, x_i x_j x_k whenever
/// that coefficient is nonzero).
inline Polynomial unique_trilinear(const Ctx& ctx, unsigned i, unsigned j, unsigned k) {
    OperationBasis b = multilinear_space(ctx, {i, j, k});
    if (b.dimension() != 1)
        throw UndefinedOperation("trilinear operation space is not one-dimensional");
    return b.ops[0].poly;
}

/// Twisted-symmetry coefficient: the scalar relating the main trilinear
/// operation on permuted variables to the unpermuted one.  Computed by
/// coefficient comparison and cross-checked against the full expansion.
inline Scalar trilinear_symmetry_coeff(const Ctx& ctx, const Perm& pi) {
    if (ctx->n != 3) throw ArityMismatch("trilinear symmetry requires arity 3");
    auto var = [&](unsigned i) { return Polynomial::variable(ctx, i); };
    Polynomial base = main_trilinear(ctx, var(1), var(2), var(3));
    Polynomial permuted =
        main_trilinear(ctx, var(perm_apply(pi, 1)), var(perm_apply(pi, 2)), var(perm_apply(pi, 3)));
    Scalar gamma = base.coeff_of_word({perm_apply(pi, 1), perm_apply(pi, 2), perm_apply(pi, 3)});
    if (gamma.is_zero()) throw InternalError("vanishing symmetry coefficient");
    Scalar alpha = gamma.inv();
    if (!(permuted == alpha * base))
        throw InternalError("twisted symmetry mismatch for " + perm_to_string(pi));
    return alpha;
}

/// The closed-form symmetry coefficients as printed term by term.
inline Scalar trilinear_symmetry_printed(const Ctx& ctx, const Perm& pi) {
    Scalar p12 = ctx->at(1, 2), p21 = ctx->at(2, 1), p13 = ctx->at(1, 3), p31 = ctx->at(3, 1),
           p23 = ctx->at(2, 3), p32 = ctx->at(3, 2);
    Scalar ratio13_12 = (p31 - p13.inv()) / (p12 - p21.inv());
    Scalar ratio13_23 = (p31 - p13.inv()) / (p23 - p32.inv());
    if (pi == Perm{1, 2, 3}) return ctx->field->one();
    if (pi == Perm{2, 3, 1}) return ratio13_12;             // (123)
    if (pi == Perm{3, 1, 2}) return ratio13_23;             // (132)
    if (pi == Perm{3, 2, 1}) return p21 * p32 * p31;        // (13)
    if (pi == Perm{2, 1, 3}) return p21 * p23 * p13 * ratio13_23;  // (12)
    if (pi == Perm{1, 3, 2}) return p12 * p32 * p13 * ratio13_12;  // (23)
    throw Error("unknown permutation");
}

/* ---------- quadrilinear operations ---------- */

using PairingMatrix = std::vector<std::vector<Scalar>>;  // 1-based via helper

inline Scalar matrix_brace(const FieldPtr& f, const PairingMatrix& p, const BraceWord& w) {
    Scalar a = f->one(), abar = f->one();
    for (auto [i, j] : w) {
        a = a * p[i - 1][j - 1];
        abar = abar * p[j - 1][i - 1];
    }
    return a - abar.inv();
}

struct QuadSystem {
    std::vector<Perm> order;  // id, (23), (234), (34), (24), (243)
    Mat rows6;                // coefficients at words with x1 in second place
    Mat rows12;               // the above plus the rows from words with x1 third
};

inline QuadSystem quad_system_from(const FieldPtr& f, const PairingMatrix& p) {
    QuadSystem qs;
    qs.order = s41_operation_order();
    const std::vector<Perm> nus = {{1, 2, 3, 4}, {1, 3, 2, 4}, {1, 3, 4, 2}};  // id, (23), (234)
    const std::vector<BraceWord> first = {
        {{1, 2}}, {{1, 2}, {3, 2}}, {{1, 2}, {3, 2}, {4, 2}}};
    const std::vector<BraceWord> second = {
        {{1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}},
        {{1, 3}, {1, 4}, {3, 4}, {2, 4}},
        {{1, 3}, {1, 4}, {3, 4}}};
    auto col_of = [&](const Perm& c) {
        for (std::size_t i = 0; i < qs.order.size(); ++i)
            if (qs.order[i] == c) return i;
        throw InternalError("permutation outside the fixed order");
    };
    auto apply_mu = [&](const BraceWord& w, const Perm& mu) {
        BraceWord out;
        for (auto [i, j] : w) out.push_back({perm_apply(mu, i), perm_apply(mu, j)});
        return out;
    };
    auto emit = [&](const std::vector<BraceWord>& words, bool also_six) {
        for (const auto& mu : qs.order) {
            Vec row(6, f->zero());
            for (std::size_t t = 0; t < nus.size(); ++t) {
                std::size_t col = col_of(perm_compose(nus[t], mu));
                row[col] = row[col] + matrix_brace(f, p, apply_mu(words[t], mu));
            }
            qs.rows12.push_back(row);
            if (also_six) qs.rows6.push_back(row);
        }
    };
    emit(first, true);
    emit(second, false);
    return qs;
}

inline QuadSystem quad_system(const Ctx& ctx) {
    if (ctx->n != 4) throw ArityMismatch("quadrilinear system requires arity 4");
    return quad_system_from(ctx->field, ctx->p);
}

/// Ladder built over arbitrary polynomial arguments with the pairing matrix
/// of the arguments themselves.
inline Polynomial poly_ladder_plus(const std::vector<Polynomial>& args, const PairingMatrix& p,
                                   const Perm& nu) {
    const Ctx& ctx = args[0].ctx();
    Polynomial v = args[perm_apply(nu, 1) - 1];
    for (unsigned k = 2; k <= args.size(); ++k) {
        Scalar q = ctx->field->one();
        for (unsigned i = 1; i < k; ++i)
            q = q * p[perm_apply(nu, i) - 1][perm_apply(nu, k) - 1];
        v = skew_commutator(v, args[perm_apply(nu, k) - 1], q);
    }
    return v;
}

/// The six ladder coordinates of the main quadrilinear operation.
inline std::vector<std::pair<Perm, Scalar>> quad_main_beta(const FieldPtr& f,
                                                           const PairingMatrix& p) {
    auto br = [&](const BraceWord& w) { return matrix_brace(f, p, w); };
    Scalar b234 = -(br({{1, 2}}) / br({{1, 2}, {3, 2}, {4, 2}}));
    Scalar b34 = -(br({{1, 3}, {2, 3}}) / br({{1, 3}, {2, 3}, {4, 3}}));
    Scalar b24 =
        br({{1, 2}}) * br({{1, 4}, {3, 4}}) / (br({{1, 4}}) * br({{1, 2}, {3, 2}, {4, 2}}));
    Scalar b243 = -(br({{4, 3}}) * br({{1, 4}, {2, 4}, {3, 4}, {1, 3}, {2, 3}}) /
                    (br({{1, 4}}) * br({{1, 3}, {2, 3}, {4, 3}})));
    auto order = s41_operation_order();
    return {{order[0], f->one()}, {order[1], f->zero()}, {order[2], b234},
            {order[3], b34},      {order[4], b24},       {order[5], b243}};
}

inline Polynomial main_quadrilinear(const Ctx& ctx, const Polynomial& a1, const Polynomial& a2,
                                    const Polynomial& a3, const Polynomial& a4) {
    std::vector<Polynomial> args{a1, a2, a3, a4};
    for (const auto& a : args)
        if (!is_skew_primitive(a).verdict)
            throw UndefinedOperation("arguments must be skew primitive");
    const FieldPtr& f = ctx->field;
    PairingMatrix p(4, std::vector<Scalar>(4, f->zero()));
    for (unsigned u = 0; u < 4; ++u)
        for (unsigned v = 0; v < 4; ++v) p[u][v] = pairing_of(args[u], args[v]);
    Scalar prod = f->one();
    for (unsigned u = 0; u < 4; ++u)
        for (unsigned v = 0; v < 4; ++v)
            if (u != v) prod = prod * p[u][v];
    if (!(prod == f->one()))
        throw UndefinedOperation("conformity product differs from 1");
    auto br = [&](const BraceWord& w) { return matrix_brace(f, p, w); };
    if (br({{1, 4}}).is_zero() || br({{1, 4}, {1, 2}, {2, 4}}).is_zero() ||
        br({{1, 4}, {1, 3}, {3, 4}}).is_zero())
        throw UndefinedOperation("arithmetic condition on the (1,4) pair fails");

    auto beta = quad_main_beta(f, p);
    Polynomial w = Polynomial::zero(ctx);
    for (const auto& [nu, b] : beta)
        if (!b.is_zero()) w = w + b * poly_ladder_plus(args, p, nu);

    if (!is_skew_primitive(w).verdict)
        throw InternalError("main quadrilinear result failed the primitivity check");
    QuadSystem qs = quad_system_from(f, p);
    for (const auto& row : qs.rows12) {
        Scalar acc = f->zero();
        for (std::size_t c = 0; c < 6; ++c) acc = acc + row[c] * beta[c].second;
        if (!acc.is_zero())
            throw InternalError("main quadrilinear coordinates violate the linear system");
    }
    return w;
}

/// Pair of coefficients expressing the permuted main quadrilinear operation
/// in the basis of the two distinguished ones.
inline std::pair<Scalar, Scalar> quad_symmetry(const Ctx& ctx, const Perm& mu) {
    if (ctx->n != 4) throw ArityMismatch("quadrilinear symmetry requires arity 4");
    for (unsigned i = 1; i <= 4; ++i)
        for (unsigned j = i + 1; j <= 4; ++j)
            if (ctx->is_conforming({i, j}))
                throw UndefinedOperation("a proper subset is conforming");
    for (unsigned i = 1; i <= 4; ++i)
        for (unsigned j = i + 1; j <= 4; ++j)
            for (unsigned k = j + 1; k <= 4; ++k)
                if (ctx->is_conforming({i, j, k}))
                    throw UndefinedOperation("a proper subset is conforming");
    auto var = [&](unsigned i) { return Polynomial::variable(ctx, i); };
    Polynomial permuted = main_quadrilinear(ctx, var(perm_apply(mu, 1)), var(perm_apply(mu, 2)),
                                            var(perm_apply(mu, 3)), var(perm_apply(mu, 4)));
    Polynomial base = main_quadrilinear(ctx, var(1), var(2), var(3), var(4));
    Polynomial swapped = main_quadrilinear(ctx, var(1), var(3), var(2), var(4));
    Scalar c1 = permuted.coeff_of_word({1, 2, 3, 4});
    Scalar c2 = permuted.coeff_of_word({1, 3, 2, 4});
    if (!(permuted == c1 * base + c2 * swapped))
        throw InternalError("quadrilinear symmetry mismatch for " + perm_to_string(mu));
    return {c1, c2};
}

/* ---------- named operations ---------- */

/// Signed-inversion sum over all words, defined when every pairwise product
/// p_ij p_ji equals zeta^2 for a primitive n-th root of unity zeta.
inline Polynomial pareigis(const Ctx& ctx, const Scalar& zeta) {
    const auto n = static_cast<unsigned>(ctx->n);
    auto ord = multiplicative_order(zeta);
    if (!ord || *ord != n)
        throw PreconditionFailed("zeta is not a primitive n-th root of unity");
    Scalar z2 = zeta * zeta;
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i + 1; j <= n; ++j)
            if (!(ctx->at(i, j) * ctx->at(j, i) == z2))
                throw PreconditionFailed("pairings must satisfy p_ij p_ji = zeta^2");
    Scalar zinv = zeta.inv();
    Polynomial w = Polynomial::zero(ctx);
    for (const auto& pi : symmetric_group(n)) {
        Scalar coef = ctx->field->one();
        for (unsigned i = 1; i <= n; ++i)
            for (unsigned j = i + 1; j <= n; ++j)
                if (perm_apply(pi, i) > perm_apply(pi, j))
                    coef = coef * zinv * ctx->at(perm_apply(pi, j), perm_apply(pi, i));
        std::vector<unsigned> word;
        for (unsigned i = 1; i <= n; ++i) word.push_back(perm_apply(pi, i));
        w.add_term(Monomial(GroupElement(ctx->n), word), coef);
    }
    if (!is_skew_primitive(w).verdict)
        throw InternalError("signed-inversion sum failed the primitivity check");
    return w;
}

/// Alternating balanced-binomial sum y^(m-s) x y^s of total y-degree
/// m = 1 - a_ij, for Cartan data (a_ij <= 0, d_i >= 1) and deformation
/// parameter q.
inline Polynomial serre(const Ctx& ctx, unsigned x, unsigned y, int a_ij, unsigned d_i,
                        const Scalar& q) {
    if (a_ij > 0) throw Error("off-diagonal Cartan entry must be nonpositive");
    long e = 2L * d_i * a_ij;
    if (!(ctx->at(x, y) == q.pow(e)) || !(ctx->at(y, x) == q.pow(e)) ||
        !(ctx->at(y, y) == q.pow(4L * d_i)))
        throw PreconditionFailed("pairings do not match the Cartan data");
    const unsigned m = static_cast<unsigned>(1 - a_ij);
    Scalar t = q.pow(2L * d_i);
    Polynomial w = Polynomial::zero(ctx);
    for (unsigned s = 0; s <= m; ++s) {
        Scalar c = balanced_binom(m, s, t);
        if (s % 2 == 1) c = -c;
        std::vector<unsigned> word(m - s, y);
        word.push_back(x);
        word.insert(word.end(), s, y);
        w.add_term(Monomial(GroupElement(ctx->n), word), c);
    }
    if (!is_skew_primitive(w).verdict)
        throw InternalError("Serre sum failed the primitivity check");
    return w;
}

/// Exact linear solve expressing w in the given polynomials; nullopt when w
/// is independent of them.
inline std::optional<Vec> express_in_basis(const Polynomial& w,
                                           const std::vector<Polynomial>& basis) {
    const FieldPtr& f = w.ctx()->field;
    std::vector<Polynomial> all = basis;
    all.push_back(w);
    auto [vecs, monos] = polynomial_coordinates(all, f);
    Vec rhs = vecs.back();
    vecs.pop_back();
    return solve_columns(vecs, rhs, f);
}

}  // namespace qlie
