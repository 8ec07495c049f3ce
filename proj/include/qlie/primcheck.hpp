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

#include "qlie/freealg.hpp"
#include "qlie/linalg.hpp"

namespace qlie {

/* ---------- skew-commutator ladders ---------- */

/// [...[[x_{v(1)} x_{v(2)}]_{q_2} x_{v(3)}]_{q_3} ... ]_{q_k} over the listed
/// variables (global indices), permuted by nu (which fixes 1), with
/// q_k = prod_{i<k} p[v(i)][v(k)].
inline Polynomial commutator_ladder_plus(const Ctx& ctx, const std::vector<unsigned>& vars,
                                         const Perm& nu) {
    auto at = [&](unsigned a, unsigned b) { return ctx->at(vars[a - 1], vars[b - 1]); };
    Polynomial v = Polynomial::variable(ctx, vars[perm_apply(nu, 1) - 1]);
    for (unsigned k = 2; k <= vars.size(); ++k) {
        Scalar q = ctx->field->one();
        for (unsigned i = 1; i < k; ++i) q = q * at(perm_apply(nu, i), perm_apply(nu, k));
        v = skew_commutator(v, Polynomial::variable(ctx, vars[perm_apply(nu, k) - 1]), q);
    }
    return v;
}

/// The companion ladder with inverted transposed factors
/// q_k^* = prod_{i<k} p[v(k)][v(i)]^(-1).
inline Polynomial commutator_ladder_minus(const Ctx& ctx, const std::vector<unsigned>& vars,
                                          const Perm& nu) {
    auto at = [&](unsigned a, unsigned b) { return ctx->at(vars[a - 1], vars[b - 1]); };
    Polynomial v = Polynomial::variable(ctx, vars[perm_apply(nu, 1) - 1]);
    for (unsigned k = 2; k <= vars.size(); ++k) {
        Scalar q = ctx->field->one();
        for (unsigned i = 1; i < k; ++i)
            q = q * at(perm_apply(nu, k), perm_apply(nu, i)).inv();
        v = skew_commutator(v, Polynomial::variable(ctx, vars[perm_apply(nu, k) - 1]), q);
    }
    return v;
}

/* ---------- primitivity predicates ---------- */

struct PrimitivityReport {
    bool verdict = false;
    TensorPolynomial defect;      // Delta(W) - W (x) 1 - g_W (x) W
    GroupElement group_degree;
};

inline TensorPolynomial primitivity_defect(const Polynomial& w, const GroupElement& g) {
    const Ctx& ctx = w.ctx();
    TensorPolynomial d = coproduct(w);
    TensorPolynomial sub(ctx);
    Monomial unit_mono(GroupElement(ctx->n), {});
    Monomial g_mono(g, {});
    for (const auto& [m, c] : w.terms()) {
        sub.add_term(m, unit_mono, c);
        sub.add_term(g_mono, m, c);
    }
    return d - sub;
}

/// Exact skew-primitivity test: verdict true iff the defect tensor vanishes.
/// Requires a nonzero group-homogeneous input (NotGroupHomogeneous otherwise).
inline PrimitivityReport is_skew_primitive(const Polynomial& w) {
    if (w.is_zero()) throw Error("primitivity test requires a nonzero polynomial");
    PrimitivityReport r;
    r.group_degree = group_degree(w);  // throws NotGroupHomogeneous on mixed degrees
    r.defect = primitivity_defect(w, r.group_degree);
    r.verdict = r.defect.is_zero();
    return r;
}

inline void require_contains(const Polynomial& w, unsigned x) {
    for (const auto& [m, c] : w.terms())
        for (unsigned t : m.word)
            if (t == x) return;
    throw VariableAbsent("x" + std::to_string(x));
}

/// Left primitivity w.r.t. x: the part of Delta(W) - W (x) 1 whose left
/// component still contains x must vanish.
inline bool is_left_primitive_wrt(const Polynomial& w, unsigned x) {
    require_contains(w, x);
    const Ctx& ctx = w.ctx();
    TensorPolynomial d = coproduct(w);
    TensorPolynomial sub(ctx);
    Monomial unit_mono(GroupElement(ctx->n), {});
    for (const auto& [m, c] : w.terms()) sub.add_term(m, unit_mono, c);
    TensorPolynomial f = (d - sub).filter(
        [&](const Monomial& l, const Monomial&) { return word_degree_in(l, x) > 0; });
    return f.is_zero();
}

/// The obstruction witnessing failure of left primitivity (zero tensor when
/// the polynomial is left primitive).
inline TensorPolynomial left_primitivity_obstruction(const Polynomial& w, unsigned x) {
    const Ctx& ctx = w.ctx();
    TensorPolynomial d = coproduct(w);
    TensorPolynomial sub(ctx);
    Monomial unit_mono(GroupElement(ctx->n), {});
    for (const auto& [m, c] : w.terms()) sub.add_term(m, unit_mono, c);
    return (d - sub).filter(
        [&](const Monomial& l, const Monomial&) { return word_degree_in(l, x) > 0; });
}

/// Right primitivity w.r.t. x: the part of Delta(W) - g_W (x) W whose right
/// component still contains x must vanish.  Needs group homogeneity.
inline bool is_right_primitive_wrt(const Polynomial& w, unsigned x) {
    require_contains(w, x);
    const Ctx& ctx = w.ctx();
    GroupElement g = group_degree(w);
    TensorPolynomial d = coproduct(w);
    TensorPolynomial sub(ctx);
    Monomial g_mono(g, {});
    for (const auto& [m, c] : w.terms()) sub.add_term(g_mono, m, c);
    TensorPolynomial f = (d - sub).filter(
        [&](const Monomial&, const Monomial& r) { return word_degree_in(r, x) > 0; });
    return f.is_zero();
}

/* ---------- operation bases ---------- */

struct Operation {
    Polynomial poly;
    std::vector<std::pair<Perm, Scalar>> beta;  // coordinates in the plus-ladder basis
};

struct OperationBasis {
    Ctx ctx;
    std::vector<unsigned> vars;
    std::vector<Operation> ops;
    std::size_t dimension() const { return ops.size(); }
};

struct DecomposeResult {
    bool ok = false;
    std::vector<std::pair<Perm, Scalar>> beta;
    TensorPolynomial obstruction;
};

inline bool is_multilinear_in(const Polynomial& w, const std::vector<unsigned>& vars) {
    for (const auto& [m, c] : w.terms()) {
        if (!m.g.is_identity()) return false;
        if (m.word.size() != vars.size()) return false;
        auto sorted = m.word;
        std::sort(sorted.begin(), sorted.end());
        auto ref = vars;
        std::sort(ref.begin(), ref.end());
        if (sorted != ref) return false;
    }
    return true;
}

inline std::vector<unsigned> multilinear_vars(const Polynomial& w) {
    if (w.is_zero()) throw Error("zero polynomial has no variable set");
    auto vars = w.terms().begin()->first.word;
    std::sort(vars.begin(), vars.end());
    if (std::adjacent_find(vars.begin(), vars.end()) != vars.end() ||
        !is_multilinear_in(w, vars))
        throw Error("polynomial is not multilinear");
    return vars;
}

/// Reads off the plus-ladder coordinates of a multilinear polynomial that is
/// left primitive w.r.t. its smallest variable: beta_nu is the coefficient of
/// the word starting with that variable and continuing in nu-order.  When the
/// polynomial is not left primitive, reports the obstructing tensor instead.
inline DecomposeResult decompose_left_primitive(const Polynomial& w) {
    DecomposeResult out;
    auto vars = multilinear_vars(w);
    const Ctx& ctx = w.ctx();
    auto nus = operation_perm_order(static_cast<unsigned>(vars.size()));
    Polynomial recon = Polynomial::zero(ctx);
    for (const auto& nu : nus) {
        std::vector<unsigned> word;
        for (unsigned i = 1; i <= vars.size(); ++i) word.push_back(vars[perm_apply(nu, i) - 1]);
        Scalar b = w.coeff_of_word(word);
        out.beta.push_back({nu, b});
        if (!b.is_zero()) recon = recon + b * commutator_ladder_plus(ctx, vars, nu);
    }
    if (recon == w) {
        out.ok = true;
        return out;
    }
    out.ok = false;
    out.beta.clear();
    out.obstruction = left_primitivity_obstruction(w, vars.front());
    return out;
}

/// Independent oracle for the space of multilinear quantum operations: sets
/// up the generic combination over all n! words, expands the primitivity
/// defect, and computes an exact null-space basis of the resulting linear
/// system.  Arity is capped at 5.
inline OperationBasis brute_force_multilinear_space(const Ctx& ctx,
                                                    std::vector<unsigned> vars = {}) {
    if (vars.empty())
        for (unsigned i = 1; i <= ctx->n; ++i) vars.push_back(i);
    const auto k = static_cast<unsigned>(vars.size());
    if (k > 5) throw ArityTooLarge("brute force supports at most 5 variables");
    const FieldPtr& f = ctx->field;

    auto perms = symmetric_group(k);  // lexicographic one-line order
    std::map<TensorPolynomial::Key, Vec> rows;
    GroupElement g(ctx->n);
    for (unsigned v : vars) g.e[v - 1] += 1;
    for (std::size_t c = 0; c < perms.size(); ++c) {
        std::vector<unsigned> word;
        for (unsigned i = 1; i <= k; ++i) word.push_back(vars[perm_apply(perms[c], i) - 1]);
        TensorPolynomial defect = primitivity_defect(Polynomial::word(ctx, word), g);
        for (const auto& [key, coef] : defect.terms()) {
            auto it = rows.find(key);
            if (it == rows.end())
                it = rows.emplace(key, Vec(perms.size(), f->zero())).first;
            it->second[c] = it->second[c] + coef;
        }
    }
    Mat m;
    m.reserve(rows.size());
    for (auto& [key, row] : rows) m.push_back(row);
    auto basis = rref_rows(nullspace(m, perms.size(), f), perms.size(), f);

    OperationBasis out;
    out.ctx = ctx;
    out.vars = vars;
    for (const auto& alpha : basis) {
        Polynomial w = Polynomial::zero(ctx);
        for (std::size_t c = 0; c < perms.size(); ++c) {
            if (alpha[c].is_zero()) continue;
            std::vector<unsigned> word;
            for (unsigned i = 1; i <= k; ++i) word.push_back(vars[perm_apply(perms[c], i) - 1]);
            w.add_term(Monomial(GroupElement(ctx->n), word), alpha[c]);
        }
        auto rep = is_skew_primitive(w);
        if (!rep.verdict)
            throw InternalError("brute-force null space produced a non-primitive element");
        auto dec = decompose_left_primitive(w);
        Operation op;
        op.poly = std::move(w);
        if (dec.ok) op.beta = std::move(dec.beta);
        out.ops.push_back(std::move(op));
    }
    return out;
}

/// Coordinates of a set of polynomials in their joint monomial support.
inline std::pair<std::vector<Vec>, std::vector<Monomial>> polynomial_coordinates(
    const std::vector<Polynomial>& ps, const FieldPtr& f) {
    std::map<Monomial, std::size_t> index;
    for (const auto& p : ps)
        for (const auto& [m, c] : p.terms())
            index.emplace(m, 0);
    std::size_t i = 0;
    std::vector<Monomial> monos;
    for (auto& [m, idx] : index) {
        idx = i++;
        monos.push_back(m);
    }
    std::vector<Vec> vecs;
    for (const auto& p : ps) {
        Vec v(index.size(), f->zero());
        for (const auto& [m, c] : p.terms()) v[index.at(m)] = c;
        vecs.push_back(std::move(v));
    }
    return {vecs, monos};
}

/// Exact span equality of two polynomial lists.
inline bool polynomial_spans_equal(const std::vector<Polynomial>& a,
                                   const std::vector<Polynomial>& b, const FieldPtr& f) {
    std::vector<Polynomial> all = a;
    all.insert(all.end(), b.begin(), b.end());
    auto [vecs, monos] = polynomial_coordinates(all, f);
    std::vector<Vec> va(vecs.begin(), vecs.begin() + a.size());
    std::vector<Vec> vb(vecs.begin() + a.size(), vecs.end());
    return spans_equal(va, vb, monos.size(), f);
}

}  // namespace qlie
