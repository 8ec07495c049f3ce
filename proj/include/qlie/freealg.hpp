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

#include <map>
#include <tuple>

namespace qlie {

constexpr std::size_t kMaxCoproductWord = 16;

/// Basis monomial of the free enveloping algebra: a group prefix on the left
/// followed by a word in the quantum variables.
struct Monomial {
    GroupElement g;
    std::vector<unsigned> word;  // 1-based variable indices

    Monomial() = default;
    Monomial(GroupElement gg, std::vector<unsigned> w) : g(std::move(gg)), word(std::move(w)) {}

    bool operator<(const Monomial& o) const {
        if (g != o.g) return g < o.g;
        return word < o.word;
    }
    bool operator==(const Monomial& o) const { return g == o.g && word == o.word; }
};

/// Total group degree of a monomial: prefix plus the grouplikes of its letters.
inline GroupElement group_degree(const Monomial& m, std::size_t n) {
    GroupElement t = m.g;
    if (t.e.empty()) t = GroupElement(n);
    for (unsigned x : m.word) t.e[x - 1] += 1;
    return t;
}

/// Element of the free enveloping algebra: a finite Scalar-linear combination
/// of monomials, canonical (no zero coefficients, deterministic order).
class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(Ctx c) : ctx_(std::move(c)) {}

    static Polynomial zero(Ctx c) { return Polynomial(std::move(c)); }
    static Polynomial unit(Ctx c) {
        Polynomial p(c);
        p.add_term(Monomial(GroupElement(c->n), {}), c->field->one());
        return p;
    }
    static Polynomial variable(Ctx c, unsigned i) {
        Polynomial p(c);
        p.add_term(Monomial(GroupElement(c->n), {i}), c->field->one());
        return p;
    }
    static Polynomial grouplike(Ctx c, GroupElement g) {
        Polynomial p(c);
        p.add_term(Monomial(std::move(g), {}), c->field->one());
        return p;
    }
    static Polynomial word(Ctx c, std::vector<unsigned> w) {
        Polynomial p(c);
        p.add_term(Monomial(GroupElement(c->n), std::move(w)), c->field->one());
        return p;
    }

    const Ctx& ctx() const { return ctx_; }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Scalar coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? ctx_->field->zero() : it->second;
    }
    Scalar coeff_of_word(const std::vector<unsigned>& w) const {
        return coeff(Monomial(GroupElement(ctx_->n), w));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        check_same_context(a.ctx_, b.ctx_);
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        check_same_context(a.ctx_, b.ctx_);
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    Polynomial operator-() const {
        Polynomial r(ctx_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend Polynomial operator*(const Scalar& s, const Polynomial& a) {
        if (!s.field()->same(*a.ctx_->field)) throw MixedFields();
        Polynomial r(a.ctx_);
        for (const auto& [m, c] : a.terms_) r.add_term(m, s * c);
        return r;
    }

    /// Product with the normalization rule x g = chi^x(g) g x applied so the
    /// full group prefix ends up on the left.
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_same_context(a.ctx_, b.ctx_);
        Polynomial r(a.ctx_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Scalar chi = a.ctx_->chi_word_on_group(ma.word, mb.g);
                Monomial m(ma.g + mb.g, ma.word);
                m.word.insert(m.word.end(), mb.word.begin(), mb.word.end());
                r.add_term(m, ca * cb * chi);
            }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        check_same_context(a.ctx_, b.ctx_);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string to_string() const;
    static Polynomial parse(Ctx c, const std::string& text);

   private:
    Ctx ctx_;
    std::map<Monomial, Scalar> terms_;
};

inline Polynomial skew_commutator(const Polynomial& a, const Polynomial& b, const Scalar& p) {
    return a * b - p * (b * a);
}

inline Polynomial power(const Polynomial& a, unsigned n) {
    Polynomial r = Polynomial::unit(a.ctx());
    for (unsigned i = 0; i < n; ++i) r = r * a;
    return r;
}

/// Finite Scalar-linear combination of monomial (x) monomial pairs.
class TensorPolynomial {
   public:
    using Key = std::pair<Monomial, Monomial>;

    TensorPolynomial() = default;
    explicit TensorPolynomial(Ctx c) : ctx_(std::move(c)) {}

    const Ctx& ctx() const { return ctx_; }
    const std::map<Key, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& l, const Monomial& r, const Scalar& c) {
        if (c.is_zero()) return;
        Key k{l, r};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(std::move(k), c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend TensorPolynomial operator+(const TensorPolynomial& a, const TensorPolynomial& b) {
        check_same_context(a.ctx_, b.ctx_);
        TensorPolynomial r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
        return r;
    }
    friend TensorPolynomial operator-(const TensorPolynomial& a, const TensorPolynomial& b) {
        check_same_context(a.ctx_, b.ctx_);
        TensorPolynomial r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, -c);
        return r;
    }
    friend bool operator==(const TensorPolynomial& a, const TensorPolynomial& b) {
        check_same_context(a.ctx_, b.ctx_);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorPolynomial& a, const TensorPolynomial& b) {
        return !(a == b);
    }

    /// Keep only terms selected by the predicate.
    template <class Pred>
    TensorPolynomial filter(Pred&& keep) const {
        TensorPolynomial r(ctx_);
        for (const auto& [k, c] : terms_)
            if (keep(k.first, k.second)) r.terms_.emplace(k, c);
        return r;
    }

    std::string to_string() const;

   private:
    Ctx ctx_;
    std::map<Key, Scalar> terms_;
};

/* ---------- coproducts ---------- */

namespace detail {

inline void check_word_length(const std::vector<unsigned>& w) {
    if (w.size() > kMaxCoproductWord)
        throw WordTooLong("coproduct words are capped at " + std::to_string(kMaxCoproductWord) +
                          " letters");
}

}  // namespace detail

/// Comultiplication: Delta(g w) = (g (x) g) * sum over subwords v of w of
/// alpha_v g_v [w-v] (x) v, in canonical (prefix-left) form.
inline TensorPolynomial coproduct(const Polynomial& a) {
    const Ctx& ctx = a.ctx();
    TensorPolynomial out(ctx);
    const Scalar one = ctx->field->one();
    for (const auto& [mono, coef] : a.terms()) {
        const auto& w = mono.word;
        detail::check_word_length(w);
        const std::size_t len = w.size();
        // alpha[mask]: product of p[w_i][w_j] over pairs i < j, i not in mask,
        // j in mask; built incrementally from mask minus its highest bit
        std::vector<Scalar> alpha(std::size_t(1) << len, one);
        for (std::size_t mask = 1; mask < alpha.size(); ++mask) {
            std::size_t j = 0;
            for (std::size_t t = 0; t < len; ++t)
                if (mask & (std::size_t(1) << t)) j = t;
            std::size_t rest = mask ^ (std::size_t(1) << j);
            Scalar v = alpha[rest];
            for (std::size_t i = 0; i < j; ++i)
                if (!(mask & (std::size_t(1) << i))) v = v * ctx->at(w[i], w[j]);
            alpha[mask] = v;
        }
        for (std::size_t mask = 0; mask < alpha.size(); ++mask) {
            GroupElement gv(ctx->n);
            std::vector<unsigned> sub, rest;
            for (std::size_t t = 0; t < len; ++t) {
                if (mask & (std::size_t(1) << t)) {
                    sub.push_back(w[t]);
                    gv.e[w[t] - 1] += 1;
                } else {
                    rest.push_back(w[t]);
                }
            }
            Monomial left(mono.g + gv, std::move(rest));
            Monomial right(mono.g, std::move(sub));
            out.add_term(left, right, coef * alpha[mask]);
        }
    }
    return out;
}

/// Same comultiplication computed through the alternative coefficient rule
/// with group factors written on the right of [w-v] and then normalized.
inline TensorPolynomial coproduct_right_form(const Polynomial& a) {
    const Ctx& ctx = a.ctx();
    TensorPolynomial out(ctx);
    for (const auto& [mono, coef] : a.terms()) {
        const auto& w = mono.word;
        detail::check_word_length(w);
        const std::size_t len = w.size();
        for (std::size_t mask = 0; mask < (std::size_t(1) << len); ++mask) {
            GroupElement gv(ctx->n);
            std::vector<unsigned> sub, rest;
            Scalar aprime = ctx->field->one();
            for (std::size_t t = 0; t < len; ++t) {
                if (mask & (std::size_t(1) << t)) {
                    sub.push_back(w[t]);
                    gv.e[w[t] - 1] += 1;
                } else {
                    rest.push_back(w[t]);
                }
            }
            // alpha'_v: inverses over pairs (x right of y), x in [w-v], y in v
            for (std::size_t i = 0; i < len; ++i)
                if (!(mask & (std::size_t(1) << i)))
                    for (std::size_t j = 0; j < i; ++j)
                        if (mask & (std::size_t(1) << j))
                            aprime = aprime * ctx->at(w[i], w[j]).inv();
            // normalize [w-v] g_v -> chi^{[w-v]}(g_v) g_v [w-v]
            Scalar norm = ctx->chi_word_on_group(rest, gv);
            Monomial left(mono.g + gv, std::move(rest));
            Monomial right(mono.g, std::move(sub));
            out.add_term(left, right, coef * aprime * norm);
        }
    }
    return out;
}

/// Braided comultiplication on the prefix-free side: expands the product of
/// (x (x) 1 + 1 (x) x) under the twisted commutation rule
/// (1 (x) x)(y (x) 1) = chi^y(g_x)^{-1} (y (x) x).
inline TensorPolynomial braided_coproduct(const Polynomial& a) {
    const Ctx& ctx = a.ctx();
    TensorPolynomial out(ctx);
    for (const auto& [mono, coef] : a.terms()) {
        if (!mono.g.is_identity()) throw GroupPrefixPresent();
        detail::check_word_length(mono.word);
        std::map<std::pair<std::vector<unsigned>, std::vector<unsigned>>, Scalar> acc;
        acc[{{}, {}}] = coef;
        for (unsigned x : mono.word) {
            std::map<std::pair<std::vector<unsigned>, std::vector<unsigned>>, Scalar> nxt;
            for (const auto& [uv, c] : acc) {
                // append x on the left component: crosses every letter of v
                Scalar cross = ctx->field->one();
                for (unsigned y : uv.second) cross = cross * ctx->at(x, y).inv();
                auto u1 = uv.first;
                u1.push_back(x);
                auto k1 = std::make_pair(std::move(u1), uv.second);
                auto it = nxt.find(k1);
                if (it == nxt.end())
                    nxt.emplace(std::move(k1), c * cross);
                else
                    it->second = it->second + c * cross;
                // append x on the right component: no crossing
                auto v2 = uv.second;
                v2.push_back(x);
                auto k2 = std::make_pair(uv.first, std::move(v2));
                it = nxt.find(k2);
                if (it == nxt.end())
                    nxt.emplace(std::move(k2), c);
                else
                    it->second = it->second + c;
            }
            acc = std::move(nxt);
        }
        for (const auto& [uv, c] : acc)
            out.add_term(Monomial(GroupElement(ctx->n), uv.first),
                         Monomial(GroupElement(ctx->n), uv.second), c);
    }
    return out;
}

/// Counit: kills every monomial with a nonempty word, maps grouplikes to 1.
inline Scalar counit(const Polynomial& a) {
    Scalar r = a.ctx()->field->zero();
    for (const auto& [m, c] : a.terms())
        if (m.word.empty()) r = r + c;
    return r;
}

/// Antipode: S(g) = g^-1, S(x_i) = -g_i^-1 x_i, extended anti-multiplicatively.
inline Polynomial antipode(const Polynomial& a) {
    const Ctx& ctx = a.ctx();
    Polynomial out(ctx);
    for (const auto& [m, c] : a.terms()) {
        Polynomial prod = Polynomial::unit(ctx);
        for (auto it = m.word.rbegin(); it != m.word.rend(); ++it) {
            Polynomial s(ctx);
            GroupElement ginv = -GroupElement::generator(ctx->n, *it);
            s.add_term(Monomial(ginv, {*it}), -ctx->field->one());
            prod = prod * s;
        }
        prod = prod * Polynomial::grouplike(ctx, -m.g);
        out = out + c * prod;
    }
    return out;
}

/* ---------- degree functions ---------- */

struct DegreeReport {
    int value = 0;         // common degree, or the per-monomial maximum
    bool homogeneous = true;
};

inline int word_degree(const Monomial& m) { return static_cast<int>(m.word.size()); }
inline int word_degree_in(const Monomial& m, unsigned x) {
    int d = 0;
    for (unsigned t : m.word)
        if (t == x) ++d;
    return d;
}

namespace detail {

template <class Range, class F>
DegreeReport degree_report(const Range& terms, F&& degree_of) {
    DegreeReport r;
    bool first = true;
    for (const auto& kv : terms) {
        int d = degree_of(kv.first);
        if (first) {
            r.value = d;
            first = false;
        } else if (d != r.value) {
            r.homogeneous = false;
            r.value = std::max(r.value, d);
        }
    }
    return r;
}

}  // namespace detail

inline DegreeReport degree_d(const Polynomial& a) {
    return detail::degree_report(a.terms(), [](const Monomial& m) { return word_degree(m); });
}
inline DegreeReport degree_dx(const Polynomial& a, unsigned x) {
    return detail::degree_report(a.terms(),
                                 [&](const Monomial& m) { return word_degree_in(m, x); });
}
inline DegreeReport degree_dl(const TensorPolynomial& t) {
    return detail::degree_report(t.terms(),
                                 [](const auto& k) { return word_degree(k.first); });
}
inline DegreeReport degree_dr(const TensorPolynomial& t) {
    return detail::degree_report(t.terms(),
                                 [](const auto& k) { return word_degree(k.second); });
}
inline DegreeReport degree_dlx(const TensorPolynomial& t, unsigned x) {
    return detail::degree_report(t.terms(),
                                 [&](const auto& k) { return word_degree_in(k.first, x); });
}
inline DegreeReport degree_drx(const TensorPolynomial& t, unsigned x) {
    return detail::degree_report(t.terms(),
                                 [&](const auto& k) { return word_degree_in(k.second, x); });
}

/// Common total group degree of all monomials; error when mixed.
inline GroupElement group_degree(const Polynomial& a) {
    if (a.is_zero()) return GroupElement(a.ctx()->n);
    bool first = true;
    GroupElement g;
    for (const auto& [m, c] : a.terms()) {
        GroupElement t = group_degree(m, a.ctx()->n);
        if (first) {
            g = t;
            first = false;
        } else if (t != g) {
            throw NotGroupHomogeneous();
        }
    }
    return g;
}

/// Weight of a (weight-homogeneous) polynomial evaluated on g_j, for each j.
/// The weight of a monomial is the product of its letters' characters.
inline std::vector<Scalar> weight_on_generators(const Polynomial& a) {
    const Ctx& ctx = a.ctx();
    std::vector<Scalar> w(ctx->n, ctx->field->one());
    bool first = true;
    for (const auto& [m, c] : a.terms()) {
        std::vector<Scalar> cur(ctx->n, ctx->field->one());
        for (unsigned j = 1; j <= ctx->n; ++j)
            cur[j - 1] = ctx->chi_word_on_group(m.word, GroupElement::generator(ctx->n, j));
        if (first) {
            w = cur;
            first = false;
        } else {
            for (std::size_t j = 0; j < w.size(); ++j)
                if (!(w[j] == cur[j])) throw NotCharacterHomogeneous();
        }
    }
    return w;
}

/// chi^a(g_b) for group-homogeneous a, b: the pairing of composite elements.
inline Scalar pairing_of(const Polynomial& a, const Polynomial& b) {
    GroupElement gb = group_degree(b);
    std::vector<Scalar> wa = weight_on_generators(a);
    Scalar r = a.ctx()->field->one();
    for (std::size_t j = 0; j < gb.e.size(); ++j)
        if (gb.e[j]) r = r * wa[j].pow(gb.e[j]);
    return r;
}

/* ---------- text form ---------- */

namespace detail {

inline std::string monomial_atoms(const Monomial& m) {
    std::string s;
    for (std::size_t j = 0; j < m.g.e.size(); ++j) {
        if (!m.g.e[j]) continue;
        if (!s.empty()) s += " ";
        s += "g" + std::to_string(j + 1);
        if (m.g.e[j] != 1) s += "^" + std::to_string(m.g.e[j]);
    }
    std::string w;
    for (unsigned x : m.word) {
        if (!w.empty()) w += " ";
        w += "x" + std::to_string(x);
    }
    if (!s.empty() && !w.empty()) return s + " * " + w;
    return s + w;
}

inline std::string term_string(const Scalar& c, const std::string& atoms, bool& neg) {
    std::string cs = c.to_string();
    neg = false;
    if (cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos &&
        cs.find('(') == std::string::npos) {
        neg = true;
        cs = cs.substr(1);
    }
    if (needs_parens(cs)) cs = "(" + cs + ")";
    if (atoms.empty()) return cs;
    if (cs == "1") return atoms;
    return cs + " * " + atoms;
}

}  // namespace detail

inline std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        bool neg = false;
        std::string piece = detail::term_string(c, detail::monomial_atoms(m), neg);
        if (out.empty())
            out = (neg ? "-" : "") + piece;
        else
            out += (neg ? " - " : " + ") + piece;
    }
    return out;
}

inline std::string TensorPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        std::string l = detail::monomial_atoms(k.first);
        std::string r = detail::monomial_atoms(k.second);
        if (l.empty()) l = "1";
        if (r.empty()) r = "1";
        bool neg = false;
        std::string piece = detail::term_string(c, l + " (x) " + r, neg);
        if (out.empty())
            out = (neg ? "-" : "") + piece;
        else
            out += (neg ? " - " : " + ") + piece;
    }
    return out;
}

inline Polynomial Polynomial::parse(Ctx c, const std::string& text) {
    detail::Lexer lex(text);
    detail::ScalarParser sp{lex, *c->field, c->subst.empty() ? nullptr : &c->subst};
    Polynomial out(c);

    auto parse_signed_exponent = [&]() -> int {
        detail::Token t = lex.next();
        bool neg = false;
        if (t.type == detail::Token::Minus) {
            neg = true;
            t = lex.next();
        }
        if (t.type != detail::Token::Int) throw ParseError("expected integer exponent");
        int e = std::stoi(t.text);
        return neg ? -e : e;
    };

    bool term_negative = false;
    bool any = false;
    while (true) {
        detail::Token t = lex.peek();
        if (t.type == detail::Token::End) break;
        if (t.type == detail::Token::Plus || t.type == detail::Token::Minus) {
            lex.next();
            term_negative = t.type == detail::Token::Minus;
            t = lex.peek();
            if (t.type == detail::Token::End) throw ParseError("dangling sign");
        }
        // one term
        Scalar coef = c->field->one();
        GroupElement g(c->n);
        std::vector<unsigned> word;
        bool saw_atom = false;
        while (true) {
            t = lex.peek();
            if (t.type == detail::Token::End || t.type == detail::Token::Plus ||
                (t.type == detail::Token::Minus)) {
                break;
            }
            if (t.type == detail::Token::Star) {
                lex.next();
                continue;
            }
            if (t.type == detail::Token::Slash) {
                lex.next();
                coef = coef / sp.parse_factor();
                saw_atom = true;
                continue;
            }
            if (t.type == detail::Token::Name) {
                // structural atoms g<k>, x<k>
                const std::string& s = t.text;
                if (s.size() >= 2 && (s[0] == 'g' || s[0] == 'x') &&
                    s.find_first_not_of("0123456789", 1) == std::string::npos) {
                    unsigned k = static_cast<unsigned>(std::stoul(s.substr(1)));
                    if (k < 1 || k > c->n) throw ParseError("variable index out of range: " + s);
                    lex.next();
                    if (s[0] == 'g') {
                        int e = 1;
                        if (lex.peek().type == detail::Token::Caret) {
                            lex.next();
                            e = parse_signed_exponent();
                        }
                        g.e[k - 1] += e;
                    } else {
                        word.push_back(k);
                        if (lex.peek().type == detail::Token::Caret) {
                            lex.next();
                            int e = parse_signed_exponent();
                            if (e < 1) throw ParseError("variable exponent must be positive");
                            for (int r = 1; r < e; ++r) word.push_back(k);
                        }
                    }
                    saw_atom = true;
                    continue;
                }
            }
            // anything else is a scalar factor
            coef = coef * sp.parse_factor();
            saw_atom = true;
        }
        if (!saw_atom) throw ParseError("empty term");
        if (term_negative) coef = -coef;
        out.add_term(Monomial(std::move(g), std::move(word)), coef);
        term_negative = false;
        any = true;
    }
    if (!any) throw ParseError("empty polynomial");
    return out;
}

}  // namespace qlie
