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

#include "qlie/cyclotomic.hpp"
#include "qlie/fp.hpp"
#include "qlie/ratfun.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

namespace qlie {

enum class FieldKind { rationals, cyclotomic, prime_char, rational_functions };

class Scalar;
struct Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Substitution applied while parsing scalar literals: symbol index -> value.
/// Used by constrained pairing contexts to eliminate one designated symbol.
using SymbolSubst = std::map<std::size_t, Scalar>;

/// Exact coefficient field, one of: rationals, cyclotomic(m), prime_char(l),
/// or a one-layer field of rational functions over one of the former.
struct Field : std::enable_shared_from_this<Field> {
    FieldKind kind = FieldKind::rationals;
    unsigned cyc_order = 0;                  // cyclotomic
    unsigned char_prime = 0;                 // prime_char
    FieldPtr base;                           // rational_functions
    std::vector<std::string> symbols;        // rational_functions
    std::shared_ptr<const CycTable> cyc;     // cached table (cyclotomic kinds)

    static FieldPtr rationals() {
        auto f = std::make_shared<Field>();
        f->kind = FieldKind::rationals;
        return f;
    }
    static FieldPtr cyclotomic(unsigned m) {
        if (m < 1) throw Error("cyclotomic order must be >= 1");
        auto f = std::make_shared<Field>();
        f->kind = FieldKind::cyclotomic;
        f->cyc_order = m;
        f->cyc = CycTable::get(m);
        return f;
    }
    static FieldPtr prime_char(unsigned l) {
        if (!is_prime(l)) throw Error("characteristic must be prime");
        auto f = std::make_shared<Field>();
        f->kind = FieldKind::prime_char;
        f->char_prime = l;
        return f;
    }
    static FieldPtr rational_functions(FieldPtr base_field, std::vector<std::string> syms) {
        if (base_field->kind == FieldKind::rational_functions)
            throw Error("only one rational-function layer is supported");
        auto f = std::make_shared<Field>();
        f->kind = FieldKind::rational_functions;
        f->base = std::move(base_field);
        f->symbols = std::move(syms);
        f->cyc = f->base->cyc;
        f->char_prime = f->base->char_prime;
        f->cyc_order = f->base->cyc_order;
        return f;
    }

    unsigned characteristic() const {
        return kind == FieldKind::prime_char ||
                       (kind == FieldKind::rational_functions &&
                        base->kind == FieldKind::prime_char)
                   ? char_prime
                   : 0;
    }

    bool same(const Field& o) const {
        if (this == &o) return true;
        if (kind != o.kind) return false;
        switch (kind) {
            case FieldKind::rationals: return true;
            case FieldKind::cyclotomic: return cyc_order == o.cyc_order;
            case FieldKind::prime_char: return char_prime == o.char_prime;
            case FieldKind::rational_functions:
                return base->same(*o.base) && symbols == o.symbols;
        }
        return false;
    }

    std::optional<std::size_t> symbol_index(const std::string& name) const {
        for (std::size_t i = 0; i < symbols.size(); ++i)
            if (symbols[i] == name) return i;
        return std::nullopt;
    }

    std::string spec_string() const;

    // element factories (defined after Scalar)
    Scalar zero() const;
    Scalar one() const;
    Scalar integer(const BigInt& n) const;
    Scalar integer(long n) const;
    Scalar rational(const Rational& r) const;
    Scalar generator() const;                 // cyclotomic generator z
    Scalar symbol(std::size_t i) const;       // rational-function symbol
    Scalar parse(const std::string& text, const SymbolSubst* subst = nullptr) const;

    static FieldPtr parse_spec(const std::string& text);

    FieldPtr self() const { return shared_from_this(); }
};

/// Value in an exact field.  Immutable; all operations are pure and produce
/// canonical forms, so equality is structural.
class Scalar {
   public:
    using Rep = std::variant<Rational, CycElem, FpElem, RatFun<Rational>, RatFun<CycElem>,
                             RatFun<FpElem>>;

    Scalar() = default;
    Scalar(FieldPtr f, Rep r) : field_(std::move(f)), rep_(std::move(r)) {}

    const FieldPtr& field() const { return field_; }
    const Rep& rep() const { return rep_; }

    bool is_zero() const {
        return std::visit([](const auto& x) { return qlie::is_zero(x); }, rep_);
    }

    Scalar inv() const {
        return std::visit([&](const auto& x) { return Scalar(field_, Rep(qlie::inv(x))); },
                          rep_);
    }

    Scalar operator-() const {
        return std::visit([&](const auto& x) { return Scalar(field_, Rep(-x)); }, rep_);
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return binop(a, b, [](const auto& x, const auto& y) { return x + y; });
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return binop(a, b, [](const auto& x, const auto& y) { return x - y; });
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return binop(a, b, [](const auto& x, const auto& y) { return x * y; });
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw DivisionByZero();
        return binop(a, b, [](const auto& x, const auto& y) { return x / y; });
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        check_same_field(a, b);
        return a.rep_ == b.rep_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar pow(long e) const {
        if (e == 0) return field_->one();
        Scalar b = e < 0 ? inv() : *this;
        unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : e;
        Scalar acc = field_->one();
        while (n) {
            if (n & 1) acc = acc * b;
            b = b * b;
            n >>= 1;
        }
        return acc;
    }

    /// True when the value involves no rational-function symbol.
    bool is_constant() const {
        if (field_->kind != FieldKind::rational_functions) return true;
        return std::visit(
            [](const auto& x) {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, RatFun<Rational>> ||
                              std::is_same_v<T, RatFun<CycElem>> ||
                              std::is_same_v<T, RatFun<FpElem>>) {
                    return x.num.is_constant() && x.den.is_constant();
                } else {
                    return true;
                }
            },
            rep_);
    }

    /// For a constant value of a rational-function field, the base-field value.
    Scalar constant_value() const;

    std::string to_string() const;

    static void check_same_field(const Scalar& a, const Scalar& b) {
        if (!a.field_ || !b.field_) throw InternalError("uninitialized scalar");
        if (!a.field_->same(*b.field_)) throw MixedFields();
    }

   private:
    template <class F>
    static Scalar binop(const Scalar& a, const Scalar& b, F&& f) {
        check_same_field(a, b);
        return std::visit(
            [&](const auto& x) -> Scalar {
                using T = std::decay_t<decltype(x)>;
                const T* y = std::get_if<T>(&b.rep_);
                if (!y) throw MixedFields();
                return Scalar(a.field_, Rep(f(x, *y)));
            },
            a.rep_);
    }

    FieldPtr field_;
    Rep rep_;
};

/* ---------- Field factories ---------- */

namespace detail {

template <class K>
K base_one(const Field& f);

template <>
inline Rational base_one<Rational>(const Field&) {
    return Rational(1);
}
template <>
inline CycElem base_one<CycElem>(const Field& f) {
    return CycElem::from_int(f.cyc, Rational(1));
}
template <>
inline FpElem base_one<FpElem>(const Field& f) {
    return FpElem(f.char_prime, 1);
}

template <class K>
RatFun<K> rf_constant(const Field& f, const K& c) {
    auto nv = static_cast<int>(f.symbols.size());
    RatFun<K> r;
    r.num = MPoly<K>::constant(nv, c);
    r.den = MPoly<K>::constant(nv, base_one<K>(f));
    return r;
}

template <class K>
RatFun<K> rf_symbol(const Field& f, std::size_t i) {
    auto nv = static_cast<int>(f.symbols.size());
    RatFun<K> r;
    r.num = MPoly<K>::variable(nv, static_cast<int>(i), base_one<K>(f));
    r.den = MPoly<K>::constant(nv, base_one<K>(f));
    return r;
}

}  // namespace detail

inline Scalar Field::zero() const { return integer(BigInt(0)); }
inline Scalar Field::one() const { return integer(BigInt(1)); }

inline Scalar Field::rational(const Rational& r) const {
    switch (kind) {
        case FieldKind::rationals: return Scalar(self(), Scalar::Rep(r));
        case FieldKind::cyclotomic:
            return Scalar(self(), Scalar::Rep(CycElem::from_int(cyc, r)));
        case FieldKind::prime_char: {
            BigInt num = numerator(r), den = denominator(r);
            BigInt l(char_prime);
            BigInt nn = num % l;
            if (nn < 0) nn += l;
            BigInt dd = den % l;
            if (dd < 0) dd += l;
            FpElem fn(char_prime, nn.convert_to<std::int64_t>());
            FpElem fd(char_prime, dd.convert_to<std::int64_t>());
            return Scalar(self(), Scalar::Rep(fn / fd));
        }
        case FieldKind::rational_functions:
            switch (base->kind) {
                case FieldKind::rationals:
                    return Scalar(self(), Scalar::Rep(detail::rf_constant<Rational>(*this, r)));
                case FieldKind::cyclotomic:
                    return Scalar(self(), Scalar::Rep(detail::rf_constant<CycElem>(
                                              *this, CycElem::from_int(cyc, r))));
                case FieldKind::prime_char: {
                    Scalar b = base->rational(r);
                    return Scalar(self(), Scalar::Rep(detail::rf_constant<FpElem>(
                                              *this, std::get<FpElem>(b.rep()))));
                }
                default: break;
            }
    }
    throw InternalError("bad field kind");
}

inline Scalar Field::integer(const BigInt& n) const { return rational(Rational(n)); }
inline Scalar Field::integer(long n) const { return integer(BigInt(n)); }

inline Scalar Field::generator() const {
    if (kind == FieldKind::cyclotomic)
        return Scalar(self(), Scalar::Rep(CycElem::generator(cyc)));
    if (kind == FieldKind::rational_functions && base->kind == FieldKind::cyclotomic)
        return Scalar(self(),
                      Scalar::Rep(detail::rf_constant<CycElem>(*this, CycElem::generator(cyc))));
    throw Error("field has no cyclotomic generator");
}

inline Scalar Field::symbol(std::size_t i) const {
    if (kind != FieldKind::rational_functions) throw Error("field has no symbols");
    if (i >= symbols.size()) throw Error("symbol index out of range");
    switch (base->kind) {
        case FieldKind::rationals:
            return Scalar(self(), Scalar::Rep(detail::rf_symbol<Rational>(*this, i)));
        case FieldKind::cyclotomic:
            return Scalar(self(), Scalar::Rep(detail::rf_symbol<CycElem>(*this, i)));
        case FieldKind::prime_char:
            return Scalar(self(), Scalar::Rep(detail::rf_symbol<FpElem>(*this, i)));
        default: break;
    }
    throw InternalError("bad base kind");
}

inline Scalar Scalar::constant_value() const {
    if (field_->kind != FieldKind::rational_functions)
        return *this;
    if (!is_constant()) throw Error("scalar is not constant");
    return std::visit(
        [&](const auto& x) -> Scalar {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, RatFun<Rational>> ||
                          std::is_same_v<T, RatFun<CycElem>> ||
                          std::is_same_v<T, RatFun<FpElem>>) {
                auto num = x.num.terms.empty() ? Scalar::Rep(Rational(0))
                                               : Scalar::Rep(x.num.leading().second);
                Scalar n = x.num.terms.empty() ? field_->base->zero()
                                               : Scalar(field_->base, num);
                Scalar d = Scalar(field_->base, Scalar::Rep(x.den.leading().second));
                return n / d;
            } else {
                throw InternalError("constant_value on non-ratfun");
            }
        },
        rep_);
}

/* ---------- rendering ---------- */

namespace detail {

inline std::string base_coeff_string(const Rational& r) { return qlie::to_string(r); }
inline std::string base_coeff_string(const CycElem& c) { return qlie::to_string(c); }
inline std::string base_coeff_string(const FpElem& f) { return qlie::to_string(f); }

inline bool needs_parens(const std::string& s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (depth == 0 && (c == ' ' || ((c == '+' || c == '-') && i > 0) || c == '/'))
            return true;
    }
    return false;
}

template <class K>
std::string mpoly_to_string(const MPoly<K>& f, const std::vector<std::string>& names) {
    if (f.terms.empty()) return "0";
    std::string out;
    for (const auto& t : f.terms) {
        std::string mono;
        for (int v = 0; v < f.nvars; ++v) {
            if (t.first[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[v];
            if (t.first[v] != 1) mono += "^" + std::to_string(t.first[v]);
        }
        std::string cs = base_coeff_string(t.second);
        bool neg = false;
        if (cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos) {
            neg = true;
            cs = cs.substr(1);
        }
        if (needs_parens(cs)) cs = "(" + cs + ")";
        std::string piece;
        if (mono.empty())
            piece = cs;
        else if (cs == "1")
            piece = mono;
        else
            piece = cs + "*" + mono;
        if (out.empty())
            out = (neg ? "-" : "") + piece;
        else
            out += (neg ? " - " : " + ") + piece;
    }
    return out;
}

template <class K>
std::string ratfun_to_string(const RatFun<K>& r, const std::vector<std::string>& names) {
    std::string n = mpoly_to_string(r.num, names);
    bool den_is_one = r.den.is_constant() && !r.den.is_zero_poly() &&
                      base_coeff_string(r.den.leading().second) == "1";
    if (den_is_one) {
        if (r.num.terms.size() <= 1) return n;
        return "(" + n + ")";
    }
    std::string d = mpoly_to_string(r.den, names);
    return "(" + n + ")/(" + d + ")";
}

}  // namespace detail

inline std::string Scalar::to_string() const {
    return std::visit(
        [&](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational> || std::is_same_v<T, CycElem> ||
                          std::is_same_v<T, FpElem>) {
                return detail::base_coeff_string(x);
            } else {
                return detail::ratfun_to_string(x, field_->symbols);
            }
        },
        rep_);
}

inline std::string Field::spec_string() const {
    switch (kind) {
        case FieldKind::rationals: return "rationals";
        case FieldKind::cyclotomic: return "cyclotomic(" + std::to_string(cyc_order) + ")";
        case FieldKind::prime_char: return "primechar(" + std::to_string(char_prime) + ")";
        case FieldKind::rational_functions: {
            std::string s = "ratfun(" + base->spec_string() + ";";
            for (std::size_t i = 0; i < symbols.size(); ++i)
                s += (i ? "," : "") + symbols[i];
            return s + ")";
        }
    }
    return "?";
}

/* ---------- lexing & parsing of scalar literals ---------- */

namespace detail {

struct Token {
    enum Type { End, Int, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen } type = End;
    std::string text;
};

struct Lexer {
    std::string src;
    std::size_t pos = 0;

    explicit Lexer(std::string s) : src(std::move(s)) {}

    Token peek() {
        std::size_t save = pos;
        Token t = next();
        pos = save;
        return t;
    }

    Token next() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos >= src.size()) return {Token::End, ""};
        char c = src[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t s = pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            return {Token::Int, src.substr(s, pos - s)};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t s = pos;
            while (pos < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
                ++pos;
            // bracket suffixes belong to the name: p[1][2]
            while (pos < src.size() && src[pos] == '[') {
                std::size_t close = src.find(']', pos);
                if (close == std::string::npos) throw ParseError("unterminated '['");
                pos = close + 1;
            }
            return {Token::Name, src.substr(s, pos - s)};
        }
        ++pos;
        switch (c) {
            case '+': return {Token::Plus, "+"};
            case '-': return {Token::Minus, "-"};
            case '*': return {Token::Star, "*"};
            case '/': return {Token::Slash, "/"};
            case '^': return {Token::Caret, "^"};
            case '(': return {Token::LParen, "("};
            case ')': return {Token::RParen, ")"};
            default: throw ParseError(std::string("unexpected character '") + c + "'");
        }
    }
};

struct ScalarParser {
    Lexer& lex;
    const Field& field;
    const SymbolSubst* subst;

    Scalar parse_expr() {
        Scalar v = parse_term();
        while (true) {
            Token t = lex.peek();
            if (t.type == Token::Plus) {
                lex.next();
                v = v + parse_term();
            } else if (t.type == Token::Minus) {
                lex.next();
                v = v - parse_term();
            } else {
                return v;
            }
        }
    }

    Scalar parse_term() {
        Scalar v = parse_factor();
        while (true) {
            Token t = lex.peek();
            if (t.type == Token::Star) {
                lex.next();
                v = v * parse_factor();
            } else if (t.type == Token::Slash) {
                lex.next();
                v = v / parse_factor();
            } else {
                return v;
            }
        }
    }

    Scalar parse_factor() {
        Token t = lex.peek();
        bool neg = false;
        if (t.type == Token::Minus) {
            lex.next();
            neg = true;
        }
        Scalar v = parse_primary();
        t = lex.peek();
        if (t.type == Token::Caret) {
            lex.next();
            long e = parse_int_exponent();
            v = v.pow(e);
        }
        return neg ? -v : v;
    }

    long parse_int_exponent() {
        Token t = lex.next();
        bool neg = false;
        if (t.type == Token::Minus) {
            neg = true;
            t = lex.next();
        }
        if (t.type != Token::Int) throw ParseError("expected integer exponent");
        long e = std::stol(t.text);
        return neg ? -e : e;
    }

    Scalar parse_primary() {
        Token t = lex.next();
        if (t.type == Token::Int) return field.integer(BigInt(t.text));
        if (t.type == Token::LParen) {
            Scalar v = parse_expr();
            Token close = lex.next();
            if (close.type != Token::RParen) throw ParseError("expected ')'");
            return v;
        }
        if (t.type == Token::Name) {
            if (t.text == "z") {
                if (field.kind == FieldKind::cyclotomic ||
                    (field.kind == FieldKind::rational_functions &&
                     field.base->kind == FieldKind::cyclotomic))
                    return field.generator();
            }
            auto idx = field.symbol_index(t.text);
            if (!idx) throw ParseError("unknown symbol '" + t.text + "'");
            if (subst) {
                auto it = subst->find(*idx);
                if (it != subst->end()) return it->second;
            }
            return field.symbol(*idx);
        }
        throw ParseError("unexpected token '" + t.text + "'");
    }
};

}  // namespace detail

inline Scalar Field::parse(const std::string& text, const SymbolSubst* subst) const {
    detail::Lexer lex(text);
    detail::ScalarParser p{lex, *this, subst};
    Scalar v = p.parse_expr();
    if (lex.next().type != detail::Token::End) throw ParseError("trailing input in scalar");
    return v;
}

inline FieldPtr Field::parse_spec(const std::string& text) {
    auto strip = [](std::string s) {
        std::size_t a = s.find_first_not_of(" \t");
        std::size_t b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string s = strip(text);
    if (s == "rationals" || s == "Q") return rationals();
    auto starts = [&](const char* p) { return s.rfind(p, 0) == 0; };
    if (starts("cyclotomic(") && s.back() == ')')
        return cyclotomic(static_cast<unsigned>(std::stoul(s.substr(11, s.size() - 12))));
    if (starts("primechar(") && s.back() == ')')
        return prime_char(static_cast<unsigned>(std::stoul(s.substr(10, s.size() - 11))));
    if (starts("ratfun(") && s.back() == ')') {
        std::string inner = s.substr(7, s.size() - 8);
        // split at the top-level ';'
        int depth = 0;
        std::size_t semi = std::string::npos;
        for (std::size_t i = 0; i < inner.size(); ++i) {
            if (inner[i] == '(') ++depth;
            if (inner[i] == ')') --depth;
            if (inner[i] == ';' && depth == 0) {
                semi = i;
                break;
            }
        }
        if (semi == std::string::npos) throw ParseError("ratfun spec needs ';'");
        FieldPtr b = parse_spec(inner.substr(0, semi));
        std::vector<std::string> syms;
        std::string rest = inner.substr(semi + 1);
        std::size_t start = 0;
        while (start <= rest.size()) {
            std::size_t comma = rest.find(',', start);
            std::string sym = strip(comma == std::string::npos ? rest.substr(start)
                                                               : rest.substr(start, comma - start));
            if (!sym.empty()) syms.push_back(sym);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return rational_functions(b, std::move(syms));
    }
    throw ParseError("bad field spec: " + s);
}

/* ---------- q-combinatorics ---------- */

/// q-integer: 1 + t + ... + t^(n-1); zero when n = 0.
inline Scalar q_int(const Scalar& t, unsigned n) {
    Scalar acc = t.field()->zero();
    Scalar power = t.field()->one();
    for (unsigned i = 0; i < n; ++i) {
        acc = acc + power;
        power = power * t;
    }
    return acc;
}

/// Gaussian binomial coefficient evaluated through the q-Pascal recurrence
/// [n,k] = [n-1,k-1] + t^k [n-1,k], which is total even at roots of unity
/// where the factorial quotient degenerates to 0/0.
inline Scalar gauss_binom(unsigned n, unsigned k, const Scalar& t) {
    if (k > n) throw Error("gauss_binom requires 0 <= k <= n");
    const Scalar one = t.field()->one();
    std::vector<Scalar> row(n + 1, t.field()->zero());
    row[0] = one;
    for (unsigned i = 1; i <= n; ++i) {
        // in-place update from the right
        for (unsigned j = std::min(i, k); j >= 1; --j)
            row[j] = row[j - 1] + t.pow(static_cast<long>(j)) * row[j];
    }
    return row[k];
}

/// Symmetric (balanced) q-binomial: the Gaussian binomial at t^2 scaled by
/// t^(-k(m-k)).  This is the variant appearing in Serre relations.
inline Scalar balanced_binom(unsigned m, unsigned k, const Scalar& t) {
    Scalar g = gauss_binom(m, k, t * t);
    return g * t.pow(-static_cast<long>(k) * static_cast<long>(m - k));
}

}  // namespace qlie
