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
#include "qlie/perm.hpp"

#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace qlie {

/// Element of the free abelian group on the generators g_1..g_n attached to
/// the quantum variables: an integer exponent vector.
struct GroupElement {
    std::vector<int> e;

    GroupElement() = default;
    explicit GroupElement(std::size_t n) : e(n, 0) {}

    bool is_identity() const {
        for (int x : e)
            if (x) return false;
        return true;
    }
    GroupElement operator+(const GroupElement& o) const {
        GroupElement r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }
    GroupElement operator-() const {
        GroupElement r = *this;
        for (auto& x : r.e) x = -x;
        return r;
    }
    bool operator==(const GroupElement& o) const { return e == o.e; }
    bool operator!=(const GroupElement& o) const { return e != o.e; }
    bool operator<(const GroupElement& o) const { return e < o.e; }

    static GroupElement generator(std::size_t n, unsigned i) {  // 1-based i
        GroupElement g(n);
        g.e[i - 1] = 1;
        return g;
    }
};

struct QuantumVariable {
    unsigned index = 0;  // 1..n
    std::string name;    // display, "x<i>"
};

/// Word in the pairing letters: a sequence of index pairs (i, j).
using BraceWord = std::vector<std::pair<unsigned, unsigned>>;

class PairingContext;
using Ctx = std::shared_ptr<const PairingContext>;

/// n quantum variables together with the bicharacter matrix p[i][j] = chi^i(g_j)
/// over an exact field.  Immutable after construction; all evaluations are pure.
class PairingContext : public std::enable_shared_from_this<PairingContext> {
   public:
    FieldPtr field;
    std::size_t n = 0;
    std::vector<QuantumVariable> vars;
    std::vector<std::vector<Scalar>> p;  // 0-based storage
    std::optional<std::pair<unsigned, unsigned>> constrained;  // eliminated entry (i, j)
    SymbolSubst subst;  // parse-time substitution for the eliminated symbol

    static Ctx make(FieldPtr field, std::size_t n, std::vector<std::vector<Scalar>> entries) {
        auto c = std::make_shared<PairingContext>();
        c->field = std::move(field);
        c->n = n;
        for (unsigned i = 1; i <= n; ++i) c->vars.push_back({i, "x" + std::to_string(i)});
        c->p = std::move(entries);
        c->validate();
        return c;
    }

    /// Fully symbolic context: rational functions in symbols p[i][j].  When
    /// `constrain` names an off-diagonal position (i, j), that entry is
    /// replaced by the inverse of the product of all other off-diagonal
    /// entries, which imposes prod_{i != j} p_ij = 1 exactly.
    static Ctx symbolic(std::size_t n,
                        std::optional<std::pair<unsigned, unsigned>> constrain = std::nullopt,
                        FieldPtr base = nullptr) {
        if (!base) base = Field::rationals();
        std::vector<std::string> syms;
        for (unsigned i = 1; i <= n; ++i)
            for (unsigned j = 1; j <= n; ++j)
                syms.push_back("p[" + std::to_string(i) + "][" + std::to_string(j) + "]");
        FieldPtr f = Field::rational_functions(base, syms);
        std::vector<std::vector<Scalar>> entries(n, std::vector<Scalar>(n, f->zero()));
        for (unsigned i = 1; i <= n; ++i)
            for (unsigned j = 1; j <= n; ++j) entries[i - 1][j - 1] = f->symbol((i - 1) * n + (j - 1));
        auto c = std::make_shared<PairingContext>();
        c->field = f;
        c->n = n;
        for (unsigned i = 1; i <= n; ++i) c->vars.push_back({i, "x" + std::to_string(i)});
        c->p = std::move(entries);
        if (constrain) c->apply_constraint(constrain->first, constrain->second);
        c->validate();
        return c;
    }

    const Scalar& at(unsigned i, unsigned j) const {  // 1-based
        check_index(i);
        check_index(j);
        return p[i - 1][j - 1];
    }

    Scalar parse_scalar(const std::string& text) const {
        return field->parse(text, subst.empty() ? nullptr : &subst);
    }

    /* --- evaluations --- */

    /// chi of a single variable on a group element: prod_j p[i][j]^(e_j).
    Scalar chi_var_on_group(unsigned i, const GroupElement& g) const {
        check_index(i);
        Scalar r = field->one();
        for (std::size_t j = 0; j < n; ++j) {
            int e = g.e[j];
            if (e) r = r * p[i - 1][j].pow(e);
        }
        return r;
    }

    /// chi of a word (multiplicative over its letters) on a group element.
    Scalar chi_word_on_group(const std::vector<unsigned>& word, const GroupElement& g) const {
        Scalar r = field->one();
        for (unsigned x : word) r = r * chi_var_on_group(x, g);
        return r;
    }

    /// q_k under the permutation nu (nu fixes 1): prod_{i<k} p[nu(i)][nu(k)].
    Scalar q_k(const Perm& nu, unsigned k) const {
        check_nu(nu);
        Scalar r = field->one();
        for (unsigned i = 1; i < k; ++i) r = r * at(perm_apply(nu, i), perm_apply(nu, k));
        return r;
    }

    /// q_k^* under nu: prod_{i<k} p[nu(k)][nu(i)]^(-1).
    Scalar q_k_star(const Perm& nu, unsigned k) const {
        check_nu(nu);
        Scalar r = field->one();
        for (unsigned i = 1; i < k; ++i) r = r * at(perm_apply(nu, k), perm_apply(nu, i)).inv();
        return r;
    }

    /// Brace of a word: A - Abar^(-1), with Abar the letterwise transpose.
    Scalar brace(const BraceWord& w) const {
        Scalar a = field->one(), abar = field->one();
        for (auto [i, j] : w) {
            a = a * at(i, j);
            abar = abar * at(j, i);
        }
        return a - abar.inv();
    }

    /// True iff prod over ordered pairs of distinct indices in the subset is 1.
    bool is_conforming(const std::vector<unsigned>& subset) const {
        if (subset.size() < 2) throw Error("conforming test needs at least two indices");
        Scalar prod = field->one();
        for (unsigned i : subset)
            for (unsigned j : subset)
                if (i != j) prod = prod * at(i, j);
        return prod == field->one();
    }

    /// Arithmetic condition controlling the generic quadrilinear case:
    /// all of {p_ij}, {p_ij p_ik p_kj}, {p_ij p_is p_sj} nonzero.
    bool gamma4(unsigned i, unsigned j) const {
        if (n != 4) throw ArityMismatch("gamma4 requires arity 4");
        if (i == j) throw Error("gamma4 requires i != j");
        std::vector<unsigned> rest;
        for (unsigned t = 1; t <= 4; ++t)
            if (t != i && t != j) rest.push_back(t);
        unsigned k = rest[0], s = rest[1];
        if (brace({{i, j}}).is_zero()) return false;
        if (brace({{i, j}, {i, k}, {k, j}}).is_zero()) return false;
        if (brace({{i, j}, {i, s}, {s, j}}).is_zero()) return false;
        return true;
    }

    /* --- context file format --- */

    std::string to_file_string() const {
        std::ostringstream os;
        os << "n=" << n << " field=" << field->spec_string() << "\n";
        for (unsigned i = 1; i <= n; ++i)
            for (unsigned j = 1; j <= n; ++j)
                os << "p " << i << " " << j << " " << at(i, j).to_string() << "\n";
        if (constrained)
            os << "constrain (" << constrained->first << "," << constrained->second << ")\n";
        return os.str();
    }

    static Ctx parse(const std::string& text) {
        std::istringstream is(text);
        std::string line;
        FieldPtr f;
        std::size_t n = 0;
        std::vector<std::vector<std::string>> lit;
        std::optional<std::pair<unsigned, unsigned>> constrain;
        bool header_seen = false;
        while (std::getline(is, line)) {
            std::size_t h = line.find('#');
            if (h != std::string::npos) line = line.substr(0, h);
            std::istringstream ls(line);
            std::string tok;
            if (!(ls >> tok)) continue;
            if (!header_seen) {
                if (tok.rfind("n=", 0) != 0) throw ParseError("context header must start with n=");
                n = std::stoul(tok.substr(2));
                std::string ftok;
                std::getline(ls, ftok);
                std::size_t eq = ftok.find("field=");
                if (eq == std::string::npos) throw ParseError("context header needs field=");
                f = Field::parse_spec(ftok.substr(eq + 6));
                lit.assign(n, std::vector<std::string>(n));
                header_seen = true;
            } else if (tok == "p") {
                unsigned i, j;
                if (!(ls >> i >> j)) throw ParseError("bad pairing line");
                std::string rest;
                std::getline(ls, rest);
                if (i < 1 || i > n || j < 1 || j > n) throw ParseError("pairing index out of range");
                lit[i - 1][j - 1] = rest;
            } else if (tok == "constrain") {
                std::string rest;
                std::getline(ls, rest);
                unsigned i = 0, j = 0;
                if (std::sscanf(rest.c_str(), " (%u,%u)", &i, &j) != 2)
                    throw ParseError("bad constrain line");
                constrain = {i, j};
            } else {
                throw ParseError("unexpected context line: " + tok);
            }
        }
        if (!header_seen) throw ParseError("empty context");
        auto c = std::make_shared<PairingContext>();
        c->field = f;
        c->n = n;
        for (unsigned i = 1; i <= n; ++i) c->vars.push_back({i, "x" + std::to_string(i)});
        c->p.assign(n, std::vector<Scalar>(n, f->zero()));
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                if (lit[i][j].empty())
                    throw ParseError("missing pairing entry p " + std::to_string(i + 1) + " " +
                                     std::to_string(j + 1));
                c->p[i][j] = f->parse(lit[i][j]);
            }
        if (constrain) c->apply_constraint(constrain->first, constrain->second);
        c->validate();
        return c;
    }

    void validate() const {
        if (n == 0) throw Error("context must have at least one variable");
        if (p.size() != n) throw Error("pairing matrix has wrong shape");
        for (const auto& row : p) {
            if (row.size() != n) throw Error("pairing matrix has wrong shape");
            for (const auto& s : row) {
                if (!s.field()->same(*field)) throw MixedFields();
                if (s.is_zero()) throw Error("pairing entry is zero (characters map into k*)");
            }
        }
    }

    void apply_constraint(unsigned ci, unsigned cj) {
        if (ci == cj || ci < 1 || ci > n || cj < 1 || cj > n)
            throw Error("constraint must name an off-diagonal entry");
        Scalar prod = field->one();
        for (unsigned i = 1; i <= n; ++i)
            for (unsigned j = 1; j <= n; ++j) {
                if (i == j || (i == ci && j == cj)) continue;
                prod = prod * p[i - 1][j - 1];
            }
        p[ci - 1][cj - 1] = prod.inv();
        constrained = {ci, cj};
        std::string name = "p[" + std::to_string(ci) + "][" + std::to_string(cj) + "]";
        auto idx = field->symbol_index(name);
        if (idx) subst.insert_or_assign(*idx, p[ci - 1][cj - 1]);
    }

   private:
    void check_index(unsigned i) const {
        if (i < 1 || i > n) throw Error("variable index out of range");
    }
    void check_nu(const Perm& nu) const {
        if (nu.size() != n || nu[0] != 1)
            throw Error("permutation must fix 1 and have full length");
    }
};

inline void check_same_context(const Ctx& a, const Ctx& b) {
    if (a.get() != b.get()) throw MixedContext();
}

}  // namespace qlie
