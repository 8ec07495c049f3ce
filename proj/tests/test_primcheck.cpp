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

#include "qlie/ops.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qlie;

namespace {

Ctx conforming2() {
    auto Q = Field::rationals();
    Scalar two = Q->integer(2);
    return PairingContext::make(Q, 2, {{Q->one(), two}, {two.inv(), Q->one()}});
}

}  // namespace

TEST_CASE("skew primitivity of generators and commutators", "[primcheck]") {
    auto ctx = conforming2();
    Polynomial x1 = Polynomial::variable(ctx, 1), x2 = Polynomial::variable(ctx, 2);
    CHECK(is_skew_primitive(x1).verdict);
    Polynomial c = skew_commutator(x1, x2, ctx->at(1, 2));
    auto rep = is_skew_primitive(c);
    CHECK(rep.verdict);
    CHECK(rep.defect.is_zero());
    GroupElement expect(2);
    expect.e = {1, 1};
    CHECK(rep.group_degree == expect);
}

TEST_CASE("generic words are not primitive and the defect is reported", "[primcheck]") {
    auto ctx = PairingContext::symbolic(2);
    Polynomial w = Polynomial::word(ctx, {1, 2});
    auto rep = is_skew_primitive(w);
    CHECK_FALSE(rep.verdict);
    // the g_1 x_2 (x) x_1 term survives
    Monomial left(GroupElement::generator(2, 1), {2});
    Monomial right(GroupElement(2), {1});
    auto it = rep.defect.terms().find({left, right});
    REQUIRE(it != rep.defect.terms().end());
    CHECK(it->second == ctx->field->one());
}

TEST_CASE("group-inhomogeneous input is an error, not a verdict", "[primcheck]") {
    auto ctx = PairingContext::symbolic(2);
    Polynomial mixed = Polynomial::variable(ctx, 1) + Polynomial::word(ctx, {1, 2});
    CHECK_THROWS_AS(is_skew_primitive(mixed), NotGroupHomogeneous);
    CHECK_THROWS_AS(is_skew_primitive(Polynomial::zero(ctx)), Error);
}

TEST_CASE("one-sided primitivity of the binary chains", "[primcheck]") {
    // [[x y]_{p12} y]_{p12 p22} is left primitive w.r.t. x for any pairings
    auto ctx = PairingContext::symbolic(2);
    auto p = [&](unsigned i, unsigned j) { return ctx->at(i, j); };
    Polynomial x = Polynomial::variable(ctx, 1), y = Polynomial::variable(ctx, 2);
    Polynomial v1 = skew_commutator(x, y, p(1, 2));
    Polynomial v2 = skew_commutator(v1, y, p(1, 2) * p(2, 2));
    CHECK(is_left_primitive_wrt(v1, 1));
    CHECK(is_left_primitive_wrt(v2, 1));
    CHECK_FALSE(is_right_primitive_wrt(v2, 1));

    // the mirrored chain is right primitive
    Polynomial w1 = skew_commutator(x, y, p(2, 1).inv());
    Polynomial w2 = skew_commutator(w1, y, p(2, 1).inv() * p(2, 2).inv());
    CHECK(is_right_primitive_wrt(w2, 1));
    CHECK_FALSE(is_left_primitive_wrt(w2, 1));

    CHECK(is_left_primitive_wrt(x, 1));
    CHECK(is_right_primitive_wrt(x, 1));
    CHECK_THROWS_AS(is_left_primitive_wrt(y, 1), VariableAbsent);
}

TEST_CASE("ladders are one-sided primitive", "[primcheck]") {
    // plus-ladders are left primitive, the inverted-transposed ladders right
    // primitive, for every permutation and fully generic pairings
    auto ctx = PairingContext::symbolic(3);
    std::vector<unsigned> vars = {1, 2, 3};
    for (const auto& nu : symmetric_group_fixing_first(3)) {
        Polynomial plus = commutator_ladder_plus(ctx, vars, nu);
        Polynomial minus = commutator_ladder_minus(ctx, vars, nu);
        CHECK(is_left_primitive_wrt(plus, 1));
        CHECK_FALSE(is_right_primitive_wrt(plus, 1));
        CHECK(is_right_primitive_wrt(minus, 1));
        CHECK_FALSE(is_left_primitive_wrt(minus, 1));
    }
}

TEST_CASE("left and right primitivity together imply primitivity", "[primcheck]") {
    // with the degree condition imposed, the two chains coincide and the
    // common value is primitive
    FieldPtr f = Field::rational_functions(Field::rationals(), {"p12", "p22"});
    Scalar p12 = f->symbol(0), p22 = f->symbol(1);
    unsigned n = 3;
    auto ctx = PairingContext::make(
        f, 2, {{f->one(), p12}, {p12.inv() * p22.pow(1 - static_cast<long>(n)), p22}});
    Polynomial v = commutator_ladder_plus(ctx, {1, 2}, perm_identity(2));
    Polynomial x = Polynomial::variable(ctx, 1), y = Polynomial::variable(ctx, 2);
    Polynomial fwd = x, bwd = x;
    for (unsigned s = 0; s < n; ++s) {
        fwd = skew_commutator(fwd, y, p12 * p22.pow(static_cast<long>(s)));
        bwd = skew_commutator(bwd, y, ctx->at(2, 1).inv() * p22.pow(-static_cast<long>(s)));
    }
    CHECK(fwd == bwd);
    CHECK(is_left_primitive_wrt(fwd, 1));
    CHECK(is_right_primitive_wrt(fwd, 1));
    CHECK(is_skew_primitive(fwd).verdict);
}

TEST_CASE("brute force on two variables", "[primcheck]") {
    auto ctx = conforming2();
    auto ob = brute_force_multilinear_space(ctx);
    REQUIRE(ob.dimension() == 1);
    Polynomial expect = skew_commutator(Polynomial::variable(ctx, 1),
                                        Polynomial::variable(ctx, 2), ctx->at(1, 2));
    CHECK(ob.ops[0].poly == expect);

    auto generic = PairingContext::symbolic(2);
    CHECK(brute_force_multilinear_space(generic).dimension() == 0);

    auto constrained3 = PairingContext::symbolic(3, std::make_pair(2u, 1u));
    CHECK(brute_force_multilinear_space(constrained3).dimension() == 1);

    auto big = PairingContext::symbolic(6);
    CHECK_THROWS_AS(brute_force_multilinear_space(big), ArityTooLarge);
}

TEST_CASE("ladder coordinates of left-primitive polynomials", "[primcheck]") {
    auto ctx = PairingContext::symbolic(3, std::make_pair(2u, 1u));
    Polynomial dplus = commutator_ladder_plus(ctx, {1, 2, 3}, perm_identity(3));
    auto dec = decompose_left_primitive(dplus);
    REQUIRE(dec.ok);
    CHECK(dec.beta[0].second == ctx->field->one());
    CHECK(dec.beta[1].second.is_zero());

    // a bare reversed word is not left primitive; the obstruction survives
    Polynomial bad = Polynomial::word(ctx, {2, 1});
    auto dec2 = decompose_left_primitive(bad);
    CHECK_FALSE(dec2.ok);
    CHECK_FALSE(dec2.obstruction.is_zero());
    Monomial left(GroupElement::generator(3, 2), {1});
    Monomial right(GroupElement(3), {2});
    CHECK(dec2.obstruction.terms().count({left, right}) == 1);
}

TEST_CASE("brute force returns ladder coordinates", "[primcheck]") {
    auto ctx = conforming2();
    auto ob = brute_force_multilinear_space(ctx);
    REQUIRE(ob.dimension() == 1);
    REQUIRE(ob.ops[0].beta.size() == 1);
    CHECK(ob.ops[0].beta[0].second == ctx->field->one());
}
