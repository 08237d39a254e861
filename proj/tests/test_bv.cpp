#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logcurves/bv.hpp"
#include "logcurves/json_out.hpp"

using namespace logcurves;

namespace {

BVElement g(int i) { return BVElement::generator(i); }

BVElement dg(int i) { return bv_delta(BVElement::generator(i)); }

} // namespace

TEST_CASE("dimension tables") {
    CHECK(bv_dims(1) == std::vector<i64>{1, 1});
    CHECK(bv_dims(2) == std::vector<i64>{1, 3, 3, 1});
    CHECK(bv_dims(3) == std::vector<i64>{1, 6, 14, 16, 9, 2});
    CHECK(ger_dims(1) == std::vector<i64>{1});
    CHECK(ger_dims(2) == std::vector<i64>{1, 1});
    CHECK(ger_dims(3) == std::vector<i64>{1, 3, 2});
    for (int n = 1; n <= 4; ++n) {
        CHECK(bv_dims(n) == poincare_fld(n).coeffs());
        CHECK(ger_dims(n) == poincare_ld(n).coeffs());
        i64 total = 0;
        for (i64 d : bv_dims(n)) total += d;
        i64 expect = 1;
        for (i64 k = 1; k <= n; ++k) expect *= 2 * k;
        CHECK(total == expect);
    }
    CHECK(bv_basis(2).size() == 8);
}

TEST_CASE("normal forms and basic signs") {
    CHECK(bv_mul(g(1), g(2)) == bv_mul(g(2), g(1)));
    CHECK(bv_bracket(g(1), g(2)) == bv_bracket(g(2), g(1)));     // both even
    CHECK(bv_mul(dg(1), g(2)) == bv_mul(g(2), dg(1)));           // odd-even product
    CHECK(bv_bracket(dg(1), dg(2)) ==
          bv_bracket(dg(2), dg(1)).scaled(Rational(-1)));        // odd-odd
    CHECK_THROWS_AS(bv_mul(g(1), g(1)), std::invalid_argument);  // multilinear only
    BVMonomial m{{{DecGen{1, true}}, {DecGen{2, false}, DecGen{3, false}}}};
    CHECK(m.degree() == 2);
    CHECK(m.support() == std::vector<int>{1, 2, 3});
    CHECK(m.str() == "dx1*[x2,x3]");
    CHECK(BVElement::zero().str() == "0");
}

TEST_CASE("odd operator squares to zero") {
    for (const BVElement& e : {g(1), bv_mul(g(1), g(2)), bv_bracket(g(1), g(2)),
                               bv_mul(g(1), bv_mul(g(2), g(3))), bv_mul(dg(1), g(2))})
        CHECK(bv_delta(bv_delta(e)).is_zero());
}

TEST_CASE("bracket from the odd operator on a product") {
    BVElement lhs = bv_delta(bv_mul(g(1), g(2)));
    BVElement rhs = bv_mul(dg(1), g(2)) + bv_mul(g(1), dg(2)) + bv_bracket(g(1), g(2));
    CHECK(lhs == rhs);
}

TEST_CASE("bracket Leibniz instance") {
    BVElement lhs = bv_bracket(g(1), bv_mul(g(2), g(3)));
    BVElement rhs = bv_mul(bv_bracket(g(1), g(2)), g(3)) + bv_mul(g(2), bv_bracket(g(1), g(3)));
    CHECK(lhs == rhs);
}

TEST_CASE("seven-term instance on even generators") {
    BVElement a = g(1), b = g(2), c = g(3);
    BVElement lhs = bv_delta(bv_mul(bv_mul(a, b), c));
    BVElement rhs = bv_mul(bv_delta(bv_mul(a, b)), c) + bv_mul(a, bv_delta(bv_mul(b, c))) +
                    bv_mul(b, bv_delta(bv_mul(a, c))) - bv_mul(bv_delta(a), bv_mul(b, c)) -
                    bv_mul(a, bv_mul(bv_delta(b), c)) - bv_mul(bv_mul(a, b), bv_delta(c));
    CHECK(lhs == rhs);
}

TEST_CASE("relabeling") {
    CHECK(bv_sigma({2, 1}, bv_mul(g(1), dg(2))) == bv_mul(dg(1), g(2)));
    BVElement e = bv_mul(bv_bracket(g(1), g(3)), dg(2));
    CHECK(bv_sigma({3, 1, 2}, bv_sigma({2, 3, 1}, e)) == e);
}

TEST_CASE("substitution") {
    // product into a bracket slot, remaining generator shifts
    CHECK(bv_compose(bv_bracket(g(1), g(2)), bv_mul(g(1), g(2)), 1) ==
          bv_bracket(bv_mul(g(1), g(2)), g(3)));
    // decorated slot applies the odd operator to the inserted element
    CHECK(bv_compose(dg(1), bv_mul(g(1), g(2)), 1) == bv_delta(bv_mul(g(1), g(2))));
    // inserting a bare generator relabels only
    CHECK(bv_compose(bv_mul(g(1), g(2)), g(1), 2) == bv_mul(g(1), g(2)));
    // nested substitution in the same slot associates
    BVElement a = bv_bracket(g(1), g(2)), b = bv_mul(g(1), g(2)), c = dg(1);
    CHECK(bv_compose(bv_compose(a, b, 1), c, 1) == bv_compose(a, bv_compose(b, c, 1), 1));
    CHECK_THROWS_AS(bv_compose(g(2), g(1), 1), std::invalid_argument);
    CHECK_THROWS_AS(bv_compose(g(1), g(1), 2), std::invalid_argument);
}

TEST_CASE("circle classes") {
    CircleElement one_dec{{{0, 1}, Rational(1)}};
    CHECK(circle_classes(bv_mul(g(1), dg(2)), 2) == one_dec);
    CHECK(circle_classes(bv_bracket(g(1), g(2)), 2).empty());
    CircleElement both{{{1, 0}, Rational(1)}, {{0, 1}, Rational(1)}};
    CHECK(circle_classes(bv_delta(bv_mul(g(1), g(2))), 2) == both);
}

TEST_CASE("circle substitution") {
    CircleElement dec1{{{1}, Rational(1)}};
    CircleElement flat2{{{0, 0}, Rational(1)}};
    CircleElement expect{{{1, 0}, Rational(1)}, {{0, 1}, Rational(1)}};
    CHECK(circle_insert(dec1, flat2, 1) == expect);
    // fully decorated into a decorated slot vanishes
    CHECK(circle_insert(dec1, dec1, 1).empty());
    // sign from crossing the existing decoration
    CircleElement half{{{1, 0}, Rational(1)}};
    CircleElement crossed{{{1, 1}, Rational(-1)}};
    CHECK(circle_insert(dec1, half, 1) == crossed);
}

TEST_CASE("circle substitution matches element substitution") {
    const std::vector<std::pair<BVElement, int>> inners = {
        {bv_mul(g(1), g(2)), 2}, {bv_mul(dg(1), g(2)), 2}, {bv_mul(g(1), dg(2)), 2}, {dg(1), 1}};
    for (const auto& outer : {g(1), dg(1)})
        for (const auto& [inner, m] : inners) {
            CircleElement direct = circle_classes(bv_compose(outer, inner, 1), m);
            CircleElement tupled =
                circle_insert(circle_classes(outer, 1), circle_classes(inner, m), 1);
            CHECK(direct == tupled);
        }
}

TEST_CASE("relation sweep") {
    AxiomReport rep = check_bv_relations(2);
    CHECK(rep.ok());
    CHECK(rep.cases > 0);
}

TEST_CASE("formal models") {
    for (int n = 1; n <= 3; ++n) {
        FormalModel fm = assemble_formal_model(n);
        CHECK(fm.arity == n);
        CHECK(fm.dims == fm.expected);
        CHECK(fm.lie_dims == fm.lie_expected);
        CHECK(fm.matches);
        CHECK(fm.zero_differential);
        CHECK_FALSE(fm.certificate_level.empty());
    }
}

TEST_CASE("decorated row pushout") {
    CHECK_THROWS_AS(ld_pushout(1), std::invalid_argument);
    for (int n = 2; n <= 5; ++n) {
        PushoutReport rep = ld_pushout(n);
        CHECK(rep.exact);
        CHECK(rep.ld == poincare_ld(n));
        CHECK(rep.from_framed == rep.ld);
        CHECK(rep.from_open == rep.ld);
    }
}

TEST_CASE("expression evaluation") {
    BVExprPtr e = make_bracket(make_gen(1), make_gen(2));
    CHECK(bv_eval(e) == bv_bracket(g(1), g(2)));
    BVExprPtr s = make_scale(Rational(1, 2), make_prod({make_gen(1), make_gen(2)}));
    CHECK(bv_eval(s) == bv_mul(g(1), g(2)).scaled(Rational(1, 2)));
    BVExprPtr sum = make_sum({make_delta(make_gen(1)), make_gen(1)});
    CHECK(bv_eval(sum) == dg(1) + g(1));
}

TEST_CASE("expression parsing") {
    ojson j = ojson::parse(R"({"op":"bracket","args":[{"op":"gen","i":1},{"op":"gen","i":2}]})");
    CHECK(bv_eval(parse_bv_expr(j)) == bv_bracket(g(1), g(2)));
    ojson k = ojson::parse(
        R"({"op":"scale","num":3,"den":2,"arg":{"op":"delta","arg":{"op":"prod","args":[{"op":"gen","i":1},{"op":"gen","i":2}]}}})");
    CHECK(bv_eval(parse_bv_expr(k)) == bv_delta(bv_mul(g(1), g(2))).scaled(Rational(3, 2)));
    ojson sum = ojson::parse(R"({"op":"sum","args":[{"op":"gen","i":1},{"op":"gen","i":1}]})");
    CHECK(bv_eval(parse_bv_expr(sum)) == g(1).scaled(Rational(2)));
    CHECK_THROWS_AS(parse_bv_expr(ojson::parse(R"({"op":"what"})")), std::invalid_argument);
    CHECK_THROWS_AS(parse_bv_expr(ojson::parse(R"({"op":"bracket","args":[{"op":"gen","i":1}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        parse_bv_expr(ojson::parse(R"({"op":"scale","num":1,"den":0,"arg":{"op":"gen","i":1}})")),
        std::invalid_argument);
}

TEST_CASE("element documents") {
    ojson doc = bv_element_json(bv_bracket(g(1), g(2)));
    REQUIRE(doc.contains("terms"));
    REQUIRE(doc["terms"].size() == 1);
    CHECK(doc["terms"][0]["monomial"] == "[x1,x2]");
    CHECK(doc["terms"][0]["degree"] == 1);
    CHECK(doc["terms"][0]["coefficient"] == "1");
    CHECK(doc["str"] == "[x1,x2]");
}
