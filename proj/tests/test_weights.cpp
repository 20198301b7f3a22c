#include <catch2/catch_amalgamated.hpp>

#include "mldkit/newton.hpp"
#include "mldkit/poly.hpp"
#include "mldkit/weights.hpp"

using namespace mldkit;

TEST_CASE("polynomial parsing round trip") {
    Poly p = parse_poly(2, "x1^2 + 2*x2 - 3/2*x1*x2");
    CHECK(p.terms.size() == 3);
    CHECK(p.terms.at(Exponent{Int(2), Int(0)}) == Rat(1));
    CHECK(p.terms.at(Exponent{Int(0), Int(1)}) == Rat(2));
    CHECK(p.terms.at(Exponent{Int(1), Int(1)}) == make_rat(Int(-3), Int(2)));
    CHECK(parse_poly(2, poly_to_string(p)) == p);

    CHECK(parse_poly(3, "0").is_zero());
    CHECK_THROWS_AS(parse_poly(2, "x5"), ParseError);
    CHECK_THROWS_AS(parse_poly(2, ""), ParseError);
    CHECK_THROWS_AS(parse_poly(2, "x1 +"), ParseError);
}

TEST_CASE("monomial and polynomial weights") {
    Weight w({Rat(3), Rat(2)});
    CHECK(weight_of_monomial(w, {Int(2), Int(0)}) == Rat(6));
    CHECK(weight_of_monomial(w, {Int(0), Int(3)}) == Rat(6));

    Poly h = parse_poly(2, "x1^2 + x2^3 + x1*x2^2");
    CHECK(weight_of_poly(w, h) == ExtRat::of(Rat(6)));

    Poly zero;
    zero.dim = 2;
    CHECK(weight_of_poly(w, zero).infinite);

    Poly lead = leading_term(w, h);
    CHECK(lead.terms.size() == 2);
    CHECK(lead.terms.count(Exponent{Int(2), Int(0)}) == 1);
    CHECK(lead.terms.count(Exponent{Int(0), Int(3)}) == 1);
    CHECK(is_w_homogeneous(w, lead));
    CHECK(!is_w_homogeneous(w, h));

    CHECK_THROWS_AS(leading_term(w, zero), ZeroPolynomial);
    CHECK_THROWS_AS(Weight({Rat(1), Rat(0)}), DomainError);
}

TEST_CASE("truncation keeps low total degree") {
    Poly h = parse_poly(2, "x1 + x1*x2 + x1^2*x2^2");
    Poly t = truncate(h, Int(2));
    CHECK(t.terms.size() == 2);
    CHECK(t.terms.count(Exponent{Int(2), Int(2)}) == 0);
    CHECK_THROWS_AS(truncate(h, Int(-1)), DomainError);
}

TEST_CASE("weight comparison detects domination and scaling") {
    Weight w({Rat(2), Rat(4)});
    Weight half({Rat(1), Rat(2)});
    WeightComparison cmp = compare_weights(w, half);
    CHECK(cmp.geq);
    REQUIRE(cmp.scalar_multiple.has_value());
    CHECK(*cmp.scalar_multiple == Rat(2));

    WeightComparison below = compare_weights(half, w);
    CHECK(!below.geq);
    CHECK(below.scalar_multiple.has_value());

    Weight skew({Rat(3), Rat(1)});
    WeightComparison inc = compare_weights(skew, w);
    CHECK(!inc.scalar_multiple.has_value());

    Weight s = scale_weight(make_rat(Int(1), Int(2)), w);
    CHECK(s == half);
    CHECK_THROWS_AS(scale_weight(Rat(0), w), DomainError);
}

TEST_CASE("leading terms respect products") {
    Weight w({Rat(1), Rat(2)});
    Poly p = parse_poly(2, "x1 + x2");
    Poly q = parse_poly(2, "x1^3 + x1*x2");
    CHECK(leading_term(w, p * q) == leading_term(w, p) * leading_term(w, q));
    CHECK(weight_of_poly(w, p * q) == weight_of_poly(w, p) + weight_of_poly(w, q));
    CHECK(is_subpolytope(newton_polytope_of(leading_term(w, q)), newton_polytope_of(q)));
}
