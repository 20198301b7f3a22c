#include <catch2/catch_amalgamated.hpp>

#include "mldkit/germ.hpp"
#include "mldkit/kawakita.hpp"

using namespace mldkit;

namespace {

HyperquotientGerm ca7_germ() {
    Poly phi = parse_poly(4, "x1*x2 + x3^7 + x4^3");
    return make_hyperquotient_germ(4, CyclicAction{Int(7), {Int(1), Int(6), Int(2), Int(0)}},
                                   {phi}, GermTag::cA_over_n);
}

HyperquotientGerm smooth_germ(std::size_t d) {
    return make_hyperquotient_germ(d, CyclicAction{Int(1), std::vector<Int>(d, Int(0))}, {},
                                   GermTag::Smooth);
}

} // namespace

TEST_CASE("cyclic actions and semi-invariance") {
    CyclicAction act{Int(7), {Int(1), Int(6), Int(2), Int(0)}};
    CHECK(character_of(act, {Int(1), Int(1), Int(0), Int(0)}) == 0);
    CHECK(character_of(act, {Int(0), Int(0), Int(1), Int(0)}) == 2);
    CHECK(is_semi_invariant(act, parse_poly(4, "x1*x2 + x3^7")));
    CHECK(!is_semi_invariant(act, parse_poly(4, "x1 + x2")));

    CHECK_THROWS_AS(make_hyperquotient_germ(4, act, {parse_poly(4, "x1 + x2")}),
                    NotSemiInvariant);
    CHECK_THROWS_AS(make_hyperquotient_germ(2, CyclicAction{Int(1), {Int(0), Int(0)}},
                                            {parse_poly(2, "x1"), parse_poly(2, "x2")}),
                    DomainError);
}

TEST_CASE("admissible weights obey the character congruences") {
    HyperquotientGerm g = make_hyperquotient_germ(
        2, CyclicAction{Int(2), {Int(1), Int(1)}}, {}, GermTag::None);
    CHECK(is_admissible(g, {Int(1), Int(1)}).value() == 1);
    CHECK(is_admissible(g, {Int(2), Int(2)}).value() == 0);
    CHECK(!is_admissible(g, {Int(1), Int(2)}).has_value());
    CHECK_THROWS_AS(make_admissible_weight(g, {Int(1), Int(2)}), NotAdmissible);

    auto all = enumerate_admissible_weights(g, Int(6));
    REQUIRE(!all.empty());
    CHECK(all.front().numerators == std::vector<Int>{Int(1), Int(1)});
    for (std::size_t i = 0; i + 1 < all.size(); ++i)
        CHECK(all[i].numerators < all[i + 1].numerators);
    for (const auto& w : all) {
        Int total = 0;
        for (const auto& v : w.numerators) total += v;
        CHECK(total <= 6);
    }

    HyperquotientGerm ca = ca7_germ();
    AdmissibleWeight w = make_admissible_weight(ca, {Int(5), Int(16), Int(3), Int(7)});
    CHECK(w.witness_b == 5);
    CHECK(enumerate_admissible_weights(ca, Int(12)).empty());
}

TEST_CASE("cA/7 fixture: discrepancy, pattern, certificate") {
    HyperquotientGerm g = ca7_germ();
    AdmissibleWeight w = make_admissible_weight(g, {Int(5), Int(16), Int(3), Int(7)});

    ExtRat disc = germ_weight_discrepancy(g, w);
    REQUIRE(disc.is_finite());
    CHECK(disc.value == make_rat(Int(3), Int(7)));

    PatternReport rep = check_kawakita_pattern(g, w);
    CHECK(rep.which == KawakitaCase::Case1);
    CHECK(rep.matched);
    CHECK(rep.all_pass);

    auto cert = irreducibility_certificate(g, w);
    REQUIRE(cert.has_value());
    CHECK(cert->predicted_wXx == make_rat(Int(3), Int(7)));
    CHECK(cert->predicted_wXx == disc.value);

    Poly x3;
    x3.dim = 4;
    x3.add_term({Int(0), Int(0), Int(1), Int(0)}, Rat(1));
    ExtRat withb = log_discrepancy(g, {BoundaryDivisor{Rat(1), x3}}, w);
    REQUIRE(withb.is_finite());
    CHECK(withb.value == Rat(1));
}

TEST_CASE("cD fixture matches pattern case 2.1 with certificate 1") {
    Poly phi = parse_poly(4, "x1^2 + x2^2*x4 + x3^3");
    HyperquotientGerm g = make_hyperquotient_germ(
        4, CyclicAction{Int(1), {Int(0), Int(0), Int(0), Int(0)}}, {phi}, GermTag::cD_41);
    AdmissibleWeight w = make_admissible_weight(g, {Int(2), Int(1), Int(1), Int(1)});

    ExtRat disc = germ_weight_discrepancy(g, w);
    REQUIRE(disc.is_finite());
    CHECK(disc.value == Rat(1));

    PatternReport rep = check_kawakita_pattern(g, w);
    CHECK(rep.which == KawakitaCase::Case21);
    CHECK(rep.all_pass);

    auto cert = irreducibility_certificate(g, w);
    REQUIRE(cert.has_value());
    CHECK(cert->predicted_wXx == Rat(1));
}

TEST_CASE("ct upper bounds shrink as the budget grows") {
    HyperquotientGerm g = smooth_germ(3);
    Poly x1 = parse_poly(3, "x1");
    BoundaryDivisor d{Rat(1), x1};

    CtBound b3 = ct_upper_bound(g, d, Int(3));
    REQUIRE(b3.bound.is_finite());
    CHECK(b3.bound.value == Rat(2));
    REQUIRE(b3.minimizer.has_value());
    CHECK(b3.minimizer->numerators == std::vector<Int>{Int(1), Int(1), Int(1)});

    CtBound b4 = ct_upper_bound(g, d, Int(4));
    REQUIRE(b4.bound.is_finite());
    CHECK(b4.bound.value == make_rat(Int(3), Int(2)));

    ExtRat prev = ExtRat::inf();
    for (long long budget = 3; budget <= 8; ++budget) {
        CtBound b = ct_upper_bound(g, d, Int(budget));
        CHECK(b.bound <= prev);
        prev = b.bound;
    }

    Poly quad = parse_poly(3, "x1^2 + x2^2 + x3^2");
    CtBound bq = ct_upper_bound(g, BoundaryDivisor{Rat(1), quad}, Int(3));
    REQUIRE(bq.bound.is_finite());
    CHECK(bq.bound.value == Rat(1));

    Poly zero;
    zero.dim = 3;
    CHECK_THROWS_AS(ct_upper_bound(g, BoundaryDivisor{Rat(1), zero}, Int(3)), DomainError);
}

TEST_CASE("coefficient budgets and codimension-two mld") {
    CHECK(coefficient_sum_check(true, {Rat(1), Rat(1)}));
    CHECK(!coefficient_sum_check(true, {Rat(1), Rat(1), make_rat(Int(1), Int(2))}));
    CHECK(coefficient_sum_check(false, {Rat(1)}));
    CHECK(!coefficient_sum_check(false, {Rat(1), make_rat(Int(1), Int(2))}));

    auto m = codim2_mld(make_rat(Int(1), Int(2)));
    REQUIRE(m.has_value());
    CHECK(*m == make_rat(Int(3), Int(2)));
    CHECK(codim2_mld(Rat(1)).has_value());
    CHECK(!codim2_mld(make_rat(Int(3), Int(2))).has_value());
}
