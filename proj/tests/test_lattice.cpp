#include <catch2/catch_amalgamated.hpp>

#include "mldkit/lattice.hpp"
#include "mldkit/rational.hpp"

using namespace mldkit;

TEST_CASE("rational parsing and printing") {
    CHECK(rat_to_string(make_rat(Int(6), Int(4))) == "3/2");
    CHECK(rat_to_string(Rat(-7)) == "-7");
    CHECK(rat_to_string(make_rat(Int(2), Int(-4))) == "-1/2");
    CHECK(parse_rat("3/2") == make_rat(Int(3), Int(2)));
    CHECK(parse_rat("-5") == Rat(-5));
    CHECK(parse_rat(" 10/4 ") == make_rat(Int(5), Int(2)));
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rat("x"), ParseError);
    CHECK_THROWS_AS(parse_rat(""), ParseError);
    CHECK(parse_int("-12") == Int(-12));
    CHECK_THROWS_AS(parse_int("3/2"), ParseError);
}

TEST_CASE("floor and ceiling of rationals") {
    CHECK(rat_floor(make_rat(Int(7), Int(2))) == 3);
    CHECK(rat_floor(make_rat(Int(-7), Int(2))) == -4);
    CHECK(rat_ceil(make_rat(Int(7), Int(2))) == 4);
    CHECK(rat_ceil(make_rat(Int(-7), Int(2))) == -3);
    CHECK(rat_floor(Rat(5)) == 5);
    CHECK(rat_ceil(Rat(5)) == 5);
    CHECK(mod_floor(Int(-1), Int(5)) == 4);
    CHECK(floor_div(Int(-7), Int(2)) == -4);
}

TEST_CASE("hermite normal form of small matrices") {
    IntMatrix id2 = IntMatrix::identity(2);
    HnfResult h = hermite_normal_form(id2);
    CHECK(h.rank == 2);
    CHECK(h.H.at(0, 0) == 1);
    CHECK(h.H.at(1, 1) == 1);
    CHECK(h.H.at(0, 1) == 0);

    IntMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    m.at(1, 1) = 1;
    HnfResult u = hermite_normal_form(m);
    CHECK(u.rank == 2);
    CHECK(u.H.at(0, 0) == 1);
    CHECK(u.H.at(0, 1) == 0);
    CHECK(u.H.at(1, 0) == 0);
    CHECK(u.H.at(1, 1) == 1);
    CHECK(u.U * m == u.H);

    IntMatrix diag(2, 2);
    diag.at(0, 0) = 2;
    diag.at(1, 1) = 3;
    HnfResult hd = hermite_normal_form(diag);
    CHECK(hd.H.at(0, 0) == 2);
    CHECK(hd.H.at(1, 1) == 3);

    IntMatrix zero(2, 3);
    CHECK(hermite_normal_form(zero).rank == 0);
}

TEST_CASE("left kernels annihilate and have the right dimension") {
    IntMatrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    auto kernel = left_kernel_basis(m);
    REQUIRE(kernel.size() == 1);
    LatticePoint prod = vec_mat(kernel[0], m);
    CHECK(prod[0] == 0);
    CHECK(prod[1] == 0);

    auto full = left_kernel_basis(IntMatrix::identity(3));
    CHECK(full.empty());
}

TEST_CASE("rational linear solve classifies systems") {
    {
        std::vector<std::vector<Rat>> a{{Rat(2), Rat(1)}, {Rat(1), Rat(-1)}};
        std::vector<Rat> b{Rat(5), Rat(1)};
        LinearSolution s = solve_rational(a, b);
        REQUIRE(s.kind == SolveKind::Solution);
        CHECK(s.x[0] == Rat(2));
        CHECK(s.x[1] == Rat(1));
    }
    {
        std::vector<std::vector<Rat>> a{{Rat(1)}, {Rat(1)}};
        std::vector<Rat> b{Rat(1), Rat(2)};
        CHECK(solve_rational(a, b).kind == SolveKind::Inconsistent);
    }
    {
        std::vector<std::vector<Rat>> a{{Rat(1), Rat(1)}};
        std::vector<Rat> b{Rat(2)};
        CHECK(solve_rational(a, b).kind == SolveKind::Underdetermined);
    }
}

TEST_CASE("bounded lattice point enumeration") {
    std::vector<Constraint> tri{
        {{Rat(-1), Rat(0)}, Rat(0), false},
        {{Rat(0), Rat(-1)}, Rat(0), false},
        {{Rat(1), Rat(1)}, Rat(2), false},
    };
    std::vector<LatticePoint> pts = enumerate_lattice_points(2, tri);
    std::vector<LatticePoint> want{{Int(0), Int(0)}, {Int(0), Int(1)}, {Int(0), Int(2)},
                                   {Int(1), Int(0)}, {Int(1), Int(1)}, {Int(2), Int(0)}};
    CHECK(pts == want);

    std::vector<Constraint> open{
        {{Rat(-1), Rat(0)}, Rat(0), false},
        {{Rat(0), Rat(-1)}, Rat(0), false},
        {{Rat(1), Rat(1)}, Rat(2), true},
    };
    CHECK(enumerate_lattice_points(2, open).size() == 3);

    std::vector<Constraint> half{{{Rat(1), Rat(0)}, Rat(3), false},
                                 {{Rat(0), Rat(1)}, Rat(3), false}};
    CHECK_THROWS_AS(enumerate_lattice_points(2, half), UnboundedRegion);

    std::vector<Constraint> skew{
        {{make_rat(Int(1), Int(2)), Rat(0)}, make_rat(Int(3), Int(2)), false},
        {{Rat(-1), Rat(0)}, Rat(0), true},
        {{Rat(0), Rat(1)}, Rat(0), false},
        {{Rat(0), Rat(-1)}, Rat(0), false},
    };
    std::vector<LatticePoint> s = enumerate_lattice_points(2, skew);
    std::vector<LatticePoint> swant{{Int(1), Int(0)}, {Int(2), Int(0)}, {Int(3), Int(0)}};
    CHECK(s == swant);
}

TEST_CASE("primitive vectors and lexicographic order") {
    LatticePoint v{Int(4), Int(-6)};
    LatticePoint p = primitive_vector(v);
    CHECK(p == LatticePoint{Int(2), Int(-3)});
    CHECK(primitive_vector(LatticePoint{Int(0), Int(5)}) == LatticePoint{Int(0), Int(1)});
    CHECK(lex_less(LatticePoint{Int(1), Int(2)}, LatticePoint{Int(1), Int(3)}));
    CHECK(!lex_less(LatticePoint{Int(2), Int(0)}, LatticePoint{Int(1), Int(9)}));
}
