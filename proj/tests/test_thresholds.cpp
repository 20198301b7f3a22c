#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "mldkit/thresholds.hpp"

using namespace mldkit;

TEST_CASE("small threshold sets match hand enumeration") {
    std::vector<Rat> s = enumerate_smooth_ct_set(Int(1), Int(1));
    REQUIRE(s.size() == 2);
    CHECK(s[0] == make_rat(Int(2), Int(3)));
    CHECK(s[1] == Rat(1));

    std::vector<CtValue> entries = enumerate_ct_entries(CtKind::SmoothCT, Int(1), Int(1));
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].value == make_rat(Int(2), Int(3)));
    CHECK(entries[0].r1 == 1);
    CHECK(entries[0].r2 == 1);
    CHECK(entries[0].dm == 3);
    CHECK(entries[1].dm == 2);

    CHECK_THROWS_AS(enumerate_smooth_ct_set(Int(0), Int(5)), DomainError);
    CHECK_THROWS_AS(enumerate_smooth_ct_set(Int(1), Int(0)), DomainError);
}

TEST_CASE("threshold sets are sorted, bounded, and stabilize") {
    for (int k : {1, 2}) {
        Int ki(k);
        std::vector<Rat> small = enumerate_smooth_ct_set(ki, Int(50));
        std::vector<Rat> large = enumerate_smooth_ct_set(ki, Int(100));

        CHECK(std::is_sorted(small.begin(), small.end()));
        CHECK(std::adjacent_find(large.begin(), large.end()) == large.end());
        Rat lo = make_rat(Int(1), Int(k + 1));
        Rat hi = make_rat(Int(2), Int(k + 1));
        for (const auto& v : large) {
            CHECK(v > lo);
            CHECK(v <= hi);
        }

        std::set<Rat> big(large.begin(), large.end());
        for (const auto& v : small) CHECK(big.count(v) == 1);

        Rat eps = make_rat(Int(1), Int(20));
        auto tail_count = [&](const std::vector<Rat>& vals) {
            std::size_t c = 0;
            for (const auto& v : vals)
                if (v > lo + eps) ++c;
            return c;
        };
        std::size_t expected = k == 1 ? 27 : 51;
        CHECK(tail_count(small) == expected);
        CHECK(tail_count(large) == expected);
    }

    CHECK(enumerate_smooth_ct_set(Int(1), Int(100)).size() == 267);
    CHECK(enumerate_cA_ct_set(Int(2), Int(100)).size() == 585);
    std::vector<Rat> smooth = enumerate_smooth_ct_set(Int(2), Int(40));
    std::vector<Rat> ca = enumerate_cA_ct_set(Int(2), Int(40));
    std::set<Rat> ca_set(ca.begin(), ca.end());
    for (const auto& v : smooth) CHECK(ca_set.count(v) == 1);
}

TEST_CASE("accumulation scan reports gaps near the limit value") {
    {
        std::vector<Rat> vals = enumerate_smooth_ct_set(Int(1), Int(100));
        AccumulationReport rep = accumulation_scan(vals, {make_rat(Int(1), Int(2))},
                                                   {make_rat(Int(1), Int(20))});
        CHECK(rep.min_value == make_rat(Int(102), Int(203)));
        CHECK(rep.min_gap == make_rat(Int(1), Int(406)));
        CHECK(rep.min_gap <= make_rat(Int(2), Int(100)));
        REQUIRE(rep.counts.size() == 1);
        REQUIRE(rep.counts[0].size() == 1);
        CHECK(rep.counts[0][0] == 27);
    }
    {
        std::vector<Rat> vals = enumerate_cA_ct_set(Int(2), Int(100));
        AccumulationReport rep = accumulation_scan(vals, {make_rat(Int(1), Int(3))},
                                                   {make_rat(Int(1), Int(20))});
        CHECK(rep.min_value == make_rat(Int(103), Int(308)));
        CHECK(rep.counts[0][0] == 51);
    }
    {
        AccumulationReport rep = accumulation_scan(
            {Rat(3), Rat(1), Rat(3), Rat(2)}, {Rat(0), make_rat(Int(5), Int(2))},
            {Rat(0), Rat(1)});
        CHECK(rep.values == std::vector<Rat>{Rat(1), Rat(2), Rat(3)});
        CHECK(rep.min_value == Rat(1));
        CHECK(rep.min_gap == Rat(1));
        REQUIRE(rep.counts.size() == 2);
        CHECK(rep.counts[0] == std::vector<std::size_t>{2, 1});
        CHECK(rep.counts[1] == std::vector<std::size_t>{1, 0});
    }
    CHECK_THROWS_AS(accumulation_scan({}, {Rat(1)}, {Rat(0)}), DomainError);
    CHECK_THROWS_AS(accumulation_scan({Rat(1)}, {}, {Rat(0)}), DomainError);
}

TEST_CASE("membership window and comparison bounds") {
    CHECK(ik_contains(Int(1), make_rat(Int(3), Int(7))));
    CHECK(ik_contains(Int(1), make_rat(Int(64), Int(129))));
    CHECK(!ik_contains(Int(1), make_rat(Int(65), Int(131))));
    CHECK_THROWS_AS(ik_contains(Int(0), Rat(1)), DomainError);
    CHECK_THROWS_AS(ik_contains(Int(1), Rat(0)), DomainError);

    ComparisonBounds b = comparison_bounds(make_rat(Int(1), Int(2)), Int(5), Rat(2));
    CHECK(b.lo == 3);
    CHECK(b.hi == 10);
    CHECK(!b.empty());
    CHECK(b.contains(Int(5)));
    CHECK(!b.contains(Int(2)));
    CHECK(!b.contains(Int(11)));

    ComparisonBounds e = comparison_bounds(Rat(2), Int(3), Rat(1));
    CHECK(e.empty());

    CHECK_THROWS_AS(comparison_bounds(Rat(-1), Int(2), Rat(1)), DomainError);
    CHECK_THROWS_AS(comparison_bounds(Rat(1), Int(0), Rat(1)), DomainError);
    CHECK_THROWS_AS(comparison_bounds(Rat(1), Int(2), Rat(0)), DomainError);
}

TEST_CASE("monotone ratio subsequences") {
    {
        RatioSubsequence r = monotone_ratio_subsequence({{Rat(5), Rat(1), Rat(4), Rat(2), Rat(9)}});
        CHECK(r.pivot == 0);
        CHECK(r.indices == std::vector<std::size_t>{0, 1, 2, 3, 4});
    }
    {
        RatioSubsequence r = monotone_ratio_subsequence(
            {{Rat(4), Rat(2), Rat(3), Rat(1)}, {Rat(1), Rat(1), Rat(1), Rat(1)}});
        CHECK(r.pivot == 1);
        CHECK(r.indices == std::vector<std::size_t>{0, 1, 3});
    }
    {
        std::vector<std::vector<Rat>> seqs = {{Rat(4), Rat(2), Rat(3), Rat(1)},
                                              {Rat(2), Rat(2), Rat(1), Rat(2)}};
        RatioSubsequence r = monotone_ratio_subsequence(seqs);
        REQUIRE(!r.indices.empty());
        for (std::size_t j = 0; j < seqs.size(); ++j) {
            for (std::size_t a = 0; a + 1 < r.indices.size(); ++a) {
                Rat x = seqs[j][r.indices[a]] / seqs[r.pivot][r.indices[a]];
                Rat y = seqs[j][r.indices[a + 1]] / seqs[r.pivot][r.indices[a + 1]];
                CHECK(y <= x);
            }
        }
    }
    CHECK_THROWS_AS(monotone_ratio_subsequence({}), DegenerateInput);
    CHECK_THROWS_AS(monotone_ratio_subsequence({{}}), DegenerateInput);
    CHECK_THROWS_AS(monotone_ratio_subsequence({{Rat(1)}, {Rat(1), Rat(2)}}), DomainError);
    CHECK_THROWS_AS(monotone_ratio_subsequence({{Rat(1), Rat(0)}}), DomainError);
}
