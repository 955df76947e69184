#include <catch2/catch_amalgamated.hpp>

#include "hec/antichain.hpp"
#include "hec/graph.hpp"
#include "hec/inequality.hpp"
#include "hec/subset.hpp"
#include "hec/svector.hpp"

using namespace hec;

TEST_CASE("subset positions follow cardinality-then-lex order") {
    CHECK(subset_position(3, 0b001) == 0);   // {1}
    CHECK(subset_position(3, 0b011) == 3);   // {1,2} right after the singletons
    CHECK(subset_position(3, 0b111) == 6);   // {1,2,3} last
    CHECK(subset_position(4, 0b1001) == 6);  // {1,4} before {2,3}
    CHECK(subset_position(4, 0b0110) == 7);
    CHECK_THROWS_AS(subset_position(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(subset_position(3, 0b1000), std::invalid_argument);
}

TEST_CASE("subset position round-trips for n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        const auto& tab = subsets(n);
        for (size_t p = 0; p < tab.size(); ++p) CHECK(subset_position(n, position_subset(n, int(p))) == int(p));
    }
}

TEST_CASE("coprime-integer normalization is idempotent") {
    IVec v{Int(6), Int(-9), Int(12)};
    normalize_content(v);
    CHECK(v == IVec{Int(2), Int(-3), Int(4)});
    IVec w = v;
    normalize_content(w);
    CHECK(w == v);
    CHECK(content(v) == 1);

    QVec q{rat(1, 2), rat(-3, 4), rat(0)};
    CHECK(to_coprime_integers(q) == IVec{Int(2), Int(-3), Int(0)});
}

TEST_CASE("mutual information") {
    SVector bell(2, {rat(1), rat(1), rat(0)});
    CHECK(mutual_information(bell, 0b01, 0b10) == 2);

    SVector zero(3);
    CHECK(mutual_information(zero, 0b001, 0b110) == 0);

    // the totally symmetric 3-terminal extreme ray (1,1,1;2,2,2;1)
    SVector s321(3, {rat(1), rat(1), rat(1), rat(2), rat(2), rat(2), rat(1)});
    CHECK(mutual_information(s321, 0b001, 0b010) == 0);

    CHECK_THROWS_AS(mutual_information(bell, 0b01, 0b01), std::invalid_argument);
    CHECK_THROWS_AS(mutual_information(bell, 0b01, 0), std::invalid_argument);
}

TEST_CASE("canonical form of MMI") {
    auto cf = canonical_form(mmi_inequality(3));
    CHECK(cf.L() == 3);
    CHECK(cf.R() == 4);
    CHECK(cf.Isets == std::vector<Mask>{0b011, 0b101, 0b110});
    CHECK(cf.Jsets == std::vector<Mask>{0b001, 0b010, 0b100, 0b111});
    for (const auto& a : cf.alpha) CHECK(a == 1);
    for (const auto& b : cf.beta) CHECK(b == 1);
    CHECK(cf.full_support());
}

TEST_CASE("canonical form relabels small support") {
    // S_1 >= 0 inside H_3 has support {1} and relabels to H_1
    IVec q(7, 0);
    q[0] = 1;
    auto cf = canonical_form(Inequality(3, std::move(q)));
    CHECK(cf.L() == 1);
    CHECK(cf.R() == 0);
    CHECK(cf.support == 0b001);
    CHECK(cf.relabeled.n == 1);
    CHECK(cf.relabeled.q == IVec{Int(1)});

    CHECK_THROWS_AS(canonical_form(Inequality(2, IVec{Int(0), Int(0), Int(0)})), std::invalid_argument);
}

TEST_CASE("canonical form of the expanded-codomain 5-terminal facet") {
    // 3S_123+3S_124+S_125+S_134+3S_135+S_145+S_234+S_235+S_245+S_345 >=
    // 2S_12+2S_13+S_14+S_15+S_23+2S_24+2S_35+S_45+2S_1234+2S_1235+S_1245+S_1345
    auto m = [](std::initializer_list<int> v) {
        Mask r = 0;
        for (int i : v) r |= Mask(1) << (i - 1);
        return r;
    };
    Inequality q = make_inequality(
        5,
        {{m({1, 2, 3}), 3}, {m({1, 2, 4}), 3}, {m({1, 2, 5}), 1}, {m({1, 3, 4}), 1}, {m({1, 3, 5}), 3},
         {m({1, 4, 5}), 1}, {m({2, 3, 4}), 1}, {m({2, 3, 5}), 1}, {m({2, 4, 5}), 1}, {m({3, 4, 5}), 1}},
        {{m({1, 2}), 2}, {m({1, 3}), 2}, {m({1, 4}), 1}, {m({1, 5}), 1}, {m({2, 3}), 1}, {m({2, 4}), 2},
         {m({3, 5}), 2}, {m({4, 5}), 1}, {m({1, 2, 3, 4}), 2}, {m({1, 2, 3, 5}), 2}, {m({1, 2, 4, 5}), 1},
         {m({1, 3, 4, 5}), 1}});
    auto cf = canonical_form(q);
    CHECK(cf.L() == 10);
    CHECK(cf.R() == 12);
    std::vector<Int> want_alpha{3, 3, 1, 1, 3, 1, 1, 1, 1, 1};
    CHECK(cf.alpha == want_alpha);
}

TEST_CASE("intersecting antichain counts M(n)") {
    CHECK(count_intersecting_antichains(1) == 2);
    CHECK(count_intersecting_antichains(2) == 4);
    CHECK(count_intersecting_antichains(3) == 12);
    CHECK(count_intersecting_antichains(4) == 81);
    CHECK(count_intersecting_antichains(5) == 2646);
    CHECK_THROWS_AS(count_intersecting_antichains(7), ResourceLimitError);
}
