#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "nilorbit/partition.hpp"

using namespace nilorbit;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

// Independent oracle for s_index: best window over all part pairs.
int s_index_oracle(const Partition& b) {
    int best = 0;
    for (int a = 0; a < b.size(); ++a)
        for (int c = a; c < b.size(); ++c) {
            if (b[a] - b[c] > 1) continue;
            int count = 0;
            for (int part : b)
                if (part <= b[a] && part >= b[c]) ++count;
            best = std::max(best, count);
        }
    return best;
}

}  // namespace

TEST_CASE("parse_partition expands exponents") {
    CHECK(parse_partition("3^2,2,1") == P({3, 3, 2, 1}));
    CHECK(parse_partition("15,13,5,4,3^2,2,1") == P({15, 13, 5, 4, 3, 3, 2, 1}));
    CHECK(parse_partition(" 5 , 4 ^ 2 ") == P({5, 4, 4}));
    CHECK_THROWS_WITH_AS(parse_partition("3,5"), doctest::Contains("increasing sequence"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_partition(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3^0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3;2"), std::invalid_argument);
}

TEST_CASE("to_string renders plain and exponent forms") {
    const Partition b = P({3, 3, 2, 1});
    CHECK(to_string(b) == "3,3,2,1");
    CHECK(to_string(b, true) == "3^2,2,1");
    CHECK(to_string(Partition{}) == "");
}

TEST_CASE("Partition validates its invariants") {
    CHECK_THROWS_AS(P({3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(P({3, 0}), std::invalid_argument);
    CHECK(Partition{}.n() == 0);
    CHECK(P({5, 1}).n() == 6);
}

TEST_CASE("runs encodes and reconstructs") {
    const RunEncoding enc = runs(P({6, 6, 6, 6, 5, 2, 2, 1}));
    CHECK(enc.values == std::vector<int>{6, 5, 2, 1});
    CHECK(enc.cumulative == std::vector<int>{4, 5, 7, 8});
    CHECK(enc.u == 4);
    CHECK(enc.q(0) == 0);
    CHECK(enc.multiplicity(1) == 4);

    CHECK(runs(P({9})).values == std::vector<int>{9});
    CHECK(runs(P({9})).cumulative == std::vector<int>{1});
    CHECK(runs(P({5, 3, 3, 2, 1})).values == std::vector<int>{5, 3, 2, 1});
    CHECK(runs(P({5, 3, 3, 2, 1})).cumulative == std::vector<int>{1, 3, 4, 5});

    for (int n = 0; n <= 10; ++n)
        for (const Partition& b : all_partitions(n)) CHECK(from_runs(runs(b)) == b);
}

TEST_CASE("dominance_compare follows the prefix-sum criterion") {
    CHECK(dominance_compare(P({6, 4, 3}), P({6, 5, 2})) == Dominance::Less);
    CHECK(dominance_compare(P({6, 5, 2}), P({6, 6, 1})) == Dominance::Less);
    CHECK(dominance_compare(P({5, 3, 2, 1}), P({6, 3, 1, 1})) == Dominance::Less);
    CHECK(dominance_compare(P({6, 3, 1, 1}), P({6, 4, 1})) == Dominance::Less);
    CHECK(dominance_compare(P({6, 5, 2}), P({7, 3, 3})) == Dominance::Incomparable);
    CHECK(dominance_compare(P({6, 5, 4, 3}), P({6, 6, 2, 2, 2})) == Dominance::Incomparable);
    CHECK(dominance_compare(P({6, 6, 1}), P({6, 5, 2})) == Dominance::Greater);
    CHECK(dominance_compare(P({4, 2}), P({4, 2})) == Dominance::Equal);
    CHECK_THROWS_AS(dominance_compare(P({3}), P({2})), std::invalid_argument);
}

TEST_CASE("dominance is a partial order on each level set") {
    for (int n = 1; n <= 12; ++n) {
        const std::vector<Partition> parts = all_partitions(n);
        for (const Partition& a : parts)
            for (const Partition& b : parts) {
                const Dominance ab = dominance_compare(a, b);
                const Dominance ba = dominance_compare(b, a);
                if (ab == Dominance::Less) CHECK(ba == Dominance::Greater);
                if (ab == Dominance::Equal) {
                    CHECK(a == b);
                    CHECK(ba == Dominance::Equal);
                }
                if (ab == Dominance::Incomparable) CHECK(ba == Dominance::Incomparable);
            }
        // transitivity of <=
        for (const Partition& a : parts)
            for (const Partition& b : parts)
                for (const Partition& c : parts)
                    if (dominated_by(a, b) && dominated_by(b, c)) CHECK(dominated_by(a, c));
    }
}

TEST_CASE("conjugate transposes the diagram") {
    CHECK(conjugate(P({3, 2})) == P({2, 2, 1}));
    CHECK(conjugate(P({7})) == P({1, 1, 1, 1, 1, 1, 1}));
    CHECK(conjugate(P({4, 4, 3})) == P({3, 3, 3, 2}));
    CHECK(conjugate(Partition{}) == Partition{});
    for (int n = 0; n <= 20; ++n)
        for (const Partition& b : all_partitions(n)) CHECK(conjugate(conjugate(b)) == b);
}

TEST_CASE("is_almost_rectangular") {
    CHECK(is_almost_rectangular(P({4, 4, 3})));
    CHECK_FALSE(is_almost_rectangular(P({5, 3})));
    CHECK(is_almost_rectangular(P({2, 2, 1})));
    CHECK_THROWS_AS(is_almost_rectangular(Partition{}), std::invalid_argument);
}

TEST_CASE("r_index computes the minimal almost rectangular cover") {
    CHECK(r_index(P({5, 4, 3, 1, 1})).r == 3);
    CHECK(r_index(P({9, 7, 5, 1})).r == 4);
    CHECK(r_index(P({4, 4, 4})).r == 1);

    const RIndexResult res = r_index(P({5, 4, 3, 1, 1}));
    CHECK(res.decomposition.segments ==
          std::vector<std::pair<int, int>>{{0, 2}, {2, 3}, {3, 5}});

    for (int n = 1; n <= 12; ++n)
        for (const Partition& b : all_partitions(n))
            CHECK((r_index(b).r == 1) == is_almost_rectangular(b));
}

TEST_CASE("s_index equals the window oracle") {
    CHECK(s_index(P({5, 4, 4, 2, 2, 1})) == 3);
    CHECK(s_index(P({9, 7, 5, 1})) == 1);
    CHECK(s_index(P({9})) == 1);
    for (int n = 1; n <= 12; ++n)
        for (const Partition& b : all_partitions(n)) {
            CHECK(s_index(b) == s_index_oracle(b));
            int max_mult = 0;
            for (int i = 1; i <= runs(b).u; ++i)
                max_mult = std::max(max_mult, runs(b).multiplicity(i));
            CHECK(s_index(b) >= max_mult);
            if (is_almost_rectangular(b)) CHECK(s_index(b) == b.size());
        }
}

TEST_CASE("tilde_of sums segments") {
    CHECK(tilde_of(P({5, 4, 4, 2, 2, 1}), {{{0, 3}, {3, 6}}}) == P({13, 5}));
    CHECK(tilde_of(P({5, 4, 3, 1, 1}), {{{0, 1}, {1, 3}, {3, 5}}}) == P({7, 5, 2}));
    CHECK(tilde_of(P({9}), {{{0, 1}}}) == P({9}));
    CHECK_THROWS_AS(tilde_of(P({5, 3}), {{{0, 2}}}), std::invalid_argument);
    CHECK_THROWS_AS(tilde_of(P({5, 4}), {{{0, 1}}}), std::invalid_argument);
}

TEST_CASE("jordan_power_type") {
    CHECK(jordan_power_type(7, 3) == P({3, 2, 2}));
    CHECK(jordan_power_type(9, 1) == P({9}));
    CHECK(jordan_power_type(6, 2) == P({3, 3}));
    CHECK(jordan_power_type(3, 5) == P({1, 1, 1}));
    CHECK_THROWS_AS(jordan_power_type(0, 1), std::invalid_argument);

    // almost rectangular partitions are exactly the types of Jordan block
    // powers
    for (int n = 1; n <= 12; ++n)
        for (const Partition& b : all_partitions(n))
            CHECK(is_almost_rectangular(b) == (b == jordan_power_type(n, b.size())));
}

TEST_CASE("rank profile conversions") {
    CHECK(rank_profile_of_partition(P({3, 2})) == std::vector<int>{5, 3, 1, 0});
    CHECK(rank_profile_of_partition(P({1, 1})) == std::vector<int>{2, 0});
    CHECK(rank_profile_of_partition(P({7, 5, 2})) ==
          std::vector<int>{14, 11, 8, 6, 4, 2, 1, 0});

    CHECK(type_from_rank_profile({5, 3, 1, 0}) == P({3, 2}));
    CHECK(type_from_rank_profile({6, 0}) == P({1, 1, 1, 1, 1, 1}));
    CHECK(type_from_rank_profile({5, 4, 3, 2, 1, 0}) == P({5}));
    CHECK_THROWS_AS(type_from_rank_profile({5, 6, 0}), std::invalid_argument);
    CHECK_THROWS_AS(type_from_rank_profile({4, 3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(type_from_rank_profile({4, 3, 3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(type_from_rank_profile({4, 3}), std::invalid_argument);

    for (int n = 0; n <= 20; ++n)
        for (const Partition& b : all_partitions(n))
            CHECK(type_from_rank_profile(rank_profile_of_partition(b)) == b);
}

TEST_CASE("all_partitions counts match the partition numbers") {
    const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135};
    for (int n = 0; n <= 14; ++n)
        CHECK(static_cast<int>(all_partitions(n).size()) == expected[n]);
}
