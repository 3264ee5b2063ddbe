#include <doctest.h>

#include <sstream>

#include "incmat/combinatorics.hpp"
#include "oracle.hpp"

using namespace incmat;

TEST_CASE("binomial") {
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, 7) == 0);
    // Pascal-triangle brute force.
    CHECK(oracle::choose(12, 5) == 792);
    CHECK(binomial(12, 5) == 792);

    const auto table = oracle::pascal(60);
    for (int a = 0; a <= 60; ++a)
        for (int b = -1; b <= a + 1; ++b) {
            const mpz_class expected = (b < 0 || b > a) ? mpz_class(0) : table[a][b];
            REQUIRE(binomial(a, b) == expected);
        }
    CHECK(binomial(200, 100).get_str() == "90548514656103281165404177077484163874504589675413336841320");
    CHECK_THROWS_AS(binomial(-1, 0), InvalidArgument);
}

TEST_CASE("binomial_u64 matches the big-integer path") {
    for (int a = 0; a <= kMaxGroundSet; ++a)
        for (int b = 0; b <= a; ++b) REQUIRE(BigInt(std::to_string(binomial_u64(a, b))) == binomial(a, b));
    CHECK_THROWS_AS(binomial_u64(kMaxGroundSet + 1, 2), InvalidArgument);
}

TEST_CASE("subset validation") {
    CHECK_NOTHROW(Subset(4, {1, 3}));
    CHECK_THROWS_AS(Subset(4, {3, 1}), InvalidArgument);
    CHECK_THROWS_AS(Subset(4, {2, 2}), InvalidArgument);
    CHECK_THROWS_AS(Subset(4, {0, 2}), InvalidArgument);
    CHECK_THROWS_AS(Subset(4, {2, 5}), InvalidArgument);
    Subset s(6, {2, 4, 5});
    CHECK(s.contains(4));
    CHECK_FALSE(s.contains(3));
    CHECK(Subset(6, {2, 5}).is_subset_of(s));
    CHECK_FALSE(Subset(6, {1, 5}).is_subset_of(s));
    std::ostringstream os;
    os << s;
    CHECK(os.str() == "{2,4,5}");
}

TEST_CASE("subset_rank examples") {
    CHECK(subset_rank(Subset(4, {1, 2})).rank == 0);
    CHECK(subset_rank(Subset(4, {3, 4})).rank == 5);
    CHECK(subset_rank(Subset(4, {2})).rank == 1);

    // The {3,4} value comes from enumerating all 2-subsets of [4] in colex order.
    const auto masks = oracle::colex_masks(4, 2);
    REQUIRE(masks.size() == 6);
    CHECK(oracle::mask_elements(masks[5]) == std::vector<int>{3, 4});
}

TEST_CASE("subset_unrank examples") {
    CHECK(subset_unrank({0, 2, 4}) == Subset(4, {1, 2}));
    CHECK(subset_unrank({5, 2, 4}) == Subset(4, {3, 4}));
    CHECK(subset_unrank({3, 1, 4}) == Subset(4, {4}));
    CHECK_THROWS_AS(subset_unrank({6, 2, 4}), InvalidArgument);
    CHECK_THROWS_AS(subset_unrank({0, 5, 4}), InvalidArgument);
}

TEST_CASE("rank and unrank round trip for m <= 16") {
    for (int m = 0; m <= 16; ++m)
        for (int k = 0; k <= m; ++k) {
            const std::uint64_t count = binomial_u64(m, k);
            for (std::uint64_t r = 0; r < count; ++r) {
                REQUIRE(subset_rank(subset_unrank({r, k, m})).rank == r);
            }
        }
}

TEST_CASE("subsets_iter examples") {
    std::vector<Subset> got(subsets(3, 2).begin(), subsets(3, 2).end());
    CHECK(got == std::vector<Subset>{Subset(3, {1, 2}), Subset(3, {1, 3}), Subset(3, {2, 3})});

    got.assign(subsets(3, 0).begin(), subsets(3, 0).end());
    CHECK(got == std::vector<Subset>{Subset(3, {})});

    got.assign(subsets(3, 3).begin(), subsets(3, 3).end());
    CHECK(got == std::vector<Subset>{Subset(3, {1, 2, 3})});

    CHECK_THROWS_AS(subsets(3, 4), InvalidArgument);
}

TEST_CASE("stream order agrees with rank and with bitmask enumeration") {
    for (int m = 0; m <= 12; ++m)
        for (int k = 0; k <= m; ++k) {
            const auto masks = oracle::colex_masks(m, k);
            std::uint64_t t = 0;
            for (const Subset& s : subsets(m, k)) {
                REQUIRE(t < masks.size());
                REQUIRE(subset_rank(s).rank == t);
                REQUIRE(std::vector<int>(s.elements().begin(), s.elements().end()) ==
                        oracle::mask_elements(masks[t]));
                ++t;
            }
            REQUIRE(t == masks.size());
        }
}

TEST_CASE("p_divides_binomial") {
    CHECK(p_divides_binomial(2, 2, 1));
    CHECK(p_divides_binomial(3, 4, 2));
    CHECK_FALSE(p_divides_binomial(0, 7, 3));
    CHECK_FALSE(p_divides_binomial(5, 5, 0));
    CHECK_THROWS_AS(p_divides_binomial(4, 5, 2), InvalidArgument);
    CHECK_THROWS_AS(p_divides_binomial(1, 5, 2), InvalidArgument);
    CHECK_THROWS_AS(p_divides_binomial(3, 2, 5), InvalidArgument);
}

TEST_CASE("Lucas test agrees with big-integer remainder") {
    const auto table = oracle::pascal(40);
    for (std::uint64_t p : {2, 3, 5, 7, 11})
        for (int a = 0; a <= 40; ++a)
            for (int b = 0; b <= a; ++b) {
                const bool divides = table[a][b] % static_cast<unsigned long>(p) == 0;
                REQUIRE(p_divides_binomial(p, a, b) == divides);
            }
    // Large arguments never form the coefficient.
    CHECK(p_divides_binomial(2, (std::uint64_t{1} << 40), 1));
    CHECK_FALSE(p_divides_binomial(2, (std::uint64_t{1} << 40) - 1, 12345));
}

TEST_CASE("specht_dim") {
    CHECK(specht_dim(4, 1) == 3);
    CHECK(specht_dim(6, 0) == 1);
    CHECK(oracle::choose(6, 3) - oracle::choose(6, 2) == 5);
    CHECK(specht_dim(6, 3) == 5);
    CHECK_THROWS_AS(specht_dim(6, 4), InvalidArgument);
    CHECK_THROWS_AS(specht_dim(6, -1), InvalidArgument);
}

TEST_CASE("hook values telescope to C(m, i)") {
    for (int m = 0; m <= 30; ++m)
        for (int i = 0; 2 * i <= m; ++i) {
            BigInt sum = 0;
            for (int j = 0; j <= i; ++j) sum += specht_dim(m, j);
            REQUIRE(sum == binomial(m, i));
        }
}
