#include <doctest.h>

#include <random>

#include "incmat/linalg.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace incmat;
using support::to_exact;

namespace {

const FieldSpec GF2(2), GF3(3), GF5(5), Q = FieldSpec::rationals();
constexpr std::uint64_t kMersenne31 = 2147483647;

std::vector<FieldSpec> all_fields() {
    return {Q, GF2, GF3, FieldSpec(5), FieldSpec(7), FieldSpec(kMersenne31)};
}

ExactMatrix unit_span(FieldSpec f, std::size_t n, std::initializer_list<std::size_t> axes) {
    ExactMatrix m(f, axes.size(), n);
    std::size_t r = 0;
    for (std::size_t a : axes) m.set(r++, a, 1);
    return m;
}

}  // namespace

TEST_CASE("field spec") {
    CHECK(FieldSpec(0).is_rational());
    CHECK(FieldSpec(2).is_gf2());
    CHECK(FieldSpec(kMersenne31).characteristic() == kMersenne31);
    CHECK_THROWS_AS(FieldSpec(1), InvalidArgument);
    CHECK_THROWS_AS(FieldSpec(4), InvalidArgument);
    CHECK_THROWS_AS(FieldSpec(4294967311ULL), InvalidArgument);  // prime, but >= 2^31
    CHECK(is_prime(4294967311ULL));
    CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("entries are canonical") {
    ExactMatrix m(GF5, 1, 3);
    m.set(0, 0, -1);
    m.set(0, 1, 12);
    m.set(0, 2, Rational(1, 2));
    CHECK(m.entry_string(0, 0) == "4");
    CHECK(m.entry_string(0, 1) == "2");
    CHECK(m.entry_string(0, 2) == "3");
    CHECK_THROWS_AS(m.set(0, 0, Rational(1, 5)), InvalidArgument);

    ExactMatrix q(Q, 1, 1);
    q.set(0, 0, Rational(6, 4));
    CHECK(q.entry_string(0, 0) == "3/2");
}

TEST_CASE("rank examples") {
    CHECK(rank(ExactMatrix::identity(GF5, 3)) == 3);

    ExactMatrix ones(GF2, 4, 6);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 6; ++c) ones.set(r, c, 1);
    CHECK(rank(ones) == 1);

    // A_1^2(4): frozen from the naive elimination oracle.
    const auto a = oracle::inclusion(4, 1, 2);
    REQUIRE(oracle::naive_rank_mod(a, 2) == 3);
    CHECK(rank(to_exact(a, GF2)) == 3);
    CHECK(rank(ExactMatrix(GF3, 0, 5)) == 0);
    CHECK(rank(ExactMatrix(Q, 3, 0)) == 0);
}

TEST_CASE("kernel_basis examples") {
    CHECK(kernel_basis(ExactMatrix::identity(GF3, 4)).dim() == 0);

    const SubspaceBasis full = kernel_basis(ExactMatrix(GF5, 2, 3));
    CHECK(full.dim() == 3);
    CHECK(full.vectors() == ExactMatrix::identity(GF5, 3));

    const SubspaceBasis parity = kernel_basis(ExactMatrix::from_rows(GF2, {{1, 1}}));
    CHECK(parity.vectors() == ExactMatrix::from_rows(GF2, {{1, 1}}));
}

TEST_CASE("column_space_basis examples") {
    CHECK(column_space_basis(ExactMatrix::identity(Q, 4)).dim() == 4);
    CHECK(column_space_basis(ExactMatrix::from_rows(GF3, {{1, 1}, {2, 2}, {0, 0}})).dim() == 1);
    const SubspaceBasis p = column_space_basis(to_exact(oracle::inclusion(4, 1, 2), GF2));
    CHECK(p.dim() == 3);
    CHECK(p.ambient_dim() == 4);
}

TEST_CASE("intersect examples") {
    for (const FieldSpec& f : all_fields()) {
        const auto x = SubspaceBasis::span_of_rows(ExactMatrix::from_rows(f, {{1, 2, 0}, {0, 1, 1}}));
        CHECK(intersect(x, x) == x);

        const auto e1 = SubspaceBasis::span_of_rows(unit_span(f, 3, {0}));
        const auto e2 = SubspaceBasis::span_of_rows(unit_span(f, 3, {1}));
        CHECK(intersect(e1, e2).dim() == 0);

        const auto e12 = SubspaceBasis::span_of_rows(unit_span(f, 3, {0, 1}));
        const auto e23 = SubspaceBasis::span_of_rows(unit_span(f, 3, {1, 2}));
        CHECK(intersect(e12, e23) == e2);
    }
    CHECK_THROWS_AS(intersect(SubspaceBasis(GF2, 3), SubspaceBasis(GF3, 3)), InvalidArgument);
    CHECK_THROWS_AS(intersect(SubspaceBasis(GF2, 3), SubspaceBasis(GF2, 4)), InvalidArgument);
}

TEST_CASE("mat_mul examples") {
    const auto m = ExactMatrix::from_rows(GF5, {{1, 2, 3}, {4, 0, 1}});
    CHECK(mat_mul(ExactMatrix::identity(GF5, 2), m) == m);
    CHECK(mat_mul(m, ExactMatrix(GF5, 3, 4)) == ExactMatrix(GF5, 2, 4));
    CHECK(mat_mul(ExactMatrix::from_rows(GF2, {{1, 1}, {0, 1}}), ExactMatrix::from_rows(GF2, {{1, 0}, {1, 1}})) ==
          ExactMatrix::from_rows(GF2, {{0, 1}, {1, 1}}));
    CHECK_THROWS_AS(mat_mul(m, m), InvalidArgument);
    CHECK_THROWS_AS(mat_mul(ExactMatrix::identity(GF2, 2), ExactMatrix::identity(GF3, 2)), InvalidArgument);
}

TEST_CASE("mat_vec examples") {
    const auto v = ExactVector::from_integers(Q, {3, -1, 2});
    CHECK(mat_vec(ExactMatrix::identity(Q, 3), v) == v);
    CHECK(mat_vec(ExactMatrix(Q, 2, 3), v).is_zero());
    const auto ones = ExactMatrix::from_rows(GF3, {{1, 1, 1, 1, 1}});
    CHECK(mat_vec(ones, ExactVector::from_integers(GF3, {1, 0, 1, 1, 0})).is_zero());
    CHECK_THROWS_AS(mat_vec(ones, ExactVector(GF3, 4)), InvalidArgument);
}

TEST_CASE("rank agrees with the naive oracle and with the transpose") {
    std::mt19937_64 rng(oracle::test_seed());
    std::uniform_int_distribution<std::size_t> dim(0, 12);
    for (const FieldSpec& f : all_fields()) {
        for (int trial = 0; trial < 60; ++trial) {
            const auto a = support::random_matrix(rng, dim(rng), dim(rng), -3, 3, 0.4);
            const ExactMatrix m = to_exact(a, f);
            const std::size_t r = rank(m);
            REQUIRE(r == oracle::naive_rank(a, f.characteristic()));
            REQUIRE(rank(m.transpose()) == r);
        }
    }
}

TEST_CASE("rank-nullity and kernel vectors annihilate") {
    std::mt19937_64 rng(oracle::test_seed() + 1);
    std::uniform_int_distribution<std::size_t> dim(1, 10);
    for (const FieldSpec& f : all_fields()) {
        for (int trial = 0; trial < 40; ++trial) {
            const ExactMatrix m = to_exact(support::random_matrix(rng, dim(rng), dim(rng), -2, 2, 0.5), f);
            const SubspaceBasis k = kernel_basis(m);
            REQUIRE(rank(m) + k.dim() == m.cols());
            REQUIRE(mat_mul(m, k.vectors().transpose()).is_zero());
            REQUIRE(rank(k.vectors()) == k.dim());
        }
    }
}

TEST_CASE("bit-packed GF(2) agrees with per-entry elimination up to 200x200") {
    std::mt19937_64 rng(oracle::test_seed() + 2);
    const std::size_t sizes[][2] = {{1, 1}, {63, 65}, {64, 64}, {130, 70}, {200, 200}, {200, 129}};
    for (const auto& s : sizes) {
        for (double density : {0.05, 0.5}) {
            const auto a = support::random_matrix(rng, s[0], s[1], 0, 1, density);
            const ExactMatrix m = to_exact(a, GF2);
            REQUIRE(rank(m) == oracle::naive_rank_mod(a, 2));
            REQUIRE(rref(m).pivots.size() == oracle::naive_rank_mod(a, 2));
        }
    }
    // Low-rank: product of thin random factors.
    const auto left = to_exact(support::random_matrix(rng, 200, 37, 0, 1), GF2);
    const auto right = to_exact(support::random_matrix(rng, 37, 200, 0, 1), GF2);
    const ExactMatrix product = mat_mul(left, right);
    CHECK(rank(product) == oracle::naive_rank_mod(support::to_ints(product), 2));
}

TEST_CASE("characteristic 0 agrees with a 31-bit prime on 0/1 matrices") {
    std::mt19937_64 rng(oracle::test_seed() + 3);
    std::uniform_int_distribution<std::size_t> dim(1, 25);
    const FieldSpec big(kMersenne31);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = support::random_matrix(rng, dim(rng), dim(rng), 0, 1, 0.5);
        REQUIRE(rank(to_exact(a, Q)) == rank(to_exact(a, big)));
    }
}

TEST_CASE("Bareiss handles rational entries") {
    auto m = ExactMatrix::from_rows(Q, {{1, 2}, {2, 4}});
    m.set(0, 0, Rational(1, 3));
    m.set(0, 1, Rational(2, 3));
    CHECK(rank(m) == 1);
    m.set(1, 1, Rational(7, 5));
    CHECK(rank(m) == 2);
}

TEST_CASE("rref is canonical under row shuffles") {
    std::mt19937_64 rng(oracle::test_seed() + 4);
    for (const FieldSpec& f : all_fields()) {
        auto a = support::random_matrix(rng, 8, 10, -2, 2, 0.4);
        const RowEchelon e = rref(to_exact(a, f));
        std::shuffle(a.begin(), a.end(), rng);
        CHECK(rref(to_exact(a, f)).reduced == e.reduced);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            CHECK(e.reduced.value(r, e.pivots[r]) == 1);
            for (std::size_t s = 0; s < e.pivots.size(); ++s)
                if (s != r) CHECK(e.reduced.is_zero(s, e.pivots[r]));
        }
    }
}

TEST_CASE("intersection dimension formula on random subspaces") {
    std::mt19937_64 rng(oracle::test_seed() + 5);
    std::uniform_int_distribution<std::size_t> rows(0, 7);
    for (const FieldSpec& f : all_fields()) {
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t n = 8;
            auto random_space = [&] {
                const std::size_t k = rows(rng);
                if (k == 0) return SubspaceBasis(f, n);
                return SubspaceBasis::span_of_rows(to_exact(support::random_matrix(rng, k, n, -1, 1, 0.5), f));
            };
            const auto a = random_space();
            const auto b = random_space();
            const auto both = intersect(a, b);
            REQUIRE(a.dim() + b.dim() == both.dim() + span_sum(a, b).dim());
            for (std::size_t r = 0; r < both.dim(); ++r) {
                REQUIRE(a.contains(both.vectors().row(r)));
                REQUIRE(b.contains(both.vectors().row(r)));
            }
        }
    }
}

TEST_CASE("echelon basis insertion matches dense rank") {
    std::mt19937_64 rng(oracle::test_seed() + 6);
    for (const FieldSpec& f : {GF2, GF3, FieldSpec(7)}) {
        for (std::size_t n : {1u, 5u, 64u, 65u, 130u}) {
            const auto a = support::random_matrix(rng, n / 2 + 3, n, 0, 6, 0.3);
            EchelonBasis basis(f, n);
            const ExactMatrix m = to_exact(a, f);
            for (std::size_t r = 0; r < m.rows(); ++r) basis.insert(m.row(r));
            REQUIRE(basis.rank() == rank(m));
        }
    }
    EchelonBasis b(GF3, 4);
    const std::uint64_t support_a[] = {0, 1};
    const std::uint64_t support_b[] = {1, 0};
    CHECK(b.insert_indicator(support_a));
    CHECK_FALSE(b.insert_indicator(support_b));
    CHECK_THROWS_AS(EchelonBasis(Q, 3), InvalidArgument);
}
