#include <doctest.h>

#include <random>

#include "anlat/generator.hpp"
#include "anlat/hypotheses.hpp"
#include "anlat/normalizer.hpp"

using namespace anlat;

TEST_CASE("canonical family sizes") {
    CHECK(canonical_an(1).vectors() == std::vector<IntVector>{{-1}, {1}});
    CHECK(canonical_an(2) ==
          VectorSet::from_vectors(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}}));
    for (std::size_t n = 1; n <= 8; ++n) CHECK(canonical_an(n).size() == n * (n + 1));
    CHECK_THROWS_AS(canonical_an(0), DimensionError);
}

TEST_CASE("random_unimodular") {
    CHECK(random_unimodular(3, {99, 0}).matrix() == IntMatrix::identity(3));
    std::mt19937_64 rng(61);
    for (int it = 0; it < 50; ++it) {
        const auto b = random_unimodular(1 + it % 5, {rng(), 25});
        CHECK((b.determinant() == 1 || b.determinant() == -1));
    }
    // same recipe, same matrix
    CHECK(random_unimodular(4, {42, 20}) == random_unimodular(4, {42, 20}));
}

TEST_CASE("pinned scramble matrix for seed 42, 20 steps, n = 4") {
    const auto b = random_unimodular(4, {42, 20});
    const IntMatrix expected = IntMatrix::from_rows({
        {0, -1, 0, -1},
        {-1, 0, 0, -2},
        {0, -1, 1, 0},
        {0, 1, 0, 0},
    });
    CHECK(b.matrix() == expected);
}

TEST_CASE("scramble") {
    const auto s = canonical_an(2);
    CHECK(scramble(s, {7, 0}).set == s);

    std::mt19937_64 rng(67);
    for (int it = 0; it < 20; ++it) {
        const std::size_t n = 2 + it % 4;
        const auto sn = canonical_an(n);
        const auto res = scramble(sn, {rng(), 18});
        CHECK(transform(res.set, inverse_unimodular(res.basis)) == sn);
        CHECK(check_all(res.set, n).all_pass());
    }
}

TEST_CASE("martinet_gap_basis") {
    for (std::size_t n = 1; n <= 8; ++n) {
        CHECK(martinet_gap_basis(n, n).matrix() == IntMatrix::identity(n));
        for (std::size_t r = 1; r <= n; ++r) {
            const auto b = martinet_gap_basis(n, r);
            CHECK((b.determinant() == 1 || b.determinant() == -1));
        }
    }
    const auto t = transform(canonical_an(4), martinet_gap_basis(4, 2));
    CHECK(t.contains({1, -1, -1, 0}));
    CHECK_THROWS_AS(martinet_gap_basis(4, 0), DimensionError);
    CHECK_THROWS_AS(martinet_gap_basis(4, 5), DimensionError);
}

TEST_CASE("mutants") {
    const auto dropped = mutate_drop_pair(canonical_an(3), 0);
    CHECK(dropped.size() == 10);
    CHECK_FALSE(check_all(dropped, 3).cardinality.pass);

    const auto injected = mutate_inject_sum(canonical_an(2), 1, 2);
    const auto rep = check_all(injected, 2);
    CHECK_FALSE(rep.unimodular_subsets.pass);
    REQUIRE(rep.generation_witness.has_value());
    CHECK((rep.generation_witness->determinant == 2 ||
           rep.generation_witness->determinant == -2));

    // inject then drop below the size bound: both conditions fail at once
    const auto mixed =
        mutate_drop_pair(mutate_drop_pair(mutate_inject_sum(canonical_an(3), 1, 2), 0), 0);
    const auto both = check_all(mixed, 3);
    CHECK_FALSE(both.cardinality.pass);
    CHECK_FALSE(both.unimodular_subsets.pass);

    CHECK_THROWS_AS(mutate_drop_pair(canonical_an(2), 9), DimensionError);
    CHECK_THROWS_AS(mutate_inject_sum(canonical_an(2), 1, 1), DimensionError);
}
