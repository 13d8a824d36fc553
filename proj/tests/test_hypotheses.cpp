#include <doctest.h>

#include <random>

#include "anlat/generator.hpp"
#include "anlat/hypotheses.hpp"

using namespace anlat;

TEST_CASE("canonical families pass all five conditions") {
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto s = canonical_an(n);
        const auto rep = check_all(s, n);
        CHECK(rep.all_pass());
        CHECK(rep.achieved_size == n * (n + 1));
        CHECK(rep.achieved_rank == n);
    }
}

TEST_CASE("zero vector is reported with a witness") {
    const auto s = canonical_an(2).with(IntVector{0, 0});
    const auto rep = check_all(s, 2);
    CHECK_FALSE(rep.zero_excluded.pass);
    CHECK_FALSE(rep.zero_excluded.witness.empty());
    CHECK(rep.symmetric.pass);
}

TEST_CASE("asymmetry is reported") {
    const auto s = canonical_an(2).without(IntVector{-1, 1});
    const auto rep = check_all(s, 2);
    CHECK_FALSE(rep.symmetric.pass);
}

TEST_CASE("sum injection breaks condition 5 with det -2") {
    const auto s = VectorSet::from_vectors(
        2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}});
    const auto rep = check_all(s, 2);
    CHECK(rep.zero_excluded.pass);
    CHECK(rep.symmetric.pass);
    CHECK(rep.full_rank.pass);
    CHECK(rep.cardinality.pass);
    CHECK_FALSE(rep.unimodular_subsets.pass);
    REQUIRE(rep.generation_witness.has_value());
    CHECK((rep.generation_witness->determinant == 2 ||
           rep.generation_witness->determinant == -2));
}

TEST_CASE("dropping a pair breaks condition 4") {
    const auto s = mutate_drop_pair(canonical_an(3), 0);
    const auto rep = check_all(s, 3);
    CHECK_FALSE(rep.cardinality.pass);
    CHECK(rep.achieved_size == 10);
}

TEST_CASE("check_generation") {
    CHECK_FALSE(check_generation(canonical_an(5)).has_value());  // C(15,5) subsets

    const auto bad = mutate_inject_sum(canonical_an(2), 1, 2);
    const auto w = check_generation(bad);
    REQUIRE(w.has_value());
    CHECK((w->determinant == 2 || w->determinant == -2));
    CHECK(w->subset.size() == 2);

    CHECK_FALSE(check_generation(VectorSet::from_vectors(3, {{1, 0, 0}})).has_value());
}

TEST_CASE("pass/fail pattern is invariant under unimodular transforms") {
    std::mt19937_64 rng(37);
    const std::vector<VectorSet> inputs = {
        canonical_an(3),
        mutate_drop_pair(canonical_an(3), 2),
        mutate_inject_sum(canonical_an(3), 1, 3),
        canonical_an(3).with(IntVector{0, 0, 0}),
    };
    for (const auto& s : inputs) {
        const auto base = check_all(s, 3);
        for (int it = 0; it < 10; ++it) {
            const auto t = transform(s, random_unimodular(3, {rng(), 15}));
            const auto rep = check_all(t, 3);
            CHECK(rep.zero_excluded.pass == base.zero_excluded.pass);
            CHECK(rep.symmetric.pass == base.symmetric.pass);
            CHECK(rep.full_rank.pass == base.full_rank.pass);
            CHECK(rep.cardinality.pass == base.cardinality.pass);
            CHECK(rep.unimodular_subsets.pass == base.unimodular_subsets.pass);
        }
    }
}

TEST_CASE("enumeration budget is enforced") {
    CHECK_THROWS_AS(check_all(canonical_an(5), 5, 100), BudgetError);
}
