#include <doctest.h>

#include <random>

#include "anlat/generator.hpp"
#include "anlat/normalizer.hpp"

using namespace anlat;

TEST_CASE("extract_basis") {
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto b = extract_basis(canonical_an(n));
        CHECK((b.determinant() == 1 || b.determinant() == -1));
    }
    CHECK_THROWS_AS(extract_basis(VectorSet::from_vectors(2, {{1, 0}, {-1, 0}})),
                    Error);

    std::mt19937_64 rng(71);
    for (int it = 0; it < 20; ++it) {
        const auto s = scramble(canonical_an(4), {rng(), 20}).set;
        const auto b = extract_basis(s);
        for (std::size_t j = 0; j < 4; ++j) CHECK(s.contains(b.column(j)));
    }
}

TEST_CASE("normalize on already-canonical input") {
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto s = canonical_an(n);
        const auto res = normalize(s);
        CHECK(res.normalized == s);
        CHECK(transform(s, res.basis) == s);
    }
}

TEST_CASE("round-trip normalization of scrambled families") {
    std::mt19937_64 rng(73);
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int it = 0; it < 10; ++it) {
            const auto s = scramble(canonical_an(n), {rng(), 20}).set;
            const auto res = normalize(s);
            CHECK(res.normalized == canonical_an(n));
            CHECK(transform(s, res.basis) == canonical_an(n));
        }
    }
}

TEST_CASE("one sweep substitution on the mixed rank-3 fixture") {
    // canonical family in the basis (f1, f2, f1 - f3)
    const BasisChange b(
        IntMatrix::from_columns({{1, 0, 0}, {0, 1, 0}, {1, 0, -1}}));
    const auto s = transform(canonical_an(3), b);

    // e1 = f1, which sits last in the sorted half-system of s
    const auto res = normalize_at(s, IntVector{1, 0, 0});
    CHECK(res.normalized == canonical_an(3));
    CHECK(res.trace.sweep_substitutions == std::vector<std::size_t>{2});
    CHECK(res.trace.before_sweep.tag(2, 3) == Classification::Tag::Triple);
    CHECK(res.trace.after_sweep.tag(2, 3) == Classification::Tag::Diff);

    // default choice succeeds as well
    CHECK(normalize(s).normalized == canonical_an(3));
}

TEST_CASE("all e1 choices agree") {
    const auto outcomes3 = normalize_all_choices(canonical_an(3));
    CHECK(outcomes3.size() == 6);
    for (const auto& o : outcomes3) {
        REQUIRE(o.result.has_value());
        CHECK(o.result->normalized == canonical_an(3));
    }

    std::mt19937_64 rng(79);
    const auto s = scramble(canonical_an(4), {rng(), 20}).set;
    const auto outcomes4 = normalize_all_choices(s);
    CHECK(outcomes4.size() == 10);
    for (const auto& o : outcomes4) {
        REQUIRE(o.result.has_value());
        CHECK(o.result->normalized == canonical_an(4));
    }
}

TEST_CASE("typed rejections") {
    SUBCASE("dropped pair") {
        const auto s = mutate_drop_pair(canonical_an(3), 0);
        CHECK_THROWS_AS(normalize(s), NormalizeError);
        try {
            normalize(s);
        } catch (const NormalizeError& e) {
            CHECK(e.kind == NormalizeError::Kind::HypothesisViolation);
        }
    }
    SUBCASE("injected sum") {
        const auto s = mutate_inject_sum(canonical_an(3), 1, 2);
        try {
            normalize(s);
            FAIL("expected NormalizeError");
        } catch (const NormalizeError& e) {
            CHECK((e.kind == NormalizeError::Kind::TwinCountMismatch ||
                   e.kind == NormalizeError::Kind::Unclassifiable));
        }
    }
    SUBCASE("asymmetric input") {
        const auto s = canonical_an(2).without(IntVector{-1, 1});
        CHECK_THROWS_AS(normalize(s), NormalizeError);
    }
    SUBCASE("rank-1 family with the wrong pair") {
        const auto s = VectorSet::from_vectors(1, {{2}, {-2}});
        CHECK_THROWS_AS(normalize(s), NormalizeError);
    }
    SUBCASE("e1 index out of range") {
        CHECK_THROWS_AS(normalize(canonical_an(2), 99), DimensionError);
    }
}

TEST_CASE("success implies the count is exact") {
    std::mt19937_64 rng(83);
    for (int it = 0; it < 10; ++it) {
        const std::size_t n = 2 + it % 3;
        const auto s = scramble(canonical_an(n), {rng(), 15}).set;
        const auto res = normalize(s);
        CHECK(s.size() == n * (n + 1));
        CHECK(res.normalized.size() == n * (n + 1));
    }
}
