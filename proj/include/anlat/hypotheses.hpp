#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anlat/vectorset.hpp"

// The five admissibility conditions on a family S: 0 excluded,
// antipodal symmetry, full rank, cardinality at least n(n+1), and
// every independent n-subset unimodular. Each failure carries a
// concrete witness.

namespace anlat {

struct BudgetError : Error {
    using Error::Error;
};

struct GenerationWitness {
    std::vector<IntVector> subset;  // n vectors with |det| not in {0, 1}
    Int determinant = 0;
};

struct HypothesisReport {
    struct Entry {
        bool pass = false;
        std::string witness;  // empty iff pass
    };
    Entry zero_excluded;       // (1) 0 not in S
    Entry symmetric;           // (2) x in S implies -x in S
    Entry full_rank;           // (3) rank(S) = n
    Entry cardinality;         // (4) |S| >= n(n+1)
    Entry unimodular_subsets;  // (5) independent n-subsets generate M
    std::optional<GenerationWitness> generation_witness;
    std::size_t achieved_rank = 0;
    std::size_t achieved_size = 0;

    bool all_pass() const {
        return zero_excluded.pass && symmetric.pass && full_rank.pass &&
               cardinality.pass && unimodular_subsets.pass;
    }
};

inline constexpr std::uint64_t kDefaultSubsetBudget = 10'000'000;

// Evaluates all five conditions; never short-circuits. Condition 5 is
// scanned over n-subsets of sign-representatives (|det| is invariant
// under sign flips), with the subset count capped by `budget`.
HypothesisReport check_all(const VectorSet& s, std::size_t n,
                           std::uint64_t budget = kDefaultSubsetBudget);

// The condition-5 core: the first n-subset (lexicographic enumeration
// over the sorted representatives) with |det| outside {0, 1}, if any.
std::optional<GenerationWitness> check_generation(
    const VectorSet& s, std::uint64_t budget = kDefaultSubsetBudget);

}  // namespace anlat
