#pragma once

#include <cstdint>

#include "anlat/vectorset.hpp"

// Test-corpus factory: the canonical minimal-vector set of the rank-n
// root lattice, deterministic unimodular scrambles, the adversarial
// mixed basis, and hypothesis-violating mutants.

namespace anlat {

// Deterministic scramble description; the same recipe always produces
// the same basis change. PRNG: std::mt19937_64 seeded with `seed`.
struct ScrambleRecipe {
    std::uint64_t seed = 0;
    std::size_t steps = 0;
};

// {+-f_i} u {+-(f_i - f_j), i < j} in the rank-n coordinate frame;
// exactly n(n+1) vectors.
VectorSet canonical_an(std::size_t n);

// Product of `steps` elementary column operations on the identity
// (add +-1 times another column, swap, negate); det is always +-1.
BasisChange random_unimodular(std::size_t n, const ScrambleRecipe& recipe);

struct ScrambleResult {
    VectorSet set;
    BasisChange basis;
};

// The set re-expressed in a random unimodular basis, plus that basis.
ScrambleResult scramble(const VectorSet& s, const ScrambleRecipe& recipe);

// The basis e_1 = f_1, ..., e_r = f_r, e_{r+1} = f_1 - f_{r+1}, ...,
// e_n = f_1 - f_n (columns in the canonical frame); identity when r = n.
BasisChange martinet_gap_basis(std::size_t n, std::size_t r);

// Removes the pair_index-th antipodal pair (indices into the sorted
// half-system).
VectorSet mutate_drop_pair(const VectorSet& s, std::size_t pair_index);

// Injects +-(f_i + f_j), the forbidden two-plus-component pair.
// Indices are 1-based.
VectorSet mutate_inject_sum(const VectorSet& s, std::size_t i, std::size_t j);

}  // namespace anlat
