#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "anlat/hypotheses.hpp"
#include "anlat/vectorset.hpp"

// Executable audits of the structural facts the normalizer relies on:
// the characteristic-determinant bound, the forbidden two- and
// three-vector configurations, twin-system enumeration, the corrected
// quotient-set construction, and the p_{i,j} substitution together
// with its failure mode.
//
// All basis indices in this module are 1-based, matching the usual
// e_1..e_n numbering.

namespace anlat {

// An antipodal class of pairs {x, e1 + x} with both members in S.
struct TwinSystem {
    IntVector x;
    IntVector partner;  // e1 + x
    bool operator==(const TwinSystem&) const = default;
};

// Pattern table of a family against the four admissible shapes
// (+-e_i, +-(e1 - e_i), +-(e_i - e_j), +-(e1 - e_i - e_j)).
struct Classification {
    enum class Tag { None, Diff, Triple, Both };

    std::vector<std::size_t> units;      // i with +-e_i present
    std::vector<std::size_t> first_row;  // i >= 2 with +-(e1 - e_i) present
    std::map<std::pair<std::size_t, std::size_t>, Tag> table;  // (i, j), 2 <= i < j
    std::vector<IntVector> leftovers;  // in the classification basis
    bool accepted = false;

    Tag tag(std::size_t i, std::size_t j) const {
        auto it = table.find({i, j});
        return it == table.end() ? Tag::None : it->second;
    }
};

// K of the characteristic-determinant bound: the maximum |det| over
// n-subsets of s, in the given basis. Basis columns must come from s.
Int max_basis_determinant(const VectorSet& s, const BasisChange& basis,
                          std::uint64_t budget = kDefaultSubsetBudget);

struct MinorViolation {
    std::vector<std::size_t> rows;  // 0-based into the basis
    std::vector<std::size_t> cols;  // 0-based into the sorted set
    Int value = 0;
};

struct MinorBoundReport {
    Int bound = 0;          // K
    Int max_abs_minor = 0;  // over all r x r minors, r <= n
    std::optional<MinorViolation> violation;
    bool ok() const { return !violation.has_value(); }
};

// Scans every r x r minor of the n x |s| component matrix of s in the
// basis and checks |d| <= K.
MinorBoundReport check_minor_bound(const VectorSet& s, const BasisChange& basis,
                                   std::uint64_t budget = kDefaultSubsetBudget);

struct ForbiddenPair {
    IntVector x, y;     // half-system members, basis coordinates
    std::size_t i, j;   // 1-based basis indices
    Int minor = 0;      // +-2
};

// Half-system pairs whose 2x2 component minor is +-2 (two vectors with
// nonzero components on two basis elements that are neither equal nor
// opposite).
std::vector<ForbiddenPair> find_forbidden_pairs(const VectorSet& s,
                                                const BasisChange& basis);

struct ForbiddenTriple {
    std::size_t i, j, k;  // 1-based; (e_i - e_j, e_i - e_k, e_j + e_k) in S
};

std::vector<ForbiddenTriple> find_forbidden_triples(const VectorSet& s,
                                                    const BasisChange& basis);

// All antipodal classes {x, e1 + x} with both members in s, excluding
// x = +-e1. One representative per class, the lexicographically
// greater of the two valid choices; sorted.
std::vector<TwinSystem> twin_systems(const VectorSet& s, const IntVector& e1);

// The quotient family: nonzero x in span(e_2..e_n) with x, x + e1 or
// x - e1 in s, in the (n-1)-dimensional coordinates of (e_2..e_n).
VectorSet build_sprime(const VectorSet& s, const BasisChange& basis);

// Antipodal pairs of the quotient family whose preimage in s needed an
// e1 adjustment (x itself absent from s).
std::size_t sprime_modified_pairs(const VectorSet& s, const BasisChange& basis);

// Substitutes e_j <- e_i - e_j (both indices >= 2); an involution.
BasisChange apply_pij(const BasisChange& basis, std::size_t i, std::size_t j);

Classification classify(const VectorSet& s, const BasisChange& basis);

}  // namespace anlat
