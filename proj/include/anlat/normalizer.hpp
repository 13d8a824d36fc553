#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anlat/lemma_audit.hpp"
#include "anlat/vectorset.hpp"

// The main algorithm: given a family satisfying the five hypotheses,
// construct a unimodular basis in which it equals the canonical
// minimal-vector set. Pipeline: pick e1, read the n-1 twin systems off
// as a basis, classify every element against the four admissible
// shapes, then sweep the last column to eliminate three-component
// entries.

namespace anlat {

struct NormalizeError : Error {
    enum class Kind {
        HypothesisViolation,  // cheap re-verification failed
        TwinCountMismatch,
        DependentTwinBasis,
        Unclassifiable,
        SweepIncomplete,
        FinalMismatch,  // internal-consistency failure
    };
    NormalizeError(Kind kind, const std::string& msg) : Error(msg), kind(kind) {}
    Kind kind;
};

const char* to_string(NormalizeError::Kind kind);

struct NormalizationTrace {
    IntVector e1;
    std::vector<TwinSystem> twins;
    Classification before_sweep;
    std::vector<std::size_t> sweep_substitutions;  // 1-based j with e_j <- e1 - e_j
    Classification after_sweep;
};

struct NormalizationResult {
    BasisChange basis;      // columns = found e_1..e_n in input coordinates
    VectorSet normalized;   // s in the found basis; equals the canonical set
    NormalizationTrace trace;
};

// Greedy lexicographic scan collecting vectors that increase the rank.
BasisChange extract_basis(const VectorSet& s);

NormalizationResult normalize(const VectorSet& s,
                              std::optional<std::size_t> e1_index = std::nullopt);

// Same pipeline with an explicit e1 (must be an element of s).
NormalizationResult normalize_at(const VectorSet& s, const IntVector& e1);

struct ChoiceOutcome {
    std::size_t e1_index = 0;
    std::optional<NormalizationResult> result;
    std::string error;  // empty on success
};

// normalize for every e1 in the half-system; for valid inputs all runs
// succeed with the same normalized set.
std::vector<ChoiceOutcome> normalize_all_choices(const VectorSet& s);

}  // namespace anlat
