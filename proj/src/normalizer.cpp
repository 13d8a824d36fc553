#include "anlat/normalizer.hpp"

#include <algorithm>
#include <sstream>

#include "anlat/generator.hpp"

namespace anlat {

const char* to_string(NormalizeError::Kind kind) {
    switch (kind) {
        case NormalizeError::Kind::HypothesisViolation: return "HypothesisViolation";
        case NormalizeError::Kind::TwinCountMismatch: return "TwinCountMismatch";
        case NormalizeError::Kind::DependentTwinBasis: return "DependentTwinBasis";
        case NormalizeError::Kind::Unclassifiable: return "Unclassifiable";
        case NormalizeError::Kind::SweepIncomplete: return "SweepIncomplete";
        case NormalizeError::Kind::FinalMismatch: return "FinalMismatch";
    }
    return "?";
}

namespace {

[[noreturn]] void fail(NormalizeError::Kind kind, const std::string& msg) {
    throw NormalizeError(kind, std::string(to_string(kind)) + ": " + msg);
}

std::string format_vector(const IntVector& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ' ';
        out << v[i];
    }
    return out.str();
}

void cheap_verify(const VectorSet& s, std::size_t n) {
    if (s.contains(IntVector(n, 0)))
        fail(NormalizeError::Kind::HypothesisViolation, "0 in S");
    if (!s.is_symmetric())
        fail(NormalizeError::Kind::HypothesisViolation, "S is not antipodally symmetric");
    if (s.size() < n * (n + 1))
        fail(NormalizeError::Kind::HypothesisViolation,
             "|S| = " + std::to_string(s.size()) + " < " + std::to_string(n * (n + 1)));
}

std::string describe_rejection(const Classification& cls) {
    if (!cls.leftovers.empty()) return format_vector(cls.leftovers.back());
    std::ostringstream out;
    out << "incomplete table (units " << cls.units.size() << ", first row "
        << cls.first_row.size() << ")";
    return out.str();
}

}  // namespace

BasisChange extract_basis(const VectorSet& s) {
    const std::size_t n = s.dim();
    std::vector<IntVector> picked;
    for (const auto& v : s.vectors()) {
        picked.push_back(v);
        if (rank(picked) < picked.size())
            picked.pop_back();
        else if (picked.size() == n)
            break;
    }
    if (picked.size() < n) throw Error("set has rank < n; no basis to extract");
    return BasisChange(IntMatrix::from_columns(picked));
}

NormalizationResult normalize(const VectorSet& s, std::optional<std::size_t> e1_index) {
    const std::size_t n = s.dim();
    if (n == 0) throw DimensionError("dimension must be positive");
    cheap_verify(s, n);
    const auto reps = half_system(s);
    const std::size_t choice = e1_index.value_or(0);
    if (choice >= reps.size()) throw DimensionError("e1 index out of range");
    return normalize_at(s, reps[choice]);
}

NormalizationResult normalize_at(const VectorSet& s, const IntVector& e1) {
    const std::size_t n = s.dim();
    if (n == 0) throw DimensionError("dimension must be positive");
    cheap_verify(s, n);
    if (!s.contains(e1)) throw Error("e1 is not an element of the set");

    NormalizationTrace trace;
    trace.e1 = e1;

    if (n == 1) {
        if (e1 != IntVector{1} && e1 != IntVector{-1})
            fail(NormalizeError::Kind::Unclassifiable, format_vector(e1));
        if (s.size() != 2)
            fail(NormalizeError::Kind::FinalMismatch,
                 "rank-1 family with " + std::to_string(s.size()) + " vectors");
        BasisChange basis(IntMatrix::from_columns({e1}));
        return NormalizationResult{basis, transform(s, basis), std::move(trace)};
    }

    // (b) the n-1 twin systems give e_2..e_n
    trace.twins = twin_systems(s, e1);
    if (trace.twins.size() != n - 1)
        fail(NormalizeError::Kind::TwinCountMismatch,
             "found " + std::to_string(trace.twins.size()) + " twin systems, expected " +
                 std::to_string(n - 1));
    std::vector<IntVector> cols;
    cols.reserve(n);
    cols.push_back(e1);
    for (const auto& tw : trace.twins) cols.push_back(negate(tw.x));
    BasisChange basis = [&] {
        try {
            return BasisChange(IntMatrix::from_columns(cols));
        } catch (const Error& e) {
            fail(NormalizeError::Kind::DependentTwinBasis, e.what());
        }
    }();

    // (c) every element must match one of the four shapes
    trace.before_sweep = classify(s, basis);
    if (!trace.before_sweep.accepted)
        fail(NormalizeError::Kind::Unclassifiable, describe_rejection(trace.before_sweep));

    // (d) last-column sweep: e_j <- e1 - e_j wherever (j, n) is a triple
    for (std::size_t j = 2; j <= n - 1; ++j) {
        if (trace.before_sweep.tag(j, n) != Classification::Tag::Triple) continue;
        IntMatrix m = basis.matrix();
        for (std::size_t row = 0; row < n; ++row)
            m.at(row, j - 1) = checked_sub(m.at(row, 0), m.at(row, j - 1));
        basis = BasisChange(std::move(m));
        trace.sweep_substitutions.push_back(j);
    }

    // (e) re-classify; the whole table must now be difference-shaped
    trace.after_sweep = classify(s, basis);
    if (!trace.after_sweep.accepted)
        fail(NormalizeError::Kind::Unclassifiable, describe_rejection(trace.after_sweep));
    for (std::size_t j = 2; j <= n - 1; ++j)
        if (trace.after_sweep.tag(j, n) == Classification::Tag::Triple)
            fail(NormalizeError::Kind::SweepIncomplete,
                 "entry (" + std::to_string(j) + "," + std::to_string(n) +
                     ") still three-component after sweep");
    for (std::size_t i = 2; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            if (trace.after_sweep.tag(i, j) != Classification::Tag::Diff)
                fail(NormalizeError::Kind::FinalMismatch,
                     "entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") not difference-shaped after sweep");

    // (f) final verification
    VectorSet normalized = transform(s, basis);
    if (!(normalized == canonical_an(n)))
        fail(NormalizeError::Kind::FinalMismatch,
             "normalized set differs from the canonical set");
    if (s.size() != n * (n + 1))
        fail(NormalizeError::Kind::FinalMismatch,
             "|S| = " + std::to_string(s.size()) + " != " + std::to_string(n * (n + 1)));

    return NormalizationResult{std::move(basis), std::move(normalized), std::move(trace)};
}

std::vector<ChoiceOutcome> normalize_all_choices(const VectorSet& s) {
    const std::size_t count = half_system(s).size();
    std::vector<ChoiceOutcome> outcomes;
    outcomes.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        ChoiceOutcome o;
        o.e1_index = k;
        try {
            o.result = normalize(s, k);
        } catch (const Error& e) {
            o.error = e.what();
        }
        outcomes.push_back(std::move(o));
    }
    return outcomes;
}

}  // namespace anlat
