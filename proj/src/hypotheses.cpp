#include "anlat/hypotheses.hpp"

#include <algorithm>
#include <sstream>

namespace anlat {

namespace {

std::string format_vector(const IntVector& v) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ',';
        out << v[i];
    }
    out << ')';
    return out.str();
}

std::string format_subset(const std::vector<IntVector>& vs) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out << ' ';
        out << format_vector(vs[i]);
    }
    out << '}';
    return out.str();
}

// One vector per sign class, nonzero only; sorted (input is sorted).
std::vector<IntVector> sign_representatives(const VectorSet& s) {
    std::vector<IntVector> reps;
    for (const auto& v : s.vectors()) {
        if (is_zero(v)) continue;
        const IntVector neg = negate(v);
        if (s.contains(neg) && v < neg) continue;
        reps.push_back(v);
    }
    return reps;
}

std::uint64_t binomial_capped(std::uint64_t m, std::uint64_t k, std::uint64_t cap) {
    if (k > m) return 0;
    k = std::min(k, m - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (r > cap) return cap + 1;
        r = r * (m - k + i) / i;  // exact: intermediate is i * C(m-k+i, i)
    }
    return std::min(r, cap + 1);
}

}  // namespace

std::optional<GenerationWitness> check_generation(const VectorSet& s,
                                                  std::uint64_t budget) {
    const std::size_t n = s.dim();
    const auto reps = sign_representatives(s);
    if (reps.size() < n) return std::nullopt;

    const std::uint64_t total = binomial_capped(reps.size(), n, budget);
    if (total > budget)
        throw BudgetError("condition-5 enumeration of " + std::to_string(reps.size()) +
                          " choose " + std::to_string(n) + " subsets exceeds budget " +
                          std::to_string(budget));

    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    while (true) {
        std::vector<IntVector> subset;
        subset.reserve(n);
        for (std::size_t i : idx) subset.push_back(reps[i]);
        const Int d = det(IntMatrix::from_columns(subset));
        if (d != 0 && d != 1 && d != -1)
            return GenerationWitness{std::move(subset), d};
        // next combination
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (idx[i] != i + reps.size() - n) break;
            if (i == 0) return std::nullopt;
        }
        if (idx[i] == i + reps.size() - n) return std::nullopt;
        ++idx[i];
        for (std::size_t j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
}

HypothesisReport check_all(const VectorSet& s, std::size_t n, std::uint64_t budget) {
    if (s.dim() != n) throw DimensionError("set dimension does not match n");
    HypothesisReport rep;
    rep.achieved_size = s.size();

    const IntVector zero(n, 0);
    rep.zero_excluded.pass = !s.contains(zero);
    if (!rep.zero_excluded.pass) rep.zero_excluded.witness = "0 in S";

    rep.symmetric.pass = true;
    for (const auto& v : s.vectors()) {
        if (!s.contains(negate(v))) {
            rep.symmetric.pass = false;
            rep.symmetric.witness = format_vector(v) + " in S but its negative is not";
            break;
        }
    }

    rep.achieved_rank = rank(s.vectors());
    rep.full_rank.pass = rep.achieved_rank == n;
    if (!rep.full_rank.pass)
        rep.full_rank.witness = "rank " + std::to_string(rep.achieved_rank) +
                                " < " + std::to_string(n);

    const std::size_t required = n * (n + 1);
    rep.cardinality.pass = s.size() >= required;
    if (!rep.cardinality.pass)
        rep.cardinality.witness = "|S| = " + std::to_string(s.size()) + " < " +
                                  std::to_string(required);

    rep.generation_witness = check_generation(s, budget);
    rep.unimodular_subsets.pass = !rep.generation_witness.has_value();
    if (rep.generation_witness)
        rep.unimodular_subsets.witness =
            "subset " + format_subset(rep.generation_witness->subset) + " has det " +
            std::to_string(rep.generation_witness->determinant);

    return rep;
}

}  // namespace anlat
