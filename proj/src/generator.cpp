#include "anlat/generator.hpp"

#include <random>

namespace anlat {

VectorSet canonical_an(std::size_t n) {
    if (n == 0) throw DimensionError("dimension must be positive");
    std::vector<IntVector> vs;
    vs.reserve(n * (n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        IntVector unit(n, 0);
        unit[i] = 1;
        vs.push_back(unit);
        vs.push_back(negate(unit));
        for (std::size_t j = i + 1; j < n; ++j) {
            IntVector d(n, 0);
            d[i] = 1;
            d[j] = -1;
            vs.push_back(d);
            vs.push_back(negate(d));
        }
    }
    return VectorSet::from_vectors(n, vs);
}

BasisChange random_unimodular(std::size_t n, const ScrambleRecipe& recipe) {
    if (n == 0) throw DimensionError("dimension must be positive");
    std::mt19937_64 rng(recipe.seed);
    IntMatrix m = IntMatrix::identity(n);
    std::uniform_int_distribution<std::size_t> pick_col(0, n - 1);
    std::uniform_int_distribution<int> pick_op(0, 2);
    std::uniform_int_distribution<int> pick_sign(0, 1);
    for (std::size_t step = 0; step < recipe.steps; ++step) {
        const int op = n == 1 ? 2 : pick_op(rng);
        switch (op) {
            case 0: {  // col_b += +-col_a
                std::size_t a = pick_col(rng), b = pick_col(rng);
                while (b == a) b = pick_col(rng);
                const Int sgn = pick_sign(rng) ? 1 : -1;
                for (std::size_t i = 0; i < n; ++i)
                    m.at(i, b) = checked_add(m.at(i, b), checked_mul(sgn, m.at(i, a)));
                break;
            }
            case 1: {  // swap columns
                std::size_t a = pick_col(rng), b = pick_col(rng);
                while (b == a) b = pick_col(rng);
                for (std::size_t i = 0; i < n; ++i) std::swap(m.at(i, a), m.at(i, b));
                break;
            }
            default: {  // negate a column
                const std::size_t a = pick_col(rng);
                for (std::size_t i = 0; i < n; ++i) m.at(i, a) = -m.at(i, a);
                break;
            }
        }
    }
    return BasisChange(std::move(m));
}

ScrambleResult scramble(const VectorSet& s, const ScrambleRecipe& recipe) {
    BasisChange u = random_unimodular(s.dim(), recipe);
    VectorSet t = transform(s, u);
    return ScrambleResult{std::move(t), std::move(u)};
}

BasisChange martinet_gap_basis(std::size_t n, std::size_t r) {
    if (n == 0) throw DimensionError("dimension must be positive");
    if (r < 1 || r > n) throw DimensionError("r must satisfy 1 <= r <= n");
    IntMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (k < r) {
            m.at(k, k) = 1;
        } else {
            m.at(0, k) = 1;
            m.at(k, k) = -1;
        }
    }
    return BasisChange(std::move(m));
}

VectorSet mutate_drop_pair(const VectorSet& s, std::size_t pair_index) {
    const auto reps = half_system(s);
    if (pair_index >= reps.size()) throw DimensionError("pair index out of range");
    const IntVector& x = reps[pair_index];
    return s.without(x).without(negate(x));
}

VectorSet mutate_inject_sum(const VectorSet& s, std::size_t i, std::size_t j) {
    const std::size_t n = s.dim();
    if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw DimensionError("bad unit indices for sum injection");
    IntVector v(n, 0);
    v[i - 1] = 1;
    v[j - 1] = 1;
    return s.with(v).with(negate(v));
}

}  // namespace anlat
