#include "anlat/lemma_audit.hpp"

#include <algorithm>
#include <set>

namespace anlat {

namespace {

void require_basis_from(const VectorSet& s, const BasisChange& basis) {
    for (std::size_t j = 0; j < basis.dim(); ++j)
        if (!s.contains(basis.column(j)))
            throw Error("basis column " + std::to_string(j + 1) +
                        " is not an element of the set");
}

// Visits k-combinations of {0..m-1} in lexicographic order until the
// visitor returns false.
template <typename F>
void for_each_combination(std::size_t m, std::size_t k, F&& visit) {
    if (k > m) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!visit(idx)) return;
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + m - k) break;
            if (i == 0) return;
        }
        if (idx[i] == i + m - k) return;
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::uint64_t binomial_capped(std::uint64_t m, std::uint64_t k, std::uint64_t cap) {
    if (k > m) return 0;
    k = std::min(k, m - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (r > cap) return cap + 1;
        r = r * (m - k + i) / i;
    }
    return std::min(r, cap + 1);
}

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

}  // namespace

Int max_basis_determinant(const VectorSet& s, const BasisChange& basis,
                          std::uint64_t budget) {
    const std::size_t n = s.dim();
    if (basis.dim() != n) throw DimensionError("set/basis dimension mismatch");
    require_basis_from(s, basis);
    if (rank(s.vectors()) != n) throw Error("set is rank-deficient");

    const auto reps = sign_representatives(s);
    if (binomial_capped(reps.size(), n, budget) > budget)
        throw BudgetError("n-subset enumeration exceeds budget");

    Int best = 0;
    for_each_combination(reps.size(), n, [&](const std::vector<std::size_t>& idx) {
        std::vector<IntVector> cols;
        cols.reserve(n);
        for (std::size_t i : idx) cols.push_back(express_in_basis(reps[i], basis));
        Int d = det(IntMatrix::from_columns(cols));
        if (d < 0) d = -d;
        best = std::max(best, d);
        return true;
    });
    return best;
}

MinorBoundReport check_minor_bound(const VectorSet& s, const BasisChange& basis,
                                   std::uint64_t budget) {
    const std::size_t n = s.dim();
    MinorBoundReport rep;
    rep.bound = max_basis_determinant(s, basis, budget);

    std::vector<IntVector> cols;
    cols.reserve(s.size());
    for (const auto& v : s.vectors()) cols.push_back(express_in_basis(v, basis));
    const IntMatrix comp = IntMatrix::from_columns(cols);

    std::uint64_t total = 0;
    for (std::size_t r = 1; r <= n; ++r) {
        const std::uint64_t rows = binomial_capped(n, r, budget);
        const std::uint64_t sels = binomial_capped(s.size(), r, budget);
        if (rows > budget || sels > budget || total + rows * sels < total)
            throw BudgetError("minor enumeration exceeds budget");
        total += rows * sels;
        if (total > budget) throw BudgetError("minor enumeration exceeds budget");
    }

    for (std::size_t r = 1; r <= n && !rep.violation; ++r) {
        for_each_combination(n, r, [&](const std::vector<std::size_t>& rsel) {
            bool go = true;
            for_each_combination(s.size(), r, [&](const std::vector<std::size_t>& csel) {
                Int d = minor_det(comp, rsel, csel);
                if (d < 0) d = -d;
                rep.max_abs_minor = std::max(rep.max_abs_minor, d);
                if (d > rep.bound) {
                    rep.violation = MinorViolation{rsel, csel, minor_det(comp, rsel, csel)};
                    go = false;
                }
                return go;
            });
            return go;
        });
    }
    return rep;
}

std::vector<ForbiddenPair> find_forbidden_pairs(const VectorSet& s,
                                                const BasisChange& basis) {
    std::vector<ForbiddenPair> hits;
    const auto reps = sign_representatives(s);
    std::vector<IntVector> coords;
    coords.reserve(reps.size());
    for (const auto& v : reps) coords.push_back(express_in_basis(v, basis));
    const std::size_t n = s.dim();
    for (std::size_t a = 0; a < coords.size(); ++a)
        for (std::size_t b = a + 1; b < coords.size(); ++b)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    const Int m = checked_sub(checked_mul(coords[a][i], coords[b][j]),
                                              checked_mul(coords[b][i], coords[a][j]));
                    if (m == 2 || m == -2)
                        hits.push_back(ForbiddenPair{coords[a], coords[b], i + 1, j + 1, m});
                }
    return hits;
}

std::vector<ForbiddenTriple> find_forbidden_triples(const VectorSet& s,
                                                    const BasisChange& basis) {
    std::vector<ForbiddenTriple> hits;
    const VectorSet t = transform(s, basis);
    const std::size_t n = s.dim();
    auto present = [&](const IntVector& v) {
        return t.contains(v) || t.contains(negate(v));
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            for (std::size_t k = j + 1; k < n; ++k) {
                if (k == i) continue;
                IntVector dij(n, 0), dik(n, 0), sjk(n, 0);
                dij[i] = 1;
                dij[j] = -1;
                dik[i] = 1;
                dik[k] = -1;
                sjk[j] = 1;
                sjk[k] = 1;
                if (present(dij) && present(dik) && present(sjk))
                    hits.push_back(ForbiddenTriple{i + 1, j + 1, k + 1});
            }
        }
    return hits;
}

std::vector<TwinSystem> twin_systems(const VectorSet& s, const IntVector& e1) {
    if (!s.contains(e1)) throw Error("e1 is not an element of the set");
    std::set<IntVector> reps;
    const IntVector neg_e1 = negate(e1);
    for (const auto& x : s.vectors()) {
        if (x == e1 || x == neg_e1) continue;
        if (!s.contains(add(x, e1))) continue;
        // the antipodal class {x, e1+x} ~ {-e1-x, -x}; keep the greater
        // of the two valid representatives
        const IntVector other = sub(neg_e1, x);
        reps.insert(std::max(x, other));
    }
    std::vector<TwinSystem> out;
    out.reserve(reps.size());
    for (const auto& x : reps) out.push_back(TwinSystem{x, add(x, e1)});
    return out;
}

VectorSet build_sprime(const VectorSet& s, const BasisChange& basis) {
    const std::size_t n = s.dim();
    if (n < 2) throw DimensionError("quotient family needs dimension >= 2");
    require_basis_from(s, basis);
    const VectorSet t = transform(s, basis);
    std::vector<IntVector> out;
    for (const auto& v : t.vectors()) {
        if (v[0] < -1 || v[0] > 1) continue;
        IntVector tail(v.begin() + 1, v.end());
        if (!is_zero(tail)) out.push_back(std::move(tail));
    }
    return VectorSet::from_vectors(n - 1, out);
}

std::size_t sprime_modified_pairs(const VectorSet& s, const BasisChange& basis) {
    const VectorSet t = transform(s, basis);
    const VectorSet sp = build_sprime(s, basis);
    std::size_t count = 0;
    for (const auto& x : half_system(sp)) {
        IntVector lifted(s.dim());
        lifted[0] = 0;
        std::copy(x.begin(), x.end(), lifted.begin() + 1);
        if (!t.contains(lifted)) ++count;
    }
    return count;
}

BasisChange apply_pij(const BasisChange& basis, std::size_t i, std::size_t j) {
    const std::size_t n = basis.dim();
    if (i < 2 || j < 2 || i > n || j > n || i == j)
        throw DimensionError("p_{i,j} needs 2 <= i != j <= n");
    IntMatrix m = basis.matrix();
    for (std::size_t row = 0; row < n; ++row)
        m.at(row, j - 1) = checked_sub(m.at(row, i - 1), m.at(row, j - 1));
    return BasisChange(std::move(m));
}

namespace {

// Matches v (or -v) against the four admissible shapes; returns false
// if it is a leftover.
bool classify_vector(const IntVector& v, Classification& cls) {
    std::vector<std::size_t> nz;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) nz.push_back(i);
    for (std::size_t i : nz)
        if (v[i] != 1 && v[i] != -1) return false;

    if (nz.size() == 1) {
        cls.units.push_back(nz[0] + 1);
        return true;
    }
    if (nz.size() == 2) {
        const std::size_t a = nz[0], b = nz[1];
        if (v[a] == v[b]) return false;  // +-(e_a + e_b)
        if (a == 0)
            cls.first_row.push_back(b + 1);
        else
            cls.table[{a + 1, b + 1}] = Classification::Tag::Diff;
        return true;
    }
    if (nz.size() == 3 && nz[0] == 0 && v[nz[1]] == v[nz[2]] && v[0] == -v[nz[1]]) {
        cls.table[{nz[1] + 1, nz[2] + 1}] = Classification::Tag::Triple;
        return true;
    }
    return false;
}

}  // namespace

Classification classify(const VectorSet& s, const BasisChange& basis) {
    const std::size_t n = s.dim();
    const VectorSet t = transform(s, basis);
    Classification cls;
    std::map<std::pair<std::size_t, std::size_t>, Classification::Tag> table;
    for (const auto& v : t.vectors()) {
        Classification probe;
        if (!classify_vector(v, probe)) {
            cls.leftovers.push_back(v);
            continue;
        }
        for (std::size_t u : probe.units) cls.units.push_back(u);
        for (std::size_t f : probe.first_row) cls.first_row.push_back(f);
        for (const auto& [key, tag] : probe.table) {
            auto& slot = table[key];
            if (slot == Classification::Tag::None)
                slot = tag;
            else if (slot != tag)
                slot = Classification::Tag::Both;
        }
    }

    auto dedup = [](std::vector<std::size_t>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedup(cls.units);
    dedup(cls.first_row);
    cls.table = std::move(table);

    bool ok = cls.leftovers.empty();
    ok = ok && cls.units.size() == n;
    for (std::size_t i = 0; ok && i < n; ++i) ok = cls.units[i] == i + 1;
    ok = ok && cls.first_row.size() == (n >= 1 ? n - 1 : 0);
    for (std::size_t i = 0; ok && i + 1 < n; ++i) ok = cls.first_row[i] == i + 2;
    if (ok) {
        for (std::size_t i = 2; ok && i <= n; ++i)
            for (std::size_t j = i + 1; ok && j <= n; ++j) {
                const auto tag = cls.tag(i, j);
                ok = tag == Classification::Tag::Diff ||
                     tag == Classification::Tag::Triple;
            }
    }
    cls.accepted = ok;
    return cls;
}

}  // namespace anlat
