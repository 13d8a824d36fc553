#include "anlat/exactlinalg.hpp"

#include <algorithm>
#include <numeric>

namespace anlat {

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

IntVector negate(const IntVector& v) {
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = checked_sub(0, v[i]);
    return r;
}

IntVector add(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw DimensionError("vector dimension mismatch");
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

IntVector sub(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw DimensionError("vector dimension mismatch");
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
    return r;
}

bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& vs) {
    if (vs.empty()) return IntMatrix();
    const std::size_t n = vs[0].size();
    for (const auto& v : vs)
        if (v.size() != n) throw DimensionError("mixed vector dimensions");
    IntMatrix m(n, vs.size());
    for (std::size_t j = 0; j < vs.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = vs[j][i];
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) return IntMatrix();
    const std::size_t c = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != c) throw DimensionError("ragged rows");
    IntMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    return m;
}

IntVector IntMatrix::column(std::size_t j) const {
    IntVector v(rows);
    for (std::size_t i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw DimensionError("matrix dimension mismatch");
    IntMatrix r(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Int aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                r.at(i, j) = checked_add(r.at(i, j), checked_mul(aik, b.at(k, j)));
        }
    return r;
}

// Bareiss fraction-free elimination; all divisions are exact.
Int det(const IntMatrix& m) {
    if (m.rows != m.cols) throw DimensionError("determinant of non-square matrix");
    const std::size_t n = m.rows;
    if (n == 0) return 1;
    IntMatrix w = m;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && w.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                const Int num = checked_sub(checked_mul(w.at(i, j), w.at(k, k)),
                                            checked_mul(w.at(i, k), w.at(k, j)));
                w.at(i, j) = num / prev;
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return checked_mul(sign, w.at(n - 1, n - 1));
}

std::size_t rank(const std::vector<IntVector>& vs) {
    if (vs.empty()) return 0;
    const std::size_t n = vs[0].size();
    for (const auto& v : vs)
        if (v.size() != n) throw DimensionError("mixed vector dimensions");
    // Fraction-free row echelon on the r x n matrix of rows.
    std::vector<IntVector> w = vs;
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < n && r < w.size(); ++c) {
        std::size_t p = r;
        while (p < w.size() && w[p][c] == 0) ++p;
        if (p == w.size()) continue;
        std::swap(w[r], w[p]);
        for (std::size_t i = r + 1; i < w.size(); ++i) {
            for (std::size_t j = c + 1; j < n; ++j)
                w[i][j] = checked_sub(checked_mul(w[i][j], w[r][c]),
                                      checked_mul(w[i][c], w[r][j])) /
                          prev;
            w[i][c] = 0;
        }
        prev = w[r][c];
        ++r;
    }
    return r;
}

Int minor_det(const IntMatrix& m, const std::vector<std::size_t>& rows,
              const std::vector<std::size_t>& cols) {
    if (rows.size() != cols.size())
        throw DimensionError("minor needs equally many rows and columns");
    auto check = [](const std::vector<std::size_t>& idx, std::size_t bound) {
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] >= bound) throw DimensionError("minor index out of range");
            for (std::size_t j = i + 1; j < idx.size(); ++j)
                if (idx[i] == idx[j]) throw DimensionError("duplicate minor index");
        }
    };
    check(rows, m.rows);
    check(cols, m.cols);
    IntMatrix sub(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            sub.at(i, j) = m.at(rows[i], cols[j]);
    return det(sub);
}

BasisChange::BasisChange(IntMatrix m) : m_(std::move(m)) {
    if (m_.rows != m_.cols || m_.rows == 0)
        throw DimensionError("basis change must be square and nonempty");
    det_ = det(m_);
    if (det_ != 1 && det_ != -1)
        throw Error("basis change is not unimodular (det = " + std::to_string(det_) + ")");
}

BasisChange compose(const BasisChange& a, const BasisChange& b) {
    return BasisChange(multiply(a.matrix(), b.matrix()));
}

IntVector express_in_basis(const IntVector& v, const BasisChange& b) {
    const std::size_t n = b.dim();
    if (v.size() != n) throw DimensionError("vector dimension mismatch");
    // Cramer: det is +-1, so each coordinate is +-det of b with one
    // column replaced by v. Exact integers throughout.
    IntVector coords(n);
    IntMatrix work = b.matrix();
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix t = work;
        for (std::size_t i = 0; i < n; ++i) t.at(i, j) = v[i];
        coords[j] = checked_mul(det(t), b.determinant());
    }
    return coords;
}

IntVector apply_basis(const IntVector& coords, const BasisChange& b) {
    const std::size_t n = b.dim();
    if (coords.size() != n) throw DimensionError("vector dimension mismatch");
    IntVector v(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            v[i] = checked_add(v[i], checked_mul(b.matrix().at(i, j), coords[j]));
    return v;
}

BasisChange inverse_unimodular(const BasisChange& b) {
    const std::size_t n = b.dim();
    IntMatrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        IntVector unit(n, 0);
        unit[j] = 1;
        const IntVector col = express_in_basis(unit, b);
        for (std::size_t i = 0; i < n; ++i) inv.at(i, j) = col[i];
    }
    return BasisChange(std::move(inv));
}

}  // namespace anlat
