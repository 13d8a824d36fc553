#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Exact integer vectors and matrices: determinants, ranks, minors,
// unimodular inverses and coordinate changes. All arithmetic is int64
// with overflow detection; overflow throws, never wraps.

namespace anlat {

using Int = std::int64_t;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OverflowError : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

// Checked arithmetic. Every product/sum in an exact routine goes
// through these.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

// Coordinate row of exact integers w.r.t. an ambient basis.
using IntVector = std::vector<Int>;

IntVector negate(const IntVector& v);
IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
bool is_zero(const IntVector& v);

struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> a;  // row-major

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    Int at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static IntMatrix identity(std::size_t n);
    // Vectors become columns, matching the column-vector convention of
    // the determinants we reproduce.
    static IntMatrix from_columns(const std::vector<IntVector>& vs);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    IntVector column(std::size_t j) const;
    bool operator==(const IntMatrix& o) const = default;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

// Exact determinant by fraction-free (Bareiss) elimination.
Int det(const IntMatrix& m);

// Rank over the rationals, computed exactly.
std::size_t rank(const std::vector<IntVector>& vs);

// Determinant of the submatrix selected by `rows` x `cols`.
// Index lists must be equal-length, in-range and duplicate-free.
Int minor_det(const IntMatrix& m, const std::vector<std::size_t>& rows,
              const std::vector<std::size_t>& cols);

// An n x n integer basis change with det +-1; columns are the new
// basis vectors expressed in the old one.
class BasisChange {
public:
    explicit BasisChange(IntMatrix m);

    const IntMatrix& matrix() const { return m_; }
    Int determinant() const { return det_; }
    std::size_t dim() const { return m_.rows; }
    IntVector column(std::size_t j) const { return m_.column(j); }

    bool operator==(const BasisChange& o) const { return m_ == o.m_; }

private:
    IntMatrix m_;
    Int det_;
};

BasisChange inverse_unimodular(const BasisChange& b);
BasisChange compose(const BasisChange& a, const BasisChange& b);

// Coordinates of v w.r.t. the columns of b; applying b to the result
// recovers v exactly.
IntVector express_in_basis(const IntVector& v, const BasisChange& b);

// b applied to coordinates: the inverse direction of express_in_basis.
IntVector apply_basis(const IntVector& coords, const BasisChange& b);

}  // namespace anlat
