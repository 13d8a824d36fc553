#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "anlat/exactlinalg.hpp"

// Finite antipodal vector families: dedup, half-systems, basis
// transformation, and the bit-exact text format.

namespace anlat {

struct FormatError : Error {
    FormatError(const std::string& msg, std::size_t line, std::size_t column)
        : Error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line),
          column(column) {}
    std::size_t line;
    std::size_t column;
};

class VectorSet {
public:
    explicit VectorSet(std::size_t n) : n_(n) {}
    // Deduplicates; insertion order is irrelevant.
    static VectorSet from_vectors(std::size_t n, const std::vector<IntVector>& vs);

    std::size_t dim() const { return n_; }
    std::size_t size() const { return vecs_.size(); }
    // Sorted lexicographically.
    const std::vector<IntVector>& vectors() const { return vecs_; }

    bool contains(const IntVector& v) const;
    bool is_symmetric() const;  // x in S implies -x in S

    VectorSet with(const IntVector& v) const;
    VectorSet without(const IntVector& v) const;

    bool operator==(const VectorSet& o) const = default;

private:
    std::size_t n_;
    std::vector<IntVector> vecs_;  // sorted, unique
};

// One representative per antipodal pair: the lexicographically greater
// member. Requires a symmetric set without 0.
std::vector<IntVector> half_system(const VectorSet& s);

// Every vector re-expressed in the new basis; cardinality preserved.
VectorSet transform(const VectorSet& s, const BasisChange& b);

// Text format:
//   line 1: "n s"
//   lines 2..s+1: n space-separated integers, one vector per line
// LF endings, no trailing whitespace; writer sorts lexicographically.
VectorSet read_set(const std::string& text);
std::string write_set(const VectorSet& s);
VectorSet read_set_file(const std::string& path);
void write_set_file(const VectorSet& s, const std::string& path);

}  // namespace anlat
