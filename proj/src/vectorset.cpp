#include "anlat/vectorset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace anlat {

VectorSet VectorSet::from_vectors(std::size_t n, const std::vector<IntVector>& vs) {
    VectorSet s(n);
    for (const auto& v : vs)
        if (v.size() != n) throw DimensionError("vector dimension mismatch in set");
    s.vecs_ = vs;
    std::sort(s.vecs_.begin(), s.vecs_.end());
    s.vecs_.erase(std::unique(s.vecs_.begin(), s.vecs_.end()), s.vecs_.end());
    return s;
}

bool VectorSet::contains(const IntVector& v) const {
    return std::binary_search(vecs_.begin(), vecs_.end(), v);
}

bool VectorSet::is_symmetric() const {
    for (const auto& v : vecs_)
        if (!contains(negate(v))) return false;
    return true;
}

VectorSet VectorSet::with(const IntVector& v) const {
    if (v.size() != n_) throw DimensionError("vector dimension mismatch");
    VectorSet s = *this;
    auto it = std::lower_bound(s.vecs_.begin(), s.vecs_.end(), v);
    if (it == s.vecs_.end() || *it != v) s.vecs_.insert(it, v);
    return s;
}

VectorSet VectorSet::without(const IntVector& v) const {
    VectorSet s = *this;
    auto it = std::lower_bound(s.vecs_.begin(), s.vecs_.end(), v);
    if (it != s.vecs_.end() && *it == v) s.vecs_.erase(it);
    return s;
}

std::vector<IntVector> half_system(const VectorSet& s) {
    std::vector<IntVector> reps;
    for (const auto& v : s.vectors()) {
        if (is_zero(v)) throw Error("half-system undefined: set contains 0");
        const IntVector neg = negate(v);
        if (!s.contains(neg)) throw Error("half-system undefined: set is not symmetric");
        if (v > neg) reps.push_back(v);
    }
    return reps;
}

VectorSet transform(const VectorSet& s, const BasisChange& b) {
    if (s.dim() != b.dim()) throw DimensionError("set/basis dimension mismatch");
    std::vector<IntVector> out;
    out.reserve(s.size());
    for (const auto& v : s.vectors()) out.push_back(express_in_basis(v, b));
    return VectorSet::from_vectors(s.dim(), out);
}

namespace {

Int parse_int(const std::string& tok, std::size_t line, std::size_t col) {
    Int value = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw FormatError("expected an integer, got \"" + tok + "\"", line, col);
    return value;
}

}  // namespace

VectorSet read_set(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;

    auto tokens_of = [&](const std::string& l) {
        std::vector<std::pair<std::string, std::size_t>> toks;  // token, 1-based column
        std::size_t i = 0;
        while (i < l.size()) {
            while (i < l.size() && l[i] == ' ') ++i;
            const std::size_t start = i;
            while (i < l.size() && l[i] != ' ') ++i;
            if (i > start) toks.emplace_back(l.substr(start, i - start), start + 1);
        }
        return toks;
    };

    if (!std::getline(in, line)) throw FormatError("empty input", 1, 1);
    ++lineno;
    auto head = tokens_of(line);
    if (head.size() != 2)
        throw FormatError("header must be \"n s\"", lineno, 1);
    const Int n = parse_int(head[0].first, lineno, head[0].second);
    const Int count = parse_int(head[1].first, lineno, head[1].second);
    if (n < 1) throw FormatError("dimension must be positive", lineno, head[0].second);
    if (count < 0) throw FormatError("vector count must be non-negative", lineno, head[1].second);

    std::vector<IntVector> vs;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks.size() != static_cast<std::size_t>(n))
            throw FormatError("expected " + std::to_string(n) + " coordinates, found " +
                                  std::to_string(toks.size()),
                              lineno, 1);
        IntVector v(n);
        for (std::size_t j = 0; j < toks.size(); ++j)
            v[j] = parse_int(toks[j].first, lineno, toks[j].second);
        vs.push_back(std::move(v));
    }
    if (vs.size() != static_cast<std::size_t>(count))
        throw FormatError("declared " + std::to_string(count) + " vectors, found " +
                              std::to_string(vs.size()),
                          lineno + 1, 1);
    return VectorSet::from_vectors(static_cast<std::size_t>(n), vs);
}

std::string write_set(const VectorSet& s) {
    std::ostringstream out;
    out << s.dim() << ' ' << s.size() << '\n';
    for (const auto& v : s.vectors()) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (j) out << ' ';
            out << v[j];
        }
        out << '\n';
    }
    return out.str();
}

VectorSet read_set_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_set(buf.str());
}

void write_set_file(const VectorSet& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << write_set(s);
}

}  // namespace anlat
