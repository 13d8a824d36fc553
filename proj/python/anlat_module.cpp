#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "anlat/generator.hpp"
#include "anlat/hypotheses.hpp"
#include "anlat/lemma_audit.hpp"
#include "anlat/normalizer.hpp"
#include "anlat/vectorset.hpp"

namespace py = pybind11;
using namespace anlat;

namespace {

using Rows = std::vector<std::vector<Int>>;

VectorSet to_set(std::size_t n, const Rows& rows) {
    std::vector<IntVector> vs(rows.begin(), rows.end());
    return VectorSet::from_vectors(n, vs);
}

Rows from_set(const VectorSet& s) {
    return Rows(s.vectors().begin(), s.vectors().end());
}

Rows from_matrix(const IntMatrix& m) {
    Rows rows(m.rows, std::vector<Int>(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) rows[i][j] = m.at(i, j);
    return rows;
}

BasisChange to_basis(const Rows& rows) {
    return BasisChange(IntMatrix::from_rows(rows));
}

py::dict report_dict(const HypothesisReport& rep) {
    py::dict d;
    auto entry = [](const HypothesisReport::Entry& e) {
        py::dict r;
        r["pass"] = e.pass;
        r["witness"] = e.witness;
        return r;
    };
    d["zero_excluded"] = entry(rep.zero_excluded);
    d["symmetric"] = entry(rep.symmetric);
    d["full_rank"] = entry(rep.full_rank);
    d["cardinality"] = entry(rep.cardinality);
    d["unimodular_subsets"] = entry(rep.unimodular_subsets);
    d["all_pass"] = rep.all_pass();
    d["rank"] = rep.achieved_rank;
    d["size"] = rep.achieved_size;
    return d;
}

}  // namespace

PYBIND11_MODULE(_anlat, m) {
    m.doc() = "exact-arithmetic recognition of A_n minimal-vector families";

    py::register_exception<Error>(m, "AnlatError");

    m.def("canonical_an", [](std::size_t n) { return from_set(canonical_an(n)); },
          py::arg("n"));

    m.def("det", [](const Rows& rows) { return det(IntMatrix::from_rows(rows)); });

    m.def(
        "check_all",
        [](std::size_t n, const Rows& rows, std::uint64_t budget) {
            return report_dict(check_all(to_set(n, rows), n, budget));
        },
        py::arg("n"), py::arg("vectors"), py::arg("budget") = kDefaultSubsetBudget);

    m.def(
        "normalize",
        [](std::size_t n, const Rows& rows, std::optional<std::size_t> e1_index) {
            const auto res = normalize(to_set(n, rows), e1_index);
            py::dict d;
            d["basis"] = from_matrix(res.basis.matrix());
            d["normalized"] = from_set(res.normalized);
            d["sweep_substitutions"] = res.trace.sweep_substitutions;
            return d;
        },
        py::arg("n"), py::arg("vectors"), py::arg("e1_index") = std::nullopt);

    m.def(
        "scramble",
        [](std::size_t n, const Rows& rows, std::uint64_t seed, std::size_t steps) {
            const auto res = scramble(to_set(n, rows), ScrambleRecipe{seed, steps});
            return py::make_tuple(from_set(res.set), from_matrix(res.basis.matrix()));
        },
        py::arg("n"), py::arg("vectors"), py::arg("seed"), py::arg("steps"));

    m.def(
        "transform",
        [](std::size_t n, const Rows& rows, const Rows& basis) {
            return from_set(transform(to_set(n, rows), to_basis(basis)));
        },
        py::arg("n"), py::arg("vectors"), py::arg("basis"));

    m.def(
        "martinet_gap_basis",
        [](std::size_t n, std::size_t r) {
            return from_matrix(martinet_gap_basis(n, r).matrix());
        },
        py::arg("n"), py::arg("r"));

    m.def(
        "twin_count",
        [](std::size_t n, const Rows& rows, const std::vector<Int>& e1) {
            return twin_systems(to_set(n, rows), e1).size();
        },
        py::arg("n"), py::arg("vectors"), py::arg("e1"));

    m.def(
        "sprime_modified_pairs",
        [](std::size_t n, const Rows& rows, const Rows& basis) {
            return sprime_modified_pairs(to_set(n, rows), to_basis(basis));
        },
        py::arg("n"), py::arg("vectors"), py::arg("basis"));

    m.def("read_set", [](const std::string& text) {
        const VectorSet s = read_set(text);
        return py::make_tuple(s.dim(), from_set(s));
    });

    m.def("write_set", [](std::size_t n, const Rows& rows) {
        return write_set(to_set(n, rows));
    });
}
