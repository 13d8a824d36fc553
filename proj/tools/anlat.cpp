#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "anlat/generator.hpp"
#include "anlat/hypotheses.hpp"
#include "anlat/lemma_audit.hpp"
#include "anlat/normalizer.hpp"
#include "anlat/vectorset.hpp"

using json = nlohmann::json;
using namespace anlat;

namespace {

// Exit codes: 0 accepted, 1 hypothesis/normalization rejection,
// 2 internal consistency failure, 3 I/O or format error.
constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitInternal = 2;
constexpr int kExitIo = 3;

std::string join_ints(const IntVector& v, char sep = ' ') {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << sep;
        out << v[i];
    }
    return out.str();
}

std::string matrix_rows(const IntMatrix& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (j) out << ' ';
            out << m.at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

json vector_json(const IntVector& v) { return json(v); }

json matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
        rows.push_back(row);
    }
    return rows;
}

json set_json(const VectorSet& s) {
    json vs = json::array();
    for (const auto& v : s.vectors()) vs.push_back(vector_json(v));
    return json{{"n", s.dim()}, {"vectors", vs}};
}

ScrambleRecipe parse_recipe(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw Error("scramble recipe must have the form seed:steps");
    ScrambleRecipe r;
    try {
        r.seed = std::stoull(text.substr(0, colon));
        r.steps = std::stoul(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw Error("bad scramble recipe \"" + text + "\"");
    }
    return r;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot write " + out_path);
    out << text;
}

int cmd_gen(std::size_t n, std::optional<std::size_t> gap_r,
            const std::string& recipe_str, const std::string& out_path) {
    VectorSet s = canonical_an(n);
    if (gap_r) s = transform(s, martinet_gap_basis(n, *gap_r));
    if (!recipe_str.empty()) s = scramble(s, parse_recipe(recipe_str)).set;
    emit(write_set(s), out_path);
    return kExitOk;
}

int cmd_check(const std::string& path, std::uint64_t budget, bool as_json) {
    const VectorSet s = read_set_file(path);
    const HypothesisReport rep = check_all(s, s.dim(), budget);
    const HypothesisReport::Entry* entries[] = {
        &rep.zero_excluded, &rep.symmetric, &rep.full_rank, &rep.cardinality,
        &rep.unimodular_subsets};
    if (as_json) {
        json hyps = json::array();
        for (const auto* e : entries)
            hyps.push_back(json{{"pass", e->pass}, {"witness", e->witness}});
        json out{{"command", "check"},
                 {"all_pass", rep.all_pass()},
                 {"hypotheses", hyps},
                 {"rank", rep.achieved_rank},
                 {"size", rep.achieved_size}};
        if (rep.generation_witness) {
            json subset = json::array();
            for (const auto& v : rep.generation_witness->subset)
                subset.push_back(vector_json(v));
            out["generation_witness"] = {
                {"subset", subset}, {"det", rep.generation_witness->determinant}};
        }
        std::cout << out.dump() << '\n';
    } else {
        for (std::size_t i = 0; i < 5; ++i) {
            std::cout << "hyp" << i + 1 << ' ' << (entries[i]->pass ? "PASS" : "FAIL");
            if (!entries[i]->pass) {
                if (i == 4 && rep.generation_witness) {
                    std::cout << " det=" << rep.generation_witness->determinant
                              << " subset=";
                    for (std::size_t k = 0; k < rep.generation_witness->subset.size(); ++k) {
                        if (k) std::cout << ';';
                        std::cout << '('
                                  << join_ints(rep.generation_witness->subset[k], ',')
                                  << ')';
                    }
                } else {
                    std::cout << ' ' << entries[i]->witness;
                }
            }
            std::cout << '\n';
        }
    }
    return rep.all_pass() ? kExitOk : kExitRejected;
}

void print_classification(std::ostream& out, const Classification& cls) {
    out << "units:";
    for (std::size_t u : cls.units) out << ' ' << u;
    out << "\nfirst-row:";
    for (std::size_t f : cls.first_row) out << ' ' << f;
    out << '\n';
    for (const auto& [key, tag] : cls.table) {
        out << "pair (" << key.first << ',' << key.second << ") ";
        switch (tag) {
            case Classification::Tag::Diff: out << "DIFF"; break;
            case Classification::Tag::Triple: out << "TRIPLE"; break;
            case Classification::Tag::Both: out << "BOTH"; break;
            case Classification::Tag::None: out << "NONE"; break;
        }
        out << '\n';
    }
    for (const auto& v : cls.leftovers) out << "leftover " << join_ints(v) << '\n';
}

json classification_json(const Classification& cls) {
    json pairs = json::array();
    for (const auto& [key, tag] : cls.table) {
        const char* t = tag == Classification::Tag::Diff     ? "DIFF"
                        : tag == Classification::Tag::Triple ? "TRIPLE"
                        : tag == Classification::Tag::Both   ? "BOTH"
                                                             : "NONE";
        pairs.push_back(json{{"i", key.first}, {"j", key.second}, {"tag", t}});
    }
    json leftovers = json::array();
    for (const auto& v : cls.leftovers) leftovers.push_back(vector_json(v));
    return json{{"accepted", cls.accepted},
                {"units", cls.units},
                {"first_row", cls.first_row},
                {"pairs", pairs},
                {"leftovers", leftovers}};
}

int cmd_normalize(const std::string& path, std::optional<std::size_t> e1,
                  bool all_choices, bool trace, bool as_json,
                  const std::string& out_path) {
    const VectorSet s = read_set_file(path);

    if (all_choices) {
        const auto outcomes = normalize_all_choices(s);
        bool all_ok = true;
        std::ostringstream out;
        json jout = json::array();
        for (const auto& o : outcomes) {
            all_ok = all_ok && o.result.has_value();
            if (as_json) {
                json entry{{"e1_index", o.e1_index}, {"ok", o.result.has_value()}};
                if (!o.result) entry["error"] = o.error;
                jout.push_back(entry);
            } else {
                out << "e1=" << o.e1_index << ' '
                    << (o.result ? "ok" : o.error) << '\n';
            }
        }
        emit(as_json ? json{{"command", "normalize"}, {"choices", jout}}.dump() + "\n"
                     : out.str(),
             out_path);
        return all_ok ? kExitOk : kExitRejected;
    }

    const NormalizationResult res = normalize(s, e1);
    std::ostringstream out;
    if (as_json) {
        json jtrace{{"e1", vector_json(res.trace.e1)},
                    {"sweep_substitutions", res.trace.sweep_substitutions}};
        json twins = json::array();
        for (const auto& tw : res.trace.twins)
            twins.push_back(json{{"x", vector_json(tw.x)},
                                 {"partner", vector_json(tw.partner)}});
        jtrace["twins"] = twins;
        jtrace["before_sweep"] = classification_json(res.trace.before_sweep);
        jtrace["after_sweep"] = classification_json(res.trace.after_sweep);
        json jout{{"command", "normalize"},
                  {"basis", matrix_json(res.basis.matrix())},
                  {"normalized", set_json(res.normalized)}};
        if (trace) jout["trace"] = jtrace;
        out << jout.dump() << '\n';
    } else {
        out << matrix_rows(res.basis.matrix());
        out << write_set(res.normalized);
        if (trace) {
            out << "trace e1 " << join_ints(res.trace.e1) << '\n';
            for (const auto& tw : res.trace.twins)
                out << "trace twin {" << join_ints(tw.x, ',') << "} {"
                    << join_ints(tw.partner, ',') << "}\n";
            std::ostringstream cls;
            print_classification(cls, res.trace.before_sweep);
            std::istringstream lines(cls.str());
            std::string line;
            while (std::getline(lines, line)) out << "trace " << line << '\n';
            for (std::size_t j : res.trace.sweep_substitutions)
                out << "trace sweep e" << j << " <- e1 - e" << j << '\n';
        }
    }
    emit(out.str(), out_path);
    return kExitOk;
}

int cmd_audit(const std::string& path, const std::string& lemma,
              std::optional<std::size_t> e1, std::uint64_t budget, bool as_json) {
    const VectorSet s = read_set_file(path);
    const std::size_t n = s.dim();

    if (lemma == "6.1.5") {
        const BasisChange basis = extract_basis(s);
        const MinorBoundReport rep = check_minor_bound(s, basis, budget);
        if (as_json) {
            json out{{"command", "audit"},
                     {"lemma", lemma},
                     {"K", rep.bound},
                     {"max_minor", rep.max_abs_minor},
                     {"pass", rep.ok()}};
            std::cout << out.dump() << '\n';
        } else {
            std::cout << "K=" << rep.bound << " maxminor=" << rep.max_abs_minor << ' '
                      << (rep.ok() ? "PASS" : "FAIL") << '\n';
        }
        return rep.ok() ? kExitOk : kExitRejected;
    }

    if (lemma == "6.1.6") {
        const BasisChange basis = extract_basis(s);
        const auto pairs = find_forbidden_pairs(s, basis);
        const auto triples = find_forbidden_triples(s, basis);
        const bool ok = pairs.empty() && triples.empty();
        if (as_json) {
            json jp = json::array(), jt = json::array();
            for (const auto& p : pairs)
                jp.push_back(json{{"x", vector_json(p.x)},
                                  {"y", vector_json(p.y)},
                                  {"i", p.i},
                                  {"j", p.j},
                                  {"minor", p.minor}});
            for (const auto& t : triples)
                jt.push_back(json{{"i", t.i}, {"j", t.j}, {"k", t.k}});
            std::cout << json{{"command", "audit"},
                              {"lemma", lemma},
                              {"forbidden_pairs", jp},
                              {"forbidden_triples", jt},
                              {"pass", ok}}
                             .dump()
                      << '\n';
        } else {
            if (ok) {
                std::cout << "6.1.6 PASS\n";
            } else {
                for (const auto& p : pairs)
                    std::cout << "6.1.6 FAIL pair (i,j)=(" << p.i << ',' << p.j
                              << ") minor=" << p.minor << '\n';
                for (const auto& t : triples)
                    std::cout << "6.1.6 FAIL triple (i,j,k)=(" << t.i << ',' << t.j
                              << ',' << t.k << ")\n";
            }
        }
        return ok ? kExitOk : kExitRejected;
    }

    if (lemma == "6.1.7") {
        const auto reps = half_system(s);
        std::vector<std::size_t> choices;
        if (e1) {
            if (*e1 >= reps.size()) throw Error("e1 index out of range");
            choices.push_back(*e1);
        } else {
            for (std::size_t k = 0; k < reps.size(); ++k) choices.push_back(k);
        }
        bool all_ok = true;
        json jout = json::array();
        for (std::size_t k : choices) {
            const auto twins = twin_systems(s, reps[k]);
            const bool ok = twins.size() <= n - 1;
            all_ok = all_ok && ok;
            if (as_json) {
                jout.push_back(json{{"e1_index", k},
                                    {"twins", twins.size()},
                                    {"pass", ok}});
            } else {
                if (choices.size() > 1) std::cout << "e1=" << k << ' ';
                std::cout << "twins=" << twins.size() << ' ' << (ok ? "PASS" : "FAIL")
                          << '\n';
            }
        }
        if (as_json)
            std::cout << json{{"command", "audit"},
                              {"lemma", lemma},
                              {"choices", jout},
                              {"pass", all_ok}}
                             .dump()
                      << '\n';
        return all_ok ? kExitOk : kExitRejected;
    }

    if (lemma == "4.2") {
        const auto reps = half_system(s);
        const std::size_t k = e1.value_or(0);
        if (k >= reps.size()) throw Error("e1 index out of range");
        const auto twins = twin_systems(s, reps[k]);
        if (twins.size() != n - 1) {
            std::cout << "4.2 FAIL twins=" << twins.size() << '\n';
            return kExitRejected;
        }
        std::vector<IntVector> cols{reps[k]};
        for (const auto& tw : twins) cols.push_back(negate(tw.x));
        const BasisChange basis(IntMatrix::from_columns(cols));
        const Classification cls = classify(s, basis);
        if (as_json) {
            std::cout << json{{"command", "audit"},
                              {"lemma", lemma},
                              {"classification", classification_json(cls)},
                              {"pass", cls.accepted}}
                             .dump()
                      << '\n';
        } else {
            std::cout << "4.2 " << (cls.accepted ? "PASS" : "FAIL") << '\n';
            print_classification(std::cout, cls);
        }
        return cls.accepted ? kExitOk : kExitRejected;
    }

    throw Error("unknown lemma \"" + lemma + "\"");
}

int cmd_counterexample(std::size_t n, std::size_t r, bool as_json) {
    if (r < 2 || r + 1 > n)
        throw Error("need 2 <= r <= n-1");
    const VectorSet s = canonical_an(n);
    const BasisChange basis = martinet_gap_basis(n, r);
    const VectorSet in_frame = transform(s, basis);
    const VectorSet sprime = build_sprime(s, basis);
    const std::size_t modified = sprime_modified_pairs(s, basis);
    const std::size_t s2_pairs = (r - 1) * (n - r);
    const std::size_t s1_pairs = sprime.size() / 2 - modified;

    IntVector u1(n, 0);
    u1[0] = 1;
    const auto twins = twin_systems(in_frame, u1);

    const bool ok = modified == s2_pairs;
    if (as_json) {
        json jtwins = json::array();
        for (const auto& tw : twins)
            jtwins.push_back(json{{"x", vector_json(tw.x)},
                                  {"partner", vector_json(tw.partner)}});
        std::cout << json{{"command", "counterexample"},
                          {"n", n},
                          {"r", r},
                          {"basis", matrix_json(basis.matrix())},
                          {"s1_pairs", s1_pairs},
                          {"s2_pairs", s2_pairs},
                          {"modified_pairs", modified},
                          {"twins", jtwins},
                          {"pass", ok}}
                         .dump()
                  << '\n';
    } else {
        std::cout << matrix_rows(basis.matrix());
        std::cout << "s1_pairs=" << s1_pairs << '\n';
        std::cout << "s2_pairs=" << s2_pairs << '\n';
        std::cout << "modified_pairs=" << modified << '\n';
        for (const auto& tw : twins)
            std::cout << "twin {" << join_ints(tw.x, ',') << "} {"
                      << join_ints(tw.partner, ',') << "}\n";
        std::cout << (ok ? "PASS" : "FAIL") << '\n';
    }
    return ok ? kExitOk : kExitRejected;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"recognize and normalize minimal-vector families of the A_n root lattice"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    // gen
    auto* gen = app.add_subcommand("gen", "write a vector-set file");
    std::size_t gen_n = 0;
    std::size_t gen_gap = 0;
    std::string gen_scramble, gen_out;
    gen->add_option("n", gen_n, "dimension")->required();
    auto* gap_opt = gen->add_option("--gap", gen_gap, "mixed-basis index r");
    gen->add_option("--scramble", gen_scramble, "recipe seed:steps");
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    // check
    auto* check = app.add_subcommand("check", "verify the five hypotheses");
    std::string check_file;
    std::uint64_t budget = kDefaultSubsetBudget;
    check->add_option("file", check_file, "vector-set file")->required();
    check->add_option("--budget", budget, "subset enumeration cap");

    // normalize
    auto* norm = app.add_subcommand("normalize", "construct the canonicalizing basis");
    std::string norm_file, norm_out;
    std::size_t norm_e1 = 0;
    bool norm_all = false, norm_trace = false;
    norm->add_option("file", norm_file, "vector-set file")->required();
    auto* e1_opt = norm->add_option("--e1", norm_e1, "half-system index of e1");
    norm->add_flag("--all-choices", norm_all, "run every e1 choice");
    norm->add_flag("--trace", norm_trace, "print per-step trace");
    norm->add_option("-o,--output", norm_out, "output file (default stdout)");

    // audit
    auto* audit = app.add_subcommand("audit", "run a single lemma audit");
    std::string audit_file, audit_lemma;
    std::size_t audit_e1 = 0;
    audit->add_option("file", audit_file, "vector-set file")->required();
    audit->add_option("--lemma", audit_lemma, "6.1.5 | 6.1.6 | 6.1.7 | 4.2")->required();
    auto* audit_e1_opt = audit->add_option("--e1", audit_e1, "half-system index of e1");
    audit->add_option("--budget", budget, "minor enumeration cap");

    // counterexample
    auto* cex = app.add_subcommand("counterexample",
                                   "reproduce the mixed-basis quotient count");
    std::size_t cex_n = 0, cex_r = 0;
    cex->add_option("n", cex_n, "dimension")->required();
    cex->add_option("r", cex_r, "mixed-basis index")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_gen(gen_n,
                           gap_opt->count() ? std::optional<std::size_t>(gen_gap)
                                            : std::nullopt,
                           gen_scramble, gen_out);
        if (check->parsed()) return cmd_check(check_file, budget, as_json);
        if (norm->parsed())
            return cmd_normalize(norm_file,
                                 e1_opt->count() ? std::optional<std::size_t>(norm_e1)
                                                 : std::nullopt,
                                 norm_all, norm_trace, as_json, norm_out);
        if (audit->parsed())
            return cmd_audit(audit_file, audit_lemma,
                             audit_e1_opt->count()
                                 ? std::optional<std::size_t>(audit_e1)
                                 : std::nullopt,
                             budget, as_json);
        if (cex->parsed()) return cmd_counterexample(cex_n, cex_r, as_json);
    } catch (const NormalizeError& e) {
        std::cerr << e.what() << '\n';
        return e.kind == NormalizeError::Kind::FinalMismatch ? kExitInternal
                                                             : kExitRejected;
    } catch (const FormatError& e) {
        std::cerr << e.what() << '\n';
        return kExitIo;
    } catch (const BudgetError& e) {
        std::cerr << e.what() << '\n';
        return kExitIo;
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}
