// lukra: command-line front end.  JSON reports go to stdout (or --out), a
// one-line summary to stderr.  Exit codes: 0 property holds, 1 property
// fails, 2 usage or input error, 3 internal error.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lukra/algebra.hpp"
#include "lukra/errors.hpp"
#include "lukra/filters.hpp"
#include "lukra/fo.hpp"
#include "lukra/formula.hpp"
#include "lukra/free_algebra.hpp"
#include "lukra/json_io.hpp"
#include "lukra/laws.hpp"
#include "lukra/logic.hpp"
#include "lukra/proof.hpp"

using namespace lukra;

namespace {

struct Output {
    std::string out_path;
    json report;
    std::string summary;
    int code = 0;
};

FiniteAlgebra load_algebra(const std::string& path) { return algebra_from_json(read_json_file(path)); }

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::size_t need_n(std::size_t n) {
    if (n < 2) throw InvalidArgument("--n must be at least 2");
    return n;
}

json verdict_json(const Verdict& v) {
    json j{{"valid", v.holds}};
    j["counterexample"] = v.counterexample ? counterexample_to_json(*v.counterexample) : json(nullptr);
    return j;
}

json filters_json(const std::vector<Filter>& fs) {
    json j = json::array();
    for (const auto& f : fs) j.push_back(f);
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite Lukasiewicz residuation algebras with Baaz Delta"};
    app.require_subcommand(1);
    app.fallthrough();
    Output o;
    app.add_option("--out", o.out_path, "write the JSON report to this file");

    // Shared option storage.
    std::string file, file2, formula_text, mode = "repaired", qgen = "repaired";
    std::vector<std::string> files, premises, assigns;
    std::vector<Elem> filter_elems;
    std::size_t n = 0, m = 0, n_max = 0;
    std::optional<std::size_t> n_opt;
    bool with_delta = false, with_bottom = false, epi = false;

    auto* alg = app.add_subcommand("algebra", "algebra-core operations");
    alg->require_subcommand(1);
    alg->fallthrough();
    auto* a_check = alg->add_subcommand("check", "check the axioms of an algebra");
    a_check->add_option("--file", file, "algebra JSON")->required();
    a_check->add_option("--n", n_opt, "level n (default: least n that holds)");
    auto* a_chain = alg->add_subcommand("chain", "emit the chain L_n");
    a_chain->add_option("--n", n, "number of elements")->required();
    a_chain->add_flag("--delta", with_delta, "include Delta");
    a_chain->add_flag("--bottom", with_bottom, "include the bottom constant");
    auto* a_delta = alg->add_subcommand("delta", "find the admissible Delta");
    a_delta->add_option("--file", file, "algebra JSON")->required();
    auto* a_product = alg->add_subcommand("product", "direct product");
    a_product->add_option("--file", files, "algebra JSON files")->required();
    auto* a_homs = alg->add_subcommand("homs", "enumerate homomorphisms");
    a_homs->add_option("--from", file, "source algebra JSON")->required();
    a_homs->add_option("--to", file2, "target algebra JSON")->required();
    a_homs->add_flag("--epi", epi, "surjective maps only");

    auto* fil = app.add_subcommand("filters", "filter and congruence operations");
    fil->require_subcommand(1);
    fil->fallthrough();
    auto* f_list = fil->add_subcommand("list", "all implicative filters");
    auto* f_max = fil->add_subcommand("maximal", "maximal filters");
    auto* f_quot = fil->add_subcommand("quotient", "quotient by a filter");
    f_quot->add_option("--filter", filter_elems, "comma-separated elements")->delimiter(',')->required();
    auto* f_sub = fil->add_subcommand("subdirect", "subdirect embedding into simple factors");
    auto* f_cls = fil->add_subcommand("classify", "recognize a simple algebra");
    for (auto* c : {f_list, f_max, f_quot, f_sub, f_cls}) c->add_option("--file", file, "algebra JSON")->required();

    auto* fr = app.add_subcommand("free", "free algebras");
    fr->require_subcommand(1);
    fr->fallthrough();
    auto* fr_build = fr->add_subcommand("build", "construct by term closure");
    auto* fr_size = fr->add_subcommand("size", "cardinality formula");
    fr_size->add_option("--mode", mode, "repaired or literal");
    auto* fr_verify = fr->add_subcommand("verify", "formula against construction");
    for (auto* c : {fr_build, fr_size, fr_verify}) {
        c->add_option("--n", n, "level n")->required();
        c->add_option("--m", m, "number of generators")->required();
    }

    auto* lg = app.add_subcommand("logic", "propositional and first-order logic");
    lg->require_subcommand(1);
    lg->fallthrough();
    auto* l_taut = lg->add_subcommand("taut", "tautology check");
    auto* l_conseq = lg->add_subcommand("conseq", "matrix consequence");
    l_conseq->add_option("--premise", premises, "premise formula (repeatable)");
    for (auto* c : {l_taut, l_conseq}) {
        c->add_option("--n", n, "level n")->required();
        c->add_option("--formula", formula_text, "formula")->required();
    }
    auto* l_proof = lg->add_subcommand("prove-check", "check a proof file");
    l_proof->add_option("--file", file, "proof file")->required();
    l_proof->add_option("--qgen", qgen, "QGEN premise reading: repaired or literal");
    auto* l_refute = lg->add_subcommand("refute", "search finite chains for a refutation");
    l_refute->add_option("--n-max", n_max, "largest chain")->required();
    l_refute->add_option("--formula", formula_text, "formula")->required();
    auto* l_fo = lg->add_subcommand("fo-eval", "evaluate a first-order formula");
    l_fo->add_option("--structure", file, "structure JSON")->required();
    l_fo->add_option("--formula", formula_text, "formula")->required();
    l_fo->add_option("--assign", assigns, "x=d (repeatable)");
    auto* l_suite = lg->add_subcommand("theorem-suite", "semantic check of the derived theorems and rules");
    auto* l_hier = lg->add_subcommand("hierarchy", "level n+1 against level n");
    for (auto* c : {l_suite, l_hier}) c->add_option("--n", n, "level n")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (a_check->parsed()) {
            const auto a = load_algebra(file);
            json reports;
            CheckReport all = check_LR(a);
            reports["LR"] = report_to_json(all);
            std::optional<std::size_t> level = n_opt;
            if (!level && all.passed()) level = min_n(a);
            if (level) {
                auto r = check_LRn(a, need_n(*level));
                reports["LRn"] = report_to_json(r);
                all.merge(r);
                if (a.has_delta()) {
                    auto d = check_delta(a, *level);
                    reports["delta"] = report_to_json(d);
                    all.merge(d);
                }
            }
            if (a.has_delta()) {
                auto q = check_LRdelta_quasi(a);
                reports["quasi"] = report_to_json(q);
                all.merge(q);
            }
            o.report = {{"label", a.label()}, {"size", a.size()}, {"n", level ? json(*level) : json(nullptr)},
                        {"passed", all.passed()}, {"reports", reports}};
            o.summary = all.passed() ? "all checks pass" : all.summary();
            o.code = all.passed() ? 0 : 1;
        } else if (a_chain->parsed()) {
            if (n < 1) throw InvalidArgument("--n must be at least 1");
            o.report = algebra_to_json(make_chain(n, with_delta, with_bottom));
            o.summary = "chain with " + std::to_string(n) + " elements";
        } else if (a_delta->parsed()) {
            const auto a = load_algebra(file);
            const auto d = delta_admissible(a);
            o.report = {{"admissible", d.admissible()}};
            if (d.admissible()) {
                o.report["delta"] = *d.delta;
                o.report["algebra"] = algebra_to_json(a.with_delta(*d.delta));
                o.summary = "Delta exists";
            } else {
                o.report["witness"] = *d.witness;
                o.summary = "T_x has no greatest element for x = " + std::to_string(*d.witness);
                o.code = 1;
            }
        } else if (a_product->parsed()) {
            std::vector<FiniteAlgebra> fs;
            for (const auto& f : files) fs.push_back(load_algebra(f));
            const auto p = product(fs);
            o.report = algebra_to_json(p);
            o.summary = "product with " + std::to_string(p.size()) + " elements";
        } else if (a_homs->parsed()) {
            const auto a = load_algebra(file), b = load_algebra(file2);
            const auto maps = epi ? epimorphisms(a, b) : homomorphisms(a, b);
            o.report = {{"count", maps.size()}, {"maps", maps}};
            o.summary = std::to_string(maps.size()) + (epi ? " epimorphisms" : " homomorphisms");
        } else if (f_list->parsed() || f_max->parsed()) {
            const auto a = load_algebra(file);
            const auto fs = f_list->parsed() ? all_filters(a) : maximal_filters(a);
            o.report = {{"count", fs.size()}, {"filters", filters_json(fs)}};
            o.summary = std::to_string(fs.size()) + " filters";
        } else if (f_quot->parsed()) {
            const auto a = load_algebra(file);
            const Filter f(filter_elems.begin(), filter_elems.end());
            const auto q = quotient(a, f);
            o.report = {{"algebra", algebra_to_json(q.algebra)}, {"projection", q.projection}};
            o.summary = "quotient with " + std::to_string(q.algebra.size()) + " elements";
        } else if (f_sub->parsed()) {
            const auto a = load_algebra(file);
            const auto s = subdirect_embedding(a);
            json labels = json::array();
            for (const auto& f : s.factors) labels.push_back(f.label());
            o.report = {{"maximal", filters_json(s.maximal)},
                        {"factors", labels},
                        {"embedding", s.embedding},
                        {"injective", s.injective},
                        {"coordinates_surjective", s.coordinates_surjective}};
            const bool ok = s.injective && s.coordinates_surjective;
            o.summary = ok ? "subdirect embedding into " + std::to_string(s.factors.size()) + " factors"
                           : "not a subdirect embedding";
            o.code = ok ? 0 : 1;
        } else if (f_cls->parsed()) {
            const auto a = load_algebra(file);
            const auto c = classify_simple(a);
            o.report = {{"simple", c.has_value()}};
            if (c) {
                o.report["k"] = c->k;
                o.report["iso"] = c->iso;
                o.summary = "simple, isomorphic to L" + std::to_string(c->k);
            } else {
                o.summary = "not simple";
                o.code = 1;
            }
        } else if (fr_build->parsed()) {
            const auto f = build_free(need_n(n), m);
            o.report = algebra_to_json(f.algebra);
            o.report["generators"] = f.generators;
            o.summary = "free algebra with " + std::to_string(f.algebra.size()) + " elements";
        } else if (fr_size->parsed()) {
            const auto s = size_formula(need_n(n), m, parse_mode(mode));
            o.report = size_to_json(s);
            o.summary = "predicted size " + s.total.str();
        } else if (fr_verify->parsed()) {
            const auto s = size_formula(need_n(n), m);
            const auto f = build_free(n, m);
            const bool match = s.total == f.algebra.size();
            const auto st = check_free_structure(f);
            o.report = {{"formula", bigint_to_json(s.total)},
                        {"constructed", f.algebra.size()},
                        {"match", match},
                        {"structure", report_to_json(st)}};
            o.summary = "formula=" + s.total.str() + " constructed=" + std::to_string(f.algebra.size());
            o.code = match && st.passed() ? 0 : 1;
        } else if (l_taut->parsed() || l_conseq->parsed()) {
            std::vector<Formula> gamma;
            for (const auto& p : premises) gamma.push_back(parse(p));
            const auto v = consequence(gamma, parse(formula_text), need_n(n));
            o.report = verdict_json(v);
            o.summary = v.holds ? "valid" : "not valid";
            o.code = v.holds ? 0 : 1;
        } else if (l_proof->parsed()) {
            if (qgen != "repaired" && qgen != "literal") throw InvalidArgument("--qgen must be repaired or literal");
            const auto r = check_proof_text(read_text(file),
                                            qgen == "literal" ? QgenReading::Literal : QgenReading::Repaired);
            json fails = json::array();
            for (const auto& f : r.failures)
                fails.push_back({{"index", f.index}, {"line", f.source_line}, {"message", f.message}});
            o.report = {{"ok", r.ok()},
                        {"system", r.system == System::LHn ? "LH" : "LHbot"},
                        {"n", r.n ? json(*r.n) : json(nullptr)},
                        {"conclusion", r.conclusion ? json(print(r.conclusion)) : json(nullptr)},
                        {"failures", fails}};
            o.summary = r.ok() ? "proof checks" : "fails at line " + std::to_string(r.failures.front().index) +
                                                      ": " + r.failures.front().message;
            o.code = r.ok() ? 0 : 1;
        } else if (l_refute->parsed()) {
            const auto c = refute_search(parse(formula_text), need_n(n_max));
            o.report = {{"refuted", c.has_value()},
                        {"counterexample", c ? counterexample_to_json(*c) : json(nullptr)}};
            o.summary = c ? "refuted in L" + std::to_string(c->k) : "no refutation up to L" + std::to_string(n_max);
            o.code = c ? 1 : 0;
        } else if (l_fo->parsed()) {
            const auto s = structure_from_json(read_json_file(file));
            fo::Assignment v;
            for (const auto& a : assigns) {
                const auto eq = a.find('=');
                if (eq == std::string::npos) throw InvalidArgument("--assign expects x=d");
                v[a.substr(0, eq)] = static_cast<Elem>(std::stoul(a.substr(eq + 1)));
            }
            const Elem val = fo::eval(fo::parse(formula_text), s, v);
            o.report = {{"value", val}, {"top", s.algebra.top()}, {"is_top", val == s.algebra.top()}};
            o.summary = "value " + std::to_string(val);
        } else if (l_suite->parsed() || l_hier->parsed()) {
            const auto r = l_suite->parsed() ? theorem_suite(need_n(n)) : hierarchy_check(need_n(n));
            o.report = report_to_json(r);
            o.summary = r.passed() ? "all pass" : r.summary();
            o.code = r.passed() ? 0 : 1;
        }
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }

    const std::string text = o.report.dump(2) + "\n";
    if (o.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(o.out_path);
        if (!out) {
            std::cerr << "error: cannot write " << o.out_path << "\n";
            return 2;
        }
        out << text;
    }
    std::cerr << o.summary << "\n";
    return o.code;
}
