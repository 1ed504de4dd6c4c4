#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "lukra/algebra.hpp"
#include "lukra/formula.hpp"

namespace lukra {

using Rational = boost::rational<long long>;

// Ł_k^Δ with bottom, built once per k.
const FiniteAlgebra& delta_chain(std::size_t k);

struct Counterexample {
    std::size_t k = 0;                // the chain Ł_k^Δ
    std::vector<std::string> vars;    // sorted
    std::vector<Elem> values;         // index i stands for i/(k-1)
    Elem value = 0;                   // value of the formula that failed
};

struct Verdict {
    bool holds = true;
    std::optional<Counterexample> counterexample;
};

// All valuations into Ł_k^Δ for k = 2..n; the reported counterexample has the
// smallest k, then the lexicographically least valuation.
Verdict is_tautology(const Formula& f, std::size_t n);
Verdict consequence(const std::vector<Formula>& gamma, const Formula& f, std::size_t n);
bool equivalent(const Formula& a, const Formula& b, std::size_t n);
// Same sweep, reported as a semi-decision for the standard [0,1] algebra.
std::optional<Counterexample> refute_search(const Formula& f, std::size_t n_max);

// Standard algebra on [0,1] with exact fractions; ⊥ = 0, Δx = 1 iff x = 1.
Rational rational_eval(const Formula& f, const std::map<std::string, Rational>& v);

enum class System { LHn, LHbot };

struct Schema {
    std::string id;    // "AX1" .. "AX13"
    Formula pattern;   // variables are metavariables
};

std::vector<Schema> axioms_LHn(std::size_t n);  // AX1-AX8
std::vector<Schema> axioms_LHbot();             // AX1-AX4, AX9-AX13
std::optional<Schema> axiom_schema(const std::string& id, System s, std::size_t n);

// Derived theorems (premises empty) and derived rules of the n-valued
// calculus.  A biconditional contributes both directions as conclusions.
struct CatalogItem {
    std::string name;   // e.g. "LH13[k=2]"
    std::string base;   // e.g. "LH13"
    std::vector<Formula> premises;
    std::vector<Formula> conclusions;
};
std::vector<std::string> catalogue_names();
bool catalogue_takes_k(const std::string& base);
std::optional<CatalogItem> catalogue_item(const std::string& base, std::size_t n,
                                          std::optional<std::size_t> k);
// Every item, with k = 1..n for parameterized ones.
std::vector<CatalogItem> theorem_catalogue(std::size_t n);

// Witness layout for semantic reports: chain size k, then the valuation.
CheckReport soundness_check(std::size_t n);
CheckReport theorem_suite(std::size_t n);
CheckReport hierarchy_check(std::size_t n);

struct RandomFormulaOptions {
    std::size_t max_depth = 3;
    bool allow_delta = true;
    bool allow_top = true;
    bool allow_bot = false;
};
Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& vars,
                       const RandomFormulaOptions& opt = {});

}  // namespace lukra
