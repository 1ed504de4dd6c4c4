#include <doctest.h>

#include <cstdlib>

#include "lukra/free_algebra.hpp"
#include "lukra/json_io.hpp"
#include "lukra/laws.hpp"
#include "lukra/logic.hpp"
#include "lukra/proof.hpp"
#include "support.hpp"

using namespace lukra;

namespace {

// LUKRA_SEED overrides the fixed default.
std::uint64_t seed(std::uint64_t fallback) {
    if (const char* s = std::getenv("LUKRA_SEED")) return std::strtoull(s, nullptr, 10);
    return fallback;
}

const std::vector<std::string> kVars{"p", "q", "r"};

RandomFormulaOptions shallow() {
    RandomFormulaOptions o;
    o.max_depth = 2;
    return o;
}

}  // namespace

TEST_CASE("soundness on random axiom instances") {
    std::mt19937_64 rng(seed(11));
    std::size_t instances = 0;
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto axioms = axioms_LHn(n);
        for (int i = 0; i < 2500; ++i) {
            const auto& ax = axioms[rng() % axioms.size()];
            std::map<std::string, Formula> s;
            for (const auto& v : variables(ax.pattern)) s[v] = random_formula(rng, kVars, shallow());
            const auto inst = substitute(ax.pattern, s);
            const auto verdict = is_tautology(inst, n);
            if (!verdict.holds) FAIL_CHECK(ax.id << " at n=" << n << ": " << print(inst));
            ++instances;
        }
    }
    CHECK(instances == 10000);
}

TEST_CASE("monotone hierarchy") {
    std::mt19937_64 rng(seed(12));
    for (int i = 0; i < 1500; ++i) {
        const auto f = random_formula(rng, kVars, shallow());
        for (std::size_t n = 2; n <= 5; ++n)
            if (is_tautology(f, n + 1).holds) CHECK(is_tautology(f, n).holds);
    }
}

TEST_CASE("chain evaluation agrees with the rational semantics") {
    std::mt19937_64 rng(seed(13));
    RandomFormulaOptions o;
    o.max_depth = 4;
    o.allow_bot = true;
    for (int i = 0; i < 300; ++i) {
        const auto f = random_formula(rng, kVars, o);
        const std::size_t k = 2 + rng() % 6;
        Valuation v;
        std::map<std::string, Rational> rv;
        for (const auto& x : kVars) {
            v[x] = static_cast<Elem>(rng() % k);
            rv[x] = Rational(v[x], static_cast<long long>(k - 1));
        }
        CHECK(Rational(eval(f, delta_chain(k), v), static_cast<long long>(k - 1)) == rational_eval(f, rv));
    }
}

TEST_CASE("formula print/parse round trip") {
    std::mt19937_64 rng(seed(14));
    RandomFormulaOptions o;
    o.max_depth = 5;
    o.allow_bot = true;
    for (int i = 0; i < 500; ++i) {
        const auto f = random_formula(rng, kVars, o);
        CHECK(equal(parse(print(f)), f));
    }
}

TEST_CASE("algebra JSON round trip keeps the checks") {
    std::vector<FiniteAlgebra> algebras;
    for (std::size_t n = 2; n <= 5; ++n) algebras.push_back(make_chain(n));
    algebras.push_back(testsupport::five_element());
    for (const auto& s : testsupport::random_subalgebras(seed(15), 5)) algebras.push_back(s);
    for (const auto& a : algebras) {
        const auto text = algebra_to_json(a).dump();
        const auto b = algebra_from_json(json::parse(text));
        CHECK(algebra_to_json(b) == algebra_to_json(a));
        CHECK(check_LR(b).passed() == check_LR(a).passed());
        if (a.has_delta()) CHECK(check_delta(b, 4).passed() == check_delta(a, 4).passed());
    }
}

TEST_CASE("checked proofs conclude consequences of their hypotheses") {
    for (const auto& name : testsupport::proof_fixtures()) {
        const auto rep = check_proof_text(testsupport::fixture(name + ".proof"));
        REQUIRE(rep.ok());
        std::vector<Formula> gamma;
        for (const auto& [i, h] : rep.hypotheses) gamma.push_back(h);
        // Every line, not just the last.
        for (const auto& l : parse_proof(testsupport::fixture(name + ".proof")).lines)
            CHECK(consequence(gamma, l.formula, 3).holds);
    }
}

TEST_CASE("epimorphism counts stay below v") {
    const auto f = build_free(3, 1);
    for (std::size_t k = 2; k <= 3; ++k)
        CHECK(BigInt(epi_count_oracle(f.algebra, delta_chain(k))) <= v_formula(1, k));
    const auto g = build_free(2, 2);
    CHECK(BigInt(epi_count_oracle(g.algebra, delta_chain(2))) <= v_formula(2, 2));
}
