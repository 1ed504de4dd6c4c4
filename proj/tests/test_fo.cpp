#include <doctest.h>

#include <random>

#include "lukra/errors.hpp"
#include "lukra/fo.hpp"
#include "lukra/logic.hpp"

using namespace lukra;
namespace F = lukra::fo;

namespace {

// Ł3Δ, domain {0,1}: unary P, binary R, unary f, constant c.
F::Structure random_structure(std::mt19937_64& rng, std::size_t k = 3, std::size_t d = 2) {
    F::Structure s{delta_chain(k), d, {}, {}};
    auto table = [&](std::size_t arity, std::size_t range) {
        F::Table t{arity, {}};
        std::size_t cells = 1;
        for (std::size_t i = 0; i < arity; ++i) cells *= d;
        for (std::size_t i = 0; i < cells; ++i) t.values.push_back(static_cast<Elem>(rng() % range));
        return t;
    };
    s.predicates["P"] = table(1, k);
    s.predicates["R"] = table(2, k);
    s.functions["f"] = table(1, d);
    s.functions["c"] = table(0, d);
    return s;
}

F::Term random_term(std::mt19937_64& rng, const std::vector<std::string>& vars, int depth) {
    const auto r = rng() % 4;
    if (depth > 0 && r == 0) return {"f", {random_term(rng, vars, depth - 1)}};
    if (r == 1) return {"c", {}};
    return {vars[rng() % vars.size()], {}};
}

F::Formula random_fo(std::mt19937_64& rng, const std::vector<std::string>& vars, int depth) {
    const auto r = depth > 0 ? rng() % 8 : rng() % 3;
    switch (r) {
        case 0: return F::pred("P", {random_term(rng, vars, 1)});
        case 1: return F::pred("R", {random_term(rng, vars, 1), random_term(rng, vars, 1)});
        case 2: return F::eq(random_term(rng, vars, 1), random_term(rng, vars, 1));
        case 3:
        case 4: return F::imp(random_fo(rng, vars, depth - 1), random_fo(rng, vars, depth - 1));
        case 5: return F::delta(random_fo(rng, vars, depth - 1));
        case 6: return F::forall(vars[rng() % vars.size()], random_fo(rng, vars, depth - 1));
        default: return F::exists(vars[rng() % vars.size()], random_fo(rng, vars, depth - 1));
    }
}

F::Assignment random_assignment(std::mt19937_64& rng, const F::Structure& s) {
    F::Assignment v;
    for (const char* x : {"x", "y", "z"}) v[x] = static_cast<Elem>(rng() % s.domain);
    return v;
}

}  // namespace

TEST_CASE("basic valid sentences") {
    std::mt19937_64 rng(1);
    const auto s = random_structure(rng);
    const Elem top = s.algebra.top();
    CHECK(F::eval(F::parse("forall x. P(x) -> P(x)"), s) == top);
    CHECK(F::eval(F::parse("forall x. x = x"), s) == top);
    CHECK(F::eval(F::parse("forall x. x ≈ x"), s) == top);
    CHECK(F::eval(F::parse("∀x. ∃y. y = f(x)"), s) == top);
    CHECK(F::eval(F::parse("T"), s) == top);
    CHECK(F::eval(F::parse("F"), s) == 0);
}

TEST_CASE("equality takes the least value when the sides differ") {
    F::Structure s{delta_chain(4), 3, {}, {}};
    CHECK(F::eval(F::parse("x = y"), s, {{"x", 0}, {"y", 1}}) == 0);
    CHECK(F::eval(F::parse("x = y"), s, {{"x", 2}, {"y", 2}}) == 3);
}

TEST_CASE("quantifiers are min and max") {
    F::Structure s{delta_chain(5), 3, {}, {}};
    s.predicates["P"] = {1, {1, 4, 2}};
    CHECK(F::eval(F::parse("forall x. P(x)"), s) == 1);
    CHECK(F::eval(F::parse("exists x. P(x)"), s) == 4);
    CHECK(F::eval(F::parse("exists x. D P(x)"), s) == 4);
    CHECK(F::eval(F::parse("forall x. D P(x)"), s) == 0);
}

TEST_CASE("first-order axiom instances hold on random structures") {
    std::mt19937_64 rng(2024);
    const std::vector<std::string> vars{"x", "y", "z"};
    for (int trial = 0; trial < 150; ++trial) {
        const auto s = random_structure(rng, 2 + rng() % 3, 1 + rng() % 3);
        const auto phi = random_fo(rng, vars, 2);
        const auto psi = random_fo(rng, vars, 2);
        const auto v = random_assignment(rng, s);
        const Elem top = s.algebra.top();
        // D φ -> φ, and the other propositional axioms lift.
        CHECK(F::eval(F::imp(F::delta(phi), phi), s, v) == top);
        CHECK(F::eval(F::imp(phi, F::imp(psi, phi)), s, v) == top);
        CHECK(F::eval(F::imp(F::bot(), phi), s, v) == top);
        // ∀x φ -> φ(x/t) and φ(x/t) -> ∃x φ for t free for x.
        const auto t = random_term(rng, vars, 1);
        if (F::free_for(phi, "x", t)) {
            CHECK(F::eval(F::imp(F::forall("x", phi), F::substitute(phi, "x", t)), s, v) == top);
            CHECK(F::eval(F::imp(F::substitute(phi, "x", t), F::exists("x", phi)), s, v) == top);
        }
    }
}

TEST_CASE("substitution lemma") {
    std::mt19937_64 rng(77);
    const std::vector<std::string> vars{"x", "y", "z"};
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const auto s = random_structure(rng);
        const auto phi = random_fo(rng, vars, 3);
        const auto t = random_term(rng, vars, 2);
        if (!F::free_for(phi, "x", t)) {
            CHECK_THROWS_AS(F::substitute(phi, "x", t), InvalidArgument);
            continue;
        }
        const auto v = random_assignment(rng, s);
        auto w = v;
        w["x"] = F::eval_term(t, s, v);
        CHECK(F::eval(F::substitute(phi, "x", t), s, v) == F::eval(phi, s, w));
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("free variables and capture") {
    const auto phi = F::parse("forall y. R(x, y)");
    CHECK(F::free_variables(phi) == std::vector<std::string>{"x"});
    CHECK_FALSE(F::free_for(phi, "x", F::Term{"y", {}}));
    CHECK(F::free_for(phi, "x", F::Term{"z", {}}));
    CHECK(F::free_for(phi, "x", F::Term{"f", {F::Term{"z", {}}}}));
    CHECK_THROWS_AS(F::substitute(phi, "x", F::Term{"y", {}}), InvalidArgument);
    // Bound occurrences are untouched.
    const auto psi = F::parse("P(x) -> forall x. P(x)");
    const auto sub = F::substitute(psi, "x", F::Term{"c", {}});
    CHECK(F::equal(sub, F::parse("P(c) -> forall x. P(x)")));
    CHECK(F::term_variables(F::Term{"f", {F::Term{"z", {}}}}) == std::vector<std::string>{"z"});
}

TEST_CASE("print and parse round trip") {
    std::mt19937_64 rng(8);
    const std::vector<std::string> vars{"x", "y", "z"};
    for (int i = 0; i < 300; ++i) {
        const auto phi = random_fo(rng, vars, 3);
        CHECK(F::equal(F::parse(F::print(phi)), phi));
    }
    CHECK(F::equal(F::parse("forall x. P(x) -> Q(x)"), F::forall("x", F::parse("P(x) -> Q(x)"))));
    CHECK_THROWS_AS(F::parse("forall . P(x)"), SyntaxError);
    CHECK_THROWS_AS(F::parse("P(x"), SyntaxError);
}

TEST_CASE("structure validation") {
    F::Structure s{delta_chain(3), 2, {}, {}};
    s.predicates["P"] = {1, {0, 5}};
    CHECK_THROWS_AS(F::validate(s), InvalidArgument);
    s.predicates["P"] = {1, {0}};
    CHECK_THROWS_AS(F::validate(s), InvalidArgument);
    s.predicates["P"] = {1, {0, 2}};
    CHECK_NOTHROW(F::validate(s));
    CHECK_THROWS_AS(F::eval(F::parse("Q(x)"), s, {{"x", 0}}), InvalidArgument);
    CHECK_THROWS_AS(F::eval(F::parse("P(x, x)"), s, {{"x", 0}}), InvalidArgument);
}
