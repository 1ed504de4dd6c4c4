#include <doctest.h>

#include <random>

#include "lukra/errors.hpp"
#include "lukra/formula.hpp"
#include "lukra/logic.hpp"

using namespace lukra;

TEST_CASE("precedence and associativity") {
    CHECK(equal(parse("p -> D q -> p"), imp(var("p"), imp(delta(var("q")), var("p")))));
    CHECK(equal(parse("p ->[2] q"), imp(var("p"), imp(var("p"), var("q")))));
    CHECK(equal(parse("p ->[0] q"), var("q")));
    CHECK(equal(parse("p | q"), imp(imp(var("p"), var("q")), var("q"))));
    CHECK(equal(parse("~p"), imp(var("p"), bot())));
    CHECK(equal(parse("p & q"), neg(join(neg(var("p")), neg(var("q"))))));
    CHECK(equal(parse("p | q | r"), join(join(var("p"), var("q")), var("r"))));
    CHECK(equal(parse("D p | q"), join(delta(var("p")), var("q"))));
    CHECK(equal(parse("(p -> q) -> r"), imp(imp(var("p"), var("q")), var("r"))));
    CHECK(equal(parse("T -> F"), imp(top(), bot())));
}

TEST_CASE("unicode spellings") {
    CHECK(equal(parse("p → Δq ↣ p"), parse("p -> D q -> p")));
    CHECK(equal(parse("p ∨ ¬q ∧ ⊤"), parse("p | ~q & T")));
    CHECK(equal(parse("⊥"), bot()));
}

TEST_CASE("syntax errors carry positions") {
    auto pos = [](const char* s) -> std::size_t {
        try {
            parse(s);
        } catch (const SyntaxError& e) {
            return e.position();
        }
        return std::size_t(-1);
    };
    CHECK(pos("p -> ") == 5);
    CHECK(pos("(p -> q") == 7);
    CHECK(pos("p q") == 2);
    CHECK(pos("p ->[x] q") == 2);
    CHECK(pos("p $ q") == 2);
    CHECK(pos("") == 0);
}

TEST_CASE("print then parse is the identity") {
    std::mt19937_64 rng(1);
    RandomFormulaOptions opt;
    opt.max_depth = 5;
    opt.allow_bot = true;
    for (int i = 0; i < 500; ++i) {
        const auto f = random_formula(rng, {"p", "q", "r"}, opt);
        CHECK(equal(parse(print(f)), f));
    }
    CHECK(print(parse("D(p -> q) -> D p")) == "D(p -> q) -> D p");
}

TEST_CASE("structural helpers") {
    const auto f = parse("D(b -> a) -> (c -> F)");
    CHECK(variables(f) == std::vector<std::string>{"a", "b", "c"});
    CHECK(contains_bot(f));
    CHECK(contains_delta(f));
    CHECK(depth(f) == 3);
    CHECK(node_count(f) == 8);
    const auto g = substitute(f, {{"a", parse("x -> y")}});
    CHECK(equal(g, parse("D(b -> (x -> y)) -> (c -> F)")));
}

TEST_CASE("evaluation") {
    const auto l3 = make_chain(3);
    CHECK(eval(parse("D p -> p"), l3, {{"p", 1}}) == 2);
    CHECK(eval(parse("p -> q"), l3, {{"p", 2}, {"q", 1}}) == 1);
    CHECK_THROWS_AS(eval(parse("p -> q"), l3, {{"p", 2}}), InvalidArgument);
    CHECK_THROWS_AS(eval(parse("F"), make_chain(3, true, false), {}), ConfigurationError);
    CHECK_THROWS_AS(eval(parse("D p"), make_chain(3, false, true), {{"p", 0}}), ConfigurationError);
    const Compiled c(parse("p ->[2] q"), {"q", "p"});
    CHECK(c.eval(l3, std::vector<Elem>{0, 1}) == 2);
}

TEST_CASE("exact rational evaluation") {
    using R = Rational;
    CHECK(rational_eval(parse("p -> q"), {{"p", R(2, 3)}, {"q", R(1, 3)}}) == R(2, 3));
    CHECK(rational_eval(parse("D p"), {{"p", R(1)}}) == R(1));
    CHECK(rational_eval(parse("D p"), {{"p", R(99, 100)}}) == R(0));
    CHECK(rational_eval(parse("p | q"), {{"p", R(1, 5)}, {"q", R(3, 7)}}) == R(3, 7));
    CHECK_THROWS_AS(rational_eval(parse("p"), {{"p", R(3, 2)}}), InvalidArgument);
    CHECK_THROWS_AS(rational_eval(parse("p"), {}), InvalidArgument);
}

TEST_CASE("rational evaluation agrees with the finite chains") {
    std::mt19937_64 rng(2);
    RandomFormulaOptions opt;
    opt.max_depth = 4;
    opt.allow_bot = true;
    for (int i = 0; i < 300; ++i) {
        const auto f = random_formula(rng, {"p", "q"}, opt);
        const std::size_t k = 2 + rng() % 5;
        const auto c = make_chain(k);
        const Elem p = static_cast<Elem>(rng() % k), q = static_cast<Elem>(rng() % k);
        const long long d = static_cast<long long>(k - 1);
        const Rational r = rational_eval(f, {{"p", Rational(p, d)}, {"q", Rational(q, d)}});
        CHECK(r == Rational(eval(f, c, {{"p", p}, {"q", q}}), d));
    }
}
