#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lukra/algebra.hpp"

namespace lukra::fo {

// A bare name is a variable when the assignment binds it, otherwise a
// constant (0-ary function).
struct Term {
    std::string name;
    std::vector<Term> args;
    bool operator==(const Term& o) const { return name == o.name && args == o.args; }
};

enum class Kind { Pred, Eq, Top, Bot, Imp, Delta, Forall, Exists };

struct Node;
using Formula = std::shared_ptr<const Node>;

struct Node {
    Kind kind;
    std::string name;        // predicate, or bound variable of a quantifier
    std::vector<Term> args;  // Pred: arguments; Eq: the two sides
    Formula lhs, rhs;        // Imp: both; Delta/Forall/Exists: lhs
};

Formula pred(std::string name, std::vector<Term> args);
Formula eq(Term a, Term b);
Formula top();
Formula bot();
Formula imp(Formula a, Formula b);
Formula delta(Formula a);
Formula forall(std::string x, Formula a);
Formula exists(std::string x, Formula a);

bool equal(const Formula& a, const Formula& b);

struct Table {
    std::size_t arity = 0;
    std::vector<Elem> values;  // row-major over domain^arity, first argument slowest
};

// Domain is {0..domain-1}.  Predicates take values in the algebra, functions
// in the domain.
struct Structure {
    FiniteAlgebra algebra;
    std::size_t domain = 1;
    std::map<std::string, Table> predicates;
    std::map<std::string, Table> functions;
};

// Throws InvalidArgument unless the algebra is a chain and every table is
// total and in range.
void validate(const Structure& s);

using Assignment = std::map<std::string, Elem>;

// ∀ is the minimum and ∃ the maximum over the domain; t1 ≈ t2 is top when
// the values agree and the least element otherwise.
Elem eval_term(const Term& t, const Structure& s, const Assignment& v);
Elem eval(const Formula& f, const Structure& s, const Assignment& v = {});

std::vector<std::string> free_variables(const Formula& f);
std::vector<std::string> term_variables(const Term& t);
// Capture-avoiding check for φ(x/t).
bool free_for(const Formula& f, const std::string& x, const Term& t);
// Throws InvalidArgument when t is not free for x.
Formula substitute(const Formula& f, const std::string& x, const Term& t);

// Propositional grammar plus atoms P(t,...), t = t (or ≈), and
// "forall x. φ" / "exists x. φ" (∀ ∃ also accepted) whose scope extends
// as far right as possible.
Formula parse(std::string_view text);
std::string print(const Formula& f);
std::string print(const Term& t);

}  // namespace lukra::fo
