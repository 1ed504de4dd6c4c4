#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lukra/algebra.hpp"

namespace lukra {

enum class Kind { Var, Top, Bot, Imp, Delta };

struct Node;
using Formula = std::shared_ptr<const Node>;

struct Node {
    Kind kind;
    std::string name;  // Var only
    Formula lhs;       // Imp: antecedent; Delta: operand
    Formula rhs;       // Imp: consequent
};

Formula var(std::string name);
Formula top();
Formula bot();
Formula imp(Formula a, Formula b);
Formula delta(Formula a);

// Sugar, expanded on construction.
Formula imp_k(Formula a, Formula b, std::size_t k);  // a ->[k] b
Formula join(Formula a, Formula b);                  // (a -> b) -> b
Formula neg(Formula a);                              // a -> F
Formula meet(Formula a, Formula b);                  // ~(~a | ~b)

bool equal(const Formula& a, const Formula& b);
std::size_t depth(const Formula& f);
std::size_t node_count(const Formula& f);
bool contains_bot(const Formula& f);
bool contains_delta(const Formula& f);
// Sorted, without duplicates.
std::vector<std::string> variables(const Formula& f);
std::vector<std::string> variables(const std::vector<Formula>& fs);

Formula substitute(const Formula& f, const std::map<std::string, Formula>& s);

// Grammar:
//   formula := imp
//   imp     := or ( ("->" | "->[k]") imp )?
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "D" unary | "~" unary | atom
//   atom    := ident | "T" | "F" | "(" formula ")"
// Unicode spellings → ↣ Δ ∨ ∧ ¬ ⊤ ⊥ are accepted.
Formula parse(std::string_view text);
std::string print(const Formula& f);

// Postfix program with variables bound to slots, for table sweeps.
class Compiled {
public:
    // Slots follow `order`; every variable of f must appear in it.
    Compiled(const Formula& f, const std::vector<std::string>& order);
    explicit Compiled(const Formula& f);  // slots in sorted variable order

    const std::vector<std::string>& slots() const { return slots_; }
    bool uses_delta() const { return uses_delta_; }
    bool uses_bot() const { return uses_bot_; }

    Elem eval(const FiniteAlgebra& a, const Elem* vals) const;
    Elem eval(const FiniteAlgebra& a, const std::vector<Elem>& vals) const {
        return eval(a, vals.data());
    }

private:
    struct Op {
        Kind kind;
        std::size_t slot;
    };
    std::vector<Op> ops_;
    std::vector<std::string> slots_;
    bool uses_delta_ = false;
    bool uses_bot_ = false;
    std::size_t max_stack_ = 0;
};

using Valuation = std::map<std::string, Elem>;

// Throws InvalidArgument on an unassigned variable and ConfigurationError on
// Δ or ⊥ the algebra does not carry.
Elem eval(const Formula& f, const FiniteAlgebra& a, const Valuation& v);

}  // namespace lukra
