#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lukra/formula.hpp"
#include "lukra/logic.hpp"

namespace lukra {

// One line per step:
//   <idx>. <formula> ; <justification>
// where the justification is one of
//   AX<id>[n=..]  MP i j  HYP i  QGEN i j k  THM <name>[k=..]  RULE <name>[k=..] i [j]
// An optional header "system: LH n=3" or "system: LHbot" fixes the calculus.
// '#' starts a comment.
enum class JustKind { Axiom, MP, Hyp, QGen, Thm, Rule };

struct Justification {
    JustKind kind = JustKind::Axiom;
    std::string name;                // axiom id or catalogue entry
    std::optional<std::size_t> n, k;
    std::vector<std::size_t> refs;   // line indices (HYP: hypothesis number)
};

struct ProofLine {
    std::size_t index = 0;
    Formula formula;
    Justification just;
    std::size_t source_line = 0;  // 1-based line in the input text
};

struct Proof {
    std::optional<System> system;
    std::optional<std::size_t> n;
    std::vector<ProofLine> lines;
};

// Throws SyntaxError (offset into the whole text) on malformed input.
Proof parse_proof(std::string_view text);
std::string print_justification(const Justification& j);
std::string print_proof(const Proof& p);

// The generalization rule takes (γ->β)->(γ->(γ->β)), (γ->(γ->β))->(γ->β)
// and γ->α to γ->Δα.  Literal reuses the first premise shape twice.
enum class QgenReading { Repaired, Literal };

struct LineFailure {
    std::size_t index = 0;
    std::size_t source_line = 0;
    std::string message;
};

struct ProofReport {
    System system = System::LHn;
    std::optional<std::size_t> n;
    std::vector<LineFailure> failures;  // in line order
    std::map<std::size_t, Formula> hypotheses;
    Formula conclusion;

    bool ok() const { return failures.empty(); }
    const LineFailure* first_failure() const { return failures.empty() ? nullptr : &failures.front(); }
};

ProofReport check_proof(const Proof& p, QgenReading reading = QgenReading::Repaired);
ProofReport check_proof_text(std::string_view text, QgenReading reading = QgenReading::Repaired);

// Syntactic instance test; on failure `why` names the first mismatching subterm.
bool match_schema(const Formula& pattern, const Formula& f, std::map<std::string, Formula>& subst,
                  std::string* why = nullptr);

}  // namespace lukra
