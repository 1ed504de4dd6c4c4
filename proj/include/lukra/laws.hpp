#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lukra/algebra.hpp"
#include "lukra/formula.hpp"

namespace lukra {

// A named identity lhs ≈ rhs, optionally guarded by hypotheses (a
// quasi-identity).  Variables range over the carrier in `vars` order, which
// is also the order of reported witnesses.  Laws that are not first-order
// identities carry a custom checker instead.
struct Law {
    std::string name;
    std::vector<std::string> vars;
    std::vector<std::pair<Formula, Formula>> hyps;
    Formula lhs, rhs;
    std::function<CheckReport(const FiniteAlgebra&)> custom;
};

// lhs/rhs/hyps given in the formula grammar; "a <= b" is written as the
// hypothesis pair ("a -> b", "T").
Law identity_law(std::string name, const std::string& lhs, const std::string& rhs);
Law quasi_law(std::string name, std::vector<std::pair<std::string, std::string>> hyps,
              const std::string& lhs, const std::string& rhs);

// Least witness by default; every counterexample when `all` is set.
CheckReport check_law(const FiniteAlgebra& a, const Law& law, bool all = false);
CheckReport check_laws(const FiniteAlgebra& a, const std::vector<Law>& laws);

std::vector<Law> lr_axioms();                   // Ł1-Ł5
Law ln_axiom(std::size_t n);                    // Ł6
std::vector<Law> delta_axioms(std::size_t n);   // ΔŁ1-ΔŁ2
std::vector<Law> quasi_axioms();                // ΔŁR1-ΔŁR4
std::vector<Law> derived_laws(std::size_t n);   // Ł7-Ł23 with k = 0..n where parameterized
std::vector<Law> delta_laws(std::size_t n);     // ΔŁ3-ΔŁ15
std::vector<Law> quasi_derived_laws();          // ΔŁR5-ΔŁR12

CheckReport check_LR(const FiniteAlgebra& a);
CheckReport check_LRn(const FiniteAlgebra& a, std::size_t n);
CheckReport check_delta(const FiniteAlgebra& a, std::size_t n);
CheckReport check_LRdelta_quasi(const FiniteAlgebra& a);
CheckReport check_identity(const FiniteAlgebra& a, const Formula& lhs, const Formula& rhs);
// Derived laws, plus the Δ catalogues when the algebra carries Δ.
CheckReport check_property_suite(const FiniteAlgebra& a, std::size_t n);

// x ->[n-1] y = x ->[n+j] y for j = 0..extra.
CheckReport check_stabilization(const FiniteAlgebra& a, std::size_t n, std::size_t extra = 3);

}  // namespace lukra
