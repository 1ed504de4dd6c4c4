#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lukra/algebra.hpp"

namespace lukra {

using BigInt = boost::multiprecision::cpp_int;

// Free ŁR_n^Δ algebra on m generators, realized inside
// ∏_{k=2..n} (Ł_k^Δ)^(k^m): one coordinate per valuation of the generators
// into Ł_k^Δ, k ascending, valuations in lexicographic order.
struct FreeAlgebra {
    std::size_t n = 0, m = 0;
    FiniteAlgebra algebra = FiniteAlgebra(1, std::vector<Elem>{0}, 0);
    std::vector<Elem> generators;
    std::vector<std::uint8_t> coord_chain;                 // k of each coordinate
    std::vector<std::vector<std::uint8_t>> coord_valuation;  // generator values per coordinate
    std::vector<std::vector<std::uint8_t>> tuples;         // element -> coordinate values
};

// Free algebras hold an N x N table, so the default guard is far below what
// the cardinality formula can reach.
inline constexpr std::size_t kFreeGuard = 5000;

FreeAlgebra build_free(std::size_t n, std::size_t m, std::optional<std::size_t> guard = std::nullopt);

std::vector<Elem> minimal_elements(const FreeAlgebra& f);
// Antichains G and ΔG, μ = ΔG, carrier = ⋃[Δg, 1], generators generate.
CheckReport check_free_structure(const FreeAlgebra& f);

enum class RecurrenceMode { Repaired, Literal };
RecurrenceMode parse_mode(const std::string& s);
std::string mode_name(RecurrenceMode m);

struct SizeBreakdown {
    std::size_t n = 0, m = 0;
    RecurrenceMode mode = RecurrenceMode::Repaired;
    std::vector<std::vector<BigInt>> beta;  // beta[k-1][i-2] = β_i(k)
    std::vector<BigInt> nk;                 // nk[k-1] = |N_k|
    std::vector<BigInt> terms;              // (-1)^(k+1) C(m,k) |N_k|
    BigInt total;
};

// Throws FormulaReadingError if some β_i(k) comes out negative or the
// total is not a cardinality.
SizeBreakdown size_formula(std::size_t n, std::size_t m, RecurrenceMode mode = RecurrenceMode::Repaired);

// v_m(k) = k^m - Σ v_m(j) over 2 <= j < k with (j-1) | (k-1).
BigInt v_formula(std::size_t m, std::size_t k);
std::size_t epi_count_oracle(const FiniteAlgebra& a, const FiniteAlgebra& b);

// ↑Δ(g_1 ∨ ... ∨ g_k), sorted.
std::vector<Elem> upset_Nk(const FreeAlgebra& f, std::size_t k);
// Number of maximal filters of N_k whose quotient is Ł_i^Δ, counted as
// epimorphisms N_k -> Ł_i^Δ (the chains have no nontrivial automorphisms).
std::size_t beta_oracle(const FreeAlgebra& f, std::size_t k, std::size_t i);
std::size_t beta_oracle(std::size_t n, std::size_t m, std::size_t k, std::size_t i);

}  // namespace lukra
