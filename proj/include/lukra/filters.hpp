#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lukra/algebra.hpp"

namespace lukra {

// Sorted element list of an implicative filter.
using Filter = std::vector<Elem>;

struct Congruence {
    std::vector<Elem> block;  // element -> block id, ids numbered by first occurrence
    std::size_t blocks = 0;
    bool operator==(const Congruence& o) const { return block == o.block; }
};

bool is_implicative_filter(const FiniteAlgebra& a, const std::vector<Elem>& s);
Filter filter_generated(const FiniteAlgebra& a, const std::vector<Elem>& s);

// Default guard for filter enumeration; LUKRA_GUARD or an explicit limit overrides.
inline constexpr std::size_t kFilterGuard = 64;
std::vector<Filter> all_filters(const FiniteAlgebra& a, std::optional<std::size_t> guard = std::nullopt);
std::vector<Filter> maximal_filters(const FiniteAlgebra& a,
                                    std::optional<std::size_t> guard = std::nullopt);

// x, x ->[k] y in F imply y in F.  Witness (x, y).
CheckReport k_weak_mp_closed(const FiniteAlgebra& a, const Filter& f, std::size_t k);

// R(F) = {(x,y) : x ->[k] y, y ->[k] x in F}.  k = 1 is the relation that is
// a congruence; larger k is exposed for comparison and throws InternalError
// when the result is not an equivalence.
Congruence congruence_of(const FiniteAlgebra& a, const Filter& f, std::size_t k = 1);
bool is_congruence(const FiniteAlgebra& a, const Congruence& c, bool with_delta);
Filter top_class(const FiniteAlgebra& a, const Congruence& c);
Congruence partition_from_blocks(const std::vector<Elem>& raw);

struct Quotient {
    FiniteAlgebra algebra;
    std::vector<Elem> projection;
};
Quotient quotient(const FiniteAlgebra& a, const Filter& f);
Quotient quotient_by(const FiniteAlgebra& a, const Congruence& c);

// Every equivalence compatible with -> (and with Δ when with_delta).
inline constexpr std::size_t kCongruenceGuard = 10;
std::vector<Congruence> all_congruences(const FiniteAlgebra& a, bool with_delta,
                                        std::optional<std::size_t> guard = std::nullopt);

// Clause (ii) of the Δ-filter definition quantifies y inside the hypothesis
// by default (z is Tarskian modulo F); PerY instantiates y freely.
enum class DeltaFilterReading { TarskianModulo, PerY };
bool is_delta_filter(const FiniteAlgebra& a, const Filter& f,
                     DeltaFilterReading reading = DeltaFilterReading::TarskianModulo);

std::vector<Filter> tied_filters(const FiniteAlgebra& a, Elem p,
                                 std::optional<std::size_t> guard = std::nullopt);
CheckReport check_tied_iff_maximal(const FiniteAlgebra& a,
                                   std::optional<std::size_t> guard = std::nullopt);

struct SubdirectEmbedding {
    std::vector<Filter> maximal;
    std::vector<FiniteAlgebra> factors;
    FiniteAlgebra product;
    std::vector<Elem> embedding;
    bool injective = false;
    bool coordinates_surjective = false;
};
SubdirectEmbedding subdirect_embedding(const FiniteAlgebra& a,
                                       std::optional<std::size_t> guard = std::nullopt);

struct SimpleClass {
    std::size_t k;
    Map iso;  // a -> Ł_k^Δ
};
std::optional<SimpleClass> classify_simple(const FiniteAlgebra& a,
                                           std::optional<std::size_t> guard = std::nullopt);

// Moisil operators Δ_1..Δ_{J}.  The default family has n-1 members; the
// literal reading indexes J = {1..n}.
enum class MoisilReading { Repaired, Literal };
CheckReport moisil_check(const FiniteAlgebra& a, std::size_t n,
                         const std::vector<std::vector<Elem>>& deltas,
                         MoisilReading reading = MoisilReading::Repaired);
// Only the defining axioms (both MŁ5 displays, named ML5a and ML5b).
CheckReport moisil_axioms(const FiniteAlgebra& a, std::size_t n,
                          const std::vector<std::vector<Elem>>& deltas);
// Backtracking over tables with Δ_1 fixed.  By default candidate values are
// restricted to the fixed points of Δ_1 and tables must be monotone; `full`
// drops that pruning.
inline constexpr std::size_t kMoisilGuard = 8;
std::optional<std::vector<std::vector<Elem>>> moisil_search(
    const FiniteAlgebra& a, std::size_t n, const std::vector<Elem>& delta1,
    MoisilReading reading = MoisilReading::Repaired, bool full = false,
    std::optional<std::size_t> guard = std::nullopt);

}  // namespace lukra
