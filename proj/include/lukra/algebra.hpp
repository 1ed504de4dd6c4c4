#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lukra {

using Elem = std::uint32_t;

// Finite algebra <A, ->, Δ, 1> with an optional bottom constant.  The carrier
// is {0..N-1}; the order is read off the table (x <= y iff x->y = top), never
// from the index order.
class FiniteAlgebra {
public:
    FiniteAlgebra(std::size_t size, std::vector<Elem> imp, Elem top,
                  std::optional<std::vector<Elem>> delta = std::nullopt,
                  std::optional<Elem> bottom = std::nullopt, std::string label = {});

    std::size_t size() const { return n_; }
    Elem top() const { return top_; }
    const std::optional<Elem>& bottom() const { return bottom_; }
    bool has_delta() const { return delta_.has_value(); }
    const std::string& label() const { return label_; }

    Elem imp(Elem x, Elem y) const { return imp_[static_cast<std::size_t>(x) * n_ + y]; }
    // Throws ConfigurationError when there is no Δ table.
    Elem delta(Elem x) const;

    const std::vector<Elem>& imp_table() const { return imp_; }
    const std::optional<std::vector<Elem>>& delta_table() const { return delta_; }

    FiniteAlgebra with_delta(std::vector<Elem> delta) const;
    FiniteAlgebra without_delta() const;
    FiniteAlgebra with_bottom(std::optional<Elem> bottom) const;
    FiniteAlgebra with_label(std::string label) const;

    bool operator==(const FiniteAlgebra& o) const {
        return n_ == o.n_ && top_ == o.top_ && bottom_ == o.bottom_ && imp_ == o.imp_ &&
               delta_ == o.delta_;
    }

private:
    std::size_t n_;
    std::vector<Elem> imp_;
    Elem top_;
    std::optional<std::vector<Elem>> delta_;
    std::optional<Elem> bottom_;
    std::string label_;
};

struct Violation {
    std::string law;
    std::vector<Elem> witness;
};

struct CheckReport {
    std::vector<Violation> violations;

    bool passed() const { return violations.empty(); }
    void add(std::string law, std::vector<Elem> witness) {
        violations.push_back({std::move(law), std::move(witness)});
    }
    void merge(const CheckReport& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
    bool failed_law(const std::string& law) const {
        for (const auto& v : violations)
            if (v.law == law) return true;
        return false;
    }
    std::string summary() const;
};

// Ł_n: index i stands for i/(n-1).
FiniteAlgebra make_chain(std::size_t n, bool with_delta = true, bool with_bottom = true);

Elem imp_k(const FiniteAlgebra& a, Elem x, Elem y, std::size_t k);
bool leq(const FiniteAlgebra& a, Elem x, Elem y);
Elem join(const FiniteAlgebra& a, Elem x, Elem y);
// x -> bottom; needs a bottom.
Elem neg(const FiniteAlgebra& a, Elem x);
bool is_chain(const FiniteAlgebra& a);

// t is Tarskian when t->y = t->(t->y) for every y.
bool is_tarskian(const FiniteAlgebra& a, Elem t);
std::vector<Elem> tarskian_elements(const FiniteAlgebra& a);
std::vector<Elem> t_below(const FiniteAlgebra& a, Elem x);

// Either the unique admissible Δ table, or the least x whose T_x has no
// greatest element.
struct DeltaAdmissibility {
    std::optional<std::vector<Elem>> delta;
    std::optional<Elem> witness;
    bool admissible() const { return delta.has_value(); }
};
DeltaAdmissibility delta_admissible(const FiniteAlgebra& a);

// Smallest n in 2..N+1 for which the Ł6 instance holds; requires Ł1-Ł5.
std::optional<std::size_t> min_n(const FiniteAlgebra& a);

// Mixed-radix encoding, last factor fastest.  The empty product is the
// one-element algebra.
FiniteAlgebra product(const std::vector<FiniteAlgebra>& factors);
std::vector<Elem> product_coords(const std::vector<std::size_t>& sizes, Elem index);
Elem product_index(const std::vector<std::size_t>& sizes, const std::vector<Elem>& coords);

// Least subuniverse containing seed and top, closed under -> and (if present) Δ.
std::vector<Elem> subalgebra_closure(const FiniteAlgebra& a, const std::vector<Elem>& seed);
bool is_subuniverse(const FiniteAlgebra& a, const std::vector<Elem>& subset);

struct Subalgebra {
    FiniteAlgebra algebra;
    std::vector<Elem> embedding;  // new index -> old index
};
// subset must be a subuniverse (sorted internally).
Subalgebra subalgebra(const FiniteAlgebra& a, std::vector<Elem> subset);

using Map = std::vector<Elem>;

// Maps preserving ->, top, Δ when both sides have it, and bottom when both
// sides have it.
std::vector<Map> homomorphisms(const FiniteAlgebra& a, const FiniteAlgebra& b);
std::vector<Map> epimorphisms(const FiniteAlgebra& a, const FiniteAlgebra& b);
std::optional<Map> is_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b);
bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, const Map& h);

// Greedy generating set: repeatedly add the least element not yet generated.
std::vector<Elem> generating_set(const FiniteAlgebra& a);

}  // namespace lukra
