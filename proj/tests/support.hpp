#pragma once

#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lukra/algebra.hpp"
#include "lukra/logic.hpp"

namespace testsupport {

using lukra::Elem;
using lukra::FiniteAlgebra;

// The 5-element ŁR_3 algebra {a, b, c, d, 1} with no admissible Δ.
inline FiniteAlgebra five_element() {
    enum { a, b, c, d, t };
    const std::vector<Elem> imp = {
        t, d, t, d, t,  //
        c, t, t, t, t,  //
        c, d, t, d, t,  //
        a, c, c, t, t,  //
        a, b, c, d, t,
    };
    return FiniteAlgebra(5, imp, t, std::nullopt, std::nullopt, "five");
}

inline std::string fixture(const std::string& name) {
    std::ifstream in(std::string(LUKRA_FIXTURE_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline const std::vector<std::string>& proof_fixtures() {
    static const std::vector<std::string> names = {"lh20", "lh21", "lh24", "lh25", "lh26", "lh27"};
    return names;
}

// Ł4Δ x Ł3Δ x Ł2Δ with bottom.
inline const FiniteAlgebra& big_product() {
    static const FiniteAlgebra p =
        lukra::product({lukra::make_chain(4), lukra::make_chain(3), lukra::make_chain(2)});
    return p;
}

// Subalgebras of the product generated by 1-3 random elements, bottom kept
// when it lies in the subalgebra.
inline std::vector<FiniteAlgebra> random_subalgebras(std::uint64_t seed, std::size_t count) {
    const auto& p = big_product();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(p.size() - 1));
    std::vector<FiniteAlgebra> out;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t g = 1 + rng() % 3;
        std::vector<Elem> seed_elems;
        for (std::size_t j = 0; j < g; ++j) seed_elems.push_back(pick(rng));
        const auto sub = lukra::subalgebra(p, lukra::subalgebra_closure(p, seed_elems));
        out.push_back(sub.algebra);
    }
    return out;
}

// Ł_n computed directly from the fractions i/(n-1).
inline std::vector<Elem> chain_imp_oracle(std::size_t n) {
    std::vector<Elem> t(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const lukra::Rational fx(static_cast<long long>(x), static_cast<long long>(n - 1));
            const lukra::Rational fy(static_cast<long long>(y), static_cast<long long>(n - 1));
            const lukra::Rational v = std::min(lukra::Rational(1), 1 - fx + fy);
            t[x * n + y] = static_cast<Elem>(boost::rational_cast<long long>(v * static_cast<long long>(n - 1)));
        }
    return t;
}

// Free algebra size by closing truth functions over [0,1]-valued points:
// each element is its vector of values under every valuation of the
// generators into {0, 1/(k-1), ..., 1}, k = 2..n.
inline std::size_t free_size_oracle(std::size_t n, std::size_t m) {
    using R = lukra::Rational;
    std::vector<std::vector<R>> points;
    for (std::size_t k = 2; k <= n; ++k) {
        std::vector<std::size_t> v(m, 0);
        while (true) {
            std::vector<R> pt;
            for (auto x : v) pt.emplace_back(static_cast<long long>(x), static_cast<long long>(k - 1));
            points.push_back(pt);
            std::size_t i = m;
            while (i > 0 && ++v[i - 1] == k) v[--i] = 0;
            if (i == 0) break;
        }
    }
    using Sig = std::vector<R>;
    std::set<Sig> seen;
    std::vector<Sig> elems;
    auto add = [&](Sig s) {
        if (seen.insert(s).second) elems.push_back(std::move(s));
    };
    add(Sig(points.size(), R(1)));
    for (std::size_t g = 0; g < m; ++g) {
        Sig s;
        for (const auto& p : points) s.push_back(p[g]);
        add(s);
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            for (int dir = 0; dir < 2; ++dir) {
                const Sig x = dir ? elems[j] : elems[i];
                const Sig y = dir ? elems[i] : elems[j];
                Sig s(points.size());
                for (std::size_t q = 0; q < points.size(); ++q) s[q] = std::min(R(1), R(1) - x[q] + y[q]);
                add(std::move(s));
            }
        }
        Sig s(points.size());
        for (std::size_t q = 0; q < points.size(); ++q) s[q] = elems[i][q] == R(1) ? R(1) : R(0);
        add(std::move(s));
    }
    return elems.size();
}

}  // namespace testsupport
