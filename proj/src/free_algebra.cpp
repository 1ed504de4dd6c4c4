#include "lukra/free_algebra.hpp"

#include <algorithm>
#include <unordered_map>

#include "lukra/errors.hpp"
#include "lukra/guard.hpp"

namespace lukra {

namespace {

using Tuple = std::vector<std::uint8_t>;

std::string key_of(const Tuple& t) { return std::string(t.begin(), t.end()); }

}  // namespace

FreeAlgebra build_free(std::size_t n, std::size_t m, std::optional<std::size_t> guard) {
    if (n < 2) throw InvalidArgument("free algebra needs n >= 2");
    if (m < 1) throw InvalidArgument("free algebra needs m >= 1");
    if (n > 255) throw InvalidArgument("n too large");
    const std::size_t limit = resolve_guard(guard, kFreeGuard);
    const BigInt predicted = size_formula(n, m).total;
    if (predicted > limit)
        throw SizeError("free algebra (n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                        ") predicted to have " + predicted.str() + " elements, guard is " +
                        std::to_string(limit) + " (set LUKRA_GUARD to override)");

    FreeAlgebra f;
    f.n = n;
    f.m = m;
    for (std::size_t k = 2; k <= n; ++k) {
        Tuple v(m, 0);
        while (true) {
            f.coord_chain.push_back(static_cast<std::uint8_t>(k));
            f.coord_valuation.push_back(v);
            std::size_t i = m;
            while (i > 0 && ++v[i - 1] == k) v[--i] = 0;
            if (i == 0) break;
        }
    }
    const std::size_t c = f.coord_chain.size();
    auto imp_t = [&](const Tuple& x, const Tuple& y) {
        Tuple r(c);
        for (std::size_t i = 0; i < c; ++i) {
            const int t = f.coord_chain[i] - 1;
            r[i] = static_cast<std::uint8_t>(std::min(t, t - x[i] + y[i]));
        }
        return r;
    };
    auto delta_t = [&](const Tuple& x) {
        Tuple r(c);
        for (std::size_t i = 0; i < c; ++i) {
            const int t = f.coord_chain[i] - 1;
            r[i] = static_cast<std::uint8_t>(x[i] == t ? t : 0);
        }
        return r;
    };

    std::vector<Tuple> elems;
    std::unordered_map<std::string, Elem> index;
    auto add = [&](Tuple t) {
        auto [it, fresh] = index.emplace(key_of(t), static_cast<Elem>(elems.size()));
        if (fresh) {
            elems.push_back(std::move(t));
            if (elems.size() > limit)
                throw SizeError("free algebra closure exceeded the guard of " + std::to_string(limit));
        }
    };
    Tuple topt(c);
    for (std::size_t i = 0; i < c; ++i) topt[i] = static_cast<std::uint8_t>(f.coord_chain[i] - 1);
    add(topt);
    std::vector<Tuple> gens(m, Tuple(c));
    for (std::size_t g = 0; g < m; ++g) {
        for (std::size_t i = 0; i < c; ++i) gens[g][i] = f.coord_valuation[i][g];
        add(gens[g]);
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            add(imp_t(elems[i], elems[j]));
            add(imp_t(elems[j], elems[i]));
        }
        add(delta_t(elems[i]));
    }

    std::sort(elems.begin(), elems.end());
    index.clear();
    for (Elem i = 0; i < elems.size(); ++i) index.emplace(key_of(elems[i]), i);
    const std::size_t size = elems.size();
    std::vector<Elem> imp(size * size);
    std::vector<Elem> del(size);
    for (Elem x = 0; x < size; ++x) {
        for (Elem y = 0; y < size; ++y) imp[x * size + y] = index.at(key_of(imp_t(elems[x], elems[y])));
        del[x] = index.at(key_of(delta_t(elems[x])));
    }
    for (const auto& g : gens) f.generators.push_back(index.at(key_of(g)));
    f.algebra = FiniteAlgebra(size, std::move(imp), index.at(key_of(topt)), std::move(del), std::nullopt,
                              "Free(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")");
    f.tuples = std::move(elems);
    return f;
}

std::vector<Elem> minimal_elements(const FreeAlgebra& f) {
    const auto& a = f.algebra;
    std::vector<Elem> out;
    for (Elem x = 0; x < a.size(); ++x) {
        bool minimal = true;
        for (Elem y = 0; y < a.size() && minimal; ++y)
            if (y != x && leq(a, y, x)) minimal = false;
        if (minimal) out.push_back(x);
    }
    return out;
}

CheckReport check_free_structure(const FreeAlgebra& f) {
    const auto& a = f.algebra;
    CheckReport rep;
    const auto& g = f.generators;
    std::vector<Elem> dg;
    for (Elem x : g) dg.push_back(a.delta(x));
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (i == j) continue;
            if (leq(a, g[i], g[j])) rep.add("generators not an antichain", {g[i], g[j]});
            if (leq(a, dg[i], dg[j])) rep.add("delta-generators not an antichain", {dg[i], dg[j]});
        }
    auto mu = minimal_elements(f);
    auto sorted_dg = dg;
    std::sort(sorted_dg.begin(), sorted_dg.end());
    sorted_dg.erase(std::unique(sorted_dg.begin(), sorted_dg.end()), sorted_dg.end());
    if (mu != sorted_dg) rep.add("minimal elements differ from delta-generators", mu);
    if (mu.size() != f.m) rep.add("number of minimal elements differs from m", mu);
    for (Elem x = 0; x < a.size(); ++x) {
        bool covered = false;
        for (Elem d : dg) covered = covered || leq(a, d, x);
        if (!covered) {
            rep.add("element outside every [Dg,1]", {x});
            break;
        }
    }
    if (subalgebra_closure(a, g).size() != a.size()) rep.add("generators do not generate", g);
    return rep;
}

RecurrenceMode parse_mode(const std::string& s) {
    if (s == "repaired") return RecurrenceMode::Repaired;
    if (s == "literal") return RecurrenceMode::Literal;
    throw InvalidArgument("unknown recurrence mode '" + s + "' (expected repaired or literal)");
}

std::string mode_name(RecurrenceMode m) { return m == RecurrenceMode::Repaired ? "repaired" : "literal"; }

namespace {

BigInt ipow(std::size_t b, std::size_t e) { return boost::multiprecision::pow(BigInt(b), static_cast<unsigned>(e)); }

BigInt binom(std::size_t m, std::size_t k) {
    BigInt r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (m - k + i) / i;
    return r;
}

}  // namespace

SizeBreakdown size_formula(std::size_t n, std::size_t m, RecurrenceMode mode) {
    if (n < 2) throw InvalidArgument("size formula needs n >= 2");
    if (m < 1) throw InvalidArgument("size formula needs m >= 1");
    SizeBreakdown out;
    out.n = n;
    out.m = m;
    out.mode = mode;
    out.total = 0;
    for (std::size_t k = 1; k <= m; ++k) {
        std::vector<BigInt> beta(n - 1);
        BigInt nk = 1;
        for (std::size_t i = 2; i <= n; ++i) {
            BigInt b = ipow(i - 1, k) * ipow(i, m - k);
            for (std::size_t j = 2; j < i; ++j) {
                const bool take = mode == RecurrenceMode::Repaired ? (i - 1) % (j - 1) == 0
                                                                   : (k - 1) % (j - 1) == 0 && j != k;
                if (take) b -= beta[j - 2];
            }
            if (b < 0)
                throw FormulaReadingError("beta_" + std::to_string(i) + "(" + std::to_string(k) +
                                          ") = " + b.str() + " under the " + mode_name(mode) +
                                          " reading");
            beta[i - 2] = b;
            nk *= boost::multiprecision::pow(BigInt(i), static_cast<unsigned>(b));
        }
        BigInt term = binom(m, k) * nk;
        if (k % 2 == 0) term = -term;
        out.beta.push_back(std::move(beta));
        out.nk.push_back(nk);
        out.terms.push_back(term);
        out.total += term;
    }
    if (out.total < 1)
        throw FormulaReadingError("total " + out.total.str() + " under the " + mode_name(mode) + " reading");
    return out;
}

BigInt v_formula(std::size_t m, std::size_t k) {
    if (k < 2) throw InvalidArgument("v_formula needs k >= 2");
    std::vector<BigInt> v(k + 1);
    for (std::size_t i = 2; i <= k; ++i) {
        v[i] = ipow(i, m);
        for (std::size_t j = 2; j < i; ++j)
            if ((i - 1) % (j - 1) == 0) v[i] -= v[j];
    }
    return v[k];
}

std::size_t epi_count_oracle(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    return epimorphisms(a, b).size();
}

std::vector<Elem> upset_Nk(const FreeAlgebra& f, std::size_t k) {
    if (k < 1 || k > f.m) throw InvalidArgument("upset_Nk needs 1 <= k <= m");
    const auto& a = f.algebra;
    Elem g = f.generators[0];
    for (std::size_t i = 1; i < k; ++i) g = join(a, g, f.generators[i]);
    const Elem t = a.delta(g);
    std::vector<Elem> out;
    for (Elem x = 0; x < a.size(); ++x)
        if (leq(a, t, x)) out.push_back(x);
    return out;
}

std::size_t beta_oracle(const FreeAlgebra& f, std::size_t k, std::size_t i) {
    if (i < 2) throw InvalidArgument("beta_oracle needs i >= 2");
    const Subalgebra nk = subalgebra(f.algebra, upset_Nk(f, k));
    return epimorphisms(nk.algebra, make_chain(i, true, false)).size();
}

std::size_t beta_oracle(std::size_t n, std::size_t m, std::size_t k, std::size_t i) {
    return beta_oracle(build_free(n, m), k, i);
}

}  // namespace lukra
