#include "lukra/filters.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "lukra/errors.hpp"
#include "lukra/guard.hpp"
#include "lukra/laws.hpp"

namespace lukra {

namespace {

std::vector<char> mask_of(const FiniteAlgebra& a, const std::vector<Elem>& s) {
    std::vector<char> in(a.size(), 0);
    for (Elem e : s) {
        if (e >= a.size()) throw InvalidArgument("element out of range: " + std::to_string(e));
        in[e] = 1;
    }
    return in;
}

Filter members_of(const std::vector<char>& in) {
    Filter f;
    for (Elem e = 0; e < in.size(); ++e)
        if (in[e]) f.push_back(e);
    return f;
}

void check_guard(const FiniteAlgebra& a, std::optional<std::size_t> guard, std::size_t fallback,
                 const char* what) {
    const std::size_t limit = resolve_guard(guard, fallback);
    if (a.size() > limit)
        throw SizeError(std::string(what) + " refused: carrier has " + std::to_string(a.size()) +
                        " elements, guard is " + std::to_string(limit) +
                        " (set LUKRA_GUARD to override)");
}

}  // namespace

bool is_implicative_filter(const FiniteAlgebra& a, const std::vector<Elem>& s) {
    const auto in = mask_of(a, s);
    if (!in[a.top()]) return false;
    for (Elem x = 0; x < a.size(); ++x) {
        if (!in[x]) continue;
        for (Elem y = 0; y < a.size(); ++y)
            if (in[a.imp(x, y)] && !in[y]) return false;
    }
    return true;
}

namespace {

// MP closure with a reverse index z -> {(x, y) : x -> y = z}, so that each
// closure costs O(N^2) instead of rescanning the members for every new z.
class Closer {
public:
    explicit Closer(const FiniteAlgebra& a) : a_(a), start_(a.size() + 1, 0), pairs_(a.size() * a.size()) {
        const std::size_t n = a.size();
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y) ++start_[a.imp(x, y) + 1];
        for (std::size_t z = 0; z < n; ++z) start_[z + 1] += start_[z];
        auto fill = start_;
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y) pairs_[fill[a.imp(x, y)]++] = {x, y};
    }

    Filter close(const std::vector<Elem>& seed) const {
        std::vector<char> in(a_.size(), 0);
        std::vector<Elem> members, work;
        auto add = [&](Elem e) {
            if (in[e]) return;
            in[e] = 1;
            members.push_back(e);
            work.push_back(e);
        };
        add(a_.top());
        for (Elem e : seed) {
            if (e >= a_.size()) throw InvalidArgument("element out of range: " + std::to_string(e));
            add(e);
        }
        while (!work.empty()) {
            const Elem z = work.back();
            work.pop_back();
            for (Elem y = 0; y < a_.size(); ++y)
                if (in[a_.imp(z, y)]) add(y);
            for (std::size_t i = start_[z]; i < start_[z + 1]; ++i)
                if (in[pairs_[i].first]) add(pairs_[i].second);
        }
        std::sort(members.begin(), members.end());
        return members;
    }

private:
    const FiniteAlgebra& a_;
    std::vector<std::size_t> start_;
    std::vector<std::pair<Elem, Elem>> pairs_;
};

}  // namespace

Filter filter_generated(const FiniteAlgebra& a, const std::vector<Elem>& s) { return Closer(a).close(s); }

// Breadth-first over joins with principal filters.
std::vector<Filter> all_filters(const FiniteAlgebra& a, std::optional<std::size_t> guard) {
    check_guard(a, guard, kFilterGuard, "filter enumeration");
    const Closer closer(a);
    std::set<Filter> principal;
    for (Elem x = 0; x < a.size(); ++x) principal.insert(closer.close({x}));
    std::set<Filter> seen;
    std::deque<Filter> work;
    Filter start = closer.close({});
    seen.insert(start);
    work.push_back(start);
    while (!work.empty()) {
        Filter f = work.front();
        work.pop_front();
        for (const auto& p : principal) {
            if (std::includes(f.begin(), f.end(), p.begin(), p.end())) continue;
            Filter seed = f;
            seed.insert(seed.end(), p.begin(), p.end());
            Filter g = closer.close(seed);
            if (seen.insert(g).second) work.push_back(std::move(g));
        }
    }
    std::vector<Filter> out(seen.begin(), seen.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const Filter& l, const Filter& r) { return l.size() < r.size(); });
    return out;
}

namespace {

bool strict_subset(const Filter& small, const Filter& big) {
    return small.size() < big.size() && std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<Filter> maximal_among(const FiniteAlgebra& a, const std::vector<Filter>& fs) {
    std::vector<Filter> out;
    for (const auto& f : fs) {
        if (f.size() == a.size()) continue;
        bool maximal = true;
        for (const auto& g : fs)
            if (g.size() < a.size() && strict_subset(f, g)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(f);
    }
    return out;
}

}  // namespace

std::vector<Filter> maximal_filters(const FiniteAlgebra& a, std::optional<std::size_t> guard) {
    return maximal_among(a, all_filters(a, guard));
}

CheckReport k_weak_mp_closed(const FiniteAlgebra& a, const Filter& f, std::size_t k) {
    const auto in = mask_of(a, f);
    CheckReport rep;
    for (Elem x = 0; x < a.size(); ++x) {
        if (!in[x]) continue;
        for (Elem y = 0; y < a.size(); ++y)
            if (in[imp_k(a, x, y, k)] && !in[y]) {
                rep.add("k-weak MP[k=" + std::to_string(k) + "]", {x, y});
                return rep;
            }
    }
    return rep;
}

Congruence partition_from_blocks(const std::vector<Elem>& raw) {
    Congruence c;
    c.block.resize(raw.size());
    std::vector<std::pair<Elem, Elem>> renum;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto it = std::find_if(renum.begin(), renum.end(), [&](auto& p) { return p.first == raw[i]; });
        if (it == renum.end()) {
            renum.emplace_back(raw[i], static_cast<Elem>(renum.size()));
            c.block[i] = renum.back().second;
        } else {
            c.block[i] = it->second;
        }
    }
    c.blocks = renum.size();
    return c;
}

Congruence congruence_of(const FiniteAlgebra& a, const Filter& f, std::size_t k) {
    const auto in = mask_of(a, f);
    if (!is_implicative_filter(a, f)) throw PreconditionError("not an implicative filter");
    const std::size_t n = a.size();
    auto related = [&](Elem x, Elem y) { return in[imp_k(a, x, y, k)] && in[imp_k(a, y, x, k)]; };
    Congruence c;
    const Elem unset = static_cast<Elem>(-1);
    c.block.assign(n, unset);
    for (Elem x = 0; x < n; ++x) {
        if (c.block[x] != unset) continue;
        const Elem id = static_cast<Elem>(c.blocks++);
        for (Elem y = x; y < n; ++y)
            if (related(x, y)) {
                if (c.block[y] != unset)
                    throw InternalError("R(F) is not transitive at (" + std::to_string(x) + "," +
                                        std::to_string(y) + ")");
                c.block[y] = id;
            }
    }
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            if ((c.block[x] == c.block[y]) != related(x, y))
                throw InternalError("R(F) is not an equivalence at (" + std::to_string(x) + "," +
                                    std::to_string(y) + ")");
    return c;
}

bool is_congruence(const FiniteAlgebra& a, const Congruence& c, bool with_delta) {
    const std::size_t n = a.size();
    std::vector<Elem> rep(c.blocks, static_cast<Elem>(-1));
    for (Elem x = 0; x < n; ++x)
        if (rep[c.block[x]] == static_cast<Elem>(-1)) rep[c.block[x]] = x;
    for (Elem x = 0; x < n; ++x) {
        const Elem r = rep[c.block[x]];
        if (r == x) continue;
        if (with_delta && c.block[a.delta(x)] != c.block[a.delta(r)]) return false;
        for (Elem y = 0; y < n; ++y) {
            if (c.block[a.imp(x, y)] != c.block[a.imp(r, y)]) return false;
            if (c.block[a.imp(y, x)] != c.block[a.imp(y, r)]) return false;
        }
    }
    return true;
}

Filter top_class(const FiniteAlgebra& a, const Congruence& c) {
    Filter f;
    for (Elem x = 0; x < a.size(); ++x)
        if (c.block[x] == c.block[a.top()]) f.push_back(x);
    return f;
}

Quotient quotient_by(const FiniteAlgebra& a, const Congruence& c) {
    if (!is_congruence(a, c, a.has_delta()))
        throw InternalError("quotient is ill-defined: partition does not respect the operations");
    const std::size_t m = c.blocks;
    std::vector<Elem> rep(m, static_cast<Elem>(-1));
    for (Elem x = 0; x < a.size(); ++x)
        if (rep[c.block[x]] == static_cast<Elem>(-1)) rep[c.block[x]] = x;
    std::vector<Elem> imp(m * m);
    for (Elem i = 0; i < m; ++i)
        for (Elem j = 0; j < m; ++j) imp[i * m + j] = c.block[a.imp(rep[i], rep[j])];
    std::optional<std::vector<Elem>> delta;
    if (a.has_delta()) {
        delta.emplace(m);
        for (Elem i = 0; i < m; ++i) (*delta)[i] = c.block[a.delta(rep[i])];
    }
    std::optional<Elem> bottom;
    if (a.bottom()) bottom = c.block[*a.bottom()];
    return {FiniteAlgebra(m, std::move(imp), c.block[a.top()], std::move(delta), bottom,
                          a.label() + "/F"),
            c.block};
}

Quotient quotient(const FiniteAlgebra& a, const Filter& f) { return quotient_by(a, congruence_of(a, f)); }

std::vector<Congruence> all_congruences(const FiniteAlgebra& a, bool with_delta,
                                        std::optional<std::size_t> guard) {
    check_guard(a, guard, kCongruenceGuard, "congruence enumeration");
    if (with_delta && !a.has_delta()) throw ConfigurationError("algebra has no delta table");
    const std::size_t n = a.size();
    std::vector<Congruence> out;
    Congruence c;
    c.block.assign(n, 0);
    // Restricted growth strings.
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
        if (i == n) {
            c.blocks = used;
            if (is_congruence(a, c, with_delta)) out.push_back(c);
            return;
        }
        for (std::size_t b = 0; b <= used; ++b) {
            c.block[i] = static_cast<Elem>(b);
            rec(i + 1, std::max(used, b + 1));
        }
    };
    rec(0, 0);
    return out;
}

bool is_delta_filter(const FiniteAlgebra& a, const Filter& f, DeltaFilterReading reading) {
    if (!a.has_delta()) throw ConfigurationError("algebra has no delta table");
    if (!is_implicative_filter(a, f)) return false;
    const auto in = mask_of(a, f);
    for (Elem x : f)
        if (!in[a.delta(x)]) return false;
    const std::size_t n = a.size();
    auto hyp = [&](Elem z, Elem y) { return in[a.imp(a.imp(z, a.imp(z, y)), a.imp(z, y))] != 0; };
    for (Elem z = 0; z < n; ++z) {
        if (reading == DeltaFilterReading::TarskianModulo) {
            bool all_y = true;
            for (Elem y = 0; y < n && all_y; ++y) all_y = hyp(z, y);
            if (!all_y) continue;
            for (Elem x = 0; x < n; ++x)
                if (in[a.imp(z, x)] && !in[a.imp(z, a.delta(x))]) return false;
        } else {
            bool some_y = false;
            for (Elem y = 0; y < n && !some_y; ++y) some_y = hyp(z, y);
            if (!some_y) continue;
            for (Elem x = 0; x < n; ++x)
                if (in[a.imp(z, x)] && !in[a.imp(z, a.delta(x))]) return false;
        }
    }
    return true;
}

namespace {

bool tied_to(const FiniteAlgebra& a, const std::vector<Filter>& fs, const Filter& d, Elem p) {
    if (std::binary_search(d.begin(), d.end(), p)) return false;
    for (const auto& g : fs)
        if (strict_subset(d, g) && !std::binary_search(g.begin(), g.end(), p)) return false;
    return true;
}

}  // namespace

std::vector<Filter> tied_filters(const FiniteAlgebra& a, Elem p, std::optional<std::size_t> guard) {
    const auto fs = all_filters(a, guard);
    std::vector<Filter> out;
    for (const auto& d : fs)
        if (tied_to(a, fs, d, p)) out.push_back(d);
    return out;
}

CheckReport check_tied_iff_maximal(const FiniteAlgebra& a, std::optional<std::size_t> guard) {
    const auto fs = all_filters(a, guard);
    const auto ms = maximal_among(a, fs);
    CheckReport rep;
    for (const auto& d : fs) {
        bool tied = false;
        for (Elem p = 0; p < a.size() && !tied; ++p) tied = tied_to(a, fs, d, p);
        const bool maximal = std::find(ms.begin(), ms.end(), d) != ms.end();
        if (tied != maximal) rep.add(tied ? "tied but not maximal" : "maximal but not tied", d);
    }
    return rep;
}

SubdirectEmbedding subdirect_embedding(const FiniteAlgebra& a, std::optional<std::size_t> guard) {
    // A trivial algebra has no maximal filters and embeds in the empty product.
    SubdirectEmbedding out{maximal_filters(a, guard), {}, product({}), {}, false, false};
    std::vector<std::vector<Elem>> proj;
    std::vector<std::size_t> sizes;
    for (const auto& m : out.maximal) {
        Quotient q = quotient(a, m);
        sizes.push_back(q.algebra.size());
        out.factors.push_back(std::move(q.algebra));
        proj.push_back(std::move(q.projection));
    }
    out.product = product(out.factors);
    out.embedding.resize(a.size());
    std::vector<Elem> c(sizes.size());
    for (Elem x = 0; x < a.size(); ++x) {
        for (std::size_t i = 0; i < sizes.size(); ++i) c[i] = proj[i][x];
        out.embedding[x] = product_index(sizes, c);
    }
    if (!is_homomorphism(a, out.product, out.embedding))
        throw InternalError("subdirect embedding is not a homomorphism");
    std::vector<Elem> sorted = out.embedding;
    std::sort(sorted.begin(), sorted.end());
    out.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    out.coordinates_surjective = true;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        std::vector<char> hit(sizes[i], 0);
        for (Elem x = 0; x < a.size(); ++x) hit[proj[i][x]] = 1;
        if (std::find(hit.begin(), hit.end(), 0) != hit.end()) out.coordinates_surjective = false;
    }
    return out;
}

std::optional<SimpleClass> classify_simple(const FiniteAlgebra& a, std::optional<std::size_t> guard) {
    if (a.size() < 2) return std::nullopt;
    const auto fs = all_filters(a, guard);
    if (fs.size() != 2) return std::nullopt;
    FiniteAlgebra chain = make_chain(a.size(), a.has_delta(), a.bottom().has_value());
    auto iso = is_isomorphic(a, chain);
    if (!iso) return std::nullopt;
    return SimpleClass{a.size(), *iso};
}

// ---------------------------------------------------------------- Moisil

namespace {

std::size_t family_size(std::size_t n, MoisilReading r) {
    return r == MoisilReading::Repaired ? n - 1 : n;
}

void check_arity(std::size_t n, const std::vector<std::vector<Elem>>& d, MoisilReading r,
                 const FiniteAlgebra& a) {
    if (n < 2) throw InvalidArgument("n must be >= 2");
    if (d.size() != family_size(n, r))
        throw InvalidArgument("Moisil family needs " + std::to_string(family_size(n, r)) +
                              " tables, got " + std::to_string(d.size()));
    for (const auto& t : d)
        if (t.size() != a.size()) throw InvalidArgument("Moisil table has the wrong length");
}

struct MoisilCtx {
    const FiniteAlgebra& a;
    std::size_t n;
    const std::vector<std::vector<Elem>>& d;  // d[j-1] is Δ_j
    Elem D(std::size_t j, Elem x) const { return d[j - 1][x]; }
    std::size_t J() const { return d.size(); }
    Elem I(Elem x, Elem y) const { return a.imp(x, y); }
    Elem top() const { return a.top(); }
};

template <class Pred>
void sweep2(const MoisilCtx& c, CheckReport& rep, const std::string& law, Pred ok) {
    for (Elem x = 0; x < c.a.size(); ++x)
        for (Elem y = 0; y < c.a.size(); ++y)
            if (!ok(x, y)) {
                rep.add(law, {x, y});
                return;
            }
}

void axioms_into(const MoisilCtx& c, CheckReport& rep) {
    const auto& a = c.a;
    sweep2(c, rep, "ML1", [&](Elem x, Elem y) { return c.I(c.D(1, x), y) == imp_k(a, x, y, c.n); });
    sweep2(c, rep, "ML2", [&](Elem x, Elem y) {
        for (std::size_t i = 1; i <= c.J(); ++i)
            if (join(a, c.D(i, x), c.I(c.D(i, x), y)) != c.top()) return false;
        return true;
    });
    sweep2(c, rep, "ML3", [&](Elem x, Elem y) {
        for (std::size_t i = 1; i <= c.J(); ++i)
            for (std::size_t j = 1; j <= c.J(); ++j) {
                const Elem v = c.I(c.D(j, x), c.D(j, y));
                if (c.D(i, v) != v) return false;
            }
        return true;
    });
    sweep2(c, rep, "ML4", [&](Elem x, Elem y) {
        Elem v = c.I(x, y);
        for (std::size_t j = c.J(); j >= 1; --j) v = c.I(c.I(c.D(j, x), c.D(j, y)), v);
        return v == c.top();
    });
    sweep2(c, rep, "ML5a", [&](Elem x, Elem y) {
        for (std::size_t j = 1; j <= c.J(); ++j)
            for (std::size_t k = 1; k <= c.J(); ++k)
                for (std::size_t i = 1; i <= std::min(c.J(), j + k); ++i)
                    if (c.I(c.D(i, y), join(a, c.D(j, x), c.D(k, c.I(x, y)))) != c.top()) return false;
        return true;
    });
    sweep2(c, rep, "ML5b", [&](Elem x, Elem y) {
        for (std::size_t j = 1; j <= c.J(); ++j)
            for (std::size_t k = 1; k <= c.J(); ++k)
                for (std::size_t i = 1; i <= c.J() && i + k <= j + 1; ++i)
                    if (c.I(c.D(i, c.I(x, y)), c.I(c.D(k, x), c.D(j, y))) != c.top()) return false;
        return true;
    });
}

}  // namespace

CheckReport moisil_axioms(const FiniteAlgebra& a, std::size_t n,
                          const std::vector<std::vector<Elem>>& deltas) {
    if (n < 2) throw InvalidArgument("n must be >= 2");
    if (deltas.empty()) throw InvalidArgument("Moisil family is empty");
    for (const auto& t : deltas)
        if (t.size() != a.size()) throw InvalidArgument("Moisil table has the wrong length");
    CheckReport rep;
    axioms_into(MoisilCtx{a, n, deltas}, rep);
    return rep;
}

CheckReport moisil_check(const FiniteAlgebra& a, std::size_t n,
                         const std::vector<std::vector<Elem>>& deltas, MoisilReading reading) {
    check_arity(n, deltas, reading, a);
    const MoisilCtx c{a, n, deltas};
    CheckReport rep;
    axioms_into(c, rep);
    const std::size_t J = c.J();
    const std::size_t n1 = std::min(n - 1, J);
    sweep2(c, rep, "ML7", [&](Elem, Elem) {
        for (std::size_t j = 1; j <= J; ++j)
            if (c.D(j, a.top()) != a.top()) return false;
        return true;
    });
    sweep2(c, rep, "ML8", [&](Elem x, Elem) {
        for (std::size_t j = 1; j < n1; ++j)
            if (!leq(a, c.D(j, x), c.D(j + 1, x))) return false;
        return true;
    });
    sweep2(c, rep, "ML9", [&](Elem x, Elem y) {
        for (std::size_t j = 1; j <= J; ++j)
            if (c.I(c.D(j, x), c.I(c.D(j, x), y)) != c.I(c.D(j, x), y)) return false;
        return true;
    });
    sweep2(c, rep, "ML10", [&](Elem x, Elem y) {
        for (std::size_t j = 1; j <= J; ++j)
            if (c.I(c.D(j, x), y) != imp_k(a, c.D(j, x), y, n)) return false;
        return true;
    });
    sweep2(c, rep, "ML11", [&](Elem x, Elem y) {
        for (std::size_t j = 1; j <= J; ++j)
            if (c.I(c.I(c.D(j, x), y), c.D(j, x)) != c.D(j, x)) return false;
        return true;
    });
    sweep2(c, rep, "ML12", [&](Elem x, Elem y) {
        const Elem premise = reading == MoisilReading::Literal ? c.I(x, y) : c.D(1, c.I(x, y));
        for (std::size_t j = 1; j <= J; ++j)
            if (c.I(premise, c.I(c.D(j, x), c.D(j, y))) != a.top()) return false;
        return true;
    });
    sweep2(c, rep, "ML13", [&](Elem x, Elem y) {
        if (!leq(a, x, y)) return true;
        for (std::size_t j = 1; j <= J; ++j)
            if (!leq(a, c.D(j, x), c.D(j, y))) return false;
        return true;
    });
    sweep2(c, rep, "ML14", [&](Elem x, Elem) { return leq(a, c.D(1, x), x); });
    sweep2(c, rep, "ML15", [&](Elem x, Elem y) {
        for (std::size_t j = 1; j <= J; ++j)
            if (!leq(a, c.D(j, x), c.D(j, y))) return true;
        return leq(a, x, y);
    });
    sweep2(c, rep, "ML16", [&](Elem x, Elem) {
        for (std::size_t k = 1; k <= J; ++k)
            for (std::size_t j = 1; j <= J; ++j)
                if (c.D(k, c.D(j, x)) != c.D(j, x)) return false;
        return true;
    });
    sweep2(c, rep, "ML17", [&](Elem x, Elem) { return leq(a, x, c.D(n1, x)); });
    sweep2(c, rep, "ML18", [&](Elem x, Elem) {
        const Elem v = reading == MoisilReading::Literal ? c.I(x, c.D(1, x)) : imp_k(a, x, c.D(1, x), n);
        return v == a.top();
    });
    return rep;
}

std::optional<std::vector<std::vector<Elem>>> moisil_search(const FiniteAlgebra& a, std::size_t n,
                                                            const std::vector<Elem>& delta1,
                                                            MoisilReading reading, bool full,
                                                            std::optional<std::size_t> guard) {
    check_guard(a, guard, kMoisilGuard, "Moisil search");
    if (delta1.size() != a.size()) throw InvalidArgument("delta1 has the wrong length");
    const std::size_t J = family_size(n, reading);
    std::vector<Elem> values;
    for (Elem v = 0; v < a.size(); ++v)
        if (full || delta1[v] == v) values.push_back(v);
    std::vector<std::vector<Elem>> fam(J, std::vector<Elem>(a.size(), 0));
    fam[0] = delta1;
    std::optional<std::vector<std::vector<Elem>>> found;
    // Tables are filled element by element; without `full`, each partial table
    // must stay monotone and sit above the previous one.
    std::function<void(std::size_t, Elem)> rec = [&](std::size_t j, Elem x) {
        if (found) return;
        if (j == J) {
            if (moisil_axioms(a, n, fam).passed()) found = fam;
            return;
        }
        if (x == a.size()) {
            rec(j + 1, 0);
            return;
        }
        for (Elem v : values) {
            if (!full) {
                if (!leq(a, fam[j - 1][x], v)) continue;
                bool mono = true;
                for (Elem y = 0; y < x && mono; ++y) {
                    if (leq(a, y, x) && !leq(a, fam[j][y], v)) mono = false;
                    if (leq(a, x, y) && !leq(a, v, fam[j][y])) mono = false;
                }
                if (!mono) continue;
            }
            fam[j][x] = v;
            rec(j, x + 1);
            if (found) return;
        }
    };
    rec(1, 0);
    return found;
}

}  // namespace lukra
