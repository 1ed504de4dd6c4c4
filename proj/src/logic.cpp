#include "lukra/logic.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include "lukra/errors.hpp"

namespace lukra {

const FiniteAlgebra& delta_chain(std::size_t k) {
    static std::mutex mu;
    static std::map<std::size_t, std::unique_ptr<FiniteAlgebra>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[k];
    if (!slot) slot = std::make_unique<FiniteAlgebra>(make_chain(k, true, true));
    return *slot;
}

namespace {

// Odometer over {0..k-1}^len, last position fastest.
bool next_valuation(std::vector<Elem>& v, std::size_t k) {
    std::size_t i = v.size();
    while (i > 0) {
        if (++v[i - 1] < k) return true;
        v[--i] = 0;
    }
    return false;
}

void need_n(std::size_t n) {
    if (n < 2) throw InvalidArgument("n must be at least 2");
}

}  // namespace

Verdict consequence(const std::vector<Formula>& gamma, const Formula& f, std::size_t n) {
    need_n(n);
    std::vector<Formula> all = gamma;
    all.push_back(f);
    const auto vars = variables(all);
    std::vector<Compiled> hyps;
    for (const auto& g : gamma) hyps.emplace_back(g, vars);
    const Compiled goal(f, vars);
    for (std::size_t k = 2; k <= n; ++k) {
        const auto& a = delta_chain(k);
        std::vector<Elem> v(vars.size(), 0);
        do {
            bool premises = true;
            for (const auto& h : hyps)
                if (h.eval(a, v) != a.top()) {
                    premises = false;
                    break;
                }
            if (!premises) continue;
            const Elem val = goal.eval(a, v);
            if (val != a.top()) return {false, Counterexample{k, vars, v, val}};
        } while (next_valuation(v, k));
    }
    return {true, std::nullopt};
}

Verdict is_tautology(const Formula& f, std::size_t n) { return consequence({}, f, n); }

bool equivalent(const Formula& a, const Formula& b, std::size_t n) {
    return is_tautology(imp(a, b), n).holds && is_tautology(imp(b, a), n).holds;
}

std::optional<Counterexample> refute_search(const Formula& f, std::size_t n_max) {
    return is_tautology(f, n_max).counterexample;
}

Rational rational_eval(const Formula& f, const std::map<std::string, Rational>& v) {
    const Rational one(1), zero(0);
    switch (f->kind) {
        case Kind::Var: {
            auto it = v.find(f->name);
            if (it == v.end()) throw InvalidArgument("variable '" + f->name + "' has no value");
            if (it->second < zero || it->second > one)
                throw InvalidArgument("value of '" + f->name + "' is outside [0,1]");
            return it->second;
        }
        case Kind::Top: return one;
        case Kind::Bot: return zero;
        case Kind::Imp: {
            const Rational x = rational_eval(f->lhs, v), y = rational_eval(f->rhs, v);
            return std::min(one, one - x + y);
        }
        case Kind::Delta: return rational_eval(f->lhs, v) == one ? one : zero;
    }
    throw InternalError("unknown formula node");
}

namespace {

std::string nm1(std::size_t n) { return std::to_string(n - 1); }

Schema schema(std::string id, const std::string& text) { return {std::move(id), parse(text)}; }

std::vector<Schema> common_axioms() {
    return {
        schema("AX1", "a -> (b -> a)"),
        schema("AX2", "(a -> b) -> ((b -> c) -> (a -> c))"),
        schema("AX3", "((a -> b) -> b) -> ((b -> a) -> a)"),
        schema("AX4", "((a -> b) -> (b -> a)) -> (b -> a)"),
    };
}

}  // namespace

std::vector<Schema> axioms_LHn(std::size_t n) {
    need_n(n);
    auto out = common_axioms();
    const std::string k = nm1(n);
    out.push_back(schema("AX5", "((a ->[" + k + "] b) -> a) -> a"));
    out.push_back(schema("AX6", "(D a -> D b) -> D(D a -> b)"));
    out.push_back(schema("AX7", "D(D a -> b) -> (a ->[" + k + "] D b)"));
    out.push_back(schema("AX8", "(a ->[" + k + "] b) -> (D a -> b)"));
    return out;
}

std::vector<Schema> axioms_LHbot() {
    auto out = common_axioms();
    out.push_back(schema("AX9", "F -> a"));
    out.push_back(schema("AX10", "D a -> a"));
    out.push_back(schema("AX11", "(D a -> b) -> (D a -> (D a -> b))"));
    out.push_back(schema("AX12", "(D a -> (D a -> b)) -> (D a -> b)"));
    out.push_back(schema("AX13", "D(a -> b) -> (D a -> D b)"));
    return out;
}

std::optional<Schema> axiom_schema(const std::string& id, System s, std::size_t n) {
    const auto list = s == System::LHn ? axioms_LHn(n) : axioms_LHbot();
    for (const auto& x : list)
        if (x.id == id) return x;
    return std::nullopt;
}

namespace {

struct Template {
    const char* base;
    bool takes_k;
    std::vector<const char*> premises;
    std::vector<const char*> conclusions;
};

// {N} is n-1, {K} the parameter.
const std::vector<Template>& templates() {
    static const std::vector<Template> t = {
        {"LH1", false, {}, {"((a -> b) -> c) -> (b -> c)"}},
        {"LH2", false, {"a -> b", "b -> c"}, {"a -> c"}},
        {"LH3", false, {}, {"a -> (a | b)"}},
        {"LH4", false, {}, {"((a | c) -> b) -> (a -> b)"}},
        {"LH5", false, {}, {"a -> a"}},
        {"LH6", false, {}, {"((b -> b) -> a) -> a"}},
        {"LH7", false, {}, {"(a -> (b -> c)) -> (b -> (a -> c))"}},
        {"LH7'", false, {"a -> (b -> c)"}, {"b -> (a -> c)"}},
        {"LH8", false, {}, {"b -> (a -> a)"}},
        {"LH9", false, {}, {"((a | c) -> (b -> c)) -> (a -> (b -> c))"}},
        {"LH10", false, {"a -> b"}, {"(c -> a) -> (c -> b)"}},
        {"LH10'", false, {"a -> b"}, {"(b -> c) -> (a -> c)"}},
        {"LH11", false, {}, {"(a -> (b -> c)) -> ((b | c) -> (a -> c))"}},
        {"LH12", true, {"a -> b"}, {"(c ->[{K}] a) -> (c ->[{K}] b)"}},
        {"LH13", true, {},
         {"(a ->[{K}] (b -> c)) -> (b -> (a ->[{K}] c))",
          "(b -> (a ->[{K}] c)) -> (a ->[{K}] (b -> c))"}},
        {"LH14", true, {}, {"a ->[{K}] a"}},
        {"LH15", false, {},
         {"(a ->[{N}] (a -> b)) -> (a ->[{N}] b)", "(a ->[{N}] b) -> (a ->[{N}] (a -> b))"}},
        {"LH15'", false, {},
         {"(a ->[{N}] (a ->[{N}] b)) -> (a ->[{N}] b)",
          "(a ->[{N}] b) -> (a ->[{N}] (a ->[{N}] b))"}},
        {"LH16", false, {},
         {"(a ->[{N}] (b -> c)) -> ((a ->[{N}] b) -> (a ->[{N}] c))",
          "((a ->[{N}] b) -> (a ->[{N}] c)) -> (a ->[{N}] (b -> c))"}},
        {"LH17", true, {},
         {"(a ->[{N}] (b ->[{K}] c)) -> ((a ->[{N}] b) ->[{K}] (a ->[{N}] c))",
          "((a ->[{N}] b) ->[{K}] (a ->[{N}] c)) -> (a ->[{N}] (b ->[{K}] c))"}},
        {"LH18", false, {"a ->[{N}] b", "b ->[{N}] c"}, {"a ->[{N}] c"}},
        {"LH19", true, {"a ->[{K}] b"}, {"(c -> a) ->[{K}] (c -> b)"}},
        {"LH19'", true, {"a ->[{K}] b"}, {"(b -> c) ->[{K}] (a -> c)"}},
        {"LH20", false, {}, {"D a -> a"}},
        {"LH21", false, {}, {"a ->[{N}] D a"}},
        {"LH22", false, {"a"}, {"D a"}},
        {"LH23", false, {}, {"D(D a -> a)"}},
        {"LH24", false, {}, {"D(D a -> b) -> (D a -> D b)"}},
        {"LH25", false, {"a -> b"}, {"D a -> D b"}},
        {"LH26", false, {"a ->[{N}] b"}, {"D a ->[{N}] D b"}},
        {"LH27", false, {}, {"(D a -> b) -> (a ->[{N}] b)"}},
    };
    return t;
}

std::string fill(std::string s, std::size_t n, std::size_t k) {
    auto rep = [&](const std::string& key, const std::string& val) {
        for (std::size_t p = s.find(key); p != std::string::npos; p = s.find(key, p + val.size()))
            s.replace(p, key.size(), val);
    };
    rep("{N}", nm1(n));
    rep("{K}", std::to_string(k));
    return s;
}

const Template* find_template(const std::string& base) {
    for (const auto& t : templates())
        if (base == t.base) return &t;
    return nullptr;
}

CatalogItem instantiate(const Template& t, std::size_t n, std::size_t k) {
    CatalogItem item;
    item.base = t.base;
    item.name = t.takes_k ? item.base + "[k=" + std::to_string(k) + "]" : item.base;
    for (const char* p : t.premises) item.premises.push_back(parse(fill(p, n, k)));
    for (const char* c : t.conclusions) item.conclusions.push_back(parse(fill(c, n, k)));
    return item;
}

}  // namespace

std::vector<std::string> catalogue_names() {
    std::vector<std::string> out;
    for (const auto& t : templates()) out.emplace_back(t.base);
    return out;
}

bool catalogue_takes_k(const std::string& base) {
    const auto* t = find_template(base);
    if (!t) throw InvalidArgument("unknown catalogue entry '" + base + "'");
    return t->takes_k;
}

std::optional<CatalogItem> catalogue_item(const std::string& base, std::size_t n,
                                          std::optional<std::size_t> k) {
    need_n(n);
    const auto* t = find_template(base);
    if (!t) return std::nullopt;
    if (t->takes_k) {
        if (!k) throw InvalidArgument(base + " needs a k parameter");
        if (*k < 1 || *k > 64) throw InvalidArgument(base + ": k out of range");
        return instantiate(*t, n, *k);
    }
    return instantiate(*t, n, 0);
}

std::vector<CatalogItem> theorem_catalogue(std::size_t n) {
    need_n(n);
    std::vector<CatalogItem> out;
    for (const auto& t : templates()) {
        if (!t.takes_k) {
            out.push_back(instantiate(t, n, 0));
            continue;
        }
        for (std::size_t k = 1; k <= n; ++k) out.push_back(instantiate(t, n, k));
    }
    return out;
}

namespace {

std::vector<Elem> witness_of(const Counterexample& c) {
    std::vector<Elem> w{static_cast<Elem>(c.k)};
    w.insert(w.end(), c.values.begin(), c.values.end());
    return w;
}

}  // namespace

CheckReport soundness_check(std::size_t n) {
    CheckReport rep;
    for (const auto& ax : axioms_LHn(n)) {
        auto v = is_tautology(ax.pattern, n);
        if (!v.holds) rep.add(ax.id + "[n=" + std::to_string(n) + "]", witness_of(*v.counterexample));
    }
    return rep;
}

CheckReport theorem_suite(std::size_t n) {
    CheckReport rep;
    for (const auto& item : theorem_catalogue(n)) {
        for (std::size_t i = 0; i < item.conclusions.size(); ++i) {
            auto v = consequence(item.premises, item.conclusions[i], n);
            if (!v.holds)
                rep.add(i == 0 ? item.name : item.name + " converse", witness_of(*v.counterexample));
        }
    }
    return rep;
}

CheckReport hierarchy_check(std::size_t n) {
    need_n(n);
    CheckReport rep;
    const std::string up = std::to_string(n + 1), at = std::to_string(n);
    for (const auto& ax : axioms_LHn(n + 1)) {
        auto v = is_tautology(ax.pattern, n);
        if (!v.holds) rep.add(ax.id + "[n=" + up + "] at level " + at, witness_of(*v.counterexample));
    }
    // Ax5 of level n, refuted in Ł_{n+1} by a = (n-1)/n, b = 0.
    const auto ax5 = *axiom_schema("AX5", System::LHn, n);
    const auto& big = delta_chain(n + 1);
    const Compiled c(ax5.pattern, {"a", "b"});
    const std::vector<Elem> vals{static_cast<Elem>(n - 1), 0};
    if (c.eval(big, vals) == big.top())
        rep.add("AX5[n=" + at + "] holds in L" + up, {static_cast<Elem>(n + 1), vals[0], vals[1]});
    return rep;
}

Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& vars,
                       const RandomFormulaOptions& opt) {
    if (vars.empty()) throw InvalidArgument("random_formula needs at least one variable");
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    auto leaf = [&]() -> Formula {
        std::vector<int> kinds{0};
        if (opt.allow_top) kinds.push_back(1);
        if (opt.allow_bot) kinds.push_back(2);
        // Variables are weighted up so constants stay rare.
        const std::size_t r = pick(kinds.size() + 3);
        const int kind = r < 4 ? 0 : kinds[r - 3];
        if (kind == 1) return top();
        if (kind == 2) return bot();
        return var(vars[pick(vars.size())]);
    };
    auto go = [&](auto&& self, std::size_t d) -> Formula {
        if (d == 0) return leaf();
        const std::size_t r = pick(opt.allow_delta ? 6 : 5);
        if (r == 0) return leaf();
        if (r == 5) return delta(self(self, d - 1));
        return imp(self(self, d - 1), self(self, d - 1));
    };
    return go(go, opt.max_depth);
}

}  // namespace lukra
