#include "lukra/laws.hpp"

#include <algorithm>

#include "lukra/errors.hpp"

namespace lukra {

namespace {

// "{N1}" -> n-1, "{N}" -> n, "{K}" -> k.
std::string inst(std::string t, std::size_t n, std::size_t k = 0) {
    auto rep = [&](const std::string& key, std::size_t v) {
        for (std::size_t p; (p = t.find(key)) != std::string::npos;)
            t.replace(p, key.size(), std::to_string(v));
    };
    rep("{N1}", n - 1);
    rep("{N}", n);
    rep("{K}", k);
    return t;
}

std::vector<std::string> law_vars(const std::vector<Formula>& fs) {
    static const std::vector<std::string> order{"x", "y", "z", "w"};
    const auto used = variables(fs);
    std::vector<std::string> out;
    for (const auto& v : order)
        if (std::find(used.begin(), used.end(), v) != used.end()) out.push_back(v);
    for (const auto& v : used)
        if (std::find(order.begin(), order.end(), v) == order.end()) out.push_back(v);
    return out;
}

bool next_tuple(std::vector<Elem>& t, std::size_t n) {
    for (std::size_t i = t.size(); i-- > 0;) {
        if (++t[i] < n) return true;
        t[i] = 0;
    }
    return false;
}

}  // namespace

Law identity_law(std::string name, const std::string& lhs, const std::string& rhs) {
    return quasi_law(std::move(name), {}, lhs, rhs);
}

Law quasi_law(std::string name, std::vector<std::pair<std::string, std::string>> hyps,
              const std::string& lhs, const std::string& rhs) {
    Law law;
    law.name = std::move(name);
    law.lhs = parse(lhs);
    law.rhs = parse(rhs);
    std::vector<Formula> all{law.lhs, law.rhs};
    for (auto& [l, r] : hyps) {
        law.hyps.emplace_back(parse(l), parse(r));
        all.push_back(law.hyps.back().first);
        all.push_back(law.hyps.back().second);
    }
    law.vars = law_vars(all);
    return law;
}

CheckReport check_law(const FiniteAlgebra& a, const Law& law, bool all) {
    if (law.custom) return law.custom(a);
    const Compiled lhs(law.lhs, law.vars), rhs(law.rhs, law.vars);
    std::vector<std::pair<Compiled, Compiled>> hyps;
    for (const auto& [l, r] : law.hyps) hyps.emplace_back(Compiled(l, law.vars), Compiled(r, law.vars));
    CheckReport rep;
    std::vector<Elem> t(law.vars.size(), 0);
    do {
        bool guarded = true;
        for (const auto& [l, r] : hyps)
            if (l.eval(a, t) != r.eval(a, t)) {
                guarded = false;
                break;
            }
        if (guarded && lhs.eval(a, t) != rhs.eval(a, t)) {
            rep.add(law.name, t);
            if (!all) break;
        }
    } while (next_tuple(t, a.size()));
    return rep;
}

CheckReport check_laws(const FiniteAlgebra& a, const std::vector<Law>& laws) {
    CheckReport rep;
    for (const auto& l : laws) rep.merge(check_law(a, l));
    return rep;
}

std::vector<Law> lr_axioms() {
    return {
        identity_law("L1", "x -> (y -> x)", "T"),
        identity_law("L2", "(x -> y) -> ((y -> z) -> (x -> z))", "T"),
        identity_law("L3", "(x -> y) -> y", "(y -> x) -> x"),
        identity_law("L4", "((x -> y) -> (y -> x)) -> (y -> x)", "T"),
        identity_law("L5", "T -> x", "x"),
    };
}

Law ln_axiom(std::size_t n) {
    if (n < 2) throw InvalidArgument("n must be >= 2");
    return identity_law("L6", inst("(x ->[{N1}] y) | x", n), "T");
}

std::vector<Law> delta_axioms(std::size_t n) {
    if (n < 2) throw InvalidArgument("n must be >= 2");
    return {
        identity_law("DL1", "D x -> y", inst("x ->[{N1}] y", n)),
        identity_law("DL2", "D(D x -> y)", "D x -> D y"),
    };
}

namespace {

Law tarskian_equals_image(std::string name) {
    Law law;
    law.name = name;
    law.custom = [name](const FiniteAlgebra& a) {
        CheckReport rep;
        std::vector<char> image(a.size(), 0);
        for (Elem x = 0; x < a.size(); ++x) image[a.delta(x)] = 1;
        for (Elem x = 0; x < a.size(); ++x)
            if (static_cast<bool>(image[x]) != is_tarskian(a, x)) {
                rep.add(name, {x});
                break;
            }
        return rep;
    };
    return law;
}

// z Tarskian and z <= x imply z <= Δx.
Law greatest_tarskian_below(std::string name) {
    Law law;
    law.name = name;
    law.custom = [name](const FiniteAlgebra& a) {
        CheckReport rep;
        const auto ts = tarskian_elements(a);
        for (Elem x = 0; x < a.size(); ++x)
            for (Elem z : ts)
                if (leq(a, z, x) && !leq(a, z, a.delta(x))) {
                    rep.add(name, {x, z});
                    return rep;
                }
        return rep;
    };
    return law;
}

}  // namespace

std::vector<Law> quasi_axioms() {
    return {
        identity_law("DLR1", "D x -> x", "T"),
        identity_law("DLR2", "D x -> y", "D x -> (D x -> y)"),
        greatest_tarskian_below("DLR3"),
        identity_law("DLR4", "D(x -> z) -> (D x -> D z)", "T"),
    };
}

std::vector<Law> derived_laws(std::size_t n) {
    if (n < 2) throw InvalidArgument("n must be >= 2");
    std::vector<Law> out{
        identity_law("L7", "x -> T", "T"),
        quasi_law("L8", {{"x -> y", "T"}}, "(y -> z) -> (x -> z)", "T"),
        identity_law("L9", "x -> (y -> z)", "y -> (x -> z)"),
        identity_law("L10", "x -> x", "T"),
    };
    for (std::size_t k = 0; k <= n; ++k)
        out.push_back(quasi_law(inst("L11[k={K}]", n, k), {{"x -> y", "T"}},
                                inst("(z ->[{K}] x) -> (z ->[{K}] y)", n, k), "T"));
    out.push_back(identity_law("L12", "y -> (x -> y)", "T"));
    out.push_back(identity_law("L13", "((x -> y) -> (x -> z)) -> (x -> (y -> z))", "T"));
    out.push_back(identity_law("L14", "(x | y) -> y", "x -> y"));
    out.push_back(identity_law("L15", "(x -> y) -> ((z -> x) -> (z -> y))", "T"));
    for (std::size_t k = 0; k <= n; ++k)
        out.push_back(identity_law(inst("L16[k={K}]", n, k), inst("x ->[{K}] (y -> z)", n, k),
                                   inst("y -> (x ->[{K}] z)", n, k)));
    out.push_back(identity_law("L17", inst("x ->[{N1}] (y -> z)", n),
                               inst("(x ->[{N1}] y) -> (x ->[{N1}] z)", n)));
    for (std::size_t k = 0; k <= n; ++k)
        out.push_back(identity_law(inst("L18[k={K}]", n, k), inst("T ->[{K}] x", n, k), "x"));
    for (std::size_t k = 0; k <= n; ++k)
        out.push_back(identity_law(inst("L19[k={K}]", n, k), inst("x ->[{K}] T", n, k), "T"));
    for (std::size_t k = 1; k <= n; ++k)
        out.push_back(identity_law(inst("L20[k={K}]", n, k), inst("x ->[{K}] x", n, k), "T"));
    out.push_back(identity_law("L21", inst("x ->[{N1}] (y ->[{N1}] z)", n),
                               inst("(x ->[{N1}] y) ->[{N1}] (x ->[{N1}] z)", n)));
    out.push_back(identity_law("L22", inst("x ->[{N1}] (y ->[{N1}] x)", n), "T"));
    out.push_back(identity_law("L23", inst("((x ->[{N1}] y) ->[{N1}] x) ->[{N1}] x", n), "T"));
    return out;
}

std::vector<Law> delta_laws(std::size_t n) {
    if (n < 2) throw InvalidArgument("n must be >= 2");
    return {
        identity_law("DL3", "D x -> x", "T"),
        identity_law("DL4", inst("x ->[{N1}] D x", n), "T"),
        identity_law("DL5", "D T", "T"),
        identity_law("DL6", "D D x", "D x"),
        identity_law("DL7", "D(D x -> D y)", "D x -> D y"),
        identity_law("DL8", "D x -> y", "D x -> (D x -> y)"),
        tarskian_equals_image("DL9"),
        identity_law("DL10", "D x -> (y -> z)", "(D x -> y) -> (D x -> z)"),
        quasi_law("DL11", {{"x -> y", "T"}}, "D x -> D y", "T"),
        identity_law("DL12", inst("D(x ->[{N}] y)", n), "D x -> D y"),
        identity_law("DL13", "D x -> D(x -> D x)", "T"),
        identity_law("DL14", "D x -> D(x -> y)", "D x -> D y"),
        identity_law("DL15", "D(x -> y) -> (D x -> D y)", "T"),
    };
}

std::vector<Law> quasi_derived_laws() {
    return {
        identity_law("DLR5", "D T", "T"),
        quasi_law("DLR6", {{"x -> y", "T"}}, "D x -> D y", "T"),
        identity_law("DLR7", "D D x", "D x"),
        identity_law("DLR8", "D(D x -> D y)", "D x -> D y"),
        tarskian_equals_image("DLR9"),
        identity_law("DLR10", "D x -> (y -> z)", "(D x -> y) -> (D x -> z)"),
        identity_law("DLR11", "D x -> D(x -> D x)", "T"),
        identity_law("DLR12", "D x -> D(x -> y)", "D x -> D y"),
    };
}

namespace {

void require_delta(const FiniteAlgebra& a) {
    if (!a.has_delta())
        throw ConfigurationError("algebra '" + a.label() + "' has no delta table");
}

}  // namespace

CheckReport check_LR(const FiniteAlgebra& a) { return check_laws(a, lr_axioms()); }

CheckReport check_LRn(const FiniteAlgebra& a, std::size_t n) {
    CheckReport rep = check_LR(a);
    rep.merge(check_law(a, ln_axiom(n)));
    return rep;
}

CheckReport check_delta(const FiniteAlgebra& a, std::size_t n) {
    require_delta(a);
    return check_laws(a, delta_axioms(n));
}

CheckReport check_LRdelta_quasi(const FiniteAlgebra& a) {
    require_delta(a);
    return check_laws(a, quasi_axioms());
}

CheckReport check_identity(const FiniteAlgebra& a, const Formula& lhs, const Formula& rhs) {
    Law law;
    law.name = print(lhs) + " = " + print(rhs);
    law.lhs = lhs;
    law.rhs = rhs;
    law.vars = law_vars({lhs, rhs});
    if (law.vars.size() > 4) throw InvalidArgument("identity checks support at most 4 variables");
    if ((contains_delta(lhs) || contains_delta(rhs)) && !a.has_delta())
        throw ConfigurationError("identity uses D but algebra '" + a.label() + "' has no delta");
    return check_law(a, law, true);
}

CheckReport check_property_suite(const FiniteAlgebra& a, std::size_t n) {
    CheckReport rep = check_laws(a, derived_laws(n));
    if (a.has_delta()) {
        rep.merge(check_laws(a, delta_laws(n)));
        rep.merge(check_laws(a, quasi_derived_laws()));
    }
    return rep;
}

CheckReport check_stabilization(const FiniteAlgebra& a, std::size_t n, std::size_t extra) {
    CheckReport rep;
    for (Elem x = 0; x < a.size(); ++x)
        for (Elem y = 0; y < a.size(); ++y) {
            const Elem base = imp_k(a, x, y, n - 1);
            for (std::size_t j = 0; j <= extra; ++j)
                if (imp_k(a, x, y, n + j) != base) {
                    rep.add("stabilization[j=" + std::to_string(j) + "]", {x, y});
                    return rep;
                }
        }
    return rep;
}

std::optional<std::size_t> min_n(const FiniteAlgebra& a) {
    if (!check_LR(a).passed())
        throw PreconditionError("min_n needs an algebra satisfying L1-L5");
    for (std::size_t n = 2; n <= a.size() + 1; ++n)
        if (check_law(a, ln_axiom(n)).passed()) return n;
    return std::nullopt;
}

DeltaAdmissibility delta_admissible(const FiniteAlgebra& a) {
    if (!min_n(a)) throw PreconditionError("delta_admissible needs an LR_n algebra");
    DeltaAdmissibility out;
    std::vector<Elem> d(a.size());
    for (Elem x = 0; x < a.size(); ++x) {
        const auto tx = t_below(a, x);
        std::optional<Elem> best;
        for (Elem t : tx)
            if (std::all_of(tx.begin(), tx.end(), [&](Elem s) { return leq(a, s, t); })) {
                best = t;
                break;
            }
        if (!best) {
            out.witness = x;
            return out;
        }
        d[x] = *best;
    }
    out.delta = std::move(d);
    return out;
}

}  // namespace lukra
