#include "lukra/algebra.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "lukra/errors.hpp"

namespace lukra {

FiniteAlgebra::FiniteAlgebra(std::size_t size, std::vector<Elem> imp, Elem top,
                             std::optional<std::vector<Elem>> delta, std::optional<Elem> bottom,
                             std::string label)
    : n_(size),
      imp_(std::move(imp)),
      top_(top),
      delta_(std::move(delta)),
      bottom_(bottom),
      label_(std::move(label)) {
    if (n_ == 0) throw InvalidArgument("algebra must have a nonempty carrier");
    if (imp_.size() != n_ * n_)
        throw InvalidArgument("implication table has " + std::to_string(imp_.size()) +
                              " entries, expected " + std::to_string(n_ * n_));
    for (Elem e : imp_)
        if (e >= n_) throw InvalidArgument("implication entry out of range: " + std::to_string(e));
    if (top_ >= n_) throw InvalidArgument("top out of range");
    if (delta_) {
        if (delta_->size() != n_) throw InvalidArgument("delta table has wrong length");
        for (Elem e : *delta_)
            if (e >= n_) throw InvalidArgument("delta entry out of range: " + std::to_string(e));
    }
    if (bottom_) {
        if (*bottom_ >= n_) throw InvalidArgument("bottom out of range");
        for (Elem x = 0; x < n_; ++x)
            if (this->imp(*bottom_, x) != top_)
                throw InvalidArgument("bottom -> " + std::to_string(x) + " is not top");
    }
}

Elem FiniteAlgebra::delta(Elem x) const {
    if (!delta_) throw ConfigurationError("algebra '" + label_ + "' has no delta table");
    return (*delta_)[x];
}

FiniteAlgebra FiniteAlgebra::with_delta(std::vector<Elem> delta) const {
    return FiniteAlgebra(n_, imp_, top_, std::move(delta), bottom_, label_);
}

FiniteAlgebra FiniteAlgebra::without_delta() const {
    return FiniteAlgebra(n_, imp_, top_, std::nullopt, bottom_, label_);
}

FiniteAlgebra FiniteAlgebra::with_bottom(std::optional<Elem> bottom) const {
    return FiniteAlgebra(n_, imp_, top_, delta_, bottom, label_);
}

FiniteAlgebra FiniteAlgebra::with_label(std::string label) const {
    return FiniteAlgebra(n_, imp_, top_, delta_, bottom_, std::move(label));
}

std::string CheckReport::summary() const {
    if (passed()) return "ok";
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) os << "; ";
        os << violations[i].law << "(";
        for (std::size_t j = 0; j < violations[i].witness.size(); ++j)
            os << (j ? "," : "") << violations[i].witness[j];
        os << ")";
    }
    return os.str();
}

FiniteAlgebra make_chain(std::size_t n, bool with_delta, bool with_bottom) {
    if (n < 2) throw InvalidArgument("chain needs n >= 2, got " + std::to_string(n));
    const Elem top = static_cast<Elem>(n - 1);
    std::vector<Elem> imp(n * n);
    for (Elem i = 0; i < n; ++i)
        for (Elem j = 0; j < n; ++j) imp[i * n + j] = std::min<Elem>(top, top - i + j);
    std::optional<std::vector<Elem>> delta;
    if (with_delta) {
        delta.emplace(n, 0);
        (*delta)[top] = top;
    }
    std::optional<Elem> bottom;
    if (with_bottom) bottom = 0;
    return FiniteAlgebra(n, std::move(imp), top, std::move(delta), bottom,
                         "L" + std::to_string(n) + (with_delta ? "D" : ""));
}

Elem imp_k(const FiniteAlgebra& a, Elem x, Elem y, std::size_t k) {
    Elem r = y;
    for (std::size_t i = 0; i < k; ++i) r = a.imp(x, r);
    return r;
}

bool leq(const FiniteAlgebra& a, Elem x, Elem y) { return a.imp(x, y) == a.top(); }

Elem join(const FiniteAlgebra& a, Elem x, Elem y) { return a.imp(a.imp(x, y), y); }

Elem neg(const FiniteAlgebra& a, Elem x) {
    if (!a.bottom()) throw ConfigurationError("negation needs a bottom element");
    return a.imp(x, *a.bottom());
}

bool is_chain(const FiniteAlgebra& a) {
    for (Elem x = 0; x < a.size(); ++x)
        for (Elem y = x + 1; y < a.size(); ++y)
            if (!leq(a, x, y) && !leq(a, y, x)) return false;
    return true;
}

bool is_tarskian(const FiniteAlgebra& a, Elem t) {
    for (Elem y = 0; y < a.size(); ++y)
        if (a.imp(t, y) != a.imp(t, a.imp(t, y))) return false;
    return true;
}

std::vector<Elem> tarskian_elements(const FiniteAlgebra& a) {
    std::vector<Elem> out;
    for (Elem t = 0; t < a.size(); ++t)
        if (is_tarskian(a, t)) out.push_back(t);
    return out;
}

std::vector<Elem> t_below(const FiniteAlgebra& a, Elem x) {
    std::vector<Elem> out;
    for (Elem t : tarskian_elements(a))
        if (leq(a, t, x)) out.push_back(t);
    return out;
}

std::vector<Elem> product_coords(const std::vector<std::size_t>& sizes, Elem index) {
    std::vector<Elem> c(sizes.size());
    for (std::size_t i = sizes.size(); i-- > 0;) {
        c[i] = static_cast<Elem>(index % sizes[i]);
        index = static_cast<Elem>(index / sizes[i]);
    }
    return c;
}

Elem product_index(const std::vector<std::size_t>& sizes, const std::vector<Elem>& coords) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) idx = idx * sizes[i] + coords[i];
    return static_cast<Elem>(idx);
}

FiniteAlgebra product(const std::vector<FiniteAlgebra>& factors) {
    if (factors.empty())
        return FiniteAlgebra(1, {0}, 0, std::vector<Elem>{0}, Elem{0}, "1");
    const bool d = factors.front().has_delta();
    bool all_bottom = true;
    std::vector<std::size_t> sizes;
    std::size_t total = 1;
    std::string label;
    for (const auto& f : factors) {
        if (f.has_delta() != d) throw SignatureMismatch("product factors disagree on delta");
        all_bottom = all_bottom && f.bottom().has_value();
        sizes.push_back(f.size());
        total *= f.size();
        if (total > (1u << 24)) throw SizeError("product too large");
        label += (label.empty() ? "" : "x") + f.label();
    }
    std::vector<std::vector<Elem>> coords(total);
    for (Elem i = 0; i < total; ++i) coords[i] = product_coords(sizes, i);
    std::vector<Elem> imp(total * total);
    std::vector<Elem> c(sizes.size());
    for (Elem x = 0; x < total; ++x)
        for (Elem y = 0; y < total; ++y) {
            for (std::size_t f = 0; f < sizes.size(); ++f)
                c[f] = factors[f].imp(coords[x][f], coords[y][f]);
            imp[x * total + y] = product_index(sizes, c);
        }
    std::optional<std::vector<Elem>> delta;
    if (d) {
        delta.emplace(total);
        for (Elem x = 0; x < total; ++x) {
            for (std::size_t f = 0; f < sizes.size(); ++f) c[f] = factors[f].delta(coords[x][f]);
            (*delta)[x] = product_index(sizes, c);
        }
    }
    for (std::size_t f = 0; f < sizes.size(); ++f) c[f] = factors[f].top();
    const Elem top = product_index(sizes, c);
    std::optional<Elem> bottom;
    if (all_bottom) {
        for (std::size_t f = 0; f < sizes.size(); ++f) c[f] = *factors[f].bottom();
        bottom = product_index(sizes, c);
    }
    return FiniteAlgebra(total, std::move(imp), top, std::move(delta), bottom, label);
}

namespace {

// Worklist closure.  on_new is called for every element in discovery order
// together with how it was produced.
enum class Origin { Top, Seed, Imp, Delta };

void closure_walk(const FiniteAlgebra& a, std::vector<char>& in, std::vector<Elem>& members,
                  std::size_t from,
                  const std::function<void(Elem, Origin, Elem, Elem)>& on_new) {
    auto add = [&](Elem e, Origin o, Elem p, Elem q) {
        if (in[e]) return;
        in[e] = 1;
        members.push_back(e);
        on_new(e, o, p, q);
    };
    for (std::size_t i = from; i < members.size(); ++i) {
        const Elem z = members[i];
        for (std::size_t j = 0; j <= i; ++j) {
            const Elem w = members[j];
            add(a.imp(z, w), Origin::Imp, z, w);
            add(a.imp(w, z), Origin::Imp, w, z);
        }
        if (a.has_delta()) add(a.delta(z), Origin::Delta, z, z);
    }
}

}  // namespace

std::vector<Elem> subalgebra_closure(const FiniteAlgebra& a, const std::vector<Elem>& seed) {
    std::vector<char> in(a.size(), 0);
    std::vector<Elem> members;
    auto noop = [](Elem, Origin, Elem, Elem) {};
    in[a.top()] = 1;
    members.push_back(a.top());
    for (Elem s : seed) {
        if (s >= a.size()) throw InvalidArgument("seed element out of range");
        if (!in[s]) {
            in[s] = 1;
            members.push_back(s);
        }
    }
    closure_walk(a, in, members, 0, noop);
    std::sort(members.begin(), members.end());
    return members;
}

bool is_subuniverse(const FiniteAlgebra& a, const std::vector<Elem>& subset) {
    std::vector<char> in(a.size(), 0);
    for (Elem e : subset) in[e] = 1;
    if (!in[a.top()]) return false;
    for (Elem x : subset) {
        if (a.has_delta() && !in[a.delta(x)]) return false;
        for (Elem y : subset)
            if (!in[a.imp(x, y)]) return false;
    }
    return true;
}

Subalgebra subalgebra(const FiniteAlgebra& a, std::vector<Elem> subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    if (!is_subuniverse(a, subset)) throw InvalidArgument("subset is not a subuniverse");
    std::vector<Elem> pos(a.size(), static_cast<Elem>(-1));
    for (Elem i = 0; i < subset.size(); ++i) pos[subset[i]] = i;
    const std::size_t m = subset.size();
    std::vector<Elem> imp(m * m);
    for (Elem i = 0; i < m; ++i)
        for (Elem j = 0; j < m; ++j) imp[i * m + j] = pos[a.imp(subset[i], subset[j])];
    std::optional<std::vector<Elem>> delta;
    if (a.has_delta()) {
        delta.emplace(m);
        for (Elem i = 0; i < m; ++i) (*delta)[i] = pos[a.delta(subset[i])];
    }
    std::optional<Elem> bottom;
    if (a.bottom() && pos[*a.bottom()] != static_cast<Elem>(-1)) bottom = pos[*a.bottom()];
    return {FiniteAlgebra(m, std::move(imp), pos[a.top()], std::move(delta), bottom,
                          "sub(" + a.label() + ")"),
            subset};
}

std::vector<Elem> generating_set(const FiniteAlgebra& a) {
    std::vector<char> in(a.size(), 0);
    std::vector<Elem> members{a.top()};
    in[a.top()] = 1;
    auto noop = [](Elem, Origin, Elem, Elem) {};
    closure_walk(a, in, members, 0, noop);
    std::vector<Elem> gens;
    for (Elem x = 0; x < a.size(); ++x) {
        if (in[x]) continue;
        gens.push_back(x);
        const std::size_t from = members.size();
        in[x] = 1;
        members.push_back(x);
        closure_walk(a, in, members, from, noop);
    }
    return gens;
}

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, const Map& h) {
    if (h.size() != a.size()) return false;
    for (Elem e : h)
        if (e >= b.size()) return false;
    if (h[a.top()] != b.top()) return false;
    if (a.bottom() && b.bottom() && h[*a.bottom()] != *b.bottom()) return false;
    const bool d = a.has_delta() && b.has_delta();
    for (Elem x = 0; x < a.size(); ++x) {
        if (d && h[a.delta(x)] != b.delta(h[x])) return false;
        for (Elem y = 0; y < a.size(); ++y)
            if (h[a.imp(x, y)] != b.imp(h[x], h[y])) return false;
    }
    return true;
}

namespace {

struct Step {
    Elem elem;
    Origin origin;
    Elem p, q;
};

// Discovery plan: stage 0 is the closure of {top}; stage s adds generator s-1.
struct GenPlan {
    std::vector<Elem> gens;
    std::vector<std::vector<Step>> stages;
};

GenPlan make_plan(const FiniteAlgebra& a) {
    GenPlan plan;
    std::vector<char> in(a.size(), 0);
    std::vector<Elem> members;
    std::vector<Step>* cur = nullptr;
    auto record = [&](Elem e, Origin o, Elem p, Elem q) { cur->push_back({e, o, p, q}); };
    plan.stages.emplace_back();
    cur = &plan.stages.back();
    in[a.top()] = 1;
    members.push_back(a.top());
    cur->push_back({a.top(), Origin::Top, 0, 0});
    closure_walk(a, in, members, 0, record);
    for (Elem x = 0; x < a.size(); ++x) {
        if (in[x]) continue;
        plan.gens.push_back(x);
        plan.stages.emplace_back();
        cur = &plan.stages.back();
        const std::size_t from = members.size();
        in[x] = 1;
        members.push_back(x);
        cur->push_back({x, Origin::Seed, 0, 0});
        closure_walk(a, in, members, from, record);
    }
    return plan;
}

class HomSearch {
public:
    HomSearch(const FiniteAlgebra& a, const FiniteAlgebra& b, bool injective, bool surjective,
              std::size_t limit)
        : a_(a), b_(b), injective_(injective), surjective_(surjective), limit_(limit),
          plan_(make_plan(a)), h_(a.size(), kUnset), used_(b.size(), 0) {
        if (a.has_delta() != b.has_delta())
            throw SignatureMismatch("homomorphism search needs both algebras with or without delta");
        check_bottom_ = a.bottom().has_value() && b.bottom().has_value();
    }

    std::vector<Map> run() {
        stage(0, kUnset);
        return std::move(found_);
    }

private:
    static constexpr Elem kUnset = static_cast<Elem>(-1);

    bool assign(Elem e, Elem v, std::vector<Elem>& touched) {
        if (injective_ && used_[v]) return false;
        h_[e] = v;
        ++used_[v];
        touched.push_back(e);
        return true;
    }

    bool consistent(const std::vector<Elem>& fresh) {
        for (Elem e : fresh) {
            if (check_bottom_ && e == *a_.bottom() && h_[e] != *b_.bottom()) return false;
            if (a_.has_delta() && h_[a_.delta(e)] != b_.delta(h_[e])) return false;
            for (Elem w : done_) {
                if (h_[a_.imp(e, w)] != b_.imp(h_[e], h_[w])) return false;
                if (h_[a_.imp(w, e)] != b_.imp(h_[w], h_[e])) return false;
            }
        }
        return true;
    }

    void undo(const std::vector<Elem>& touched, std::size_t done_size) {
        for (Elem e : touched) {
            --used_[h_[e]];
            h_[e] = kUnset;
        }
        done_.resize(done_size);
    }

    void stage(std::size_t s, Elem gen_image) {
        if (found_.size() >= limit_) return;
        if (s == plan_.stages.size()) {
            if (surjective_) {
                for (Elem v = 0; v < b_.size(); ++v)
                    if (!used_[v]) return;
            }
            found_.push_back(h_);
            return;
        }
        std::vector<Elem> touched;
        const std::size_t done_size = done_.size();
        bool ok = true;
        for (const Step& st : plan_.stages[s]) {
            Elem v = 0;
            switch (st.origin) {
                case Origin::Top: v = b_.top(); break;
                case Origin::Seed: v = gen_image; break;
                case Origin::Imp: v = b_.imp(h_[st.p], h_[st.q]); break;
                case Origin::Delta: v = b_.delta(h_[st.p]); break;
            }
            if (!assign(st.elem, v, touched)) {
                ok = false;
                break;
            }
            done_.push_back(st.elem);
        }
        if (ok) {
            std::vector<Elem> fresh;
            for (const Step& st : plan_.stages[s]) fresh.push_back(st.elem);
            ok = consistent(fresh);
        }
        if (ok) {
            if (s + 1 < plan_.stages.size()) {
                for (Elem v = 0; v < b_.size(); ++v) stage(s + 1, v);
            } else {
                stage(s + 1, kUnset);
            }
        }
        undo(touched, done_size);
    }

    const FiniteAlgebra& a_;
    const FiniteAlgebra& b_;
    bool injective_, surjective_;
    std::size_t limit_;
    bool check_bottom_ = false;
    GenPlan plan_;
    Map h_;
    std::vector<int> used_;
    std::vector<Elem> done_;
    std::vector<Map> found_;
};

}  // namespace

std::vector<Map> homomorphisms(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    return HomSearch(a, b, false, false, static_cast<std::size_t>(-1)).run();
}

std::vector<Map> epimorphisms(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    if (b.size() > a.size()) return {};
    return HomSearch(a, b, false, true, static_cast<std::size_t>(-1)).run();
}

std::optional<Map> is_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    if (a.size() != b.size() || a.has_delta() != b.has_delta()) return std::nullopt;
    auto found = HomSearch(a, b, true, true, 1).run();
    if (found.empty()) return std::nullopt;
    return found.front();
}

}  // namespace lukra
