#include "lukra/fo.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "lukra/errors.hpp"

namespace lukra::fo {

namespace {

Formula make(Kind k, std::string name = {}, std::vector<Term> args = {}, Formula l = nullptr,
             Formula r = nullptr) {
    return std::make_shared<const Node>(Node{k, std::move(name), std::move(args), std::move(l), std::move(r)});
}

}  // namespace

Formula pred(std::string name, std::vector<Term> args) { return make(Kind::Pred, std::move(name), std::move(args)); }
Formula eq(Term a, Term b) { return make(Kind::Eq, {}, {std::move(a), std::move(b)}); }
Formula top() { return make(Kind::Top); }
Formula bot() { return make(Kind::Bot); }
Formula imp(Formula a, Formula b) { return make(Kind::Imp, {}, {}, std::move(a), std::move(b)); }
Formula delta(Formula a) { return make(Kind::Delta, {}, {}, std::move(a)); }
Formula forall(std::string x, Formula a) { return make(Kind::Forall, std::move(x), {}, std::move(a)); }
Formula exists(std::string x, Formula a) { return make(Kind::Exists, std::move(x), {}, std::move(a)); }

bool equal(const Formula& a, const Formula& b) {
    if (a == b) return true;
    if (a->kind != b->kind || a->name != b->name || a->args != b->args) return false;
    if (static_cast<bool>(a->lhs) != static_cast<bool>(b->lhs)) return false;
    if (a->lhs && !equal(a->lhs, b->lhs)) return false;
    if (static_cast<bool>(a->rhs) != static_cast<bool>(b->rhs)) return false;
    return !a->rhs || equal(a->rhs, b->rhs);
}

namespace {

std::size_t table_size(std::size_t domain, std::size_t arity) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < arity; ++i) {
        if (n > (std::size_t{1} << 24) / std::max<std::size_t>(domain, 1))
            throw InvalidArgument("table too large");
        n *= domain;
    }
    return n;
}

Elem least(const FiniteAlgebra& a) {
    if (a.bottom()) return *a.bottom();
    for (Elem x = 0; x < a.size(); ++x) {
        bool below_all = true;
        for (Elem y = 0; y < a.size() && below_all; ++y) below_all = leq(a, x, y);
        if (below_all) return x;
    }
    throw InvalidArgument("algebra has no least element");
}

}  // namespace

void validate(const Structure& s) {
    if (s.domain == 0) throw InvalidArgument("domain must be nonempty");
    if (!is_chain(s.algebra)) throw InvalidArgument("structure algebra must be a chain");
    for (const auto& [name, t] : s.predicates) {
        if (t.values.size() != table_size(s.domain, t.arity))
            throw InvalidArgument("predicate " + name + ": table has the wrong size");
        for (Elem v : t.values)
            if (v >= s.algebra.size()) throw InvalidArgument("predicate " + name + ": value out of range");
    }
    for (const auto& [name, t] : s.functions) {
        if (t.values.size() != table_size(s.domain, t.arity))
            throw InvalidArgument("function " + name + ": table has the wrong size");
        for (Elem v : t.values)
            if (v >= s.domain) throw InvalidArgument("function " + name + ": value outside the domain");
    }
}

namespace {

std::size_t row(const Structure& s, const std::vector<Elem>& args) {
    std::size_t r = 0;
    for (Elem a : args) r = r * s.domain + a;
    return r;
}

}  // namespace

Elem eval_term(const Term& t, const Structure& s, const Assignment& v) {
    if (t.args.empty()) {
        if (auto it = v.find(t.name); it != v.end()) {
            if (it->second >= s.domain) throw InvalidArgument("variable " + t.name + " is outside the domain");
            return it->second;
        }
    }
    auto it = s.functions.find(t.name);
    if (it == s.functions.end())
        throw InvalidArgument(t.args.empty() ? "unbound variable or constant " + t.name
                                             : "unknown function symbol " + t.name);
    if (it->second.arity != t.args.size())
        throw InvalidArgument("function " + t.name + " applied to the wrong number of arguments");
    std::vector<Elem> args;
    for (const auto& a : t.args) args.push_back(eval_term(a, s, v));
    return it->second.values[row(s, args)];
}

Elem eval(const Formula& f, const Structure& s, const Assignment& v) {
    const auto& a = s.algebra;
    switch (f->kind) {
        case Kind::Pred: {
            auto it = s.predicates.find(f->name);
            if (it == s.predicates.end()) throw InvalidArgument("unknown predicate symbol " + f->name);
            if (it->second.arity != f->args.size())
                throw InvalidArgument("predicate " + f->name + " applied to the wrong number of arguments");
            std::vector<Elem> args;
            for (const auto& t : f->args) args.push_back(eval_term(t, s, v));
            return it->second.values[row(s, args)];
        }
        case Kind::Eq:
            return eval_term(f->args[0], s, v) == eval_term(f->args[1], s, v) ? a.top() : least(a);
        case Kind::Top: return a.top();
        case Kind::Bot: return least(a);
        case Kind::Imp: return a.imp(eval(f->lhs, s, v), eval(f->rhs, s, v));
        case Kind::Delta: return a.delta(eval(f->lhs, s, v));
        case Kind::Forall:
        case Kind::Exists: {
            Assignment w = v;
            std::optional<Elem> acc;
            for (Elem d = 0; d < s.domain; ++d) {
                w[f->name] = d;
                const Elem x = eval(f->lhs, s, w);
                if (!acc) acc = x;
                else if (f->kind == Kind::Forall ? leq(a, x, *acc) : leq(a, *acc, x)) acc = x;
            }
            return *acc;
        }
    }
    throw InternalError("unknown first-order node");
}

namespace {

void term_vars(const Term& t, std::set<std::string>& out) {
    if (t.args.empty()) out.insert(t.name);
    for (const auto& a : t.args) term_vars(a, out);
}

void free_vars(const Formula& f, std::set<std::string> bound, std::set<std::string>& out) {
    switch (f->kind) {
        case Kind::Pred:
        case Kind::Eq: {
            std::set<std::string> vs;
            for (const auto& t : f->args) term_vars(t, vs);
            for (const auto& x : vs)
                if (!bound.count(x)) out.insert(x);
            return;
        }
        case Kind::Top:
        case Kind::Bot: return;
        case Kind::Imp:
            free_vars(f->lhs, bound, out);
            free_vars(f->rhs, bound, out);
            return;
        case Kind::Delta: free_vars(f->lhs, bound, out); return;
        case Kind::Forall:
        case Kind::Exists:
            bound.insert(f->name);
            free_vars(f->lhs, bound, out);
            return;
    }
}

Term subst_term(const Term& t, const std::string& x, const Term& r) {
    if (t.args.empty()) return t.name == x ? r : t;
    Term out{t.name, {}};
    for (const auto& a : t.args) out.args.push_back(subst_term(a, x, r));
    return out;
}

bool occurs_free(const Formula& f, const std::string& x) {
    std::set<std::string> out;
    free_vars(f, {}, out);
    return out.count(x) > 0;
}

bool free_for_rec(const Formula& f, const std::string& x, const std::set<std::string>& tv) {
    switch (f->kind) {
        case Kind::Pred:
        case Kind::Eq:
        case Kind::Top:
        case Kind::Bot: return true;
        case Kind::Imp: return free_for_rec(f->lhs, x, tv) && free_for_rec(f->rhs, x, tv);
        case Kind::Delta: return free_for_rec(f->lhs, x, tv);
        case Kind::Forall:
        case Kind::Exists:
            if (f->name == x) return true;
            if (tv.count(f->name) && occurs_free(f->lhs, x)) return false;
            return free_for_rec(f->lhs, x, tv);
    }
    return true;
}

Formula subst(const Formula& f, const std::string& x, const Term& t) {
    switch (f->kind) {
        case Kind::Pred:
        case Kind::Eq: {
            std::vector<Term> args;
            for (const auto& a : f->args) args.push_back(subst_term(a, x, t));
            return make(f->kind, f->name, std::move(args));
        }
        case Kind::Top:
        case Kind::Bot: return f;
        case Kind::Imp: return imp(subst(f->lhs, x, t), subst(f->rhs, x, t));
        case Kind::Delta: return delta(subst(f->lhs, x, t));
        case Kind::Forall:
        case Kind::Exists:
            if (f->name == x) return f;
            return make(f->kind, f->name, {}, subst(f->lhs, x, t));
    }
    return f;
}

}  // namespace

std::vector<std::string> free_variables(const Formula& f) {
    std::set<std::string> out;
    free_vars(f, {}, out);
    return {out.begin(), out.end()};
}

std::vector<std::string> term_variables(const Term& t) {
    std::set<std::string> out;
    term_vars(t, out);
    return {out.begin(), out.end()};
}

bool free_for(const Formula& f, const std::string& x, const Term& t) {
    std::set<std::string> tv;
    term_vars(t, tv);
    return free_for_rec(f, x, tv);
}

Formula substitute(const Formula& f, const std::string& x, const Term& t) {
    if (!free_for(f, x, t)) throw InvalidArgument(print(t) + " is not free for " + x);
    return subst(f, x, t);
}

namespace {

enum class Tok { Ident, Arrow, ArrowK, Or, And, Not, Delta, Top, Bot, Forall, Exists, Eq, Comma, Dot, LParen, RParen, End };

struct Token {
    Tok tok;
    std::string text;
    std::size_t k = 0;
    std::size_t pos = 0;
};

struct Symbol {
    const char* utf8;
    Tok tok;
};

const Symbol kUnicode[] = {
    {"\xE2\x86\x92", Tok::Arrow},   // →
    {"\xE2\x86\xA3", Tok::Arrow},   // ↣
    {"\xCE\x94", Tok::Delta},       // Δ
    {"\xE2\x88\xA8", Tok::Or},      // ∨
    {"\xE2\x88\xA7", Tok::And},     // ∧
    {"\xC2\xAC", Tok::Not},         // ¬
    {"\xE2\x8A\xA4", Tok::Top},     // ⊤
    {"\xE2\x8A\xA5", Tok::Bot},     // ⊥
    {"\xE2\x88\x80", Tok::Forall},  // ∀
    {"\xE2\x88\x83", Tok::Exists},  // ∃
    {"\xE2\x89\x88", Tok::Eq},      // ≈
};

bool ident_byte(unsigned char c) { return std::isalnum(c) || c == '_' || c == '\''; }

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto unicode_at = [&](std::size_t at) -> const Symbol* {
        for (const auto& sym : kUnicode)
            if (s.substr(at, std::string_view(sym.utf8).size()) == sym.utf8) return &sym;
        return nullptr;
    };
    while (i < s.size()) {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        const std::size_t start = i;
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
            i += 2;
            if (i < s.size() && s[i] == '[') {
                const std::size_t close = s.find(']', i);
                if (close == std::string_view::npos || close == i + 1 || close - i > 3)
                    throw SyntaxError("malformed ->[k]", start);
                std::size_t k = 0;
                for (std::size_t j = i + 1; j < close; ++j) {
                    if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw SyntaxError("malformed ->[k]", start);
                    k = k * 10 + static_cast<std::size_t>(s[j] - '0');
                }
                if (k > 64) throw SyntaxError("iteration count too large", start);
                i = close + 1;
                out.push_back({Tok::ArrowK, {}, k, start});
            } else {
                out.push_back({Tok::Arrow, {}, 0, start});
            }
            continue;
        }
        Tok simple = Tok::End;
        switch (c) {
            case '|': simple = Tok::Or; break;
            case '&': simple = Tok::And; break;
            case '~': simple = Tok::Not; break;
            case '(': simple = Tok::LParen; break;
            case ')': simple = Tok::RParen; break;
            case ',': simple = Tok::Comma; break;
            case '.': simple = Tok::Dot; break;
            case '=': simple = Tok::Eq; break;
            default: break;
        }
        if (simple != Tok::End) {
            out.push_back({simple, {}, 0, start});
            ++i;
            continue;
        }
        if (const Symbol* sym = unicode_at(i)) {
            out.push_back({sym->tok, {}, 0, start});
            i += std::string_view(sym->utf8).size();
            continue;
        }
        if (ident_byte(c) || c >= 0x80) {
            while (i < s.size()) {
                const unsigned char d = static_cast<unsigned char>(s[i]);
                if (d >= 0x80 ? unicode_at(i) != nullptr : !ident_byte(d)) break;
                ++i;
            }
            std::string word(s.substr(start, i - start));
            if (word == "D") out.push_back({Tok::Delta, {}, 0, start});
            else if (word == "T") out.push_back({Tok::Top, {}, 0, start});
            else if (word == "F") out.push_back({Tok::Bot, {}, 0, start});
            else if (word == "forall") out.push_back({Tok::Forall, {}, 0, start});
            else if (word == "exists") out.push_back({Tok::Exists, {}, 0, start});
            else out.push_back({Tok::Ident, std::move(word), 0, start});
            continue;
        }
        throw SyntaxError(std::string("unexpected character '") + static_cast<char>(c) + "'", start);
    }
    out.push_back({Tok::End, {}, 0, s.size()});
    return out;
}

Formula neg(Formula a) { return imp(std::move(a), bot()); }
Formula join(Formula a, Formula b) { return imp(imp(a, b), b); }

class Parser {
public:
    explicit Parser(std::string_view s) : toks_(tokenize(s)) {}

    Formula parse_all() {
        Formula f = parse_imp();
        if (peek().tok != Tok::End) throw SyntaxError("trailing input", peek().pos);
        return f;
    }

private:
    const Token& peek() const { return toks_[i_]; }
    const Token& next() { return toks_[i_++]; }
    void expect(Tok t, const char* what) {
        if (peek().tok != t) throw SyntaxError(std::string("expected ") + what, peek().pos);
        next();
    }

    Formula parse_imp() {
        Formula l = parse_or();
        if (peek().tok == Tok::Arrow) {
            next();
            return imp(l, parse_imp());
        }
        if (peek().tok == Tok::ArrowK) {
            const std::size_t k = next().k;
            Formula r = parse_imp();
            for (std::size_t i = 0; i < k; ++i) r = imp(l, r);
            return r;
        }
        return l;
    }

    Formula parse_or() {
        Formula l = parse_and();
        while (peek().tok == Tok::Or) {
            next();
            l = join(l, parse_and());
        }
        return l;
    }

    Formula parse_and() {
        Formula l = parse_unary();
        while (peek().tok == Tok::And) {
            next();
            l = neg(join(neg(l), neg(parse_unary())));
        }
        return l;
    }

    Formula parse_unary() {
        switch (peek().tok) {
            case Tok::Delta: next(); return delta(parse_unary());
            case Tok::Not: next(); return neg(parse_unary());
            case Tok::Forall:
            case Tok::Exists: {
                const bool all = next().tok == Tok::Forall;
                if (peek().tok != Tok::Ident) throw SyntaxError("expected a variable", peek().pos);
                std::string x = next().text;
                expect(Tok::Dot, "'.'");
                Formula body = parse_imp();
                return all ? forall(std::move(x), body) : exists(std::move(x), body);
            }
            default: return parse_atom();
        }
    }

    Term parse_term() {
        if (peek().tok != Tok::Ident) throw SyntaxError("expected a term", peek().pos);
        Term t{next().text, {}};
        if (peek().tok == Tok::LParen) {
            next();
            t.args.push_back(parse_term());
            while (peek().tok == Tok::Comma) {
                next();
                t.args.push_back(parse_term());
            }
            expect(Tok::RParen, "')'");
        }
        return t;
    }

    Formula parse_atom() {
        const Token& t = peek();
        switch (t.tok) {
            case Tok::Top: next(); return top();
            case Tok::Bot: next(); return bot();
            case Tok::LParen: {
                next();
                Formula f = parse_imp();
                expect(Tok::RParen, "')'");
                return f;
            }
            case Tok::Ident: {
                Term head = parse_term();
                if (peek().tok == Tok::Eq) {
                    next();
                    return eq(std::move(head), parse_term());
                }
                return pred(std::move(head.name), std::move(head.args));
            }
            case Tok::End: throw SyntaxError("unexpected end of input", t.pos);
            default: throw SyntaxError("expected a formula", t.pos);
        }
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

void print_to(const Formula& f, std::string& out) {
    auto wrapped = [&](const Formula& g) {
        const bool paren = g->kind == Kind::Imp || g->kind == Kind::Forall || g->kind == Kind::Exists;
        if (paren) out += "(";
        print_to(g, out);
        if (paren) out += ")";
    };
    switch (f->kind) {
        case Kind::Pred:
            out += f->name;
            if (!f->args.empty()) {
                out += "(";
                for (std::size_t i = 0; i < f->args.size(); ++i) {
                    if (i) out += ", ";
                    out += print(f->args[i]);
                }
                out += ")";
            }
            break;
        case Kind::Eq: out += print(f->args[0]) + " = " + print(f->args[1]); break;
        case Kind::Top: out += "T"; break;
        case Kind::Bot: out += "F"; break;
        case Kind::Imp:
            wrapped(f->lhs);
            out += " -> ";
            if (f->rhs->kind == Kind::Imp) print_to(f->rhs, out);
            else wrapped(f->rhs);
            break;
        case Kind::Delta:
            out += "D ";
            wrapped(f->lhs);
            break;
        case Kind::Forall:
        case Kind::Exists:
            out += f->kind == Kind::Forall ? "forall " : "exists ";
            out += f->name + ". ";
            print_to(f->lhs, out);
            break;
    }
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const Term& t) {
    std::string out = t.name;
    if (!t.args.empty()) {
        out += "(";
        for (std::size_t i = 0; i < t.args.size(); ++i) {
            if (i) out += ", ";
            out += print(t.args[i]);
        }
        out += ")";
    }
    return out;
}

std::string print(const Formula& f) {
    std::string out;
    print_to(f, out);
    return out;
}

}  // namespace lukra::fo
