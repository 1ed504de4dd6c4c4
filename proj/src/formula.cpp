#include "lukra/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "lukra/errors.hpp"

namespace lukra {

Formula var(std::string name) {
    return std::make_shared<const Node>(Node{Kind::Var, std::move(name), nullptr, nullptr});
}

Formula top() {
    static const Formula t = std::make_shared<const Node>(Node{Kind::Top, {}, nullptr, nullptr});
    return t;
}

Formula bot() {
    static const Formula b = std::make_shared<const Node>(Node{Kind::Bot, {}, nullptr, nullptr});
    return b;
}

Formula imp(Formula a, Formula b) {
    return std::make_shared<const Node>(Node{Kind::Imp, {}, std::move(a), std::move(b)});
}

Formula delta(Formula a) {
    return std::make_shared<const Node>(Node{Kind::Delta, {}, std::move(a), nullptr});
}

Formula imp_k(Formula a, Formula b, std::size_t k) {
    Formula r = std::move(b);
    for (std::size_t i = 0; i < k; ++i) r = imp(a, r);
    return r;
}

Formula join(Formula a, Formula b) { return imp(imp(a, b), b); }

Formula neg(Formula a) { return imp(std::move(a), bot()); }

Formula meet(Formula a, Formula b) { return neg(join(neg(std::move(a)), neg(std::move(b)))); }

bool equal(const Formula& a, const Formula& b) {
    if (a == b) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Kind::Var: return a->name == b->name;
        case Kind::Top:
        case Kind::Bot: return true;
        case Kind::Delta: return equal(a->lhs, b->lhs);
        case Kind::Imp: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    }
    return false;
}

std::size_t depth(const Formula& f) {
    switch (f->kind) {
        case Kind::Imp: return 1 + std::max(depth(f->lhs), depth(f->rhs));
        case Kind::Delta: return 1 + depth(f->lhs);
        default: return 0;
    }
}

std::size_t node_count(const Formula& f) {
    switch (f->kind) {
        case Kind::Imp: return 1 + node_count(f->lhs) + node_count(f->rhs);
        case Kind::Delta: return 1 + node_count(f->lhs);
        default: return 1;
    }
}

bool contains_bot(const Formula& f) {
    switch (f->kind) {
        case Kind::Bot: return true;
        case Kind::Imp: return contains_bot(f->lhs) || contains_bot(f->rhs);
        case Kind::Delta: return contains_bot(f->lhs);
        default: return false;
    }
}

bool contains_delta(const Formula& f) {
    switch (f->kind) {
        case Kind::Delta: return true;
        case Kind::Imp: return contains_delta(f->lhs) || contains_delta(f->rhs);
        default: return false;
    }
}

namespace {

void collect_vars(const Formula& f, std::set<std::string>& out) {
    switch (f->kind) {
        case Kind::Var: out.insert(f->name); break;
        case Kind::Imp:
            collect_vars(f->lhs, out);
            collect_vars(f->rhs, out);
            break;
        case Kind::Delta: collect_vars(f->lhs, out); break;
        default: break;
    }
}

}  // namespace

std::vector<std::string> variables(const Formula& f) {
    std::set<std::string> s;
    collect_vars(f, s);
    return {s.begin(), s.end()};
}

std::vector<std::string> variables(const std::vector<Formula>& fs) {
    std::set<std::string> s;
    for (const auto& f : fs) collect_vars(f, s);
    return {s.begin(), s.end()};
}

Formula substitute(const Formula& f, const std::map<std::string, Formula>& s) {
    switch (f->kind) {
        case Kind::Var: {
            auto it = s.find(f->name);
            return it == s.end() ? f : it->second;
        }
        case Kind::Imp: return imp(substitute(f->lhs, s), substitute(f->rhs, s));
        case Kind::Delta: return delta(substitute(f->lhs, s));
        default: return f;
    }
}

// ---------------------------------------------------------------- parsing

namespace {

enum class Tok { Ident, Arrow, ArrowK, Or, And, Not, Delta, Top, Bot, LParen, RParen, End };

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
    {"\xE2\x86\x92", Tok::Arrow},  // →
    {"\xE2\x86\xA3", Tok::Arrow},  // ↣
    {"\xCE\x94", Tok::Delta},      // Δ
    {"\xE2\x88\xA8", Tok::Or},     // ∨
    {"\xE2\x88\xA7", Tok::And},    // ∧
    {"\xC2\xAC", Tok::Not},        // ¬
    {"\xE2\x8A\xA4", Tok::Top},    // ⊤
    {"\xE2\x8A\xA5", Tok::Bot},    // ⊥
};

bool ident_byte(unsigned char c) { return std::isalnum(c) || c == '_' || c == '\''; }

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto unicode_at = [&](std::size_t at) -> const Symbol* {
        for (const auto& sym : kUnicode) {
            std::string_view u(sym.utf8);
            if (s.substr(at, u.size()) == u) return &sym;
        }
        return nullptr;
    };
    while (i < s.size()) {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
            i += 2;
            if (i < s.size() && s[i] == '[') {
                std::size_t j = i + 1;
                std::size_t k = 0;
                bool digits = false;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                    k = k * 10 + static_cast<std::size_t>(s[j] - '0');
                    if (k > 64) throw SyntaxError("iteration count too large", start);
                    digits = true;
                    ++j;
                }
                if (!digits || j >= s.size() || s[j] != ']')
                    throw SyntaxError("malformed ->[k]", start);
                i = j + 1;
                out.push_back({Tok::ArrowK, {}, k, start});
            } else {
                out.push_back({Tok::Arrow, {}, 0, start});
            }
            continue;
        }
        switch (c) {
            case '|': out.push_back({Tok::Or, {}, 0, start}); ++i; continue;
            case '&': out.push_back({Tok::And, {}, 0, start}); ++i; continue;
            case '~': out.push_back({Tok::Not, {}, 0, start}); ++i; continue;
            case '(': out.push_back({Tok::LParen, {}, 0, start}); ++i; continue;
            case ')': out.push_back({Tok::RParen, {}, 0, start}); ++i; continue;
            default: break;
        }
        if (const Symbol* sym = unicode_at(i)) {
            out.push_back({sym->tok, {}, 0, start});
            i += std::string_view(sym->utf8).size();
            continue;
        }
        if (ident_byte(c) || c >= 0x80) {
            while (i < s.size()) {
                const unsigned char d = static_cast<unsigned char>(s[i]);
                if (d >= 0x80) {
                    if (unicode_at(i)) break;
                    ++i;
                } else if (ident_byte(d)) {
                    ++i;
                } else {
                    break;
                }
            }
            std::string word(s.substr(start, i - start));
            if (word == "D")
                out.push_back({Tok::Delta, {}, 0, start});
            else if (word == "T")
                out.push_back({Tok::Top, {}, 0, start});
            else if (word == "F")
                out.push_back({Tok::Bot, {}, 0, start});
            else
                out.push_back({Tok::Ident, std::move(word), 0, start});
            continue;
        }
        throw SyntaxError(std::string("unexpected character '") + static_cast<char>(c) + "'", start);
    }
    out.push_back({Tok::End, {}, 0, s.size()});
    return out;
}

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

    Formula parse_imp() {
        Formula l = parse_or();
        if (peek().tok == Tok::Arrow) {
            next();
            return imp(l, parse_imp());
        }
        if (peek().tok == Tok::ArrowK) {
            const std::size_t k = next().k;
            return imp_k(l, parse_imp(), k);
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
            l = meet(l, parse_unary());
        }
        return l;
    }

    Formula parse_unary() {
        if (peek().tok == Tok::Delta) {
            next();
            return delta(parse_unary());
        }
        if (peek().tok == Tok::Not) {
            next();
            return neg(parse_unary());
        }
        return parse_atom();
    }

    Formula parse_atom() {
        const Token& t = next();
        switch (t.tok) {
            case Tok::Ident: return var(t.text);
            case Tok::Top: return top();
            case Tok::Bot: return bot();
            case Tok::LParen: {
                Formula f = parse_imp();
                if (peek().tok != Tok::RParen) throw SyntaxError("expected ')'", peek().pos);
                next();
                return f;
            }
            case Tok::End: throw SyntaxError("unexpected end of input", t.pos);
            default: throw SyntaxError("expected a formula", t.pos);
        }
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

void print_to(const Formula& f, std::string& out) {
    switch (f->kind) {
        case Kind::Var: out += f->name; break;
        case Kind::Top: out += "T"; break;
        case Kind::Bot: out += "F"; break;
        case Kind::Delta:
            if (f->lhs->kind == Kind::Imp) {
                out += "D(";
                print_to(f->lhs, out);
                out += ")";
            } else {
                out += "D ";
                print_to(f->lhs, out);
            }
            break;
        case Kind::Imp:
            if (f->lhs->kind == Kind::Imp) {
                out += "(";
                print_to(f->lhs, out);
                out += ")";
            } else {
                print_to(f->lhs, out);
            }
            out += " -> ";
            print_to(f->rhs, out);
            break;
    }
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const Formula& f) {
    std::string out;
    print_to(f, out);
    return out;
}

// ---------------------------------------------------------------- evaluation

Compiled::Compiled(const Formula& f) : Compiled(f, variables(f)) {}

Compiled::Compiled(const Formula& f, const std::vector<std::string>& order) : slots_(order) {
    std::map<std::string, std::size_t> slot;
    for (std::size_t i = 0; i < order.size(); ++i) slot[order[i]] = i;
    std::size_t height = 0;
    std::function<void(const Formula&)> emit = [&](const Formula& g) {
        switch (g->kind) {
            case Kind::Var: {
                auto it = slot.find(g->name);
                if (it == slot.end()) throw InvalidArgument("unassigned variable '" + g->name + "'");
                ops_.push_back({Kind::Var, it->second});
                max_stack_ = std::max(max_stack_, ++height);
                break;
            }
            case Kind::Top:
            case Kind::Bot:
                uses_bot_ = uses_bot_ || g->kind == Kind::Bot;
                ops_.push_back({g->kind, 0});
                max_stack_ = std::max(max_stack_, ++height);
                break;
            case Kind::Delta:
                uses_delta_ = true;
                emit(g->lhs);
                ops_.push_back({Kind::Delta, 0});
                break;
            case Kind::Imp:
                emit(g->lhs);
                emit(g->rhs);
                ops_.push_back({Kind::Imp, 0});
                --height;
                break;
        }
    };
    emit(f);
}

Elem Compiled::eval(const FiniteAlgebra& a, const Elem* vals) const {
    if (uses_delta_ && !a.has_delta())
        throw ConfigurationError("formula uses D but algebra '" + a.label() + "' has no delta");
    if (uses_bot_ && !a.bottom())
        throw ConfigurationError("formula uses F but algebra '" + a.label() + "' has no bottom");
    Elem stack[64];
    std::vector<Elem> heap;
    Elem* st = stack;
    if (max_stack_ > 64) {
        heap.resize(max_stack_);
        st = heap.data();
    }
    std::size_t sp = 0;
    for (const Op& op : ops_) {
        switch (op.kind) {
            case Kind::Var: st[sp++] = vals[op.slot]; break;
            case Kind::Top: st[sp++] = a.top(); break;
            case Kind::Bot: st[sp++] = *a.bottom(); break;
            case Kind::Delta: st[sp - 1] = a.delta(st[sp - 1]); break;
            case Kind::Imp:
                st[sp - 2] = a.imp(st[sp - 2], st[sp - 1]);
                --sp;
                break;
        }
    }
    return st[0];
}

Elem eval(const Formula& f, const FiniteAlgebra& a, const Valuation& v) {
    const auto vars = variables(f);
    std::vector<Elem> vals;
    for (const auto& name : vars) {
        auto it = v.find(name);
        if (it == v.end()) throw InvalidArgument("unassigned variable '" + name + "'");
        if (it->second >= a.size()) throw InvalidArgument("value out of range for '" + name + "'");
        vals.push_back(it->second);
    }
    return Compiled(f, vars).eval(a, vals);
}

}  // namespace lukra
