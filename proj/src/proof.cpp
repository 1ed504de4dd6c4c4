#include "lukra/proof.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <sstream>

#include "lukra/errors.hpp"

namespace lukra {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::size_t to_size(const std::string& s, std::size_t off) {
    if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw SyntaxError("expected a number, got '" + s + "'", off);
    return static_cast<std::size_t>(std::stoul(s));
}

// "[n=3,k=2]" -> fills n/k.
void parse_params(const std::string& body, Justification& j, std::size_t off) {
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw SyntaxError("expected key=value in '" + body + "'", off);
        const std::string key = trim(item.substr(0, eq)), val = trim(item.substr(eq + 1));
        if (key == "n") j.n = to_size(val, off);
        else if (key == "k") j.k = to_size(val, off);
        else throw SyntaxError("unknown parameter '" + key + "'", off);
    }
}

// Splits "NAME[params]" into name and parameters.
std::string name_with_params(const std::string& tok, Justification& j, std::size_t off) {
    const auto lb = tok.find('[');
    if (lb == std::string::npos) return tok;
    if (tok.back() != ']') throw SyntaxError("unterminated parameter list in '" + tok + "'", off);
    parse_params(tok.substr(lb + 1, tok.size() - lb - 2), j, off);
    return tok.substr(0, lb);
}

Justification parse_justification(const std::string& text, std::size_t off) {
    std::istringstream in(text);
    std::vector<std::string> toks;
    for (std::string t; in >> t;) toks.push_back(t);
    if (toks.empty()) throw SyntaxError("missing justification", off);
    Justification j;
    const std::string head = toks[0];
    auto refs_from = [&](std::size_t first, std::size_t lo, std::size_t hi) {
        const std::size_t count = toks.size() - first;
        if (count < lo || count > hi)
            throw SyntaxError(head + " takes " + std::to_string(lo) +
                                  (lo == hi ? "" : "-" + std::to_string(hi)) + " line references",
                              off);
        for (std::size_t i = first; i < toks.size(); ++i) j.refs.push_back(to_size(toks[i], off));
    };
    if (head.rfind("AX", 0) == 0) {
        j.kind = JustKind::Axiom;
        j.name = name_with_params(head, j, off);
        static const std::regex id(R"(AX\d+)");
        if (!std::regex_match(j.name, id)) throw SyntaxError("bad axiom name '" + j.name + "'", off);
        refs_from(1, 0, 0);
    } else if (head == "MP") {
        j.kind = JustKind::MP;
        refs_from(1, 2, 2);
    } else if (head == "HYP") {
        j.kind = JustKind::Hyp;
        refs_from(1, 1, 1);
    } else if (head == "QGEN") {
        j.kind = JustKind::QGen;
        refs_from(1, 3, 3);
    } else if (head == "THM" || head == "RULE") {
        j.kind = head == "THM" ? JustKind::Thm : JustKind::Rule;
        if (toks.size() < 2) throw SyntaxError(head + " needs a name", off);
        j.name = name_with_params(toks[1], j, off);
        if (j.kind == JustKind::Thm) refs_from(2, 0, 0);
        else refs_from(2, 1, 3);
    } else {
        throw SyntaxError("unknown justification '" + head + "'", off);
    }
    return j;
}

void parse_header(const std::string& body, Proof& p, std::size_t off) {
    std::istringstream in(body);
    std::string sys;
    in >> sys;
    if (sys == "LHbot") {
        p.system = System::LHbot;
    } else if (sys == "LH") {
        p.system = System::LHn;
    } else {
        throw SyntaxError("unknown system '" + sys + "'", off);
    }
    for (std::string t; in >> t;) {
        if (t.rfind("n=", 0) != 0) throw SyntaxError("unexpected '" + t + "' in header", off);
        p.n = to_size(t.substr(2), off);
        if (*p.n < 2) throw SyntaxError("n must be at least 2", off);
    }
}

}  // namespace

Proof parse_proof(std::string_view text) {
    Proof p;
    std::size_t pos = 0, lineno = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        const std::size_t off = pos;
        ++lineno;
        pos = end + 1;
        if (auto h = raw.find('#'); h != std::string_view::npos) raw = raw.substr(0, h);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        if (line.rfind("system:", 0) == 0) {
            if (!p.lines.empty()) throw SyntaxError("header after the first proof line", off);
            parse_header(line.substr(7), p, off);
            continue;
        }
        const auto dot = line.find('.');
        const auto semi = line.find(';');
        if (dot == std::string::npos || semi == std::string::npos || semi < dot)
            throw SyntaxError("expected '<idx>. <formula> ; <justification>'", off);
        ProofLine pl;
        pl.source_line = lineno;
        pl.index = to_size(trim(line.substr(0, dot)), off);
        const std::string ftext = line.substr(dot + 1, semi - dot - 1);
        try {
            pl.formula = parse(ftext);
        } catch (const SyntaxError& e) {
            const std::size_t lead = raw.find(line);
            throw SyntaxError("line " + std::to_string(lineno) + ": bad formula",
                              off + (lead == std::string_view::npos ? 0 : lead) + dot + 1 + e.position());
        }
        pl.just = parse_justification(line.substr(semi + 1), off);
        p.lines.push_back(std::move(pl));
    }
    return p;
}

std::string print_justification(const Justification& j) {
    std::string params;
    auto add = [&](const char* key, const std::optional<std::size_t>& v) {
        if (!v) return;
        params += (params.empty() ? "" : ",") + std::string(key) + "=" + std::to_string(*v);
    };
    add("n", j.n);
    add("k", j.k);
    const std::string p = params.empty() ? "" : "[" + params + "]";
    std::string out;
    switch (j.kind) {
        case JustKind::Axiom: out = j.name + p; break;
        case JustKind::MP: out = "MP"; break;
        case JustKind::Hyp: out = "HYP"; break;
        case JustKind::QGen: out = "QGEN"; break;
        case JustKind::Thm: out = "THM " + j.name + p; break;
        case JustKind::Rule: out = "RULE " + j.name + p; break;
    }
    for (auto r : j.refs) out += " " + std::to_string(r);
    return out;
}

std::string print_proof(const Proof& p) {
    std::string out;
    if (p.system) {
        out += "system: ";
        out += *p.system == System::LHbot ? "LHbot" : "LH";
        if (p.n) out += " n=" + std::to_string(*p.n);
        out += "\n";
    }
    for (const auto& l : p.lines)
        out += std::to_string(l.index) + ". " + print(l.formula) + " ; " + print_justification(l.just) + "\n";
    return out;
}

bool match_schema(const Formula& pattern, const Formula& f, std::map<std::string, Formula>& subst,
                  std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (pattern->kind == Kind::Var) {
        auto [it, fresh] = subst.emplace(pattern->name, f);
        if (fresh || equal(it->second, f)) return true;
        return fail("metavariable " + pattern->name + " is bound to " + print(it->second) +
                    " but meets " + print(f));
    }
    if (pattern->kind != f->kind) return fail("expected " + print(pattern) + ", found " + print(f));
    switch (pattern->kind) {
        case Kind::Top:
        case Kind::Bot: return true;
        case Kind::Delta: return match_schema(pattern->lhs, f->lhs, subst, why);
        case Kind::Imp:
            return match_schema(pattern->lhs, f->lhs, subst, why) &&
                   match_schema(pattern->rhs, f->rhs, subst, why);
        default: break;
    }
    return fail("unexpected node");
}

namespace {

bool is_bot_axiom(const std::string& id) {
    return id == "AX9" || id == "AX10" || id == "AX11" || id == "AX12" || id == "AX13";
}

// Tries every assignment of premise patterns to the cited lines.
bool match_rule(const std::vector<Formula>& premise_patterns, const Formula& conclusion_pattern,
                const std::vector<Formula>& cited, const Formula& f, std::string& why) {
    if (premise_patterns.size() != cited.size()) {
        why = "expects " + std::to_string(premise_patterns.size()) + " premises, got " +
              std::to_string(cited.size());
        return false;
    }
    std::map<std::string, Formula> base;
    if (!match_schema(conclusion_pattern, f, base, &why)) {
        why = "conclusion does not match: " + why;
        return false;
    }
    std::vector<std::size_t> perm(cited.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::string first_why;
    do {
        auto s = base;
        std::string w;
        bool ok = true;
        for (std::size_t i = 0; i < perm.size() && ok; ++i)
            ok = match_schema(premise_patterns[i], cited[perm[i]], s, &w);
        if (ok) return true;
        if (first_why.empty()) first_why = w;
    } while (std::next_permutation(perm.begin(), perm.end()));
    why = "premises do not match: " + first_why;
    return false;
}

}  // namespace

ProofReport check_proof(const Proof& p, QgenReading reading) {
    ProofReport rep;
    // System and n: the header wins, otherwise they are inferred.
    bool bot_marker = false;
    std::optional<std::size_t> inferred_n;
    for (const auto& l : p.lines) {
        if (l.just.kind == JustKind::QGen || (l.just.kind == JustKind::Axiom && is_bot_axiom(l.just.name)))
            bot_marker = true;
        if (l.just.n && !inferred_n) inferred_n = l.just.n;
    }
    rep.system = p.system ? *p.system : (bot_marker ? System::LHbot : System::LHn);
    if (rep.system == System::LHn) rep.n = p.n ? p.n : inferred_n;

    std::map<std::size_t, Formula> seen;
    std::optional<std::size_t> last_index;
    auto fail = [&](const ProofLine& l, const std::string& msg) {
        rep.failures.push_back({l.index, l.source_line, msg});
    };

    for (const auto& l : p.lines) {
        const auto& j = l.just;
        auto record = [&] {
            if (!seen.count(l.index)) seen.emplace(l.index, l.formula);
        };
        if (last_index && l.index <= *last_index) {
            fail(l, "line index " + std::to_string(l.index) + " does not increase");
            continue;
        }
        last_index = l.index;
        if (rep.system == System::LHn && contains_bot(l.formula)) {
            fail(l, "F is not part of the n-valued language");
            record();
            continue;
        }
        std::vector<Formula> cited;
        bool refs_ok = true;
        if (j.kind != JustKind::Hyp) {
            for (auto r : j.refs) {
                auto it = seen.find(r);
                if (it == seen.end()) {
                    fail(l, "reference " + std::to_string(r) + " is not an earlier line");
                    refs_ok = false;
                    break;
                }
                cited.push_back(it->second);
            }
        }
        record();
        if (!refs_ok) continue;
        if (j.n && rep.system == System::LHn && rep.n && *j.n != *rep.n) {
            fail(l, "annotation n=" + std::to_string(*j.n) + " conflicts with n=" + std::to_string(*rep.n));
            continue;
        }
        if (j.n && rep.system == System::LHbot) {
            fail(l, "the F-calculus takes no n");
            continue;
        }
        std::string why;
        switch (j.kind) {
            case JustKind::Axiom: {
                if (rep.system == System::LHn && is_bot_axiom(j.name)) {
                    fail(l, j.name + " is not an axiom of the n-valued calculus");
                    break;
                }
                const bool n_dependent = j.name == "AX5" || j.name == "AX7" || j.name == "AX8";
                if (rep.system == System::LHn && n_dependent && !rep.n) {
                    fail(l, j.name + " needs n");
                    break;
                }
                const auto s = axiom_schema(j.name, rep.system, rep.n.value_or(2));
                if (!s) {
                    fail(l, "no axiom " + j.name + " in this calculus");
                    break;
                }
                std::map<std::string, Formula> sub;
                if (!match_schema(s->pattern, l.formula, sub, &why))
                    fail(l, "not an instance of " + j.name + ": " + why);
                break;
            }
            case JustKind::MP: {
                auto ok = [&](const Formula& a, const Formula& b) {
                    return b->kind == Kind::Imp && equal(b->lhs, a) && equal(b->rhs, l.formula);
                };
                if (!ok(cited[0], cited[1]) && !ok(cited[1], cited[0]))
                    fail(l, "MP: neither line " + std::to_string(j.refs[0]) + " nor line " +
                                std::to_string(j.refs[1]) + " is the other one implying this formula");
                break;
            }
            case JustKind::Hyp: {
                auto [it, fresh] = rep.hypotheses.emplace(j.refs[0], l.formula);
                if (!fresh && !equal(it->second, l.formula))
                    fail(l, "hypothesis " + std::to_string(j.refs[0]) + " was stated differently");
                break;
            }
            case JustKind::QGen: {
                if (rep.system != System::LHbot) {
                    fail(l, "QGEN belongs to the F-calculus");
                    break;
                }
                const Formula p1 = parse("(g -> b) -> (g -> (g -> b))");
                const Formula p2 = reading == QgenReading::Repaired ? parse("(g -> (g -> b)) -> (g -> b)") : p1;
                if (!match_rule({p1, p2, parse("g -> a")}, parse("g -> D a"), cited, l.formula, why))
                    fail(l, "QGEN: " + why);
                break;
            }
            case JustKind::Thm:
            case JustKind::Rule: {
                const char* what = j.kind == JustKind::Thm ? "THM" : "RULE";
                if (rep.system != System::LHn) {
                    fail(l, std::string(what) + " is only available in the n-valued calculus");
                    break;
                }
                if (!rep.n) {
                    fail(l, std::string(what) + " needs n");
                    break;
                }
                std::optional<CatalogItem> item;
                try {
                    item = catalogue_item(j.name, *rep.n, j.k);
                } catch (const InvalidArgument& e) {
                    fail(l, e.what());
                    break;
                }
                if (!item) {
                    fail(l, "unknown catalogue entry " + j.name);
                    break;
                }
                if (j.kind == JustKind::Thm && !item->premises.empty()) {
                    fail(l, j.name + " is a rule");
                    break;
                }
                if (j.kind == JustKind::Rule && item->premises.empty()) {
                    fail(l, j.name + " is a theorem");
                    break;
                }
                bool matched = false;
                for (const auto& c : item->conclusions) {
                    std::string w;
                    if (j.kind == JustKind::Thm) {
                        std::map<std::string, Formula> sub;
                        matched = match_schema(c, l.formula, sub, &w);
                    } else {
                        matched = match_rule(item->premises, c, cited, l.formula, w);
                    }
                    if (matched) break;
                    if (why.empty()) why = w;
                }
                if (!matched) fail(l, "not an instance of " + item->name + ": " + why);
                break;
            }
        }
    }
    if (!p.lines.empty()) rep.conclusion = p.lines.back().formula;
    return rep;
}

ProofReport check_proof_text(std::string_view text, QgenReading reading) {
    return check_proof(parse_proof(text), reading);
}

}  // namespace lukra
