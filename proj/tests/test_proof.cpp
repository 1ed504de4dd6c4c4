#include <doctest.h>

#include "lukra/errors.hpp"
#include "lukra/proof.hpp"
#include "support.hpp"

using namespace lukra;

namespace {

// Replaces the justification on the line starting "<idx>. ".
std::string corrupt_justification(const std::string& text, std::size_t idx, const std::string& just) {
    std::istringstream in(text);
    std::string line, out;
    const std::string prefix = std::to_string(idx) + ". ";
    while (std::getline(in, line)) {
        if (line.rfind(prefix, 0) == 0) line = line.substr(0, line.find(';')) + "; " + just;
        out += line + "\n";
    }
    return out;
}

}  // namespace

TEST_CASE("fixtures check and conclude tautologies") {
    for (const auto& name : testsupport::proof_fixtures()) {
        CAPTURE(name);
        const auto rep = check_proof_text(testsupport::fixture(name + ".proof"));
        CHECK(rep.ok());
        CHECK(rep.system == System::LHn);
        REQUIRE(rep.n.has_value());
        CHECK(*rep.n == 3);
        // Without hypotheses the conclusion is valid; with them it follows.
        std::vector<Formula> gamma;
        for (const auto& [i, h] : rep.hypotheses) gamma.push_back(h);
        CHECK(consequence(gamma, rep.conclusion, 3).holds);
    }
}

TEST_CASE("print and reparse a proof") {
    for (const auto& name : testsupport::proof_fixtures()) {
        const auto p = parse_proof(testsupport::fixture(name + ".proof"));
        const auto q = parse_proof(print_proof(p));
        REQUIRE(p.lines.size() == q.lines.size());
        for (std::size_t i = 0; i < p.lines.size(); ++i) {
            CHECK(equal(p.lines[i].formula, q.lines[i].formula));
            CHECK(print_justification(p.lines[i].just) == print_justification(q.lines[i].just));
        }
        CHECK(check_proof(q).ok());
    }
}

TEST_CASE("MP accepts either order") {
    const char* a = "1. p ; HYP 1\n2. p -> q ; HYP 2\n3. q ; MP 1 2\n";
    const char* b = "1. p ; HYP 1\n2. p -> q ; HYP 2\n3. q ; MP 2 1\n";
    CHECK(check_proof_text(a).ok());
    CHECK(check_proof_text(b).ok());
    const auto bad = check_proof_text("1. p ; HYP 1\n2. p -> q ; HYP 2\n3. p ; MP 1 2\n");
    REQUIRE(bad.failures.size() == 1);
    CHECK(bad.failures[0].index == 3);
}

TEST_CASE("a corrupted justification fails at exactly that line") {
    for (const auto& name : testsupport::proof_fixtures()) {
        const auto text = testsupport::fixture(name + ".proof");
        const auto p = parse_proof(text);
        for (const auto& l : p.lines) {
            if (l.just.kind == JustKind::Hyp) continue;
            CAPTURE(name);
            CAPTURE(l.index);
            // AX2 has the shape (a -> b) -> ((b -> c) -> (a -> c)); none of
            // the fixture lines is an instance of it.
            const auto rep = check_proof_text(corrupt_justification(text, l.index, "AX2"));
            REQUIRE(rep.failures.size() == 1);
            CHECK(rep.failures[0].index == l.index);
            CHECK(rep.failures[0].source_line == l.source_line);
        }
    }
}

TEST_CASE("a corrupted formula is caught at its line") {
    const auto text = testsupport::fixture("lh21.proof");
    std::string broken = text;
    const auto at = broken.find("6. a ->[2] D a");
    REQUIRE(at != std::string::npos);
    broken.replace(at, 14, "6. a ->[1] D a");
    const auto rep = check_proof_text(broken);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.first_failure()->index == 6);
}

TEST_CASE("reference and index errors") {
    auto r = check_proof_text("1. p ; HYP 1\n2. q ; MP 1 5\n");
    REQUIRE(r.failures.size() == 1);
    CHECK(r.failures[0].message.find("reference 5") != std::string::npos);
    r = check_proof_text("2. p ; HYP 1\n2. p ; HYP 1\n");
    REQUIRE(r.failures.size() == 1);
    CHECK(r.failures[0].index == 2);
    r = check_proof_text("1. p ; HYP 1\n2. q ; HYP 1\n");
    REQUIRE(r.failures.size() == 1);
    CHECK(r.failures[0].index == 2);
}

TEST_CASE("axiom instances and n annotations") {
    auto r = check_proof_text("1. (p ->[2] q) -> (D p -> q) ; AX8[n=3]\n");
    CHECK(r.ok());
    CHECK(*r.n == 3);
    r = check_proof_text("1. (p ->[2] q) -> (D p -> q) ; AX8[n=4]\n");
    CHECK_FALSE(r.ok());
    r = check_proof_text("system: LH n=3\n1. (p -> q) -> (D p -> q) ; AX8[n=4]\n");
    REQUIRE(r.failures.size() == 1);
    CHECK(r.failures[0].message.find("conflicts") != std::string::npos);
    // Missing n for an n-dependent axiom.
    r = check_proof_text("1. (p ->[2] q) -> (D p -> q) ; AX8\n");
    CHECK_FALSE(r.ok());
}

TEST_CASE("F belongs only to the F-calculus") {
    auto r = check_proof_text("system: LH n=3\n1. F -> p ; HYP 1\n");
    REQUIRE(r.failures.size() == 1);
    CHECK(r.failures[0].index == 1);
    r = check_proof_text("system: LHbot\n1. F -> p ; HYP 1\n");
    CHECK(r.ok());
    // An F-axiom alone selects the F-calculus.
    r = check_proof_text("1. F -> p ; AX9\n");
    CHECK(r.system == System::LHbot);
}

TEST_CASE("catalogue steps are n-valued only") {
    const auto r = check_proof_text("system: LHbot\n1. p -> p ; THM LH5\n");
    REQUIRE(r.failures.size() == 1);
    CHECK(check_proof_text("system: LH n=3\n1. p -> p ; THM LH5\n").ok());
    CHECK_FALSE(check_proof_text("system: LH n=3\n1. p -> p ; THM LH99\n").ok());
    CHECK_FALSE(check_proof_text("system: LH n=3\n1. p -> p ; THM LH13\n").ok());
}

TEST_CASE("generalization rule readings") {
    const std::string text =
        "1. (p -> q) -> (p -> (p -> q)) ; HYP 1\n"
        "2. (p -> (p -> q)) -> (p -> q) ; HYP 2\n"
        "3. p -> r ; HYP 3\n"
        "4. p -> D r ; QGEN 1 2 3\n";
    auto r = check_proof_text(text);
    CHECK(r.system == System::LHbot);
    CHECK(r.ok());
    // Cited lines may come in any order.
    CHECK(check_proof_text(text.substr(0, text.rfind("4.")) + "4. p -> D r ; QGEN 3 1 2\n").ok());
    r = check_proof_text(text, QgenReading::Literal);
    REQUIRE(r.failures.size() == 1);
    CHECK(r.failures[0].index == 4);
    // Wrong conclusion.
    CHECK_FALSE(check_proof_text(text.substr(0, text.rfind("4.")) + "4. p -> D q ; QGEN 1 2 3\n").ok());
    // Not in the n-valued calculus.
    CHECK_FALSE(check_proof_text("system: LH n=3\n" + text).ok());
}

TEST_CASE("proof syntax errors") {
    CHECK_THROWS_AS(parse_proof("1. p\n"), SyntaxError);
    CHECK_THROWS_AS(parse_proof("1. p ; WHAT 1\n"), SyntaxError);
    CHECK_THROWS_AS(parse_proof("1. p -> ; HYP 1\n"), SyntaxError);
    CHECK_THROWS_AS(parse_proof("x. p ; HYP 1\n"), SyntaxError);
    CHECK_THROWS_AS(parse_proof("1. q ; MP 1\n"), SyntaxError);
    try {
        parse_proof("1. p ; HYP 1\n2. p -> ; HYP 2\n");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.position() >= 13);
    }
}

TEST_CASE("match_schema binds metavariables consistently") {
    std::map<std::string, Formula> s;
    CHECK(match_schema(parse("a -> a"), parse("(p -> q) -> (p -> q)"), s));
    CHECK(equal(s.at("a"), parse("p -> q")));
    s.clear();
    std::string why;
    CHECK_FALSE(match_schema(parse("a -> a"), parse("p -> q"), s, &why));
    CHECK_FALSE(why.empty());
}
