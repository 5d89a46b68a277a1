#include <doctest.h>

#include "gf2g/error.hpp"
#include "gf2g/fixtures.hpp"
#include "gf2g/grammar.hpp"
#include "gf2g/lang.hpp"
#include "oracle.hpp"

using namespace gf2g;

TEST_SUITE("grammar") {

TEST_CASE("xor grammar parses into five nonterminals") {
    const auto g = parse_grammar(fixtures::xor_equalities());
    CHECK(g.start() == "S");
    CHECK(g.nonterminals().size() == 5);
    // S: 2, A: 2, B: 2, C: 2, D: 2 after splitting the alternatives
    CHECK(g.rules().size() == 10);
    CHECK(g.alphabet() == "abc");
}

TEST_CASE("epsilon rule and cancellation") {
    const auto g = parse_grammar("start S\nS -> eps\n");
    REQUIRE(g.rules().size() == 1);
    CHECK(g.rules().begin()->body.empty());

    std::vector<std::string> warnings;
    const auto h = parse_grammar("start S\nS -> a (+) a\n", &warnings);
    CHECK(h.rules_for("S").empty());
    CHECK(warnings.size() == 1);
}

TEST_CASE("toggle_rule is an involution") {
    Gf2Grammar g("S");
    Rule r{"S", {Symbol::terminal('a'), Symbol::nonterminal("S")}};
    CHECK(g.toggle_rule(r));
    CHECK(g.rules().size() == 1);
    CHECK_FALSE(g.toggle_rule(r));
    CHECK(g.rules().empty());
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse_grammar("start S\nS -> a (+\n"), ParseError);
    CHECK_THROWS_AS(parse_grammar("S -> a\n"), ParseError);
    try {
        parse_grammar("start S\nS -> a\nS => b\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("format and parse round-trip") {
    const auto g = parse_grammar(fixtures::xor_equalities());
    CHECK(parse_grammar(format_grammar(g)) == g);
}

TEST_CASE("wellformedness") {
    CHECK(validate_wellformed(parse_grammar(fixtures::powers_of_two())).accepted);
    const auto unit = validate_wellformed(parse_grammar("start S\nS -> S (+) a\n"));
    CHECK_FALSE(unit.accepted);
    REQUIRE_FALSE(unit.cycles.empty());
    CHECK(unit.cycles.front() == std::vector<std::string>{"S"});

    const auto g = parse_grammar("start S\nS -> A S (+) a\nA -> eps\n");
    CHECK_FALSE(validate_wellformed(g).accepted);
    // the ill-formed grammar really has unboundedly many trees for "a"
    CHECK_FALSE(oracle::count_trees(g, "S", "a").has_value());
}

TEST_CASE("cycles through unproductive symbols are ignored") {
    const auto g = parse_grammar("start S\nS -> a (+) X\nX -> X Y\nY -> Y\n");
    CHECK(validate_wellformed(g).accepted);
}

TEST_CASE("normal form of the doubling grammar") {
    const auto c = to_cnf(parse_grammar(fixtures::powers_of_two()));
    CHECK_FALSE(c.eps_parity());
    for (const auto& r : c.base().rules()) {
        const bool binary = r.body.size() == 2 && !r.body[0].is_terminal() && !r.body[1].is_terminal();
        const bool term = r.body.size() == 1 && r.body[0].is_terminal();
        CHECK((binary || term));
    }
}

TEST_CASE("normal form keeps the epsilon parity aside") {
    const auto g = parse_grammar(fixtures::anbn());
    const auto c = to_cnf(g);
    CHECK(c.eps_parity());
    for (const auto& w : oracle::all_words("ab", 12))
        CHECK(parse_parity(c, w) == oracle::parity(g, w));
}

TEST_CASE("normal form drops unreachable nonterminals") {
    const auto c = to_cnf(parse_grammar("start S\nS -> a\nU -> b\n"));
    CHECK_FALSE(c.base().has_nonterminal("U"));
}

TEST_CASE("normal form rejects ill-formed grammars") {
    CHECK_THROWS_AS(to_cnf(parse_grammar("start S\nS -> S (+) a\n")), InvalidArgument);
}

TEST_CASE("useful nonterminals") {
    const auto g = parse_grammar("start S\nS -> A B (+) a\nA -> a\nB -> B b\nC -> c\n");
    CHECK(useful_nonterminals(g) == std::set<std::string>{"S"});
}

}
