#include <doctest.h>

#include <cstdlib>

#include "gf2g/analysis.hpp"
#include "gf2g/error.hpp"
#include "gf2g/fixtures.hpp"
#include "gf2g/lang.hpp"
#include "gf2g/solver.hpp"

using namespace gf2g;

namespace {

TruncSeries unary(char var, int box, std::initializer_list<int> support) {
    TruncSeries f(std::string(1, var), {box});
    for (int x : support) f.toggle(std::vector<int>{x});
    return f;
}

// The three-variable series A(a) B(b) C(c), built point by point.
TruncSeries outer_product(const TruncSeries& a, const TruncSeries& b, const TruncSeries& c) {
    TruncSeries f("abc", {a.box()[0], b.box()[0], c.box()[0]});
    for (const auto& x : a.support())
        for (const auto& y : b.support())
            for (const auto& z : c.support()) f.toggle(std::vector<int>{x[0], y[0], z[0]});
    return f;
}

Poly inner(std::string_view text) { return parse_poly(text, "b"); }

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("window of a^n b^n") {
    const auto w = coeff_window(fixtures::anbn_series({8, 8}));
    REQUIRE(w.last() == 8);
    for (int n = 0; n <= 8; ++n) {
        CHECK(w.entries[n] == Poly::monomial("b", {n}));
        CHECK(w.trusted[n]);
    }
}

TEST_CASE("window of the power diagonal") {
    const auto w = coeff_window(fixtures::power_diagonal_series({64, 64}));
    for (int n = 0; n <= 64; ++n) {
        const bool power = n > 0 && (n & (n - 1)) == 0;
        CHECK(w.entries[n] == (power ? Poly::monomial("b", {n}) : Poly("b")));
    }
}

TEST_CASE("window trust follows the envelope") {
    const auto w = coeff_window(TruncSeries("ab", {8, 4}));
    CHECK(w.trusted[4]);
    CHECK_FALSE(w.trusted[5]);
    CHECK_THROWS_AS(coeff_window(TruncSeries("abc", {2, 2, 2})), InvalidArgument);
}

TEST_CASE("recurrence of a^n b^n") {
    const auto w = coeff_window(fixtures::anbn_series({32, 32}));
    const auto r = find_recurrence(w, 2, 2, 3);
    REQUIRE(r.has_value());
    CHECK(r->d == 1);
    CHECK(r->polys[0] == inner("1"));
    CHECK(r->polys[1] == inner("b"));
    CHECK(verify_recurrence(w, *r));
    CHECK(format_recurrence(*r).rfind("d = 1, p0 = 1, p1 = b", 0) == 0);
}

TEST_CASE("no recurrence for the power diagonal") {
    const auto w = coeff_window(fixtures::power_diagonal_series({64, 64}));
    CHECK_FALSE(find_recurrence(w, 4, 8, 16).has_value());
}

TEST_CASE("zero window") {
    const auto w = coeff_window(TruncSeries("ab", {16, 16}));
    const auto r = find_recurrence(w, 1, 1, 2);
    REQUIRE(r.has_value());
    CHECK(r->d == 0);
    CHECK(r->polys[0] == inner("1"));
}

TEST_CASE("recurrence search refuses windows it cannot judge") {
    const auto w = coeff_window(fixtures::anbn_series({32, 32}));
    CHECK_THROWS_AS(find_recurrence(w, 2, 2, 2), InvalidArgument);
    CHECK_THROWS_AS(find_recurrence(w, 4, 8, 16), InvalidArgument);
    const auto tall = coeff_window(fixtures::anbn_series({32, 8}));
    CHECK_THROWS_AS(find_recurrence(tall, 1, 1, 2), InvalidArgument);
}

TEST_CASE("recurrence from a grammar's series") {
    const auto g = to_cnf(parse_grammar(fixtures::anbn()));
    const auto w = coeff_window(extract_dual(g, "ab", {24, 24}));
    const auto r = find_recurrence(w, 2, 2, 3);
    REQUIRE(r.has_value());
    CHECK(verify_recurrence(w, *r));
}

TEST_CASE("verification rejects a tampered witness") {
    const auto w = coeff_window(fixtures::anbn_series({32, 32}));
    auto r = *find_recurrence(w, 2, 2, 3);
    r.polys[1] = inner("1");
    CHECK_FALSE(verify_recurrence(w, r));
}

TEST_CASE("trace of (1 + a) times the diagonal") {
    const Box box{8, 8, 8};
    const auto f = mul(TruncSeries::from_poly(parse_poly("1 + a", "abc"), box), fixtures::diagonal3_series(box));
    const auto rep = trace_support(f);
    for (const auto& e : rep.support) CHECK(((e[0] == e[1] || e[0] == e[1] + 1) && e[1] == e[2]));
    CHECK(rep.support.size() == 17);
    REQUIRE(rep.band_width.has_value());
    CHECK(*rep.band_width == 1);
}

TEST_CASE("trace of the diagonal") {
    const auto rep = trace_support(fixtures::diagonal3_series({8, 8, 8}));
    REQUIRE(rep.band_width.has_value());
    CHECK(*rep.band_width == 0);
}

TEST_CASE("trace of a product with a full axis is unbounded") {
    const auto f = outer_product(unary('a', 16, {1, 2, 4, 8, 16}), unary('b', 16, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16}),
                                 unary('c', 16, {0}));
    const auto rep = trace_support(f);
    CHECK_FALSE(rep.band_width.has_value());
    CHECK(rep.support.size() == 5 * 17);
}

TEST_CASE("single block") {
    const auto a = unary('a', 6, {1, 3}), b = unary('b', 6, {0, 2, 5}), c = unary('c', 6, {4});
    const auto rep = block_check({{a, b, c}});
    CHECK(rep.consistent);
    CHECK(rep.support == outer_product(a, b, c).support());
}

TEST_CASE("equal first factors merge their types") {
    const auto a = unary('a', 6, {0, 2});
    const auto rep = block_check({{a, unary('b', 6, {1}), unary('c', 6, {2})}, {a, unary('b', 6, {3}), unary('c', 6, {2, 5})}});
    CHECK(rep.consistent);
    REQUIRE(rep.classes.has_value());
    CHECK(rep.classes->types[0].size() <= 2);
    auto expect = add(outer_product(a, unary('b', 6, {1}), unary('c', 6, {2})),
                      outer_product(a, unary('b', 6, {3}), unary('c', 6, {2, 5})));
    CHECK(rep.support == expect.support());
}

TEST_CASE("irreducibility") {
    const auto abc = factor_search(parse_poly("1+abc"), 2);
    CHECK(abc.irreducible());
    CHECK(abc.complete);

    const auto split = factor_search(parse_poly("1+a+b+ab"), 1);
    REQUIRE(split.factors.has_value());
    CHECK(poly_mul(split.factors->first, split.factors->second) == parse_poly("1+a+b+ab"));

    CHECK(factor_search(parse_poly("1+ab"), 1).irreducible());
    CHECK_FALSE(factor_search(parse_poly("1+abc"), 0).complete);
}

TEST_CASE("factor search respects the size cap") {
    setenv("GF2G_MAX_MONOMIALS", "16", 1);
    CHECK_THROWS_AS(factor_search(parse_poly("1+abc"), 2), LimitExceeded);
    unsetenv("GF2G_MAX_MONOMIALS");
    CHECK_NOTHROW(factor_search(parse_poly("1+abc"), 2));
}

TEST_CASE("quotient by 1 + ab") {
    RabIntWitness w{parse_grammar("start S\nS -> eps\n"), parse_poly("1+ab")};
    const auto q = build_quotient_grammar(w);
    CHECK(validate_wellformed(q).accepted);
    CHECK(verify_quotient(w, q, {12, 12}).holds);
    CHECK(dual_of_slice(enumerate(to_cnf(q), 24), "ab", {12, 12}) == fixtures::anbn_series({12, 12}));
}

TEST_CASE("quotient by 1 keeps the language") {
    RabIntWitness w{parse_grammar(fixtures::anbn_numerator()), parse_poly("1", "ab")};
    const auto q = build_quotient_grammar(w);
    CHECK(enumerate(to_cnf(q), 10) == enumerate(to_cnf(w.numerator), 10));
}

TEST_CASE("quotient with a richer numerator") {
    RabIntWitness w{parse_grammar(fixtures::anbn_numerator()), parse_poly("1+ab")};
    CHECK(verify_quotient(w, build_quotient_grammar(w), {8, 8}).holds);
}

TEST_CASE("quotient preconditions") {
    CHECK_THROWS_AS(build_quotient_grammar({parse_grammar("start S\nS -> eps\n"), parse_poly("ab")}), InvalidArgument);
    CHECK_THROWS_AS(build_quotient_grammar({parse_grammar("start S\nS -> b a\n"), parse_poly("1+ab")}), InvalidArgument);
}

TEST_CASE("ambiguity identities") {
    CHECK(inherent_ambiguity_report(9).holds());
    CHECK(inherent_ambiguity_report(0).holds());
    auto s = corollary_slices(9);
    s.l1.toggle("aabb");
    const auto rep = check_corollaries(s);
    CHECK_FALSE(rep.first_holds);
    CHECK(rep.second_holds);
    CHECK(rep.first_witness == Word("aabb"));
}

TEST_CASE("ambiguity slices by construction") {
    const auto s = corollary_slices(6);
    for (int l = 0; l <= 6; ++l)
        for (int m = 0; l + m <= 6; ++m)
            for (int n = 0; l + m + n <= 6; ++n) {
                const Word w = chain_word("abc", {l, m, n});
                CHECK(s.l1.contains(w) == (l == m || m == n));
                CHECK(s.l2.contains(w) == (l != m || m != n));
                CHECK(s.target.contains(w) == (l == m && m == n));
                CHECK(s.chain.contains(w));
            }
}

}
