#include "gf2g/fixtures.hpp"

#include "gf2g/error.hpp"

namespace gf2g::fixtures {

std::string_view xor_equalities() {
    return "start S\n"
           "S -> A (+) C\n"
           "A -> a A (+) B\n"
           "B -> b B c (+) eps\n"
           "C -> C c (+) D\n"
           "D -> a D b (+) eps\n";
}

std::string_view powers_of_two() { return "start S\nS -> S S (+) a\n"; }

std::string_view anbn() { return "start S\nS -> a S b (+) eps\n"; }

// (A1 B1 + A2 B2) with A1 = powers of two in a, B1 = b*, A2 = even powers of a, B2 = powers of two in b.
std::string_view anbn_numerator() {
    return "start N\n"
           "N -> P Y (+) Q R\n"
           "P -> P P (+) a\n"
           "Y -> b Y (+) eps\n"
           "Q -> a a Q (+) eps\n"
           "R -> R R (+) b\n";
}

const std::vector<ChainFixture>& chain_fixtures() {
    static const std::vector<ChainFixture> all = {
        {"powers_of_two", powers_of_two(), "a"},
        {"triple_powers", "start S\nS -> S S (+) a a a\n", "a"},
        {"anbn", anbn(), "ab"},
        {"anb2n", "start S\nS -> a S b b (+) eps\n", "ab"},
        {"rab_numerator", anbn_numerator(), "ab"},
        {"xor_ab", "start S\nS -> A (+) B\nA -> a A b (+) eps\nB -> a B (+) eps\n", "ab"},
        {"xor_equalities", xor_equalities(), "abc"},
        {"anbmcn", "start S\nS -> a S c (+) M\nM -> b M (+) eps\n", "abc"},
        {"chain3", "start S\nS -> a S (+) T\nT -> b T (+) U\nU -> c U (+) eps\n", "abc"},
        {"abcd_nested", "start S\nS -> a S d (+) M\nM -> b M c (+) eps\n", "abcd"},
        {"abcd_split",
         "start S\nS -> X Y (+) a S\nX -> a X b (+) b\nY -> c Y d (+) c d\n", "abcd"},
    };
    return all;
}

namespace {

TruncSeries diagonal(std::string vars, const Box& box, bool powers_only) {
    if (box.size() != vars.size()) throw InvalidArgument("box needs one bound per variable");
    TruncSeries f(std::move(vars), box);
    ExpVec e(box.size());
    for (int n = 0;; n = powers_only ? (n == 0 ? 1 : 2 * n) : n + 1) {
        e.assign(box.size(), n);
        if (!f.in_box(e)) break;
        f.toggle(e);
    }
    return f;
}

}  // namespace

TruncSeries anbn_series(const Box& box) { return diagonal("ab", box, false); }

TruncSeries power_diagonal_series(const Box& box) {
    auto f = diagonal("ab", box, true);
    f.toggle(ExpVec{0, 0});
    return f;
}

TruncSeries diagonal3_series(const Box& box) { return diagonal("abc", box, false); }

}  // namespace gf2g::fixtures
