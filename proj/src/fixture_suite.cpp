#include <filesystem>
#include <functional>

#include "gf2g/analysis.hpp"
#include "gf2g/automata.hpp"
#include "gf2g/cli.hpp"
#include "gf2g/error.hpp"
#include "gf2g/fixtures.hpp"
#include "gf2g/lang.hpp"
#include "gf2g/solver.hpp"

namespace gf2g {

namespace {

struct Item {
    std::string name;
    std::vector<std::string> files;
    // Returns an empty string on success, otherwise what went wrong.
    std::function<std::string(const std::vector<std::string>&)> run;
};

CnfGrammar cnf_of(const std::string& path) { return to_cnf(load_grammar(path)); }

std::string xor_equalities(const std::vector<std::string>& f) {
    const auto g = cnf_of(f[0]);
    for (int l = 0; l <= 12; ++l)
        for (int m = 0; l + m <= 12; ++m)
            for (int n = 0; l + m + n <= 12; ++n) {
                const bool expect = (l == m) != (m == n);
                const Word w = chain_word("abc", {l, m, n});
                if (parse_parity(g, w) != expect) return "wrong parity for '" + w + "'";
            }
    return {};
}

std::string powers_of_two(const std::vector<std::string>& f) {
    const auto slice = enumerate(cnf_of(f[0]), 64);
    LangSlice expect("a", 64);
    for (int k = 1; k <= 64; k *= 2) expect.insert(Word(static_cast<std::size_t>(k), 'a'));
    if (!(slice == expect)) return "enumeration to 64 differs from the powers of two";
    const DigitDfa d{load_dfa(f[1])};
    for (int n = 1; n <= 64; ++n)
        if (automatic_member(d, static_cast<std::uint64_t>(n)) != slice.contains(Word(static_cast<std::size_t>(n), 'a')))
            return "automaton and grammar disagree at n = " + std::to_string(n);
    return {};
}

std::string language_equations(const std::vector<std::string>& f) {
    const auto rep = check_language_equations(load_grammar(f[0]), 10);
    return rep.holds ? std::string() : rep.message;
}

std::string wellformedness(const std::vector<std::string>& f) {
    if (!validate_wellformed(load_grammar(f[0])).accepted) return f[0] + " should be accepted";
    if (validate_wellformed(load_grammar(f[1])).accepted) return f[1] + " should be rejected";
    return {};
}

std::string oracle_equivalence(const std::vector<std::string>& f) {
    const std::vector<std::pair<std::string, int>> chains = {{"a", 12}, {"ab", 12}, {"abc", 10}, {"abc", 10},
                                                             {"abcd", 6}, {"ab", 12}};
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto g = cnf_of(f[i]);
        const auto& [letters, b] = chains[i];
        const Box box(letters.size(), b);
        if (!(extract_dual(g, letters, box) == dual_of_slice(enumerate(g, box_total(box)), letters, box)))
            return "series of " + f[i] + " differs from its enumeration";
    }
    return {};
}

std::string anbn_recurrence(const std::vector<std::string>& f) {
    const auto w = coeff_window(extract_dual(cnf_of(f[0]), "ab", {32, 32}));
    const auto r = find_recurrence(w, 2, 2, 3);
    if (!r || r->d != 1 || !verify_recurrence(w, *r)) return "no verified order-1 recurrence";
    if (format_poly(r->polys[0]) != "1" || format_poly(r->polys[1]) != "b")
        return "unexpected witness " + format_recurrence(*r);
    return {};
}

std::string power_diagonal_no_recurrence(const std::vector<std::string>&) {
    const auto w = coeff_window(fixtures::power_diagonal_series({64, 64}));
    const auto r = find_recurrence(w, 4, 8, 16);
    return r ? "unexpected recurrence " + format_recurrence(*r) : std::string();
}

std::string corollaries(const std::vector<std::string>&) {
    return inherent_ambiguity_report(9).holds() ? std::string() : "an identity failed";
}

std::string irreducible(const std::vector<std::string>&) {
    const auto rep = factor_search(parse_poly("1+abc"), 2);
    return rep.irreducible() ? std::string() : "1 + a b c was not shown irreducible";
}

std::string quotient(const std::vector<std::string>& f) {
    RabIntWitness w{load_grammar(f[0]), parse_poly("1+ab", "ab")};
    const auto q = build_quotient_grammar(w);
    if (!verify_quotient(w, q, {12, 12}).holds) return "Dual(L_new) (1 + a b) differs from 1";
    const auto anbn = dual_of_slice(enumerate(to_cnf(q), 24), "ab", {12, 12});
    return anbn == fixtures::anbn_series({12, 12}) ? std::string() : "quotient language is not a^n b^n";
}

}  // namespace

std::vector<FixtureResult> run_fixture_suite(const std::string& dir) {
    const std::vector<Item> items = {
        {"xor_equalities", {"ex21.g2"}, xor_equalities},
        {"powers_of_two", {"ex22.g2", "powers2.dfa"}, powers_of_two},
        {"language_equations", {"ex21.g2"}, language_equations},
        {"wellformedness", {"ex22.g2", "illformed.g2"}, wellformedness},
        {"oracle_equivalence",
         {"ex22.g2", "anbn.g2", "ex21.g2", "anbmcn.g2", "abcd.g2", "rab_numerator.g2"},
         oracle_equivalence},
        {"anbn_recurrence", {"anbn.g2"}, anbn_recurrence},
        {"power_diagonal_no_recurrence", {}, power_diagonal_no_recurrence},
        {"ambiguity_identities", {}, corollaries},
        {"irreducible_1_abc", {}, irreducible},
        {"quotient_1_ab", {"eps.g2"}, quotient},
    };
    std::vector<FixtureResult> out;
    for (const auto& item : items) {
        std::vector<std::string> paths;
        std::string missing;
        for (const auto& f : item.files) {
            auto p = (std::filesystem::path(dir) / f).string();
            if (!std::filesystem::exists(p) && missing.empty()) missing = p;
            paths.push_back(std::move(p));
        }
        if (!missing.empty()) {
            out.push_back({item.name, "missing", missing});
            continue;
        }
        try {
            auto problem = item.run(paths);
            out.push_back({item.name, problem.empty() ? "pass" : "fail", problem});
        } catch (const Error& e) {
            out.push_back({item.name, "fail", e.what()});
        }
    }
    return out;
}

}  // namespace gf2g
