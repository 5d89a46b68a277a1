#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "gf2g/analysis.hpp"
#include "gf2g/automata.hpp"
#include "gf2g/error.hpp"
#include "gf2g/fixtures.hpp"
#include "gf2g/lang.hpp"
#include "gf2g/solver.hpp"
#include "properties.hpp"

using namespace gf2g;

namespace {

std::string fx(const std::string& name) { return (std::filesystem::path(GF2G_FIXTURE_DIR) / name).string(); }

struct Criterion {
    std::string name;
    double limit_s;  // 0: exactness only
    std::function<std::string()> check;  // empty string on success
};

std::string xor_membership() {
    const auto g = to_cnf(load_grammar(fx("ex21.g2")));
    for (int l = 0; l <= 12; ++l)
        for (int m = 0; l + m <= 12; ++m)
            for (int n = 0; l + m + n <= 12; ++n)
                if (parse_parity(g, chain_word("abc", {l, m, n})) != ((l == m) != (m == n)))
                    return "wrong parity at (" + std::to_string(l) + "," + std::to_string(m) + "," + std::to_string(n) + ")";
    return {};
}

std::string doubling() {
    const auto s = enumerate(to_cnf(load_grammar(fx("ex22.g2"))), 64);
    LangSlice expect("a", 64);
    for (int k = 1; k <= 64; k *= 2) expect.insert(Word(static_cast<std::size_t>(k), 'a'));
    if (!(s == expect)) return "enumeration differs from the powers of two";
    const DigitDfa d{load_dfa(fx("powers2.dfa"))};
    for (std::uint64_t n = 1; n <= 64; ++n)
        if (automatic_member(d, n) != s.contains(Word(n, 'a'))) return "automaton differs at " + std::to_string(n);
    return {};
}

std::string oracle_equivalence() {
    int grammars = 0;
    bool seen[4] = {};
    for (const auto& f : fixtures::chain_fixtures()) {
        const std::size_t k = f.letters.size();
        if (k > 3) continue;
        const auto g = to_cnf(parse_grammar(f.grammar));
        const Box box(k, 12);
        if (!(extract_dual(g, f.letters, box) == dual_of_slice(enumerate(g, box_total(box)), f.letters, box)))
            return f.name + " differs";
        ++grammars;
        seen[k] = true;
    }
    if (grammars < 5 || !seen[1] || !seen[2] || !seen[3]) return "too few fixtures";
    return {};
}

std::string unit_determinants() {
    int systems = 0;
    for (const auto& f : fixtures::chain_fixtures()) {
        if (f.letters.size() < 2) continue;
        const auto sys = build_split_system(to_cnf(parse_grammar(f.grammar)), f.letters, Box(f.letters.size(), 4));
        if (sys.size() == 0 || sys.size() > 6) continue;
        ++systems;
        if (!determinant(system_matrix(sys)).constant_term()) return f.name + " has a determinant without constant term";
    }
    return systems > 0 ? std::string() : "no systems checked";
}

std::string recurrence_positive() {
    const auto w = coeff_window(fixtures::anbn_series({32, 32}));
    const auto r = find_recurrence(w, 2, 2, 3);
    if (!r) return "no recurrence found";
    if (!verify_recurrence(w, *r)) return "witness fails substitution";
    if (r->d != 1) return "order " + std::to_string(r->d);
    if (format_poly(r->polys[0]) != "1" || format_poly(r->polys[1]) != "b") return format_recurrence(*r);
    return {};
}

std::string recurrence_negative() {
    const auto r = find_recurrence(coeff_window(fixtures::power_diagonal_series({64, 64})), 4, 8, 16);
    return r ? "found " + format_recurrence(*r) : std::string();
}

std::string ambiguity() {
    const auto rep = inherent_ambiguity_report(9);
    return rep.holds() ? std::string() : "an identity failed";
}

std::string irreducible() {
    const auto rep = factor_search(parse_poly("1+abc"), 2);
    return rep.irreducible() ? std::string() : "not shown irreducible";
}

std::string quotient() {
    RabIntWitness w{load_grammar(fx("eps.g2")), parse_poly("1+ab", "ab")};
    const auto q = build_quotient_grammar(w);
    const auto lhs = mul(extract_dual(to_cnf(q), "ab", {12, 12}), TruncSeries::from_poly(w.denominator, {12, 12}));
    if (!(lhs == TruncSeries::one("ab", {12, 12}))) return "Dual(L_new) (1 + a b) != 1";
    return verify_quotient(w, q, {12, 12}).holds ? std::string() : "enumeration check failed";
}

std::string properties() {
    std::string problems;
    for (const auto& p : props::all_properties()) {
        const auto o = p.run(7, 100);
        if (o.cases < 100 || o.failures > 0) problems += p.name + " (" + o.first_failure + "); ";
    }
    return problems;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"xor-equalities parities, l+m+n <= 12", 5, xor_membership},
        {"doubling grammar to length 64 and binary automaton", 5, doubling},
        {"extract_dual equals enumeration, k = 1..3, box 12", 30, oracle_equivalence},
        {"unit constant term of det(A + B + I)", 0, unit_determinants},
        {"a^n b^n recurrence d = 1, p0 = 1, p1 = b", 2, recurrence_positive},
        {"no recurrence for a^(2^n) b^(2^n), d <= 4, deg <= 8", 10, recurrence_negative},
        {"ambiguity slice identities at n = 9", 5, ambiguity},
        {"1 + a b c irreducible by complete search", 1, irreducible},
        {"quotient grammar for {eps} / (1 + a b) at box 12", 2, quotient},
        {"property suites, 100 cases each", 60, properties},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto t0 = std::chrono::steady_clock::now();
        std::string problem;
        try {
            problem = c.check();
        } catch (const std::exception& e) {
            problem = std::string("threw: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (problem.empty() && c.limit_s > 0 && secs > c.limit_s)
            problem = "took " + std::to_string(secs) + " s";
        const bool ok = problem.empty();
        failed += !ok;
        std::string limit = c.limit_s > 0 ? "limit " + std::to_string(static_cast<int>(c.limit_s)) + " s" : "exact";
        std::printf("%s %2zu %s (%.3f s, %s)%s%s\n", ok ? "PASS" : "FAIL", i + 1, c.name.c_str(), secs,
                    limit.c_str(), ok ? "" : ": ", problem.c_str());
    }
    return failed == 0 ? 0 : 1;
}
