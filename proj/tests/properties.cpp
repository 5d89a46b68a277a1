#include "properties.hpp"

#include <random>
#include <sstream>

#include "gf2g/automata.hpp"
#include "gf2g/error.hpp"
#include "gf2g/lang.hpp"
#include "gf2g/series.hpp"
#include "gf2g/solver.hpp"
#include "oracle.hpp"

namespace props {

using namespace gf2g;

namespace {

using Case = std::function<std::string(std::mt19937&)>;  // empty string when the case holds

Property make(std::string name, Case body) {
    return {name, [name, body](std::uint32_t seed, int cases) {
                Outcome o{name};
                std::mt19937 rng(seed);
                for (int i = 0; i < cases; ++i) {
                    ++o.cases;
                    std::string problem;
                    try {
                        problem = body(rng);
                    } catch (const std::exception& e) {
                        problem = std::string("threw: ") + e.what();
                    }
                    if (!problem.empty()) {
                        if (o.failures++ == 0) o.first_failure = "case " + std::to_string(i) + ": " + problem;
                    }
                }
                return o;
            }};
}

TruncSeries random_series(std::mt19937& rng, const std::string& vars, const Box& box, double density = 0.3) {
    TruncSeries f(vars, box);
    std::bernoulli_distribution coin(density);
    for (std::size_t i = 0; i < f.cell_count(); ++i)
        if (coin(rng)) f.flip_cell(i);
    return f;
}

Box random_box(std::mt19937& rng, std::size_t arity, int max) {
    std::uniform_int_distribution<int> d(0, max);
    Box b(arity);
    for (auto& x : b) x = d(rng);
    return b;
}

// Random subset of the chain words letters[0]^x letters[1]^y with x + y <= n, as a slice of length bound.
LangSlice random_chain_slice(std::mt19937& rng, const std::string& alphabet, char first, char second, int n,
                             int bound) {
    LangSlice s(alphabet, bound);
    std::bernoulli_distribution coin(0.3);
    for (int x = 0; x <= n; ++x)
        for (int y = 0; x + y <= n; ++y)
            if (coin(rng)) s.insert(Word(static_cast<std::size_t>(x), first) + Word(static_cast<std::size_t>(y), second));
    return s;
}

std::string describe(const Gf2Grammar& g) { return "\n" + format_grammar(g); }

std::vector<Property> build() {
    std::vector<Property> out;

    out.push_back(make("sym_diff group laws", [](std::mt19937& rng) -> std::string {
        std::uniform_int_distribution<int> len(0, 6);
        const int n = len(rng);
        const auto x = oracle::random_slice(rng, "ab", n), y = oracle::random_slice(rng, "ab", n),
                   z = oracle::random_slice(rng, "ab", n);
        const LangSlice zero("ab", n);
        if (!(sym_diff(sym_diff(x, y), z) == sym_diff(x, sym_diff(y, z)))) return "not associative";
        if (!(sym_diff(x, y) == sym_diff(y, x))) return "not commutative";
        if (!(sym_diff(x, zero) == x)) return "empty set is not neutral";
        if (!sym_diff(x, x).empty()) return "x xor x is not empty";
        return {};
    }));

    out.push_back(make("concat associativity and distributivity", [](std::mt19937& rng) -> std::string {
        std::uniform_int_distribution<int> len(0, 6);
        const int n = len(rng);
        const auto x = oracle::random_slice(rng, "ab", n), y = oracle::random_slice(rng, "ab", n),
                   z = oracle::random_slice(rng, "ab", n);
        if (!(gf2_concat(gf2_concat(x, y), z) == gf2_concat(x, gf2_concat(y, z)))) return "not associative";
        if (!(gf2_concat(x, sym_diff(y, z)) == sym_diff(gf2_concat(x, y), gf2_concat(x, z))))
            return "not left distributive";
        if (!(gf2_concat(sym_diff(x, y), z) == sym_diff(gf2_concat(x, z), gf2_concat(y, z))))
            return "not right distributive";
        if (!(gf2_concat(LangSlice("ab", n, {""}), x) == x)) return "{eps} is not a unit";
        return {};
    }));

    out.push_back(make("series ring laws", [](std::mt19937& rng) -> std::string {
        const Box box = random_box(rng, 2, 5);
        const auto f = random_series(rng, "ab", box), g = random_series(rng, "ab", box),
                   h = random_series(rng, "ab", box);
        const auto one = TruncSeries::one("ab", box);
        if (!(f + g == g + f)) return "addition not commutative";
        if (!((f + g) + h == f + (g + h))) return "addition not associative";
        if (!(f * g == g * f)) return "multiplication not commutative";
        if (!((f * g) * h == f * (g * h))) return "multiplication not associative";
        if (!(f * (g + h) == f * g + f * h)) return "not distributive";
        if (!(f * one == f)) return "1 is not a unit";
        if (!(f + f).is_zero()) return "f + f is not zero";
        return {};
    }));

    out.push_back(make("invert_unit inverse law", [](std::mt19937& rng) -> std::string {
        std::uniform_int_distribution<int> arity(1, 3);
        const std::string vars = std::string("abc").substr(0, static_cast<std::size_t>(arity(rng)));
        const Box box = random_box(rng, vars.size(), 4);
        auto f = random_series(rng, vars, box);
        if (!f.constant_term()) f.flip_cell(0);
        const auto g = invert_unit(f);
        const auto one = TruncSeries::one(vars, box);
        if (!(f * g == one)) return "f * f^-1 != 1 for " + format_series(f);
        if (!(invert_unit(g) == f)) return "inverse is not an involution";
        return {};
    }));

    out.push_back(make("truncation coherence", [](std::mt19937& rng) -> std::string {
        const Box box = random_box(rng, 2, 6);
        Box small = box;
        for (auto& x : small) x = std::uniform_int_distribution<int>(0, x)(rng);
        const auto f = random_series(rng, "ab", box), g = random_series(rng, "ab", box);
        if (!((f * g).restrict(small) == f.restrict(small) * g.restrict(small))) return "product does not restrict";
        if (!((f + g).restrict(small) == f.restrict(small) + g.restrict(small))) return "sum does not restrict";
        if (f.constant_term() && !(invert_unit(f).restrict(small) == invert_unit(f.restrict(small))))
            return "inverse does not restrict";
        return {};
    }));

    out.push_back(make("Dual is a homomorphism", [](std::mt19937& rng) -> std::string {
        const int bound = 8;
        const auto k = random_chain_slice(rng, "abc", 'a', 'b', bound, bound);
        const auto l = random_chain_slice(rng, "abc", 'b', 'c', bound, bound);
        const Box box{2, 3, 2};
        const auto lhs = dual_of_slice(gf2_concat(k, l), "abc", box);
        const auto rhs = dual_of_slice(k, "abc", box) * dual_of_slice(l, "abc", box);
        return lhs == rhs ? std::string() : "Dual(K L) != Dual(K) Dual(L)";
    }));

    out.push_back(make("Bar-Hillel parity identity", [](std::mt19937& rng) -> std::string {
        const auto g = oracle::random_wellformed(rng, 10);
        const auto m = oracle::random_dfa(rng);
        const auto c = to_cnf(g);
        const auto ix = intersect_gf2(c, m, std::bernoulli_distribution(0.5)(rng));
        for (const auto& w : oracle::all_words("ab", 6))
            if (parse_parity(ix.grammar, w) != (parse_parity(c, w) && m.accepts(w)))
                return "word '" + w + "'" + describe(g);
        return {};
    }));

    out.push_back(make("CNF parity preservation", [](std::mt19937& rng) -> std::string {
        const auto g = oracle::random_wellformed(rng, 10);
        const auto c = to_cnf(g);
        for (const auto& w : oracle::all_words("ab", 6))
            if (parse_parity(c, w) != oracle::parity(g, w)) return "word '" + w + "'" + describe(g);
        return {};
    }));

    out.push_back(make("accepted grammars have finite tree counts", [](std::mt19937& rng) -> std::string {
        const auto g = oracle::random_grammar(rng);
        const auto rep = validate_wellformed(g);
        if (!rep.accepted) {
            try {
                to_cnf(g);
                return "normal form accepted a rejected grammar" + describe(g);
            } catch (const InvalidArgument&) {
                return {};
            }
        }
        for (const auto& w : oracle::all_words("ab", 5))
            if (!oracle::count_trees(g, g.start(), w)) return "infinitely many trees for '" + w + "'" + describe(g);
        return {};
    }));

    out.push_back(make("language equations on slices", [](std::mt19937& rng) -> std::string {
        // Every nonterminal gets restarted, so each must be a well-formed start.
        Gf2Grammar g;
        for (bool ok = false; !ok;) {
            g = oracle::random_wellformed(rng);
            ok = true;
            for (const auto& a : g.nonterminals()) {
                Gf2Grammar h = g;
                h.set_start(a);
                ok = ok && validate_wellformed(h).accepted;
            }
        }
        const auto rep = check_language_equations(g, 5);
        return rep.holds ? std::string() : rep.message + describe(g);
    }));

    out.push_back(make("chain series equal enumeration", [](std::mt19937& rng) -> std::string {
        const auto g = to_cnf(oracle::random_wellformed(rng));
        const auto ix = intersect_gf2(g, build_chain_dfa("ab"));
        const Box box = random_box(rng, 2, 4);
        const auto lhs = extract_dual(ix.grammar, "ab", box);
        const auto rhs = dual_of_slice(enumerate(ix.grammar, box_total(box)), "ab", box);
        return lhs == rhs ? std::string() : "series differ" + describe(g.base());
    }));

    return out;
}

}  // namespace

const std::vector<Property>& all_properties() {
    static const std::vector<Property> props = build();
    return props;
}

}  // namespace props
