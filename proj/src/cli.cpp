#include "gf2g/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "gf2g/analysis.hpp"
#include "gf2g/automata.hpp"
#include "gf2g/error.hpp"
#include "gf2g/fixtures.hpp"
#include "gf2g/grammar.hpp"
#include "gf2g/lang.hpp"
#include "gf2g/series.hpp"
#include "gf2g/solver.hpp"

#ifndef GF2G_FIXTURE_DIR
#define GF2G_FIXTURE_DIR "fixtures"
#endif

namespace gf2g {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNegative = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Box parse_box(const std::string& text, std::size_t arity) {
    Box box;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) {
        try {
            std::size_t used = 0;
            int v = std::stoi(part, &used);
            if (used != part.size() || v < 0) throw std::invalid_argument(part);
            box.push_back(v);
        } catch (const std::exception&) {
            throw InvalidArgument("bad box bound '" + part + "' in '" + text + "'");
        }
    }
    if (box.size() == 1 && arity > 1) box.assign(arity, box[0]);
    if (box.size() != arity)
        throw InvalidArgument("box '" + text + "' needs " + std::to_string(arity) + " bounds");
    return box;
}

json series_json(const TruncSeries& f) { return json::parse(series_to_json(f)); }

struct Context {
    std::ostream& out;
    std::ostream& err;
    bool as_json = false;
};

Gf2Grammar read_grammar(const std::string& path, Context& ctx) {
    std::vector<std::string> warnings;
    auto g = load_grammar(path, &warnings);
    for (const auto& w : warnings) ctx.err << "warning: " << w << "\n";
    return g;
}

CnfGrammar read_cnf(const std::string& path, Context& ctx) { return to_cnf(read_grammar(path, ctx)); }

std::string format_width(const TraceReport& r) {
    return r.band_width ? std::to_string(*r.band_width) : "inf (observed " + std::to_string(r.observed_width) + ")";
}

// ---------------------------------------------------------------------------

int cmd_validate(Context& ctx, const std::string& path) {
    const auto rep = validate_wellformed(read_grammar(path, ctx));
    if (ctx.as_json) {
        ctx.out << json{{"accepted", rep.accepted}, {"cycles", rep.cycles}, {"diagnostics", rep.diagnostics}}.dump()
                << "\n";
    } else {
        ctx.out << (rep.accepted ? "accepted" : "rejected") << "\n";
        for (const auto& d : rep.diagnostics) ctx.out << "  " << d << "\n";
    }
    return rep.accepted ? kOk : kNegative;
}

int cmd_cnf(Context& ctx, const std::string& path) {
    const auto g = read_cnf(path, ctx);
    if (ctx.as_json) {
        ctx.out << json{{"grammar", format_grammar(g.base())}, {"eps_parity", g.eps_parity()}}.dump() << "\n";
    } else {
        ctx.out << format_grammar(g);
    }
    return kOk;
}

int cmd_member(Context& ctx, const std::string& path, const std::string& word) {
    const auto raw = read_grammar(path, ctx);
    const std::string w = word == "-" ? "" : word;
    for (char c : w)
        if (raw.alphabet().find(c) == std::string::npos)
            throw InvalidArgument(std::string("letter '") + c + "' is outside the grammar alphabet");
    const auto g = to_cnf(raw);
    // Letters that only occur in useless rules leave the normal form; such words have no trees.
    bool bit = false;
    if (std::all_of(w.begin(), w.end(), [&](char ch) { return g.alphabet().find(ch) != std::string::npos; }))
        bit = parse_parity(g, w);
    ctx.out << (ctx.as_json ? json{{"word", w}, {"parity", bit ? 1 : 0}}.dump() : std::string(bit ? "1" : "0"))
            << "\n";
    return kOk;
}

int cmd_enum(Context& ctx, const std::string& path, int n) {
    const auto s = enumerate(read_cnf(path, ctx), n);
    ctx.out << (ctx.as_json ? slice_to_json(s) + "\n" : format_slice(s));
    return kOk;
}

int cmd_intersect(Context& ctx, const std::string& path, const std::string& dfa, bool no_prune) {
    const auto ix = intersect_gf2(read_cnf(path, ctx), load_dfa(dfa), !no_prune);
    if (ctx.as_json) {
        ctx.out << json{{"grammar", format_grammar(ix.grammar.base())}, {"eps_parity", ix.grammar.eps_parity()}}.dump()
                << "\n";
    } else {
        ctx.out << format_grammar(ix.grammar);
    }
    return kOk;
}

int cmd_series(Context& ctx, const std::string& path, const std::string& letters, const std::string& box_text,
               bool by_enumeration) {
    const auto g = read_cnf(path, ctx);
    const Box box = parse_box(box_text, letters.size());
    const auto f = by_enumeration ? dual_of_slice(enumerate(g, box_total(box)), letters, box)
                                  : extract_dual(g, letters, box);
    ctx.out << (ctx.as_json ? series_to_json(f) : format_series(f)) << "\n";
    return kOk;
}

int cmd_solve(Context& ctx, const std::string& path, const std::string& letters, const std::string& box_text,
              bool compare, bool dump) {
    const auto g = read_cnf(path, ctx);
    const Box box = parse_box(box_text, letters.size());
    const auto sys = build_split_system(g, letters, box);
    if (dump) {
        ctx.out << system_to_json(sys) << "\n";
        return kOk;
    }
    auto rep = solve_fixed_point(sys);
    if (compare) compare_with_oracle(g, sys, rep);
    const bool ok = !compare || sys.size() == 0 || rep.all_match();
    if (ctx.as_json) {
        json sol = json::object();
        for (std::size_t i = 0; i < sys.size(); ++i) sol[sys.unknowns[i]] = series_json(rep.solution[i]);
        json j{{"unknowns", sys.unknowns}, {"solution", sol}, {"iterations", rep.iterations}};
        if (compare) j["oracle_match"] = rep.oracle_match;
        ctx.out << j.dump() << "\n";
    } else {
        for (std::size_t i = 0; i < sys.size(); ++i)
            ctx.out << sys.unknowns[i] << ": " << format_series(rep.solution[i]) << "\n";
        ctx.out << "iterations: " << rep.iterations << "\n";
        if (compare) {
            for (std::size_t i = 0; i < sys.size(); ++i)
                if (!rep.oracle_match[i]) ctx.out << "mismatch at " << sys.unknowns[i] << "\n";
            ctx.out << "oracle: " << (ok ? "match" : "mismatch") << "\n";
        }
    }
    return ok ? kOk : kNegative;
}

int cmd_recurrence(Context& ctx, const std::string& source, const std::string& family, const std::string& letters,
                   const std::string& box_text, int d_max, int deg_max, const std::string& window) {
    TruncSeries f("ab", {0, 0});
    if (!family.empty()) {
        const Box box = parse_box(box_text.empty() ? "32" : box_text, 2);
        if (family == "anbn") f = fixtures::anbn_series(box);
        else if (family == "power-diagonal") f = fixtures::power_diagonal_series(box);
        else throw InvalidArgument("unknown family '" + family + "' (anbn, power-diagonal)");
    } else if (source.empty()) {
        throw InvalidArgument("recurrence needs a grammar, a series JSON file or --family");
    } else if (source.size() > 5 && source.substr(source.size() - 5) == ".json") {
        f = series_from_json(read_file(source));
    } else {
        f = extract_dual(read_cnf(source, ctx), letters, parse_box(box_text.empty() ? "32" : box_text, 2));
    }
    const auto w = coeff_window(f);
    int n0 = d_max + 1, last = w.last();
    if (!window.empty()) {
        auto colon = window.find(':');
        if (colon == std::string::npos) throw InvalidArgument("--window expects n0:N");
        try {
            n0 = std::stoi(window.substr(0, colon));
            last = std::stoi(window.substr(colon + 1));
        } catch (const std::exception&) {
            throw InvalidArgument("--window expects n0:N");
        }
    }
    const auto r = find_recurrence(w, d_max, deg_max, n0, last);
    const std::string bounds = "d <= " + std::to_string(d_max) + ", deg <= " + std::to_string(deg_max) +
                               ", n in [" + std::to_string(n0) + ", " + std::to_string(last) + "]";
    if (ctx.as_json) {
        json j{{"found", r.has_value()}, {"d_max", d_max}, {"deg_max", deg_max}, {"n0", n0}, {"last", last}};
        if (r) {
            j["d"] = r->d;
            j["polys"] = json::array();
            for (const auto& p : r->polys) j["polys"].push_back(format_poly(p));
            j["verified"] = verify_recurrence(w, *r);
        }
        ctx.out << j.dump() << "\n";
    } else if (r) {
        ctx.out << format_recurrence(*r) << "\n";
        ctx.out << "verified by substitution: " << (verify_recurrence(w, *r) ? "yes" : "no") << "\n";
    } else {
        ctx.out << "none (evidence within bounds: " << bounds << ")\n";
    }
    return r ? kOk : kNegative;
}

int cmd_trace(Context& ctx, const std::string& poly, const std::string& series_path, const std::string& box_text) {
    TruncSeries f("abc", {0, 0, 0});
    if (!series_path.empty()) {
        f = series_from_json(read_file(series_path));
    } else {
        const Box box = parse_box(box_text.empty() ? "8" : box_text, 3);
        const Poly g = parse_poly(poly.empty() ? "1" : poly, "abc");
        f = mul(TruncSeries::from_poly(g, box), fixtures::diagonal3_series(box));
    }
    const auto rep = trace_support(f);
    if (ctx.as_json) {
        json j{{"support", rep.support}, {"observed_width", rep.observed_width}};
        j["band_width"] = rep.band_width ? json(*rep.band_width) : json("inf");
        ctx.out << j.dump() << "\n";
    } else {
        ctx.out << "support: " << format_series(f) << "\n";
        ctx.out << "band width: " << format_width(rep) << "\n";
    }
    return kOk;
}

TruncSeries unary_from(const json& exps, char var, int bound) {
    TruncSeries s(std::string(1, var), {bound});
    for (const auto& e : exps) {
        int x = e.get<int>();
        if (x >= 0 && x <= bound) s.toggle(std::vector<int>{x});
    }
    return s;
}

int cmd_blocks(Context& ctx, const std::string& path, int seed, int count, int bound) {
    std::vector<BlockSummand> summands;
    if (!path.empty()) {
        json j;
        try {
            j = json::parse(read_file(path));
            const int b = j.at("box").get<int>();
            for (const auto& s : j.at("summands"))
                summands.push_back({unary_from(s.at("a"), 'a', b), unary_from(s.at("b"), 'b', b),
                                    unary_from(s.at("c"), 'c', b)});
        } catch (const json::exception& e) {
            throw ParseError(std::string("malformed blocks file: ") + e.what(), 1, 1);
        }
    } else {
        std::mt19937 rng(static_cast<unsigned>(seed));
        std::bernoulli_distribution coin(0.4);
        auto random_unary = [&](char v) {
            TruncSeries s(std::string(1, v), {bound});
            for (int x = 0; x <= bound; ++x)
                if (coin(rng)) s.toggle(std::vector<int>{x});
            return s;
        };
        for (int i = 0; i < count; ++i) summands.push_back({random_unary('a'), random_unary('b'), random_unary('c')});
    }
    const auto rep = block_check(summands);
    const auto& tc = *rep.classes;
    if (ctx.as_json) {
        json j{{"consistent", rep.consistent},
               {"support_size", rep.support.size()},
               {"types", {tc.types[0], tc.types[1], tc.types[2]}},
               {"odd_blocks", tc.odd_blocks}};
        ctx.out << j.dump() << "\n";
    } else {
        ctx.out << "summands: " << summands.size() << "\n";
        ctx.out << "classes: a " << tc.types[0].size() << ", b " << tc.types[1].size() << ", c "
                << tc.types[2].size() << "\n";
        ctx.out << "odd blocks: " << tc.odd_blocks.size() << "\n";
        ctx.out << "trace points: " << rep.support.size() << "\n";
        ctx.out << "block structure: " << (rep.consistent ? "consistent" : "inconsistent") << "\n";
    }
    return rep.consistent ? kOk : kNegative;
}

int cmd_irreducible(Context& ctx, const std::string& poly, int max_deg) {
    const auto p = parse_poly(poly);
    const auto rep = factor_search(p, max_deg);
    if (ctx.as_json) {
        json j{{"irreducible", rep.irreducible()}, {"complete", rep.complete}, {"candidates", rep.candidates}};
        if (rep.factors) j["factors"] = {format_poly(rep.factors->first), format_poly(rep.factors->second)};
        ctx.out << j.dump() << "\n";
    } else if (rep.factors) {
        ctx.out << "reducible: (" << format_poly(rep.factors->first) << ") (" << format_poly(rep.factors->second)
                << ")\n";
    } else if (rep.complete) {
        ctx.out << "irreducible\n";
    } else {
        ctx.out << "no factor of total degree <= " << max_deg << " (search incomplete)\n";
    }
    return rep.irreducible() ? kOk : kNegative;
}

int cmd_quotient(Context& ctx, const std::string& path, const std::string& poly, bool verify,
                 const std::string& box_text) {
    RabIntWitness w{read_grammar(path, ctx), parse_poly(poly, "ab")};
    const auto q = build_quotient_grammar(w);
    std::optional<QuotientCheck> check;
    if (verify) check = verify_quotient(w, q, parse_box(box_text, 2));
    if (ctx.as_json) {
        json j{{"grammar", format_grammar(q)}};
        if (check) j["holds"] = check->holds;
        ctx.out << j.dump() << "\n";
    } else {
        ctx.out << format_grammar(q);
        if (check) ctx.out << "check Dual(L_new) * (" << format_poly(w.denominator) << ") = Dual(L_num): "
                           << (check->holds ? "holds" : "fails") << "\n";
    }
    return !check || check->holds ? kOk : kNegative;
}

int cmd_ambiguity(Context& ctx, int n) {
    const auto rep = inherent_ambiguity_report(n);
    if (ctx.as_json) {
        ctx.out << json{{"n", n}, {"first_holds", rep.first_holds}, {"second_holds", rep.second_holds}}.dump() << "\n";
    } else {
        auto line = [&](const char* text, bool holds, const std::optional<Word>& witness) {
            ctx.out << text << ": " << (holds ? "holds" : "fails");
            if (witness) ctx.out << " (differs at '" << *witness << "')";
            ctx.out << "\n";
        };
        ctx.out << "words of length <= " << n << "\n";
        line("{a^n b^m c^l : n=m or m=l} xor {l=m xor m=n} = {a^n b^n c^n}", rep.first_holds, rep.first_witness);
        line("a*b*c* xor {a^n b^m c^l : n!=m or m!=l} = {a^n b^n c^n}", rep.second_holds, rep.second_witness);
    }
    return rep.holds() ? kOk : kNegative;
}

int cmd_fixtures(Context& ctx, const std::string& dir) {
    const auto results = run_fixture_suite(dir);
    bool ok = true;
    json arr = json::array();
    for (const auto& r : results) {
        ok = ok && r.status == "pass";
        arr.push_back({{"name", r.name}, {"status", r.status}});
        if (!ctx.as_json) {
            ctx.out << (r.status == "pass" ? "PASS" : r.status == "fail" ? "FAIL" : "MISSING") << " " << r.name;
            if (!r.detail.empty()) ctx.out << ": " << r.detail;
            ctx.out << "\n";
        }
    }
    if (ctx.as_json) ctx.out << arr.dump() << "\n";
    return ok ? kOk : kNegative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"GF(2)-grammar toolkit", "gf2g"};
    app.require_subcommand(1);
    Context ctx{out, err};
    app.add_flag("--json", ctx.as_json, "Machine-readable output");

    std::string grammar, word, dfa, letters = "ab", box = "8", poly, series_path, family, window, dir;
    int n = 8, d_max = 2, deg_max = 2, max_deg = 2, seed = 1, count = 3, bound = 10;
    bool no_prune = false, compare = false, dump = false, verify = false, by_enum = false;
    std::function<int()> action;

    auto* v = app.add_subcommand("validate", "Check that every word has finitely many parse trees");
    v->add_option("grammar", grammar)->required();
    v->callback([&] { action = [&] { return cmd_validate(ctx, grammar); }; });

    auto* c = app.add_subcommand("cnf", "Convert to Chomsky normal form");
    c->add_option("grammar", grammar)->required();
    c->callback([&] { action = [&] { return cmd_cnf(ctx, grammar); }; });

    auto* m = app.add_subcommand("member", "Parity of the parse trees of a word");
    m->add_option("grammar", grammar)->required();
    m->add_option("--word", word, "The word ('-' for the empty word)")->required();
    m->callback([&] { action = [&] { return cmd_member(ctx, grammar, word); }; });

    auto* e = app.add_subcommand("enum", "Words of length <= n in the language");
    e->add_option("grammar", grammar)->required();
    e->add_option("--n", n, "Length bound")->check(CLI::NonNegativeNumber);
    e->callback([&] { action = [&] { return cmd_enum(ctx, grammar, n); }; });

    auto* x = app.add_subcommand("intersect", "Intersect with a DFA (file or chain:letters)");
    x->add_option("grammar", grammar)->required();
    x->add_option("--dfa", dfa)->required();
    x->add_flag("--no-prune", no_prune, "Keep useless triples");
    x->callback([&] { action = [&] { return cmd_intersect(ctx, grammar, dfa, no_prune); }; });

    auto* s = app.add_subcommand("series", "Power series of a bounded language");
    s->add_option("grammar", grammar)->required();
    s->add_option("--letters", letters, "Chain letters");
    s->add_option("--box", box, "Degree box, e.g. 8,8");
    s->add_flag("--enumerate", by_enum, "Read the series off an enumeration instead of solving");
    s->callback([&] { action = [&] { return cmd_series(ctx, grammar, letters, box, by_enum); }; });

    auto* so = app.add_subcommand("solve", "Solve the split linear system of a bounded language");
    so->add_option("grammar", grammar)->required();
    so->add_option("--letters", letters, "Chain letters (at least two)");
    so->add_option("--box", box, "Degree box, e.g. 12,12");
    so->add_flag("--compare", compare, "Compare with the enumeration oracle");
    so->add_flag("--dump-system", dump, "Print A, B and f as JSON");
    so->callback([&] { action = [&] { return cmd_solve(ctx, grammar, letters, box, compare, dump); }; });

    auto* r = app.add_subcommand("recurrence", "Search p_0..p_d with sum p_i l(n-i) = 0");
    r->add_option("source", grammar, "Grammar file or series JSON file");
    r->add_option("--family", family, "Built-in series: anbn, power-diagonal");
    r->add_option("--letters", letters, "Chain letters for a grammar source");
    std::string rbox;
    r->add_option("--box", rbox, "Degree box (default 32)");
    r->add_option("--d-max", d_max)->check(CLI::NonNegativeNumber);
    r->add_option("--deg-max", deg_max)->check(CLI::NonNegativeNumber);
    r->add_option("--window", window, "n0:N");
    r->callback([&] {
        action = [&] { return cmd_recurrence(ctx, grammar, family, letters, rbox, d_max, deg_max, window); };
    });

    auto* t = app.add_subcommand("trace", "Trace of g * sum a^n b^n c^n, or of a series file");
    t->add_option("--poly", poly, "The polynomial g (default 1)");
    t->add_option("--series", series_path, "Series JSON file over three variables");
    std::string tbox;
    t->add_option("--box", tbox, "Degree box (default 8)");
    t->callback([&] { action = [&] { return cmd_trace(ctx, poly, series_path, tbox); }; });

    auto* b = app.add_subcommand("blocks", "Type-class structure of sum A_i B_i C_i");
    b->add_option("file", series_path, "JSON {\"box\": N, \"summands\": [{\"a\": [...], \"b\": [...], \"c\": [...]}]}");
    b->add_option("--random", seed, "Seed for random summands");
    b->add_option("--summands", count)->check(CLI::Range(1, 32));
    b->add_option("--bound", bound)->check(CLI::NonNegativeNumber);
    b->callback([&] { action = [&] { return cmd_blocks(ctx, series_path, seed, count, bound); }; });

    auto* ir = app.add_subcommand("irreducible", "Exhaustive factor search");
    ir->add_option("poly", poly)->required();
    ir->add_option("--max-deg", max_deg)->check(CLI::NonNegativeNumber);
    ir->callback([&] { action = [&] { return cmd_irreducible(ctx, poly, max_deg); }; });

    auto* q = app.add_subcommand("quotient", "Grammar for Dual(L_num) / p");
    q->add_option("grammar", grammar)->required();
    q->add_option("--poly", poly)->required();
    q->add_flag("--verify", verify, "Check Dual(L_new) * p = Dual(L_num) on the box");
    std::string qbox = "12,12";
    q->add_option("--box", qbox);
    q->callback([&] { action = [&] { return cmd_quotient(ctx, grammar, poly, verify, qbox); }; });

    auto* a = app.add_subcommand("ambiguity-report", "Check the two a^n b^n c^n slice identities");
    int an = 9;
    a->add_option("--n", an)->check(CLI::NonNegativeNumber);
    a->callback([&] { action = [&] { return cmd_ambiguity(ctx, an); }; });

    auto* f = app.add_subcommand("fixtures", "Run the bundled fixture suite");
    dir = GF2G_FIXTURE_DIR;
    f->add_option("--dir", dir, "Fixture directory");
    f->callback([&] { action = [&] { return cmd_fixtures(ctx, dir); }; });

    std::vector<const char*> argv{"gf2g"};
    for (const auto& arg : args) argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }
    try {
        return action ? action() : kUsage;
    } catch (const LimitExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace gf2g
