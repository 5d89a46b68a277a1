#include "gf2g/solver.hpp"

#include <algorithm>
#include <json.hpp>

#include "gf2g/automata.hpp"
#include "gf2g/error.hpp"
#include "gf2g/lang.hpp"

namespace gf2g {

int LinearSystem::index_of(std::string_view nonterminal) const {
    auto it = std::find(unknowns.begin(), unknowns.end(), nonterminal);
    return it == unknowns.end() ? -1 : static_cast<int>(it - unknowns.begin());
}

bool SolveReport::all_match() const {
    return !oracle_match.empty() && std::all_of(oracle_match.begin(), oracle_match.end(), [](bool b) { return b; });
}

namespace {

void check_chain_args(std::string_view letters, const Box& box) {
    if (letters.empty()) throw InvalidArgument("at least one chain letter is needed");
    if (letters.size() != box.size()) throw InvalidArgument("box needs one bound per chain letter");
    if (normalize_alphabet(letters).size() != letters.size())
        throw InvalidArgument("chain letters must be distinct: '" + std::string(letters) + "'");
    for (int b : box)
        if (b < 0) throw InvalidArgument("negative box bound");
}

// Position of the first letter of w that breaks the chain order, or npos.
std::size_t chain_break(std::string_view w, std::string_view letters) {
    std::size_t pos = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        while (pos < letters.size() && letters[pos] != w[i]) ++pos;
        if (pos == letters.size()) return i;
    }
    return std::string_view::npos;
}

// Chain automaton that also knows the grammar's extra letters (with no edges).
Dfa chain_over(std::string_view letters, std::string_view extra) {
    Dfa m(std::string(letters) + std::string(extra));
    for (char c : letters) m.add_state(std::string("q_") + c, true);
    for (std::size_t i = 0; i < letters.size(); ++i)
        for (std::size_t j = i; j < letters.size(); ++j)
            m.add_edge(static_cast<int>(i), letters[j], static_cast<int>(j));
    m.set_start(0);
    return m;
}

// Dual(L(C) ∩ a_i+) for every nonterminal, read off one CYK table over a_i^box_i.
std::map<std::string, TruncSeries> unary_parts(const CnfGrammar& g, std::string_view letters, const Box& box,
                                               std::size_t i) {
    std::map<std::string, TruncSeries> out;
    const std::string vars(letters);
    for (const auto& c : g.base().nonterminals()) out.emplace(c, TruncSeries(vars, box));
    if (g.alphabet().find(letters[i]) == std::string::npos || box[i] == 0) return out;
    const auto table = parity_table(g, std::string(static_cast<std::size_t>(box[i]), letters[i]));
    const auto& names = table.nonterminals();
    ExpVec e(letters.size(), 0);
    for (std::size_t nt = 0; nt < names.size(); ++nt) {
        auto& s = out.at(names[nt]);
        for (int n = 1; n <= box[i]; ++n)
            if (table.at(nt, 0, static_cast<std::size_t>(n))) {
                e[i] = n;
                s.toggle(e);
            }
    }
    return out;
}

struct SpanInputs {
    std::vector<std::string> unknowns;
    SeriesMatrix a, b;
    std::vector<TruncSeries> f;
};

// Matrices and right side of the span (i, j) over the given unknowns; interior
// split points m draw on the already solved spans (i, m) and (m, j).
SpanInputs span_inputs(const CnfGrammar& g, const ChainSolution& cs, int i, int j,
                       std::vector<std::string> unknowns) {
    const std::string vars = cs.letters;
    const TruncSeries zero(vars, cs.box);
    SpanInputs in;
    in.unknowns = std::move(unknowns);
    const std::size_t n = in.unknowns.size();
    in.a.assign(n, std::vector<TruncSeries>(n, zero));
    in.b.assign(n, std::vector<TruncSeries>(n, zero));
    in.f.assign(n, zero);
    std::map<std::string, std::size_t> pos;
    for (std::size_t r = 0; r < n; ++r) pos.emplace(in.unknowns[r], r);

    ExpVec last(vars.size(), 0);
    last[j] = 1;
    for (std::size_t r = 0; r < n; ++r) {
        for (const auto& rule : g.base().rules_for(in.unknowns[r])) {
            if (rule.body.size() == 1) {
                if (rule.body[0].letter() == vars[j] && cs.box[j] >= 1) in.f[r].toggle(last);
                continue;
            }
            const auto& d = rule.body[0].name;
            const auto& e = rule.body[1].name;
            if (auto it = pos.find(e); it != pos.end())
                in.a[r][it->second] = add(in.a[r][it->second], cs.unary[i].at(d));
            if (auto it = pos.find(d); it != pos.end())
                in.b[r][it->second] = add(in.b[r][it->second], cs.unary[j].at(e));
            for (int m = i + 1; m < j; ++m)
                in.f[r] = add(in.f[r], mul(cs.center.at({i, m}).at(d), cs.center.at({m, j}).at(e)));
        }
    }
    return in;
}

std::vector<TruncSeries> iterate(const SpanInputs& in, const Box& box, int& iterations) {
    const std::size_t n = in.unknowns.size();
    // Nonzero coefficients of A + B per row.
    std::vector<std::vector<std::pair<std::size_t, TruncSeries>>> rows(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            auto s = add(in.a[r][c], in.b[r][c]);
            if (!s.is_zero()) rows[r].emplace_back(c, std::move(s));
        }
    iterations = 0;
    if (n == 0) return {};
    std::vector<TruncSeries> x(n, TruncSeries(in.f[0].vars(), box));
    const int cap = 2 + box_total(box);
    while (true) {
        std::vector<TruncSeries> next = in.f;
        for (std::size_t r = 0; r < n; ++r)
            for (const auto& [c, s] : rows[r])
                if (!x[c].is_zero()) next[r] = add(next[r], mul(s, x[c]));
        if (next == x) return x;
        x = std::move(next);
        if (++iterations > cap)
            throw Error("fixed-point iteration did not settle within " + std::to_string(cap) +
                        " rounds; A + B has a nonzero constant term");
    }
}

// Nonterminals C whose triple (q_i, C, q_j) is reachable from (q_i, S, q_j) and productive.
std::vector<std::string> live_unknowns(const CnfGrammar& g, std::string_view letters, int i, int j) {
    const std::string sub(letters.substr(i, j - i + 1));
    std::string extra;
    for (char c : g.alphabet())
        if (sub.find(c) == std::string::npos) extra += c;
    const auto ix = intersect_gf2(g, chain_over(sub, extra), false);
    Gf2Grammar h = ix.grammar.base();
    h.set_start(*ix.triple_name(g.start(), 0, j - i));
    const auto useful = useful_nonterminals(h);
    std::vector<std::string> out;
    for (const auto& c : g.base().nonterminals())
        if (useful.count(*ix.triple_name(c, 0, j - i))) out.push_back(c);
    return out;
}

}  // namespace

TruncSeries ChainSolution::total(std::string_view start) const {
    TruncSeries out = unary.at(0).at(std::string(start));
    if (eps) out.toggle(ExpVec(letters.size(), 0));
    for (int j = 1; j < static_cast<int>(letters.size()); ++j) out = add(out, center.at({0, j}).at(std::string(start)));
    return out;
}

void check_within_chain(const CnfGrammar& g, std::string_view letters, const Box& box) {
    check_chain_args(letters, box);
    const auto slice = enumerate(g, box_total(box));
    for (const auto& w : slice.words())
        if (auto at = chain_break(w, letters); at != std::string_view::npos)
            throw InvalidArgument("language leaves the chain " + std::string(letters) + ": word '" + w +
                                  "' breaks the order at position " + std::to_string(at + 1));
}

ChainSolution solve_chain(const CnfGrammar& g, std::string_view letters, const Box& box) {
    check_within_chain(g, letters, box);
    ChainSolution cs;
    cs.letters = std::string(letters);
    cs.box = box;
    cs.eps = g.eps_parity();
    cs.nonterminals.assign(g.base().nonterminals().begin(), g.base().nonterminals().end());
    const int k = static_cast<int>(letters.size());
    for (int i = 0; i < k; ++i) cs.unary.push_back(unary_parts(g, letters, box, static_cast<std::size_t>(i)));
    for (int len = 1; len < k; ++len)
        for (int i = 0; i + len < k; ++i) {
            const int j = i + len;
            auto in = span_inputs(g, cs, i, j, cs.nonterminals);
            int iters = 0;
            auto x = iterate(in, box, iters);
            auto& slot = cs.center[{i, j}];
            for (std::size_t r = 0; r < x.size(); ++r) slot.emplace(in.unknowns[r], std::move(x[r]));
            cs.iterations[{i, j}] = iters;
        }
    return cs;
}

TruncSeries extract_dual(const CnfGrammar& g, std::string_view letters, const Box& box) {
    return solve_chain(g, letters, box).total(g.start());
}

LinearSystem build_split_system(const CnfGrammar& g, std::string_view letters, const Box& box) {
    check_chain_args(letters, box);
    const int k = static_cast<int>(letters.size());
    if (k < 2) throw InvalidArgument("a split system needs at least two chain letters");

    // Shorter spans first; the whole-chain span is left for the caller to solve.
    check_within_chain(g, letters, box);
    ChainSolution cs;
    cs.letters = std::string(letters);
    cs.box = box;
    cs.nonterminals.assign(g.base().nonterminals().begin(), g.base().nonterminals().end());
    for (int i = 0; i < k; ++i) cs.unary.push_back(unary_parts(g, letters, box, static_cast<std::size_t>(i)));
    for (int len = 1; len < k - 1; ++len)
        for (int i = 0; i + len < k; ++i) {
            const int j = i + len;
            auto in = span_inputs(g, cs, i, j, cs.nonterminals);
            int iters = 0;
            auto x = iterate(in, box, iters);
            auto& slot = cs.center[{i, j}];
            for (std::size_t r = 0; r < x.size(); ++r) slot.emplace(in.unknowns[r], std::move(x[r]));
        }

    auto in = span_inputs(g, cs, 0, k - 1, live_unknowns(g, letters, 0, k - 1));
    LinearSystem sys;
    sys.letters = std::string(letters);
    sys.box = box;
    sys.first = 0;
    sys.last = k - 1;
    sys.unknowns = std::move(in.unknowns);
    sys.a = std::move(in.a);
    sys.b = std::move(in.b);
    sys.f = std::move(in.f);
    return sys;
}

SolveReport solve_fixed_point(const LinearSystem& sys) {
    SpanInputs in{sys.unknowns, sys.a, sys.b, sys.f};
    SolveReport rep;
    rep.solution = iterate(in, sys.box, rep.iterations);
    return rep;
}

std::vector<TruncSeries> oracle_centers(const CnfGrammar& g, const LinearSystem& sys) {
    const auto slices = enumerate_all(g, box_total(sys.box));
    const std::string_view span = std::string_view(sys.letters).substr(sys.first, sys.last - sys.first + 1);
    std::vector<TruncSeries> out;
    for (const auto& c : sys.unknowns) {
        TruncSeries s(sys.letters, sys.box);
        for (const auto& w : slices.at(c).words()) {
            if (w.empty() || w.back() != sys.letters[sys.last]) continue;
            if (chain_break(w, span) != std::string_view::npos) continue;
            ExpVec e(sys.letters.size(), 0);
            for (char ch : w) ++e[sys.letters.find(ch)];
            if (s.in_box(e)) s.toggle(e);
        }
        out.push_back(std::move(s));
    }
    return out;
}

void compare_with_oracle(const CnfGrammar& g, const LinearSystem& sys, SolveReport& report) {
    const auto oracle = oracle_centers(g, sys);
    report.oracle_match.assign(oracle.size(), false);
    for (std::size_t r = 0; r < oracle.size(); ++r) report.oracle_match[r] = oracle[r] == report.solution.at(r);
}

SeriesMatrix system_matrix(const LinearSystem& sys) {
    SeriesMatrix m = sys.a;
    for (std::size_t r = 0; r < sys.size(); ++r) {
        for (std::size_t c = 0; c < sys.size(); ++c) m[r][c] = add(m[r][c], sys.b[r][c]);
        m[r][r].toggle(ExpVec(sys.letters.size(), 0));
    }
    return m;
}

std::vector<TruncSeries> residual(const LinearSystem& sys, const std::vector<TruncSeries>& x) {
    const auto m = system_matrix(sys);
    std::vector<TruncSeries> out = sys.f;
    for (std::size_t r = 0; r < sys.size(); ++r)
        for (std::size_t c = 0; c < sys.size(); ++c) out[r] = add(out[r], mul(m[r][c], x.at(c)));
    return out;
}

TruncSeries determinant(const SeriesMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) throw InvalidArgument("determinant of an empty matrix");
    if (n > 20) throw LimitExceeded("determinant by subset expansion is limited to 20 rows");
    for (const auto& row : m)
        if (row.size() != n) throw InvalidArgument("determinant of a non-square matrix");
    const auto& proto = m[0][0];
    // dp[S]: sum over assignments of the first |S| rows to the columns in S.
    std::vector<std::optional<TruncSeries>> dp(std::size_t{1} << n);
    dp[0] = TruncSeries::one(proto.vars(), proto.box());
    for (std::size_t mask = 0; mask + 1 < dp.size(); ++mask) {
        if (!dp[mask] || dp[mask]->is_zero()) continue;
        const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
        for (std::size_t c = 0; c < n; ++c) {
            if (mask & (std::size_t{1} << c) || m[row][c].is_zero()) continue;
            auto term = mul(*dp[mask], m[row][c]);
            auto& slot = dp[mask | (std::size_t{1} << c)];
            slot = slot ? add(*slot, term) : term;
        }
    }
    auto& full = dp.back();
    return full ? *full : TruncSeries(proto.vars(), proto.box());
}

std::vector<TruncSeries> solve_cramer(const LinearSystem& sys) {
    const auto m = system_matrix(sys);
    const auto det = determinant(m);
    if (!det.constant_term()) throw Error("determinant has constant term 0; Cramer's rule does not apply");
    const auto inv = invert_unit(det);
    std::vector<TruncSeries> x;
    for (std::size_t c = 0; c < sys.size(); ++c) {
        auto mc = m;
        for (std::size_t r = 0; r < sys.size(); ++r) mc[r][c] = sys.f[r];
        x.push_back(mul(determinant(mc), inv));
    }
    return x;
}

LinearSystem restrict_system(const LinearSystem& sys, const Box& box) {
    LinearSystem out = sys;
    out.box = box;
    for (auto* mat : {&out.a, &out.b})
        for (auto& row : *mat)
            for (auto& s : row) s = s.restrict(box);
    for (auto& s : out.f) s = s.restrict(box);
    return out;
}

std::string system_to_json(const LinearSystem& sys) {
    using nlohmann::json;
    auto series = [](const TruncSeries& s) { return json::parse(series_to_json(s)); };
    auto matrix = [&](const SeriesMatrix& m) {
        json out = json::array();
        for (const auto& row : m) {
            json r = json::array();
            for (const auto& s : row) r.push_back(series(s));
            out.push_back(std::move(r));
        }
        return out;
    };
    json j;
    j["letters"] = sys.letters;
    j["box"] = sys.box;
    j["unknowns"] = sys.unknowns;
    j["a"] = matrix(sys.a);
    j["b"] = matrix(sys.b);
    j["f"] = json::array();
    for (const auto& s : sys.f) j["f"].push_back(series(s));
    return j.dump();
}

}  // namespace gf2g
