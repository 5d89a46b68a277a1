#include "gf2g/analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "gf2g/bit_matrix.hpp"
#include "gf2g/error.hpp"
#include "gf2g/fixtures.hpp"

namespace gf2g {

CoeffWindow coeff_window(const TruncSeries& f, DegreeEnvelope envelope) {
    if (f.arity() != 2)
        throw InvalidArgument("coefficient windows need a two-variable series, got " + std::to_string(f.arity()));
    CoeffWindow w;
    w.outer = f.vars()[0];
    w.inner = f.vars()[1];
    w.source_box = f.box();
    const std::string inner(1, w.inner);
    for (int n = 0; n <= f.box()[0]; ++n) {
        Poly p(inner);
        for (int m = 0; m <= f.box()[1]; ++m)
            if (f.coefficient(ExpVec{n, m})) p.toggle(ExpVec{m});
        w.entries.push_back(std::move(p));
        w.trusted.push_back(static_cast<long>(envelope.slope) * n + envelope.offset <= f.box()[1]);
    }
    return w;
}

std::optional<RecurrenceWitness> find_recurrence(const CoeffWindow& w, int d_max, int deg_max, int n0,
                                                 std::optional<int> last_in) {
    const int last = last_in.value_or(w.last());
    if (d_max < 0 || deg_max < 0) throw InvalidArgument("recurrence bounds must be nonnegative");
    if (n0 <= d_max) throw InvalidArgument("window start must exceed the largest order");
    if (last > w.last()) throw InvalidArgument("window end lies beyond the extracted coefficients");
    if (last - n0 < (d_max + 1) * (deg_max + 1))
        throw InvalidArgument("window [" + std::to_string(n0) + ", " + std::to_string(last) +
                              "] is too short for order " + std::to_string(d_max) + " and degree " +
                              std::to_string(deg_max));
    for (int n = n0 - d_max; n <= last; ++n)
        if (!w.trusted.at(n))
            throw InvalidArgument("coefficient l(" + std::to_string(n) + ") is not determined by the box");

    const std::string inner(1, w.inner);

    for (int d = 0; d <= d_max; ++d) {
        // Unknown p_i[s] sits in column s (d + 1) + i: by degree, then by index.
        const std::size_t cols = static_cast<std::size_t>((d + 1) * (deg_max + 1));
        BitMatrix m(0, cols);
        for (int n = n0; n <= last; ++n) {
            // Rows: coefficient of inner^t in sum_i p_i l(n - i).
            std::map<int, std::size_t> row_of;
            for (int i = 0; i <= d; ++i)
                for (const auto& e : w.entries[n - i].support())
                    for (int s = 0; s <= deg_max; ++s) {
                        const int t = e[0] + s;
                        auto it = row_of.find(t);
                        if (it == row_of.end()) it = row_of.emplace(t, m.append_row()).first;
                        m.flip(it->second, static_cast<std::size_t>(s * (d + 1) + i));
                    }
        }
        std::vector<std::size_t> free_cols;
        auto basis = m.nullspace(&free_cols);
        for (const auto& v : basis) {
            bool top_nonzero = false;
            for (int s = 0; s <= deg_max; ++s) top_nonzero = top_nonzero || v[s * (d + 1) + d];
            if (!top_nonzero) continue;
            RecurrenceWitness r;
            r.d = d;
            r.window_start = n0;
            r.verified_through = last;
            for (int i = 0; i <= d; ++i) {
                Poly p(inner);
                for (int s = 0; s <= deg_max; ++s)
                    if (v[s * (d + 1) + i]) p.toggle(ExpVec{s});
                r.polys.push_back(std::move(p));
            }
            return r;
        }
    }
    return std::nullopt;
}

bool verify_recurrence(const CoeffWindow& w, const RecurrenceWitness& r) {
    if (r.polys.size() != static_cast<std::size_t>(r.d) + 1 || r.polys.back().is_zero()) return false;
    if (r.window_start < r.d || r.verified_through > w.last()) return false;
    for (int n = r.window_start; n <= r.verified_through; ++n) {
        Poly sum(std::string(1, w.inner));
        for (int i = 0; i <= r.d; ++i) sum = poly_add(sum, poly_mul(r.polys[i], w.entries[n - i]));
        if (!sum.is_zero()) return false;
    }
    return true;
}

std::string format_recurrence(const RecurrenceWitness& r) {
    std::string out = "d = " + std::to_string(r.d);
    for (int i = 0; i <= r.d; ++i) out += ", p" + std::to_string(i) + " = " + format_poly(r.polys[i]);
    out += " (n in [" + std::to_string(r.window_start) + ", " + std::to_string(r.verified_through) + "])";
    return out;
}

// ---------------------------------------------------------------------------

namespace {

void set_band(TraceReport& rep, const Box& box) {
    rep.observed_width = 0;
    for (const auto& e : rep.support) {
        const int w = std::max({std::abs(e[0] - e[1]), std::abs(e[0] - e[2]), std::abs(e[1] - e[2])});
        rep.observed_width = std::max(rep.observed_width, w);
    }
    const int room = *std::min_element(box.begin(), box.end());
    if (2 * rep.observed_width < room) rep.band_width = rep.observed_width;
}

}  // namespace

TraceReport trace_support(const TruncSeries& f) {
    if (f.arity() != 3) throw InvalidArgument("traces need a three-variable series, got " + std::to_string(f.arity()));
    TraceReport rep;
    rep.support = f.support();
    set_band(rep, f.box());
    return rep;
}

TraceReport block_check(const std::vector<BlockSummand>& summands) {
    if (summands.empty()) throw InvalidArgument("block_check needs at least one summand");
    if (summands.size() > 32) throw LimitExceeded("block_check supports at most 32 summands");
    std::array<char, 3> axis_var{};
    Box box(3);
    for (int axis = 0; axis < 3; ++axis) {
        for (std::size_t i = 0; i < summands.size(); ++i) {
            const auto& s = axis == 0 ? summands[i].a : axis == 1 ? summands[i].b : summands[i].c;
            if (s.arity() != 1) throw InvalidArgument("block summands are single-variable series");
            if (i == 0) {
                axis_var[axis] = s.vars()[0];
                box[axis] = s.box()[0];
            } else {
                if (s.vars()[0] != axis_var[axis]) throw InvalidArgument("summands disagree on a variable");
                box[axis] = std::min(box[axis], s.box()[0]);
            }
        }
    }
    const std::string vars{axis_var[0], axis_var[1], axis_var[2]};
    if (normalize_alphabet(vars).size() != 3) throw InvalidArgument("the three axes need distinct variables");

    // Trace by series arithmetic.
    TruncSeries total(vars, box);
    auto lift = [&](const TruncSeries& s, int axis) {
        TruncSeries out(vars, box);
        ExpVec e(3, 0);
        for (int x = 0; x <= box[axis]; ++x) {
            e[axis] = x;
            if (s.coefficient(std::vector<int>{x})) out.toggle(e);
        }
        return out;
    };
    for (const auto& s : summands) total = add(total, mul(mul(lift(s.a, 0), lift(s.b, 1)), lift(s.c, 2)));

    TypeClasses tc;
    for (int axis = 0; axis < 3; ++axis) {
        std::map<unsigned, int> index;
        for (int x = 0; x <= box[axis]; ++x) {
            unsigned mask = 0;
            for (std::size_t i = 0; i < summands.size(); ++i) {
                const auto& s = axis == 0 ? summands[i].a : axis == 1 ? summands[i].b : summands[i].c;
                if (s.coefficient(std::vector<int>{x})) mask |= 1U << i;
            }
            auto [it, fresh] = index.emplace(mask, static_cast<int>(tc.types[axis].size()));
            if (fresh) tc.types[axis].push_back(mask);
            tc.class_of[axis].push_back(it->second);
        }
    }
    for (int p = 0; p < static_cast<int>(tc.types[0].size()); ++p)
        for (int q = 0; q < static_cast<int>(tc.types[1].size()); ++q)
            for (int r = 0; r < static_cast<int>(tc.types[2].size()); ++r)
                if (__builtin_popcount(tc.types[0][p] & tc.types[1][q] & tc.types[2][r]) % 2)
                    tc.odd_blocks.push_back({p, q, r});

    TraceReport rep;
    rep.support = total.support();
    set_band(rep, box);
    // Every point must agree with the block its type triple falls in.
    std::map<std::array<int, 3>, bool> seen;
    for (int x = 0; x <= box[0] && rep.consistent; ++x)
        for (int y = 0; y <= box[1] && rep.consistent; ++y)
            for (int z = 0; z <= box[2] && rep.consistent; ++z) {
                const std::array<int, 3> key{tc.class_of[0][x], tc.class_of[1][y], tc.class_of[2][z]};
                const bool bit = total.coefficient(std::vector<int>{x, y, z});
                const bool odd = __builtin_popcount(tc.types[0][key[0]] & tc.types[1][key[1]] & tc.types[2][key[2]]) % 2;
                auto [it, fresh] = seen.emplace(key, bit);
                if (bit != odd || (!fresh && it->second != bit)) rep.consistent = false;
            }
    rep.classes = std::move(tc);
    return rep;
}

// ---------------------------------------------------------------------------

FactorizationReport factor_search(const Poly& p_in, int max_total_deg) {
    if (p_in.is_zero()) throw InvalidArgument("factor_search needs a nonzero polynomial");
    // Restrict to the variables p uses.
    std::string used;
    const ExpVec deg_all = p_in.degrees();
    for (std::size_t i = 0; i < deg_all.size(); ++i)
        if (deg_all[i] > 0) used += p_in.vars()[i];
    Poly p(used);
    for (const auto& e : p_in.support()) {
        ExpVec f;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (deg_all[i] > 0) f.push_back(e[i]);
        p.toggle(f);
    }

    FactorizationReport rep;
    const int total = p.total_degree();
    const int limit = std::min(max_total_deg, total - 1);
    rep.complete = max_total_deg >= total / 2;
    if (limit < 1) return rep;

    // Candidate monomials of a factor: per-variable degree within p's, total degree <= limit.
    const ExpVec deg = p.degrees();
    std::vector<ExpVec> monomials;
    {
        TruncSeries grid(used, deg);
        for (std::size_t i = 0; i < grid.cell_count(); ++i) {
            auto e = grid.exponent_of(i);
            int t = 0;
            for (int x : e) t += x;
            if (t <= limit) monomials.push_back(std::move(e));
        }
    }
    if (monomials.size() >= 63 || (std::size_t{1} << monomials.size()) > max_search_size())
        throw LimitExceeded("factor search over " + std::to_string(monomials.size()) +
                            " monomials exceeds the search cap (GF2G_MAX_MONOMIALS)");

    const std::size_t count = std::size_t{1} << monomials.size();
    for (std::size_t mask = 1; mask < count; ++mask) {
        Poly g(used);
        for (std::size_t b = 0; b < monomials.size(); ++b)
            if (mask >> b & 1U) g.toggle(monomials[b]);
        if (g.total_degree() < 1) continue;
        ++rep.candidates;
        if (auto h = poly_quotient(p, g)) {
            rep.factors = std::make_pair(g.over(p_in.vars()), h->over(p_in.vars()));
            return rep;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------

Gf2Grammar build_quotient_grammar(const RabIntWitness& w, int check_bound) {
    for (char c : w.denominator.vars())
        if (c != 'a' && c != 'b') throw InvalidArgument("the denominator must be a polynomial in a and b");
    const Poly p = w.denominator.over("ab");
    if (!p.constant_term()) throw InvalidArgument("the denominator needs constant term 1");
    for (char c : w.numerator.alphabet())
        if (c != 'a' && c != 'b') throw InvalidArgument("the numerator must be a grammar over a and b");
    const auto report = validate_wellformed(w.numerator);
    if (!report.accepted) throw InvalidArgument("the numerator grammar is not well-formed");
    const auto cnf = to_cnf(w.numerator);
    const auto slice = enumerate(cnf, check_bound);
    for (const auto& word : slice.words())
        if (word.find("ba") != std::string::npos)
            throw InvalidArgument("the numerator leaves a*b*: it contains '" + word + "'");

    Gf2Grammar g = w.numerator;
    std::string fresh = "S_new";
    for (int i = 1; g.has_nonterminal(fresh); ++i) fresh = "S_new_" + std::to_string(i);
    g.set_start(fresh);
    g.add_letter('a');
    g.add_letter('b');
    for (const auto& e : p.support()) {
        if (e[0] == 0 && e[1] == 0) continue;
        std::vector<Symbol> body(static_cast<std::size_t>(e[0]), Symbol::terminal('a'));
        body.push_back(Symbol::nonterminal(fresh));
        body.insert(body.end(), static_cast<std::size_t>(e[1]), Symbol::terminal('b'));
        g.toggle_rule(Rule{fresh, std::move(body)});
    }
    g.toggle_rule(Rule{fresh, {Symbol::nonterminal(w.numerator.start())}});
    return g;
}

QuotientCheck verify_quotient(const RabIntWitness& w, const Gf2Grammar& quotient, const Box& box) {
    if (box.size() != 2) throw InvalidArgument("quotient checks use a box over a and b");
    const int n = box_total(box);
    auto dual = [&](const Gf2Grammar& g) { return dual_of_slice(enumerate(to_cnf(g), n), "ab", box); };
    QuotientCheck c{false, mul(dual(quotient), TruncSeries::from_poly(w.denominator.over("ab"), box)),
                    dual(w.numerator)};
    c.holds = c.lhs == c.rhs;
    return c;
}

// ---------------------------------------------------------------------------

CorollarySlices corollary_slices(int n) {
    if (n < 0) throw InvalidArgument("slice bound must be nonnegative");
    CorollarySlices s{LangSlice("abc", n), LangSlice("abc", n), LangSlice("abc", n), LangSlice("abc", n),
                      LangSlice("abc", n)};
    for (int x = 0; x <= n; ++x)
        for (int y = 0; x + y <= n; ++y)
            for (int z = 0; x + y + z <= n; ++z) {
                const Word w = chain_word("abc", {x, y, z});
                s.chain.insert(w);
                if (x == y || y == z) s.l1.insert(w);
                if (x != y || y != z) s.l2.insert(w);
                if (x == y && y == z) s.target.insert(w);
            }
    const auto xor_lang = enumerate(to_cnf(parse_grammar(fixtures::xor_equalities())), n);
    s.xor_lang = LangSlice("abc", n, std::vector<Word>(xor_lang.words().begin(), xor_lang.words().end()));
    return s;
}

AmbiguityReport check_corollaries(const CorollarySlices& s) {
    AmbiguityReport rep;
    rep.bound = s.target.bound();
    auto first_difference = [](const LangSlice& x, const LangSlice& y) -> std::optional<Word> {
        const auto d = sym_diff(x, y);
        if (d.empty()) return std::nullopt;
        return *d.words().begin();
    };
    rep.first_witness = first_difference(sym_diff(s.l1, s.xor_lang), s.target);
    rep.second_witness = first_difference(sym_diff(s.chain, s.l2), s.target);
    rep.first_holds = !rep.first_witness;
    rep.second_holds = !rep.second_witness;
    return rep;
}

AmbiguityReport inherent_ambiguity_report(int n) { return check_corollaries(corollary_slices(n)); }

}  // namespace gf2g
