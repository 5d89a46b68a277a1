#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gf2g/grammar.hpp"
#include "gf2g/lang.hpp"
#include "gf2g/series.hpp"

namespace gf2g {

// ---------------------------------------------------------------------------
// Coefficient windows and recurrences

// Bound on the inner degree of l(n): deg l(n) <= slope * n + offset.
struct DegreeEnvelope {
    int slope = 1;
    int offset = 0;
};

// f = sum over n of outer^n l(n), with l(n) a polynomial in the inner variable.
struct CoeffWindow {
    char outer = 'a';
    char inner = 'b';
    Box source_box;
    std::vector<Poly> entries;
    // l(n) is exact when the envelope keeps its degree inside the box.
    std::vector<bool> trusted;

    int last() const { return static_cast<int>(entries.size()) - 1; }
};

CoeffWindow coeff_window(const TruncSeries& f, DegreeEnvelope envelope = {});

struct RecurrenceWitness {
    int d = 0;
    std::vector<Poly> polys;  // p_0 .. p_d in the inner variable, p_d != 0
    int window_start = 0;
    int verified_through = 0;
};

// Smallest order d <= d_max admitting p_0..p_d of degree <= deg_max, p_d != 0,
// with sum p_i l(n - i) = 0 for n0 <= n <= last (default: the window end).
// Throws InvalidArgument when n0 <= d_max, when the window holds fewer than
// (d_max + 1)(deg_max + 1) positions past n0, or when it reaches untrusted entries.
// No witness is evidence within these bounds only.
std::optional<RecurrenceWitness> find_recurrence(const CoeffWindow& w, int d_max, int deg_max, int n0,
                                                 std::optional<int> last = std::nullopt);
// Recomputes sum p_i l(n - i) with polynomial arithmetic over the witness range.
bool verify_recurrence(const CoeffWindow& w, const RecurrenceWitness& r);
std::string format_recurrence(const RecurrenceWitness& r);

// ---------------------------------------------------------------------------
// Traces of three-variable series

struct TypeClasses {
    // Per axis, the distinct types (bitmask of summands with a 1 at that exponent)
    // and the class index of every exponent.
    std::array<std::vector<unsigned>, 3> types;
    std::array<std::vector<int>, 3> class_of;
    // Class triples whose types share an odd number of summands.
    std::vector<std::array<int, 3>> odd_blocks;
};

struct TraceReport {
    std::vector<ExpVec> support;
    // Largest pairwise coordinate gap over the support.
    int observed_width = 0;
    // observed_width when the box leaves room to see wider points (2w < min box), else unbounded.
    std::optional<int> band_width;
    std::optional<TypeClasses> classes;
    // block_check only: trace equals the union of odd blocks.
    bool consistent = true;
};

TraceReport trace_support(const TruncSeries& f);

// One summand A(a) B(b) C(c) given by three single-variable series.
struct BlockSummand {
    TruncSeries a;
    TruncSeries b;
    TruncSeries c;
};

// Trace of sum A_i B_i C_i, with the type partition of each axis, checked
// point by point against the block description.
TraceReport block_check(const std::vector<BlockSummand>& summands);

// ---------------------------------------------------------------------------
// Irreducibility

struct FactorizationReport {
    std::optional<std::pair<Poly, Poly>> factors;
    // The bound covered every possible smaller factor.
    bool complete = false;
    std::size_t candidates = 0;

    bool irreducible() const { return !factors && complete; }
};

// Looks for p = g h with both factors nonconstant and deg g <= max_total_deg,
// over the variables p actually uses. Throws LimitExceeded beyond max_search_size().
FactorizationReport factor_search(const Poly& p, int max_total_deg);

// ---------------------------------------------------------------------------
// Quotient grammars

// Dual(L(numerator)) / denominator, with the denominator over a, b and constant term 1.
struct RabIntWitness {
    Gf2Grammar numerator;
    Poly denominator;
};

// New start S_new -> (sum over monomials a^k b^l != 1 of a^k S_new b^l) (+) S.
// The numerator is checked to stay within a*b* on words of length <= check_bound.
Gf2Grammar build_quotient_grammar(const RabIntWitness& w, int check_bound = 12);

struct QuotientCheck {
    bool holds = false;
    TruncSeries lhs;  // Dual(L_new) * p
    TruncSeries rhs;  // Dual(L_num)
};
QuotientCheck verify_quotient(const RabIntWitness& w, const Gf2Grammar& quotient, const Box& box);

// ---------------------------------------------------------------------------
// Corollary identities

struct CorollarySlices {
    LangSlice l1;      // a^n b^m c^l with n = m or m = l
    LangSlice xor_lang;    // the xor grammar's language
    LangSlice l2;      // a^n b^m c^l with n != m or m != l
    LangSlice chain;   // a* b* c*
    LangSlice target;  // a^n b^n c^n
};

// l1, l2, chain and target by direct construction; xor_lang by enumerating the grammar.
CorollarySlices corollary_slices(int n);

struct AmbiguityReport {
    int bound = 0;
    bool first_holds = false;   // l1 xor xor_lang = target
    bool second_holds = false;  // chain xor l2 = target
    std::optional<Word> first_witness;
    std::optional<Word> second_witness;

    bool holds() const { return first_holds && second_holds; }
};

AmbiguityReport check_corollaries(const CorollarySlices& s);
AmbiguityReport inherent_ambiguity_report(int n);

}  // namespace gf2g
