#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gf2g/grammar.hpp"
#include "gf2g/series.hpp"

namespace gf2g {

using SeriesMatrix = std::vector<std::vector<TruncSeries>>;

// (A + B + I) x = f for the unknowns x_C = Dual(L(C) ∩ a_first* ... a_last+).
// A_{C,E} sums Dual(L(D) ∩ a_first+) over rules C -> D E; B_{C,D} sums
// Dual(L(E) ∩ a_last+). All series share the chain letters as variables.
struct LinearSystem {
    std::string letters;
    Box box;
    int first = 0;
    int last = 0;
    std::vector<std::string> unknowns;
    SeriesMatrix a;
    SeriesMatrix b;
    std::vector<TruncSeries> f;

    std::size_t size() const { return unknowns.size(); }
    int index_of(std::string_view nonterminal) const;
};

struct SolveReport {
    std::vector<TruncSeries> solution;
    int iterations = 0;
    // Filled by compare_with_oracle; empty until then.
    std::vector<bool> oracle_match;

    bool all_match() const;
};

// Every component of L(g) along a chain, computed span by span.
struct ChainSolution {
    std::string letters;
    Box box;
    bool eps = false;
    std::vector<std::string> nonterminals;
    // unary[i][C] = Dual(L(C) ∩ a_i+)
    std::vector<std::map<std::string, TruncSeries>> unary;
    // center[{i, j}][C] = Dual(L(C) ∩ a_i* ... a_j+) for i < j
    std::map<std::pair<int, int>, std::map<std::string, TruncSeries>> center;
    std::map<std::pair<int, int>, int> iterations;

    // Dual(L(g)) = [eps] + Dual(L(S) ∩ a_1+) + sum over j > 1 of center[{1, j}][S].
    TruncSeries total(std::string_view start) const;
};

// Throws InvalidArgument with a witness word when the slice of L(g) of length
// up to the box total leaves a_1* ... a_k*.
void check_within_chain(const CnfGrammar& g, std::string_view letters, const Box& box);

// The system for the whole chain (k >= 2). Unknowns are the nonterminals C
// whose triple (q_1, C, q_k) survives in the pruned intersection with the chain
// automaton. For k >= 3 the right side f is assembled from the solved systems
// of every shorter span.
LinearSystem build_split_system(const CnfGrammar& g, std::string_view letters, const Box& box);

// x <- f + (A + B) x from x = 0 until nothing changes. Throws Error if that
// takes more than 2 + box total rounds.
SolveReport solve_fixed_point(const LinearSystem& sys);

ChainSolution solve_chain(const CnfGrammar& g, std::string_view letters, const Box& box);
// Dual(L(g)) within the box.
TruncSeries extract_dual(const CnfGrammar& g, std::string_view letters, const Box& box);

// Dual(L(C) ∩ a_first* ... a_last+) for each unknown, by enumeration.
std::vector<TruncSeries> oracle_centers(const CnfGrammar& g, const LinearSystem& sys);
void compare_with_oracle(const CnfGrammar& g, const LinearSystem& sys, SolveReport& report);

// A + B + I.
SeriesMatrix system_matrix(const LinearSystem& sys);
// (A + B + I) x + f; zero exactly when x solves the system.
std::vector<TruncSeries> residual(const LinearSystem& sys, const std::vector<TruncSeries>& x);
// Determinant over truncated series by cofactor expansion along rows, memoized
// over column subsets (no signs in characteristic 2).
TruncSeries determinant(const SeriesMatrix& m);
// Cramer's rule; needs a determinant with constant term 1.
std::vector<TruncSeries> solve_cramer(const LinearSystem& sys);
// Same system with every series cut to a smaller box.
LinearSystem restrict_system(const LinearSystem& sys, const Box& box);

// {"letters", "box", "unknowns", "a": [[series...]], "b": ..., "f": [...]}
std::string system_to_json(const LinearSystem& sys);

}  // namespace gf2g
