#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "gf2g/grammar.hpp"

namespace gf2g {

// Deterministic automaton with a partial transition map; a missing transition rejects.
class Dfa {
public:
    explicit Dfa(std::string alphabet);

    int add_state(std::string name, bool accepting = false);
    void set_start(int state);
    void set_accepting(int state, bool accepting);
    // Throws InvalidArgument when (src, letter) already has a different target.
    void add_edge(int src, char letter, int dst);

    const std::string& alphabet() const { return alphabet_; }
    std::size_t state_count() const { return names_.size(); }
    const std::string& state_name(int s) const { return names_.at(s); }
    std::optional<int> find_state(std::string_view name) const;
    bool is_accepting(int s) const { return accepting_.at(s); }
    int start() const { return start_; }

    std::optional<int> step(int state, char letter) const;
    std::optional<int> run(std::string_view w) const;
    bool accepts(std::string_view w) const;

private:
    std::string alphabet_;
    std::vector<std::string> names_;
    std::vector<bool> accepting_;
    std::map<std::pair<int, char>, int> delta_;
    int start_ = 0;
};

// k states q_1..q_k, all accepting, q_i --a_j--> q_j for j >= i; accepts a_1* ... a_k*.
// State i is named "q_<a_i>".
Dfa build_chain_dfa(std::string_view letters);

// The letter order if m is structurally a chain automaton, otherwise nothing.
std::optional<std::string> chain_letters(const Dfa& m);

// Lines: "state <name> [accept]", "start <name>", "edge <src> <letter> <dst>"; '#' comments.
Dfa parse_dfa(std::string_view text);
// "chain:abc" builds a chain automaton, anything else is read as a DFA file.
Dfa load_dfa(const std::string& source);

struct Triple {
    int from;
    std::string nonterminal;
    int to;
};

struct Intersection {
    CnfGrammar grammar;
    Dfa dfa;
    std::map<std::string, Triple> triples;  // keyed by grammar nonterminal name "p.A.q"

    std::optional<std::string> triple_name(std::string_view nonterminal, int from, int to) const;
};

// GF(2) Bar-Hillel product. Nonterminals are triples (p, A, q) named "p.A.q",
// plus a fresh start whose rules are those of (start, S, f) for accepting f.
// Since a DFA gives each word at most one run, parse parities multiply with
// membership. With prune set, only reachable productive triples are kept.
Intersection intersect_gf2(const CnfGrammar& g, const Dfa& m, bool prune = true);

// Per original nonterminal C and chain positions i <= j, the triple C_{i->j},
// whose language is L(C) intersected with a_i* ... a_j+ (a_i+ when i == j).
class SplitView {
public:
    explicit SplitView(const Intersection& ix);

    const std::string& letters() const { return letters_; }
    std::optional<std::string> nonterminal(std::string_view c, int i, int j) const;
    // Every (C, i, j) that survived pruning.
    std::vector<std::tuple<std::string, int, int>> types() const;

private:
    std::string letters_;
    std::map<std::tuple<std::string, int, int>, std::string> names_;
};

// Throws InvalidArgument when the intersected automaton is not a chain.
SplitView split_types(const Intersection& ix);

// An automaton over {0,1} read on most-significant-bit-first binary numerals.
class DigitDfa {
public:
    explicit DigitDfa(Dfa dfa);
    const Dfa& dfa() const { return dfa_; }

private:
    Dfa dfa_;
};

// MSB-first binary numeral of n, with 0 written as the empty string.
std::string binary_numeral(std::uint64_t n);
bool automatic_member(const DigitDfa& d, std::uint64_t n);

// Accepts the numerals 10*, i.e. the powers of two.
DigitDfa powers_of_two_dfa();

}  // namespace gf2g
