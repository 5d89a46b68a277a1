#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gf2g/grammar.hpp"

namespace gf2g {

using Word = std::string;

// Orders words by length, then lexicographically.
struct ShortLex {
    bool operator()(const Word& x, const Word& y) const {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    }
};

// The words of length <= bound of some language over a fixed alphabet.
class LangSlice {
public:
    LangSlice(std::string alphabet, int bound);
    LangSlice(std::string alphabet, int bound, const std::vector<Word>& words);

    const std::string& alphabet() const { return alphabet_; }
    int bound() const { return bound_; }
    const std::set<Word, ShortLex>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }
    bool contains(std::string_view w) const { return words_.count(Word(w)) > 0; }

    void toggle(const Word& w);
    void insert(const Word& w);

    // The same language seen through a shorter window.
    LangSlice truncate(int bound) const;

    bool operator==(const LangSlice&) const = default;

private:
    void check_word(const Word& w) const;

    std::string alphabet_;
    int bound_;
    std::set<Word, ShortLex> words_;
};

// Sorted, duplicate-free copy of the letters.
std::string normalize_alphabet(std::string_view letters);

LangSlice sym_diff(const LangSlice& x, const LangSlice& y);

// GF(2)-concatenation: a word is kept when it has an odd number of
// factorizations uv with u in x and v in y. Exact for full slices.
LangSlice gf2_concat(const LangSlice& x, const LangSlice& y);

// Parity of the number of parse trees of w (CYK over bits). The empty word is
// answered from eps_parity().
bool parse_parity(const CnfGrammar& g, std::string_view w);

// Parity of the trees deriving each substring of w from each nonterminal of g.
class ParityTable {
public:
    ParityTable(std::vector<std::string> nonterminals, std::size_t length);

    const std::vector<std::string>& nonterminals() const { return names_; }
    std::size_t length() const { return length_; }
    bool at(std::string_view nonterminal, std::size_t start, std::size_t len) const;
    bool at(std::size_t nt, std::size_t start, std::size_t len) const {
        return cells_[index(nt, start, len)] != 0;
    }
    void flip(std::size_t nt, std::size_t start, std::size_t len) { cells_[index(nt, start, len)] ^= 1; }

private:
    std::size_t index(std::size_t nt, std::size_t start, std::size_t len) const {
        return (nt * (length_ + 1) + len) * (length_ + 1) + start;
    }

    std::vector<std::string> names_;
    std::size_t length_;
    std::vector<unsigned char> cells_;
};
ParityTable parity_table(const CnfGrammar& g, std::string_view w);

// All words of length <= n with an odd number of parse trees.
LangSlice enumerate(const CnfGrammar& g, int n);
// Slices of L(A) for every nonterminal A; only the start slice carries epsilon.
std::map<std::string, LangSlice> enumerate_all(const CnfGrammar& g, int n);

struct EquationReport {
    bool holds = true;
    std::string nonterminal;  // first failing equation, if any
    std::optional<Word> witness;
    std::string message;
};

// Checks A = (sym diff over rules A -> X1..Xk of X1 (.) ... (.) Xk) on slices,
// computing each L(A) through the normal form of g restarted at A.
EquationReport check_language_equations(const Gf2Grammar& g, int n);
// Same check against externally supplied slices (one per nonterminal).
EquationReport check_language_equations(const Gf2Grammar& g, const std::map<std::string, LangSlice>& slices);

// Text: one word per line in short-lex order, "-" for the empty word.
std::string format_slice(const LangSlice& s);
// JSON: {"alphabet": "...", "bound": N, "words": [...]}; the empty word is "".
std::string slice_to_json(const LangSlice& s);
LangSlice slice_from_json(std::string_view text);

}  // namespace gf2g
