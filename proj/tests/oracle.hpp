#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "gf2g/automata.hpp"
#include "gf2g/grammar.hpp"
#include "gf2g/lang.hpp"

namespace oracle {

// Number of parse trees of w from nonterminal a in the ordinary grammar behind g,
// modulo 2^64, or nothing when there are infinitely many. Works on arbitrary
// rule shapes; infinity is detected as a derivation cycle below the root.
std::optional<std::uint64_t> count_trees(const gf2g::Gf2Grammar& g, const std::string& a, std::string_view w);

// Parity of the tree count; throws if infinite.
bool parity(const gf2g::Gf2Grammar& g, std::string_view w);

// All words over the alphabet of length <= n with odd parity, by brute force.
gf2g::LangSlice slice(const gf2g::Gf2Grammar& g, const std::string& alphabet, int n);

// Random grammar over {a, b} with nonterminals S, A, B, C and bodies of length <= 3.
// Not necessarily well-formed.
gf2g::Gf2Grammar random_grammar(std::mt19937& rng, int rules = 7);
// Random grammar that validate_wellformed accepts.
gf2g::Gf2Grammar random_wellformed(std::mt19937& rng, int rules = 7);

// Random partial DFA over {a, b} with 1 to 3 states.
gf2g::Dfa random_dfa(std::mt19937& rng);

// Random subset of the words over alphabet of length <= n.
gf2g::LangSlice random_slice(std::mt19937& rng, const std::string& alphabet, int n, double density = 0.3);

// All words over the alphabet of length <= n, shortest first.
std::vector<std::string> all_words(const std::string& alphabet, int n);

}  // namespace oracle
