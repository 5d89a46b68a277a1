#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gf2g/series.hpp"

namespace gf2g::fixtures {

// Grammar texts in the file format.
std::string_view xor_equalities();   // a^l b^m c^n with l = m or m = n, but not both
std::string_view powers_of_two();   // a^(2^n)
std::string_view anbn();        // a^n b^n, n >= 0
std::string_view anbn_numerator();

struct ChainFixture {
    std::string name;
    std::string_view grammar;
    std::string letters;
};

// Grammars whose languages lie within a chain, over chains of length 1 to 4.
const std::vector<ChainFixture>& chain_fixtures();

// Dual of a^n b^n.
TruncSeries anbn_series(const Box& box);
// Dual of a^(2^n) b^(2^n).
TruncSeries power_diagonal_series(const Box& box);
// Dual of a^n b^n c^n.
TruncSeries diagonal3_series(const Box& box);

}  // namespace gf2g::fixtures
