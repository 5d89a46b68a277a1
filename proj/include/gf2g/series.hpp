#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gf2g/lang.hpp"

namespace gf2g {

// Exponent vector over an ordered variable list; a box gives per-variable maxima.
using ExpVec = std::vector<int>;
using Box = std::vector<int>;

// A polynomial over F2. Variables are single letters; vars()[i] owns exponent i.
class Poly {
public:
    explicit Poly(std::string vars = {});

    static Poly one(std::string vars);
    static Poly monomial(std::string vars, ExpVec e);

    const std::string& vars() const { return vars_; }
    const std::set<ExpVec>& support() const { return support_; }

    void toggle(const ExpVec& e);
    bool coefficient(const ExpVec& e) const { return support_.count(e) > 0; }
    bool is_zero() const { return support_.empty(); }
    bool constant_term() const;
    // -1 for the zero polynomial.
    int total_degree() const;
    int degree_in(std::size_t var) const;
    ExpVec degrees() const;

    // Re-expresses the polynomial over a variable list containing all current variables.
    Poly over(std::string_view vars) const;

    bool operator==(const Poly&) const = default;

private:
    std::string vars_;
    std::set<ExpVec> support_;
};

Poly poly_add(const Poly& p, const Poly& q);
Poly poly_mul(const Poly& p, const Poly& q);
// The quotient q / p when p divides q exactly. Candidate quotients have
// per-variable degree at most deg(q) - deg(p); they are searched by solving the
// linear system over F2 that their coefficient bits satisfy.
std::optional<Poly> poly_quotient(const Poly& q, const Poly& p);
bool poly_divides(const Poly& p, const Poly& q);

// "1 + a b + a^2 b^3", "1+abc", "0". Variables default to the sorted letters used.
Poly parse_poly(std::string_view text, std::string_view vars = {});
std::string format_poly(const Poly& p);
std::string format_monomial(std::string_view vars, const ExpVec& e);

// A power series over F2 known exactly on the exponents inside a per-variable
// degree box. Stored densely, first variable most significant, so index order
// is lexicographic order of exponent vectors.
class TruncSeries {
public:
    TruncSeries(std::string vars, Box box);

    static TruncSeries one(std::string vars, Box box);
    static TruncSeries from_poly(const Poly& p, Box box);

    const std::string& vars() const { return vars_; }
    const Box& box() const { return box_; }
    std::size_t arity() const { return vars_.size(); }

    bool coefficient(std::span<const int> e) const;
    void set(std::span<const int> e, bool bit);
    void toggle(std::span<const int> e);
    bool in_box(std::span<const int> e) const;
    bool constant_term() const { return bits_.front() != 0; }
    bool is_zero() const;
    std::size_t support_size() const;
    // Exponent vectors of the nonzero coefficients in lexicographic order.
    std::vector<ExpVec> support() const;
    // Largest total degree with a nonzero coefficient, -1 for zero.
    int max_total_degree() const;

    // Coefficients inside a smaller box.
    TruncSeries restrict(const Box& box) const;
    // Polynomial formed by the in-box coefficients.
    Poly to_poly() const;

    // Raw access by linear index, for tight loops.
    std::size_t cell_count() const { return bits_.size(); }
    bool cell(std::size_t i) const { return bits_[i] != 0; }
    void flip_cell(std::size_t i) { bits_[i] ^= 1; }
    ExpVec exponent_of(std::size_t index) const;
    std::size_t index_of(std::span<const int> e) const;

    bool operator==(const TruncSeries&) const = default;

private:
    std::string vars_;
    Box box_;
    std::vector<std::size_t> stride_;
    std::vector<unsigned char> bits_;
};

// Both operands are cut to the componentwise-minimal box.
TruncSeries add(const TruncSeries& f, const TruncSeries& g);
TruncSeries mul(const TruncSeries& f, const TruncSeries& g);
// g with f g = 1 in the box; requires constant term 1.
TruncSeries invert_unit(const TruncSeries& f);

TruncSeries operator+(const TruncSeries& f, const TruncSeries& g);
TruncSeries operator*(const TruncSeries& f, const TruncSeries& g);

Box min_box(const Box& x, const Box& y);
int box_total(const Box& box);

// Dual of a slice whose words follow the chain pattern letters[0]* ... letters[k-1]*.
// The box is faithful when every in-box monomial has total degree <= the slice
// bound; a box beyond that is rejected unless allow_partial is set, in which
// case only the monomials the slice determines are meaningful.
TruncSeries dual_of_slice(const LangSlice& s, std::string_view letters, const Box& box, bool allow_partial = false);
// Inverse reading: the chain word with the given exponents.
Word chain_word(std::string_view letters, const ExpVec& e);

// "1 + a b (box: a≤8, b≤8)"; the zero series prints as "0 (box: ...)".
std::string format_series(const TruncSeries& f);
// {"vars": [...], "box": [...], "support": [[...], ...]}
std::string series_to_json(const TruncSeries& f);
TruncSeries series_from_json(std::string_view text);

}  // namespace gf2g
