#include <algorithm>
#include <cctype>

#include "gf2g/bit_matrix.hpp"
#include "gf2g/error.hpp"
#include "gf2g/series.hpp"

namespace gf2g {

namespace {

void check_vars(std::string_view vars) {
    for (char c : vars)
        if (!std::islower(static_cast<unsigned char>(c)))
            throw InvalidArgument("variables must be lowercase letters: '" + std::string(vars) + "'");
    if (normalize_alphabet(vars).size() != vars.size())
        throw InvalidArgument("repeated variable in '" + std::string(vars) + "'");
}

std::string merged_vars(const Poly& p, const Poly& q) {
    if (p.vars() == q.vars()) return p.vars();
    return normalize_alphabet(p.vars() + q.vars());
}

}  // namespace

Poly::Poly(std::string vars) : vars_(std::move(vars)) { check_vars(vars_); }

Poly Poly::one(std::string vars) {
    Poly p(std::move(vars));
    p.toggle(ExpVec(p.vars().size(), 0));
    return p;
}

Poly Poly::monomial(std::string vars, ExpVec e) {
    Poly p(std::move(vars));
    p.toggle(e);
    return p;
}

void Poly::toggle(const ExpVec& e) {
    if (e.size() != vars_.size()) throw InvalidArgument("exponent vector has the wrong length");
    for (int x : e)
        if (x < 0) throw InvalidArgument("negative exponent");
    if (!support_.erase(e)) support_.insert(e);
}

bool Poly::constant_term() const { return coefficient(ExpVec(vars_.size(), 0)); }

int Poly::total_degree() const {
    int best = -1;
    for (const auto& e : support_) {
        int t = 0;
        for (int x : e) t += x;
        best = std::max(best, t);
    }
    return best;
}

int Poly::degree_in(std::size_t var) const {
    int best = support_.empty() ? -1 : 0;
    for (const auto& e : support_) best = std::max(best, e.at(var));
    return best;
}

ExpVec Poly::degrees() const {
    ExpVec d(vars_.size(), 0);
    for (const auto& e : support_)
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = std::max(d[i], e[i]);
    return d;
}

Poly Poly::over(std::string_view vars) const {
    Poly out{std::string(vars)};
    std::vector<std::size_t> place(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto at = vars.find(vars_[i]);
        if (at == std::string_view::npos)
            throw InvalidArgument(std::string("variable '") + vars_[i] + "' missing from '" + std::string(vars) + "'");
        place[i] = at;
    }
    for (const auto& e : support_) {
        ExpVec f(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) f[place[i]] = e[i];
        out.toggle(f);
    }
    return out;
}

Poly poly_add(const Poly& p, const Poly& q) {
    const auto vars = merged_vars(p, q);
    Poly out = p.over(vars);
    const Poly y = q.over(vars);
    for (const auto& e : y.support()) out.toggle(e);
    return out;
}

Poly poly_mul(const Poly& p, const Poly& q) {
    const auto vars = merged_vars(p, q);
    const Poly x = p.over(vars), y = q.over(vars);
    Poly out(vars);
    for (const auto& u : x.support())
        for (const auto& v : y.support()) {
            ExpVec e(u.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = u[i] + v[i];
            out.toggle(e);
        }
    return out;
}

std::optional<Poly> poly_quotient(const Poly& q_in, const Poly& p_in) {
    if (p_in.is_zero()) throw InvalidArgument("division by the zero polynomial");
    const auto vars = merged_vars(q_in, p_in);
    const Poly q = q_in.over(vars), p = p_in.over(vars);
    if (q.is_zero()) return Poly(vars);
    const ExpVec dq = q.degrees(), dp = p.degrees();
    const std::size_t k = vars.size();

    Box xbox(k);
    for (std::size_t i = 0; i < k; ++i) {
        xbox[i] = dq[i] - dp[i];
        if (xbox[i] < 0) return std::nullopt;
    }
    // Unknowns: quotient coefficients in xbox; equations: product coefficients in dq's box.
    TruncSeries xs(vars, xbox), ys(vars, dq);
    BitMatrix m(ys.cell_count(), xs.cell_count());
    for (std::size_t col = 0; col < xs.cell_count(); ++col) {
        const ExpVec x = xs.exponent_of(col);
        for (const auto& u : p.support()) {
            ExpVec e(k);
            for (std::size_t i = 0; i < k; ++i) e[i] = x[i] + u[i];
            m.flip(ys.index_of(e), col);
        }
    }
    std::vector<bool> rhs(ys.cell_count(), false);
    for (const auto& e : q.support()) rhs[ys.index_of(e)] = true;
    auto sol = m.solve(rhs);
    if (!sol) return std::nullopt;
    Poly out(vars);
    for (std::size_t col = 0; col < sol->size(); ++col)
        if ((*sol)[col]) out.toggle(xs.exponent_of(col));
    return out;
}

bool poly_divides(const Poly& p, const Poly& q) { return poly_quotient(q, p).has_value(); }

Poly parse_poly(std::string_view text, std::string_view vars_in) {
    std::vector<std::pair<std::string, std::vector<int>>> terms;  // letters with exponents
    std::string used;
    std::size_t i = 0;
    auto fail = [&](const std::string& what) {
        throw ParseError(what + " in polynomial '" + std::string(text) + "'", 1, static_cast<int>(i) + 1);
    };
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&] {
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected a number");
        long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i++] - '0');
            if (v > 1'000'000) fail("exponent too large");
        }
        return static_cast<int>(v);
    };

    bool zero_literal = false;
    skip_ws();
    if (i == text.size()) fail("empty polynomial");
    while (true) {
        std::pair<std::string, std::vector<int>> term;
        bool any = false;
        while (true) {
            skip_ws();
            if (i >= text.size() || text[i] == '+') break;
            char c = text[i];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                int v = read_int();
                if (v == 0) zero_literal = true;
                else if (v != 1) fail("coefficients must be 0 or 1");
            } else if (std::islower(static_cast<unsigned char>(c))) {
                ++i;
                int e = 1;
                skip_ws();
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    skip_ws();
                    e = read_int();
                }
                term.first += c;
                term.second.push_back(e);
                used += c;
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
            any = true;
        }
        if (!any) fail("empty term");
        if (zero_literal) {
            if (!term.first.empty() || terms.size() > 0 || i < text.size()) fail("'0' must stand alone");
        } else {
            terms.push_back(std::move(term));
        }
        if (i >= text.size()) break;
        ++i;  // '+'
    }

    std::string vars = vars_in.empty() ? normalize_alphabet(used) : std::string(vars_in);
    Poly out(vars);
    for (const auto& [letters, exps] : terms) {
        ExpVec e(vars.size(), 0);
        for (std::size_t j = 0; j < letters.size(); ++j) {
            auto at = vars.find(letters[j]);
            if (at == std::string::npos)
                throw InvalidArgument(std::string("variable '") + letters[j] + "' not among '" + vars + "'");
            e[at] += exps[j];
        }
        out.toggle(e);
    }
    return out;
}

std::string format_monomial(std::string_view vars, const ExpVec& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += ' ';
        out += vars[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

std::string format_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& e : p.support()) {
        if (!out.empty()) out += " + ";
        out += format_monomial(p.vars(), e);
    }
    return out;
}

}  // namespace gf2g
