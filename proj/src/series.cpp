#include "gf2g/series.hpp"

#include <algorithm>
#include <json.hpp>

#include "gf2g/error.hpp"

namespace gf2g {

namespace {

void check_same_vars(const TruncSeries& f, const TruncSeries& g) {
    if (f.vars() != g.vars())
        throw InvalidArgument("variable mismatch: '" + f.vars() + "' vs '" + g.vars() + "'");
}

}  // namespace

TruncSeries::TruncSeries(std::string vars, Box box) : vars_(std::move(vars)), box_(std::move(box)) {
    if (vars_.size() != box_.size()) throw InvalidArgument("box needs one bound per variable");
    if (normalize_alphabet(vars_).size() != vars_.size()) throw InvalidArgument("repeated series variable");
    for (char c : vars_)
        if (c < 'a' || c > 'z') throw InvalidArgument("series variables must be lowercase letters");
    stride_.assign(box_.size(), 1);
    std::size_t cells = 1;
    for (std::size_t i = box_.size(); i-- > 0;) {
        if (box_[i] < 0) throw InvalidArgument("negative box bound");
        stride_[i] = cells;
        cells *= static_cast<std::size_t>(box_[i]) + 1;
        if (cells > (std::size_t{1} << 32)) throw LimitExceeded("series box too large");
    }
    bits_.assign(cells, 0);
}

TruncSeries TruncSeries::one(std::string vars, Box box) {
    TruncSeries f(std::move(vars), std::move(box));
    f.bits_[0] = 1;
    return f;
}

TruncSeries TruncSeries::from_poly(const Poly& p, Box box) {
    TruncSeries f(p.vars(), std::move(box));
    for (const auto& e : p.support())
        if (f.in_box(e)) f.toggle(e);
    return f;
}

bool TruncSeries::in_box(std::span<const int> e) const {
    if (e.size() != box_.size()) throw InvalidArgument("exponent vector has the wrong length");
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 || e[i] > box_[i]) return false;
    return true;
}

std::size_t TruncSeries::index_of(std::span<const int> e) const {
    if (!in_box(e)) throw InvalidArgument("exponent " + format_monomial(vars_, ExpVec(e.begin(), e.end())) +
                                          " lies outside the box");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < e.size(); ++i) idx += stride_[i] * static_cast<std::size_t>(e[i]);
    return idx;
}

ExpVec TruncSeries::exponent_of(std::size_t index) const {
    ExpVec e(box_.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = static_cast<int>(index / stride_[i]);
        index %= stride_[i];
    }
    return e;
}

bool TruncSeries::coefficient(std::span<const int> e) const { return bits_[index_of(e)] != 0; }
void TruncSeries::set(std::span<const int> e, bool bit) { bits_[index_of(e)] = bit ? 1 : 0; }
void TruncSeries::toggle(std::span<const int> e) { bits_[index_of(e)] ^= 1; }

bool TruncSeries::is_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](unsigned char b) { return b == 0; });
}

std::size_t TruncSeries::support_size() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::vector<ExpVec> TruncSeries::support() const {
    std::vector<ExpVec> out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) out.push_back(exponent_of(i));
    return out;
}

int TruncSeries::max_total_degree() const {
    int best = -1;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (!bits_[i]) continue;
        int t = 0;
        for (int x : exponent_of(i)) t += x;
        best = std::max(best, t);
    }
    return best;
}

TruncSeries TruncSeries::restrict(const Box& box) const {
    TruncSeries out(vars_, box);
    for (std::size_t i = 0; i < box.size(); ++i)
        if (box[i] > box_[i]) throw InvalidArgument("restriction box exceeds the series box");
    for (std::size_t i = 0; i < out.bits_.size(); ++i) out.bits_[i] = bits_[index_of(out.exponent_of(i))];
    return out;
}

Poly TruncSeries::to_poly() const {
    Poly p(vars_);
    for (const auto& e : support()) p.toggle(e);
    return p;
}

Box min_box(const Box& x, const Box& y) {
    if (x.size() != y.size()) throw InvalidArgument("boxes of different arity");
    Box out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::min(x[i], y[i]);
    return out;
}

int box_total(const Box& box) {
    int t = 0;
    for (int b : box) t += b;
    return t;
}

TruncSeries add(const TruncSeries& f, const TruncSeries& g) {
    check_same_vars(f, g);
    const Box box = min_box(f.box(), g.box());
    TruncSeries out = f.box() == box ? f : f.restrict(box);
    const TruncSeries h = g.box() == box ? g : g.restrict(box);
    for (std::size_t i = 0; i < out.cell_count(); ++i)
        if (h.cell(i)) out.flip_cell(i);
    return out;
}

TruncSeries mul(const TruncSeries& f, const TruncSeries& g) {
    check_same_vars(f, g);
    const Box box = min_box(f.box(), g.box());
    const TruncSeries x = f.box() == box ? f : f.restrict(box);
    const TruncSeries y = g.box() == box ? g : g.restrict(box);
    const std::size_t k = box.size();

    struct Term {
        ExpVec e;
        std::size_t idx;
    };
    auto terms = [](const TruncSeries& s) {
        std::vector<Term> out;
        for (std::size_t i = 0; i < s.cell_count(); ++i)
            if (s.cell(i)) out.push_back({s.exponent_of(i), i});
        return out;
    };
    const auto tx = terms(x), ty = terms(y);
    // With a shared box, index(u + v) = index(u) + index(v) whenever u + v is in the box.
    std::vector<unsigned char> acc(x.cell_count(), 0);
    for (const auto& u : tx)
        for (const auto& v : ty) {
            bool inside = true;
            for (std::size_t i = 0; i < k && inside; ++i) inside = u.e[i] + v.e[i] <= box[i];
            if (inside) acc[u.idx + v.idx] ^= 1;
        }
    TruncSeries out(x.vars(), box);
    for (std::size_t i = 0; i < acc.size(); ++i)
        if (acc[i]) out.flip_cell(i);
    return out;
}

TruncSeries invert_unit(const TruncSeries& f) {
    if (!f.constant_term()) throw InvalidArgument("cannot invert a series with constant term 0");
    const std::size_t k = f.arity();
    std::vector<std::pair<ExpVec, std::size_t>> tail;  // nonconstant support of f
    for (std::size_t i = 1; i < f.cell_count(); ++i)
        if (f.cell(i)) tail.emplace_back(f.exponent_of(i), i);

    // g_e = [e = 0] + sum over u in tail, u <= e, of g_{e-u}; every e - u precedes e.
    std::vector<unsigned char> g(f.cell_count(), 0);
    for (std::size_t idx = 0; idx < g.size(); ++idx) {
        unsigned char bit = idx == 0 ? 1 : 0;
        if (idx > 0) {
            const ExpVec e = f.exponent_of(idx);
            for (const auto& [u, ui] : tail) {
                bool below = true;
                for (std::size_t i = 0; i < k && below; ++i) below = u[i] <= e[i];
                if (below) bit ^= g[idx - ui];
            }
        }
        g[idx] = bit;
    }
    TruncSeries out(f.vars(), f.box());
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i]) out.flip_cell(i);
    return out;
}

TruncSeries operator+(const TruncSeries& f, const TruncSeries& g) { return add(f, g); }
TruncSeries operator*(const TruncSeries& f, const TruncSeries& g) { return mul(f, g); }

TruncSeries dual_of_slice(const LangSlice& s, std::string_view letters, const Box& box, bool allow_partial) {
    if (letters.size() != box.size()) throw InvalidArgument("box needs one bound per chain letter");
    if (!allow_partial && box_total(box) > s.bound())
        throw InvalidArgument("box of total degree " + std::to_string(box_total(box)) +
                              " is not determined by a slice of bound " + std::to_string(s.bound()));
    TruncSeries out{std::string(letters), box};
    for (const auto& w : s.words()) {
        ExpVec e(letters.size(), 0);
        std::size_t pos = 0;
        for (char c : w) {
            while (pos < letters.size() && letters[pos] != c) ++pos;
            if (pos == letters.size())
                throw InvalidArgument("word '" + w + "' does not follow the chain pattern of '" +
                                      std::string(letters) + "'");
            ++e[pos];
        }
        if (out.in_box(e)) out.toggle(e);
    }
    return out;
}

Word chain_word(std::string_view letters, const ExpVec& e) {
    if (letters.size() != e.size()) throw InvalidArgument("exponent vector has the wrong length");
    Word w;
    for (std::size_t i = 0; i < e.size(); ++i) w.append(static_cast<std::size_t>(e[i]), letters[i]);
    return w;
}

std::string format_series(const TruncSeries& f) {
    std::string out;
    for (std::size_t i = 0; i < f.cell_count(); ++i) {
        if (!f.cell(i)) continue;
        if (!out.empty()) out += " + ";
        out += format_monomial(f.vars(), f.exponent_of(i));
    }
    if (out.empty()) out = "0";
    out += " (box: ";
    for (std::size_t i = 0; i < f.arity(); ++i) {
        if (i) out += ", ";
        out += f.vars()[i];
        out += "≤" + std::to_string(f.box()[i]);
    }
    return out + ")";
}

std::string series_to_json(const TruncSeries& f) {
    nlohmann::json j;
    j["vars"] = nlohmann::json::array();
    for (char c : f.vars()) j["vars"].push_back(std::string(1, c));
    j["box"] = f.box();
    j["support"] = f.support();
    return j.dump();
}

TruncSeries series_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid series JSON: ") + e.what(), 1, static_cast<int>(e.byte));
    }
    try {
        std::string vars;
        for (const auto& v : j.at("vars")) {
            auto s = v.get<std::string>();
            if (s.size() != 1) throw InvalidArgument("series variables are single letters");
            vars += s;
        }
        TruncSeries f(vars, j.at("box").get<Box>());
        for (const auto& e : j.at("support")) {
            auto v = e.get<ExpVec>();
            if (!f.in_box(v)) throw InvalidArgument("support vector outside the box");
            f.toggle(v);
        }
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed series JSON: ") + e.what(), 1, 1);
    }
}

}  // namespace gf2g
