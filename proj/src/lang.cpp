#include "gf2g/lang.hpp"

#include <algorithm>

#include <json.hpp>

#include "gf2g/error.hpp"
#include "indexed_cnf.hpp"

namespace gf2g {

std::string normalize_alphabet(std::string_view letters) {
    std::string out(letters);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LangSlice::LangSlice(std::string alphabet, int bound) : alphabet_(normalize_alphabet(alphabet)), bound_(bound) {
    if (bound < 0) throw InvalidArgument("slice bound must be nonnegative");
}

LangSlice::LangSlice(std::string alphabet, int bound, const std::vector<Word>& words)
    : LangSlice(std::move(alphabet), bound) {
    for (const auto& w : words) insert(w);
}

void LangSlice::check_word(const Word& w) const {
    if (static_cast<int>(w.size()) > bound_)
        throw InvalidArgument("word '" + w + "' exceeds slice bound " + std::to_string(bound_));
    for (char c : w)
        if (alphabet_.find(c) == std::string::npos)
            throw InvalidArgument(std::string("letter '") + c + "' is outside the alphabet '" + alphabet_ + "'");
}

void LangSlice::toggle(const Word& w) {
    check_word(w);
    auto [it, inserted] = words_.insert(w);
    if (!inserted) words_.erase(it);
}

void LangSlice::insert(const Word& w) {
    check_word(w);
    words_.insert(w);
}

LangSlice LangSlice::truncate(int bound) const {
    LangSlice out(alphabet_, std::min(bound, bound_));
    for (const auto& w : words_)
        if (static_cast<int>(w.size()) <= out.bound_) out.words_.insert(w);
    return out;
}

namespace {

void require_same_alphabet(const LangSlice& x, const LangSlice& y) {
    if (x.alphabet() != y.alphabet())
        throw InvalidArgument("alphabet mismatch: '" + x.alphabet() + "' vs '" + y.alphabet() + "'");
}

// Sorts and removes words that occur an even number of times.
std::vector<Word> cancel_pairs(std::vector<Word> words) {
    std::sort(words.begin(), words.end(), ShortLex{});
    std::vector<Word> out;
    for (std::size_t i = 0; i < words.size();) {
        std::size_t j = i;
        while (j < words.size() && words[j] == words[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(words[i]);
        i = j;
    }
    return out;
}

}  // namespace

LangSlice sym_diff(const LangSlice& x, const LangSlice& y) {
    require_same_alphabet(x, y);
    int bound = std::min(x.bound(), y.bound());
    LangSlice out = x.truncate(bound);
    for (const auto& w : y.words())
        if (static_cast<int>(w.size()) <= bound) out.toggle(w);
    return out;
}

LangSlice gf2_concat(const LangSlice& x, const LangSlice& y) {
    require_same_alphabet(x, y);
    const std::size_t bound = static_cast<std::size_t>(std::min(x.bound(), y.bound()));
    std::vector<Word> products;
    for (const auto& u : x.words()) {
        if (u.size() > bound) break;
        for (const auto& v : y.words()) {
            if (u.size() + v.size() > bound) break;
            products.push_back(u + v);
        }
    }
    return LangSlice(x.alphabet(), static_cast<int>(bound), cancel_pairs(std::move(products)));
}

// ---------------------------------------------------------------------------
// Parity CYK

ParityTable::ParityTable(std::vector<std::string> nonterminals, std::size_t length)
    : names_(std::move(nonterminals)), length_(length), cells_(names_.size() * (length + 1) * (length + 1), 0) {}

bool ParityTable::at(std::string_view nonterminal, std::size_t start, std::size_t len) const {
    auto it = std::find(names_.begin(), names_.end(), nonterminal);
    if (it == names_.end()) throw InvalidArgument("unknown nonterminal " + std::string(nonterminal));
    if (start + len > length_) throw InvalidArgument("substring outside the parsed word");
    return at(static_cast<std::size_t>(it - names_.begin()), start, len);
}

ParityTable parity_table(const CnfGrammar& g, std::string_view w) {
    for (char c : w)
        if (g.alphabet().find(c) == std::string::npos)
            throw InvalidArgument(std::string("letter '") + c + "' is outside the grammar alphabet");
    detail::IndexedCnf ix(g);
    const std::size_t n = w.size();
    ParityTable table(ix.names, n);
    for (std::size_t s = 0; s < n; ++s)
        for (auto [a, t] : ix.terminal)
            if (w[s] == t) table.flip(a, s, 1);
    for (std::size_t len = 2; len <= n; ++len)
        for (std::size_t s = 0; s + len <= n; ++s)
            for (const auto& [a, b, c] : ix.binary)
                for (std::size_t k = 1; k < len; ++k)
                    if (table.at(b, s, k) && table.at(c, s + k, len - k)) table.flip(a, s, len);
    return table;
}

bool parse_parity(const CnfGrammar& g, std::string_view w) {
    if (w.empty()) return g.eps_parity();
    auto table = parity_table(g, w);
    detail::IndexedCnf ix(g);
    return table.at(ix.start, 0, w.size());
}

// ---------------------------------------------------------------------------
// Enumeration by length: L_len(A) is the XOR over rules A -> B C and split
// points k of the concatenations L_k(B) L_{len-k}(C).

std::map<std::string, LangSlice> enumerate_all(const CnfGrammar& g, int n) {
    if (n < 0) throw InvalidArgument("enumeration bound must be nonnegative");
    detail::IndexedCnf ix(g);
    const std::size_t m = ix.size();
    std::vector<std::vector<std::vector<Word>>> by_len(m, std::vector<std::vector<Word>>(n + 1));

    if (n >= 1) {
        std::vector<std::vector<Word>> raw(m);
        for (auto [a, t] : ix.terminal) raw[a].push_back(Word(1, t));
        for (std::size_t a = 0; a < m; ++a) by_len[a][1] = cancel_pairs(std::move(raw[a]));
    }
    for (int len = 2; len <= n; ++len) {
        std::vector<std::vector<Word>> raw(m);
        for (const auto& [a, b, c] : ix.binary)
            for (int k = 1; k < len; ++k)
                for (const auto& u : by_len[b][k])
                    for (const auto& v : by_len[c][len - k]) raw[a].push_back(u + v);
        for (std::size_t a = 0; a < m; ++a) by_len[a][len] = cancel_pairs(std::move(raw[a]));
    }

    std::map<std::string, LangSlice> out;
    for (std::size_t a = 0; a < m; ++a) {
        LangSlice s(g.alphabet(), n);
        if (static_cast<int>(a) == ix.start && g.eps_parity()) s.insert("");
        for (int len = 1; len <= n; ++len)
            for (const auto& w : by_len[a][len]) s.insert(w);
        out.emplace(ix.names[a], std::move(s));
    }
    return out;
}

LangSlice enumerate(const CnfGrammar& g, int n) { return enumerate_all(g, n).at(g.start()); }

// ---------------------------------------------------------------------------

EquationReport check_language_equations(const Gf2Grammar& g, const std::map<std::string, LangSlice>& slices) {
    if (slices.empty()) return {};
    const int n = slices.begin()->second.bound();
    const std::string& alphabet = slices.begin()->second.alphabet();
    auto slice_of = [&](const Symbol& s) -> LangSlice {
        if (s.is_terminal()) return LangSlice(alphabet, n, {Word(1, s.letter())});
        auto it = slices.find(s.name);
        if (it == slices.end()) throw InvalidArgument("no slice supplied for " + s.name);
        return it->second;
    };

    for (const auto& nt : g.nonterminals()) {
        auto it = slices.find(nt);
        if (it == slices.end()) throw InvalidArgument("no slice supplied for " + nt);
        LangSlice rhs(alphabet, n);
        for (const auto& r : g.rules_for(nt)) {
            LangSlice product(alphabet, n, {Word()});
            for (const auto& s : r.body) product = gf2_concat(product, slice_of(s));
            rhs = sym_diff(rhs, product);
        }
        LangSlice diff = sym_diff(it->second, rhs);
        if (!diff.empty()) {
            EquationReport rep;
            rep.holds = false;
            rep.nonterminal = nt;
            rep.witness = *diff.words().begin();
            rep.message = "equation for " + nt + " fails on word '" +
                          (rep.witness->empty() ? std::string("eps") : *rep.witness) + "'";
            return rep;
        }
    }
    return {};
}

EquationReport check_language_equations(const Gf2Grammar& g, int n) {
    std::map<std::string, LangSlice> slices;
    for (const auto& nt : g.nonterminals()) {
        Gf2Grammar restarted = g;
        restarted.set_start(nt);
        slices.emplace(nt, enumerate(to_cnf(restarted), n));
    }
    auto rep = check_language_equations(g, slices);
    if (rep.holds) rep.message = "all " + std::to_string(g.nonterminals().size()) + " equations hold up to length " +
                                 std::to_string(n);
    return rep;
}

// ---------------------------------------------------------------------------

std::string format_slice(const LangSlice& s) {
    std::string out;
    for (const auto& w : s.words()) out += (w.empty() ? "-" : w) + "\n";
    return out;
}

std::string slice_to_json(const LangSlice& s) {
    nlohmann::json j;
    j["alphabet"] = s.alphabet();
    j["bound"] = s.bound();
    j["words"] = std::vector<Word>(s.words().begin(), s.words().end());
    return j.dump();
}

LangSlice slice_from_json(std::string_view text) {
    try {
        auto j = nlohmann::json::parse(text);
        return LangSlice(j.at("alphabet").get<std::string>(), j.at("bound").get<int>(),
                         j.at("words").get<std::vector<Word>>());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid slice JSON: ") + e.what(), 1, 1);
    }
}

}  // namespace gf2g
