#include "gf2g/automata.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "gf2g/error.hpp"
#include "gf2g/lang.hpp"

namespace gf2g {

Dfa::Dfa(std::string alphabet) : alphabet_(normalize_alphabet(alphabet)) {}

int Dfa::add_state(std::string name, bool accepting) {
    if (find_state(name)) throw InvalidArgument("duplicate state " + name);
    names_.push_back(std::move(name));
    accepting_.push_back(accepting);
    return static_cast<int>(names_.size()) - 1;
}

void Dfa::set_start(int state) {
    if (state < 0 || state >= static_cast<int>(names_.size())) throw InvalidArgument("no such state");
    start_ = state;
}

void Dfa::set_accepting(int state, bool accepting) { accepting_.at(state) = accepting; }

void Dfa::add_edge(int src, char letter, int dst) {
    if (alphabet_.find(letter) == std::string::npos)
        throw InvalidArgument(std::string("letter '") + letter + "' is outside the automaton alphabet");
    if (src < 0 || dst < 0 || src >= static_cast<int>(names_.size()) || dst >= static_cast<int>(names_.size()))
        throw InvalidArgument("edge refers to an unknown state");
    auto [it, inserted] = delta_.emplace(std::make_pair(src, letter), dst);
    if (!inserted && it->second != dst)
        throw InvalidArgument("nondeterministic transition from " + names_[src] + " on '" + letter + "'");
}

std::optional<int> Dfa::find_state(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<int>(it - names_.begin());
}

std::optional<int> Dfa::step(int state, char letter) const {
    auto it = delta_.find({state, letter});
    if (it == delta_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Dfa::run(std::string_view w) const {
    if (names_.empty()) return std::nullopt;
    std::optional<int> s = start_;
    for (char c : w) {
        s = step(*s, c);
        if (!s) return std::nullopt;
    }
    return s;
}

bool Dfa::accepts(std::string_view w) const {
    auto s = run(w);
    return s && accepting_[*s];
}

Dfa build_chain_dfa(std::string_view letters) {
    if (letters.empty()) throw InvalidArgument("chain automaton needs at least one letter");
    if (normalize_alphabet(letters).size() != letters.size())
        throw InvalidArgument("chain letters must be distinct: '" + std::string(letters) + "'");
    Dfa m{std::string(letters)};
    for (char c : letters) m.add_state(std::string("q_") + c, true);
    for (std::size_t i = 0; i < letters.size(); ++i)
        for (std::size_t j = i; j < letters.size(); ++j)
            m.add_edge(static_cast<int>(i), letters[j], static_cast<int>(j));
    m.set_start(0);
    return m;
}

std::optional<std::string> chain_letters(const Dfa& m) {
    const int k = static_cast<int>(m.state_count());
    if (k == 0 || static_cast<int>(m.alphabet().size()) != k) return std::nullopt;
    std::vector<std::pair<int, int>> by_outdegree;  // (-outdegree, state)
    std::vector<char> loop(k, 0);
    for (int s = 0; s < k; ++s) {
        int out = 0;
        for (char c : m.alphabet()) {
            auto t = m.step(s, c);
            if (!t) continue;
            ++out;
            if (*t == s) {
                if (loop[s]) return std::nullopt;
                loop[s] = c;
            }
        }
        if (!loop[s] || !m.is_accepting(s)) return std::nullopt;
        by_outdegree.emplace_back(-out, s);
    }
    std::sort(by_outdegree.begin(), by_outdegree.end());
    std::string letters;
    for (auto [_, s] : by_outdegree) letters += loop[s];
    if (normalize_alphabet(letters).size() != letters.size()) return std::nullopt;
    if (by_outdegree[0].second != m.start()) return std::nullopt;
    for (int i = 0; i < k; ++i) {
        int si = by_outdegree[i].second;
        for (int j = 0; j < k; ++j) {
            auto t = m.step(si, letters[j]);
            if (j < i && t) return std::nullopt;
            if (j >= i && (!t || *t != by_outdegree[j].second)) return std::nullopt;
        }
    }
    return letters;
}

Dfa parse_dfa(std::string_view text) {
    struct Line {
        std::vector<std::string> words;
        int line_no;
    };
    std::vector<Line> lines;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    std::string letters;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
        std::istringstream ws(raw);
        Line l{{}, line_no};
        for (std::string w; ws >> w;) l.words.push_back(w);
        if (l.words.empty()) continue;
        if (l.words[0] == "edge") {
            if (l.words.size() != 4 || l.words[2].size() != 1)
                throw ParseError("expected 'edge <src> <letter> <dst>'", line_no, 1);
            letters += l.words[2];
        }
        lines.push_back(std::move(l));
    }
    if (lines.empty()) throw ParseError("empty automaton", 1, 1);

    Dfa m(letters);
    std::optional<std::string> start;
    for (const auto& l : lines) {
        const auto& w = l.words;
        if (w[0] == "state") {
            if (w.size() < 2 || w.size() > 3 || (w.size() == 3 && w[2] != "accept"))
                throw ParseError("expected 'state <name> [accept]'", l.line_no, 1);
            if (m.find_state(w[1])) throw ParseError("duplicate state " + w[1], l.line_no, 1);
            m.add_state(w[1], w.size() == 3);
        } else if (w[0] == "start") {
            if (w.size() != 2) throw ParseError("expected 'start <name>'", l.line_no, 1);
            if (start) throw ParseError("duplicate start directive", l.line_no, 1);
            start = w[1];
        } else if (w[0] != "edge") {
            throw ParseError("unknown directive '" + w[0] + "'", l.line_no, 1);
        }
    }
    for (const auto& l : lines) {
        if (l.words[0] != "edge") continue;
        auto src = m.find_state(l.words[1]);
        auto dst = m.find_state(l.words[3]);
        if (!src || !dst) throw ParseError("edge refers to an undeclared state", l.line_no, 1);
        try {
            m.add_edge(*src, l.words[2][0], *dst);
        } catch (const InvalidArgument& e) {
            throw ParseError(e.what(), l.line_no, 1);
        }
    }
    if (!start) throw ParseError("missing 'start' directive", line_no, 1);
    auto s = m.find_state(*start);
    if (!s) throw ParseError("start state " + *start + " is not declared", line_no, 1);
    m.set_start(*s);
    return m;
}

Dfa load_dfa(const std::string& source) {
    if (source.rfind("chain:", 0) == 0) return build_chain_dfa(source.substr(6));
    std::ifstream in(source);
    if (!in) throw Error("cannot open automaton file '" + source + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_dfa(ss.str());
}

// ---------------------------------------------------------------------------

std::optional<std::string> Intersection::triple_name(std::string_view nonterminal, int from, int to) const {
    std::string name = dfa.state_name(from) + "." + std::string(nonterminal) + "." + dfa.state_name(to);
    if (!triples.count(name)) return std::nullopt;
    return name;
}

Intersection intersect_gf2(const CnfGrammar& g, const Dfa& m, bool prune) {
    for (char c : g.alphabet())
        if (m.alphabet().find(c) == std::string::npos)
            throw InvalidArgument(std::string("alphabet mismatch: grammar letter '") + c +
                                  "' is not read by the automaton");
    const int k = static_cast<int>(m.state_count());
    auto name = [&](int p, const std::string& a, int q) { return m.state_name(p) + "." + a + "." + m.state_name(q); };

    const std::string start = g.start() + "'";
    Gf2Grammar out(start);
    for (char c : m.alphabet()) out.add_letter(c);
    std::map<std::string, Triple> triples;
    for (const auto& a : g.base().nonterminals())
        for (int p = 0; p < k; ++p)
            for (int q = 0; q < k; ++q) {
                out.add_nonterminal(name(p, a, q));
                triples.emplace(name(p, a, q), Triple{p, a, q});
            }

    for (const auto& r : g.base().rules()) {
        if (r.body.size() == 1) {
            for (int p = 0; p < k; ++p)
                if (auto q = m.step(p, r.body[0].letter())) out.toggle_rule(Rule{name(p, r.lhs, *q), r.body});
            continue;
        }
        for (int p = 0; p < k; ++p)
            for (int mid = 0; mid < k; ++mid)
                for (int q = 0; q < k; ++q)
                    out.toggle_rule(Rule{name(p, r.lhs, q),
                                         {Symbol::nonterminal(name(p, r.body[0].name, mid)),
                                          Symbol::nonterminal(name(mid, r.body[1].name, q))}});
    }
    if (k > 0) {
        for (int f = 0; f < k; ++f) {
            if (!m.is_accepting(f)) continue;
            for (const auto& r : out.rules_for(name(m.start(), g.start(), f))) out.toggle_rule(Rule{start, r.body});
        }
    }

    if (prune) {
        out = prune_useless(out);
        std::erase_if(triples, [&](const auto& kv) { return !out.has_nonterminal(kv.first); });
    }
    bool eps = g.eps_parity() && k > 0 && m.is_accepting(m.start());
    return Intersection{CnfGrammar(std::move(out), eps), m, std::move(triples)};
}

SplitView::SplitView(const Intersection& ix) {
    auto letters = chain_letters(ix.dfa);
    if (!letters) throw InvalidArgument("split types need a chain automaton");
    letters_ = *letters;
    // Chain position of each DFA state.
    std::vector<int> position(ix.dfa.state_count());
    for (int i = 0; i < static_cast<int>(letters_.size()); ++i) {
        auto s = ix.dfa.step(ix.dfa.start(), letters_[i]);
        position.at(*s) = i;
    }
    for (const auto& [nm, t] : ix.triples) {
        int i = position[t.from], j = position[t.to];
        if (i <= j) names_.emplace(std::make_tuple(t.nonterminal, i, j), nm);
    }
}

std::optional<std::string> SplitView::nonterminal(std::string_view c, int i, int j) const {
    auto it = names_.find(std::make_tuple(std::string(c), i, j));
    if (it == names_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::tuple<std::string, int, int>> SplitView::types() const {
    std::vector<std::tuple<std::string, int, int>> out;
    for (const auto& [key, _] : names_) out.push_back(key);
    return out;
}

SplitView split_types(const Intersection& ix) { return SplitView(ix); }

// ---------------------------------------------------------------------------

DigitDfa::DigitDfa(Dfa dfa) : dfa_(std::move(dfa)) {
    for (char c : dfa_.alphabet())
        if (c != '0' && c != '1') throw InvalidArgument("digit automata read only 0 and 1");
}

std::string binary_numeral(std::uint64_t n) {
    std::string out;
    for (; n; n >>= 1) out += static_cast<char>('0' + (n & 1));
    std::reverse(out.begin(), out.end());
    return out;
}

bool automatic_member(const DigitDfa& d, std::uint64_t n) { return d.dfa().accepts(binary_numeral(n)); }

DigitDfa powers_of_two_dfa() {
    Dfa m("01");
    int lead = m.add_state("lead");
    int tail = m.add_state("tail", true);
    m.set_start(lead);
    m.add_edge(lead, '1', tail);
    m.add_edge(tail, '0', tail);
    return DigitDfa(std::move(m));
}

}  // namespace gf2g
