#include "gf2g/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "gf2g/error.hpp"

namespace gf2g {

std::size_t max_search_size() {
    if (const char* env = std::getenv("GF2G_MAX_MONOMIALS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{1} << 20;
}

namespace {

bool is_nonterminal_name(std::string_view s) {
    if (s.empty() || !std::isupper(static_cast<unsigned char>(s.front()))) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

}  // namespace

Symbol Symbol::terminal(char letter) {
    if (!std::islower(static_cast<unsigned char>(letter)))
        throw InvalidArgument(std::string("terminal must be a lowercase letter: '") + letter + "'");
    return Symbol{Kind::terminal, std::string(1, letter)};
}

Symbol Symbol::nonterminal(std::string name) {
    if (name.empty()) throw InvalidArgument("empty nonterminal name");
    return Symbol{Kind::nonterminal, std::move(name)};
}

std::string format_rule_body(const std::vector<Symbol>& body) {
    if (body.empty()) return "eps";
    std::string out;
    for (const auto& s : body) {
        if (!out.empty()) out += ' ';
        out += s.name;
    }
    return out;
}

Gf2Grammar::Gf2Grammar(std::string start) { set_start(std::move(start)); }

void Gf2Grammar::set_start(std::string start) {
    add_nonterminal(start);
    start_ = std::move(start);
}

void Gf2Grammar::add_letter(char letter) {
    auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), letter);
    if (it == alphabet_.end() || *it != letter) alphabet_.insert(it, letter);
}

void Gf2Grammar::add_nonterminal(const std::string& name) {
    if (name.empty()) throw InvalidArgument("empty nonterminal name");
    nonterminals_.insert(name);
}

bool Gf2Grammar::toggle_rule(Rule rule) {
    add_nonterminal(rule.lhs);
    for (const auto& s : rule.body) {
        if (s.is_terminal())
            add_letter(s.letter());
        else
            add_nonterminal(s.name);
    }
    auto [it, inserted] = rules_.insert(std::move(rule));
    if (!inserted) rules_.erase(it);
    return inserted;
}

void Gf2Grammar::erase_nonterminal(const std::string& name) {
    std::erase_if(rules_, [&](const Rule& r) { return r.lhs == name; });
    nonterminals_.erase(name);
}

std::vector<Rule> Gf2Grammar::rules_for(std::string_view lhs) const {
    std::vector<Rule> out;
    auto it = rules_.lower_bound(Rule{std::string(lhs), {}});
    for (; it != rules_.end() && it->lhs == lhs; ++it) out.push_back(*it);
    return out;
}

bool Gf2Grammar::has_nonterminal(std::string_view name) const {
    return nonterminals_.count(std::string(name)) > 0;
}

CnfGrammar::CnfGrammar(Gf2Grammar base, bool eps_parity)
    : base_(std::move(base)), eps_parity_(eps_parity) {
    for (const auto& r : base_.rules()) {
        bool ok = (r.body.size() == 1 && r.body[0].is_terminal()) ||
                  (r.body.size() == 2 && !r.body[0].is_terminal() && !r.body[1].is_terminal());
        if (!ok)
            throw InvalidArgument("rule '" + r.lhs + " -> " + format_rule_body(r.body) +
                                  "' is not in Chomsky normal form");
    }
}

CnfGrammar CnfGrammar::with_start(const std::string& start) const {
    if (!base_.has_nonterminal(start)) throw InvalidArgument("unknown nonterminal " + start);
    Gf2Grammar g = base_;
    g.set_start(start);
    return CnfGrammar(std::move(g), start == base_.start() && eps_parity_);
}

// ---------------------------------------------------------------------------
// Textual format

namespace {

struct Token {
    enum class Kind { ident, arrow, xor_sep };
    Kind kind;
    std::string text;
    int column;
};

std::vector<Token> tokenize_line(std::string_view line, int line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        int col = static_cast<int>(i) + 1;
        if (line.substr(i, 2) == "->") {
            out.push_back({Token::Kind::arrow, "->", col});
            i += 2;
        } else if (line.substr(i, 3) == "(+)") {
            out.push_back({Token::Kind::xor_sep, "(+)", col});
            i += 3;
        } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < line.size() &&
                   (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_'))
                ++j;
            out.push_back({Token::Kind::ident, std::string(line.substr(i, j - i)), col});
            i = j;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line_no, col);
        }
    }
    return out;
}

struct Use {
    std::string name;
    int line;
    int column;
};

}  // namespace

Gf2Grammar parse_grammar(std::string_view text, std::vector<std::string>* warnings) {
    Gf2Grammar g;
    std::optional<Use> start;
    std::set<std::string> defined;
    std::vector<Use> uses;
    bool any_content = false;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        auto tokens = tokenize_line(line, line_no);
        if (tokens.empty()) continue;
        any_content = true;

        const Token& head = tokens[0];
        if (head.kind == Token::Kind::ident && head.text == "start") {
            if (tokens.size() != 2 || tokens[1].kind != Token::Kind::ident)
                throw ParseError("expected 'start <Nonterminal>'", line_no, head.column);
            if (!is_nonterminal_name(tokens[1].text))
                throw ParseError("invalid nonterminal name '" + tokens[1].text + "'", line_no, tokens[1].column);
            if (start) throw ParseError("duplicate start directive", line_no, head.column);
            start = Use{tokens[1].text, line_no, tokens[1].column};
            continue;
        }

        if (head.kind != Token::Kind::ident || !is_nonterminal_name(head.text))
            throw ParseError("expected a nonterminal at the start of a rule", line_no, head.column);
        if (tokens.size() < 2 || tokens[1].kind != Token::Kind::arrow)
            throw ParseError("expected '->'", line_no,
                             tokens.size() < 2 ? static_cast<int>(line.size()) + 1 : tokens[1].column);
        const std::string lhs = head.text;
        defined.insert(lhs);
        g.add_nonterminal(lhs);

        std::vector<std::vector<Symbol>> alternatives(1);
        bool saw_eps = false;
        int alt_column = tokens.size() > 2 ? tokens[2].column : static_cast<int>(line.size()) + 1;
        auto close_alternative = [&](int column) {
            if (alternatives.back().empty() && !saw_eps) throw ParseError("empty alternative", line_no, column);
        };
        for (std::size_t i = 2; i < tokens.size(); ++i) {
            const Token& t = tokens[i];
            if (t.kind == Token::Kind::arrow) throw ParseError("unexpected '->'", line_no, t.column);
            if (t.kind == Token::Kind::xor_sep) {
                close_alternative(t.column);
                alternatives.emplace_back();
                saw_eps = false;
                alt_column = i + 1 < tokens.size() ? tokens[i + 1].column : t.column + 3;
                continue;
            }
            if (t.text == "eps") {
                if (saw_eps || !alternatives.back().empty())
                    throw ParseError("'eps' must stand alone in an alternative", line_no, t.column);
                saw_eps = true;
                continue;
            }
            if (saw_eps) throw ParseError("'eps' must stand alone in an alternative", line_no, t.column);
            if (t.text.size() == 1 && std::islower(static_cast<unsigned char>(t.text[0]))) {
                alternatives.back().push_back(Symbol::terminal(t.text[0]));
            } else if (is_nonterminal_name(t.text)) {
                alternatives.back().push_back(Symbol::nonterminal(t.text));
                uses.push_back({t.text, line_no, t.column});
            } else {
                throw ParseError("invalid symbol '" + t.text +
                                     "' (terminals are single lowercase letters, nonterminals start uppercase)",
                                 line_no, t.column);
            }
        }
        close_alternative(alt_column);

        for (auto& body : alternatives) {
            Rule r{lhs, std::move(body)};
            std::string shown = lhs + " -> " + format_rule_body(r.body);
            if (!g.toggle_rule(std::move(r)) && warnings)
                warnings->push_back("line " + std::to_string(line_no) + ": rule '" + shown +
                                    "' cancels an identical rule");
        }
    }

    if (!any_content) throw ParseError("empty grammar", 1, 1);
    if (!start) throw ParseError("missing 'start' directive", line_no, 1);
    for (const auto& u : uses)
        if (!defined.count(u.name)) throw ParseError("undefined nonterminal '" + u.name + "'", u.line, u.column);
    if (!defined.count(start->name))
        throw ParseError("undefined nonterminal '" + start->name + "'", start->line, start->column);
    g.set_start(start->name);
    return g;
}

Gf2Grammar load_grammar(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open grammar file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_grammar(ss.str(), warnings);
}

std::string format_grammar(const Gf2Grammar& g) {
    std::ostringstream out;
    out << "start " << g.start() << '\n';
    for (const auto& nt : g.nonterminals()) {
        auto rules = g.rules_for(nt);
        out << nt << " -> ";
        if (rules.empty()) {
            // Keeps the nonterminal declared; the two alternatives cancel on reparse.
            out << "eps (+) eps\n";
            continue;
        }
        for (std::size_t i = 0; i < rules.size(); ++i) {
            if (i) out << " (+) ";
            out << format_rule_body(rules[i].body);
        }
        out << '\n';
    }
    return out.str();
}

std::string format_grammar(const CnfGrammar& g) {
    return format_grammar(g.base()) + "# eps parity: " + (g.eps_parity() ? "1" : "0") + "\n";
}

// ---------------------------------------------------------------------------
// Well-formedness

namespace {

std::set<std::string> productive_set(const Gf2Grammar& g) {
    std::set<std::string> prod;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : g.rules()) {
            if (prod.count(r.lhs)) continue;
            bool all = std::all_of(r.body.begin(), r.body.end(),
                                   [&](const Symbol& s) { return s.is_terminal() || prod.count(s.name); });
            if (all) changed = prod.insert(r.lhs).second || changed;
        }
    }
    return prod;
}

std::set<std::string> nullable_set(const Gf2Grammar& g) {
    std::set<std::string> nul;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : g.rules()) {
            if (nul.count(r.lhs)) continue;
            bool all = std::all_of(r.body.begin(), r.body.end(),
                                   [&](const Symbol& s) { return !s.is_terminal() && nul.count(s.name); });
            if (all) changed = nul.insert(r.lhs).second || changed;
        }
    }
    return nul;
}

bool body_productive(const Rule& r, const std::set<std::string>& prod) {
    return std::all_of(r.body.begin(), r.body.end(),
                       [&](const Symbol& s) { return s.is_terminal() || prod.count(s.name); });
}

std::set<std::string> useful_from(const Gf2Grammar& g, const std::set<std::string>& prod) {
    std::set<std::string> seen;
    if (!prod.count(g.start())) return seen;
    std::vector<std::string> stack{g.start()};
    seen.insert(g.start());
    while (!stack.empty()) {
        std::string a = stack.back();
        stack.pop_back();
        for (const auto& r : g.rules_for(a)) {
            if (!body_productive(r, prod)) continue;
            for (const auto& s : r.body)
                if (!s.is_terminal() && seen.insert(s.name).second) stack.push_back(s.name);
        }
    }
    return seen;
}

// Returns one representative cycle per strongly connected component that has one.
std::vector<std::vector<std::string>> find_cycles(const std::map<std::string, std::set<std::string>>& edges) {
    std::map<std::string, int> index, low;
    std::set<std::string> on_stack;
    std::vector<std::string> stack;
    std::vector<std::vector<std::string>> sccs;
    int counter = 0;

    std::function<void(const std::string&)> strong = [&](const std::string& v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack.insert(v);
        if (auto it = edges.find(v); it != edges.end()) {
            for (const auto& w : it->second) {
                if (!index.count(w)) {
                    strong(w);
                    low[v] = std::min(low[v], low[w]);
                } else if (on_stack.count(w)) {
                    low[v] = std::min(low[v], index[w]);
                }
            }
        }
        if (low[v] == index[v]) {
            std::vector<std::string> comp;
            std::string w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack.erase(w);
                comp.push_back(w);
            } while (w != v);
            sccs.push_back(std::move(comp));
        }
    };
    for (const auto& [v, _] : edges)
        if (!index.count(v)) strong(v);

    std::vector<std::vector<std::string>> cycles;
    for (auto& comp : sccs) {
        std::set<std::string> members(comp.begin(), comp.end());
        const std::string root = *members.begin();
        auto out = edges.find(root);
        bool self_loop = out != edges.end() && out->second.count(root);
        if (comp.size() == 1 && !self_loop) continue;
        if (self_loop) {
            cycles.push_back({root});
            continue;
        }
        // BFS inside the component from root back to root.
        std::map<std::string, std::string> parent;
        std::vector<std::string> queue{root};
        std::optional<std::string> closing;
        for (std::size_t qi = 0; qi < queue.size() && !closing; ++qi) {
            const std::string v = queue[qi];
            auto it = edges.find(v);
            if (it == edges.end()) continue;
            for (const auto& w : it->second) {
                if (!members.count(w)) continue;
                if (w == root) {
                    closing = v;
                    break;
                }
                if (!parent.count(w)) {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        std::vector<std::string> path;
        for (std::string v = *closing; v != root; v = parent[v]) path.push_back(v);
        path.push_back(root);
        std::reverse(path.begin(), path.end());
        cycles.push_back(std::move(path));
    }
    return cycles;
}

}  // namespace

std::set<std::string> useful_nonterminals(const Gf2Grammar& g) {
    return useful_from(g, productive_set(g));
}

Gf2Grammar prune_useless(const Gf2Grammar& g) {
    auto prod = productive_set(g);
    auto useful = useful_from(g, prod);
    Gf2Grammar out(g.start());
    for (char c : g.alphabet()) out.add_letter(c);
    for (const auto& r : g.rules())
        if (useful.count(r.lhs) && body_productive(r, prod)) out.toggle_rule(r);
    return out;
}

ValidationReport validate_wellformed(const Gf2Grammar& g) {
    auto prod = productive_set(g);
    auto useful = useful_from(g, prod);
    auto nullable = nullable_set(g);

    std::map<std::string, std::set<std::string>> edges;
    for (const auto& r : g.rules()) {
        if (!useful.count(r.lhs) || !body_productive(r, prod)) continue;
        edges[r.lhs];
        for (std::size_t i = 0; i < r.body.size(); ++i) {
            if (r.body[i].is_terminal()) continue;
            bool others_nullable = true;
            for (std::size_t j = 0; j < r.body.size() && others_nullable; ++j)
                if (j != i) others_nullable = !r.body[j].is_terminal() && nullable.count(r.body[j].name);
            if (others_nullable) edges[r.lhs].insert(r.body[i].name);
        }
    }

    ValidationReport report;
    report.cycles = find_cycles(edges);
    for (const auto& cyc : report.cycles) {
        bool all_nullable = std::all_of(cyc.begin(), cyc.end(), [&](const auto& n) { return nullable.count(n) > 0; });
        std::string line = all_nullable ? "epsilon cycle: " : "unit cycle: ";
        for (const auto& n : cyc) line += n + " -> ";
        line += cyc.front();
        report.diagnostics.push_back(std::move(line));
    }
    report.accepted = report.cycles.empty();
    return report;
}

}  // namespace gf2g
