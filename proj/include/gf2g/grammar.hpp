#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace gf2g {

struct Symbol {
    enum class Kind { terminal, nonterminal };

    Kind kind = Kind::terminal;
    std::string name;

    static Symbol terminal(char letter);
    static Symbol nonterminal(std::string name);

    bool is_terminal() const { return kind == Kind::terminal; }
    char letter() const { return name.front(); }

    auto operator<=>(const Symbol&) const = default;
    bool operator==(const Symbol&) const = default;
};

// A -> X1 ... Xn; an empty body is the epsilon rule.
struct Rule {
    std::string lhs;
    std::vector<Symbol> body;

    auto operator<=>(const Rule&) const = default;
    bool operator==(const Rule&) const = default;
};

std::string format_rule_body(const std::vector<Symbol>& body);

// A grammar whose rules combine by symmetric difference: adding a rule that is
// already present removes it. A word belongs to L(A) when it has an odd number
// of parse trees from A in the underlying ordinary grammar.
class Gf2Grammar {
public:
    Gf2Grammar() = default;
    explicit Gf2Grammar(std::string start);

    const std::string& start() const { return start_; }
    void set_start(std::string start);

    // Sorted, duplicate-free terminal letters.
    const std::string& alphabet() const { return alphabet_; }
    const std::set<std::string>& nonterminals() const { return nonterminals_; }
    const std::set<Rule>& rules() const { return rules_; }

    void add_letter(char letter);
    void add_nonterminal(const std::string& name);

    // Adds the rule, or removes it when an identical rule is present.
    // Returns false when the rule cancelled. Body symbols are registered.
    bool toggle_rule(Rule rule);
    void erase_nonterminal(const std::string& name);

    std::vector<Rule> rules_for(std::string_view lhs) const;
    bool has_nonterminal(std::string_view name) const;

    bool operator==(const Gf2Grammar&) const = default;

private:
    std::string start_;
    std::string alphabet_;
    std::set<std::string> nonterminals_;
    std::set<Rule> rules_;
};

// Every rule is A -> B C (nonterminals) or A -> t. The parity of epsilon parses
// of the grammar it was derived from is kept aside in eps_parity().
class CnfGrammar {
public:
    CnfGrammar(Gf2Grammar base, bool eps_parity);

    const Gf2Grammar& base() const { return base_; }
    bool eps_parity() const { return eps_parity_; }
    const std::string& start() const { return base_.start(); }
    const std::string& alphabet() const { return base_.alphabet(); }

    // Same rules, different start symbol. Only the original start keeps eps_parity.
    CnfGrammar with_start(const std::string& start) const;

private:
    Gf2Grammar base_;
    bool eps_parity_ = false;
};

// Parses the textual grammar format. Alternatives joined by "(+)" become separate
// rules; identical rules cancel in pairs and each cancellation appends a warning.
Gf2Grammar parse_grammar(std::string_view text, std::vector<std::string>* warnings = nullptr);
Gf2Grammar load_grammar(const std::string& path, std::vector<std::string>* warnings = nullptr);

// Canonical text: the start directive, then one line per nonterminal in name order.
std::string format_grammar(const Gf2Grammar& g);
std::string format_grammar(const CnfGrammar& g);

struct ValidationReport {
    bool accepted = true;
    // Each cycle is a closed walk A -> ... -> A listed without repeating A at the end.
    std::vector<std::vector<std::string>> cycles;
    std::vector<std::string> diagnostics;
};

// Accepts iff every word has finitely many parse trees, judged on reachable,
// productive nonterminals: the graph with an edge A -> X_i for every rule
// A -> X_1..X_n whose other symbols are all nullable must be acyclic.
ValidationReport validate_wellformed(const Gf2Grammar& g);

// Nonterminals reachable from the start through rules whose symbols are all productive.
std::set<std::string> useful_nonterminals(const Gf2Grammar& g);
Gf2Grammar prune_useless(const Gf2Grammar& g);

// Parity-preserving Chomsky normal form: lift terminals, binarize, eliminate
// epsilon rules, then inline unit rules. Throws InvalidArgument on ill-formed input.
CnfGrammar to_cnf(const Gf2Grammar& g);

}  // namespace gf2g
