#include <functional>
#include <map>
#include <set>

#include "gf2g/error.hpp"
#include "gf2g/grammar.hpp"

namespace gf2g {

namespace {

class NameGen {
public:
    explicit NameGen(const std::set<std::string>& taken) : taken_(taken) {}

    std::string fresh(const std::string& base) {
        std::string name = base;
        for (int k = 1; taken_.count(name); ++k) name = base + "_" + std::to_string(k);
        taken_.insert(name);
        return name;
    }

private:
    std::set<std::string> taken_;
};

Gf2Grammar empty_like(const Gf2Grammar& g) {
    Gf2Grammar out(g.start());
    for (char c : g.alphabet()) out.add_letter(c);
    for (const auto& nt : g.nonterminals()) out.add_nonterminal(nt);
    return out;
}

// Terminals inside bodies of length >= 2 move to dedicated nonterminals T -> t.
Gf2Grammar lift_terminals(const Gf2Grammar& g, NameGen& names) {
    Gf2Grammar out = empty_like(g);
    std::map<char, std::string> lifted;
    for (const auto& r : g.rules()) {
        Rule nr = r;
        if (nr.body.size() >= 2) {
            for (auto& s : nr.body) {
                if (!s.is_terminal()) continue;
                auto [it, fresh] = lifted.try_emplace(s.letter());
                if (fresh) {
                    it->second = names.fresh(std::string("T_") + s.letter());
                    out.toggle_rule(Rule{it->second, {Symbol::terminal(s.letter())}});
                }
                s = Symbol::nonterminal(it->second);
            }
        }
        out.toggle_rule(std::move(nr));
    }
    return out;
}

// A -> X1 X2 ... Xn becomes a right-leaning chain of binary rules.
Gf2Grammar binarize(const Gf2Grammar& g, NameGen& names) {
    Gf2Grammar out = empty_like(g);
    for (const auto& r : g.rules()) {
        if (r.body.size() <= 2) {
            out.toggle_rule(r);
            continue;
        }
        std::string current = r.lhs;
        for (std::size_t i = 0; i + 2 < r.body.size(); ++i) {
            std::string next = names.fresh(r.lhs + "_" + std::to_string(i + 1));
            out.toggle_rule(Rule{current, {r.body[i], Symbol::nonterminal(next)}});
            current = next;
        }
        out.toggle_rule(Rule{current, {r.body[r.body.size() - 2], r.body.back()}});
    }
    return out;
}

// Parity of the number of epsilon parse trees of each nonterminal. Counts of
// trees of height <= h obey a polynomial recurrence, so they can be iterated
// mod 2; well-formedness bounds the height by the number of nonterminals.
std::map<std::string, bool> epsilon_parities(const Gf2Grammar& g) {
    std::map<std::string, bool> e;
    for (const auto& nt : g.nonterminals()) e[nt] = false;
    for (std::size_t round = 0; round <= g.nonterminals().size(); ++round) {
        std::map<std::string, bool> next;
        for (const auto& nt : g.nonterminals()) next[nt] = false;
        for (const auto& r : g.rules()) {
            bool term = true;
            for (const auto& s : r.body) term = term && !s.is_terminal() && e[s.name];
            if (term) next[r.lhs] = !next[r.lhs];
        }
        e = std::move(next);
    }
    return e;
}

Gf2Grammar drop_epsilon(const Gf2Grammar& g, const std::map<std::string, bool>& eps) {
    Gf2Grammar out = empty_like(g);
    auto erasable = [&](const Symbol& s) { return !s.is_terminal() && eps.at(s.name); };
    for (const auto& r : g.rules()) {
        switch (r.body.size()) {
            case 0:
                break;
            case 1:
                out.toggle_rule(r);
                break;
            case 2:
                out.toggle_rule(r);
                if (erasable(r.body[0])) out.toggle_rule(Rule{r.lhs, {r.body[1]}});
                if (erasable(r.body[1])) out.toggle_rule(Rule{r.lhs, {r.body[0]}});
                break;
            default:
                throw Error("internal: body longer than 2 after binarization");
        }
    }
    return out;
}

bool is_unit(const Rule& r) { return r.body.size() == 1 && !r.body[0].is_terminal(); }

// Unit rules are replaced by the (already unit-free) rules of their target,
// processing targets before sources.
Gf2Grammar inline_units(const Gf2Grammar& g) {
    std::map<std::string, std::vector<std::string>> unit_edges;
    for (const auto& r : g.rules())
        if (is_unit(r)) unit_edges[r.lhs].push_back(r.body[0].name);

    std::map<std::string, int> state;  // 0 new, 1 active, 2 done
    std::vector<std::string> order;
    std::function<void(const std::string&)> visit = [&](const std::string& v) {
        int& st = state[v];
        if (st == 2) return;
        if (st == 1) throw InvalidArgument("grammar has a unit cycle through " + v);
        st = 1;
        for (const auto& w : unit_edges[v]) visit(w);
        state[v] = 2;
        order.push_back(v);
    };
    for (const auto& nt : g.nonterminals()) visit(nt);

    Gf2Grammar out = empty_like(g);
    for (const auto& v : order) {
        for (const auto& r : g.rules_for(v)) {
            if (!is_unit(r)) {
                out.toggle_rule(r);
                continue;
            }
            for (const auto& inherited : out.rules_for(r.body[0].name)) out.toggle_rule(Rule{v, inherited.body});
        }
    }
    return out;
}

}  // namespace

CnfGrammar to_cnf(const Gf2Grammar& g) {
    auto report = validate_wellformed(g);
    if (!report.accepted) throw InvalidArgument("grammar is ill-formed: " + report.diagnostics.front());

    Gf2Grammar work = prune_useless(g);
    NameGen names(g.nonterminals());
    work = lift_terminals(work, names);
    work = binarize(work, names);
    auto eps = epsilon_parities(work);
    bool eps_parity = eps.at(work.start());
    work = drop_epsilon(work, eps);
    work = inline_units(work);
    return CnfGrammar(prune_useless(work), eps_parity);
}

}  // namespace gf2g
