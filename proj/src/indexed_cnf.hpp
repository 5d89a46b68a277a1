#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gf2g/grammar.hpp"

namespace gf2g::detail {

// Integer view of a CNF grammar for the dynamic programs.
struct IndexedCnf {
    std::vector<std::string> names;
    std::map<std::string, int, std::less<>> id;
    std::vector<std::array<int, 3>> binary;         // A -> B C
    std::vector<std::pair<int, char>> terminal;      // A -> t
    int start = -1;

    explicit IndexedCnf(const CnfGrammar& g) {
        for (const auto& nt : g.base().nonterminals()) {
            id[nt] = static_cast<int>(names.size());
            names.push_back(nt);
        }
        for (const auto& r : g.base().rules()) {
            if (r.body.size() == 1)
                terminal.emplace_back(id.at(r.lhs), r.body[0].letter());
            else
                binary.push_back({id.at(r.lhs), id.at(r.body[0].name), id.at(r.body[1].name)});
        }
        start = id.at(g.start());
    }

    std::size_t size() const { return names.size(); }
};

}  // namespace gf2g::detail
