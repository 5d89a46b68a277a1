#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gf2g/analysis.hpp"
#include "gf2g/automata.hpp"
#include "gf2g/cli.hpp"
#include "gf2g/error.hpp"
#include "gf2g/grammar.hpp"
#include "gf2g/lang.hpp"
#include "gf2g/series.hpp"
#include "gf2g/solver.hpp"

namespace py = pybind11;
using namespace gf2g;

namespace {

std::vector<std::string> words_of(const LangSlice& s) { return {s.words().begin(), s.words().end()}; }

py::dict series_dict(const TruncSeries& f) {
    py::dict d;
    d["vars"] = f.vars();
    d["box"] = f.box();
    d["support"] = f.support();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "GF(2)-grammars: parity parsing, bounded-language series and their analyses";

    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    py::class_<Gf2Grammar>(m, "Grammar")
        .def_property_readonly("start", &Gf2Grammar::start)
        .def_property_readonly("alphabet", &Gf2Grammar::alphabet)
        .def_property_readonly("nonterminals",
                               [](const Gf2Grammar& g) { return std::vector<std::string>(g.nonterminals().begin(), g.nonterminals().end()); })
        .def_property_readonly("rule_count", [](const Gf2Grammar& g) { return g.rules().size(); })
        .def("__str__", [](const Gf2Grammar& g) { return format_grammar(g); });

    py::class_<CnfGrammar>(m, "CnfGrammar")
        .def_property_readonly("eps_parity", &CnfGrammar::eps_parity)
        .def("__str__", [](const CnfGrammar& g) { return format_grammar(g); });

    m.def("parse_grammar", [](const std::string& text) { return parse_grammar(text); }, py::arg("text"));
    m.def("load_grammar", [](const std::string& path) { return load_grammar(path); }, py::arg("path"));
    m.def("validate", [](const Gf2Grammar& g) {
        const auto r = validate_wellformed(g);
        return py::make_tuple(r.accepted, r.cycles);
    });
    m.def("to_cnf", &to_cnf);
    m.def("parse_parity", [](const CnfGrammar& g, const std::string& w) { return parse_parity(g, w); });
    m.def("enumerate", [](const CnfGrammar& g, int n) { return words_of(enumerate(g, n)); }, py::arg("grammar"), py::arg("n"));

    m.def("extract_dual", [](const CnfGrammar& g, const std::string& letters, const Box& box) {
        return series_dict(extract_dual(g, letters, box));
    }, py::arg("grammar"), py::arg("letters"), py::arg("box"));
    m.def("series_of_words", [](const std::vector<std::string>& words, const std::string& letters, const Box& box) {
        LangSlice s(normalize_alphabet(letters), box_total(box));
        for (const auto& w : words) s.insert(w);
        return series_dict(dual_of_slice(s, letters, box));
    }, py::arg("words"), py::arg("letters"), py::arg("box"));

    m.def("find_recurrence", [](const CnfGrammar& g, const Box& box, int d_max, int deg_max, int n0) -> py::object {
        const auto w = coeff_window(extract_dual(g, "ab", box));
        const auto r = find_recurrence(w, d_max, deg_max, n0);
        if (!r) return py::none();
        std::vector<std::string> polys;
        for (const auto& p : r->polys) polys.push_back(format_poly(p));
        return py::make_tuple(r->d, polys);
    }, py::arg("grammar"), py::arg("box"), py::arg("d_max"), py::arg("deg_max"), py::arg("n0"));

    m.def("factor", [](const std::string& poly, int max_deg) -> py::object {
        const auto r = factor_search(parse_poly(poly), max_deg);
        if (r.factors) return py::make_tuple(format_poly(r.factors->first), format_poly(r.factors->second));
        return py::cast(r.complete ? "irreducible" : "unknown");
    }, py::arg("poly"), py::arg("max_deg"));

    m.def("quotient_grammar", [](const Gf2Grammar& numerator, const std::string& poly) {
        return build_quotient_grammar({numerator, parse_poly(poly, "ab")});
    }, py::arg("numerator"), py::arg("poly"));

    m.def("ambiguity_identities_hold", [](int n) { return inherent_ambiguity_report(n).holds(); }, py::arg("n"));

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));
}
