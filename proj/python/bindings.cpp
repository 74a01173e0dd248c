#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fldt/decisions.hpp"
#include "fldt/oracle.hpp"
#include "fldt/pcp.hpp"

namespace py = pybind11;
using namespace fldt;

namespace {

Word w(const std::string& s) { return parse_word(s); }
std::string ws(const Word& word) { return to_string(word); }

std::optional<std::string> opt_ws(const std::optional<Word>& word) {
    if (!word) return std::nullopt;
    return ws(*word);
}

py::dict report_dict(const DecisionReport& r) {
    py::dict d;
    d["answer"] = r.answer;
    d["witness"] = opt_ws(r.witness);
    d["member"] = opt_ws(r.member);
    d["method"] = r.method;
    return d;
}

py::dict scan_dict(const ScanResult& r) {
    py::dict d;
    const char* v = r.verdict == Verdict::yes ? "yes"
                    : r.verdict == Verdict::no_up_to_bound ? "no_up_to_bound"
                                                           : "unknown";
    d["verdict"] = v;
    d["witness"] = opt_ws(r.witness);
    d["member"] = opt_ws(r.member);
    return d;
}

Form parse_form(const std::string& name, int param) {
    if (name == "square") return Form::square();
    if (name == "power") return Form::power(param);
    if (name == "marked_copy") return Form::marked_copy();
    if (name == "reverse_copy") return Form::reverse_copy();
    if (name == "mirror_product") return Form::mirror_product(param);
    if (name == "self_shuffle") return Form::self_shuffle();
    if (name == "reverse_shuffle") return Form::reverse_shuffle();
    if (name == "marked_shuffle") return Form::marked_shuffle();
    if (name == "palindrome") return Form::palindrome();
    throw PreconditionError("unknown form: " + name);
}

} // namespace

PYBIND11_MODULE(_fldt, m) {
    m.doc() = "formal-language decision toolkit";

    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<PreconditionError>(m, "PreconditionError");
    py::register_exception<CapacityError>(m, "CapacityError");
    py::register_exception<IndeterminateError>(m, "IndeterminateError");

    py::class_<Nfa>(m, "Nfa")
        .def_static("parse", [](const std::string& t) { return parse_nfa(t); })
        .def("__str__", [](const Nfa& a) { return to_string(a); })
        .def("accepts", [](const Nfa& a, const std::string& s) {
            return accepts(a, w(s));
        })
        .def("shortest_member", [](const Nfa& a) {
            return opt_ws(shortest_member(a));
        })
        .def("enumerate", [](const Nfa& a, std::size_t maxlen) {
            std::vector<std::string> out;
            for (const Word& x : enumerate_nfa(a, maxlen)) out.push_back(ws(x));
            return out;
        });

    py::class_<Cfg>(m, "Cfg")
        .def_static("parse", [](const std::string& t) { return parse_cfg(t); })
        .def("__str__", [](const Cfg& g) { return to_string(g); })
        .def_property_readonly("linear", [](const Cfg& g) { return g.linear; })
        .def("membership", [](const Cfg& g, const std::string& s) {
            return membership(g, w(s));
        })
        .def("enumerate", [](const Cfg& g, std::size_t maxlen) {
            std::vector<std::string> out;
            for (const Word& x : enumerate(g, maxlen)) out.push_back(ws(x));
            return out;
        });

    py::class_<PcpInstance>(m, "PcpInstance")
        .def_static("parse", [](const std::string& t) { return parse_pcp(t); })
        .def("__str__", [](const PcpInstance& i) { return to_string(i); })
        .def("solve_bounded", [](const PcpInstance& i, std::size_t max_len) {
            return opt_ws(solve_bounded(i, max_len));
        });

    m.def("has_square", [](const Nfa& r) { return report_dict(has_square(r)); });
    m.def("has_power",
          [](const Nfa& r, int n, const Nfa& p, bool allow_empty) {
              return report_dict(has_power(r, n, p, allow_empty));
          },
          py::arg("r"), py::arg("n"), py::arg("p"), py::arg("allow_empty") = false);
    m.def("nth_root", [](const Nfa& r, int n) { return nth_root(r, n); });
    m.def("star_root", [](const Nfa& r) { return star_root(r); });
    m.def("squares_subset", [](const Nfa& p, const Nfa& r) {
        return report_dict(squares_subset(p, r));
    });
    m.def("has_marked_copy",
          [](const Nfa& r, bool allow_empty) {
              return report_dict(has_marked_copy(r, allow_empty));
          },
          py::arg("r"), py::arg("allow_empty") = false);
    m.def("has_reverse_copy",
          [](const Nfa& r, bool allow_empty) {
              return report_dict(has_reverse_copy(r, allow_empty));
          },
          py::arg("r"), py::arg("allow_empty") = false);
    m.def("has_mirror_product", [](const Nfa& r, std::size_t k) {
        return report_dict(has_mirror_product(r, k));
    });
    m.def("has_mirror_star", [](const Nfa& r) {
        return report_dict(has_mirror_star(r));
    });

    m.def("build_L2", &build_L2);
    m.def("build_L2_marked", &build_L2_marked);
    m.def("build_Ln", &build_Ln, py::arg("inst"), py::arg("n"),
          py::arg("separators") = true);
    m.def("build_Lomega", &build_Lomega);
    m.def("build_Lsharp", &build_Lsharp, py::arg("inst"),
          py::arg("include_empty") = false);
    m.def("build_L1", &build_L1);
    m.def("build_Lk", &build_Lk);
    m.def("marked_shuffle_automaton", [](const PcpInstance& i) {
        return marked_shuffle_automaton(i).expand();
    });

    m.def("scan_for_form",
          [](const Nfa& a, const std::string& form, int param,
             std::size_t max_len, std::size_t max_candidates) {
              SearchBudget b{max_len, max_candidates};
              return scan_dict(scan_for_form(a, parse_form(form, param), b));
          },
          py::arg("lang"), py::arg("form"), py::arg("param") = 0,
          py::arg("max_len") = 10, py::arg("max_candidates") = 200000);
    m.def("scan_for_form_cfg",
          [](const Cfg& g, const std::string& form, int param,
             std::size_t max_len, std::size_t max_candidates) {
              SearchBudget b{max_len, max_candidates};
              return scan_dict(scan_for_form(g, parse_form(form, param), b));
          },
          py::arg("lang"), py::arg("form"), py::arg("param") = 0,
          py::arg("max_len") = 10, py::arg("max_candidates") = 200000);
}
