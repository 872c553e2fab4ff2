#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cbc/batch_code.hpp"
#include "cbc/constructions.hpp"
#include "cbc/errors.hpp"
#include "cbc/graphs.hpp"
#include "cbc/retrieval.hpp"
#include "cbc/search.hpp"
#include "cbc/verify.hpp"

namespace py = pybind11;
using namespace cbc;

namespace {

std::vector<std::vector<int>> columns_of(const BatchCode& code) {
    std::vector<std::vector<int>> out;
    for (ServerSet c : code.columns()) out.push_back(c.elements());
    return out;
}

BatchCode code_of(int m, const std::vector<std::vector<int>>& cols) {
    std::vector<ServerSet> sets;
    for (const auto& c : cols) sets.emplace_back(std::span<const int>(c));
    return BatchCode(m, std::move(sets));
}

py::dict search_dict(const SearchResult& res) {
    py::dict d;
    d["value"] = res.value ? py::cast(*res.value) : py::none();
    d["exact"] = res.exact;
    d["nodes"] = res.nodes;
    d["witness"] = res.witness ? py::cast(columns_of(*res.witness)) : py::none();
    return d;
}

}  // namespace

PYBIND11_MODULE(_rcbc, mod) {
    mod.doc() = "Combinatorial batch codes with server redundancy";

    py::register_exception<ParameterError>(mod, "ParameterError", PyExc_ValueError);
    py::register_exception<ContractError>(mod, "ContractError", PyExc_ValueError);
    py::register_exception<ParseError>(mod, "ParseError", PyExc_ValueError);

    py::class_<CodeParams>(mod, "CodeParams")
        .def(py::init<int, int, int, int>(), py::arg("n"), py::arg("k"), py::arg("m"), py::arg("r"))
        .def_readonly("n", &CodeParams::n)
        .def_readonly("k", &CodeParams::k)
        .def_readonly("m", &CodeParams::m)
        .def_readonly("r", &CodeParams::r)
        .def("__repr__", &CodeParams::to_string);

    py::class_<BatchCode>(mod, "BatchCode")
        .def(py::init(&code_of), py::arg("m"), py::arg("columns"))
        .def_property_readonly("m", &BatchCode::m)
        .def_property_readonly("n", &BatchCode::n)
        .def_property_readonly("columns", &columns_of)
        .def_property_readonly("weight", [](const BatchCode& c) { return weight(c); })
        .def("canonical", &BatchCode::canonical)
        .def("to_text", &render_matrix)
        .def_static("from_text", [](const std::string& s) { return parse_matrix(s); })
        .def("__eq__", [](const BatchCode& a, const BatchCode& b) { return a == b; })
        .def("__repr__", [](const BatchCode& c) {
            return "BatchCode(m=" + std::to_string(c.m()) + ", n=" + std::to_string(c.n()) + ")";
        });

    mod.def(
        "verify",
        [](const BatchCode& code, const CodeParams& p, const std::string& strategy) {
            const auto s = parse_strategy(strategy);
            if (!s) throw py::value_error("unknown strategy '" + strategy + "'");
            const VerifyReport rep = verify(code, p, *s);
            return py::make_tuple(rep.ok, rep.witness ? py::cast(describe(*rep.witness)) : py::none());
        },
        py::arg("code"), py::arg("params"), py::arg("strategy") = "auto");

    mod.def(
        "plan_retrieval",
        [](const BatchCode& code, const CodeParams& p, const std::vector<int>& demand,
           const std::vector<int>& down) -> py::object {
            ServerSet off;
            for (int s : down) off.insert(s);
            const auto out = plan_retrieval(code, p, Demand{demand}, Availability::all_but(code.m(), off));
            if (const auto* plan = std::get_if<RetrievalPlan>(&out)) {
                py::dict d;
                for (auto [f, s] : plan->assignment) d[py::int_(f)] = s;
                return d;
            }
            return py::none();
        },
        py::arg("code"), py::arg("params"), py::arg("demand"), py::arg("down") = std::vector<int>{},
        "Returns {file: server}, or None when the demand cannot be served.");

    mod.def(
        "predicted_weight",
        [](const CodeParams& p) -> py::object {
            const auto pred = predicted_weight(p);
            if (!pred.known()) return py::none();
            return py::make_tuple(*pred.value, to_string(*pred.regime));
        },
        py::arg("params"));

    mod.def(
        "construct",
        [](const CodeParams& p) -> py::object {
            const auto built = construct_for(p);
            if (!built) return py::none();
            return py::make_tuple(built->code, to_string(built->regime));
        },
        py::arg("params"));

    mod.def(
        "exact_min_weight",
        [](const CodeParams& p, std::uint64_t node_limit) {
            SearchBudget b;
            b.node_limit = node_limit;
            return search_dict(exact_min_weight(p, b));
        },
        py::arg("params"), py::arg("node_limit") = SearchBudget{}.node_limit);

    mod.def("compute_F", [](int k, int m, int r) { return search_dict(compute_F(k, m, r)); }, py::arg("k"),
            py::arg("m"), py::arg("r"));
    mod.def(
        "compute_n_max", [](int k, int m, int r, std::int64_t limit) { return search_dict(compute_n_max(k, m, r, limit)); },
        py::arg("k"), py::arg("m"), py::arg("r"), py::arg("limit") = 1000);

    mod.def(
        "girth",
        [](int m, const std::vector<std::pair<int, int>>& edges) { return girth(SimpleGraph(m, edges)); },
        py::arg("m"), py::arg("edges"));
    mod.def(
        "max_edges_with_girth", [](int m, int g) { return search_dict(max_edges_with_girth(m, g)); }, py::arg("m"),
        py::arg("girth"));
}
