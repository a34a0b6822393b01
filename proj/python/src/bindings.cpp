#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "carc/arc_model.hpp"
#include "carc/catalog.hpp"
#include "carc/error.hpp"
#include "carc/gtc.hpp"
#include "carc/io.hpp"
#include "carc/r_circular.hpp"
#include "carc/recognition.hpp"
#include "carc/svg.hpp"

namespace py = pybind11;
using namespace carc;

namespace {

using Arc = std::pair<int, int>;

ArcModel to_model(int n_positions, const std::vector<Arc>& arcs) {
    ArcModel m{n_positions, {}};
    for (auto [s, e] : arcs)
        m.arcs.push_back({s, e});
    check_model(m);
    return m;
}

std::vector<Arc> arc_list(const ArcModel& m) {
    std::vector<Arc> out;
    for (const auto& a : m.arcs)
        out.emplace_back(a.start, a.end);
    return out;
}

py::dict witness_dict(const RPartiteGraph& g, const CircularOrdering& o, const ViolationWitness& w) {
    py::dict d;
    d["base_edge"] = py::make_tuple(w.p, w.q);
    d["inner"] = w.inner;
    d["outer"] = w.outer;
    d["template"] = std::string(1, template_name(w.kind()));
    d["quadruple"] = w.quadruple();
    d["pattern_id"] = classify_witness(g, o, w).config->id();
    return d;
}

py::dict decision_dict(const Decision& d) {
    py::dict out;
    out["answer"] = d.yes ? "yes" : "no";
    out["ordering"] = d.ordering ? py::cast(d.ordering->sequence()) : py::none();
    if (d.model) {
        out["n_positions"] = d.model->n_positions;
        out["arcs"] = arc_list(*d.model);
    } else {
        out["n_positions"] = py::none();
        out["arcs"] = py::none();
    }
    out["orderings_searched"] = d.orderings_searched;
    out["mode"] = d.mode == SearchMode::parallel ? "par" : "seq";
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Circular-arc r-graph recognition core";

    py::register_exception<Error>(m, "CarcError", PyExc_ValueError);

    py::class_<RPartiteGraph>(m, "Graph")
        .def(py::init([](int n, int r, std::vector<int> parts, std::vector<Edge> edges,
                         std::optional<std::vector<HostEdge>> host) {
                 return RPartiteGraph(n, r, std::move(parts), std::move(edges), std::move(host));
             }),
             py::arg("n"), py::arg("r"), py::arg("parts"), py::arg("edges"),
             py::arg("host_edges") = py::none())
        .def_static("from_json", [](const std::string& text) { return parse_graph(text); })
        .def("to_json", &serialize_graph)
        .def_property_readonly("n", &RPartiteGraph::order)
        .def_property_readonly("r", &RPartiteGraph::part_count)
        .def_property_readonly("parts", &RPartiteGraph::parts)
        .def_property_readonly("edges", &RPartiteGraph::edges)
        .def_property_readonly("host_edges", &RPartiteGraph::host_edges)
        .def("adjacent", &RPartiteGraph::adjacent)
        .def("__eq__", [](const RPartiteGraph& a, const RPartiteGraph& b) { return a == b; })
        .def("__repr__", [](const RPartiteGraph& g) {
            return "Graph(n=" + std::to_string(g.order()) + ", r=" + std::to_string(g.part_count()) +
                   ", edges=" + std::to_string(g.edges().size()) + ")";
        });

    m.def("example", &builtin_example, py::arg("name"));
    m.def("random_graph", &random_rpartite, py::arg("r"), py::arg("sizes"), py::arg("density"),
          py::arg("seed"));

    m.def(
        "verify_ordering",
        [](const RPartiteGraph& g, const std::vector<int>& seq) {
            const CircularOrdering o(seq);
            const auto v = verify_gtc(g, o);
            py::dict d;
            d["pass"] = v.pass;
            if (v.witness)
                d["witness"] = witness_dict(g, o, *v.witness);
            return d;
        },
        py::arg("graph"), py::arg("ordering"));

    m.def(
        "verify_rcircular",
        [](const RPartiteGraph& g, const std::vector<int>& seq) {
            const auto v = verify_r_circular(g, CircularOrdering(seq));
            py::dict d;
            d["pass"] = v.pass;
            if (v.uncovered)
                d["uncovered"] = py::make_tuple(v.uncovered->first, v.uncovered->second);
            return d;
        },
        py::arg("graph"), py::arg("ordering"));

    m.def(
        "scan_patterns",
        [](const RPartiteGraph& g, const std::vector<int>& seq) {
            const CircularOrdering o(seq);
            py::list out;
            for (const auto& w : scan_violations(g, o))
                out.append(witness_dict(g, o, w));
            return out;
        },
        py::arg("graph"), py::arg("ordering"));

    m.def(
        "row_scan",
        [](const RPartiteGraph& g, const std::vector<int>& seq, int i) {
            const auto s = row_scan(g, CircularOrdering(seq), i);
            py::dict d;
            d["anchor"] = s.anchor;
            d["reached"] = s.reached;
            d["terminal"] = s.terminal;
            return d;
        },
        py::arg("graph"), py::arg("ordering"), py::arg("i"));

    m.def(
        "build_model",
        [](const RPartiteGraph& g, const std::vector<int>& seq) {
            return arc_list(build_model(g, CircularOrdering(seq)));
        },
        py::arg("graph"), py::arg("ordering"));

    m.def(
        "validate_model",
        [](const RPartiteGraph& g, int n_positions, const std::vector<Arc>& arcs) {
            const auto v = validate_model(g, to_model(n_positions, arcs));
            py::dict d;
            d["pass"] = v.pass;
            if (v.offending)
                d["offending"] = py::make_tuple(v.offending->first, v.offending->second);
            return d;
        },
        py::arg("graph"), py::arg("n_positions"), py::arg("arcs"));

    m.def(
        "extract_ordering",
        [](int n_positions, const std::vector<Arc>& arcs) {
            return extract_ordering(to_model(n_positions, arcs)).sequence();
        },
        py::arg("n_positions"), py::arg("arcs"));

    m.def(
        "normalize_model",
        [](int n_positions, const std::vector<Arc>& arcs) {
            const auto out = normalize_model(to_model(n_positions, arcs));
            return py::make_tuple(out.n_positions, arc_list(out));
        },
        py::arg("n_positions"), py::arg("arcs"));

    m.def(
        "catalog",
        [](int colors) {
            py::list out;
            for (const auto& c : enumerate_catalog(colors)) {
                py::dict d;
                d["id"] = c.id();
                d["colors"] = c.colors;
                py::list edges;
                for (std::size_t k = 0; k < kRolePairs.size(); ++k)
                    if (c.edges & (1u << k))
                        edges.append(std::string{"ijkl"[kRolePairs[k][0]], "ijkl"[kRolePairs[k][1]]});
                d["edges"] = edges;
                out.append(d);
            }
            return out;
        },
        py::arg("colors") = 4);

    m.def(
        "recognize",
        [](const RPartiteGraph& g, bool parallel, unsigned threads, int limit) {
            SearchLimits limits;
            limits.max_vertices = limit;
            limits.mode = parallel ? SearchMode::parallel : SearchMode::sequential;
            limits.threads = threads;
            Decision d;
            {
                py::gil_scoped_release release;
                d = recognize(g, limits);
            }
            return decision_dict(d);
        },
        py::arg("graph"), py::arg("parallel") = false, py::arg("threads") = 0u,
        py::arg("limit") = 12);

    m.def(
        "recognize_bruteforce",
        [](const RPartiteGraph& g) { return decision_dict(recognize_bruteforce(g)); },
        py::arg("graph"));

    m.def(
        "harness",
        [](const RPartiteGraph& g) {
            HarnessReport r;
            {
                py::gil_scoped_release release;
                r = equivalence_harness(g);
            }
            return py::module_::import("json").attr("loads")(to_json(r).dump());
        },
        py::arg("graph"));

    m.def(
        "render_svg",
        [](const RPartiteGraph& g, int n_positions, const std::vector<Arc>& arcs) {
            return render_svg(g, to_model(n_positions, arcs));
        },
        py::arg("graph"), py::arg("n_positions"), py::arg("arcs"));
}
