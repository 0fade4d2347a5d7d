#include "mapforge/embed.hpp"
#include "mapforge/errors.hpp"
#include "mapforge/forms.hpp"
#include "mapforge/graph.hpp"
#include "mapforge/map.hpp"
#include "mapforge/poly.hpp"
#include "mapforge/smanifold.hpp"
#include "mapforge/voltage.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace mapforge;

namespace {

py::object to_py(const BigInt& v) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(to_string(v).c_str(), nullptr, 10));
}

py::object to_py(const BigRat& q) {
    if (is_integer(q)) return to_py(to_integer(q));
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(BigInt(boost::multiprecision::numerator(q))),
                    to_py(BigInt(boost::multiprecision::denominator(q))));
}

py::dict laurent_to_py(const LaurentPoly& p) {
    py::dict d;
    for (const auto& [exp, c] : p) d[py::int_(exp)] = to_py(c);
    return d;
}

py::dict polys_to_py(const GenusPolys& p) {
    py::dict d;
    d["orientable"] = laurent_to_py(p.orientable);
    d["nonorientable"] = laurent_to_py(p.nonorientable);
    d["total"] = laurent_to_py(p.total);
    d["display"] = laurent_str(p.total);
    return d;
}

py::dict inv_to_py(const MapInvariants& inv) {
    py::dict d;
    d["v"] = inv.v;
    d["e"] = inv.e;
    d["f"] = inv.f;
    d["chi"] = inv.chi;
    d["orientable"] = inv.orientable;
    d["genus"] = inv.genus;
    return d;
}

MultiGraph make_graph(py::object spec) {
    if (py::isinstance<py::str>(spec)) return graph_from_name(spec.cast<std::string>());
    if (py::isinstance<MultiGraph>(spec)) return spec.cast<MultiGraph>();
    throw input_error("expected a graph or a name like \"K4\"");
}

EnumLimits make_limits(long long budget, int workers) {
    EnumLimits limits;
    if (budget > 0) limits.budget = budget;
    limits.workers = workers;
    return limits;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "combinatorial map engine: embeddings, map groups, censuses";

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<budget_error>(m, "BudgetError", PyExc_RuntimeError);

    py::class_<MultiGraph>(m, "Graph")
        .def(py::init([](int vertices, std::vector<std::pair<int, int>> edges) {
                 MultiGraph g{vertices, std::move(edges)};
                 validate_graph(g);
                 return g;
             }),
             py::arg("vertices"), py::arg("edges"))
        .def_readonly("vertices", &MultiGraph::nv)
        .def_readonly("edges", &MultiGraph::edges)
        .def("__repr__", [](const MultiGraph& g) {
            return "Graph(" + std::to_string(g.nv) + " vertices, " +
                   std::to_string(g.ne()) + " edges)";
        });

    py::class_<CombMap>(m, "Map")
        .def(py::init([](int edges, std::vector<int> P) {
                 CombMap M{edges, std::move(P)};
                 require_valid(M);
                 return M;
             }),
             py::arg("edges"), py::arg("P"))
        .def_readonly("edges", &CombMap::m)
        .def_readonly("P", &CombMap::P)
        .def("invariants", [](const CombMap& M) { return inv_to_py(invariants(M)); })
        .def("validate", &validate)
        .def("dual", &dual)
        .def("canonical_key",
             [](const CombMap& M) { return py::bytes(canon_key(M)); })
        .def("automorphism_count",
             [](const CombMap& M) { return automorphism_group(M).size(); })
        .def("orientation_preserving_count",
             [](const CombMap& M) { return orientation_preserving_auts(M).size(); })
        .def("rooted_count", [](const CombMap& M) { return to_py(rooted_count(M)); })
        .def("is_isomorphic",
             [](const CombMap& M, const CombMap& N) { return isomorphism(M, N).has_value(); })
        .def("underlying_graph", &underlying_graph)
        .def("__repr__", [](const CombMap& M) {
            auto inv = invariants(M);
            return "Map(v=" + std::to_string(inv.v) + ", e=" + std::to_string(inv.e) +
                   ", f=" + std::to_string(inv.f) + ", chi=" + std::to_string(inv.chi) + ")";
        });

    m.def("graph", &make_graph, py::arg("spec"),
          "built-in graph by name: K<n>, K<m>,<n>, B<n>, Dp<n>");

    m.def(
        "count_embeddings",
        [](py::object g, const std::string& cls) {
            return to_py(count_embeddings(make_graph(g), emb_class_from_string(cls)));
        },
        py::arg("graph"), py::arg("cls") = "O");

    m.def(
        "burnside_count",
        [](py::object g, const std::string& cls, const std::string& rel, long long budget,
           int workers) {
            return to_py(burnside_count(make_graph(g), emb_class_from_string(cls),
                                        relation_from_string(rel),
                                        make_limits(budget, workers)));
        },
        py::arg("graph"), py::arg("cls") = "O", py::arg("relation") = "iso",
        py::arg("budget") = 0, py::arg("workers") = 1);

    m.def(
        "orbit_partition",
        [](py::object g, const std::string& cls, const std::string& rel, long long budget,
           int workers) {
            return orbit_partition(make_graph(g), emb_class_from_string(cls),
                                   relation_from_string(rel), make_limits(budget, workers));
        },
        py::arg("graph"), py::arg("cls") = "O", py::arg("relation") = "iso",
        py::arg("budget") = 0, py::arg("workers") = 1);

    m.def(
        "genus_distribution",
        [](py::object g, const std::string& cls, long long budget, int workers) {
            py::dict d;
            for (const auto& [genus, count] :
                 genus_distribution(make_graph(g), emb_class_from_string(cls),
                                    make_limits(budget, workers)))
                d[py::int_(genus)] = to_py(count);
            return d;
        },
        py::arg("graph"), py::arg("cls") = "L", py::arg("budget") = 0, py::arg("workers") = 1);

    m.def(
        "genus_poly",
        [](py::object g, long long budget, int workers) {
            return polys_to_py(genus_poly(make_graph(g), make_limits(budget, workers)));
        },
        py::arg("graph"), py::arg("budget") = 0, py::arg("workers") = 1);

    m.def(
        "rooted_poly",
        [](py::object g, long long budget, int workers) {
            return polys_to_py(rooted_poly(make_graph(g), make_limits(budget, workers)));
        },
        py::arg("graph"), py::arg("budget") = 0, py::arg("workers") = 1);

    m.def(
        "semiarc_aut_order",
        [](py::object g) { return semiarc_aut_group(make_graph(g)).size(); },
        py::arg("graph"));

    m.def(
        "kn_counts",
        [](int n, const std::string& variant) {
            KnCounts c = kn_closed_forms(
                n, variant == "proof" ? KnVariant::Proof : KnVariant::Statement);
            return py::make_tuple(to_py(c.n_orientable), to_py(c.n_locally),
                                  to_py(c.n_nonorientable));
        },
        py::arg("n"), py::arg("variant") = "statement",
        "(orientable, locally orientable, non-orientable) class counts for K_n");

    m.def(
        "bouquet_class_counts",
        [](int n) {
            BouquetCounts c = bouquet_counts(n);
            return py::make_tuple(to_py(c.n_orientable), to_py(c.n_locally),
                                  to_py(c.n_nonorientable));
        },
        py::arg("n"));

    m.def(
        "bouquet_genus_recursion",
        [](long long mm, long long n) { return to_py(bouquet_genus_recursion(mm, n)); },
        py::arg("m"), py::arg("n"));
    m.def(
        "bouquet_rooted_recursion",
        [](long long mm, long long n) { return to_py(bouquet_rooted_recursion(mm, n)); },
        py::arg("m"), py::arg("n"));

    m.def(
        "hurwitz_bounds",
        [](long long genus, bool orientable) {
            auto [plus, full] = hurwitz_bounds(genus, orientable);
            return py::make_tuple(to_py(plus), to_py(full));
        },
        py::arg("genus"), py::arg("orientable") = true,
        "(orientation-preserving bound, full group bound)");

    auto parse_group = [](py::object group) {
        if (py::isinstance<py::int_>(group)) return FinGroupTable::cyclic(group.cast<int>());
        return FinGroupTable::from_table(group.cast<std::vector<std::vector<int>>>());
    };
    m.def(
        "lift",
        [parse_group](const CombMap& M, py::object group, std::vector<int> theta) {
            return lift(M, parse_group(group), theta).map;
        },
        py::arg("map"), py::arg("group"), py::arg("theta"),
        "lift by a voltage assignment; group is a cyclic order or a full table");
    m.def(
        "lift_with_deck",
        [parse_group](const CombMap& M, py::object group, std::vector<int> theta) {
            auto r = lift(M, parse_group(group), theta);
            return py::make_tuple(r.map, r.deck);
        },
        py::arg("map"), py::arg("group"), py::arg("theta"),
        "(lifted map, deck transformation per group element)");

    m.def(
        "quotient",
        [](const CombMap& M, const std::vector<Perm>& subgroup) {
            auto q = quotient_map(M, subgroup);
            return py::make_tuple(q.map, q.theta ? py::cast(*q.theta) : py::none());
        },
        py::arg("map"), py::arg("automorphisms"),
        "(quotient map, reconstructed voltage or None)");

    m.def("automorphisms",
          [](const CombMap& M) { return automorphism_group(M); });

    m.def("O20", &generate_O20, "icosahedral triangulation of the sphere");
    m.def("P10", &generate_P10, "its antipodal quotient on the projective plane");
    m.def(
        "classify", [](const CombMap& M) { return to_string(classify(M)); },
        py::arg("map"), "valency class D1..D7 of a closed triangular map");
    m.def("subdivide", &midpoint_subdivision, py::arg("map"));
    m.def(
        "census",
        [](int max_faces, std::vector<int> allowed) {
            py::list out;
            for (auto& e : smanifold_census(max_faces, allowed))
                out.append(py::make_tuple(e.map, to_string(e.cls)));
            return out;
        },
        py::arg("max_faces") = 14,
        py::arg("allowed") = std::vector<int>{5, 6, 7});
}
