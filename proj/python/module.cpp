// Python bindings for the core operations: graphs, complexes, homology,
// filtrations and barcodes, contiguity chains, collapsibility, and the
// closed-form/table helpers.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cechcube/collapse.hpp"
#include "cechcube/complex.hpp"
#include "cechcube/errors.hpp"
#include "cechcube/formulas.hpp"
#include "cechcube/graph.hpp"
#include "cechcube/homology.hpp"
#include "cechcube/persistence.hpp"
#include "cechcube/simplex.hpp"

namespace py = pybind11;
using namespace cechcube;

namespace {

Coefficients parse_coefficients(const std::string& name) {
    if (name == "z" || name == "Z") return Coefficients::Integers;
    if (name == "z2" || name == "Z2") return Coefficients::Mod2;
    throw DomainError("coefficients must be 'z' or 'z2', got '" + name + "'");
}

std::string coefficients_name(Coefficients c) {
    return c == Coefficients::Integers ? "z" : "z2";
}

py::object big_to_py(const BigInt& v) {
    std::string digits = v.str();
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(digits.c_str(), nullptr, 10));
}

py::list torsion_list(const std::vector<BigInt>& torsion) {
    py::list out;
    for (const auto& t : torsion) out.append(big_to_py(t));
    return out;
}

std::string verdict_name(CollapseVerdict v) {
    switch (v) {
        case CollapseVerdict::Collapsible: return "collapsible";
        case CollapseVerdict::Impossible: return "impossible";
        default: return "undecided";
    }
}

}  // namespace

PYBIND11_MODULE(_cechcube, m) {
    m.doc() = "Cech complexes of finite graphs: homology, persistence, collapsibility";

    py::register_exception<SizeError>(m, "SizeError", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def_static("hypercube", &Graph::hypercube, py::arg("n"))
        .def_static("prefix_graph", &Graph::prefix_graph, py::arg("m"))
        .def_static("cycle", &Graph::cycle, py::arg("m"))
        .def_static("from_edges", &Graph::from_edges, py::arg("n_vertices"), py::arg("edges"))
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("neighbors", &Graph::neighbors, py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("edges", &Graph::edges)
        .def("distance", &Graph::distance, py::arg("u"), py::arg("w"))
        .def("closed_neighborhood", &Graph::closed_neighborhood, py::arg("v"), py::arg("k"))
        .def("eccentricity", &Graph::eccentricity, py::arg("v"))
        .def("radius", &Graph::radius)
        .def("diameter", &Graph::diameter)
        .def("vertex_name", &Graph::vertex_name, py::arg("v"));

    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def_static(
            "from_maximal",
            [](std::uint32_t vertex_count, std::vector<Simplex> faces) {
                return SimplicialComplex::from_maximal(vertex_count, std::move(faces));
            },
            py::arg("vertex_count"), py::arg("faces"))
        .def_property_readonly("vertex_count", &SimplicialComplex::vertex_count)
        .def_property_readonly("maximal_faces", &SimplicialComplex::maximal_faces)
        .def_property_readonly("is_void", &SimplicialComplex::is_void)
        .def("dimension", &SimplicialComplex::dimension)
        .def("vertices", &SimplicialComplex::vertices)
        .def("contains", &SimplicialComplex::contains, py::arg("face"))
        .def("faces", &SimplicialComplex::faces, py::arg("dim"))
        .def("f_vector", &SimplicialComplex::f_vector)
        .def("total_face_count", &SimplicialComplex::total_face_count, py::arg("budget") = 0)
        .def("euler_characteristic", &SimplicialComplex::euler_characteristic)
        .def("__eq__", [](const SimplicialComplex& a, const SimplicialComplex& b) {
            return a == b;
        });

    m.def(
        "cech_complex",
        [](const Graph& g, std::uint32_t r) { return cech_complex(g, r); },
        py::arg("graph"), py::arg("r"));
    m.def("star", &cechcube::star, py::arg("complex"), py::arg("v"));
    m.def("link", &cechcube::link, py::arg("complex"), py::arg("v"));
    m.def("deletion", &cechcube::deletion, py::arg("complex"), py::arg("v"));
    m.def("skeleton", &cechcube::skeleton, py::arg("complex"), py::arg("d"));

    py::class_<DimensionHomology>(m, "DimensionHomology")
        .def_readonly("dim", &DimensionHomology::dim)
        .def_readonly("betti_z", &DimensionHomology::betti_z)
        .def_readonly("betti_z2", &DimensionHomology::betti_z2)
        .def_property_readonly(
            "torsion", [](const DimensionHomology& d) { return torsion_list(d.torsion); });

    py::class_<HomologySummary>(m, "HomologySummary")
        .def_readonly("reduced", &HomologySummary::reduced)
        .def_property_readonly(
            "coefficients",
            [](const HomologySummary& h) { return coefficients_name(h.coefficients); })
        .def_readonly("dims", &HomologySummary::dims)
        .def("betti", &HomologySummary::betti, py::arg("d"))
        .def("betti2", &HomologySummary::betti2, py::arg("d"))
        .def(
            "torsion",
            [](const HomologySummary& h, int d) { return torsion_list(h.torsion(d)); },
            py::arg("d"))
        .def("is_acyclic", &HomologySummary::is_acyclic)
        .def("top_nonzero_dim", &HomologySummary::top_nonzero_dim);

    m.def(
        "reduced_homology",
        [](const SimplicialComplex& k, const std::string& coefficients,
           std::size_t face_budget) {
            return reduced_homology(k, parse_coefficients(coefficients), face_budget);
        },
        py::arg("complex"), py::arg("coefficients") = "z",
        py::arg("face_budget") = kDefaultFaceBudget);
    m.def(
        "betti",
        [](const SimplicialComplex& k, int d, const std::string& coefficients,
           std::size_t face_budget) {
            return betti(k, d, parse_coefficients(coefficients), face_budget);
        },
        py::arg("complex"), py::arg("d"), py::arg("coefficients") = "z",
        py::arg("face_budget") = kDefaultFaceBudget);
    m.def("betti_mod2_all", &betti_mod2_all, py::arg("complex"),
          py::arg("face_budget") = kDefaultFaceBudget);

    py::class_<FiltrationEntry>(m, "FiltrationEntry")
        .def_readonly("face", &FiltrationEntry::face)
        .def_readonly("birth", &FiltrationEntry::birth);

    py::class_<Filtration>(m, "Filtration")
        .def_readonly("vertex_count", &Filtration::vertex_count)
        .def_readonly("max_scale", &Filtration::max_scale)
        .def_readonly("entries", &Filtration::entries);

    py::class_<BarcodeInterval>(m, "BarcodeInterval")
        .def_readonly("dim", &BarcodeInterval::dim)
        .def_readonly("birth", &BarcodeInterval::birth)
        .def_readonly("death", &BarcodeInterval::death);

    py::class_<Barcode>(m, "Barcode")
        .def_readonly("max_scale", &Barcode::max_scale)
        .def_readonly("intervals", &Barcode::intervals)
        .def("alive_at", &Barcode::alive_at, py::arg("dim"), py::arg("scale"));

    m.def("birth_scale", &birth_scale, py::arg("graph"), py::arg("simplex"));
    m.def("build_filtration", &build_filtration, py::arg("graph"), py::arg("max_scale"),
          py::arg("face_budget") = 2'000'000, py::arg("jobs") = 1);
    m.def("full_simplex_scale", &full_simplex_scale, py::arg("graph"));
    m.def("compute_barcode", &compute_barcode, py::arg("filtration"));

    py::class_<ChainVerdict>(m, "ChainVerdict")
        .def_readonly("success", &ChainVerdict::success)
        .def_readonly("failing_step", &ChainVerdict::failing_step)
        .def_readonly("witness", &ChainVerdict::witness);

    m.def("contiguity_chain", &contiguity_chain, py::arg("n"), py::arg("r"),
          py::arg("codomain_delta") = 2);

    py::class_<CollapseStep>(m, "CollapseStep")
        .def_readonly("free_face", &CollapseStep::free_face)
        .def_readonly("maximal_face", &CollapseStep::maximal_face);

    py::class_<CollapseSequence>(m, "CollapseSequence")
        .def_readonly("d", &CollapseSequence::d)
        .def_readonly("steps", &CollapseSequence::steps);

    py::class_<CollapseSearchResult>(m, "CollapseSearchResult")
        .def_property_readonly(
            "verdict",
            [](const CollapseSearchResult& r) { return verdict_name(r.verdict); })
        .def_readonly("sequence", &CollapseSearchResult::sequence)
        .def_readonly("states_explored", &CollapseSearchResult::states_explored);

    m.def("is_d_collapsible", &is_d_collapsible, py::arg("complex"), py::arg("d"),
          py::arg("state_budget") = 200000);

    py::class_<ReplayReport>(m, "ReplayReport")
        .def_readonly("success", &ReplayReport::success)
        .def_readonly("first_invalid_step", &ReplayReport::first_invalid_step)
        .def_readonly("reason", &ReplayReport::reason);

    m.def("verify_sequence", &verify_sequence, py::arg("complex"), py::arg("sequence"));

    py::class_<CollapsibilityBounds>(m, "CollapsibilityBounds")
        .def_readonly("lower", &CollapsibilityBounds::lower)
        .def_readonly("upper", &CollapsibilityBounds::upper)
        .def_readonly("seed", &CollapsibilityBounds::seed)
        .def_readonly("sampled_d_prec", &CollapsibilityBounds::sampled_d_prec);

    m.def(
        "collapsibility_bounds",
        [](const SimplicialComplex& k, int orders, std::uint64_t seed,
           const std::string& coefficients, std::size_t face_budget) {
            return collapsibility_bounds(k, orders, seed, parse_coefficients(coefficients),
                                         face_budget);
        },
        py::arg("complex"), py::arg("orders") = 50, py::arg("seed") = 0,
        py::arg("coefficients") = "z", py::arg("face_budget") = kDefaultFaceBudget);

    m.def("alpha", &alpha, py::arg("m_minus_1"));
    m.def("betti1_hypercube", &betti1_hypercube, py::arg("n"));
    m.def("betti2_hypercube", &betti2_hypercube, py::arg("n"));

    py::class_<TableEntry>(m, "TableEntry")
        .def_readonly("n", &TableEntry::n)
        .def_readonly("r", &TableEntry::r)
        .def("expected_betti", &TableEntry::expected_betti)
        .def("descriptor", &TableEntry::descriptor);

    m.def("table_lookup", &table_lookup, py::arg("n"), py::arg("r"));
    m.def("table_registry", &table_registry);
}
