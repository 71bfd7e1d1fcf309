#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "c4gb/json_io.hpp"
#include "c4gb/random_gen.hpp"
#include "c4gb/stratum.hpp"

namespace py = pybind11;
using namespace c4gb;

namespace {

StandardSet set_from_lists(int dim, const std::vector<std::vector<int>>& elements) {
    std::vector<Exponent> elems;
    for (const auto& e : elements) elems.emplace_back(e.begin(), e.end());
    return StandardSet::validated(std::move(elems), dim);
}

std::string pretty(const StandardSet& s) {
    std::string out = "StandardSet(dim=" + std::to_string(s.dim()) + ", {";
    for (std::size_t i = 0; i < s.elements().size(); ++i) {
        if (i) out += ", ";
        out += "(" + exponent_key(s.elements()[i]) + ")";
    }
    return out + "})";
}

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

PYBIND11_MODULE(connect4gb, m) {
    m.doc() = "finite lex staircases, connect-four sums, and Groebner bases of sliced ideals";

    py::register_exception<Error>(m, "C4gbError");

    py::class_<StandardSet>(m, "StandardSet")
        .def(py::init(&set_from_lists), py::arg("dim"), py::arg("elements"))
        .def_property_readonly("dim", &StandardSet::dim)
        .def("__len__", &StandardSet::size)
        .def("elements",
             [](const StandardSet& s) {
                 std::vector<std::vector<int>> out;
                 for (const auto& e : s.elements()) out.emplace_back(e.begin(), e.end());
                 return out;
             })
        .def("corners",
             [](const StandardSet& s) {
                 std::vector<std::vector<int>> out;
                 for (const auto& e : s.corners()) out.emplace_back(e.begin(), e.end());
                 return out;
             })
        .def("border",
             [](const StandardSet& s) {
                 std::vector<std::vector<int>> out;
                 for (const auto& e : s.border()) out.emplace_back(e.begin(), e.end());
                 return out;
             })
        .def("project", &StandardSet::project, py::arg("j"))
        .def("height", &StandardSet::height)
        .def("embed", &StandardSet::embed)
        .def(py::self == py::self)
        .def("__add__", [](const StandardSet& a, const StandardSet& b) { return connect_four_add(a, b); })
        .def("__repr__", &pretty)
        .def("to_json", [](const StandardSet& s) { return json_of(s).dump(); })
        .def_static("from_json", [](const std::string& text) { return standard_set_from_json(parse(text)); });

    m.def("add", &connect_four_add, py::arg("a"), py::arg("b"), "connect-four sum of two standard sets");

    m.def(
        "decompositions",
        [](const StandardSet& s) {
            std::vector<std::vector<std::pair<StandardSet, int>>> out;
            for (const auto& d : enumerate_decompositions(s)) out.push_back(d.parts);
            return out;
        },
        py::arg("delta"), "all multisets of lower staircases summing to delta, as (part, multiplicity) lists");

    m.def("decomposition_number", &decomposition_number, py::arg("delta"));

    m.def(
        "admissible_subgraph_count",
        [](const StandardSet& s, int max_dim, std::size_t max_size) {
            return count_admissible_subgraphs(build_iterated_graph(s, {max_dim, max_size}));
        },
        py::arg("delta"), py::arg("max_dim") = 4, py::arg("max_size") = 8);

    m.def(
        "iterated_graph_json",
        [](const StandardSet& s, bool truncate, int max_dim, std::size_t max_size) {
            return graph_to_json(build_iterated_graph(s, {max_dim, max_size}, truncate)).dump(2);
        },
        py::arg("delta"), py::arg("truncate") = false, py::arg("max_dim") = 4, py::arg("max_size") = 8);

    m.def(
        "stratum_report",
        [](const StandardSet& s) {
            auto r = stratum_report(s);
            auto b = dimension_vs_nr(s);
            py::dict out;
            out["dimension"] = r.dimension;
            out["irreducible_components"] = r.irreducible_components;
            out["connected_components"] = r.connected_components;
            out["nr_bound"] = b.nr;
            out["caveat"] = r.caveat;
            return out;
        },
        py::arg("delta"));

    m.def(
        "standard_set_of_points",
        [](const std::string& points_json) { return standard_set_of(point_set_from_json(parse(points_json))); },
        py::arg("points_json"), "staircase of the vanishing ideal of a point-set document");

    m.def(
        "vanishing_ideal",
        [](const std::string& points_json) {
            return json_of(vanishing_ideal_gb(point_set_from_json(parse(points_json)))).dump(2);
        },
        py::arg("points_json"), "reduced lex basis of the vanishing ideal, as JSON");

    m.def(
        "connect4_gb",
        [](const std::string& instance_json, bool trace, const std::string& verify) {
            auto inst = instance_from_json(parse(instance_json));
            auto result = reduce_to_psi(inst, trace);
            Json out = json_of(result);
            if (verify == "oracle" || verify == "both") {
                std::vector<IdealSlice> slices;
                for (const auto& s : inst.summands()) slices.push_back({s.basis, s.lambda});
                auto oracle = intersect_ideals_gb(slices);
                out["verification"]["oracle"] =
                    oracle.delta() == result.psi.delta() && oracle.entries() == result.psi.entries()
                        ? "pass"
                        : "fail";
            }
            if (verify == "membership" || verify == "both")
                out["verification"]["membership"] = json_of(membership_check(inst, result));
            return out.dump(2);
        },
        py::arg("instance_json"), py::arg("trace") = false, py::arg("verify") = "",
        "assemble the reduced basis of an intersection of sliced ideals");

    m.def(
        "random_points",
        [](std::uint64_t seed, const std::string& field, int dim, int count) {
            Rng rng(seed);
            FieldDesc fd = field == "Q" ? field_q() : field_fp(std::stoull(field.substr(3)));
            return json_of(random_point_set(rng, fd, dim, count, 7)).dump(2);
        },
        py::arg("seed"), py::arg("field"), py::arg("dim"), py::arg("count"),
        "seeded point-set fixture; field is 'Q' or 'Fp:<prime>'");
}
