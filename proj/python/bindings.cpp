#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "simatroid/commands.hpp"
#include "simatroid/error.hpp"
#include "simatroid/triangulation.hpp"

namespace py = pybind11;
using namespace simatroid;

namespace {

// Faces cross the boundary as tuples of 1-based vertices.
using PyFace = std::vector<int>;

PyFace to_py(Face f) { return f.vertices(); }

std::vector<PyFace> to_py(std::span<const Face> faces) {
    std::vector<PyFace> out;
    out.reserve(faces.size());
    for (Face f : faces) out.push_back(f.vertices());
    return out;
}

FaceSet from_py(const std::vector<PyFace>& faces) {
    FaceSet out;
    for (const auto& f : faces) out.push_back(Face::of(f));
    normalize(out);
    return out;
}

FieldSpec field_of(const Instance& inst, const std::optional<std::string>& field) {
    if (field) return FieldSpec::parse(*field);
    return inst.field.value_or(FieldSpec());
}

SimplicialMatroid matroid(const Instance& inst, const std::optional<std::string>& field) {
    return SimplicialMatroid(inst.complex(), field_of(inst, field));
}

Strategy strategy_of(const std::string& s) {
    if (s == "greedy") return Strategy::greedy_lex;
    if (s == "backtrack") return Strategy::backtracking;
    throw Error("unknown strategy '" + s + "'");
}

}  // namespace

PYBIND11_MODULE(_simatroid, m) {
    m.doc() = "Simplicial matroids of hyperclique complexes over exact fields";

    auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", error.ptr());
    py::register_exception<GuardExceeded>(m, "GuardExceeded", error.ptr());

    py::class_<Instance>(m, "Instance")
        .def(py::init([](int n, int k, const std::vector<PyFace>& faces, std::optional<std::string> field,
                         std::string id) {
                 Instance inst{n, k, from_py(faces), std::nullopt, std::move(id)};
                 if (field) inst.field = FieldSpec::parse(*field);
                 inst.complex();  // validates sizes and vertex range
                 return inst;
             }),
             py::arg("n"), py::arg("k"), py::arg("faces"), py::arg("field") = py::none(), py::arg("id") = "")
        .def_readonly("n", &Instance::n)
        .def_readonly("k", &Instance::k)
        .def_readonly("id", &Instance::id)
        .def_property_readonly("faces", [](const Instance& i) { return to_py(i.faces); })
        .def_property_readonly("field",
                               [](const Instance& i) -> std::optional<std::string> {
                                   if (!i.field) return std::nullopt;
                                   return i.field->directive();
                               })
        .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; })
        .def("__repr__", [](const Instance& i) {
            return "<Instance " + (i.id.empty() ? std::string("?") : i.id) + " n=" + std::to_string(i.n) +
                   " k=" + std::to_string(i.k) + " faces=" + std::to_string(i.faces.size()) + ">";
        });

    m.def("parse_instance", &parse_instance, py::arg("text"), py::arg("id") = "");
    m.def("write_instance", &write_instance, py::arg("instance"));

    m.def("gen_example3", &gen_example3);
    m.def("gen_projective_plane", [] { return from_complex(gen_projective_plane(), "projective-plane"); });
    m.def(
        "gen_prop54", [](int n, int k) { return from_complex(gen_prop54(n, k), "prop54"); }, py::arg("n"),
        py::arg("k"));
    m.def(
        "gen_random",
        [](int n, int k, const std::string& density, std::uint64_t seed) {
            return gen_random(n, k, Density::parse(density), seed);
        },
        py::arg("n"), py::arg("k"), py::arg("density") = "1/2", py::arg("seed") = 0);

    m.def(
        "skeleton", [](const Instance& i, int d) { return to_py(i.complex().skeleton(d)); }, py::arg("instance"),
        py::arg("d"));
    m.def("facets", [](const Instance& i) { return to_py(i.complex().facets()); });
    m.def("simplicial_faces", [](const Instance& i) { return to_py(simplicial_faces(i.complex())); });

    m.def(
        "rank", [](const Instance& i, std::optional<std::string> field) { return matroid(i, field).rank(); },
        py::arg("instance"), py::arg("field") = py::none());
    m.def(
        "circuits",
        [](const Instance& i, std::optional<std::string> field, std::optional<std::size_t> max_size) {
            auto mat = matroid(i, field);
            std::vector<std::vector<PyFace>> out;
            for (const auto& c : circuits_brute(mat, max_size.value_or(mat.size()))) out.push_back(to_py(c));
            return out;
        },
        py::arg("instance"), py::arg("field") = py::none(), py::arg("max_size") = py::none());

    m.def(
        "dperfect_sequence",
        [](const Instance& i, std::optional<std::string> field,
           const std::string& strategy) -> std::optional<std::vector<PyFace>> {
            auto cert = find_dperfect_sequence(i.complex(), field_of(i, field), strategy_of(strategy));
            if (!cert) return std::nullopt;
            return to_py(cert->sequence());
        },
        py::arg("instance"), py::arg("field") = py::none(), py::arg("strategy") = "backtrack");
    m.def(
        "is_basic_linear_sequence",
        [](const Instance& i, const std::vector<PyFace>& seq, std::optional<std::string> field) {
            std::vector<Face> faces;
            for (const auto& f : seq) faces.push_back(Face::of(f));
            return check_basic_linear_sequence(i.complex(), field_of(i, field), faces);
        },
        py::arg("instance"), py::arg("sequence"), py::arg("field") = py::none());
    m.def(
        "is_chordal", [](int n, const std::vector<PyFace>& edges) { return check_chordal_graph(n, from_py(edges)); },
        py::arg("n"), py::arg("edges"));
    m.def(
        "is_superdense",
        [](const Instance& i, std::optional<std::string> field) {
            return check_superdense(matroid(i, field)).has_value();
        },
        py::arg("instance"), py::arg("field") = py::none());
    m.def(
        "supersolvable",
        [](const Instance& i, std::optional<std::string> field) {
            return std::string(to_string(check_supersolvable(matroid(i, field))));
        },
        py::arg("instance"), py::arg("field") = py::none());
    m.def(
        "is_triangulable",
        [](const Instance& i, std::optional<std::string> field) { return is_triangulable(matroid(i, field)); },
        py::arg("instance"), py::arg("field") = py::none());
    m.def(
        "strongly_triangulable",
        [](const Instance& i, std::optional<std::string> field) {
            return std::string(to_string(is_strongly_triangulable_brute(matroid(i, field))));
        },
        py::arg("instance"), py::arg("field") = py::none());
    m.def(
        "full_duality", [](int n, int k, const std::string& field) {
            return verify_full_duality(n, k, FieldSpec::parse(field));
        },
        py::arg("n"), py::arg("k"), py::arg("field") = "2");

    m.def(
        "verify_certificates",
        [](const std::string& text) {
            std::vector<std::tuple<std::string, bool, std::string>> out;
            for (const auto& cert : parse_certificates(text)) {
                auto v = verify_certificate(cert);
                out.emplace_back(cert.kind(), v.ok, v.reason);
            }
            return out;
        },
        py::arg("text"));

    m.def(
        "run",
        [](const std::string& cmd, std::optional<Instance> instance, std::optional<std::string> field,
           const std::string& generator, int n, int k, std::uint64_t seed, const std::string& density,
           const std::string& input) {
            CommandOptions opts;
            if (field) opts.field = FieldSpec::parse(*field);
            opts.generator = generator;
            opts.n = n;
            opts.k = k;
            opts.seed = seed;
            opts.density = Density::parse(density);
            auto r = run_command(cmd, instance, opts, input);
            return py::make_tuple(r.text, r.exit_code);
        },
        py::arg("cmd"), py::arg("instance") = py::none(), py::kw_only(), py::arg("field") = py::none(),
        py::arg("generator") = "", py::arg("n") = 0, py::arg("k") = 0, py::arg("seed") = 0,
        py::arg("density") = "1/2", py::arg("input") = "");
}
