#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trideg/json_io.hpp"

namespace py = pybind11;
using namespace trideg;

namespace {

Rational rational_from_py(const py::handle& v) {
    if (py::isinstance<py::int_>(v)) return Rational(Integer(py::str(v).cast<std::string>()));
    if (py::isinstance<py::str>(v)) return rational_from_string(v.cast<std::string>());
    throw ParseError("tensor values must be ints or 'num/den' strings");
}

Tensor3 tensor_from_py(const py::sequence& entries) {
    std::vector<std::vector<std::vector<Rational>>> data;
    for (const auto& plane : entries) {
        std::vector<std::vector<Rational>> rows;
        for (const auto& row : plane.cast<py::sequence>()) {
            std::vector<Rational> vals;
            for (const auto& v : row.cast<py::sequence>()) vals.push_back(rational_from_py(v));
            rows.push_back(std::move(vals));
        }
        data.push_back(std::move(rows));
    }
    return Tensor3::from_entries(data);
}

std::vector<Hint> hints_from_py(const py::object& hints) {
    std::vector<Hint> out;
    if (hints.is_none()) return out;
    for (const auto& h : hints.cast<py::sequence>()) {
        auto pair = h.cast<py::sequence>();
        const Axis axis = axis_from_name(pair[0].cast<std::string>());
        QVector coords;
        for (const auto& c : pair[1].cast<py::sequence>()) coords.push_back(rational_from_py(c));
        out.emplace_back(axis, ProjPoint(std::move(coords)));
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_trideg, m) {
    m.doc() = "exact analysis of tridimensional hypermatrices over the rationals";

    py::register_exception<ZeroTensorError>(m, "ZeroTensorError");
    py::register_exception<FormatError>(m, "FormatError");

    m.def(
        "classify_json",
        [](const py::sequence& entries, const py::object& hints) {
            return report_to_json(classify(tensor_from_py(entries), hints_from_py(hints))).dump();
        },
        py::arg("entries"), py::arg("hints") = py::none(),
        "Full analysis report as a JSON string; entries are nested p x q x r lists.");

    m.def(
        "analyze_file_json",
        [](const std::string& path, const py::object& hints) {
            const TensorDocument doc = load_tensor_document(path);
            std::vector<Hint> hs = doc.hints;
            for (Hint& h : hints_from_py(hints)) hs.push_back(std::move(h));
            return report_to_json(classify(doc.tensor, hs)).dump();
        },
        py::arg("path"), py::arg("hints") = py::none(),
        "Analyze a tensor document on disk; file-embedded hints are honored.");

    m.def(
        "diagnose_json",
        [](const py::sequence& entries, const std::string& axis, const py::sequence& point) {
            const Tensor3 t = tensor_from_py(entries);
            const Axis a = axis_from_name(axis);
            QVector coords;
            for (const auto& c : point) coords.push_back(rational_from_py(c));
            const ProjPoint pt(std::move(coords));
            const DetScheme s = scheme_of(t, a);
            return diagnosis_to_json(s, pt, a, diagnose_point(s, pt)).dump();
        },
        py::arg("entries"), py::arg("axis"), py::arg("point"),
        "Point diagnosis on the determinantal scheme along one axis, as JSON.");

    m.def("hyperdet_222",
          [](const py::sequence& entries) { return to_string(hyperdet_222(tensor_from_py(entries))); });

    m.def("schlafli", [](const py::sequence& entries) {
        const SchlafliResult r = schlafli_binary(tensor_from_py(entries));
        return py::make_tuple(to_string(r.value), r.det_l_identically_zero);
    });

    m.def("det_assoc", [](const py::sequence& entries, const std::string& axis) {
        return det(assoc_matrix(tensor_from_py(entries), axis_from_name(axis))).str();
    });

    m.def("index_ranks", [](const py::sequence& entries) {
        const IndexRanks r = index_ranks(tensor_from_py(entries));
        return py::make_tuple(r.x, r.y, r.z);
    });

    m.def("essential_format", [](const py::sequence& entries) {
        const EssentialFormat f = essential_format(tensor_from_py(entries));
        return py::make_tuple(f.p, f.q, f.r);
    });

    m.def("verify_kernel_triple", [](const py::sequence& entries, const py::sequence& x,
                                     const py::sequence& y, const py::sequence& z) {
        auto vec = [](const py::sequence& s) {
            QVector v;
            for (const auto& c : s) v.push_back(rational_from_py(c));
            return v;
        };
        return verify_kernel_triple(tensor_from_py(entries),
                                    KernelTriple{ProjPoint(vec(x)), ProjPoint(vec(y)), ProjPoint(vec(z))});
    });

    m.attr("__version__") = "0.1.0";
}
