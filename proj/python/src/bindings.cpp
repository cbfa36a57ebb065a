#include "dwgns/dwgns.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using nlohmann::json;
using namespace dwgns;

namespace {

py::object to_py(const Integer& x) { return py::reinterpret_steal<py::object>(PyLong_FromString(x.get_str().c_str(), nullptr, 10)); }

py::object to_py(const Rational& x) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(x.get_num()), to_py(x.get_den()));
}

Integer to_integer(const py::handle& h) {
    if (!py::isinstance<py::int_>(h)) {
        throw ParseError("expected an integer, got " + std::string(py::str(h)));
    }
    return Integer(std::string(py::str(h)));
}

// JSON text, or any object json.dumps accepts.
json to_json_value(const py::object& o) {
    std::string text = py::isinstance<py::str>(o) ? o.cast<std::string>()
                                                   : py::module_::import("json").attr("dumps")(o).cast<std::string>();
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
}

IntMatrix to_matrix(const py::sequence& rows) {
    const std::size_t n = rows.size();
    const std::size_t cols = n == 0 ? 0 : py::len(rows[0]);
    IntMatrix m(n, cols);
    for (std::size_t i = 0; i < n; ++i) {
        py::sequence row = rows[i];
        if (row.size() != cols) {
            throw DimensionError("ragged matrix");
        }
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = to_integer(row[j]);
        }
    }
    return m;
}

py::list from_matrix(const IntMatrix& m) {
    py::list out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.append(to_py(m(i, j)));
        }
        out.append(row);
    }
    return out;
}

SurfaceObject surface(std::size_t genus, const py::object& arcs, const FiniteAbelianGroup& g) {
    json j{{"genus", genus}, {"arcs", arcs.is_none() ? json::array() : to_json_value(arcs)}};
    return surface_from_json(j, g);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact abelian Dijkgraaf-Witten invariants and GNS state spaces";

    static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
    py::register_exception<ContractError>(m, "ContractError", base.ptr());
    py::register_exception<GuardError>(m, "GuardError", base.ptr());
    py::register_exception<InconsistentError>(m, "InconsistentError", base.ptr());

    m.def(
        "parse_group", [](const std::string& spec) { return parse_group(spec).cyclic_orders(); }, py::arg("spec"),
        "Cyclic orders of a spec such as 'Z2xZ4'.");
    m.def(
        "group_order", [](const std::string& spec) { return to_py(parse_group(spec).order()); }, py::arg("spec"));

    m.def(
        "invariant_s3",
        [](const std::string& group, const py::object& link) {
            const auto g = parse_group(group);
            return to_py(invariant_s3(link_from_json(to_json_value(link), g), g));
        },
        py::arg("group"), py::arg("link"), "Invariant of an all-Wilson link in S^3.");
    m.def(
        "invariant_closed",
        [](const std::string& group, const py::object& link) {
            const auto g = parse_group(group);
            return to_py(invariant_closed(link_from_json(to_json_value(link), g), g));
        },
        py::arg("group"), py::arg("link"), "Invariant of a surgery presentation with Wilson lines.");
    m.def(
        "reduce",
        [](const std::string& group, const py::object& link) {
            const auto g = parse_group(group);
            const auto r = reduce(link_from_json(to_json_value(link), g), g);
            std::vector<std::string> trace;
            for (const auto& mv : r.trace) {
                trace.push_back(describe(mv));
            }
            const Rational v = r.result.evaluate([&](const LabeledLinkingData& d) { return unlinked_value(d, g); });
            return py::make_tuple(trace, to_py(v));
        },
        py::arg("group"), py::arg("link"), "(move trace, value) of the reduction to an unlinked diagram.");
    m.def(
        "eta", [](const std::string& group) { return to_py(eta(parse_group(group))); }, py::arg("group"));

    m.def(
        "space_dimension",
        [](const std::string& group, std::size_t genus, const py::object& arcs) {
            const auto g = parse_group(group);
            const auto s = surface(genus, arcs, g);
            py::gil_scoped_release release;
            return space_dimension(s, g);
        },
        py::arg("group"), py::arg("genus"), py::arg("arcs") = py::none());
    m.def(
        "pairing_matrix",
        [](const std::string& group, std::size_t genus, const py::object& arcs) {
            const auto g = parse_group(group);
            const auto p = surface_pairing_matrix(surface(genus, arcs, g), g);
            py::list rows;
            for (std::size_t i = 0; i < p.rows(); ++i) {
                py::list row;
                for (std::size_t j = 0; j < p.cols(); ++j) {
                    row.append(to_py(p.at(i, j)));
                }
                rows.append(row);
            }
            return rows;
        },
        py::arg("group"), py::arg("genus"), py::arg("arcs") = py::none());

    m.def(
        "count_solutions",
        [](const py::sequence& matrix, const py::sequence& rhs, const std::string& group) {
            const auto g = parse_group(group);
            std::vector<GroupElement> t;
            for (const auto& x : rhs) {
                t.push_back(element_from_json(to_json_value(py::reinterpret_borrow<py::object>(x)), g));
            }
            return to_py(count_solutions(to_matrix(matrix), t, g));
        },
        py::arg("matrix"), py::arg("rhs"), py::arg("group"), "Number of x in G^cols with matrix * x = rhs.");
    m.def(
        "smith_normal_form",
        [](const py::sequence& matrix) {
            const auto snf = smith_normal_form(to_matrix(matrix));
            return py::make_tuple(from_matrix(snf.U), from_matrix(snf.D), from_matrix(snf.V));
        },
        py::arg("matrix"), "(U, D, V) with U * A * V = D.");
}
