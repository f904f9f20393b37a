// Python bindings: exact numbers, rectangles, the greedy decomposition and the
// report commands. Commands return their JSON report as a string.
#include "rectadd/commands.hpp"
#include "rectadd/decompose.hpp"
#include "rectadd/geometry.hpp"
#include "rectadd/numeric.hpp"
#include "rectadd/rectfn.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

namespace py = pybind11;
using namespace rectadd;

namespace {

std::string dump(const Report& r) { return r.to_json().dump(); }

QNum to_qnum(const py::object& v) {
    if (py::isinstance<QNum>(v)) return v.cast<QNum>();
    if (py::isinstance<py::int_>(v)) return QNum(Rational(BigInt(py::str(v).cast<std::string>())));
    if (py::isinstance<py::str>(v)) return QNum::parse(v.cast<std::string>());
    throw py::type_error("expected QNum, int or literal string");
}

Rect to_rect(const py::object& v) {
    if (py::isinstance<Rect>(v)) return v.cast<Rect>();
    if (py::isinstance<py::str>(v)) return Rect::parse(v.cast<std::string>());
    throw py::type_error("expected Rect or literal string");
}

}  // namespace

PYBIND11_MODULE(_rectadd, m) {
    m.doc() = "Exact additive rectangle functions over Q(sqrt2)";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<QNum>(m, "QNum")
        .def(py::init([](const py::object& v) { return to_qnum(v); }), py::arg("value") = py::int_(0))
        .def_static("parse", &QNum::parse)
        .def_static("sqrt2", &QNum::sqrt2)
        .def("sign", &QNum::sign)
        .def("floor", [](const QNum& q) { return py::int_(py::str(q.floor().get_str())); })
        .def("ceil", [](const QNum& q) { return py::int_(py::str(q.ceil().get_str())); })
        .def("is_rational", &QNum::is_rational)
        .def("is_dyadic", &QNum::is_dyadic)
        .def("conjugate", &QNum::conjugate)
        .def("approximate", [](const QNum& q, unsigned p) { return approximate(q, p); }, py::arg("precision"))
        .def("__float__", &QNum::to_double)
        .def("__str__", &QNum::to_string)
        .def("__repr__", [](const QNum& q) { return "QNum('" + q.to_string() + "')"; })
        .def("__hash__", [](const QNum& q) { return py::hash(py::str(q.to_string())); })
        .def("__neg__", [](const QNum& q) { return -q; })
        .def("__add__", [](const QNum& a, const py::object& b) { return a + to_qnum(b); })
        .def("__radd__", [](const QNum& a, const py::object& b) { return to_qnum(b) + a; })
        .def("__sub__", [](const QNum& a, const py::object& b) { return a - to_qnum(b); })
        .def("__rsub__", [](const QNum& a, const py::object& b) { return to_qnum(b) - a; })
        .def("__mul__", [](const QNum& a, const py::object& b) { return a * to_qnum(b); })
        .def("__rmul__", [](const QNum& a, const py::object& b) { return to_qnum(b) * a; })
        .def("__truediv__", [](const QNum& a, const py::object& b) {
            const QNum d = to_qnum(b);
            if (d.is_zero()) throw py::value_error("division by zero");
            return a / d;
        })
        .def("__eq__", [](const QNum& a, const py::object& b) { return a == to_qnum(b); })
        .def("__lt__", [](const QNum& a, const py::object& b) { return a < to_qnum(b); })
        .def("__le__", [](const QNum& a, const py::object& b) { return a <= to_qnum(b); })
        .def("__gt__", [](const QNum& a, const py::object& b) { return a > to_qnum(b); })
        .def("__ge__", [](const QNum& a, const py::object& b) { return a >= to_qnum(b); });

    py::class_<Rect>(m, "Rect")
        .def(py::init([](const py::object& x1, const py::object& x2, const py::object& y1, const py::object& y2) {
            return Rect(to_qnum(x1), to_qnum(x2), to_qnum(y1), to_qnum(y2));
        }))
        .def_static("parse", &Rect::parse)
        .def_property_readonly("x1", &Rect::x1)
        .def_property_readonly("x2", &Rect::x2)
        .def_property_readonly("y1", &Rect::y1)
        .def_property_readonly("y2", &Rect::y2)
        .def("width", &Rect::width)
        .def("height", &Rect::height)
        .def("area", [](const Rect& r) { return area(r); })
        .def("diameter_sq", [](const Rect& r) { return diameter_sq(r); })
        .def("__eq__", [](const Rect& a, const Rect& b) { return a == b; })
        .def("__str__", &Rect::to_string)
        .def("__repr__", [](const Rect& r) { return "Rect('" + r.to_string() + "')"; });

    m.def(
        "evaluate",
        [](const std::string& function, const py::object& rect) { return RectFunction::parse(function)(to_rect(rect)); },
        py::arg("function"), py::arg("rect"), "Corner difference F(rect) for a named function.");

    m.def(
        "decompose",
        [](const py::object& rect, std::size_t max_steps) {
            const Decomposition d = decompose(to_rect(rect), max_steps);
            py::list counts, sides, steps;
            for (const auto& c : d.counts()) counts.append(py::int_(py::str(c.get_str())));
            for (const auto& s : d.sides) sides.append(s);
            for (const auto& s : d.steps) steps.append(py::make_tuple(s.side, py::int_(py::str(s.count.get_str()))));
            py::dict out;
            out["terminated"] = d.terminated;
            out["counts"] = counts;
            out["sides"] = sides;
            out["steps"] = steps;
            out["remainder"] = d.remainder ? py::cast(*d.remainder) : py::none();
            out["square_count"] = py::int_(py::str(d.square_count().get_str()));
            return out;
        },
        py::arg("rect"), py::arg("max_steps") = 20);

    m.def(
        "counterexample",
        [](unsigned min_order, unsigned max_order, std::size_t samples, std::uint64_t seed, const std::string& function) {
            CounterexampleOptions o;
            o.min_order = min_order;
            o.max_order = max_order;
            o.samples = samples;
            o.seed = seed;
            o.function = RectFunction::parse(function);
            return dump(cmd_counterexample(o));
        },
        py::arg("min_order") = 0, py::arg("max_order") = 12, py::arg("samples") = 1000, py::arg("seed") = 7,
        py::arg("function") = "counterexample");

    m.def(
        "decompose_report",
        [](const py::object& rect, std::size_t max_steps, std::optional<std::string> svg, const std::string& function) {
            DecomposeOptions o;
            o.rect = to_rect(rect);
            o.max_steps = max_steps;
            o.svg_path = std::move(svg);
            o.function = RectFunction::parse(function);
            return dump(cmd_decompose(o));
        },
        py::arg("rect") = "[0,8]x[0,5]", py::arg("max_steps") = 20, py::arg("svg") = py::none(),
        py::arg("function") = "counterexample");

    m.def(
        "dyadic_approx",
        [](const py::object& rect, const std::string& function, unsigned max_order) {
            DyadicApproxOptions o;
            o.rect = to_rect(rect);
            o.function = RectFunction::parse(function);
            o.max_order = max_order;
            return dump(cmd_dyadic_approx(o));
        },
        py::arg("rect") = "[0,1]x[1,0+1*sqrt2]", py::arg("function") = "product", py::arg("max_order") = 10);

    m.def(
        "probe",
        [](const std::string& function, const py::object& x, const py::object& y, const std::string& alpha,
           unsigned depth, unsigned offsets, const py::object& reference) {
            ProbeOptions o;
            o.function = RectFunction::parse(function);
            o.x = to_qnum(x);
            o.y = to_qnum(y);
            o.alpha = Rational::parse(alpha);
            o.depth = depth;
            o.offsets = offsets;
            if (!reference.is_none()) o.reference = to_rect(reference);
            return dump(cmd_probe(o));
        },
        py::arg("function") = "product", py::arg("x") = "1/2", py::arg("y") = "1/2", py::arg("alpha") = "1",
        py::arg("depth") = 6, py::arg("offsets") = 4, py::arg("reference") = py::none());

    m.def(
        "proptest",
        [](const std::string& suite, std::size_t cases, std::uint64_t seed) {
            return dump(cmd_proptest({suite, cases, seed}));
        },
        py::arg("suite") = "field", py::arg("cases") = 500, py::arg("seed") = 1);
}
