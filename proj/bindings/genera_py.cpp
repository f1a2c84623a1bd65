#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "genera/selftest.hpp"

namespace py = pybind11;
using namespace genera;

namespace {

// Workspace handle with JSON-in / JSON-or-text-out operations.
struct PyWorkspace {
    Workspace ws;

    void load(const std::string& json_text) {
        ws.merge_json(json_text);
        ws.validate();
    }

    std::string mu_star_text(const std::string& family, const std::string& induced,
                             const std::string& slice) {
        auto [lambda, base] = parse_induced(induced, ws);
        Family f = family_from_name(family);
        GRepElement g = mu_star(lambda, base, f, ws.reg);
        if (slice == "sGL") g = extract(g, Slice::SGL, 0, ws.reg);
        else if (slice.rfind("s(", 0) == 0)
            g = extract(g, Slice::SM, std::stoi(slice.substr(2, slice.size() - 3)), ws.reg);
        return g.str(ws.reg);
    }

    std::string classify(const std::string& datum_json) {
        ParsedInput in = parse_input(datum_json, ws);
        if (in.kind != ParsedInput::Kind::Rep)
            throw GeneraError("ParseError", "classify expects a G-side datum");
        Classification c = classify_rep(*in.rep, ws.table, ws.reg);
        std::string out = rep_class_name(c.cls);
        if (!c.report.ok()) out += ": " + c.report.str();
        return out;
    }

    py::dict irreducible(const std::string& datum_json) {
        ParsedInput in = parse_input(datum_json, ws);
        Decision d = irreducible_standard(std::get<LanglandsDatum>(*in.rep), ws.table, ws.reg);
        py::dict out;
        out["irreducible"] = d.irreducible;
        out["witness"] = d.witness;
        return out;
    }

    std::string lift(const std::string& datum_json, const std::string& level) {
        ParsedInput in = parse_input(datum_json, ws);
        if (level == "ds")
            return hn_to_json(lift_ds(std::get<DiscreteSeriesDatum>(*in.rep), ws.lifts, ws.reg));
        if (level == "tempered")
            return hn_to_json(lift_tempered(std::get<TemperedDatum>(*in.rep), ws.lifts, ws.reg));
        return hn_to_json(lift_generic(std::get<LanglandsDatum>(*in.rep), ws.lifts, ws.reg));
    }

    std::string descend(const std::string& hn_json, const std::string& level) {
        ParsedInput in = parse_input(hn_json, ws);
        HNRepDatum rho = *in.hn;
        rho.level = hn_level_from_name(level);
        if (level == "ds") return rep_to_json(AnyDatum(descend_ds(rho, ws.lifts, ws.reg)), ws.reg);
        if (level == "tempered")
            return rep_to_json(AnyDatum(descend_tempered(rho, ws.lifts, ws.reg)), ws.reg);
        return rep_to_json(AnyDatum(descend_generic(rho, ws.lifts, ws.reg).datum), ws.reg);
    }

    bool gamma_check(const std::string& g_json, const std::string& hn_json) {
        ParsedInput left = parse_input(g_json, ws);
        ParsedInput right = parse_input(hn_json, ws);
        GDatum g = std::holds_alternative<DiscreteSeriesDatum>(*left.rep)
                       ? GDatum(std::get<DiscreteSeriesDatum>(*left.rep))
                       : (std::holds_alternative<TemperedDatum>(*left.rep)
                              ? GDatum(std::get<TemperedDatum>(*left.rep))
                              : GDatum(std::get<LanglandsDatum>(*left.rep)));
        return check_gamma_identity(gamma_bag(g, ws.lifts, ws.reg),
                                    gamma_bag(*right.hn, ws.reg));
    }

    std::string param_classify(const std::string& param_json) {
        ParsedInput in = parse_input(param_json, ws);
        return param_class_name(classify_parameter(*in.param, ws.lifts, ws.reg));
    }

    std::string param_to_rep(const std::string& param_json) {
        ParsedInput in = parse_input(param_json, ws);
        ParameterRep rep = parameter_to_representation(*in.param, ws.lifts, ws.reg);
        if (std::holds_alternative<TemperedDatum>(rep.rep))
            return rep_to_json(AnyDatum(std::get<TemperedDatum>(rep.rep)), ws.reg);
        return rep_to_json(AnyDatum(std::get<LanglandsDatum>(rep.rep)), ws.reg);
    }
};

} // namespace

PYBIND11_MODULE(_genera, m) {
    m.doc() = "exact segment combinatorics and Jacquet-module calculus";

    py::register_exception<GeneraError>(m, "GeneraError");

    py::class_<PyWorkspace>(m, "Workspace")
        .def(py::init<>())
        .def("load", &PyWorkspace::load, "merge a workspace JSON string")
        .def("mu_star", &PyWorkspace::mu_star_text, py::arg("family"), py::arg("induced"),
             py::arg("slice") = "all")
        .def("classify", &PyWorkspace::classify)
        .def("irreducible", &PyWorkspace::irreducible)
        .def("lift", &PyWorkspace::lift, py::arg("datum"), py::arg("level") = "ds")
        .def("descend", &PyWorkspace::descend, py::arg("datum"), py::arg("level") = "ds")
        .def("gamma_check", &PyWorkspace::gamma_check)
        .def("param_classify", &PyWorkspace::param_classify)
        .def("param_to_rep", &PyWorkspace::param_to_rep);

    m.def("standard_workspace", [] {
        PyWorkspace w;
        w.ws = standard_fixture();
        return w;
    }, "a ready-made workspace with representative atoms, bases and tables");

    m.def("selftest", [](std::uint64_t seed, bool quick) {
        std::ostringstream out;
        int failures = run_selftest(seed, quick, out);
        return py::make_tuple(failures, out.str());
    }, py::arg("seed") = 1, py::arg("quick") = true);

    m.def("linked", [](const std::string& a, const std::string& b) {
        Workspace ws;
        // linking is atom-id based; parse minimal segments of the form in docs
        ws.merge_json(R"({"atoms":[{"id":"t","gl_rank":1,"dual":"t","pole_type":"R"}]})");
        Segment sa = parse_segment_json(a, ws);
        Segment sb = parse_segment_json(b, ws);
        return genera::linked(sa, sb);
    });

    m.def("m_star_terms", [](const std::string& low, int len) {
        Segment s("t", Rational::parse(low), len);
        return m_star_segment(s).terms.size();
    });
}
