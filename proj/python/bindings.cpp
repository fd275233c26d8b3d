#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tricover/classify.hpp"
#include "tricover/cli.hpp"
#include "tricover/cover.hpp"
#include "tricover/demos.hpp"
#include "tricover/resolution.hpp"
#include "tricover/spec_file.hpp"

namespace py = pybind11;
using namespace tricover;

namespace {

// Scalars cross the boundary as strings in the expression grammar.
Scalar scalar(const Field& f, const std::string& text) { return parse_poly(text, VarList{}, f).constant_term(); }

BasePoint base_point(const CoverData& cover, const std::map<std::string, std::string>& values) {
  Assignment a;
  for (const auto& [k, v] : values) a.emplace(k, scalar(cover.field(), v));
  return cover.base_point(a);
}

std::string p1_text(const std::optional<P1Point>& q) { return q ? q->to_string() : "indeterminate"; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact local models of triple covers";

  static py::exception<Error> error(m, "TricoverError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<CoverData>(m, "Cover")
      .def_static("from_spec", [](const std::string& text) { return parse_cover_spec(text); })
      .def_static("load", [](const std::string& path) { return load_cover(path); })
      .def_static("universal", [](const std::string& field) { return CoverData::universal(Field::parse(field)); })
      .def_static("constant",
                  [](const std::string& field, const std::string& a, const std::string& b, const std::string& c,
                     const std::string& d) {
                    auto f = Field::parse(field);
                    return CoverData::constant(scalar(f, a), scalar(f, b), scalar(f, c), scalar(f, d));
                  })
      .def_property_readonly("field", [](const CoverData& c) { return c.field().descriptor(); })
      .def_property_readonly("base_vars", [](const CoverData& c) { return c.base_vars().names(); })
      .def("spec", &print_cover_spec)
      .def("quadrics",
           [](const CoverData& c) {
             std::vector<std::string> out;
             for (const auto& q : build_quadrics(c)) out.push_back(q.to_string());
             return out;
           })
      .def("z_cubic", [](const CoverData& c) { return z_cubic(c).to_string(); })
      .def("normal_form",
           [](const CoverData& c, const std::string& expr) {
             auto nf = normal_form(parse_poly(expr, c.fiber_vars(), c.field()), c);
             return std::make_tuple(nf.p0.to_string(), nf.p1.to_string(), nf.p2.to_string());
           })
      .def("trace",
           [](const CoverData& c, const std::string& expr) {
             return trace(normal_form(parse_poly(expr, c.fiber_vars(), c.field()), c), c).to_string();
           })
      .def("minors_vanish", [](const CoverData& c) { return minors_check(c).all_zero(); })
      .def("sigma_lambda",
           [](const CoverData& c) -> std::optional<std::string> {
             auto r = sigma_cubic(c);
             if (!r.lambda) return std::nullopt;
             return r.lambda->to_string();
           })
      .def("branch_discriminant", [](const CoverData& c) { return branch_discriminant(c).to_string(); })
      .def(
          "classify",
          [](const CoverData& c, const std::map<std::string, std::string>& point) {
            return std::string(to_string(classify_fiber(c, base_point(c, point))));
          },
          py::arg("point") = std::map<std::string, std::string>{})
      .def(
          "fiber",
          [](const CoverData& c, const std::map<std::string, std::string>& point) {
            auto r = fiber_report(c, base_point(c, point));
            py::dict d;
            std::vector<std::pair<std::string, std::string>> xs;
            for (const auto& x : r.x_fiber) xs.emplace_back(x.z.to_string(), x.w.to_string());
            std::vector<std::string> zs;
            for (const auto& q : r.z_fiber) zs.push_back(q.to_string());
            d["x"] = xs;
            d["z"] = zs;
            d["multiplicities"] = r.multiplicities;
            d["fat"] = r.fat;
            d["class"] = std::string(to_string(r.cls));
            d["laws_hold"] = r.laws_hold;
            return d;
          },
          py::arg("point") = std::map<std::string, std::string>{})
      .def(
          "psi",
          [](const CoverData& c, const std::string& z, const std::string& w,
             const std::map<std::string, std::string>& point) {
            return p1_text(psi(c, base_point(c, point), {scalar(c.field(), z), scalar(c.field(), w)}));
          },
          py::arg("z"), py::arg("w"), py::arg("point") = std::map<std::string, std::string>{})
      .def(
          "rho_x",
          [](const CoverData& c, const std::string& u, const std::string& v,
             const std::map<std::string, std::string>& point) {
            auto x = rho_x(c, base_point(c, point), P1Point(scalar(c.field(), u), scalar(c.field(), v)));
            return std::make_pair(x.z.to_string(), x.w.to_string());
          },
          py::arg("u"), py::arg("v"), py::arg("point") = std::map<std::string, std::string>{})
      .def("__eq__", [](const CoverData& x, const CoverData& y) { return x == y; })
      .def("__repr__", [](const CoverData& c) { return "Cover(" + c.field().descriptor() + ")"; });

  m.def("cone_census", [](const std::string& name, std::uint64_t p) {
    auto c = cone_census(ConeExample::from_name(name), p);
    py::dict d;
    d["x_points"] = c.x_points;
    d["gamma_points"] = c.gamma_points;
    d["vertex_fiber"] = c.vertex_fiber;
    d["bijective_off_vertex"] = c.bijective_off_vertex;
    d["ok"] = c.ok;
    return d;
  });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return std::make_tuple(code, out.str(), err.str());
      },
      "Runs a CLI command in-process and returns (exit code, stdout, stderr).");
}
