#include "helly/bounds.hpp"
#include "helly/constructions.hpp"
#include "helly/contfrac.hpp"
#include "helly/document.hpp"
#include "helly/search.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace helly;

namespace {

std::string mpz_str(const mpz_class& z) { return z.get_str(); }

py::dict report_dict(const BoundReport& rep) {
  py::dict d;
  d["regime"] = regime_name(rep.regime);
  d["lower"] = rep.lower ? py::object(py::int_(*rep.lower)) : py::none();
  d["upper"] = rep.upper ? py::object(py::int_(*rep.upper)) : py::none();
  if (rep.r >= 0) d["r"] = rep.r;
  if (rep.t >= 0) d["t"] = rep.t;
  if (rep.k >= 0) d["k"] = rep.k;
  if (rep.p >= 0) d["p"] = rep.p;
  if (rep.q >= 0) d["q"] = rep.q;
  return d;
}

}  // namespace

PYBIND11_MODULE(_helly, mod) {
  mod.doc() = "empty polygons and Helly numbers of exponential lattices";

  py::register_exception<precision_exhausted>(mod, "PrecisionExhausted");
  py::register_exception<relation_undecided>(mod, "RelationUndecided");
  py::register_exception<certification_failed>(mod, "CertificationFailed");
  py::register_exception<not_strictly_convex>(mod, "NotStrictlyConvex");

  py::class_<Scalar>(mod, "Scalar")
      .def(py::init([](const std::string& text) {
        return Scalar::parse(text);
      }))
      .def("__str__", &Scalar::str)
      .def("__float__", &Scalar::approx)
      .def("__repr__",
           [](const Scalar& s) { return "Scalar(\"" + s.str() + "\")"; })
      .def("cmp",
           [](const Scalar& a, const Scalar& b) {
             return ordering_sign(a.cmp(b));
           })
      .def("floor", [](const Scalar& s) { return mpz_str(s.floor()); });

  py::class_<LatticePoint>(mod, "LatticePoint")
      .def_readonly("u", &LatticePoint::u)
      .def_readonly("v", &LatticePoint::v)
      .def("__repr__", [](const LatticePoint& p) {
        return "(" + std::to_string(p.u) + "," + std::to_string(p.v) + ")";
      });

  py::class_<LatticeSpec>(mod, "LatticeSpec")
      .def_static("parse", &LatticeSpec::parse)
      .def("__str__", &LatticeSpec::str);

  py::class_<EmptinessCertificate>(mod, "EmptinessCertificate")
      .def_readonly("empty", &EmptinessCertificate::empty)
      .def_readonly("rows_swept", &EmptinessCertificate::rows_swept)
      .def_readonly("precision_bits", &EmptinessCertificate::precision_bits);

  py::class_<Polygon>(mod, "Polygon")
      .def_static(
          "from_points",
          [](const LatticeSpec& spec, std::vector<std::pair<long, long>> pts) {
            std::vector<LatticePoint> lp;
            for (auto [u, v] : pts) lp.push_back({u, v});
            return Polygon::from_points(spec, std::move(lp));
          })
      .def_property_readonly("vertices", &Polygon::vertices)
      .def("__len__", &Polygon::size)
      .def("to_json", [](const Polygon& poly) {
        return polygon_to_json(poly).dump(2);
      });

  mod.def("is_empty_polygon", &is_empty_polygon);
  mod.def("edge_type_counts", [](const Polygon& poly) {
    auto c = edge_type_counts(poly);
    return std::vector<int>(c.begin(), c.end());
  });

  mod.def("ceil_log", [](const Scalar& b, const Scalar& v) {
    return ceil_log(b, v);
  });
  mod.def("upper_bound_h", [](const Scalar& a) { return upper_bound_h(a); });
  mod.def("lower_bound_h", [](const Scalar& a) { return lower_bound_h(a); });
  mod.def("edge_type_budget", [](const Scalar& a) {
    auto b = edge_type_budget(a);
    return std::vector<long>(b.begin(), b.end());
  });
  mod.def("diagonal_bounds",
          [](const Scalar& a) { return report_dict(diagonal_bounds(a)); });
  mod.def(
      "rect_bounds",
      [](const Scalar& a, const Scalar& b) {
        return report_dict(rect_bounds(a, b));
      },
      py::arg("alpha"), py::arg("beta"));

  mod.def(
      "cf_expand",
      [](const Scalar& target, long terms) {
        CFExpansion cf = cf_expand(target, terms);
        std::vector<std::string> qs;
        for (const auto& a : cf.quotients) qs.push_back(mpz_str(a));
        return py::make_tuple(qs, cf.exact);
      },
      py::arg("target"), py::arg("max_terms") = 10);
  mod.def("convergents", [](const Scalar& target, long terms) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& c : convergents(cf_expand(target, terms)))
      out.emplace_back(mpz_str(c.p), mpz_str(c.q));
    return out;
  });
  mod.def(
      "best_one_sided",
      [](const Scalar& target, const std::string& side, unsigned long qmax) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& f : best_one_sided(
                 target, side == "upper" ? Side::Upper : Side::Lower, qmax))
          out.emplace_back(mpz_str(f.p), mpz_str(f.q));
        return out;
      },
      py::arg("target"), py::arg("side"), py::arg("q_max"));

  py::class_<ConstructionReport>(mod, "ConstructionReport")
      .def_readonly("name", &ConstructionReport::name)
      .def_readonly("parameters", &ConstructionReport::parameters)
      .def_readonly("polygon", &ConstructionReport::polygon)
      .def_readonly("certificate", &ConstructionReport::certificate)
      .def("to_json", [](const ConstructionReport& rep) {
        return construction_to_json(rep).dump(2);
      });

  mod.def("five_point", &five_point);
  mod.def("seven_point", &seven_point);
  mod.def("hyperbola", &hyperbola, py::arg("alpha"),
          py::arg("k") = std::optional<long>());
  mod.def("fibonacci_polygon", &fibonacci_polygon);
  mod.def("rational_beta_polygon", &rational_beta_polygon);
  mod.def("semiconvergent_polygon", &semiconvergent_polygon);
  mod.def("convergent_polygon", &convergent_polygon);

  py::class_<SearchResult>(mod, "SearchResult")
      .def_readonly("cardinality", &SearchResult::cardinality)
      .def_readonly("optimal", &SearchResult::optimal)
      .def_readonly("candidates_examined", &SearchResult::candidates_examined)
      .def_property_readonly(
          "best", [](const SearchResult& r) -> py::object {
            return r.best ? py::cast(*r.best) : py::none();
          });

  mod.def(
      "max_empty_polygon",
      [](const std::string& lattice, long u_max, long v_max,
         const std::string& algo, int jobs) {
        SearchConfig cfg;
        cfg.window = {u_max, v_max};
        cfg.algorithm = algo == "naive" ? Algorithm::Naive : Algorithm::DP;
        cfg.jobs = jobs;
        return max_empty_polygon(LatticeSpec::parse(lattice), cfg);
      },
      py::arg("lattice"), py::arg("u_max"), py::arg("v_max"),
      py::arg("algo") = "dp", py::arg("jobs") = 1);
  mod.def("cross_validate", [](const std::string& lattice, long u, long v) {
    return cross_validate(LatticeSpec::parse(lattice), Window{u, v});
  });
}
