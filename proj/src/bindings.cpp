#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qmap/anquiver.hpp"
#include "qmap/macdonald.hpp"
#include "qmap/verify.hpp"
#include "qmap/vertex.hpp"

namespace py = pybind11;
using namespace qmap;
using Json = nlohmann::ordered_json;

namespace {

template <ExactField F>
TruncatedSeries<F> route_series(const Scalars<F>& s, const std::string& route, const VertexRequest& req) {
  if (route == "product") return zfun_product(s, req);
  if (route == "sum") return zfun_sum(s, req);
  if (route == "raw") return zfun_raw_sum(s, req);
  if (route == "macdonald") return matrix_element(s, req.lambda, req.cap);
  throw ConfigError("unknown route '" + route + "'");
}

Scalars<Rational> point(const std::string& hbar, const std::string& q, int max_power) {
  const auto h = Rational::parse(hbar), qq = Rational::parse(q);
  check_point(h, qq, max_power);
  return {h, qq};
}

int max_hook(const Partition& la) { return la.empty() ? 0 : la.part(1) + la.length() - 1; }

std::string zfun(const std::vector<int>& parts, int degree, const std::string& route, const std::string& hbar,
                 const std::string& q) {
  const Partition la(parts);
  return to_json(route_series(point(hbar, q, guard_power(degree, max_hook(la))), route, {la, degree})).dump();
}

std::string zfun_symbolic(const std::vector<int>& parts, int degree, const std::string& route) {
  return to_json(route_series(symbolic_scalars(), route, {Partition(parts), degree})).dump();
}

std::string verify(const std::string& suite, const std::string& options) {
  const auto j = nlohmann::json::parse(options);
  VerifyOptions opt;
  opt.degree = j.value("degree", opt.degree);
  opt.raw_degree = j.value("raw_degree", opt.raw_degree);
  opt.max_size = j.value("max_size", opt.max_size);
  opt.max_entry = j.value("max_entry", opt.max_entry);
  opt.order = j.value("order", opt.order);
  opt.max_boxes = j.value("max_boxes", opt.max_boxes);
  opt.extra_degree = j.value("extra_degree", opt.extra_degree);
  if (j.contains("extra"))
    for (const auto& p : j["extra"]) opt.extra.emplace_back(p.get<std::vector<int>>());
  if (j.contains("points")) {
    for (const auto& p : j["points"])
      opt.points.emplace_back(Rational::parse(p.at(0).get<std::string>()), Rational::parse(p.at(1).get<std::string>()));
  } else {
    opt.points = default_points();
  }
  Json out = Json::array();
  for (const auto& r : run_suite(suite, opt)) out.push_back(r.to_json(false));
  return out.dump();
}

std::string anvertex(const std::string& fixed_point, const std::vector<int>& order, int degree,
                     const std::string& hbar, const std::string& q, bool oracle) {
  const auto p = FixedPoint::from_json(nlohmann::json::parse(fixed_point));
  require_valid(p);
  const auto ch = Chamber::from_order(order, p.units.size());
  const auto s = point(hbar, q, guard_power(degree, 2 * p.total_boxes()));
  Json out{{"factorized", to_json(vertex_limit_factorized(s, p, ch, degree))}};
  if (oracle) out["oracle"] = to_json(chamber_limit_oracle(s, p, ch, degree));
  return out.dump();
}

std::vector<std::string> mirror(const std::string& fixed_point) {
  const auto p = FixedPoint::from_json(nlohmann::json::parse(fixed_point));
  require_valid(p);
  return character_strings(mirror_tangent_character(p));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact vertex functions of zero-dimensional A-type quiver varieties";
  py::register_exception<Error>(m, "QmapError", PyExc_ValueError);

  m.def("zfun", &zfun, py::arg("parts"), py::arg("degree"), py::arg("route") = "product",
        py::arg("hbar") = "2/3", py::arg("q") = "1/5");
  m.def("zfun_symbolic", &zfun_symbolic, py::arg("parts"), py::arg("degree"), py::arg("route") = "product");
  m.def("verify", &verify, py::arg("suite"), py::arg("options") = "{}");
  m.def("anvertex", &anvertex, py::arg("fixed_point"), py::arg("order"), py::arg("degree") = 2,
        py::arg("hbar") = "2/3", py::arg("q") = "1/5", py::arg("oracle") = false);
  m.def("mirror", &mirror, py::arg("fixed_point"));
  m.def("suite_names", &suite_names);
  m.def("default_points", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [h, q] : default_points()) out.emplace_back(h.to_string(), q.to_string());
    return out;
  });
}
