#include "helly/document.hpp"

#include <cmath>
#include <sstream>

namespace helly {

namespace {

json certificate_to_json(const EmptinessCertificate& cert) {
  json c;
  c["empty"] = cert.empty;
  if (cert.witness) c["witness"] = {cert.witness->u, cert.witness->v};
  c["rows_swept"] = cert.rows_swept;
  c["precision_bits"] = cert.precision_bits;
  return c;
}

}  // namespace

json polygon_to_json(const Polygon& poly, const EmptinessCertificate* cert) {
  json doc;
  doc["format"] = "helly-polygon/1";
  doc["lattice"] = poly.spec().str();
  json verts = json::array();
  for (const auto& v : poly.vertices()) verts.push_back({v.u, v.v});
  doc["vertices"] = verts;
  if (cert) doc["certificate"] = certificate_to_json(*cert);
  return doc;
}

Polygon polygon_from_json(const json& doc) {
  if (doc.value("format", "") != "helly-polygon/1")
    throw parse_error("not a helly-polygon/1 document");
  LatticeSpec spec = LatticeSpec::parse(doc.at("lattice").get<std::string>());
  std::vector<LatticePoint> pts;
  for (const auto& v : doc.at("vertices"))
    pts.push_back({v.at(0).get<long>(), v.at(1).get<long>()});
  return Polygon::from_points(spec, std::move(pts));
}

json construction_to_json(const ConstructionReport& report) {
  json doc = polygon_to_json(report.polygon, &report.certificate);
  json meta;
  meta["name"] = report.name;
  for (const auto& [key, value] : report.parameters) meta[key] = value;
  doc["construction"] = meta;
  return doc;
}

json search_result_to_json(const LatticeSpec& spec, const SearchConfig& cfg,
                           const SearchResult& result) {
  json doc;
  doc["format"] = "helly-search-result/1";
  doc["lattice"] = spec.str();
  doc["window"] = {cfg.window.u_max, cfg.window.v_max};
  doc["algorithm"] = cfg.algorithm == Algorithm::Naive ? "naive" : "dp";
  doc["cardinality"] = result.cardinality;
  doc["optimal"] = result.optimal;
  doc["candidates_examined"] = result.candidates_examined;
  if (result.best)
    doc["polygon"] = polygon_to_json(*result.best, &result.certificate);
  else
    doc["polygon"] = nullptr;
  // timing lives apart from the reproducible payload
  doc["metadata"] = {{"elapsed_sec", result.elapsed_sec}};
  return doc;
}

std::string regime_name(Regime regime) {
  switch (regime) {
    case Regime::AlphaGeq2: return "alpha>=2";
    case Regime::GoldenToTwo: return "[phi,2)";
    case Regime::BelowGolden: return "(1,phi)";
    case Regime::RectRational: return "rectangular-rational";
    case Regime::RectIrrational: return "rectangular-irrational";
  }
  return "?";
}

json bound_report_to_json(const BoundReport& report) {
  json doc;
  doc["format"] = "helly-bounds/1";
  doc["regime"] = regime_name(report.regime);
  doc["lower"] = report.lower ? json(*report.lower) : json(nullptr);
  doc["upper"] = report.upper ? json(*report.upper) : json(nullptr);
  json inter;
  if (report.r >= 0) inter["r"] = report.r;
  if (report.t >= 0) inter["t"] = report.t;
  if (report.k >= 0) inter["k"] = report.k;
  if (report.p >= 0) inter["p"] = report.p;
  if (report.q >= 0) inter["q"] = report.q;
  doc["intermediates"] = inter;
  return doc;
}

std::string render_svg(const Polygon& poly, bool log_scale) {
  const LatticeSpec& spec = poly.spec();
  const Axis& X = spec.xaxis();
  const Axis& Y = spec.yaxis();

  auto plot = [&](const Axis& axis, long i) -> double {
    if (log_scale) {
      if (axis.kind() == Axis::Kind::Power)
        return (double)i * std::log(axis.base().approx());
      return std::log(axis.value(i).approx());
    }
    return axis.value(i).approx();
  };

  long max_u = 0, max_v = 0;
  for (const auto& p : poly.vertices()) {
    max_u = std::max(max_u, p.u);
    max_v = std::max(max_v, p.v);
  }
  long nx = X.finite_size(), ny = Y.finite_size();
  long grid_u = nx >= 0 ? std::min(nx - 1, max_u + 1) : max_u + 1;
  long grid_v = ny >= 0 ? std::min(ny - 1, max_v + 1) : max_v + 1;

  double xmax = plot(X, grid_u), ymax = plot(Y, grid_v);
  double xmin = plot(X, 0), ymin = plot(Y, 0);
  const double W = 600, H = 600, M = 40;
  auto sx = [&](double x) {
    return M + (W - 2 * M) * (xmax > xmin ? (x - xmin) / (xmax - xmin) : 0.5);
  };
  auto sy = [&](double y) {
    return H - M -
           (H - 2 * M) * (ymax > ymin ? (y - ymin) / (ymax - ymin) : 0.5);
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
     << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  os << "  <!-- coordinates are approximate ("
     << (log_scale ? "log" : "linear") << " scale); vertices are exact in the "
     << "companion document -->\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (long u = 0; u <= grid_u; ++u)
    for (long v = 0; v <= grid_v; ++v)
      os << "  <circle cx=\"" << sx(plot(X, u)) << "\" cy=\""
         << sy(plot(Y, v)) << "\" r=\"2\" fill=\"#bbbbbb\"/>\n";
  os << "  <polygon points=\"";
  for (size_t i = 0; i < poly.size(); ++i) {
    const auto& p = poly.vertices()[i];
    os << (i ? " " : "") << sx(plot(X, p.u)) << "," << sy(plot(Y, p.v));
  }
  os << "\" fill=\"#4488cc44\" stroke=\"#225588\" stroke-width=\"1.5\"/>\n";
  for (const auto& p : poly.vertices())
    os << "  <circle cx=\"" << sx(plot(X, p.u)) << "\" cy=\""
       << sy(plot(Y, p.v)) << "\" r=\"3.5\" fill=\"#cc3333\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace helly
