#include "helly/bounds.hpp"
#include "helly/constructions.hpp"
#include "helly/contfrac.hpp"
#include "helly/document.hpp"
#include "helly/search.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using namespace helly;

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::pair<long, long> parse_pair(const std::string& text) {
  size_t comma = text.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("expected U,V, got \"" + text + "\"");
  return {std::stol(text.substr(0, comma)), std::stol(text.substr(comma + 1))};
}

int cmd_bounds(const std::string& alpha_s, const std::string& beta_s) {
  Scalar alpha = Scalar::parse(alpha_s);
  BoundReport rep = beta_s.empty()
                        ? diagonal_bounds(alpha)
                        : rect_bounds(alpha, Scalar::parse(beta_s));
  auto show = [](const std::optional<long>& b) {
    return b ? std::to_string(*b) : std::string("infinite");
  };
  std::cout << "regime " << regime_name(rep.regime) << "\n";
  std::cout << "lower " << show(rep.lower) << "\n";
  std::cout << "upper " << show(rep.upper) << "\n";
  std::cout << bound_report_to_json(rep).dump(2) << "\n";
  return 0;
}

int cmd_search(const std::string& lattice, const std::string& window,
               const std::string& algo, int jobs, double budget,
               const std::string& shift, const std::string& out) {
  LatticeSpec spec = LatticeSpec::parse(lattice);
  SearchConfig cfg;
  std::tie(cfg.window.u_max, cfg.window.v_max) = parse_pair(window);
  cfg.algorithm = algo == "naive" ? Algorithm::Naive : Algorithm::DP;
  cfg.jobs = jobs;
  cfg.time_budget_sec = budget;
  if (!shift.empty()) std::tie(cfg.u_shift, cfg.v_shift) = parse_pair(shift);
  SearchResult res = max_empty_polygon(spec, cfg);
  std::cout << "cardinality " << res.cardinality
            << (res.optimal ? "" : " (time budget hit; lower bound only)")
            << "\n";
  write_out(out, search_result_to_json(spec, cfg, res).dump(2) + "\n");
  return 0;
}

int cmd_construct(const std::string& name, const std::string& alpha_s,
                  const std::string& beta_s, const std::string& r_s, long k,
                  long m, long count, long p, long q, const std::string& out) {
  std::optional<ConstructionReport> rep;
  auto alpha = [&] { return Scalar::parse(alpha_s); };
  if (name == "five") {
    rep = five_point(alpha());
  } else if (name == "seven") {
    rep = seven_point(alpha());
  } else if (name == "hyperbola") {
    rep = hyperbola(alpha(), k > 0 ? std::optional<long>(k) : std::nullopt);
  } else if (name == "fibonacci") {
    rep = fibonacci_polygon(k);
  } else if (name == "rational-beta") {
    rep = rational_beta_polygon(alpha(), p, q);
  } else if (name == "semiconvergent") {
    rep = semiconvergent_polygon(alpha(), Scalar::parse(beta_s), m);
  } else if (name == "convergent") {
    rep = convergent_polygon(alpha(), Scalar::parse(r_s), count);
  } else {
    throw CLI::ValidationError("unknown construction \"" + name + "\"");
  }
  std::cout << rep->name << ": " << rep->polygon.size()
            << " vertices, certified empty (" << rep->certificate.rows_swept
            << " rows swept)\n";
  std::string doc = construction_to_json(*rep).dump(2) + "\n";
  if (out.empty())
    std::cout << doc;
  else
    write_out(out, doc);
  return 0;
}

int cmd_cf(const std::string& target_s, long terms, const std::string& best,
           unsigned long qmax) {
  Scalar target = Scalar::parse(target_s);
  CFExpansion cf = cf_expand(target, terms);
  std::cout << cf.str() << "\n";
  std::cout << "convergents:";
  for (const auto& c : convergents(cf)) std::cout << " " << c.p << "/" << c.q;
  std::cout << "\n";
  if (!best.empty()) {
    Side side = best == "upper" ? Side::Upper : Side::Lower;
    std::cout << "best " << best << " (q <= " << qmax << "):";
    for (const auto& f : best_one_sided(target, side, qmax))
      std::cout << " " << f.p << "/" << f.q;
    std::cout << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& in) {
  std::ifstream f(in);
  if (!f) throw std::runtime_error("cannot read " + in);
  json doc = json::parse(f);
  Polygon poly = [&] {
    try {
      return polygon_from_json(doc);
    } catch (const not_strictly_convex& e) {
      std::cerr << "not strictly convex: " << e.what() << "\n";
      std::exit(1);
    }
  }();
  EmptinessCertificate cert = is_empty_polygon(poly);
  if (!cert.empty) {
    std::cerr << "hull contains lattice point (" << cert.witness->u << ","
              << cert.witness->v << ")\n";
    return 1;
  }
  std::cout << "certified: " << poly.size()
            << " vertices, convex, empty (rows swept " << cert.rows_swept
            << ", precision bits " << cert.precision_bits << ")\n";
  return 0;
}

int cmd_render(const std::string& in, const std::string& svg, bool linear) {
  std::ifstream f(in);
  if (!f) throw std::runtime_error("cannot read " + in);
  Polygon poly = polygon_from_json(json::parse(f));
  write_out(svg, render_svg(poly, !linear));
  std::cout << "wrote " << svg << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"empty polygons and Helly numbers of exponential lattices"};
  app.require_subcommand(1);

  long max_bits = 0;
  if (const char* env = std::getenv("HELLY_MAX_PRECISION_BITS"))
    max_bits = std::atol(env);
  app.add_option("--max-bits", max_bits,
                 "certified-real precision ceiling in bits (overrides "
                 "HELLY_MAX_PRECISION_BITS)");

  std::string alpha, beta, r, lattice, window, shift, out, in, svg, name,
      target, best;
  std::string algo = "dp";
  int jobs = 1;
  long k = 0, m = 2, count = 3, p = 1, q = 1, terms = 10;
  unsigned long qmax = 100;
  double budget = 0;
  bool linear = false;

  auto* sb = app.add_subcommand("bounds", "evaluate the closed-form bounds");
  sb->add_option("--alpha", alpha)->required();
  sb->add_option("--beta", beta);

  auto* ss = app.add_subcommand("search", "maximum empty polygon in a window");
  ss->add_option("--lattice", lattice)->required();
  ss->add_option("--window", window)->required();
  ss->add_option("--algo", algo)->check(CLI::IsMember({"naive", "dp"}));
  ss->add_option("--jobs", jobs);
  ss->add_option("--time-budget", budget, "seconds; partial result if hit");
  ss->add_option("--shift", shift, "exponent relabeling U,V");
  ss->add_option("--out", out);

  auto* sc = app.add_subcommand("construct", "build a certified polygon");
  sc->add_option("name", name)->required();
  sc->add_option("--alpha", alpha);
  sc->add_option("--beta", beta);
  sc->add_option("--r", r, "surd exponent for convergent");
  sc->add_option("--k", k);
  sc->add_option("--m", m);
  sc->add_option("--count", count);
  sc->add_option("--p", p);
  sc->add_option("--q", q);
  sc->add_option("--out", out);

  auto* sf = app.add_subcommand("cf", "continued fractions and convergents");
  sf->add_option("--target", target)->required();
  sf->add_option("--terms", terms);
  sf->add_option("--best", best)->check(CLI::IsMember({"lower", "upper"}));
  sf->add_option("--qmax", qmax);

  auto* sv = app.add_subcommand("verify", "re-certify a polygon document");
  sv->add_option("--in", in)->required();

  auto* sr = app.add_subcommand("render", "draw a polygon document as SVG");
  sr->add_option("--in", in)->required();
  sr->add_option("--svg", svg)->required();
  sr->add_flag("--linear", linear, "linear axes instead of log-log");
  sr->add_flag("--log-scale", "log-log axes (the default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (max_bits > 0) helly::default_precision().max_bits = max_bits;

  try {
    if (sb->parsed()) return cmd_bounds(alpha, beta);
    if (ss->parsed())
      return cmd_search(lattice, window, algo, jobs, budget, shift, out);
    if (sc->parsed())
      return cmd_construct(name, alpha, beta, r, k, m, count, p, q, out);
    if (sf->parsed()) return cmd_cf(target, terms, best, qmax);
    if (sv->parsed()) return cmd_verify(in);
    if (sr->parsed()) return cmd_render(in, svg, linear);
  } catch (const helly::precision_exhausted& e) {
    std::cerr << "precision exhausted: " << e.what() << "\n";
    return 3;
  } catch (const helly::relation_undecided& e) {
    std::cerr << "relation undecided: " << e.what() << "\n";
    return 3;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const helly::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
