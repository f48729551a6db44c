// Acceptance gate: one pass/fail line per criterion.  Criterion 10 (prime
// grid) is exploratory and never fails the run.
#include "helly/bounds.hpp"
#include "helly/constructions.hpp"
#include "helly/contfrac.hpp"
#include "helly/search.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace helly;

namespace {

// every polygon certified during the run, checked again under criterion 8
struct Certified {
  Polygon polygon;
  Scalar alpha;  // diagonal base when applicable
  bool diagonal;
};
std::vector<Certified> g_certified;

Scalar phi() { return Scalar::parse("(1+1*sqrt(5))/2"); }

SearchResult search(const char* lattice, long u, long v,
                    Algorithm algo = Algorithm::DP, int jobs = 4) {
  SearchConfig cfg;
  cfg.window = {u, v};
  cfg.algorithm = algo;
  cfg.jobs = jobs;
  return max_empty_polygon(LatticeSpec::parse(lattice), cfg);
}

void record(const Polygon& poly, const Scalar& alpha, bool diagonal) {
  g_certified.push_back({poly, alpha, diagonal});
}

bool criterion1() {
  SearchResult dp = search("exp:2", 4, 4, Algorithm::DP, 1);
  SearchResult naive = search("exp:2", 4, 4, Algorithm::Naive, 1);
  if (dp.cardinality != 5 || naive.cardinality != 5) return false;
  record(*dp.best, Scalar(2L), true);
  return true;
}

bool criterion2() {
  SearchResult r = search("exp:(1+1*sqrt(5))/2", 9, 9);
  if (r.cardinality != 7) return false;
  record(*r.best, phi(), true);
  return true;
}

bool criterion3() {
  SearchResult r = search("exp:3/2", 8, 8);
  if (r.cardinality < 5 || r.cardinality > 12) return false;
  record(*r.best, Scalar(mpq_class(3, 2)), true);
  return true;
}

bool criterion4() {
  for (const char* a : {"2", "3", "3/2"}) {
    Scalar alpha = Scalar::parse(a);
    record(five_point(alpha).polygon, alpha, true);
  }
  for (const char* a : {"(1+1*sqrt(5))/2", "17/10"}) {
    Scalar alpha = Scalar::parse(a);
    ConstructionReport rep = seven_point(alpha);
    if (rep.polygon.size() != 7) return false;
    record(rep.polygon, alpha, true);
  }
  {
    ConstructionReport rep = hyperbola(Scalar(mpq_class(101, 100)));
    if (rep.polygon.size() != 10) return false;
    record(rep.polygon, Scalar(mpq_class(101, 100)), true);
    rep = hyperbola(Scalar(mpq_class(26, 25)));
    if (rep.polygon.size() != 5) return false;
    record(rep.polygon, Scalar(mpq_class(26, 25)), true);
  }
  for (long k = 2; k <= 10; ++k) {
    ConstructionReport rep = fibonacci_polygon(k);
    if (rep.polygon.size() != (size_t)(k + 1)) return false;
    record(rep.polygon, Scalar(0L), false);
  }
  {
    Scalar alpha = Scalar(mpq_class(101, 100)).pow(2);
    ConstructionReport rep = rational_beta_polygon(alpha, 1, 2);
    if (rep.polygon.size() < 3) return false;
    record(rep.polygon, alpha, false);
  }
  return true;
}

bool criterion5() {
  ConstructionReport rep = semiconvergent_polygon(Scalar(2L), Scalar(3L), 5);
  if (rep.polygon.size() != 6) return false;
  long max_u = 0, max_v = 0;
  for (const LatticePoint& p : rep.polygon.vertices()) {
    max_u = std::max(max_u, p.u);
    max_v = std::max(max_v, p.v);
  }
  if (max_u != 485 || max_v != 306) return false;
  record(rep.polygon, Scalar(0L), false);

  ConstructionReport conv = convergent_polygon(Scalar(2L), Scalar::sqrt_int(2), 3);
  if (conv.polygon.size() != 3) return false;
  record(conv.polygon, Scalar(0L), false);
  return true;
}

bool criterion6() {
  CFExpansion cf = cf_expand(Scalar::log_ratio(3, 2), 10);
  if (cf.quotients != std::vector<mpz_class>{1, 1, 1, 2, 2, 3, 1, 5, 2, 23})
    return false;
  auto cs = convergents(cf_expand(phi(), 8));
  std::vector<std::pair<long, long>> expect = {
      {1, 1}, {2, 1}, {3, 2}, {5, 3}, {8, 5}, {13, 8}, {21, 13}, {34, 21}};
  if (cs.size() != expect.size()) return false;
  for (size_t i = 0; i < cs.size(); ++i)
    if (cs[i].p != expect[i].first || cs[i].q != expect[i].second)
      return false;
  return true;
}

bool criterion7() {
  Scalar targets[] = {phi(), Scalar::sqrt_int(2), Scalar::log_ratio(3, 2)};
  for (const Scalar& t : targets)
    for (Side side : {Side::Lower, Side::Upper})
      if (best_one_sided(t, side, 500) !=
          brute_force_best_one_sided(t, side, 500))
        return false;
  return true;
}

bool criterion8() {
  if (g_certified.empty()) return false;
  for (const Certified& c : g_certified) {
    if (!is_empty_polygon(c.polygon).empty) return false;
    if (!c.diagonal) continue;
    auto counts = edge_type_counts(c.polygon);
    auto budget = edge_type_budget(c.alpha);
    for (int t = 0; t < 4; ++t)
      if (counts[t] > budget[t]) return false;
    if ((long)c.polygon.size() > upper_bound_h(c.alpha)) return false;
  }
  return true;
}

bool criterion9() {
  for (const char* lattice : {"exp:2", "exp:3/2", "exp:(1+1*sqrt(5))/2", "fib"})
    for (long w = 3; w <= 5; ++w)
      if (!cross_validate(LatticeSpec::parse(lattice), {w, w})) return false;
  return true;
}

bool criterion10() {
  SearchResult r = search("primes:200", 45, 45, Algorithm::DP, 8);
  std::printf("  prime grid (46 primes below 200): best %ld vertices\n",
              r.cardinality);
  return r.cardinality >= 8;
}

}  // namespace

int main() {
  struct Item {
    const char* label;
    std::function<bool()> fn;
    bool blocking;
  };
  std::vector<Item> items = {
      {"1 search exp:2 window 4,4 = 5 (both engines)", criterion1, true},
      {"2 search exp:phi window 9,9 = 7", criterion2, true},
      {"3 search exp:3/2 window 8,8 in [5,12]", criterion3, true},
      {"4 construction certification suite", criterion4, true},
      {"5 semiconvergent/convergent families certify", criterion5, true},
      {"6 continued-fraction reproductions", criterion6, true},
      {"7 one-sided approximations vs oracle, q_max 500", criterion7, true},
      {"8 edge budgets on every certified polygon", criterion8, true},
      {"9 engine cross-validation up to 5x5", criterion9, true},
      {"10 prime grid >= 8 vertices (optional)", criterion10, false},
  };
  int failures = 0;
  for (const Item& it : items) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string err;
    try {
      ok = it.fn();
    } catch (const std::exception& e) {
      err = e.what();
    }
    double sec = std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    std::printf("criterion %-55s %s (%.1fs)%s\n", it.label,
                ok ? "PASS" : (it.blocking ? "FAIL" : "FAIL [non-blocking]"),
                sec, err.empty() ? "" : (" — " + err).c_str());
    if (!ok && it.blocking) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
