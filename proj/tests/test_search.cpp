#include "doctest.h"

#include "helly/bounds.hpp"
#include "helly/search.hpp"

using namespace helly;

namespace {

SearchResult run(const char* lattice, long u, long v,
                 Algorithm algo = Algorithm::DP, int jobs = 1, long us = 0,
                 long vs = 0) {
  SearchConfig cfg;
  cfg.window = {u, v};
  cfg.algorithm = algo;
  cfg.jobs = jobs;
  cfg.u_shift = us;
  cfg.v_shift = vs;
  return max_empty_polygon(LatticeSpec::parse(lattice), cfg);
}

}  // namespace

TEST_CASE("degenerate windows report the point count without a polygon") {
  SearchResult r = run("exp:2", 0, 0);
  CHECK(r.cardinality == 1);
  CHECK_FALSE(r.best.has_value());
  r = run("exp:2", 1, 0);
  CHECK(r.cardinality == 2);
  CHECK_FALSE(r.best.has_value());
}

TEST_CASE("unit window realizes the unit cell") {
  SearchResult r = run("exp:2", 1, 1);
  CHECK(r.cardinality == 4);
  REQUIRE(r.best);
  CHECK(r.best->size() == 4);
  CHECK(r.certificate.empty);
}

TEST_CASE("both engines find five on the conclusive window") {
  SearchResult dp = run("exp:2", 4, 4, Algorithm::DP);
  SearchResult naive = run("exp:2", 4, 4, Algorithm::Naive);
  CHECK(dp.cardinality == 5);
  CHECK(naive.cardinality == 5);
  REQUIRE(dp.best);
  REQUIRE(naive.best);
  CHECK(dp.best->vertices() == naive.best->vertices());
  // window max hits the closed-form ceiling, so the window is conclusive
  CHECK(dp.cardinality == upper_bound_h(Scalar(2L)));
}

TEST_CASE("reported best stays inside the closed-form sandwich") {
  SearchResult r = run("exp:2", 4, 4);
  CHECK(r.cardinality >= lower_bound_h(Scalar(2L)));
  CHECK(r.cardinality <= upper_bound_h(Scalar(2L)));
  auto counts = edge_type_counts(*r.best);
  auto budget = edge_type_budget(Scalar(2L));
  for (int t = 0; t < 4; ++t) CHECK(counts[t] <= budget[t]);
}

TEST_CASE("cardinality is monotone in the window") {
  long prev = 0;
  for (long w = 1; w <= 4; ++w) {
    long c = run("exp:2", w, w).cardinality;
    CHECK(c >= prev);
    prev = c;
  }
}

TEST_CASE("exponent shifts do not change the outcome") {
  long base = run("exp:2", 3, 3).cardinality;
  CHECK(run("exp:2", 3, 3, Algorithm::DP, 1, 5, 2).cardinality == base);
  CHECK(run("exp:3/2", 3, 3).cardinality ==
        run("exp:3/2", 3, 3, Algorithm::DP, 1, 1, 7).cardinality);
}

TEST_CASE("worker count does not change the result") {
  SearchResult one = run("exp:3/2", 4, 4, Algorithm::DP, 1);
  SearchResult four = run("exp:3/2", 4, 4, Algorithm::DP, 4);
  CHECK(one.cardinality == four.cardinality);
  REQUIRE(one.best);
  REQUIRE(four.best);
  CHECK(one.best->vertices() == four.best->vertices());
}

TEST_CASE("naive engine refuses oversized windows") {
  SearchConfig cfg;
  cfg.window = {7, 7};  // 64 points > default cap of 49
  cfg.algorithm = Algorithm::Naive;
  CHECK_THROWS_AS(max_empty_polygon(LatticeSpec::parse("exp:2"), cfg),
                  window_too_large);
}

TEST_CASE("engines agree across lattices") {
  CHECK(cross_validate(LatticeSpec::parse("exp:2"), {3, 3}));
  CHECK(cross_validate(LatticeSpec::parse("exp:3/2"), {3, 3}));
  CHECK(cross_validate(LatticeSpec::parse("fib"), {4, 4}));
}

TEST_CASE("fibonacci grid window with duplicate values dedupes") {
  // F_0 = F_1 = 1: the 1x1 window has only one distinct point per duplicate
  SearchResult r = run("fib", 1, 1);
  CHECK(r.cardinality == 1);
}
