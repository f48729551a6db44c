#include "doctest.h"

#include "helly/bounds.hpp"

#include <random>

using namespace helly;

namespace {
Scalar phi() { return Scalar::parse("(1+1*sqrt(5))/2"); }
}

TEST_CASE("ceil_log basics") {
  CHECK(ceil_log(Scalar(2L), Scalar(2L)) == 1);
  CHECK(ceil_log(Scalar(mpq_class(3, 2)), Scalar(3L)) == 3);
  CHECK(ceil_log(phi(), Scalar(1L)) == 0);
  CHECK(ceil_log(Scalar(2L), Scalar(mpq_class(1, 2))) == 0);
  CHECK(ceil_log(Scalar(2L), Scalar(1025L)) == 11);
}

TEST_CASE("floor of inverse square root via the integer inequality") {
  CHECK(floor_inv_sqrt(Scalar(mpq_class(101, 100))) == 10);
  CHECK(floor_inv_sqrt(Scalar(mpq_class(26, 25))) == 5);
  CHECK(floor_inv_sqrt(Scalar(mpq_class(3, 2))) == 1);
  CHECK(floor_inv_sqrt(Scalar(2L)) == 1);
  CHECK(floor_inv_sqrt(Scalar(3L)) == 0);
  // q-th root form: alpha = (101/100)^2 with q = 2 sees the same k = 10
  Scalar a = Scalar(mpq_class(101, 100)).pow(2);
  CHECK(floor_inv_sqrt(a, 2) == 10);
}

TEST_CASE("closed-form bounds in each regime") {
  CHECK(upper_bound_h(Scalar(2L)) == 5);
  CHECK(lower_bound_h(Scalar(2L)) == 5);
  CHECK(upper_bound_h(Scalar(3L)) == 5);
  CHECK(upper_bound_h(phi()) == 7);
  CHECK(lower_bound_h(phi()) == 7);
  CHECK(upper_bound_h(Scalar(mpq_class(17, 10))) == 7);
  CHECK(upper_bound_h(Scalar(mpq_class(3, 2))) == 12);
  CHECK(lower_bound_h(Scalar(mpq_class(3, 2))) == 5);
  // far below phi the k-term takes over: k = 10 at alpha = 101/100
  CHECK(lower_bound_h(Scalar(mpq_class(101, 100))) == 10);
}

TEST_CASE("regime boundaries are exact at 2 and at phi") {
  CHECK(upper_bound_h(Scalar(mpq_class(1999, 1000))) == 7);
  CHECK(upper_bound_h(Scalar(2L)) == 5);
  CHECK(upper_bound_h(Scalar(mpq_class(2001, 1000))) == 5);
  // 1618/1000 < phi < 1619/1000
  CHECK(upper_bound_h(Scalar(mpq_class(1619, 1000))) == 7);
  CHECK(upper_bound_h(phi()) == 7);
  CHECK(upper_bound_h(Scalar(mpq_class(1618, 1000))) > 7);
  CHECK(diagonal_bounds(Scalar(2L)).regime == Regime::AlphaGeq2);
  CHECK(diagonal_bounds(phi()).regime == Regime::GoldenToTwo);
  CHECK(diagonal_bounds(Scalar(mpq_class(3, 2))).regime ==
        Regime::BelowGolden);
}

TEST_CASE("lower bound never exceeds upper bound") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long> num(1, 3000), den(1, 1000);
  int tested = 0;
  while (tested < 1000) {
    mpq_class a(num(rng), den(rng));
    a += 1;  // alpha in (1, 4]
    if (a > 4) continue;
    BoundReport rep = diagonal_bounds(Scalar(a));
    REQUIRE(rep.lower);
    REQUIRE(rep.upper);
    CHECK(*rep.lower <= *rep.upper);
    ++tested;
  }
}

TEST_CASE("r is the least exponent with alpha^r - alpha^(r-1) >= 1") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<long> num(1, 999);
  for (int i = 0; i < 200; ++i) {
    mpq_class a(1000 + num(rng), 1000);  // alpha in (1, 2)
    Scalar alpha(a);
    long r = diagonal_bounds(alpha).r;
    REQUIRE(r >= 1);
    Scalar one(1L);
    CHECK((alpha.pow(r) - alpha.pow(r - 1)).cmp(one) != Ordering::Less);
    if (r >= 2)
      CHECK((alpha.pow(r - 1) - alpha.pow(r - 2)).cmp(one) == Ordering::Less);
  }
}

TEST_CASE("edge type budgets") {
  auto b2 = edge_type_budget(Scalar(2L));
  CHECK(b2 == std::array<long, 4>{1, 2, 2, 2});
  // alpha = 3/2: r = 3, t = ceil_log(3/2, 5/3) = 2, so III budget is 5
  auto b32 = edge_type_budget(Scalar(mpq_class(3, 2)));
  CHECK(b32 == std::array<long, 4>{3, 4, 5, 4});
  CHECK(diagonal_bounds(Scalar(mpq_class(3, 2))).t == 2);
}

TEST_CASE("rectangular bounds: rational relation decided exactly") {
  BoundReport rep = rect_bounds(Scalar(2L), Scalar(8L));
  CHECK(rep.regime == Regime::RectRational);
  CHECK(rep.p == 3);
  CHECK(rep.q == 1);
  REQUIRE(rep.upper);
  CHECK(*rep.upper == 3 * 1 * upper_bound_h(Scalar(2L).pow(3)) + 1);

  rep = rect_bounds(Scalar(4L), Scalar(8L));  // both powers of 2
  CHECK(rep.p == 3);
  CHECK(rep.q == 2);

  rep = rect_bounds(Scalar(2L), Scalar(3L));
  CHECK(rep.regime == Regime::RectIrrational);
  CHECK_FALSE(rep.upper);
  CHECK_FALSE(rep.lower);
}

TEST_CASE("rectangular bounds: surd relation found under the cap") {
  BoundReport rep = rect_bounds(Scalar(2L), Scalar::sqrt_int(2));
  CHECK(rep.regime == Regime::RectRational);
  CHECK(rep.p == 1);
  CHECK(rep.q == 2);

  // no relation within the cap and no assertion -> undecided
  CHECK_THROWS_AS(rect_bounds(Scalar::sqrt_int(2), Scalar::sqrt_int(3), 8),
                  relation_undecided);
  rep = rect_bounds(Scalar::sqrt_int(2), Scalar::sqrt_int(3), 8, true);
  CHECK(rep.regime == Regime::RectIrrational);
}

TEST_CASE("rectangular lower bound folds k, p, q") {
  // alpha = (101/100)^2, beta = alpha^(1/2): k = 10, p = 1, q = 2 -> 5
  Scalar alpha = Scalar(mpq_class(101, 100)).pow(2);
  BoundReport rep = rect_bounds(alpha, Scalar(mpq_class(101, 100)));
  CHECK(rep.p == 1);
  CHECK(rep.q == 2);
  CHECK(rep.k == 10);
  REQUIRE(rep.lower);
  CHECK(*rep.lower == 5);
}
