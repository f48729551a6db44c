#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helly/scalar.hpp"

#include <random>
#include <vector>

using namespace helly;

TEST_CASE("parse round trips through str") {
  for (const char* text : {"2", "3/2", "-7/3", "(1+1*sqrt(5))/2", "sqrt(2)",
                           "log(3)/log(2)", "pow(2,sqrt(2))"}) {
    Scalar s = Scalar::parse(text);
    Scalar again = Scalar::parse(s.str());
    if (s.is_exact()) {
      CHECK(s.cmp(again) == Ordering::Equal);
    } else {
      // certified reals: same expression, same enclosure behavior
      CHECK(s.str() == again.str());
    }
  }
}

TEST_CASE("decimal literals are exact rationals") {
  Scalar s = Scalar::parse("1.5");
  REQUIRE(s.is_rational());
  CHECK(s.rat() == mpq_class(3, 2));
  CHECK(Scalar::parse("1.01").rat() == mpq_class(101, 100));
}

TEST_CASE("surd arithmetic: phi squared equals phi plus one") {
  Scalar phi = Scalar::parse("(1+1*sqrt(5))/2");
  REQUIRE(phi.is_surd());
  Scalar lhs = phi * phi;
  Scalar rhs = phi + Scalar(1L);
  CHECK(lhs.cmp(rhs) == Ordering::Equal);
  CHECK((Scalar::sqrt_int(2) * Scalar::sqrt_int(2)).cmp(Scalar(2L)) ==
        Ordering::Equal);
}

TEST_CASE("compare is antisymmetric and transitive on random exact values") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 50);
  std::vector<Scalar> vals;
  for (int i = 0; i < 40; ++i)
    vals.push_back(Scalar(mpq_class(num(rng), den(rng))));
  for (int i = 0; i < 20; ++i)
    vals.push_back(Scalar::surd(mpq_class(num(rng), den(rng)),
                                mpq_class(num(rng), den(rng)),
                                2 + (unsigned long)(i % 5)));
  for (size_t i = 0; i < vals.size(); ++i)
    for (size_t j = 0; j < vals.size(); ++j) {
      Ordering ij = vals[i].cmp(vals[j]);
      Ordering ji = vals[j].cmp(vals[i]);
      CHECK(ordering_sign(ij) == -ordering_sign(ji));
      for (size_t k = 0; k < vals.size(); k += 7) {
        if (ij == Ordering::Less && vals[j].cmp(vals[k]) == Ordering::Less)
          CHECK(vals[i].cmp(vals[k]) == Ordering::Less);
      }
    }
}

TEST_CASE("certified real orders correctly against nearby rationals") {
  // log2(3) = 1.58496..., certified; every rational below/above lands right
  Scalar c = Scalar::log_ratio(3, 2);
  for (long d = 1; d <= 40; ++d)
    for (long n = d; n <= 2 * d; ++n) {
      mpq_class r(n, d);
      double rd = r.get_d();
      Ordering o = c.cmp(Scalar(r));
      if (rd < 1.5849) CHECK(o == Ordering::Greater);
      if (rd > 1.5850) CHECK(o == Ordering::Less);
    }
}

TEST_CASE("equality of identical certified reals exhausts precision") {
  Scalar a = Scalar::log_ratio(3, 2);
  Scalar b = Scalar::log_ratio(3, 2);
  PrecisionPolicy tight{64, 256};
  CHECK_THROWS_AS((void)a.cmp(b, tight), precision_exhausted);
}

TEST_CASE("pow is additive in the exponent on exact values") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> e(0, 9);
  Scalar bases[] = {Scalar(mpq_class(3, 2)), Scalar::parse("(1+1*sqrt(5))/2")};
  for (const Scalar& b : bases)
    for (int trial = 0; trial < 25; ++trial) {
      long m = e(rng), n = e(rng);
      CHECK(b.pow(m + n).cmp(b.pow(m) * b.pow(n)) == Ordering::Equal);
    }
}

TEST_CASE("pow with large exponent on certified base stays cheap") {
  Scalar b = Scalar::pow_real(Scalar(2L), Scalar::sqrt_int(2));
  Scalar big = b.pow(400);
  Scalar cap = Scalar(2L).pow(600);
  CHECK(big.cmp(cap) == Ordering::Less);
  CHECK(big.cmp(Scalar(2L).pow(500)) == Ordering::Greater);
}

TEST_CASE("floor on each representation") {
  CHECK(Scalar(mpq_class(7, 3)).floor() == 2);
  CHECK(Scalar(mpq_class(-3, 2)).floor() == -2);
  CHECK(Scalar::sqrt_int(2).floor() == 1);
  CHECK(Scalar::parse("(1+1*sqrt(5))/2").floor() == 1);
  CHECK(Scalar::log_ratio(3, 2).floor() == 1);
  CHECK(Scalar::log_ratio(9, 2).floor() == 3);
}

TEST_CASE("division by zero raises") {
  CHECK_THROWS_AS(Scalar(1L) / Scalar(0L), division_by_zero);
}

TEST_CASE("bad input raises parse_error") {
  CHECK_THROWS_AS(Scalar::parse("sqrt(-1)"), parse_error);
  CHECK_THROWS_AS(Scalar::parse("2//3"), parse_error);
  CHECK_THROWS_AS(Scalar::parse(""), parse_error);
}

TEST_CASE("max precision tracking moves when escalation happens") {
  reset_max_precision_used();
  // needs more than the starting 64 bits to separate
  Scalar a = Scalar::log_ratio(3, 2) * Scalar(mpz_class(1) << 100);
  Scalar b = a + Scalar(mpq_class(1, mpz_class(1) << 40));
  CHECK(a.cmp(b) == Ordering::Less);
  CHECK(max_precision_used() > 64);
}
