#include "doctest.h"

#include "helly/contfrac.hpp"

#include <random>

using namespace helly;

namespace {

Scalar phi() { return Scalar::parse("(1+1*sqrt(5))/2"); }
Scalar log2_3() { return Scalar::log_ratio(3, 2); }

}  // namespace

TEST_CASE("rational expansion is the Euclidean algorithm, canonical") {
  CFExpansion cf = cf_expand(Scalar(mpq_class(7, 3)), 10);
  REQUIRE(cf.exact);
  CHECK(cf.quotients == std::vector<mpz_class>{2, 3});
  CHECK(cf.str() == "[2;3]");

  std::mt19937 rng(5);
  std::uniform_int_distribution<long> num(1, 5000), den(1, 500);
  for (int i = 0; i < 200; ++i) {
    mpq_class r(num(rng), den(rng));
    r.canonicalize();
    CFExpansion e = cf_expand(Scalar(r), 64);
    REQUIRE(e.exact);
    if (e.quotients.size() >= 2) CHECK(e.quotients.back() >= 2);
    for (size_t j = 1; j < e.quotients.size(); ++j)
      CHECK(e.quotients[j] >= 1);
    CHECK(cf_value(e) == r);
  }
}

TEST_CASE("golden ratio expansion is all ones") {
  CFExpansion cf = cf_expand(phi(), 8);
  REQUIRE(cf.quotients.size() == 8);
  for (const mpz_class& a : cf.quotients) CHECK(a == 1);
  auto cs = convergents(cf);
  std::vector<std::pair<long, long>> expect = {
      {1, 1}, {2, 1}, {3, 2}, {5, 3}, {8, 5}, {13, 8}, {21, 13}, {34, 21}};
  REQUIRE(cs.size() == expect.size());
  for (size_t i = 0; i < cs.size(); ++i) {
    CHECK(cs[i].p == expect[i].first);
    CHECK(cs[i].q == expect[i].second);
  }
}

TEST_CASE("certified expansion of log2(3)") {
  CFExpansion cf = cf_expand(log2_3(), 10);
  CHECK(cf.quotients ==
        std::vector<mpz_class>{1, 1, 1, 2, 2, 3, 1, 5, 2, 23});
  CHECK_FALSE(cf.exact);
  auto cs = convergents(cf);
  REQUIRE(cs.size() == 10);
  CHECK(cs[4].p == 19);
  CHECK(cs[4].q == 12);
  CHECK(cs[5].p == 65);
  CHECK(cs[5].q == 41);
  CHECK(cs[6].p == 84);
  CHECK(cs[6].q == 53);
  CHECK(cs[7].p == 485);
  CHECK(cs[7].q == 306);
}

TEST_CASE("convergents satisfy the recurrence, are reduced, alternate") {
  Scalar targets[] = {phi(), Scalar::sqrt_int(2), log2_3()};
  for (const Scalar& t : targets) {
    CFExpansion cf = cf_expand(t, 10);
    auto cs = convergents(cf);
    REQUIRE(cs.size() >= 3);
    for (size_t n = 2; n < cs.size(); ++n) {
      CHECK(cs[n].p == cf.quotients[n] * cs[n - 1].p + cs[n - 2].p);
      CHECK(cs[n].q == cf.quotients[n] * cs[n - 1].q + cs[n - 2].q);
    }
    for (const Convergent& c : cs) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), c.p.get_mpz_t(), c.q.get_mpz_t());
      CHECK(g == 1);
      Ordering o = Scalar::rational(c.p, c.q).cmp(t);
      CHECK(o == (c.n % 2 == 0 ? Ordering::Less : Ordering::Greater));
    }
  }
}

TEST_CASE("one-sided best approximations match the definitional scan") {
  Scalar targets[] = {phi(), Scalar::sqrt_int(2), log2_3()};
  for (const Scalar& t : targets)
    for (Side side : {Side::Lower, Side::Upper}) {
      auto fast = best_one_sided(t, side, 120);
      auto slow = brute_force_best_one_sided(t, side, 120);
      CHECK(fast == slow);
      REQUIRE(!fast.empty());
      for (size_t i = 1; i < fast.size(); ++i)
        CHECK(fast[i].q > fast[i - 1].q);
    }
}

TEST_CASE("rational target includes itself on the matching side") {
  Scalar t(mpq_class(7, 3));
  auto lower = best_one_sided(t, Side::Lower, 10);
  REQUIRE(!lower.empty());
  CHECK(lower.back() == Fraction{7, 3});
  auto upper = best_one_sided(t, Side::Upper, 10);
  CHECK(upper.back() == Fraction{7, 3});
  CHECK(lower == brute_force_best_one_sided(t, Side::Lower, 10));
}

TEST_CASE("sqrt(2) semiconvergent lists start as expected") {
  // lower: 1/1, 4/3, 7/5, ...; upper: 2/1, 3/2, ...
  auto lower = best_one_sided(Scalar::sqrt_int(2), Side::Lower, 5);
  REQUIRE(lower.size() >= 3);
  CHECK(lower[0] == Fraction{1, 1});
  CHECK(lower[1] == Fraction{4, 3});
  CHECK(lower[2] == Fraction{7, 5});
  auto upper = best_one_sided(Scalar::sqrt_int(2), Side::Upper, 5);
  REQUIRE(upper.size() >= 2);
  CHECK(upper[0] == Fraction{2, 1});
  CHECK(upper[1] == Fraction{3, 2});
}
