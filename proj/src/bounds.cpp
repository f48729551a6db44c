#include "helly/bounds.hpp"

#include <numeric>

namespace helly {

namespace {

const Scalar& golden_ratio() {
  static const Scalar phi =
      Scalar::surd(mpq_class(1, 2), mpq_class(1, 2), 5);
  return phi;
}

void require_above_one(const Scalar& alpha, const PrecisionPolicy& policy) {
  if (alpha.cmp(Scalar(1L), policy) != Ordering::Greater)
    throw std::invalid_argument("base must exceed 1");
}

}  // namespace

long ceil_log(const Scalar& base, const Scalar& value,
              const PrecisionPolicy& policy) {
  require_above_one(base, policy);
  auto ok = [&](long n) {
    return base.pow(n).cmp(value, policy) != Ordering::Less;
  };
  if (ok(0)) return 0;
  long hi = 1;
  while (!ok(hi)) hi *= 2;
  long lo = hi / 2 + 1;
  while (lo < hi) {
    long mid = lo + (hi - lo) / 2;
    if (ok(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

long floor_inv_sqrt(const Scalar& alpha, long q, const PrecisionPolicy& policy) {
  require_above_one(alpha, policy);
  // k^2 <= 1/(alpha^{1/q} - 1)  <=>  alpha <= ((k^2+1)/k^2)^q
  auto ok = [&](long k) {
    mpz_class kk = mpz_class(k) * k;
    Scalar rhs = Scalar(mpq_class(kk + 1, kk)).pow(q);
    return alpha.cmp(rhs, policy) != Ordering::Greater;
  };
  if (!ok(1)) return 0;
  long k = 1;
  while (ok(2 * k)) k *= 2;
  long lo = k, hi = 2 * k - 1;  // largest ok value lies in [k, 2k)
  while (lo < hi) {
    long mid = lo + (hi - lo + 1) / 2;
    if (ok(mid))
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

long upper_bound_h(const Scalar& alpha, const PrecisionPolicy& policy) {
  require_above_one(alpha, policy);
  if (alpha.cmp(Scalar(2L), policy) != Ordering::Less) return 5;
  if (alpha.cmp(golden_ratio(), policy) != Ordering::Less) return 7;
  long r = ceil_log(alpha, alpha / (alpha - Scalar(1L)), policy);
  return 3 * r + 3;
}

long lower_bound_h(const Scalar& alpha, const PrecisionPolicy& policy) {
  require_above_one(alpha, policy);
  if (alpha.cmp(Scalar(2L), policy) != Ordering::Less) return 5;
  if (alpha.cmp(golden_ratio(), policy) != Ordering::Less) return 7;
  // the five-point construction holds for any alpha > 1 and can beat the
  // hyperbola count when alpha is not close to 1
  return std::max(5L, floor_inv_sqrt(alpha, 1, policy));
}

std::array<long, 4> edge_type_budget(const Scalar& alpha,
                                     const PrecisionPolicy& policy) {
  require_above_one(alpha, policy);
  long r = ceil_log(alpha, alpha / (alpha - Scalar(1L)), policy);
  long iii;
  if (alpha.cmp(Scalar(2L), policy) != Ordering::Less) {
    iii = 2;
  } else {
    long t = ceil_log(alpha, (alpha + Scalar(1L)) / alpha, policy);
    iii = 2 * t + 1;
  }
  return {r, r + 1, iii, r + 1};
}

BoundReport diagonal_bounds(const Scalar& alpha, const PrecisionPolicy& policy) {
  BoundReport rep;
  rep.lower = lower_bound_h(alpha, policy);
  rep.upper = upper_bound_h(alpha, policy);
  rep.r = ceil_log(alpha, alpha / (alpha - Scalar(1L)), policy);
  rep.k = floor_inv_sqrt(alpha, 1, policy);
  if (alpha.cmp(Scalar(2L), policy) != Ordering::Less) {
    rep.regime = Regime::AlphaGeq2;
  } else {
    rep.t = ceil_log(alpha, (alpha + Scalar(1L)) / alpha, policy);
    rep.regime = alpha.cmp(golden_ratio(), policy) != Ordering::Less
                     ? Regime::GoldenToTwo
                     : Regime::BelowGolden;
  }
  return rep;
}

namespace {

// x = sigma^a with sigma rational and not a proper power; unique for x > 1
std::pair<mpq_class, long> primitive_power(const mpq_class& x) {
  const mpz_class& n = x.get_num();
  const mpz_class& d = x.get_den();
  long max_a = (long)mpz_sizeinbase(n.get_mpz_t(), 2);
  for (long a = max_a; a >= 2; --a) {
    mpz_class rn, rd;
    if (mpz_root(rn.get_mpz_t(), n.get_mpz_t(), (unsigned long)a) &&
        mpz_root(rd.get_mpz_t(), d.get_mpz_t(), (unsigned long)a))
      return {mpq_class(rn, rd), a};
  }
  return {x, 1};
}

}  // namespace

BoundReport rect_bounds(const Scalar& alpha, const Scalar& beta,
                        long relation_cap, bool assert_irrational,
                        const PrecisionPolicy& policy) {
  require_above_one(alpha, policy);
  require_above_one(beta, policy);

  long p = -1, q = -1;
  bool decided_independent = false;

  if (alpha.is_rational() && beta.is_rational()) {
    // exact decision: beta = alpha^{p/q} iff both are powers of the same
    // primitive rational
    auto [sa, a] = primitive_power(alpha.rat());
    auto [sb, b] = primitive_power(beta.rat());
    if (sa == sb) {
      long g = std::gcd(a, b);
      p = b / g;
      q = a / g;
    } else {
      decided_independent = true;
    }
  } else if (alpha.is_exact() && beta.is_exact()) {
    for (long qq = 1; qq <= relation_cap && p < 0; ++qq) {
      Scalar bq = beta.pow(qq);
      for (long pp = 1; pp <= relation_cap; ++pp) {
        if (std::gcd(pp, qq) != 1) continue;
        if (alpha.pow(pp).cmp(bq, policy) == Ordering::Equal) {
          p = pp;
          q = qq;
          break;
        }
      }
    }
  } else if (!assert_irrational) {
    throw relation_undecided(
        "cannot search exponent relations over certified bases; pass an "
        "irrationality assertion");
  }

  BoundReport rep;
  if (p > 0) {
    rep.regime = Regime::RectRational;
    rep.p = p;
    rep.q = q;
    rep.k = floor_inv_sqrt(alpha, q, policy);
    rep.lower = rep.k / (p * q);
    rep.upper = p * q * upper_bound_h(alpha.pow(p), policy) + 1;
    return rep;
  }
  if (!decided_independent && !assert_irrational)
    throw relation_undecided("no relation alpha^p = beta^q with p, q <= " +
                             std::to_string(relation_cap) +
                             " and no irrationality assertion");
  rep.regime = Regime::RectIrrational;
  return rep;
}

}  // namespace helly
