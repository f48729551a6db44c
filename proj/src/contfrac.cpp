#include "helly/contfrac.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace helly {

std::string CFExpansion::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < quotients.size(); ++i) {
    if (i == 1)
      os << ";";
    else if (i > 1)
      os << ",";
    os << quotients[i];
  }
  os << (exact ? "]" : ",...]");
  return os.str();
}

CFExpansion cf_expand(const Scalar& target, long max_terms,
                      const PrecisionPolicy& policy) {
  if (max_terms < 1) throw std::invalid_argument("max_terms must be >= 1");
  if (target.sign(policy) <= 0)
    throw std::invalid_argument("continued fractions need a positive target");

  CFExpansion cf;
  cf.source = target.str();

  if (target.is_rational()) {
    // Euclidean algorithm; naturally canonical (last quotient >= 2 when the
    // expansion has more than one term)
    mpq_class x = target.rat();
    for (long k = 0; k < max_terms; ++k) {
      mpz_class a;
      mpz_fdiv_q(a.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
      cf.quotients.push_back(a);
      mpq_class frac = x - mpq_class(a);
      if (frac == 0) {
        cf.exact = true;
        return cf;
      }
      x = 1 / frac;
    }
    return cf;  // quotient budget hit first; Truncated
  }

  // surds use exact arithmetic throughout; certified reals emit a quotient
  // only while the enclosure pins down the floor of the current remainder
  Scalar x = target;
  for (long k = 0; k < max_terms; ++k) {
    mpz_class a;
    try {
      a = x.floor(policy);
    } catch (const precision_exhausted&) {
      return cf;  // certified prefix only
    }
    cf.quotients.push_back(a);
    Scalar frac = x - Scalar(mpq_class(a));
    if (frac.is_exact() && frac.sign() == 0) {
      cf.exact = true;
      return cf;
    }
    x = Scalar(1L) / frac;
  }
  return cf;
}

std::vector<Convergent> convergents(const CFExpansion& cf) {
  std::vector<Convergent> out;
  mpz_class p_prev = 1, q_prev = 0;  // p_{-1}, q_{-1}
  mpz_class p = 0, q = 1;
  for (size_t n = 0; n < cf.quotients.size(); ++n) {
    if (n == 0) {
      p = cf.quotients[0];
      q = 1;
    } else {
      mpz_class pn = cf.quotients[n] * p + p_prev;
      mpz_class qn = cf.quotients[n] * q + q_prev;
      p_prev = p;
      q_prev = q;
      p = pn;
      q = qn;
    }
    out.push_back({(long)n, p, q});
  }
  return out;
}

mpq_class cf_value(const CFExpansion& cf) {
  if (!cf.exact)
    throw std::invalid_argument("cannot rebuild a truncated expansion");
  mpq_class x = cf.quotients.back();
  for (size_t i = cf.quotients.size() - 1; i-- > 0;)
    x = mpq_class(cf.quotients[i]) + 1 / x;
  return x;
}

namespace {

Fraction reduced(mpz_class p, mpz_class q) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  return Fraction{p / g, q / g};
}

}  // namespace

std::vector<Fraction> brute_force_best_one_sided(const Scalar& target,
                                                 Side side,
                                                 unsigned long q_max,
                                                 const PrecisionPolicy& policy) {
  std::vector<Fraction> out;
  std::optional<Scalar> best_err;  // min of |q*r - p| over fractions so far
  for (unsigned long q = 1; q <= q_max; ++q) {
    Scalar qr = Scalar((long)q) * target;
    mpz_class p = qr.floor(policy);
    Scalar err = qr - Scalar(mpq_class(p));
    if (side == Side::Upper && (!err.is_exact() || err.sign() != 0)) {
      // round up instead; a certified target here is irrational, so q*r is
      // never the integer itself
      p += 1;
      err = Scalar(mpq_class(p)) - qr;
    }
    if (!best_err || err.cmp(*best_err, policy) == Ordering::Less) {
      out.push_back(reduced(p, mpz_class((unsigned long)q)));
      best_err = err;
    }
  }
  return out;
}

std::vector<Fraction> best_one_sided(const Scalar& target, Side side,
                                     unsigned long q_max,
                                     const PrecisionPolicy& policy) {
  if (target.is_rational())
    return brute_force_best_one_sided(target, side, q_max, policy);

  mpz_class qmax((unsigned long)q_max);
  // expand until the semi-convergent denominators outrun q_max
  CFExpansion cf;
  for (long terms = 32;; terms *= 2) {
    cf = cf_expand(target, terms, policy);
    std::vector<Convergent> cs = convergents(cf);
    if (cf.exact || cs.back().q > qmax) break;
    if ((long)cf.quotients.size() < terms)
      throw precision_exhausted(
          "continued fraction of " + target.str() +
          " could not be certified far enough for q_max=" +
          std::to_string(q_max));
  }
  std::vector<Convergent> cs = convergents(cf);

  auto pq = [&](long n) -> std::pair<mpz_class, mpz_class> {
    if (n < 0) return {1, 0};
    return {cs[n].p, cs[n].q};
  };

  std::vector<Fraction> out;
  // one-sided best approximations are the semi-convergents
  // (p_{n-1} + i p_n)/(q_{n-1} + i q_n), 0 <= i < a_{n+1}, with n odd for
  // lower and n even for upper; (n,i) = (0,0) would be 1/0 and is excluded
  long first = side == Side::Lower ? 1 : 0;
  for (long n = first; n + 1 < (long)cf.quotients.size(); n += 2) {
    auto [pp, qp] = pq(n - 1);
    auto [pc, qc] = pq(n);
    if (qp > qmax) break;
    for (mpz_class i = 0; i < cf.quotients[n + 1]; ++i) {
      if (n == 0 && i == 0) continue;
      mpz_class p = pp + i * pc;
      mpz_class q = qp + i * qc;
      if (q > qmax) break;
      if (q > 0) out.push_back(reduced(p, q));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Fraction& a, const Fraction& b) { return a.q < b.q; });
  return out;
}

}  // namespace helly
