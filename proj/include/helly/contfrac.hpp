#pragma once

#include "helly/scalar.hpp"

#include <vector>

namespace helly {

struct CFExpansion {
  std::vector<mpz_class> quotients;  // a_0, a_1, ...
  bool exact = false;  // true when the expansion terminated (rational target)
  std::string source;

  std::string str() const;  // "[a0;a1,a2,...]"
};

struct Convergent {
  long n = 0;
  mpz_class p, q;
};

struct Fraction {
  mpz_class p, q;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

enum class Side { Lower, Upper };

// Partial quotients of target > 0.  Rational targets terminate exactly;
// surds and certified reals emit up to max_terms quotients, stopping early
// if a floor cannot be certified under the policy.
CFExpansion cf_expand(const Scalar& target, long max_terms,
                      const PrecisionPolicy& policy = default_precision());

// p_n/q_n via the standard recurrence with seeds p_{-1}=1, q_{-1}=0.
std::vector<Convergent> convergents(const CFExpansion& cf);

// Rebuilds the value of an exact expansion.
mpq_class cf_value(const CFExpansion& cf);

// Best one-sided rational approximations with denominator <= q_max, sorted
// by denominator.  Generated from semi-convergents (lower: n odd, upper: n
// even excluding (n,i)=(0,0), offsets 0 <= i < a_{n+1}); rational targets
// fall back to the definitional scan and include the target itself.
std::vector<Fraction> best_one_sided(
    const Scalar& target, Side side, unsigned long q_max,
    const PrecisionPolicy& policy = default_precision());

// Independent oracle: direct scan over all denominators applying the
// definitional inequalities.
std::vector<Fraction> brute_force_best_one_sided(
    const Scalar& target, Side side, unsigned long q_max,
    const PrecisionPolicy& policy = default_precision());

}  // namespace helly
