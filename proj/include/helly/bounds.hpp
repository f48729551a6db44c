#pragma once

#include "helly/scalar.hpp"

#include <array>
#include <optional>

namespace helly {

struct relation_undecided : std::runtime_error {
  explicit relation_undecided(const std::string& what)
      : std::runtime_error(what) {}
};

enum class Regime { AlphaGeq2, GoldenToTwo, BelowGolden, RectRational,
                    RectIrrational };

struct BoundReport {
  std::optional<long> lower;  // nullopt = infinite
  std::optional<long> upper;
  Regime regime;
  // intermediates, -1 when not applicable
  long r = -1;  // least n with alpha^n >= alpha/(alpha-1)
  long t = -1;  // least n with alpha^n >= (alpha+1)/alpha
  long k = -1;  // floor(sqrt(1/(alpha-1))), lower-bound construction size
  long p = -1, q = -1;  // beta = alpha^{p/q} in the rectangular case
};

// Least integer n >= 0 with base^n >= value; exact sign tests only.
long ceil_log(const Scalar& base, const Scalar& value,
              const PrecisionPolicy& policy = default_precision());

// floor(sqrt(1/(alpha^{1/q} - 1))), evaluated through the equivalent integer
// inequality alpha <= ((k^2+1)/k^2)^q; returns 0 when even k = 1 fails.
long floor_inv_sqrt(const Scalar& alpha, long q = 1,
                    const PrecisionPolicy& policy = default_precision());

// Largest vertex count of an empty polygon in L(alpha): 5 for alpha >= 2,
// 7 on [phi, 2), and 3*ceil_log(alpha, alpha/(alpha-1)) + 3 below phi.
long upper_bound_h(const Scalar& alpha,
                   const PrecisionPolicy& policy = default_precision());

// Guaranteed construction size: 5 for alpha >= 2, 7 on [phi, 2), and
// max(5, floor(sqrt(1/(alpha-1)))) below phi.
long lower_bound_h(const Scalar& alpha,
                   const PrecisionPolicy& policy = default_precision());

// Per-edge-type maxima {I, II, III, IV} for empty polygons in L(alpha):
// I <= r, II <= r+1, IV <= r+1, III <= 2t+1 (alpha < 2) or 2 (alpha >= 2).
std::array<long, 4> edge_type_budget(
    const Scalar& alpha, const PrecisionPolicy& policy = default_precision());

// Bound report for the diagonal lattice L(alpha).
BoundReport diagonal_bounds(const Scalar& alpha,
                            const PrecisionPolicy& policy = default_precision());

// Bound report for L(alpha, beta): finite bounds when beta = alpha^{p/q} with
// an exactly established coprime relation, infinite when the logs are known
// independent.  Rational pairs are decided exactly via primitive-power
// decomposition; surd pairs search p, q <= relation_cap and otherwise need
// assert_irrational, else relation_undecided is thrown.
BoundReport rect_bounds(const Scalar& alpha, const Scalar& beta,
                        long relation_cap = 64, bool assert_irrational = false,
                        const PrecisionPolicy& policy = default_precision());

}  // namespace helly
