#pragma once

#include "helly/geometry.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace helly {

struct certification_failed : std::runtime_error {
  explicit certification_failed(const std::string& what)
      : std::runtime_error(what) {}
};
struct precondition_violated : std::runtime_error {
  explicit precondition_violated(const std::string& what)
      : std::runtime_error(what) {}
};
struct search_exhausted : std::runtime_error {
  explicit search_exhausted(const std::string& what)
      : std::runtime_error(what) {}
};
struct degenerate_k : std::runtime_error {
  explicit degenerate_k(const std::string& what) : std::runtime_error(what) {}
};
struct too_small : std::runtime_error {
  explicit too_small(const std::string& what) : std::runtime_error(what) {}
};
struct rational_log_ratio : std::runtime_error {
  explicit rational_log_ratio(const std::string& what)
      : std::runtime_error(what) {}
};
struct cf_too_short : std::runtime_error {
  explicit cf_too_short(const std::string& what) : std::runtime_error(what) {}
};

// A certified construction: the polygon is always strictly convex and its
// emptiness certificate always says Empty — failures raise instead.
struct ConstructionReport {
  std::string name;
  std::vector<std::pair<std::string, long>> parameters;
  Polygon polygon;
  EmptinessCertificate certificate;
  bool convex = true;
};

// Five vertices at exponents {(0,2),(1,1),(2,0),(2,1),(1,2)} in L(alpha);
// valid for every alpha > 1.
ConstructionReport five_point(const Scalar& alpha);

// Seven vertices Q(alpha) = {(0,k),(k-2,k-1),(k-1,k-2),(k,0),(k,1),
// (k-1,k-1),(1,k)} in L(alpha) for phi <= alpha < 2, with the smallest
// k >= 3 that certifies.
ConstructionReport seven_point(const Scalar& alpha);

// Hyperbola points P(k) = {(i, k-i) : 1 <= i <= k}; k defaults to
// floor(sqrt(1/(alpha-1))).
ConstructionReport hyperbola(const Scalar& alpha,
                             std::optional<long> k = std::nullopt);

// k+1 points (F_{i+2}, F_i) for odd i in 1..2k+1 on the Fibonacci grid.
ConstructionReport fibonacci_polygon(long k);

// Hyperbola sub-family for L(alpha, alpha^{p/q}): points with q | i and
// p | (k-i), re-indexed into the rectangular lattice.  alpha must have an
// exact rational q-th root.
ConstructionReport rational_beta_polygon(const Scalar& alpha, long p, long q);

// Semi-convergent family in L(alpha, beta) for rational alpha, beta with
// log_alpha(beta) irrational: exponent pairs (p_{n-1}+i*p_n, q_{n-1}+i*q_n)
// for i = 0..a_{n+1}, with n the smallest index whose next partial quotient
// is >= m.  Yields at least m+1 vertices.
ConstructionReport semiconvergent_polygon(const Scalar& alpha,
                                          const Scalar& beta, long m);

// Convergent family in L(alpha, alpha^r) for a quadratic surd r: points
// (alpha^{p_n}, beta^{q_n}) over `count` consecutive odd n starting from the
// smallest odd n0 that certifies.
ConstructionReport convergent_polygon(const Scalar& alpha, const Scalar& r,
                                      long count);

}  // namespace helly
