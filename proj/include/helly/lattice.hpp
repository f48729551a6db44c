#pragma once

#include "helly/scalar.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace helly {

struct index_out_of_range : std::runtime_error {
  explicit index_out_of_range(const std::string& what)
      : std::runtime_error(what) {}
};

// Point addressed by its exponent (or sequence index) pair.
struct LatticePoint {
  long u = 0;
  long v = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// Finite index rectangle {0..u_max} x {0..v_max}.
struct Window {
  long u_max = 0;
  long v_max = 0;
};

struct IndexRange {
  long lo = 0;
  long hi = -1;  // empty when hi < lo
  bool empty() const { return hi < lo; }
  long count() const { return empty() ? 0 : hi - lo + 1; }
};

// One coordinate axis: either powers base^n of a fixed base > 1, or an
// explicit non-decreasing value sequence (Fibonacci numbers, primes).
class Axis {
 public:
  enum class Kind { Power, Sequence };

  static std::shared_ptr<Axis> power(const Scalar& base);
  static std::shared_ptr<Axis> fibonacci();
  static std::shared_ptr<Axis> primes(unsigned long limit);

  Kind kind() const { return kind_; }
  const Scalar& base() const { return base_; }
  // -1 when the axis has no largest index
  long finite_size() const;

  Scalar value(long i) const;
  // ordering of value(i) vs value(j); cheap, no big arithmetic for powers
  Ordering value_cmp(long i, long j) const;
  // ordering of value(i) vs an arbitrary scalar
  Ordering value_cmp(long i, const Scalar& x) const;

  // all indices n >= 0 with value(n) inside the interval [lo, hi] (bounds
  // dropped to strict when the flag is set)
  IndexRange indices_in(const Scalar& lo, const Scalar& hi, bool lo_strict,
                        bool hi_strict) const;

 private:
  Kind kind_;
  Scalar base_{0L};               // Power
  std::vector<Scalar> values_;    // Sequence (Fibonacci extends on demand)
  bool extendable_ = false;
  std::string name_;

  mutable std::vector<Scalar> pow_cache_;
  struct Mutex;
  std::shared_ptr<Mutex> mu_;

  Axis();
  void extend_to(long i) const;
  Scalar power_value(long i) const;
  long lowest_index_at_least(const Scalar& x, bool strict) const;
};

class LatticeSpec {
 public:
  enum class Kind { Diagonal, Rectangular, Fibonacci, IntegerProduct };

  static LatticeSpec diagonal(const Scalar& alpha);
  static LatticeSpec rectangular(const Scalar& alpha, const Scalar& beta);
  static LatticeSpec fibonacci();
  static LatticeSpec primes(unsigned long limit);

  // compact CLI form: "exp:2", "exp:2,3", "exp:(1+1*sqrt(5))/2", "fib",
  // "primes:200"
  static LatticeSpec parse(const std::string& text);
  std::string str() const;

  Kind kind() const { return kind_; }
  const Axis& xaxis() const { return *x_; }
  const Axis& yaxis() const { return *y_; }

  std::pair<Scalar, Scalar> coordinate(const LatticePoint& p) const;
  std::vector<LatticePoint> enumerate(const Window& w) const;

 private:
  Kind kind_;
  std::shared_ptr<Axis> x_, y_;
  unsigned long prime_limit_ = 0;
  LatticeSpec(Kind k, std::shared_ptr<Axis> x, std::shared_ptr<Axis> y)
      : kind_(k), x_(std::move(x)), y_(std::move(y)) {}
};

// All n >= 0 with base^n inside the interval; exact sign tests only.
IndexRange exponent_range_in_interval(const Scalar& base, const Scalar& lo,
                                      const Scalar& hi, bool lo_strict = false,
                                      bool hi_strict = false);

}  // namespace helly
