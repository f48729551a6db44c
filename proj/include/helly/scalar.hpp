#pragma once

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace helly {

enum class Ordering { Less, Equal, Greater };

inline int ordering_sign(Ordering o) {
  return o == Ordering::Less ? -1 : (o == Ordering::Greater ? 1 : 0);
}

struct PrecisionPolicy {
  long start_bits = 64;
  long max_bits = 4096;
  // escalation multiplies the working precision by 2 each round
};

// Process-wide policy; the CLI overrides max_bits from --max-bits or
// HELLY_MAX_PRECISION_BITS.
PrecisionPolicy& default_precision();

// Highest precision any certified comparison actually needed so far.
long max_precision_used();
void reset_max_precision_used();

struct precision_exhausted : std::runtime_error {
  explicit precision_exhausted(const std::string& what)
      : std::runtime_error(what) {}
};

struct division_by_zero : std::runtime_error {
  division_by_zero() : std::runtime_error("division by zero") {}
};

struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

class Scalar;

namespace detail {
struct RealExpr;
Scalar make_certified(std::shared_ptr<const RealExpr> e);
std::shared_ptr<const RealExpr> to_expr(const Scalar& s);
}  // namespace detail

// Element of a computable ordered field: exact rational, quadratic surd
// a + b*sqrt(d), or a certified real given by refinable interval enclosures.
// Values are immutable after construction.
class Scalar {
 public:
  Scalar() : Scalar(0L) {}
  Scalar(long n);
  explicit Scalar(const mpq_class& q);

  static Scalar rational(const mpq_class& q) { return Scalar(q); }
  static Scalar rational(const mpz_class& num, const mpz_class& den);
  // a + b*sqrt(d); d is made square-free, b == 0 collapses to a rational
  static Scalar surd(const mpq_class& a, const mpq_class& b, unsigned long d);
  static Scalar sqrt_int(unsigned long d) { return surd(0, 1, d); }
  // log(x)/log(y), certified real
  static Scalar log_ratio(const mpq_class& x, const mpq_class& y);
  // base^exponent for base > 0, certified real
  static Scalar pow_real(const Scalar& base, const Scalar& exponent);

  static Scalar parse(std::string_view text);

  bool is_rational() const;
  bool is_surd() const;
  bool is_certified() const;
  bool is_exact() const { return !is_certified(); }

  const mpq_class& rat() const;  // requires is_rational()
  // surd parts; requires is_surd()
  const mpq_class& surd_a() const;
  const mpq_class& surd_b() const;
  unsigned long surd_d() const;

  Ordering cmp(const Scalar& other,
               const PrecisionPolicy& policy = default_precision()) const;
  int sign(const PrecisionPolicy& policy = default_precision()) const;
  bool operator==(const Scalar& o) const { return cmp(o) == Ordering::Equal; }
  bool less_than(const Scalar& o) const { return cmp(o) == Ordering::Less; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar pow(long n) const;

  // Largest integer <= value.  Exact for rationals and surds; certified
  // reals refine under the policy and may throw precision_exhausted.
  mpz_class floor(const PrecisionPolicy& policy = default_precision()) const;

  // Round-trippable grammar form ("p/q", "(a+b*sqrt(d))", "log(x)/log(y)",
  // "pow(b,e)", "sqrt(d)").
  std::string str() const;
  // Decimal preview, not part of any predicate.
  double approx() const;

 private:
  struct Surd {
    mpq_class a, b;
    unsigned long d;
  };
  enum class Kind { Rational, Quadratic, Certified };

  Kind kind_;
  mpq_class rat_;
  std::shared_ptr<const Surd> surd_;
  std::shared_ptr<const detail::RealExpr> expr_;

  explicit Scalar(std::shared_ptr<const detail::RealExpr> e);
  std::shared_ptr<const detail::RealExpr> as_expr() const;
  Ordering cmp_exact(const Scalar& other) const;

  friend struct detail::RealExpr;
  friend Scalar detail::make_certified(std::shared_ptr<const detail::RealExpr>);
  friend std::shared_ptr<const detail::RealExpr> detail::to_expr(const Scalar&);
};

}  // namespace helly
