#include "helly/scalar.hpp"

#include <mpfr.h>

#include <atomic>
#include <cctype>
#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

namespace helly {

PrecisionPolicy& default_precision() {
  static PrecisionPolicy policy;
  return policy;
}

namespace {
std::atomic<long> g_max_bits_used{0};
void note_bits(long bits) {
  long cur = g_max_bits_used.load();
  while (bits > cur && !g_max_bits_used.compare_exchange_weak(cur, bits)) {
  }
}
}  // namespace

long max_precision_used() { return g_max_bits_used.load(); }
void reset_max_precision_used() { g_max_bits_used.store(0); }

namespace detail {

// Closed interval with directed-rounded mpfr endpoints.
class Ival {
 public:
  explicit Ival(long prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
  }
  Ival(const Ival&) = delete;
  Ival& operator=(const Ival&) = delete;
  Ival(Ival&& o) noexcept {
    mpfr_init2(lo_, mpfr_get_prec(o.lo_));
    mpfr_init2(hi_, mpfr_get_prec(o.hi_));
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }
  Ival& operator=(Ival&& o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
  }
  ~Ival() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  mpfr_ptr lo() { return lo_; }
  mpfr_ptr hi() { return hi_; }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

  void set_whole() {
    mpfr_set_inf(lo_, -1);
    mpfr_set_inf(hi_, 1);
  }
  bool contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
  }
  bool is_point() const { return mpfr_equal_p(lo_, hi_); }

 private:
  mpfr_t lo_, hi_;
};

namespace {

Ival iv_from_q(const mpq_class& q, long prec) {
  Ival r(prec);
  mpfr_set_q(r.lo(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi(), q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Ival iv_neg(const Ival& a, long prec) {
  Ival r(prec);
  mpfr_neg(r.lo(), a.hi(), MPFR_RNDD);
  mpfr_neg(r.hi(), a.lo(), MPFR_RNDU);
  return r;
}

Ival iv_add(const Ival& a, const Ival& b, long prec) {
  Ival r(prec);
  mpfr_add(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_add(r.hi(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Ival iv_sub(const Ival& a, const Ival& b, long prec) {
  Ival r(prec);
  mpfr_sub(r.lo(), a.lo(), b.hi(), MPFR_RNDD);
  mpfr_sub(r.hi(), a.hi(), b.lo(), MPFR_RNDU);
  return r;
}

Ival iv_mul(const Ival& a, const Ival& b, long prec) {
  Ival r(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  // lo = min of the four products rounded down
  mpfr_mul(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_mul(t, a.lo(), b.hi(), MPFR_RNDD);
  mpfr_min(r.lo(), r.lo(), t, MPFR_RNDD);
  mpfr_mul(t, a.hi(), b.lo(), MPFR_RNDD);
  mpfr_min(r.lo(), r.lo(), t, MPFR_RNDD);
  mpfr_mul(t, a.hi(), b.hi(), MPFR_RNDD);
  mpfr_min(r.lo(), r.lo(), t, MPFR_RNDD);
  // hi = max of the four products rounded up
  mpfr_mul(r.hi(), a.lo(), b.lo(), MPFR_RNDU);
  mpfr_mul(t, a.lo(), b.hi(), MPFR_RNDU);
  mpfr_max(r.hi(), r.hi(), t, MPFR_RNDU);
  mpfr_mul(t, a.hi(), b.lo(), MPFR_RNDU);
  mpfr_max(r.hi(), r.hi(), t, MPFR_RNDU);
  mpfr_mul(t, a.hi(), b.hi(), MPFR_RNDU);
  mpfr_max(r.hi(), r.hi(), t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Ival iv_recip(const Ival& a, long prec) {
  Ival r(prec);
  if (a.contains_zero()) {
    r.set_whole();
    return r;
  }
  mpfr_ui_div(r.lo(), 1, a.hi(), MPFR_RNDD);
  mpfr_ui_div(r.hi(), 1, a.lo(), MPFR_RNDU);
  return r;
}

Ival iv_div(const Ival& a, const Ival& b, long prec) {
  return iv_mul(a, iv_recip(b, prec), prec);
}

Ival iv_sqrt(const Ival& a, long prec) {
  Ival r(prec);
  if (mpfr_sgn(a.hi()) < 0) {
    r.set_whole();  // out of domain; caller escalates and eventually fails
    return r;
  }
  if (mpfr_sgn(a.lo()) < 0) {
    mpfr_set_zero(r.lo(), 1);
  } else {
    mpfr_sqrt(r.lo(), a.lo(), MPFR_RNDD);
  }
  mpfr_sqrt(r.hi(), a.hi(), MPFR_RNDU);
  return r;
}

Ival iv_log(const Ival& a, long prec) {
  Ival r(prec);
  if (mpfr_sgn(a.lo()) <= 0) {
    r.set_whole();
    return r;
  }
  mpfr_log(r.lo(), a.lo(), MPFR_RNDD);
  mpfr_log(r.hi(), a.hi(), MPFR_RNDU);
  return r;
}

Ival iv_exp(const Ival& a, long prec) {
  Ival r(prec);
  mpfr_exp(r.lo(), a.lo(), MPFR_RNDD);
  mpfr_exp(r.hi(), a.hi(), MPFR_RNDU);
  return r;
}

Ival iv_pow_uint(const Ival& a, unsigned long n, long prec) {
  // repeated squaring keeps enclosures valid for mixed-sign intervals
  Ival acc = iv_from_q(mpq_class(1), prec);
  Ival base(prec);
  mpfr_set(base.lo(), a.lo(), MPFR_RNDD);
  mpfr_set(base.hi(), a.hi(), MPFR_RNDU);
  while (n > 0) {
    if (n & 1) acc = iv_mul(acc, base, prec);
    n >>= 1;
    if (n > 0) base = iv_mul(base, base, prec);
  }
  return acc;
}

}  // namespace

struct RealExpr {
  enum Op { Const, Sqrt, Log, Add, Sub, Mul, Div, Neg, PowInt, Pow };

  Op op;
  mpq_class cq;  // Const
  long n = 0;    // PowInt
  std::shared_ptr<const RealExpr> a, b;

  static std::shared_ptr<const RealExpr> constant(const mpq_class& q) {
    auto e = std::make_shared<RealExpr>();
    e->op = Const;
    e->cq = q;
    return e;
  }
  static std::shared_ptr<const RealExpr> unary(
      Op op, std::shared_ptr<const RealExpr> a) {
    auto e = std::make_shared<RealExpr>();
    e->op = op;
    e->a = std::move(a);
    return e;
  }
  static std::shared_ptr<const RealExpr> binary(
      Op op, std::shared_ptr<const RealExpr> a,
      std::shared_ptr<const RealExpr> b) {
    auto e = std::make_shared<RealExpr>();
    e->op = op;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
  }
  static std::shared_ptr<const RealExpr> pow_int(
      std::shared_ptr<const RealExpr> a, long n) {
    auto e = std::make_shared<RealExpr>();
    e->op = PowInt;
    e->a = std::move(a);
    e->n = n;
    return e;
  }

  Ival eval(long prec) const {
    switch (op) {
      case Const:
        return iv_from_q(cq, prec);
      case Sqrt:
        return iv_sqrt(a->eval(prec), prec);
      case Log:
        return iv_log(a->eval(prec), prec);
      case Add:
        return iv_add(a->eval(prec), b->eval(prec), prec);
      case Sub:
        return iv_sub(a->eval(prec), b->eval(prec), prec);
      case Mul:
        return iv_mul(a->eval(prec), b->eval(prec), prec);
      case Div:
        return iv_div(a->eval(prec), b->eval(prec), prec);
      case Neg:
        return iv_neg(a->eval(prec), prec);
      case PowInt: {
        if (n >= 0) return iv_pow_uint(a->eval(prec), (unsigned long)n, prec);
        return iv_recip(
            iv_pow_uint(a->eval(prec), (unsigned long)(-n), prec), prec);
      }
      case Pow:
        // a^b = exp(b * log a), a > 0
        return iv_exp(iv_mul(b->eval(prec), iv_log(a->eval(prec), prec), prec),
                      prec);
    }
    Ival r(prec);
    r.set_whole();
    return r;
  }

  void print(std::ostream& os) const {
    switch (op) {
      case Const:
        os << cq;
        return;
      case Sqrt:
        os << "sqrt(";
        a->print(os);
        os << ")";
        return;
      case Log:
        os << "log(";
        a->print(os);
        os << ")";
        return;
      case Add:
      case Sub:
      case Mul:
      case Div: {
        const char* sym = op == Add ? "+" : op == Sub ? "-" : op == Mul ? "*"
                                                                        : "/";
        os << "(";
        a->print(os);
        os << sym;
        b->print(os);
        os << ")";
        return;
      }
      case Neg:
        os << "(-";
        a->print(os);
        os << ")";
        return;
      case PowInt:
        os << "pow(";
        a->print(os);
        os << "," << n << ")";
        return;
      case Pow:
        os << "pow(";
        a->print(os);
        os << ",";
        b->print(os);
        os << ")";
        return;
    }
  }
};

}  // namespace detail

using detail::Ival;
using detail::RealExpr;

// ---------------------------------------------------------------------------
// construction

Scalar::Scalar(long n) : kind_(Kind::Rational), rat_(n) {}

Scalar::Scalar(const mpq_class& q) : kind_(Kind::Rational), rat_(q) {
  rat_.canonicalize();
}

Scalar::Scalar(std::shared_ptr<const detail::RealExpr> e)
    : kind_(Kind::Certified), expr_(std::move(e)) {}

namespace detail {
Scalar make_certified(std::shared_ptr<const RealExpr> e) {
  return Scalar(std::move(e));
}
std::shared_ptr<const RealExpr> to_expr(const Scalar& s) {
  return s.as_expr();
}
}  // namespace detail

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw division_by_zero();
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::surd(const mpq_class& a, const mpq_class& b, unsigned long d) {
  // pull square factors out of d
  mpq_class bb = b;
  unsigned long rest = d;
  unsigned long root = 1;
  for (unsigned long f = 2; f * f <= rest; ++f) {
    while (rest % (f * f) == 0) {
      rest /= f * f;
      root *= f;
    }
  }
  bb *= root;
  if (rest <= 1 || bb == 0) {
    mpq_class v = a;
    if (rest == 1) v += bb;
    return Scalar(v);
  }
  Scalar s(0L);
  s.kind_ = Kind::Quadratic;
  auto node = std::make_shared<Surd>();
  node->a = a;
  node->a.canonicalize();
  node->b = bb;
  node->b.canonicalize();
  node->d = rest;
  s.surd_ = std::move(node);
  return s;
}

Scalar Scalar::log_ratio(const mpq_class& x, const mpq_class& y) {
  if (x <= 0 || y <= 0) throw parse_error("log requires positive argument");
  return Scalar(RealExpr::binary(RealExpr::Div,
                                 RealExpr::unary(RealExpr::Log,
                                                 RealExpr::constant(x)),
                                 RealExpr::unary(RealExpr::Log,
                                                 RealExpr::constant(y))));
}

Scalar Scalar::pow_real(const Scalar& base, const Scalar& exponent) {
  if (exponent.is_rational() && exponent.rat().get_den() == 1 &&
      exponent.rat().get_num().fits_slong_p()) {
    return base.pow(exponent.rat().get_num().get_si());
  }
  return Scalar(RealExpr::binary(RealExpr::Pow, base.as_expr(),
                                 exponent.as_expr()));
}

bool Scalar::is_rational() const { return kind_ == Kind::Rational; }
bool Scalar::is_surd() const { return kind_ == Kind::Quadratic; }
bool Scalar::is_certified() const { return kind_ == Kind::Certified; }

const mpq_class& Scalar::rat() const {
  if (!is_rational()) throw std::logic_error("not a rational Scalar");
  return rat_;
}
const mpq_class& Scalar::surd_a() const { return surd_->a; }
const mpq_class& Scalar::surd_b() const { return surd_->b; }
unsigned long Scalar::surd_d() const { return surd_->d; }

std::shared_ptr<const RealExpr> Scalar::as_expr() const {
  switch (kind_) {
    case Kind::Rational:
      return RealExpr::constant(rat_);
    case Kind::Quadratic:
      return RealExpr::binary(
          RealExpr::Add, RealExpr::constant(surd_->a),
          RealExpr::binary(
              RealExpr::Mul, RealExpr::constant(surd_->b),
              RealExpr::unary(RealExpr::Sqrt,
                              RealExpr::constant(mpq_class(surd_->d)))));
    case Kind::Certified:
      return expr_;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// comparison

namespace {

// sign of r + b*sqrt(d) with b != 0, d square-free >= 2
int sign_rational_plus_surd(const mpq_class& r, const mpq_class& b,
                            unsigned long d) {
  int sb = sgn(b);
  if (r == 0) return sb;
  int sr = sgn(r);
  if (sr == sb) return sr;
  // opposite signs: compare r^2 against b^2*d
  mpq_class r2 = r * r;
  mpq_class b2d = b * b * mpq_class(d);
  int c = cmp(r2, b2d);
  if (c == 0) return 0;  // cannot happen for square-free d >= 2, kept for safety
  return c > 0 ? sr : sb;
}

}  // namespace

Ordering Scalar::cmp_exact(const Scalar& other) const {
  // difference is r + b1*sqrt(d1) - b2*sqrt(d2) with zero/absent surd parts
  mpq_class r = (is_surd() ? surd_->a : rat_) -
                (other.is_surd() ? other.surd_->a : other.rat_);
  mpq_class b1 = is_surd() ? surd_->b : mpq_class(0);
  mpq_class b2 = other.is_surd() ? other.surd_->b : mpq_class(0);
  unsigned long d1 = is_surd() ? surd_->d : 0;
  unsigned long d2 = other.is_surd() ? other.surd_->d : 0;
  if (d1 != 0 && d1 == d2) {
    b1 -= b2;
    b2 = 0;
    d2 = 0;
  }

  int s;
  if (b1 == 0 && b2 == 0) {
    s = sgn(r);
  } else if (b2 == 0) {
    s = sign_rational_plus_surd(r, b1, d1);
  } else if (b1 == 0) {
    s = -sign_rational_plus_surd(-r, b2, d2);
  } else {
    // distinct square-free d1 != d2 with both b nonzero: the difference is
    // never zero, so interval refinement separates it
    const PrecisionPolicy& policy = default_precision();
    for (long prec = policy.start_bits; prec <= policy.max_bits; prec *= 2) {
      note_bits(prec);
      Ival ia = as_expr()->eval(prec);
      Ival ib = other.as_expr()->eval(prec);
      if (mpfr_less_p(ia.hi(), ib.lo())) return Ordering::Less;
      if (mpfr_greater_p(ia.lo(), ib.hi())) return Ordering::Greater;
    }
    throw precision_exhausted("exact surd comparison did not separate");
  }
  return s < 0 ? Ordering::Less : s > 0 ? Ordering::Greater : Ordering::Equal;
}

Ordering Scalar::cmp(const Scalar& other, const PrecisionPolicy& policy) const {
  if (is_exact() && other.is_exact()) return cmp_exact(other);
  auto ea = as_expr();
  auto eb = other.as_expr();
  for (long prec = policy.start_bits;; prec *= 2) {
    if (prec > policy.max_bits) prec = policy.max_bits;
    note_bits(prec);
    Ival ia = ea->eval(prec);
    Ival ib = eb->eval(prec);
    if (mpfr_less_p(ia.hi(), ib.lo())) return Ordering::Less;
    if (mpfr_greater_p(ia.lo(), ib.hi())) return Ordering::Greater;
    if (ia.is_point() && ib.is_point() && mpfr_equal_p(ia.lo(), ib.lo()))
      return Ordering::Equal;
    if (prec >= policy.max_bits) break;
  }
  throw precision_exhausted(
      "comparison undecided at max precision (" +
      std::to_string(policy.max_bits) + " bits): " + str() + " vs " +
      other.str());
}

int Scalar::sign(const PrecisionPolicy& policy) const {
  return ordering_sign(cmp(Scalar(0L), policy));
}

// ---------------------------------------------------------------------------
// arithmetic

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_rational() && o.is_rational()) return Scalar(mpq_class(rat_ + o.rat_));
  if (is_surd() && o.is_rational())
    return surd(surd_->a + o.rat_, surd_->b, surd_->d);
  if (is_rational() && o.is_surd())
    return surd(rat_ + o.surd_->a, o.surd_->b, o.surd_->d);
  if (is_surd() && o.is_surd() && surd_->d == o.surd_->d)
    return surd(surd_->a + o.surd_->a, surd_->b + o.surd_->b, surd_->d);
  return Scalar(RealExpr::binary(RealExpr::Add, as_expr(), o.as_expr()));
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(mpq_class(-rat_));
  if (is_surd()) return surd(-surd_->a, -surd_->b, surd_->d);
  return Scalar(RealExpr::unary(RealExpr::Neg, expr_));
}

Scalar Scalar::operator-(const Scalar& o) const {
  if (is_certified() || o.is_certified())
    return Scalar(RealExpr::binary(RealExpr::Sub, as_expr(), o.as_expr()));
  return *this + (-o);
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_rational() && o.is_rational()) return Scalar(mpq_class(rat_ * o.rat_));
  if (is_surd() && o.is_rational())
    return surd(surd_->a * o.rat_, surd_->b * o.rat_, surd_->d);
  if (is_rational() && o.is_surd())
    return surd(rat_ * o.surd_->a, rat_ * o.surd_->b, o.surd_->d);
  if (is_surd() && o.is_surd() && surd_->d == o.surd_->d) {
    // (a+b*s)(c+e*s) = ac + be*d + (ae+bc)*s
    const mpq_class& a = surd_->a;
    const mpq_class& b = surd_->b;
    const mpq_class& c = o.surd_->a;
    const mpq_class& e = o.surd_->b;
    return surd(a * c + b * e * mpq_class(surd_->d), a * e + b * c, surd_->d);
  }
  return Scalar(RealExpr::binary(RealExpr::Mul, as_expr(), o.as_expr()));
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_rational()) {
    if (o.rat_ == 0) throw division_by_zero();
    if (is_rational()) return Scalar(mpq_class(rat_ / o.rat_));
    if (is_surd()) return surd(surd_->a / o.rat_, surd_->b / o.rat_, surd_->d);
  }
  if (o.is_surd() && (is_exact() || is_surd())) {
    if ((is_rational() || surd_->d == o.surd_->d)) {
      // multiply by the conjugate; c^2 - e^2 d != 0 unless the divisor is 0
      const mpq_class& c = o.surd_->a;
      const mpq_class& e = o.surd_->b;
      mpq_class denom = c * c - e * e * mpq_class(o.surd_->d);
      if (denom == 0) throw division_by_zero();
      Scalar conj = surd(c / denom, -e / denom, o.surd_->d);
      return *this * conj;
    }
  }
  return Scalar(RealExpr::binary(RealExpr::Div, as_expr(), o.as_expr()));
}

Scalar Scalar::pow(long n) const {
  if (n == 0) return Scalar(1L);
  if (n < 0) return Scalar(1L) / pow(-n);
  if (is_certified()) return Scalar(RealExpr::pow_int(expr_, n));
  Scalar acc(1L);
  Scalar base = *this;
  unsigned long k = (unsigned long)n;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

mpz_class Scalar::floor(const PrecisionPolicy& policy) const {
  if (is_rational()) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), rat_.get_num().get_mpz_t(),
               rat_.get_den().get_mpz_t());
    return q;
  }
  auto e = as_expr();
  for (long prec = policy.start_bits;; prec *= 2) {
    if (prec > policy.max_bits) prec = policy.max_bits;
    note_bits(prec);
    Ival iv = e->eval(prec);
    if (mpfr_number_p(iv.lo()) && mpfr_number_p(iv.hi())) {
      mpfr_t fl, fh;
      mpfr_init2(fl, mpfr_get_prec(iv.lo()));
      mpfr_init2(fh, mpfr_get_prec(iv.hi()));
      mpfr_floor(fl, iv.lo());
      mpfr_floor(fh, iv.hi());
      bool same = mpfr_equal_p(fl, fh);
      mpz_class z;
      if (same) mpfr_get_z(z.get_mpz_t(), fl, MPFR_RNDN);
      mpfr_clear(fl);
      mpfr_clear(fh);
      if (same) return z;
    }
    if (prec >= policy.max_bits) break;
  }
  throw precision_exhausted("floor undecided at max precision for " + str());
}

// ---------------------------------------------------------------------------
// formatting

std::string Scalar::str() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Rational:
      os << rat_;
      break;
    case Kind::Quadratic: {
      if (surd_->a == 0 && surd_->b == 1) {
        os << "sqrt(" << surd_->d << ")";
      } else {
        os << "(" << surd_->a;
        if (surd_->b >= 0)
          os << "+" << surd_->b;
        else
          os << "-" << mpq_class(-surd_->b);
        os << "*sqrt(" << surd_->d << "))";
      }
      break;
    }
    case Kind::Certified:
      expr_->print(os);
      break;
  }
  return os.str();
}

double Scalar::approx() const {
  if (is_rational()) return rat_.get_d();
  Ival iv = as_expr()->eval(128);
  mpfr_t mid;
  mpfr_init2(mid, 64);
  mpfr_add(mid, iv.lo(), iv.hi(), MPFR_RNDN);
  mpfr_div_ui(mid, mid, 2, MPFR_RNDN);
  double d = mpfr_get_d(mid, MPFR_RNDN);
  mpfr_clear(mid);
  return d;
}

// ---------------------------------------------------------------------------
// parsing: expr := term (('+'|'-') term)* ; term := factor (('*'|'/') factor)*
// factor := '-' factor | number | '(' expr ')' | sqrt(e) | log(e) | pow(a,b)

namespace {

struct Parser {
  std::string_view s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw parse_error("expected '" + std::string(1, c) + "' in scalar at \"" +
                        std::string(s.substr(pos)) + "\"");
  }
  bool eat_word(std::string_view w) {
    skip();
    if (s.substr(pos, w.size()) == w) {
      pos += w.size();
      return true;
    }
    return false;
  }

  Scalar parse_expr() {
    Scalar v = parse_term();
    for (;;) {
      if (eat('+'))
        v = v + parse_term();
      else if (eat('-'))
        v = v - parse_term();
      else
        return v;
    }
  }

  Scalar parse_term() {
    Scalar v = parse_factor();
    for (;;) {
      if (eat('*'))
        v = v * parse_factor();
      else if (eat('/'))
        v = v / parse_factor();
      else
        return v;
    }
  }

  Scalar parse_factor() {
    skip();
    if (eat('-')) return -parse_factor();
    if (eat_word("sqrt")) {
      expect('(');
      Scalar arg = parse_expr();
      expect(')');
      return sqrt_of(arg);
    }
    if (eat_word("log")) {
      expect('(');
      Scalar arg = parse_expr();
      expect(')');
      if (!arg.is_rational())
        throw parse_error("log() argument must be rational");
      if (arg.rat() <= 0) throw parse_error("log() argument must be positive");
      return detail::make_certified(
          RealExpr::unary(RealExpr::Log, RealExpr::constant(arg.rat())));
    }
    if (eat_word("pow")) {
      expect('(');
      Scalar base = parse_expr();
      expect(',');
      Scalar expnt = parse_expr();
      expect(')');
      return Scalar::pow_real(base, expnt);
    }
    if (eat('(')) {
      Scalar v = parse_expr();
      expect(')');
      return v;
    }
    return parse_number();
  }

  static Scalar sqrt_of(const Scalar& arg) {
    if (arg.is_rational()) {
      const mpq_class& q = arg.rat();
      if (q < 0) throw parse_error("sqrt of negative value");
      // sqrt(p/q) = sqrt(p*q)/q, exact as a quadratic surd
      mpz_class pq = q.get_num() * q.get_den();
      if (!pq.fits_ulong_p())
        return detail::make_certified(
            RealExpr::unary(RealExpr::Sqrt, RealExpr::constant(q)));
      return Scalar::surd(0, mpq_class(1, q.get_den()), pq.get_ui());
    }
    return detail::make_certified(
        RealExpr::unary(RealExpr::Sqrt, detail::to_expr(arg)));
  }

  Scalar parse_number() {
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start) throw parse_error("cannot parse scalar: \"" +
                                        std::string(s) + "\"");
    mpz_class intpart(std::string(s.substr(start, pos - start)), 10);
    mpq_class v(intpart);
    if (pos < s.size() && s[pos] == '.') {
      ++pos;
      size_t fs = pos;
      while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
      if (pos == fs) throw parse_error("malformed decimal literal");
      mpz_class frac(std::string(s.substr(fs, pos - fs)), 10);
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, pos - fs);
      v += mpq_class(frac, scale);
      v.canonicalize();
    }
    return Scalar(v);
  }
};

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  Parser p{text};
  Scalar v = p.parse_expr();
  p.skip();
  if (p.pos != text.size())
    throw parse_error("trailing characters in scalar: \"" + std::string(text) +
                      "\"");
  return v;
}

}  // namespace helly
