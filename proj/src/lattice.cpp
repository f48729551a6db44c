#include "helly/lattice.hpp"

#include <mutex>
#include <sstream>

namespace helly {

struct Axis::Mutex {
  std::mutex m;
};

Axis::Axis() : mu_(std::make_shared<Mutex>()) {}

std::shared_ptr<Axis> Axis::power(const Scalar& base) {
  if (base.cmp(Scalar(1L)) != Ordering::Greater)
    throw std::invalid_argument("lattice base must exceed 1");
  auto a = std::shared_ptr<Axis>(new Axis());
  a->kind_ = Kind::Power;
  a->base_ = base;
  a->pow_cache_.push_back(Scalar(1L));
  return a;
}

std::shared_ptr<Axis> Axis::fibonacci() {
  auto a = std::shared_ptr<Axis>(new Axis());
  a->kind_ = Kind::Sequence;
  a->extendable_ = true;
  a->name_ = "fib";
  a->values_ = {Scalar(1L), Scalar(1L)};  // F_0 = F_1 = 1
  return a;
}

std::shared_ptr<Axis> Axis::primes(unsigned long limit) {
  auto a = std::shared_ptr<Axis>(new Axis());
  a->kind_ = Kind::Sequence;
  a->extendable_ = false;
  a->name_ = "primes";
  std::vector<bool> sieve(limit + 1, true);
  for (unsigned long p = 2; p <= limit; ++p) {
    if (!sieve[p]) continue;
    a->values_.push_back(Scalar((long)p));
    for (unsigned long q = p * p; q <= limit; q += p) sieve[q] = false;
  }
  if (a->values_.empty())
    throw std::invalid_argument("prime axis limit too small");
  return a;
}

long Axis::finite_size() const {
  if (kind_ == Kind::Power || extendable_) return -1;
  return (long)values_.size();
}

void Axis::extend_to(long i) const {
  auto* self = const_cast<Axis*>(this);
  while ((long)self->values_.size() <= i) {
    size_t n = self->values_.size();
    self->values_.push_back(self->values_[n - 1] + self->values_[n - 2]);
  }
}

Scalar Axis::power_value(long i) const {
  std::lock_guard<std::mutex> lock(mu_->m);
  auto* cache = &pow_cache_;
  // base_.pow uses repeated squaring, which keeps certified-real power
  // evaluations shallow even for large exponents
  while ((long)cache->size() <= i)
    cache->push_back(base_.pow((long)cache->size()));
  return (*cache)[i];
}

Scalar Axis::value(long i) const {
  if (i < 0) throw index_out_of_range("negative axis index");
  if (kind_ == Kind::Power) return power_value(i);
  std::lock_guard<std::mutex> lock(mu_->m);
  if ((long)values_.size() <= i) {
    if (!extendable_)
      throw index_out_of_range(name_ + " axis index " + std::to_string(i) +
                               " out of range");
    extend_to(i);
  }
  return values_[i];
}

Ordering Axis::value_cmp(long i, long j) const {
  if (kind_ == Kind::Power) {
    // base > 1, so powers are strictly increasing in the exponent
    return i < j ? Ordering::Less : i > j ? Ordering::Greater : Ordering::Equal;
  }
  return value(i).cmp(value(j));
}

Ordering Axis::value_cmp(long i, const Scalar& x) const {
  return value(i).cmp(x);
}

long Axis::lowest_index_at_least(const Scalar& x, bool strict) const {
  auto ok = [&](long n) {
    Ordering c = value_cmp(n, x);
    return strict ? c == Ordering::Greater : c != Ordering::Less;
  };
  if (kind_ == Kind::Sequence && !extendable_) {
    long n = (long)values_.size();
    long lo = 0, hi = n;  // first ok index in [0, n], n = none
    while (lo < hi) {
      long mid = (lo + hi) / 2;
      if (ok(mid))
        hi = mid;
      else
        lo = mid + 1;
    }
    return lo;
  }
  if (ok(0)) return 0;
  // gallop then binary search; values grow without bound on these axes
  long hi = 1;
  while (!ok(hi)) hi *= 2;
  long lo = hi / 2 + 1;
  while (lo < hi) {
    long mid = (lo + hi) / 2;
    if (ok(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

IndexRange Axis::indices_in(const Scalar& lo, const Scalar& hi, bool lo_strict,
                            bool hi_strict) const {
  IndexRange r;
  r.lo = lowest_index_at_least(lo, lo_strict);
  // hi bound: last index with value <= hi (or < hi) is one before the first
  // index with value >= hi handled via the same search with flipped strictness
  r.hi = lowest_index_at_least(hi, !hi_strict) - 1;
  long n = finite_size();
  if (n >= 0 && r.hi >= n) r.hi = n - 1;
  if (n >= 0 && r.lo >= n) r.lo = n;  // empty
  return r;
}

IndexRange exponent_range_in_interval(const Scalar& base, const Scalar& lo,
                                      const Scalar& hi, bool lo_strict,
                                      bool hi_strict) {
  if (hi.cmp(lo) == Ordering::Less) return IndexRange{0, -1};
  return Axis::power(base)->indices_in(lo, hi, lo_strict, hi_strict);
}

// ---------------------------------------------------------------------------

LatticeSpec LatticeSpec::diagonal(const Scalar& alpha) {
  auto ax = Axis::power(alpha);
  return LatticeSpec(Kind::Diagonal, ax, ax);
}

LatticeSpec LatticeSpec::rectangular(const Scalar& alpha, const Scalar& beta) {
  return LatticeSpec(Kind::Rectangular, Axis::power(alpha), Axis::power(beta));
}

LatticeSpec LatticeSpec::fibonacci() {
  auto ax = Axis::fibonacci();
  return LatticeSpec(Kind::Fibonacci, ax, ax);
}

LatticeSpec LatticeSpec::primes(unsigned long limit) {
  auto ax = Axis::primes(limit);
  LatticeSpec s(Kind::IntegerProduct, ax, ax);
  s.prime_limit_ = limit;
  return s;
}

std::pair<Scalar, Scalar> LatticeSpec::coordinate(const LatticePoint& p) const {
  return {x_->value(p.u), y_->value(p.v)};
}

std::vector<LatticePoint> LatticeSpec::enumerate(const Window& w) const {
  std::vector<LatticePoint> pts;
  long umax = w.u_max, vmax = w.v_max;
  long nx = x_->finite_size(), ny = y_->finite_size();
  if (nx >= 0 && umax >= nx) umax = nx - 1;
  if (ny >= 0 && vmax >= ny) vmax = ny - 1;
  pts.reserve((size_t)(umax + 1) * (size_t)(vmax + 1));
  for (long u = 0; u <= umax; ++u)
    for (long v = 0; v <= vmax; ++v) pts.push_back({u, v});
  return pts;
}

std::string LatticeSpec::str() const {
  switch (kind_) {
    case Kind::Diagonal:
      return "exp:" + x_->base().str();
    case Kind::Rectangular:
      return "exp:" + x_->base().str() + "," + y_->base().str();
    case Kind::Fibonacci:
      return "fib";
    case Kind::IntegerProduct:
      return "primes:" + std::to_string(prime_limit_);
  }
  return "";
}

LatticeSpec LatticeSpec::parse(const std::string& text) {
  if (text == "fib") return fibonacci();
  if (text.rfind("primes:", 0) == 0) {
    unsigned long limit = std::stoul(text.substr(7));
    return primes(limit);
  }
  if (text.rfind("exp:", 0) == 0) {
    std::string body = text.substr(4);
    // split on a top-level comma only (pow(2,sqrt(2)) keeps its comma)
    int depth = 0;
    size_t split = std::string::npos;
    for (size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '(') ++depth;
      if (body[i] == ')') --depth;
      if (body[i] == ',' && depth == 0) {
        split = i;
        break;
      }
    }
    if (split == std::string::npos) return diagonal(Scalar::parse(body));
    return rectangular(Scalar::parse(body.substr(0, split)),
                       Scalar::parse(body.substr(split + 1)));
  }
  throw parse_error("unknown lattice spec: \"" + text + "\"");
}

}  // namespace helly
