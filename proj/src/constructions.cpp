#include "helly/constructions.hpp"

#include "helly/bounds.hpp"
#include "helly/contfrac.hpp"

#include <numeric>
#include <sstream>

namespace helly {

namespace {

const Scalar& golden_ratio() {
  static const Scalar phi =
      Scalar::surd(mpq_class(1, 2), mpq_class(1, 2), 5);
  return phi;
}

std::string point_list(const std::vector<LatticePoint>& pts) {
  std::ostringstream os;
  for (size_t i = 0; i < pts.size(); ++i)
    os << (i ? " " : "") << "(" << pts[i].u << "," << pts[i].v << ")";
  return os.str();
}

ConstructionReport certify(std::string name,
                           std::vector<std::pair<std::string, long>> params,
                           const LatticeSpec& spec,
                           std::vector<LatticePoint> pts) {
  Polygon poly = [&] {
    try {
      return Polygon::from_points(spec, pts);
    } catch (const not_strictly_convex& e) {
      throw certification_failed(name + ": vertices " + point_list(pts) +
                                 " not strictly convex: " + e.what());
    }
  }();
  EmptinessCertificate cert = is_empty_polygon(poly);
  if (!cert.empty) {
    std::ostringstream os;
    os << name << ": hull contains lattice point (" << cert.witness->u << ","
       << cert.witness->v << ")";
    throw certification_failed(os.str());
  }
  return ConstructionReport{std::move(name), std::move(params),
                            std::move(poly), std::move(cert), true};
}

void require_above_one(const Scalar& alpha) {
  if (alpha.cmp(Scalar(1L)) != Ordering::Greater)
    throw precondition_violated("base must exceed 1");
}

}  // namespace

ConstructionReport five_point(const Scalar& alpha) {
  require_above_one(alpha);
  return certify("five_point", {}, LatticeSpec::diagonal(alpha),
                 {{0, 2}, {1, 1}, {2, 0}, {2, 1}, {1, 2}});
}

ConstructionReport seven_point(const Scalar& alpha) {
  if (alpha.cmp(golden_ratio()) == Ordering::Less ||
      alpha.cmp(Scalar(2L)) != Ordering::Less)
    throw precondition_violated(
        "seven_point needs phi <= alpha < 2, got alpha = " + alpha.str());
  LatticeSpec spec = LatticeSpec::diagonal(alpha);
  const long cap = 64;
  for (long k = 3; k <= cap; ++k) {
    std::vector<LatticePoint> pts = {{0, k},     {k - 2, k - 1}, {k - 1, k - 2},
                                     {k, 0},     {k, 1},         {k - 1, k - 1},
                                     {1, k}};
    try {
      return certify("seven_point", {{"k", k}}, spec, std::move(pts));
    } catch (const certification_failed&) {
      // k not yet large enough; the proof guarantees success eventually
    }
  }
  throw search_exhausted("seven_point: no k <= " + std::to_string(cap) +
                         " certifies for alpha = " + alpha.str());
}

ConstructionReport hyperbola(const Scalar& alpha, std::optional<long> k_opt) {
  require_above_one(alpha);
  long k = k_opt ? *k_opt : floor_inv_sqrt(alpha, 1);
  if (k < 3)
    throw degenerate_k("hyperbola needs k >= 3, got k = " + std::to_string(k));
  std::vector<LatticePoint> pts;
  for (long i = 1; i <= k; ++i) pts.push_back({i, k - i});
  return certify("hyperbola", {{"k", k}}, LatticeSpec::diagonal(alpha),
                 std::move(pts));
}

ConstructionReport fibonacci_polygon(long k) {
  if (k < 2)  // k + 1 points, a polygon needs at least 3
    throw too_small("fibonacci_polygon needs k >= 2, got k = " +
                    std::to_string(k));
  std::vector<LatticePoint> pts;
  for (long i = 1; i <= 2 * k + 1; i += 2) pts.push_back({i + 2, i});
  return certify("fibonacci_polygon", {{"k", k}}, LatticeSpec::fibonacci(),
                 std::move(pts));
}

ConstructionReport rational_beta_polygon(const Scalar& alpha, long p, long q) {
  require_above_one(alpha);
  if (p < 1 || q < 1 || std::gcd(p, q) != 1)
    throw precondition_violated("p, q must be positive coprime integers");
  if (!alpha.is_rational())
    throw precondition_violated(
        "rational_beta_polygon needs a rational alpha with an exact q-th "
        "root");
  mpz_class rn, rd;
  const mpq_class& a = alpha.rat();
  if (!mpz_root(rn.get_mpz_t(), a.get_num_mpz_t(), (unsigned long)q) ||
      !mpz_root(rd.get_mpz_t(), a.get_den_mpz_t(), (unsigned long)q))
    throw precondition_violated("alpha = " + alpha.str() +
                                " has no exact rational " + std::to_string(q) +
                                "-th root");
  Scalar root{mpq_class(rn, rd)};  // alpha^{1/q}
  Scalar beta = root.pow(p);       // alpha^{p/q}

  long k = floor_inv_sqrt(alpha, q);
  std::vector<LatticePoint> pts;
  for (long i = q; i <= k; i += q)
    if ((k - i) % p == 0) pts.push_back({i / q, (k - i) / p});
  if ((long)pts.size() < 3)
    throw degenerate_k("rational_beta_polygon: only " +
                       std::to_string(pts.size()) +
                       " points survive with k = " + std::to_string(k));
  return certify("rational_beta_polygon", {{"p", p}, {"q", q}, {"k", k}},
                 LatticeSpec::rectangular(alpha, beta), std::move(pts));
}

ConstructionReport semiconvergent_polygon(const Scalar& alpha,
                                          const Scalar& beta, long m) {
  require_above_one(alpha);
  require_above_one(beta);
  if (m < 2) throw precondition_violated("semiconvergent_polygon needs m >= 2");
  if (!alpha.is_rational() || !beta.is_rational())
    throw precondition_violated(
        "semiconvergent_polygon needs rational alpha and beta");
  {
    BoundReport rel = rect_bounds(alpha, beta);
    if (rel.regime == Regime::RectRational)
      throw rational_log_ratio("log_" + alpha.str() + "(" + beta.str() +
                               ") = " + std::to_string(rel.p) + "/" +
                               std::to_string(rel.q) + " is rational");
  }
  Scalar r = Scalar::log_ratio(beta.rat(), alpha.rat());

  // smallest n whose next partial quotient allows offsets 0..m
  long n = -1;
  CFExpansion cf;
  for (long terms = 32; terms <= 256 && n < 0; terms *= 2) {
    cf = cf_expand(r, terms);
    for (size_t j = 1; j < cf.quotients.size(); ++j) {
      if (cf.quotients[j] >= m) {
        n = (long)j - 1;
        break;
      }
    }
    if ((long)cf.quotients.size() < terms) break;  // certified prefix ended
  }
  if (n < 0)
    throw cf_too_short("no certified partial quotient of log_" + alpha.str() +
                       "(" + beta.str() + ") reaches " + std::to_string(m));

  std::vector<Convergent> cs = convergents(cf);
  mpz_class pp = n >= 1 ? cs[n - 1].p : 1, qp = n >= 1 ? cs[n - 1].q : 0;
  mpz_class pc = cs[n].p, qc = cs[n].q;

  // exponents run along semi-convergents of log_alpha(beta); the same index
  // formula covers both parities of n (odd n corresponds to swapping the
  // axes and inverting the ratio, which shifts the expansion by one place)
  std::vector<LatticePoint> pts;
  for (mpz_class i = 0; i <= cf.quotients[n + 1]; ++i) {
    mpz_class u = pp + i * pc, v = qp + i * qc;
    pts.push_back({(long)u.get_si(), (long)v.get_si()});
  }
  return certify("semiconvergent_polygon",
                 {{"m", m}, {"n", n}, {"a_next", cf.quotients[n + 1].get_si()}},
                 LatticeSpec::rectangular(alpha, beta), std::move(pts));
}

ConstructionReport convergent_polygon(const Scalar& alpha, const Scalar& r,
                                      long count) {
  require_above_one(alpha);
  if (!r.is_surd())
    throw precondition_violated(
        "convergent_polygon needs an irrational quadratic surd exponent, "
        "got " + r.str());
  if (count < 3) throw precondition_violated("count must be >= 3");
  if (r.sign() <= 0)
    throw precondition_violated("the exponent must be positive");

  Scalar beta = Scalar::pow_real(alpha, r);
  LatticeSpec spec = LatticeSpec::rectangular(alpha, beta);

  const long n0_cap = 21;
  CFExpansion cf = cf_expand(r, n0_cap + 2 * count + 2);
  std::vector<Convergent> cs = convergents(cf);

  std::string last_error = "no odd n0 tried";
  for (long n0 = 1; n0 <= n0_cap; n0 += 2) {
    long last = n0 + 2 * (count - 1);
    if (last >= (long)cs.size())
      throw search_exhausted("convergent_polygon: expansion too short for "
                             "n0 = " + std::to_string(n0));
    std::vector<LatticePoint> pts;
    for (long n = n0; n <= last; n += 2)
      pts.push_back({(long)cs[n].p.get_si(), (long)cs[n].q.get_si()});
    try {
      return certify("convergent_polygon", {{"n0", n0}, {"count", count}},
                     spec, std::move(pts));
    } catch (const certification_failed& e) {
      last_error = e.what();
    }
  }
  throw search_exhausted("convergent_polygon: no odd n0 <= " +
                         std::to_string(n0_cap) + " certifies (" + last_error +
                         ")");
}

}  // namespace helly
