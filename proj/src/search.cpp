#include "helly/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <thread>

namespace helly {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Window points with duplicates (equal coordinates) removed, sorted by
// (y, x); orientation queries answered through a scaled-integer fast path
// when every coordinate is an integer that fits comfortably in 64 bits,
// otherwise through a precomputed exact sign table.
struct PointSet {
  std::vector<LatticePoint> pts;
  std::vector<std::pair<Scalar, Scalar>> coords;

  bool has_int = false;
  std::vector<long long> xi, yi;  // per-axis positive scaling of coords
  std::vector<int8_t> table;      // N^3 signs when !has_int

  size_t size() const { return pts.size(); }

  int orient(size_t a, size_t b, size_t c) const {
    if (has_int) {
      __int128 cross = (__int128)(xi[b] - xi[a]) * (yi[c] - yi[a]) -
                       (__int128)(yi[b] - yi[a]) * (xi[c] - xi[a]);
      return cross < 0 ? -1 : cross > 0 ? 1 : 0;
    }
    size_t n = size();
    return table[(a * n + b) * n + c];
  }

  // compares how far b and c sit from a along a common ray (callers only use
  // this for points collinear with a)
  int farther(size_t a, size_t b, size_t c) const {
    if (has_int) {
      __int128 db = (__int128)(xi[b] - xi[a]) * (xi[b] - xi[a]) +
                    (__int128)(yi[b] - yi[a]) * (yi[b] - yi[a]);
      __int128 dc = (__int128)(xi[c] - xi[a]) * (xi[c] - xi[a]) +
                    (__int128)(yi[c] - yi[a]) * (yi[c] - yi[a]);
      return db < dc ? -1 : db > dc ? 1 : 0;
    }
    Scalar db = (coords[b].first - coords[a].first).pow(2) +
                (coords[b].second - coords[a].second).pow(2);
    Scalar dc = (coords[c].first - coords[a].first).pow(2) +
                (coords[c].second - coords[a].second).pow(2);
    return ordering_sign(db.cmp(dc));
  }
};

int coord_cmp(const std::pair<Scalar, Scalar>& a,
              const std::pair<Scalar, Scalar>& b) {
  Ordering c = a.first.cmp(b.first);
  if (c != Ordering::Equal) return ordering_sign(c);
  return ordering_sign(a.second.cmp(b.second));
}

// scaled integer values for one axis over indices 0..max_i, or nullopt
std::optional<std::vector<long long>> axis_integers(const Axis& axis,
                                                    long max_i) {
  std::vector<mpz_class> vals;
  if (axis.kind() == Axis::Kind::Power) {
    if (!axis.base().is_rational()) return std::nullopt;
    const mpz_class& n = axis.base().rat().get_num();
    const mpz_class& d = axis.base().rat().get_den();
    // base^i scaled by d^max_i keeps every value integral
    for (long i = 0; i <= max_i; ++i) {
      mpz_class v;
      mpz_pow_ui(v.get_mpz_t(), n.get_mpz_t(), (unsigned long)i);
      mpz_class dp;
      mpz_pow_ui(dp.get_mpz_t(), d.get_mpz_t(), (unsigned long)(max_i - i));
      vals.push_back(v * dp);
    }
  } else {
    for (long i = 0; i <= max_i; ++i) {
      const Scalar& v = axis.value(i);
      if (!v.is_rational() || v.rat().get_den() != 1) return std::nullopt;
      vals.push_back(v.rat().get_num());
    }
  }
  std::vector<long long> out;
  for (const mpz_class& v : vals) {
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > 62) return std::nullopt;
    out.push_back((long long)v.get_si());
  }
  return out;
}

constexpr size_t kExactTableCap = 256;

PointSet build_point_set(const LatticeSpec& spec, const SearchConfig& cfg) {
  PointSet P;

  std::vector<LatticePoint> raw = spec.enumerate(cfg.window);
  for (auto& p : raw) {
    p.u += cfg.u_shift;
    p.v += cfg.v_shift;
  }
  std::vector<std::pair<Scalar, Scalar>> raw_coords;
  raw_coords.reserve(raw.size());
  for (const auto& p : raw) raw_coords.push_back(spec.coordinate(p));

  // drop duplicate coordinates (the Fibonacci axis repeats the value 1),
  // keeping the smallest index pair for determinism
  std::vector<size_t> order(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    int c = coord_cmp(raw_coords[a], raw_coords[b]);
    if (c != 0) return c < 0;
    return raw[a] < raw[b];
  });
  for (size_t k = 0; k < order.size(); ++k) {
    if (k > 0 && coord_cmp(raw_coords[order[k]], raw_coords[order[k - 1]]) == 0)
      continue;
    P.pts.push_back(raw[order[k]]);
    P.coords.push_back(raw_coords[order[k]]);
  }

  long max_u = 0, max_v = 0;
  for (const auto& p : P.pts) {
    max_u = std::max(max_u, p.u);
    max_v = std::max(max_v, p.v);
  }
  auto xv = axis_integers(spec.xaxis(), max_u);
  auto yv = axis_integers(spec.yaxis(), max_v);
  if (xv && yv) {
    P.has_int = true;
    for (const auto& p : P.pts) {
      P.xi.push_back((*xv)[p.u]);
      P.yi.push_back((*yv)[p.v]);
    }
  }

  // sort bottom-most then leftmost
  std::vector<size_t> idx(P.pts.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    if (P.has_int) {
      if (P.yi[a] != P.yi[b]) return P.yi[a] < P.yi[b];
      return P.xi[a] < P.xi[b];
    }
    Ordering c = P.coords[a].second.cmp(P.coords[b].second);
    if (c != Ordering::Equal) return c == Ordering::Less;
    return P.coords[a].first.cmp(P.coords[b].first) == Ordering::Less;
  });
  auto reorder = [&](auto& vec) {
    auto copy = vec;
    for (size_t i = 0; i < idx.size(); ++i) vec[i] = copy[idx[i]];
  };
  reorder(P.pts);
  reorder(P.coords);
  if (P.has_int) {
    reorder(P.xi);
    reorder(P.yi);
  }

  if (!P.has_int) {
    size_t n = P.size();
    if (n > kExactTableCap)
      throw window_too_large(
          "window has " + std::to_string(n) +
          " points; exact-arithmetic search is capped at " +
          std::to_string(kExactTableCap));
    P.table.assign(n * n * n, 0);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        for (size_t k = j + 1; k < n; ++k) {
          Scalar cross = (P.coords[j].first - P.coords[i].first) *
                             (P.coords[k].second - P.coords[i].second) -
                         (P.coords[j].second - P.coords[i].second) *
                             (P.coords[k].first - P.coords[i].first);
          int8_t s = (int8_t)cross.sign();
          auto put = [&](size_t a, size_t b, size_t c, int8_t v) {
            P.table[(a * n + b) * n + c] = v;
          };
          put(i, j, k, s);
          put(j, k, i, s);
          put(k, i, j, s);
          put(i, k, j, (int8_t)-s);
          put(k, j, i, (int8_t)-s);
          put(j, i, k, (int8_t)-s);
        }
  }
  return P;
}

std::vector<LatticePoint> canonical(const PointSet& P, size_t anchor,
                                    const std::vector<size_t>& members) {
  std::vector<LatticePoint> out;
  out.push_back(P.pts[anchor]);
  for (size_t g : members) out.push_back(P.pts[g]);
  std::sort(out.begin(), out.end());
  return out;
}

void take_better(long size, std::vector<LatticePoint> verts, long& best_size,
                 std::vector<LatticePoint>& best_verts) {
  if (size > best_size || (size == best_size && (best_verts.empty() ||
                                                 verts < best_verts))) {
    best_size = size;
    best_verts = std::move(verts);
  }
}

// ---------------------------------------------------------------------------
// anchored angular order shared by both engines

std::vector<size_t> angular_order(const PointSet& P, size_t a) {
  std::vector<size_t> ord;
  for (size_t q = a + 1; q < P.size(); ++q) ord.push_back(q);
  std::sort(ord.begin(), ord.end(), [&](size_t q1, size_t q2) {
    int o = P.orient(a, q1, q2);
    if (o != 0) return o > 0;
    return P.farther(a, q1, q2) < 0;
  });
  return ord;
}

// ---------------------------------------------------------------------------
// optimized engine: anchored largest-empty-convex-chain dynamic program

struct AnchorDP {
  std::vector<size_t> ord;
  std::vector<char> tri;    // tri[j*m+i]: closed triangle (a, ord[j], ord[i])
                            // holds no other window point
  std::vector<int> f;       // f[i*m+j]: longest empty convex chain ending
                            // with edge ord[j] -> ord[i]
  long best = 0;
  long candidates = 0;
};

AnchorDP run_anchor_dp(const PointSet& P, size_t a) {
  AnchorDP R;
  R.ord = angular_order(P, a);
  size_t m = R.ord.size();
  if (m < 2) return R;

  // blocked[j]: a point sits on the open segment from the anchor to ord[j],
  // poisoning every triangle with that edge (equal angles sort by distance,
  // so such a point is the immediate predecessor)
  std::vector<char> blocked(m, 0);
  for (size_t j = 1; j < m; ++j)
    if (P.orient(a, R.ord[j - 1], R.ord[j]) == 0) blocked[j] = 1;

  // triangle emptiness by blocker sweep: among the points strictly between
  // ord[j] and ord[i] in angular order, only the one whose direction from
  // ord[j] is most counterclockwise can be the last to block, so tracking it
  // decides every pair in O(1)
  R.tri.assign(m * m, 0);
  for (size_t j = 0; j + 1 < m; ++j) {
    if (blocked[j]) continue;
    long bstar = -1;
    for (size_t i = j + 1; i < m; ++i) {
      size_t pj = R.ord[j], pi = R.ord[i];
      if (P.orient(a, pj, pi) == 0) continue;  // collinear beyond ord[j]
      bool empty = bstar < 0 || P.orient(pj, pi, R.ord[bstar]) < 0;
      R.tri[j * m + i] = empty ? 1 : 0;
      if (bstar < 0 || P.orient(pj, R.ord[bstar], pi) > 0) bstar = (long)i;
    }
  }

  R.f.assign(m * m, 0);
  for (size_t i = 1; i < m; ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (!R.tri[j * m + i]) continue;
      int best_f = 2;
      for (size_t l = 0; l < j; ++l) {
        int fl = R.f[j * m + l];
        if (fl >= 2 && fl + 1 > best_f &&
            P.orient(R.ord[l], R.ord[j], R.ord[i]) > 0)
          best_f = fl + 1;
      }
      R.f[i * m + j] = best_f;
      if (P.orient(R.ord[j], R.ord[i], a) > 0) {
        ++R.candidates;
        R.best = std::max(R.best, (long)best_f + 1);
      }
    }
  }
  return R;
}

// enumerate the chains realizing f = target for lexicographic tie-breaking
void enumerate_chains(const PointSet& P, size_t a, const AnchorDP& R,
                      long target, long cap, long& seen, long& best_size,
                      std::vector<LatticePoint>& best_verts) {
  size_t m = R.ord.size();
  std::vector<size_t> chain;
  auto dfs = [&](auto&& self, size_t i, size_t j) -> void {
    if (seen >= cap) return;
    chain.push_back(R.ord[i]);
    int fij = R.f[i * m + j];
    if (fij == 2) {
      chain.push_back(R.ord[j]);
      ++seen;
      take_better(target + 1, canonical(P, a, chain), best_size, best_verts);
      chain.pop_back();
    } else {
      for (size_t l = 0; l < j; ++l)
        if (R.f[j * m + l] == fij - 1 &&
            P.orient(R.ord[l], R.ord[j], R.ord[i]) > 0)
          self(self, j, l);
    }
    chain.pop_back();
  };
  for (size_t i = 1; i < m && seen < cap; ++i)
    for (size_t j = 0; j < i && seen < cap; ++j)
      if (R.f[i * m + j] == target && P.orient(R.ord[j], R.ord[i], a) > 0)
        dfs(dfs, i, j);
}

// ---------------------------------------------------------------------------
// naive oracle: depth-first convex chain extension, whole-polygon emptiness
// test on closure

struct NaiveState {
  long best_size = 0;
  std::vector<LatticePoint> best_verts;
  long candidates = 0;
};

bool hull_is_empty(const PointSet& P, size_t a,
                   const std::vector<size_t>& chain) {
  // polygon a -> chain[0] -> ... -> chain.back() in counterclockwise order
  std::vector<size_t> poly;
  poly.push_back(a);
  poly.insert(poly.end(), chain.begin(), chain.end());
  size_t k = poly.size();
  for (size_t g = 0; g < P.size(); ++g) {
    if (std::find(poly.begin(), poly.end(), g) != poly.end()) continue;
    bool inside = true;
    for (size_t e = 0; e < k && inside; ++e)
      if (P.orient(poly[e], poly[(e + 1) % k], g) < 0) inside = false;
    if (inside) return false;
  }
  return true;
}

void naive_anchor(const PointSet& P, size_t a, NaiveState& st) {
  std::vector<size_t> ord = angular_order(P, a);
  size_t m = ord.size();
  std::vector<size_t> chain;   // order indices
  std::vector<size_t> cverts;  // global indices along the chain
  auto walk = [&](auto&& self) -> void {
    size_t last = chain.back();
    if ((long)chain.size() + 1 + (long)(m - 1 - last) < st.best_size) return;
    if (chain.size() >= 2) {
      size_t p2 = ord[chain[chain.size() - 2]];
      size_t p1 = ord[last];
      // closing turns at the last vertex and at the anchor
      if (P.orient(p2, p1, a) > 0 && P.orient(p1, a, ord[chain[0]]) > 0) {
        ++st.candidates;
        cverts.clear();
        for (size_t c : chain) cverts.push_back(ord[c]);
        if (hull_is_empty(P, a, cverts))
          take_better((long)chain.size() + 1, canonical(P, a, cverts),
                      st.best_size, st.best_verts);
      }
    }
    for (size_t nxt = last + 1; nxt < m; ++nxt) {
      if (P.orient(a, ord[last], ord[nxt]) == 0) continue;  // equal angle
      if (chain.size() >= 2 &&
          P.orient(ord[chain[chain.size() - 2]], ord[last], ord[nxt]) <= 0)
        continue;
      chain.push_back(nxt);
      self(self);
      chain.pop_back();
    }
  };
  for (size_t s = 0; s < m; ++s) {
    chain.assign(1, s);
    walk(walk);
  }
}

}  // namespace

SearchResult max_empty_polygon(const LatticeSpec& spec,
                               const SearchConfig& cfg) {
  auto t0 = Clock::now();
  PointSet P = build_point_set(spec, cfg);
  size_t n = P.size();

  SearchResult res;
  if (n < 3) {
    res.cardinality = (long)n;
    res.elapsed_sec = seconds_since(t0);
    return res;
  }

  long best_size = 0;
  std::vector<LatticePoint> best_verts;
  long candidates = 0;

  if (cfg.algorithm == Algorithm::Naive) {
    if ((long)n > cfg.naive_point_cap)
      throw window_too_large("naive search refuses " + std::to_string(n) +
                             " points (cap " +
                             std::to_string(cfg.naive_point_cap) + ")");
    NaiveState st;
    for (size_t a = 0; a + 2 < n; ++a) naive_anchor(P, a, st);
    best_size = st.best_size;
    best_verts = std::move(st.best_verts);
    candidates = st.candidates;
  } else {
    // phase 1: per-anchor maxima (parallel over anchors)
    std::vector<long> anchor_best(n, 0);
    std::vector<long> anchor_cands(n, 0);
    std::atomic<size_t> next{0};
    std::atomic<bool> out_of_time{false};
    int jobs = std::max(1, cfg.jobs);
    auto worker = [&] {
      for (;;) {
        size_t a = next.fetch_add(1);
        if (a >= n) return;
        if (cfg.time_budget_sec > 0 &&
            seconds_since(t0) > cfg.time_budget_sec) {
          out_of_time = true;
          return;
        }
        AnchorDP R = run_anchor_dp(P, a);
        anchor_best[a] = R.best;
        anchor_cands[a] = R.candidates;
      }
    };
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    for (size_t a = 0; a < n; ++a) {
      best_size = std::max(best_size, anchor_best[a]);
      candidates += anchor_cands[a];
    }
    res.optimal = !out_of_time;

    // phase 2: deterministic tie-break over the anchors that reach the
    // maximum (single-threaded, bounded enumeration)
    if (best_size >= 3) {
      const long cap = 200000;
      long seen = 0;
      for (size_t a = 0; a < n && seen < cap; ++a) {
        if (anchor_best[a] != best_size) continue;
        AnchorDP R = run_anchor_dp(P, a);
        enumerate_chains(P, a, R, best_size - 1, cap, seen, best_size,
                         best_verts);
      }
    }
  }

  if (best_size < 3) {
    res.cardinality = std::min<long>((long)n, 2);
    res.elapsed_sec = seconds_since(t0);
    return res;
  }

  Polygon poly = Polygon::from_points(spec, best_verts);
  res.certificate = is_empty_polygon(poly);
  if (!res.certificate.empty)
    throw std::logic_error(
        "search produced a polygon the kernel rejects as non-empty");
  res.best = std::move(poly);
  res.cardinality = best_size;
  res.candidates_examined = candidates;
  res.elapsed_sec = seconds_since(t0);
  return res;
}

bool cross_validate(const LatticeSpec& spec, const Window& window) {
  SearchConfig a;
  a.window = window;
  a.algorithm = Algorithm::Naive;
  SearchConfig b;
  b.window = window;
  b.algorithm = Algorithm::DP;
  SearchResult ra = max_empty_polygon(spec, a);
  SearchResult rb = max_empty_polygon(spec, b);
  if (ra.cardinality != rb.cardinality) return false;
  if (ra.best.has_value() != rb.best.has_value()) return false;
  if (ra.best && ra.best->vertices() != rb.best->vertices()) return false;
  return true;
}

}  // namespace helly
