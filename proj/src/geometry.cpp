#include "helly/geometry.hpp"

#include <algorithm>
#include <numeric>

namespace helly {

Orient orient_coords(const Scalar& ax, const Scalar& ay, const Scalar& bx,
                     const Scalar& by, const Scalar& cx, const Scalar& cy) {
  Scalar cross = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
  int s = cross.sign();
  return s < 0 ? Orient::CW : s > 0 ? Orient::CCW : Orient::Collinear;
}

Orient orient(const LatticeSpec& spec, const LatticePoint& p,
              const LatticePoint& q, const LatticePoint& r) {
  auto [px, py] = spec.coordinate(p);
  auto [qx, qy] = spec.coordinate(q);
  auto [rx, ry] = spec.coordinate(r);
  return orient_coords(px, py, qx, qy, rx, ry);
}

namespace {

using Coord = std::pair<Scalar, Scalar>;

Orient orient_c(const Coord& a, const Coord& b, const Coord& c) {
  return orient_coords(a.first, a.second, b.first, b.second, c.first, c.second);
}

// lexicographic (x, y) comparison
int coord_cmp(const Coord& a, const Coord& b) {
  Ordering cx = a.first.cmp(b.first);
  if (cx != Ordering::Equal) return ordering_sign(cx);
  return ordering_sign(a.second.cmp(b.second));
}

// Monotone chain; returns indices of the hull in counterclockwise order with
// collinear points dropped.
std::vector<size_t> convex_hull_ccw(const std::vector<Coord>& pts) {
  std::vector<size_t> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return coord_cmp(pts[a], pts[b]) < 0;
  });
  auto build = [&](auto begin, auto end) {
    std::vector<size_t> chain;
    for (auto it = begin; it != end; ++it) {
      while (chain.size() >= 2 &&
             orient_c(pts[chain[chain.size() - 2]], pts[chain.back()],
                      pts[*it]) != Orient::CCW)
        chain.pop_back();
      chain.push_back(*it);
    }
    return chain;
  };
  std::vector<size_t> lower = build(order.begin(), order.end());
  std::vector<size_t> upper = build(order.rbegin(), order.rend());
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

}  // namespace

Polygon Polygon::from_points(const LatticeSpec& spec,
                             std::vector<LatticePoint> points) {
  if (points.size() < 3)
    throw not_strictly_convex("a polygon needs at least 3 vertices");
  std::vector<Coord> coords;
  coords.reserve(points.size());
  for (const auto& p : points) coords.push_back(spec.coordinate(p));
  for (size_t i = 0; i < coords.size(); ++i)
    for (size_t j = i + 1; j < coords.size(); ++j)
      if (coord_cmp(coords[i], coords[j]) == 0)
        throw not_strictly_convex("duplicate coordinates among vertices");
  std::vector<size_t> hull = convex_hull_ccw(coords);
  if (hull.size() != points.size())
    throw not_strictly_convex(
        "points are not in strictly convex position (hull has " +
        std::to_string(hull.size()) + " of " + std::to_string(points.size()) +
        " vertices)");
  std::vector<LatticePoint> vs;
  std::vector<Coord> cs;
  for (size_t i : hull) {
    vs.push_back(points[i]);
    cs.push_back(coords[i]);
  }
  return Polygon(spec, std::move(vs), std::move(cs));
}

bool is_convex_position(const LatticeSpec& spec,
                        const std::vector<LatticePoint>& points) {
  try {
    Polygon::from_points(spec, points);
    return true;
  } catch (const not_strictly_convex&) {
    return false;
  }
}

EdgeType classify_edge(const Polygon& poly, size_t edge) {
  size_t n = poly.size();
  size_t i = edge % n;
  size_t j = (i + 1) % n;
  size_t w = (i + 2) % n;  // any non-edge vertex works; convexity makes them agree
  // orient the edge so that x(u) < x(v), or y(u) < y(v) for vertical edges
  Ordering cx = poly.x(i).cmp(poly.x(j));
  bool swap = cx == Ordering::Greater ||
              (cx == Ordering::Equal && poly.y(i).cmp(poly.y(j)) == Ordering::Greater);
  size_t u = swap ? j : i;
  size_t v = swap ? i : j;
  Ordering dx = poly.x(u).cmp(poly.x(v));
  Ordering dy = poly.y(u).cmp(poly.y(v));
  Orient side = orient_coords(poly.x(u), poly.y(u), poly.x(v), poly.y(v),
                              poly.x(w), poly.y(w));
  bool left = side == Orient::CCW;
  if (dx == Ordering::Equal) return left ? EdgeType::IV : EdgeType::III;
  if (dy == Ordering::Equal) return left ? EdgeType::III : EdgeType::II;
  if (dy == Ordering::Greater)  // y decreases left to right: negative slope
    return left ? EdgeType::III : EdgeType::I;
  return left ? EdgeType::IV : EdgeType::II;
}

std::array<int, 4> edge_type_counts(const Polygon& poly) {
  std::array<int, 4> counts{0, 0, 0, 0};
  for (size_t e = 0; e < poly.size(); ++e)
    ++counts[(size_t)classify_edge(poly, e)];
  return counts;
}

namespace {

// crossing of the polygon boundary with one lattice row; either exactly at a
// vertex column (tracked by index, no arithmetic) or a computed coordinate
struct Cross {
  bool exact;
  long u = 0;
  Scalar x{0L};
};

int cross_cmp(const Axis& xaxis, const Cross& a, const Cross& b) {
  if (a.exact && b.exact) return ordering_sign(xaxis.value_cmp(a.u, b.u));
  if (a.exact) return ordering_sign(xaxis.value_cmp(a.u, b.x));
  if (b.exact) return -ordering_sign(xaxis.value_cmp(b.u, a.x));
  return ordering_sign(a.x.cmp(b.x));
}

}  // namespace

EmptinessCertificate is_empty_polygon(const Polygon& poly) {
  const LatticeSpec& spec = poly.spec();
  const Axis& X = spec.xaxis();
  const Axis& Y = spec.yaxis();
  const auto& vs = poly.vertices();
  size_t n = vs.size();

  EmptinessCertificate cert;
  long bits_before = max_precision_used();

  // rows whose coordinate lies in the hull's y-range
  IndexRange rows;
  {
    size_t imin = 0, imax = 0;
    for (size_t i = 1; i < n; ++i) {
      if (Y.value_cmp(vs[i].v, vs[imin].v) == Ordering::Less) imin = i;
      if (Y.value_cmp(vs[i].v, vs[imax].v) == Ordering::Greater) imax = i;
    }
    if (Y.kind() == Axis::Kind::Power) {
      rows = IndexRange{vs[imin].v, vs[imax].v};
    } else {
      rows = Y.indices_in(Y.value(vs[imin].v), Y.value(vs[imax].v), false,
                          false);
    }
  }

  auto is_vertex_coord = [&](long u, long v) {
    for (const auto& p : vs) {
      if (X.value_cmp(u, p.u) == Ordering::Equal &&
          Y.value_cmp(v, p.v) == Ordering::Equal)
        return true;
    }
    return false;
  };

  for (long v = rows.lo; v <= rows.hi; ++v) {
    ++cert.rows_swept;
    std::vector<Cross> crossings;
    for (size_t i = 0; i < n; ++i) {
      size_t j = (i + 1) % n;
      Ordering ci = Y.value_cmp(v, vs[i].v);
      Ordering cj = Y.value_cmp(v, vs[j].v);
      if (ci == Ordering::Equal) crossings.push_back({true, vs[i].u});
      if (cj == Ordering::Equal) continue;  // handled as endpoint of edge j
      if (ci == Ordering::Equal) continue;
      if (ci == cj) continue;  // row does not cross this edge
      // strict crossing: interpolate along the edge
      Scalar yi = Y.value(vs[i].v), yj = Y.value(vs[j].v);
      Scalar xi = X.value(vs[i].u), xj = X.value(vs[j].u);
      Scalar t = (Y.value(v) - yi) / (yj - yi);
      crossings.push_back({false, 0, xi + (xj - xi) * t});
    }
    if (crossings.empty()) continue;
    size_t lo = 0, hi = 0;
    for (size_t k = 1; k < crossings.size(); ++k) {
      if (cross_cmp(X, crossings[k], crossings[lo]) < 0) lo = k;
      if (cross_cmp(X, crossings[k], crossings[hi]) > 0) hi = k;
    }
    // columns with coordinate inside the closed x-interval of this row
    IndexRange cols;
    const Cross& cl = crossings[lo];
    const Cross& ch = crossings[hi];
    if (X.kind() == Axis::Kind::Power && cl.exact && ch.exact) {
      cols = IndexRange{cl.u, ch.u};
    } else {
      Scalar xlo = cl.exact ? X.value(cl.u) : cl.x;
      Scalar xhi = ch.exact ? X.value(ch.u) : ch.x;
      cols = X.indices_in(xlo, xhi, false, false);
    }
    for (long u = cols.lo; u <= cols.hi; ++u) {
      if (!is_vertex_coord(u, v)) {
        cert.empty = false;
        cert.witness = LatticePoint{u, v};
        cert.precision_bits = std::max(max_precision_used(), bits_before);
        return cert;
      }
    }
  }
  cert.empty = true;
  cert.precision_bits = std::max(max_precision_used(), bits_before);
  return cert;
}

}  // namespace helly
