#pragma once

#include "helly/lattice.hpp"

#include <array>
#include <optional>
#include <vector>

namespace helly {

enum class Orient { CW, Collinear, CCW };

enum class EdgeType { I, II, III, IV };

struct not_strictly_convex : std::runtime_error {
  explicit not_strictly_convex(const std::string& what)
      : std::runtime_error(what) {}
};

Orient orient_coords(const Scalar& ax, const Scalar& ay, const Scalar& bx,
                     const Scalar& by, const Scalar& cx, const Scalar& cy);

Orient orient(const LatticeSpec& spec, const LatticePoint& p,
              const LatticePoint& q, const LatticePoint& r);

// true iff the points are all vertices of their convex hull with no three
// collinear; order-insensitive, needs >= 3 points
bool is_convex_position(const LatticeSpec& spec,
                        const std::vector<LatticePoint>& points);

struct EmptinessCertificate {
  bool empty = false;
  std::optional<LatticePoint> witness;
  long rows_swept = 0;
  long precision_bits = 0;
};

// Strictly convex polygon with vertices on a lattice, stored counterclockwise.
class Polygon {
 public:
  // orders the points counterclockwise; throws not_strictly_convex unless the
  // points are in strictly convex position
  static Polygon from_points(const LatticeSpec& spec,
                             std::vector<LatticePoint> points);

  const LatticeSpec& spec() const { return spec_; }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  size_t size() const { return vertices_.size(); }
  const Scalar& x(size_t i) const { return coords_[i].first; }
  const Scalar& y(size_t i) const { return coords_[i].second; }

 private:
  Polygon(LatticeSpec spec, std::vector<LatticePoint> vs,
          std::vector<std::pair<Scalar, Scalar>> cs)
      : spec_(std::move(spec)),
        vertices_(std::move(vs)),
        coords_(std::move(cs)) {}
  LatticeSpec spec_;
  std::vector<LatticePoint> vertices_;
  std::vector<std::pair<Scalar, Scalar>> coords_;
};

// type of edge i (from vertex i to vertex i+1 mod n)
EdgeType classify_edge(const Polygon& poly, size_t edge);
std::array<int, 4> edge_type_counts(const Polygon& poly);

// row-sweep emptiness test against the full (infinite) lattice; closed-hull
// semantics, so a boundary lattice point that is not a vertex is a witness
EmptinessCertificate is_empty_polygon(const Polygon& poly);

}  // namespace helly
