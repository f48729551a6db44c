#pragma once

#include "helly/geometry.hpp"

#include <optional>
#include <string>

namespace helly {

struct window_too_large : std::runtime_error {
  explicit window_too_large(const std::string& what)
      : std::runtime_error(what) {}
};

enum class Algorithm { Naive, DP };

struct SearchConfig {
  Window window;
  Algorithm algorithm = Algorithm::DP;
  int jobs = 1;
  long naive_point_cap = 49;
  // relabels every exponent before searching; the outcome must not change
  long u_shift = 0;
  long v_shift = 0;
  double time_budget_sec = 0;  // 0 = unlimited
};

struct SearchResult {
  std::optional<Polygon> best;  // none for degenerate windows
  long cardinality = 0;
  long candidates_examined = 0;
  double elapsed_sec = 0;
  bool optimal = true;  // false when the time budget cut the search short
  EmptinessCertificate certificate;
};

// Maximum-cardinality subset of the window in strictly convex position whose
// closed hull contains no other lattice point.  Window emptiness equals
// lattice emptiness here: interior coordinates are bounded by hull
// coordinates, so interior exponents stay inside the window.
SearchResult max_empty_polygon(const LatticeSpec& spec,
                               const SearchConfig& cfg);

// true iff Naive and DP agree on cardinality and (tie-broken) vertex list.
bool cross_validate(const LatticeSpec& spec, const Window& window);

}  // namespace helly
