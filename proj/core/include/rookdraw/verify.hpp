#pragma once

#include <optional>

#include "rookdraw/drawing.hpp"
#include "rookdraw/incremental.hpp"
#include "rookdraw/planar_graph.hpp"
#include "rookdraw/schnyder.hpp"

namespace rookdraw {

struct CheckReport {
  bool pass = true;
  std::string check;
  std::string detail;  // first counterexample when failing

  static CheckReport ok(std::string name) { return {true, std::move(name), ""}; }
  static CheckReport fail(std::string name, std::string why) {
    return {false, std::move(name), std::move(why)};
  }
};

// Exact poly-line planarity: segments may meet only at shared endpoints and
// no vertex lies in the relative interior of any segment.
CheckReport check_planar(const Drawing& d);

// Open weak rectangle-of-influence property for straight-line drawings: the
// open axis-aligned rectangle spanned by each edge contains no third vertex.
CheckReport check_ri(const Drawing& d);

// No two vertices share a row or a column (bend points are exempt).
CheckReport check_non_aligned(const Drawing& d);

// Non-aligned with x- and y-coordinates both permutations of 1..n.
CheckReport check_rook(const Drawing& d, int n);

// Coordinates within [1, width] x [1, height] and the declared grid equals
// the bounding box.
CheckReport check_grid(const Drawing& d);

CheckReport check_weak_barycentric(const BarycentricRep& rep,
                                   const PlanarEmbedding& emb);

// Outer-chain slopes after each insertion stay within s(k) = k-3 resp.
// s'(k) = (k-1)(k-2)/2, and each chosen row satisfies the per-step bound.
CheckReport check_slope_bound(const Drawing& d, const PlacementTrace& trace);

// Brute-force oracle for small instances: a straight-line rook drawing of
// the graph with up to `allow_bends` single-bend edges, if one exists.
std::optional<Drawing> exhaustive_rook_search(const PlanarEmbedding& emb,
                                              int allow_bends);

}  // namespace rookdraw
