#pragma once

#include <array>
#include <optional>
#include <set>

#include "rookdraw/planar_graph.hpp"

namespace rookdraw {

struct Triangle {
  std::array<int, 3> v;  // sorted ascending
  bool facial = false;
  bool filled = false;      // at least one vertex strictly inside
  bool separating = false;  // vertices strictly inside and strictly outside
  std::vector<int> inside;  // vertices strictly inside, sorted

  std::array<Edge, 3> edges() const {
    return {make_edge(v[0], v[1]), make_edge(v[0], v[2]),
            make_edge(v[1], v[2])};
  }
};

struct TriangleReport {
  std::vector<Triangle> triangles;
  int filled_count = 0;  // f_G
  std::set<Edge> filled_edges;
  bool four_connected = false;  // triangulated input: no separating triangle
};

// Classifies every 3-cycle of a triangulated embedding combinatorially:
// "inside" is the side of the triangle not containing the outer face.
TriangleReport classify_triangles(const PlanarEmbedding& emb);

struct SplitResult {
  PlanarEmbedding inside;   // T plus its interior; outer face T
  PlanarEmbedding outside;  // emb minus the interior of T
  std::vector<int> inside_to_orig;
  std::vector<int> outside_to_orig;
};

// Splits at a separating triangle T. Throws if T is not separating.
SplitResult split_at_triangle(const PlanarEmbedding& emb,
                              const std::array<int, 3>& T);

struct SubdivisionResult {
  PlanarEmbedding emb;                // G1
  std::vector<std::pair<Edge, int>> subdivision_vertices;  // e -> x_e
};

// Replaces each edge e = (a,b) of E_s by a path a-x-b and re-triangulates by
// connecting x to the apexes of the two faces at e. Requires every edge
// interior and E_s independent (no face contains two E_s edges).
SubdivisionResult subdivide_and_retriangulate(const PlanarEmbedding& emb,
                                              const std::set<Edge>& e_s);

// Induced sub-embedding on `keep` (rotation order preserved) with vertex
// relabeling to 0..keep.size()-1; outer face must be supplied by the caller
// as original ids forming a face of the result.
std::pair<PlanarEmbedding, std::vector<int>> induced_embedding(
    const PlanarEmbedding& emb, const std::vector<int>& keep,
    const std::vector<int>& outer_orig);

}  // namespace rookdraw
