#pragma once

#include <string>

#include "rookdraw/geometry.hpp"
#include "rookdraw/planar_graph.hpp"

namespace rookdraw {

struct DrawnEdge {
  int u = 0, v = 0;
  std::vector<Pt> bends;  // ordered from u to v
};

struct Drawing {
  std::vector<Pt> coords;  // indexed by vertex id
  std::vector<DrawnEdge> edges;
  long long width = 0, height = 0;  // declared grid (bounding box)
  std::string algo;

  int n() const { return static_cast<int>(coords.size()); }
  int bend_count() const;

  // Polyline of an edge: coords[u], bends..., coords[v].
  std::vector<Pt> polyline(const DrawnEdge& e) const;

  // Sets width/height from the vertex bounding box (ceiled for rationals).
  void update_grid_meta();
};

// Straight-line drawing skeleton for all edges of an embedding.
Drawing drawing_for(const PlanarEmbedding& emb);

// Removes the given edges from the drawing (used to delete triangulation
// helper edges after drawing).
void remove_edges(Drawing& d, const std::vector<Edge>& edges);

}  // namespace rookdraw
