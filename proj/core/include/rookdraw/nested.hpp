#pragma once

#include <optional>

#include "rookdraw/drawing.hpp"
#include "rookdraw/planar_graph.hpp"

namespace rookdraw {

// k nested triangles {u_i, v_i, w_i} joined by the three chains u_1..u_k,
// v_1..v_k, w_1..w_k, outer face {u_1, v_1, w_1}; each quadrilateral face
// between consecutive rings may carry one diagonal.
struct NestedTriangleGraph {
  int k = 0;
  std::vector<int> u, v, w;        // chains, vertex ids of the embedding
  std::vector<Edge> diagonals;     // subset of quad-face diagonals
  PlanarEmbedding emb;
};

// Closed-form placement u_i -> (i, i), v_i -> (3k+1-i, k+i),
// w_i -> (k+i, 4k+1-2i) on an n x (4n/3 - 1) grid. If the input carries the
// diagonal (v_{k-1}, w_k), the v- and w-chains are swapped first so that the
// flat angle at v_k stays edge-free.
Drawing draw_nested(const NestedTriangleGraph& g);

// Chain decomposition of an embedding when it is a nested-triangle graph
// (under some labeling); deterministic, smallest-id labeling preferred.
std::optional<NestedTriangleGraph> recognize_nested(const PlanarEmbedding& emb);

}  // namespace rookdraw
