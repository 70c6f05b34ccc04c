#pragma once

#include "rookdraw/drawing.hpp"
#include "rookdraw/hitting.hpp"
#include "rookdraw/triangles.hpp"

namespace rookdraw {

// Intermediate artifacts of the rook-with-bends pipeline, kept around for
// inspection and testing.
struct PipelineRun {
  HittingSet hitting;
  PlanarEmbedding g1;  // subdivided and re-triangulated
  std::vector<std::pair<Edge, int>> subdivision_vertices;
  Drawing base;         // extend_bbm output for G1 - e_o
  Drawing fractional;   // renormalized, originals on integers
  Drawing moved;        // subdivision vertices on neighbor grid lines
  Drawing result;       // final rook drawing with bends
};

// Full pipeline: hitting set (best of recursive / min-weight over the three
// outer edges) -> subdivide -> extend_bbm -> renormalize -> per-vertex move
// -> bends (straightened when planarity allows) -> route e_o along column 1
// and row 1. Bend count <= min{f_G, (2n-5)/3}.
PipelineRun rook_with_bends(const PlanarEmbedding& emb);

}  // namespace rookdraw
