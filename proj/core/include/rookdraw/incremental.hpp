#pragma once

#include "rookdraw/canonical.hpp"
#include "rookdraw/drawing.hpp"

namespace rookdraw {

enum class IncMode { DistinctX, NonAligned };

struct PlacementStep {
  int k = 0;        // prefix size after this insertion
  int vertex = -1;  // v_k
  int c_left = -1, c_right = -1;
  std::vector<int> chain;  // outer chain of G_k, from v1 to v2
};

struct PlacementTrace {
  IncMode mode = IncMode::DistinctX;
  std::vector<PlacementStep> steps;
};

struct IncrementalResult {
  Drawing drawing;
  PlacementTrace trace;
  CanonicalOrder order;
  std::vector<int> x_assign;  // x[v] in 1..n
};

// Edge orientation induced by the canonical order (v_k -> c_r, all other
// predecessor edges toward v_k) followed by the lexicographically smallest
// topological order; x(v1) = 1, x(v2) = n.
std::vector<int> orient_and_xorder(const PlanarEmbedding& emb,
                                   const CanonicalOrder& co);

// Width-n drawing with x-coordinates precomputed as a permutation of 1..n;
// each vertex takes the lowest row from which it sees all predecessors.
// Height at most 2 + (n-2)(n-3).
IncrementalResult distinct_x_drawing(const PlanarEmbedding& emb);

// Same construction but rows already holding a vertex are skipped, making
// the drawing non-aligned. Height at most 2 + (n-1)(n-2)^2 / 2.
IncrementalResult nonaligned_incremental_drawing(const PlanarEmbedding& emb);

struct PartialDrawing {
  const std::vector<Pt>& coords;
  const std::vector<char>& placed;
  const std::vector<std::pair<int, int>>& edges;  // among placed vertices
};

// Exact test: the segment from p to the target vertex meets no placed
// vertex in its interior and no placed edge except at the shared endpoint.
bool visible(const Pt& p, int target, const PartialDrawing& st);

}  // namespace rookdraw
