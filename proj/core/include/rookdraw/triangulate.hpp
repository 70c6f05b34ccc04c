#pragma once

#include "rookdraw/planar_graph.hpp"

namespace rookdraw {

struct TriangulationResult {
  PlanarEmbedding emb;
  std::vector<Edge> added_edges;
};

// Adds chords until every face (outer included) is a triangle. The input is
// a subgraph of the result; added edges are recorded so drawings of the
// triangulation can be restricted back to the original graph.
//
// Chord choice is deterministic: fan from the lowest-id vertex of the face,
// advancing to the next vertex along the face when a fan chord would
// duplicate an existing edge; if no full fan applies, the first valid chord
// (in scan order) splits the face and the parts are retried.
TriangulationResult triangulate(const PlanarEmbedding& emb);

}  // namespace rookdraw
