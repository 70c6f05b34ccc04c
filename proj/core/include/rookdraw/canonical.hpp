#pragma once

#include "rookdraw/planar_graph.hpp"

namespace rookdraw {

// Canonical ordering v1..vn of a triangulated plane graph: {v1,v2,vn} is the
// outer face, every prefix induces a 2-connected graph, and each vk (k >= 3)
// attaches to a contiguous arc of the outer face of the previous prefix.
struct CanonicalOrder {
  std::vector<int> order;  // order[k-1] = vk
  std::vector<int> rank;   // rank[v] = k (1-based)

  // preds[k-1] for k >= 3: neighbors of vk on the outer face of G_{k-1},
  // listed clockwise from the leftmost predecessor c_l to the rightmost c_r.
  std::vector<std::vector<int>> preds;

  int c_left(int k) const { return preds[k - 1].front(); }
  int c_right(int k) const { return preds[k - 1].back(); }
};

// Deterministic: v1 is the smallest-id outer vertex, v2 its clockwise
// predecessor on the outer face, and among removable vertices the smallest
// id is peeled first.
CanonicalOrder canonical_order(const PlanarEmbedding& emb);

}  // namespace rookdraw
