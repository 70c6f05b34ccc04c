#pragma once

#include <map>

#include "rookdraw/planar_graph.hpp"

namespace rookdraw {

// Dual of a triangulated embedding: one node per face, one link per primal
// edge; link weight 1 iff the primal edge belongs to a filled triangle.
struct DualGraph {
  int nodes = 0;
  std::vector<std::vector<int>> faces;  // face id -> vertex cycle
  std::vector<std::pair<int, int>> links;
  std::vector<Edge> primal;    // links[i] is the dual of primal[i]
  std::vector<int> weight;     // 0/1
  int outer_node = -1;

  std::vector<std::vector<int>> adjacency() const;  // node -> link ids
};

DualGraph build_dual(const PlanarEmbedding& emb);

// Perfect matching of a 3-regular bridgeless graph (Petersen), as link ids.
// Throws if none exists.
std::vector<int> perfect_matching(const DualGraph& dual);

// Returns a perfect matching containing link e_star whose symmetric
// difference with m is a single m-alternating cycle through e_star
// (or m itself when e_star is already matched).
std::vector<int> force_edge_in_matching(const DualGraph& dual,
                                        const std::vector<int>& m, int e_star);

// Minimum-weight perfect matching under the 0/1 link weights, with the
// given link forced into the matching.
std::vector<int> min_weight_perfect_matching_forced(const DualGraph& dual,
                                                    int forced_link);

// All perfect matchings (small duals only; test oracle and fallback).
std::vector<std::vector<int>> enumerate_perfect_matchings(const DualGraph& dual,
                                                          size_t limit = 1 << 20);

}  // namespace rookdraw
