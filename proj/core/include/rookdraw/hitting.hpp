#pragma once

#include <set>

#include "rookdraw/matching.hpp"
#include "rookdraw/planar_graph.hpp"

namespace rookdraw {

// Edge set hitting every filled triangle, independent (at most one edge per
// face), with one designated outer edge.
struct HittingSet {
  std::set<Edge> edges;  // E_f
  Edge outer_edge;       // e_o, on the outer face
  std::set<Edge> interior() const {  // E_s
    std::set<Edge> s = edges;
    s.erase(outer_edge);
    return s;
  }
};

// Recursive construction over maximal separating triangles with skeleton
// dual matchings: |E_f| <= f_G, every filled triangle hit exactly once,
// the prescribed outer edge included.
HittingSet recursive_hitting_set(const PlanarEmbedding& emb, Edge e_o);

// Weight-1 edges of a minimum-weight dual perfect matching with e_o forced;
// |E_f| <= (2n-5)/3 certified for the best outer-edge choice.
HittingSet min_weight_hitting_set(const PlanarEmbedding& emb, Edge e_o);

// Validates hitting + independence by enumeration; throws on violation.
void assert_hitting_set(const PlanarEmbedding& emb, const HittingSet& hs);

}  // namespace rookdraw
