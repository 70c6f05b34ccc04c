#pragma once

#include "rookdraw/drawing.hpp"
#include "rookdraw/planar_graph.hpp"

namespace rookdraw {

// Rook RI-drawing of emb - e for a 4-connected triangulation with e on the
// outer face: n x n grid, ends of e at (1,n) and (n,1), the remaining two
// outer vertices of emb - e at (2,2) and (n-1,n-1), open weak RI property.
// The construction is a certified search; every returned drawing has passed
// check_planar, check_ri, check_rook and the corner conditions. Throws
// ConstructionNotFound when the search budget is exhausted.
Drawing bbm_drawing(const PlanarEmbedding& emb, Edge e);

// Same contract for triangulations whose separating triangles all contain
// e: recursion over the maximal separating triangle on e, pasting a
// scaled-down inner drawing into (1,2] x (1,2] at the shared vertex.
Drawing extend_bbm(const PlanarEmbedding& emb, Edge e);

// Order-preserving re-coordinatization: vertices with integer_set[v] get
// consecutive integers 1..k in each axis order, the others land strictly
// between, stepping by 1/(#non-integer + 1). Requires pairwise-distinct
// coordinates per axis.
Drawing renormalize(const Drawing& d, const std::vector<char>& integer_set);

struct MoveReport {
  int target_local_col = 0;  // 2 or 4
  // Appendix-B containment facts, asserted individually.
  bool r_u3_contained = false;   // R(u3,x') inside R(u3,x)
  bool r_u4_contained = false;   // R(x',u4) inside R(u3,u4)
  bool r_u2_contained = false;   // R(x',u2) inside R(u1,u2)
  bool r_u1_covered = false;     // R(x',u1) inside R1 u R2 u R3 (u R4)
};

// Moves a degree-4 interior vertex whose neighbors form a 4-cycle (no two
// of the five sharing a grid line) onto grid lines of its neighbors: local
// position (2,2) when vacant, else (4,2). Planarity and the RI property are
// re-certified on the result.
std::pair<Drawing, MoveReport> move_subdivision_vertex(const Drawing& d,
                                                       int x_e);

// Rook drawing with a single bend: bbm positions plus e routed
// (1,n) -> (1,1) -> (n,1).
Drawing one_bend_rook(const PlanarEmbedding& emb);

// Straight-line non-aligned drawings from the same base drawing by
// stretching: n x (n^2-3n+4), and (2n-2) x (2n-2).
Drawing stretch_tall(const PlanarEmbedding& emb);
Drawing stretch_square(const PlanarEmbedding& emb);

// The outer edge the one-bend/stretch constructions remove, chosen
// deterministically (smallest endpoint pair).
Edge default_outer_edge(const PlanarEmbedding& emb);

}  // namespace rookdraw
