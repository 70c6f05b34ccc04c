#pragma once

#include <array>

#include "rookdraw/drawing.hpp"
#include "rookdraw/planar_graph.hpp"

namespace rookdraw {

// Per-vertex triples of nonnegative integers with constant sum c, injective,
// and satisfying the weak barycentric edge condition (subscripts mod 3):
// for each edge (u,v) and vertex z outside it there is a k with
// (p_k(u), p_{k+1}(u)) <lex (p_k(z), p_{k+1}(z)) and likewise for v.
struct BarycentricRep {
  std::vector<std::array<long long, 3>> coords;
  long long c = 0;

  long long max_entry() const;
};

// Realizer-based construction: c = n-1, entries in [0, n-2], the three outer
// vertices at the permutations of (n-2, 1, 0). Verified against the weak
// barycentric conditions before returning.
BarycentricRep schnyder_rep(const PlanarEmbedding& emb);

// Scale-and-twist p'_i(v) = N * p_i(v) + p_{i+1}(v). Requires
// N >= 1 + max entry; the result is again a weak barycentric representation
// with constant N*c + c.
BarycentricRep twist(const BarycentricRep& rep, long long N);

// Projection of the twisted representation (N = n-1) to the plane:
// v at (p'_0(v), p'_1(v)), a non-aligned straight-line planar drawing with
// all coordinates in [1, n(n-2)].
Drawing nonaligned_schnyder_drawing(const PlanarEmbedding& emb);

}  // namespace rookdraw
