#pragma once

#include <cstdint>

#include "rookdraw/nested.hpp"
#include "rookdraw/planar_graph.hpp"

namespace rookdraw {

PlanarEmbedding gen_k4();
PlanarEmbedding gen_octahedron();

// Cycle of n-2 vertices with one hub inside and one outside; triangulated
// and 4-connected for n >= 6.
PlanarEmbedding gen_double_wheel(int n);

// Seeded random canonical-order insertion; triangulated plane graph.
PlanarEmbedding gen_random_triangulation(int n, std::uint64_t seed);

// Random stacked triangulation: start from K4, repeatedly stack a vertex
// into a random inner face.
PlanarEmbedding gen_apollonian(int n, std::uint64_t seed);

// Nested-triangle graph with seeded random diagonals.
NestedTriangleGraph gen_nested(int k, std::uint64_t seed);

// Rejection sampling of random triangulations until no separating triangle
// remains.
PlanarEmbedding gen_four_connected(int n, std::uint64_t seed);

// CLI-facing dispatcher; type is one of random-triangulation, apollonian,
// nested, octahedron, double-wheel, four-connected.
PlanarEmbedding generate(const std::string& type, int n_or_k,
                         std::uint64_t seed);

}  // namespace rookdraw
