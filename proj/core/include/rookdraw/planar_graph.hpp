#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rookdraw {

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by the RI-drawing search when no certified drawing was found.
// Callers must treat this as "no output", never as a silently bad drawing.
struct ConstructionNotFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

// Combinatorial planar graph: a rotation system (counterclockwise neighbor
// order per vertex) plus a designated outer face. The outer face is stored
// in face-traversal order, which for CCW rotations walks the unbounded face
// clockwise.
struct PlanarEmbedding {
  int n = 0;
  std::vector<std::vector<int>> rotations;
  std::vector<int> outer_face;

  int degree(int v) const { return static_cast<int>(rotations[v].size()); }
  int edge_count() const;
  bool has_edge(int u, int v) const;

  // Neighbor preceding / following u in the CCW rotation at v.
  int rot_prev(int v, int u) const;
  int rot_next(int v, int u) const;

  // Throws GraphError unless the rotation system describes a simple,
  // connected plane graph whose face traversal satisfies Euler's formula
  // and whose designated outer face is one of the traversed faces.
  void validate() const;

  bool is_triangulated() const;
};

// All faces of the embedding as cyclic vertex sequences (each directed edge
// appears in exactly one face). Throws GraphError on an Euler violation
// ("not a planar embedding").
std::vector<std::vector<int>> compute_faces(const PlanarEmbedding& emb);

// True if a and b are the same cyclic sequence (up to rotation).
bool same_cycle(const std::vector<int>& a, const std::vector<int>& b);

// The two faces incident to edge (u,v), each reported as the third vertex
// of the triangle when the graph is triangulated.
std::pair<int, int> triangle_faces_of_edge(const PlanarEmbedding& emb, int u,
                                           int v);

}  // namespace rookdraw
