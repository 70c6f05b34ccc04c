#include "rookdraw/planar_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace rookdraw {

int PlanarEmbedding::edge_count() const {
  int deg_sum = 0;
  for (const auto& r : rotations) deg_sum += static_cast<int>(r.size());
  return deg_sum / 2;
}

bool PlanarEmbedding::has_edge(int u, int v) const {
  const auto& r = rotations[u];
  return std::find(r.begin(), r.end(), v) != r.end();
}

int PlanarEmbedding::rot_prev(int v, int u) const {
  const auto& r = rotations[v];
  auto it = std::find(r.begin(), r.end(), u);
  if (it == r.end()) throw GraphError("rot_prev: no such neighbor");
  return it == r.begin() ? r.back() : *(it - 1);
}

int PlanarEmbedding::rot_next(int v, int u) const {
  const auto& r = rotations[v];
  auto it = std::find(r.begin(), r.end(), u);
  if (it == r.end()) throw GraphError("rot_next: no such neighbor");
  ++it;
  return it == r.end() ? r.front() : *it;
}

std::vector<std::vector<int>> compute_faces(const PlanarEmbedding& emb) {
  // Walk with the face kept to the left of each directed edge: the edge
  // after u->v is v->w with w the clockwise successor of u around v,
  // i.e. the predecessor of u in the CCW rotation.
  std::set<std::pair<int, int>> used;
  std::vector<std::vector<int>> faces;
  for (int u = 0; u < emb.n; ++u) {
    for (int v : emb.rotations[u]) {
      if (used.count({u, v})) continue;
      std::vector<int> face;
      int a = u, b = v;
      do {
        used.insert({a, b});
        face.push_back(a);
        int c = emb.rot_prev(b, a);
        a = b;
        b = c;
      } while (!(a == u && b == v));
      faces.push_back(std::move(face));
    }
  }

  int m = emb.edge_count();
  long long euler = static_cast<long long>(emb.n) - m +
                    static_cast<long long>(faces.size());
  if (euler != 2)
    throw GraphError("not a planar embedding: Euler count " +
                     std::to_string(euler) + " != 2");
  return faces;
}

bool same_cycle(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size() || a.empty()) return false;
  auto it = std::find(b.begin(), b.end(), a[0]);
  if (it == b.end()) return false;
  size_t off = static_cast<size_t>(it - b.begin());
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[(off + i) % b.size()]) return false;
  return true;
}

void PlanarEmbedding::validate() const {
  if (n <= 0 || static_cast<int>(rotations.size()) != n)
    throw GraphError("rotation table size mismatch");
  for (int v = 0; v < n; ++v) {
    std::set<int> seen;
    for (int u : rotations[v]) {
      if (u < 0 || u >= n) throw GraphError("neighbor id out of range");
      if (u == v) throw GraphError("self-loop at vertex " + std::to_string(v));
      if (!seen.insert(u).second)
        throw GraphError("parallel edge at vertex " + std::to_string(v));
    }
  }
  for (int v = 0; v < n; ++v)
    for (int u : rotations[v])
      if (!has_edge(u, v)) throw GraphError("asymmetric adjacency");

  int m = edge_count();
  if (n >= 3 && m > 3 * n - 6) throw GraphError("too many edges for planar");

  // Connectivity.
  std::vector<char> vis(n, 0);
  std::queue<int> q;
  q.push(0);
  vis[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : rotations[v])
      if (!vis[u]) {
        vis[u] = 1;
        ++count;
        q.push(u);
      }
  }
  if (count != n) throw GraphError("graph not connected");

  auto faces = compute_faces(*this);  // throws on Euler violation
  bool found = false;
  for (const auto& f : faces)
    if (same_cycle(outer_face, f)) {
      found = true;
      break;
    }
  if (!found) throw GraphError("outer face does not match any traversed face");
}

bool PlanarEmbedding::is_triangulated() const {
  for (const auto& f : compute_faces(*this))
    if (f.size() != 3) return false;
  return true;
}

std::pair<int, int> triangle_faces_of_edge(const PlanarEmbedding& emb, int u,
                                           int v) {
  if (!emb.has_edge(u, v)) throw GraphError("triangle_faces_of_edge: no edge");
  // Face left of u->v has apex rot_prev(v,u); left of v->u has rot_prev(u,v).
  int a = emb.rot_prev(v, u);
  int b = emb.rot_prev(u, v);
  return {a, b};
}

}  // namespace rookdraw
