#include "rookdraw/triangulate.hpp"

#include <algorithm>
#include <deque>

namespace rookdraw {

namespace {

// Inserts chord (face[i], face[j]) inside the face and returns the two
// sub-faces. Face order encodes where the chord lives: at a face vertex a
// with face-predecessor p, the new neighbor goes immediately before p in
// the CCW rotation at a.
std::pair<std::vector<int>, std::vector<int>> add_chord(
    PlanarEmbedding& emb, const std::vector<int>& face, int i, int j) {
  int L = static_cast<int>(face.size());
  int a = face[i], b = face[j];
  int pa = face[(i - 1 + L) % L];
  int pb = face[(j - 1 + L) % L];

  auto insert_before = [&](int v, int nbr, int before) {
    auto& rot = emb.rotations[v];
    auto it = std::find(rot.begin(), rot.end(), before);
    rot.insert(it, nbr);
  };
  insert_before(a, b, pa);
  insert_before(b, a, pb);

  std::vector<int> f1, f2;
  for (int t = i; t != j; t = (t + 1) % L) f1.push_back(face[t]);
  f1.push_back(face[j]);
  for (int t = j; t != i; t = (t + 1) % L) f2.push_back(face[t]);
  f2.push_back(face[i]);
  return {std::move(f1), std::move(f2)};
}

bool chord_ok(const PlanarEmbedding& emb, const std::vector<int>& face, int i,
              int j) {
  int L = static_cast<int>(face.size());
  if (i == j) return false;
  int d = (j - i + L) % L;
  if (d == 1 || d == L - 1) return false;  // face edge, not a chord
  int a = face[i], b = face[j];
  if (a == b) return false;
  return !emb.has_edge(a, b);
}

}  // namespace

TriangulationResult triangulate(const PlanarEmbedding& emb) {
  if (emb.n < 3) throw GraphError("triangulate: too small");

  TriangulationResult res;
  res.emb = emb;
  PlanarEmbedding& g = res.emb;

  std::deque<std::vector<int>> work;
  for (auto& f : compute_faces(g))
    if (f.size() > 3) work.push_back(std::move(f));

  while (!work.empty()) {
    std::vector<int> face = std::move(work.front());
    work.pop_front();
    int L = static_cast<int>(face.size());
    if (L <= 3) continue;

    // Full fan from the lowest-id vertex, else from the next one along.
    int minpos = 0;
    for (int t = 1; t < L; ++t)
      if (face[t] < face[minpos]) minpos = t;

    int apex = -1;
    for (int off = 0; off < L && apex < 0; ++off) {
      int t = (minpos + off) % L;
      bool ok = true;
      for (int d = 2; d < L - 1 && ok; ++d)
        ok = chord_ok(g, face, t, (t + d) % L);
      if (ok) apex = t;
    }

    if (apex >= 0) {
      std::vector<int> cur = face;
      int pos = apex;
      while (cur.size() > 3) {
        int Lc = static_cast<int>(cur.size());
        int target = (pos + 2) % Lc;
        res.added_edges.push_back(make_edge(cur[pos], cur[target]));
        auto [tri, rest] = add_chord(g, cur, pos, target);
        (void)tri;
        cur = std::move(rest);
        pos = static_cast<int>(std::find(cur.begin(), cur.end(), face[apex]) -
                               cur.begin());
      }
      continue;
    }

    // No full fan fits; take the first valid chord and retry the parts.
    bool split = false;
    for (int i = 0; i < L && !split; ++i)
      for (int d = 2; d < L - 1 && !split; ++d) {
        int j = (i + d) % L;
        if (!chord_ok(g, face, i, j)) continue;
        res.added_edges.push_back(make_edge(face[i], face[j]));
        auto [f1, f2] = add_chord(g, face, i, j);
        if (f1.size() > 3) work.push_back(std::move(f1));
        if (f2.size() > 3) work.push_back(std::move(f2));
        split = true;
      }
    if (!split)
      throw GraphError("triangulate: no valid chord in a face of size " +
                       std::to_string(L));
  }

  return res;
}

}  // namespace rookdraw
