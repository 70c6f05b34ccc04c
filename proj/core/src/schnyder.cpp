#include "rookdraw/schnyder.hpp"

#include <algorithm>
#include <queue>

#include "rookdraw/canonical.hpp"
#include "rookdraw/verify.hpp"

namespace rookdraw {

long long BarycentricRep::max_entry() const {
  long long m = 0;
  for (const auto& t : coords)
    for (long long x : t) m = std::max(m, x);
  return m;
}

namespace {

// Realizer from the canonical ordering: when vk lands on c_l..c_r, the edge
// to c_l goes to the tree of root v1, the edge to c_r to the tree of root
// v2, and each middle predecessor is covered by vk in the tree of root vn.
struct Realizer {
  int roots[3];                        // a1 = vn, a2 = v1, a3 = v2
  std::vector<std::array<int, 3>> parent;  // -1 when absent (roots, outer)
};

Realizer build_realizer(const PlanarEmbedding& emb, const CanonicalOrder& co) {
  int n = emb.n;
  Realizer r;
  r.parent.assign(n, {-1, -1, -1});
  int v1 = co.order[0], v2 = co.order[1], vn = co.order[n - 1];
  r.roots[0] = vn;
  r.roots[1] = v1;
  r.roots[2] = v2;
  for (int k = 3; k <= n; ++k) {
    int v = co.order[k - 1];
    const auto& arc = co.preds[k - 1];
    r.parent[v][1] = arc.front();
    r.parent[v][2] = arc.back();
    for (size_t i = 1; i + 1 < arc.size(); ++i) r.parent[arc[i]][0] = v;
  }
  return r;
}

std::vector<int> tree_path(const Realizer& r, int v, int tree) {
  std::vector<int> path{v};
  int cur = v;
  while (cur != r.roots[tree]) {
    cur = r.parent[cur][tree];
    if (cur < 0) throw GraphError("schnyder_rep: broken realizer path");
    path.push_back(cur);
  }
  return path;
}

}  // namespace

BarycentricRep schnyder_rep(const PlanarEmbedding& emb) {
  if (emb.n < 3 || !emb.is_triangulated())
    throw GraphError("schnyder_rep: input must be a triangulation");
  int n = emb.n;
  CanonicalOrder co = canonical_order(emb);
  Realizer real = build_realizer(emb, co);

  BarycentricRep rep;
  rep.c = n - 1;
  rep.coords.assign(n, {0, 0, 0});

  // Outer vertices take the extreme triples.
  for (int i = 0; i < 3; ++i) {
    int a = real.roots[i];
    rep.coords[a][i] = n - 2;
    rep.coords[a][(i + 1) % 3] = 1;
    rep.coords[a][(i + 2) % 3] = 0;
  }

  std::vector<char> outer(n, 0);
  for (int i = 0; i < 3; ++i) outer[real.roots[i]] = 1;

  for (int v = 0; v < n; ++v) {
    if (outer[v]) continue;
    std::array<std::vector<int>, 3> paths;
    std::vector<char> on_path(n, 0);
    for (int t = 0; t < 3; ++t) {
      paths[t] = tree_path(real, v, t);
      for (size_t i = 1; i < paths[t].size(); ++i) {
        if (on_path[paths[t][i]])
          throw GraphError("schnyder_rep: realizer paths intersect");
        on_path[paths[t][i]] = 1;
      }
    }
    // p_i(v) = |{vertices strictly inside region i}| + |P_{i+1}(v)| - 1,
    // where region i is bounded by P_{i-1}, P_{i+1} and the root edge, and
    // lies opposite root a_i.
    for (int i = 0; i < 3; ++i) {
      int ia = (i + 2) % 3, ib = (i + 1) % 3;
      std::vector<char> on_cycle(n, 0);
      for (int u : paths[ia]) on_cycle[u] = 1;
      for (int u : paths[ib]) on_cycle[u] = 1;
      // Components of G minus the bounding cycle; inside = not reaching a_i.
      std::vector<int> comp(n, -1);
      int nc = 0;
      for (int s = 0; s < n; ++s) {
        if (on_cycle[s] || comp[s] >= 0) continue;
        std::queue<int> q;
        q.push(s);
        comp[s] = nc;
        while (!q.empty()) {
          int u = q.front();
          q.pop();
          for (int w : emb.rotations[u])
            if (!on_cycle[w] && comp[w] < 0) {
              comp[w] = nc;
              q.push(w);
            }
        }
        ++nc;
      }
      long long inside = 0;
      int root_comp = comp[real.roots[i]];
      for (int u = 0; u < n; ++u)
        if (!on_cycle[u] && comp[u] != root_comp) ++inside;
      rep.coords[v][i] =
          inside + static_cast<long long>(paths[ib].size()) - 1;
    }
    long long sum = rep.coords[v][0] + rep.coords[v][1] + rep.coords[v][2];
    if (sum != rep.c) throw GraphError("schnyder_rep: region counts off");
  }

  for (int v = 0; v < n; ++v)
    for (long long x : rep.coords[v])
      if (x < 0 || x > n - 2)
        throw GraphError("schnyder_rep: entry out of [0, n-2]");

  CheckReport chk = check_weak_barycentric(rep, emb);
  if (!chk.pass)
    throw GraphError("schnyder_rep: weak barycentric check failed: " +
                     chk.detail);
  return rep;
}

BarycentricRep twist(const BarycentricRep& rep, long long N) {
  if (N < 1 + rep.max_entry())
    throw GraphError("twist: N below 1 + max entry");
  BarycentricRep out;
  out.c = N * rep.c + rep.c;
  out.coords.resize(rep.coords.size());
  for (size_t v = 0; v < rep.coords.size(); ++v)
    for (int i = 0; i < 3; ++i)
      out.coords[v][i] = N * rep.coords[v][i] + rep.coords[v][(i + 1) % 3];
  return out;
}

Drawing nonaligned_schnyder_drawing(const PlanarEmbedding& emb) {
  BarycentricRep rep = schnyder_rep(emb);
  long long n = emb.n;
  BarycentricRep twisted = twist(rep, n - 1);

  Drawing d = drawing_for(emb);
  for (int v = 0; v < emb.n; ++v)
    d.coords[v] = Pt(twisted.coords[v][0], twisted.coords[v][1]);
  d.algo = "schnyder";
  d.update_grid_meta();
  return d;
}

}  // namespace rookdraw
