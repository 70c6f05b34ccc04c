#include "rookdraw/canonical.hpp"

#include <algorithm>
#include <set>

namespace rookdraw {

CanonicalOrder canonical_order(const PlanarEmbedding& emb) {
  if (emb.n < 3) throw GraphError("canonical_order: need n >= 3");
  if (!emb.is_triangulated())
    throw GraphError("canonical_order: input not triangulated");

  const auto& outer = emb.outer_face;
  int v1 = *std::min_element(outer.begin(), outer.end());
  int pos1 = static_cast<int>(std::find(outer.begin(), outer.end(), v1) -
                              outer.begin());
  int L = static_cast<int>(outer.size());
  int v2 = outer[(pos1 - 1 + L) % L];  // clockwise predecessor of v1

  int n = emb.n;
  std::vector<char> alive(n, 1), on_outer(n, 0);
  std::vector<int> next_cw(n, -1), prev_cw(n, -1), outer_nbrs(n, 0);

  for (int i = 0; i < L; ++i) {
    int a = outer[i], b = outer[(i + 1) % L];
    next_cw[a] = b;
    prev_cw[b] = a;
    on_outer[a] = 1;
  }
  for (int v : outer)
    for (int u : emb.rotations[v])
      if (on_outer[u]) ++outer_nbrs[v];

  auto removable = [&](int v) {
    return on_outer[v] && v != v1 && v != v2 && outer_nbrs[v] == 2;
  };

  std::set<int> candidates;
  for (int v : outer)
    if (removable(v)) candidates.insert(v);

  CanonicalOrder co;
  co.order.assign(n, -1);
  co.rank.assign(n, 0);
  co.preds.assign(n, {});
  co.order[0] = v1;
  co.order[1] = v2;

  for (int k = n; k >= 3; --k) {
    if (candidates.empty())
      throw GraphError("canonical_order: no removable vertex (invalid input)");
    int v = *candidates.begin();
    candidates.erase(candidates.begin());

    int a = prev_cw[v], b = next_cw[v];

    // Alive neighbors of v, CCW from a; they must end at b (contiguity).
    std::vector<int> arc;
    {
      const auto& rot = emb.rotations[v];
      int start = static_cast<int>(std::find(rot.begin(), rot.end(), a) -
                                   rot.begin());
      int deg = static_cast<int>(rot.size());
      for (int t = 0; t < deg; ++t) {
        int u = rot[(start + t) % deg];
        if (!alive[u]) break;
        arc.push_back(u);
        if (u == b) break;
      }
      int alive_deg = 0;
      for (int u : rot)
        if (alive[u]) ++alive_deg;
      if (arc.empty() || arc.front() != a || arc.back() != b ||
          static_cast<int>(arc.size()) != alive_deg)
        throw GraphError("canonical_order: predecessor arc not contiguous");
    }

    alive[v] = 0;
    on_outer[v] = 0;
    candidates.erase(v);

    std::set<int> touched;
    for (int u : emb.rotations[v])
      if (alive[u] && on_outer[u]) {
        --outer_nbrs[u];
        touched.insert(u);
      }

    // Splice the interior fan into the outer cycle.
    for (size_t i = 0; i + 1 < arc.size(); ++i) {
      next_cw[arc[i]] = arc[i + 1];
      prev_cw[arc[i + 1]] = arc[i];
    }
    for (size_t i = 1; i + 1 < arc.size(); ++i) {
      int x = arc[i];
      on_outer[x] = 1;
      outer_nbrs[x] = 0;
      for (int u : emb.rotations[x])
        if (alive[u] && on_outer[u]) ++outer_nbrs[x];
      for (int u : emb.rotations[x])
        if (alive[u] && on_outer[u]) {
          ++outer_nbrs[u];
          touched.insert(u);
        }
      touched.insert(x);
    }

    for (int u : touched) {
      if (!alive[u]) continue;
      if (removable(u))
        candidates.insert(u);
      else
        candidates.erase(u);
    }

    co.order[k - 1] = v;
    co.preds[k - 1] = std::move(arc);
  }

  for (int k = 1; k <= n; ++k) co.rank[co.order[k - 1]] = k;
  return co;
}

}  // namespace rookdraw
