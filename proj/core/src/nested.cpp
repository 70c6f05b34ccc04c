#include "rookdraw/nested.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace rookdraw {

Drawing draw_nested(const NestedTriangleGraph& g) {
  int k = g.k;
  if (k < 1) throw GraphError("draw_nested: k >= 1 required");

  std::vector<int> vu = g.u, vv = g.v, vw = g.w;
  if (k >= 2 && g.emb.has_edge(vv[k - 2], vw[k - 1])) {
    // Diagonal (v_{k-1}, w_k) present: exchange the chains. Both diagonals
    // of that quad cannot coexist, so the swap always resolves it.
    std::swap(vv, vw);
    if (g.emb.has_edge(vv[k - 2], vw[k - 1]))
      throw GraphError("draw_nested: both diagonals in the top quad");
  }

  Drawing d = drawing_for(g.emb);
  for (int i = 1; i <= k; ++i) {
    d.coords[vu[i - 1]] = Pt(i, i);
    d.coords[vv[i - 1]] = Pt(3 * k + 1 - i, k + i);
    d.coords[vw[i - 1]] = Pt(k + i, 4 * k + 1 - 2 * i);
  }
  d.algo = "nested";
  d.update_grid_meta();
  return d;
}

namespace {

// Grows the ring labeling inward from (u1, v1, w1) with backtracking: each
// next ring continues all three chains and forms a triangle; a complete
// labeling is accepted only if the edge set decomposes into triangles,
// chains and at most one diagonal per quad face.
std::optional<NestedTriangleGraph> try_labels(const PlanarEmbedding& emb,
                                              int u1, int v1, int w1) {
  int n = emb.n;
  int k = n / 3;
  NestedTriangleGraph g;
  g.k = k;
  g.emb = emb;
  g.u = {u1};
  g.v = {v1};
  g.w = {w1};
  std::vector<char> used(n, 0);
  used[u1] = used[v1] = used[w1] = 1;

  std::set<Edge> actual;
  for (int a = 0; a < n; ++a)
    for (int b : emb.rotations[a])
      if (a < b) actual.insert({a, b});

  auto validate = [&]() -> bool {
    g.diagonals.clear();
    std::set<Edge> expected;
    for (int i = 0; i < k; ++i) {
      expected.insert(make_edge(g.u[i], g.v[i]));
      expected.insert(make_edge(g.v[i], g.w[i]));
      expected.insert(make_edge(g.w[i], g.u[i]));
    }
    for (int i = 0; i + 1 < k; ++i) {
      expected.insert(make_edge(g.u[i], g.u[i + 1]));
      expected.insert(make_edge(g.v[i], g.v[i + 1]));
      expected.insert(make_edge(g.w[i], g.w[i + 1]));
    }
    for (const Edge& e : expected)
      if (!actual.count(e)) return false;

    auto quad_of = [&](const Edge& e) -> int {
      for (int i = 0; i + 1 < k; ++i) {
        auto fits = [&](int p1, int p2, int q1, int q2) {
          return (e == make_edge(p1, q2)) || (e == make_edge(p2, q1));
        };
        if (fits(g.u[i], g.u[i + 1], g.v[i], g.v[i + 1])) return 3 * i;
        if (fits(g.v[i], g.v[i + 1], g.w[i], g.w[i + 1])) return 3 * i + 1;
        if (fits(g.w[i], g.w[i + 1], g.u[i], g.u[i + 1])) return 3 * i + 2;
      }
      return -1;
    };
    std::set<int> quads_used;
    for (const Edge& e : actual) {
      if (expected.count(e)) continue;
      int q = quad_of(e);
      if (q < 0) return false;
      if (!quads_used.insert(q).second) return false;
      g.diagonals.push_back(e);
    }
    return true;
  };

  std::function<bool()> grow = [&]() -> bool {
    if (static_cast<int>(g.u.size()) == k) return validate();
    int cu = g.u.back(), cv = g.v.back(), cw = g.w.back();
    std::vector<std::array<int, 3>> options;
    for (int a : emb.rotations[cu]) {
      if (used[a]) continue;
      for (int b : emb.rotations[cv]) {
        if (used[b] || b == a) continue;
        for (int c : emb.rotations[cw]) {
          if (used[c] || c == a || c == b) continue;
          if (emb.has_edge(a, b) && emb.has_edge(b, c) && emb.has_edge(c, a))
            options.push_back({a, b, c});
        }
      }
    }
    std::sort(options.begin(), options.end());
    for (auto [a, b, c] : options) {
      g.u.push_back(a);
      g.v.push_back(b);
      g.w.push_back(c);
      used[a] = used[b] = used[c] = 1;
      if (grow()) return true;
      used[a] = used[b] = used[c] = 0;
      g.u.pop_back();
      g.v.pop_back();
      g.w.pop_back();
    }
    return false;
  };
  if (!grow()) return std::nullopt;
  return g;
}

}  // namespace

std::optional<NestedTriangleGraph> recognize_nested(
    const PlanarEmbedding& emb) {
  if (emb.n % 3 != 0 || emb.n < 3) return std::nullopt;
  if (emb.outer_face.size() != 3) return std::nullopt;

  std::vector<int> o(emb.outer_face.begin(), emb.outer_face.end());
  std::sort(o.begin(), o.end());
  // Deterministic: assignments in lexicographic order, first success wins.
  std::vector<std::array<int, 3>> assignments = {
      {o[0], o[1], o[2]}, {o[0], o[2], o[1]}, {o[1], o[0], o[2]},
      {o[1], o[2], o[0]}, {o[2], o[0], o[1]}, {o[2], o[1], o[0]}};
  for (auto [a, b, c] : assignments)
    if (auto g = try_labels(emb, a, b, c)) return g;
  return std::nullopt;
}

}  // namespace rookdraw
