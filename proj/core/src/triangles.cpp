#include "rookdraw/triangles.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace rookdraw {

namespace {

std::vector<int> strictly_inside(const PlanarEmbedding& emb,
                                 const std::array<int, 3>& t) {
  std::vector<char> on_t(emb.n, 0);
  for (int v : t) on_t[v] = 1;

  // Components of G - T; a component is outside iff it contains an
  // outer-face vertex. If the outer face is T itself, everything else is
  // inside.
  std::vector<int> comp(emb.n, -1);
  int nc = 0;
  for (int s = 0; s < emb.n; ++s) {
    if (on_t[s] || comp[s] >= 0) continue;
    std::queue<int> q;
    q.push(s);
    comp[s] = nc;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : emb.rotations[v])
        if (!on_t[u] && comp[u] < 0) {
          comp[u] = nc;
          q.push(u);
        }
    }
    ++nc;
  }

  std::vector<char> outside_comp(nc, 0);
  for (int v : emb.outer_face)
    if (!on_t[v]) outside_comp[comp[v]] = 1;

  std::vector<int> in;
  for (int v = 0; v < emb.n; ++v)
    if (!on_t[v] && !outside_comp[comp[v]]) in.push_back(v);
  return in;
}

}  // namespace

TriangleReport classify_triangles(const PlanarEmbedding& emb) {
  if (!emb.is_triangulated())
    throw GraphError("classify_triangles: input not triangulated");

  std::set<std::array<int, 3>> face_set;
  for (const auto& f : compute_faces(emb)) {
    std::array<int, 3> t{f[0], f[1], f[2]};
    std::sort(t.begin(), t.end());
    face_set.insert(t);
  }

  TriangleReport rep;
  for (int u = 0; u < emb.n; ++u)
    for (int v : emb.rotations[u]) {
      if (v <= u) continue;
      for (int w : emb.rotations[u]) {
        if (w <= v) continue;
        if (!emb.has_edge(v, w)) continue;
        Triangle t;
        t.v = {u, v, w};
        t.facial = face_set.count(t.v) > 0;
        t.inside = strictly_inside(emb, t.v);
        t.filled = !t.inside.empty();
        if (t.filled) {
          size_t outside = emb.n - 3 - t.inside.size();
          t.separating = outside > 0;
        }
        if (t.filled) {
          ++rep.filled_count;
          for (const Edge& e : t.edges()) rep.filled_edges.insert(e);
        }
        rep.triangles.push_back(std::move(t));
      }
    }

  rep.four_connected = std::none_of(
      rep.triangles.begin(), rep.triangles.end(),
      [](const Triangle& t) { return t.separating; });
  return rep;
}

std::pair<PlanarEmbedding, std::vector<int>> induced_embedding(
    const PlanarEmbedding& emb, const std::vector<int>& keep,
    const std::vector<int>& outer_orig) {
  std::vector<int> to_new(emb.n, -1);
  for (size_t i = 0; i < keep.size(); ++i) to_new[keep[i]] = static_cast<int>(i);

  PlanarEmbedding g;
  g.n = static_cast<int>(keep.size());
  g.rotations.resize(g.n);
  for (size_t i = 0; i < keep.size(); ++i)
    for (int u : emb.rotations[keep[i]])
      if (to_new[u] >= 0) g.rotations[i].push_back(to_new[u]);

  std::vector<int> outer_new;
  for (int v : outer_orig) outer_new.push_back(to_new[v]);

  // Orient the outer face as the traversal produces it.
  bool found = false;
  for (const auto& f : compute_faces(g))
    if (f.size() == outer_new.size()) {
      std::vector<int> fs = f, os = outer_new;
      std::sort(fs.begin(), fs.end());
      std::sort(os.begin(), os.end());
      if (fs == os) {
        g.outer_face = f;
        found = true;
        break;
      }
    }
  if (!found)
    throw GraphError("induced_embedding: requested outer face is not a face");
  return {std::move(g), keep};
}

SplitResult split_at_triangle(const PlanarEmbedding& emb,
                              const std::array<int, 3>& T) {
  std::array<int, 3> t = T;
  std::sort(t.begin(), t.end());
  for (int i = 0; i < 2; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!emb.has_edge(t[i], t[j]))
        throw GraphError("split_at_triangle: not a triangle");

  std::vector<int> in = strictly_inside(emb, t);
  size_t outside = emb.n - 3 - in.size();
  if (in.empty() || outside == 0)
    throw GraphError("split_at_triangle: triangle is not separating");

  SplitResult res;
  std::vector<int> keep_in(t.begin(), t.end());
  keep_in.insert(keep_in.end(), in.begin(), in.end());
  std::sort(keep_in.begin(), keep_in.end());
  std::tie(res.inside, res.inside_to_orig) =
      induced_embedding(emb, keep_in, {t[0], t[1], t[2]});

  std::vector<char> is_in(emb.n, 0);
  for (int v : in) is_in[v] = 1;
  std::vector<int> keep_out;
  for (int v = 0; v < emb.n; ++v)
    if (!is_in[v]) keep_out.push_back(v);
  std::tie(res.outside, res.outside_to_orig) =
      induced_embedding(emb, keep_out, emb.outer_face);
  return res;
}

SubdivisionResult subdivide_and_retriangulate(const PlanarEmbedding& emb,
                                              const std::set<Edge>& e_s) {
  if (!emb.is_triangulated())
    throw GraphError("subdivide: input not triangulated");

  // Outer edges are not subdividable.
  std::set<Edge> outer_edges;
  int L = static_cast<int>(emb.outer_face.size());
  for (int i = 0; i < L; ++i)
    outer_edges.insert(
        make_edge(emb.outer_face[i], emb.outer_face[(i + 1) % L]));
  for (const Edge& e : e_s) {
    if (!emb.has_edge(e.first, e.second))
      throw GraphError("subdivide: not an edge");
    if (outer_edges.count(e))
      throw GraphError("subdivide: edge on the outer face");
  }

  // Independence: no face may carry two subdivided edges.
  std::map<std::array<int, 3>, int> face_hits;
  for (const Edge& e : e_s) {
    auto [c, d] = triangle_faces_of_edge(emb, e.first, e.second);
    for (int apex : {c, d}) {
      std::array<int, 3> f{e.first, e.second, apex};
      std::sort(f.begin(), f.end());
      if (++face_hits[f] > 1)
        throw GraphError("subdivide: edge set is not independent");
    }
  }

  SubdivisionResult res;
  res.emb = emb;
  PlanarEmbedding& g = res.emb;
  for (const Edge& e : e_s) {
    auto [a, b] = e;
    auto [c, d] = triangle_faces_of_edge(g, a, b);  // c left of a->b
    int x = g.n++;
    g.rotations.push_back({a, d, b, c});
    std::replace(g.rotations[a].begin(), g.rotations[a].end(), b, x);
    std::replace(g.rotations[b].begin(), g.rotations[b].end(), a, x);
    // At c, a immediately precedes b (face a->b->c); insert x between.
    {
      auto& rot = g.rotations[c];
      auto it = std::find(rot.begin(), rot.end(), b);
      rot.insert(it, x);
    }
    {
      auto& rot = g.rotations[d];
      auto it = std::find(rot.begin(), rot.end(), a);
      rot.insert(it, x);
    }
    res.subdivision_vertices.push_back({e, x});

    // Contract invariants of the construction.
    if (g.degree(x) != 4) throw GraphError("subdivide: degree != 4");
    for (auto [p, q] :
         {std::pair{a, c}, std::pair{c, b}, std::pair{b, d}, std::pair{d, a}})
      if (!g.has_edge(p, q))
        throw GraphError("subdivide: neighbors do not form a 4-cycle");
  }
  return res;
}

}  // namespace rookdraw
