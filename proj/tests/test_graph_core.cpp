#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "rookdraw/canonical.hpp"
#include "rookdraw/generators.hpp"
#include "rookdraw/triangles.hpp"
#include "rookdraw/triangulate.hpp"

using namespace rookdraw;

namespace {

PlanarEmbedding four_cycle() {
  // Unit square, CCW rotations.
  PlanarEmbedding g;
  g.n = 4;
  g.rotations = {{1, 3}, {2, 0}, {3, 1}, {2, 0}};
  // Outer face via traversal below; fill in a valid one.
  g.outer_face = {0, 3, 2, 1};
  return g;
}

PlanarEmbedding cube_graph() {
  // Outer square 0..3, inner square 4..7, spokes i - i+4.
  PlanarEmbedding g;
  g.n = 8;
  g.rotations = {
      {1, 4, 3}, {2, 5, 0}, {3, 6, 1}, {0, 7, 2},
      {0, 5, 7}, {1, 6, 4}, {2, 7, 5}, {3, 4, 6},
  };
  g.outer_face = {0, 3, 2, 1};
  return g;
}

}  // namespace

TEST_CASE("face traversal: K4 has 4 triangular faces") {
  PlanarEmbedding g = gen_k4();
  g.validate();
  auto faces = compute_faces(g);
  CHECK(faces.size() == 4);
  for (const auto& f : faces) CHECK(f.size() == 3);
  CHECK(g.is_triangulated());
}

TEST_CASE("face traversal: octahedron has 8 triangular faces") {
  PlanarEmbedding g = gen_octahedron();
  g.validate();
  auto faces = compute_faces(g);
  CHECK(faces.size() == 8);
  for (const auto& f : faces) CHECK(f.size() == 3);
  CHECK(g.is_triangulated());
}

TEST_CASE("face traversal: 4-cycle has two faces of size 4") {
  PlanarEmbedding g = four_cycle();
  g.validate();
  auto faces = compute_faces(g);
  CHECK(faces.size() == 2);
  for (const auto& f : faces) CHECK(f.size() == 4);
  CHECK_FALSE(g.is_triangulated());
}

TEST_CASE("triangulate: triangulated input is untouched") {
  PlanarEmbedding g = gen_octahedron();
  auto tr = triangulate(g);
  CHECK(tr.added_edges.empty());
  CHECK(tr.emb.edge_count() == g.edge_count());
}

TEST_CASE("triangulate: 4-cycle gets one diagonal per face") {
  auto tr = triangulate(four_cycle());
  CHECK(tr.added_edges.size() == 2);
  tr.emb.validate();
  CHECK(tr.emb.is_triangulated());
}

TEST_CASE("triangulate: cube gains 3n-6-m = 6 edges") {
  auto tr = triangulate(cube_graph());
  CHECK(tr.added_edges.size() == 6);
  tr.emb.validate();
  CHECK(tr.emb.is_triangulated());
}

TEST_CASE("triangulate: too small") {
  PlanarEmbedding g;
  g.n = 2;
  g.rotations = {{1}, {0}};
  g.outer_face = {0, 1};
  CHECK_THROWS_AS(triangulate(g), GraphError);
}

TEST_CASE("triangulate: random deletions re-triangulate cleanly") {
  std::mt19937_64 rng(99);
  int trials = 1000;
  for (int t = 0; t < trials; ++t) {
    int n = 4 + static_cast<int>(rng() % 18);
    PlanarEmbedding g = gen_random_triangulation(n, rng());
    // Delete random edges while keeping the graph connected.
    int deletions = static_cast<int>(rng() % (g.edge_count() / 2 + 1));
    for (int d = 0; d < deletions; ++d) {
      std::vector<Edge> edges;
      for (int u = 0; u < g.n; ++u)
        for (int v : g.rotations[u])
          if (u < v && g.degree(u) > 1 && g.degree(v) > 1)
            edges.push_back({u, v});
      if (edges.size() <= 3) break;
      Edge e = edges[rng() % edges.size()];
      PlanarEmbedding h = g;
      auto& ru = h.rotations[e.first];
      ru.erase(std::find(ru.begin(), ru.end(), e.second));
      auto& rv = h.rotations[e.second];
      rv.erase(std::find(rv.begin(), rv.end(), e.first));
      // Keep the outer face intact and the graph connected.
      try {
        h.outer_face = compute_faces(h).front();
        h.validate();
      } catch (const GraphError&) {
        continue;
      }
      bool outer_has_all = false;
      for (const auto& f : compute_faces(h))
        if (same_cycle(f, g.outer_face)) outer_has_all = true;
      h.outer_face = outer_has_all ? g.outer_face : compute_faces(h).front();
      g = h;
    }
    auto tr = triangulate(g);
    tr.emb.validate();
    CHECK(tr.emb.is_triangulated());
    CHECK(tr.emb.edge_count() == 3 * tr.emb.n - 6);
  }
}

TEST_CASE("canonical order: K4 fixture") {
  PlanarEmbedding g = gen_k4();
  CanonicalOrder co = canonical_order(g);
  CHECK(co.order == std::vector<int>{0, 1, 2, 3});
  CHECK(co.preds[2] == std::vector<int>{0, 1});
  CHECK(co.preds[3] == std::vector<int>{0, 2, 1});
}

TEST_CASE("canonical order: triangle is its outer face") {
  PlanarEmbedding g = gen_random_triangulation(3, 1);
  CanonicalOrder co = canonical_order(g);
  CHECK(co.order.size() == 3);
  std::set<int> outer(g.outer_face.begin(), g.outer_face.end());
  std::set<int> ord(co.order.begin(), co.order.end());
  CHECK(outer == ord);
}

TEST_CASE("canonical order: invariants on random triangulations") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    int n = 4 + static_cast<int>(rng() % 40);
    PlanarEmbedding g = gen_random_triangulation(n, rng());
    CanonicalOrder co = canonical_order(g);

    // v1, v2, vn form the outer face.
    std::set<int> outer(g.outer_face.begin(), g.outer_face.end());
    CHECK(outer ==
          std::set<int>{co.order[0], co.order[1], co.order[n - 1]});

    // Replay: predecessors form a contiguous run of the evolving chain.
    std::vector<int> chain{co.order[0], co.order[1]};
    for (int k = 3; k <= n; ++k) {
      const auto& arc = co.preds[k - 1];
      REQUIRE(arc.size() >= 2);
      auto it = std::search(chain.begin(), chain.end(), arc.begin(), arc.end());
      REQUIRE(it != chain.end());
      std::vector<int> nc(chain.begin(), it + 1);
      nc.push_back(co.order[k - 1]);
      nc.insert(nc.end(), it + arc.size() - 1, chain.end());
      chain = std::move(nc);
    }
    CHECK(chain.size() == 3);
  }
}

TEST_CASE("canonical order: octahedron passes the invariant suite") {
  PlanarEmbedding g = gen_octahedron();
  CanonicalOrder co = canonical_order(g);
  CHECK(co.order.size() == 6);
  std::set<int> outer(g.outer_face.begin(), g.outer_face.end());
  CHECK(outer == std::set<int>{co.order[0], co.order[1], co.order[5]});
}

TEST_CASE("classify: octahedron is 4-connected, only the outer face filled") {
  TriangleReport rep = classify_triangles(gen_octahedron());
  CHECK(rep.triangles.size() == 8);
  for (const auto& t : rep.triangles) CHECK(t.facial);
  CHECK(rep.filled_count == 1);
  CHECK(rep.four_connected);
  int filled = 0;
  for (const auto& t : rep.triangles)
    if (t.filled) {
      ++filled;
      CHECK_FALSE(t.separating);
      CHECK(t.inside.size() == 3);
    }
  CHECK(filled == 1);
}

TEST_CASE("classify: K4") {
  TriangleReport rep = classify_triangles(gen_k4());
  CHECK(rep.triangles.size() == 4);
  CHECK(rep.filled_count == 1);
  CHECK(rep.four_connected);
}

TEST_CASE("classify: Apollonian n=5 has one separating triangle") {
  PlanarEmbedding g = gen_apollonian(5, 1);
  TriangleReport rep = classify_triangles(g);
  CHECK(rep.filled_count == 2);
  int septs = 0;
  for (const auto& t : rep.triangles)
    if (t.separating) ++septs;
  CHECK(septs == 1);
  CHECK_FALSE(rep.four_connected);
}

TEST_CASE("classify: filled-edge bound 2n-5 and separating implies filled") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    int n = 4 + static_cast<int>(rng() % 30);
    PlanarEmbedding g = (t % 3 == 0) ? gen_apollonian(n, rng())
                                     : gen_random_triangulation(n, rng());
    TriangleReport rep = classify_triangles(g);
    CHECK(static_cast<int>(rep.filled_edges.size()) <= 2 * n - 5);
    for (const auto& tri : rep.triangles)
      if (tri.separating) CHECK(tri.filled);
  }
}

TEST_CASE("subdivide: empty set is the identity") {
  PlanarEmbedding g = gen_octahedron();
  auto res = subdivide_and_retriangulate(g, {});
  CHECK(res.emb.n == g.n);
  CHECK(res.emb.edge_count() == g.edge_count());
}

TEST_CASE("subdivide: killing the separating triangle of Apollonian n=5") {
  PlanarEmbedding g = gen_apollonian(5, 1);
  TriangleReport rep = classify_triangles(g);
  const Triangle* sep = nullptr;
  for (const auto& t : rep.triangles)
    if (t.separating) sep = &t;
  REQUIRE(sep != nullptr);

  // Pick an interior edge of the separating triangle.
  std::set<Edge> outer_edges;
  for (size_t i = 0; i < g.outer_face.size(); ++i)
    outer_edges.insert(make_edge(g.outer_face[i],
                                 g.outer_face[(i + 1) % g.outer_face.size()]));
  Edge chosen{-1, -1};
  for (const Edge& e : sep->edges())
    if (!outer_edges.count(e)) {
      chosen = e;
      break;
    }
  REQUIRE(chosen.first >= 0);

  auto res = subdivide_and_retriangulate(g, {chosen});
  res.emb.validate();
  CHECK(res.emb.n == 6);
  CHECK(res.emb.is_triangulated());
  CHECK(classify_triangles(res.emb).four_connected);

  int x = res.subdivision_vertices.front().second;
  CHECK(res.emb.degree(x) == 4);
}

TEST_CASE("subdivide: degree-4 vertex with a 4-cycle neighborhood") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    int n = 6 + static_cast<int>(rng() % 12);
    PlanarEmbedding g = gen_random_triangulation(n, rng());
    std::set<Edge> outer_edges;
    for (size_t i = 0; i < g.outer_face.size(); ++i)
      outer_edges.insert(make_edge(
          g.outer_face[i], g.outer_face[(i + 1) % g.outer_face.size()]));
    // Take any interior edge.
    Edge chosen{-1, -1};
    for (int u = 0; u < g.n && chosen.first < 0; ++u)
      for (int v : g.rotations[u])
        if (u < v && !outer_edges.count({u, v})) {
          chosen = {u, v};
          break;
        }
    REQUIRE(chosen.first >= 0);
    auto res = subdivide_and_retriangulate(g, {chosen});
    res.emb.validate();
    CHECK(res.emb.is_triangulated());
    int x = res.subdivision_vertices.front().second;
    CHECK(res.emb.degree(x) == 4);
    // Neighbors form a 4-cycle.
    const auto& nb = res.emb.rotations[x];
    for (int i = 0; i < 4; ++i)
      CHECK(res.emb.has_edge(nb[i], nb[(i + 1) % 4]));
  }
}

TEST_CASE("subdivide: errors") {
  PlanarEmbedding g = gen_octahedron();
  Edge outer = make_edge(g.outer_face[0], g.outer_face[1]);
  CHECK_THROWS_AS(subdivide_and_retriangulate(g, {outer}), GraphError);

  // Two edges of one face are not independent.
  PlanarEmbedding a = gen_apollonian(6, 2);
  std::set<Edge> outer_edges;
  for (size_t i = 0; i < a.outer_face.size(); ++i)
    outer_edges.insert(make_edge(a.outer_face[i],
                                 a.outer_face[(i + 1) % a.outer_face.size()]));
  for (const auto& f : compute_faces(a)) {
    Edge e1 = make_edge(f[0], f[1]);
    Edge e2 = make_edge(f[1], f[2]);
    if (!outer_edges.count(e1) && !outer_edges.count(e2)) {
      CHECK_THROWS_AS(subdivide_and_retriangulate(a, {e1, e2}), GraphError);
      break;
    }
  }
}

TEST_CASE("split: Apollonian n=5 gives a K4 inside part") {
  PlanarEmbedding g = gen_apollonian(5, 1);
  TriangleReport rep = classify_triangles(g);
  const Triangle* sep = nullptr;
  for (const auto& t : rep.triangles)
    if (t.separating) sep = &t;
  REQUIRE(sep != nullptr);
  SplitResult s = split_at_triangle(g, sep->v);
  CHECK(s.inside.n == 4);
  CHECK(s.inside.edge_count() == 6);
  CHECK(s.inside.is_triangulated());
  CHECK(s.outside.n == 4);
  CHECK(s.outside.is_triangulated());
}

TEST_CASE("split: recursion terminates in 4-connected pieces") {
  PlanarEmbedding g = gen_apollonian(6, 3);
  std::vector<PlanarEmbedding> todo{g};
  int guard = 0;
  while (!todo.empty()) {
    REQUIRE(++guard < 50);
    PlanarEmbedding cur = std::move(todo.back());
    todo.pop_back();
    TriangleReport rep = classify_triangles(cur);
    const Triangle* sep = nullptr;
    for (const auto& t : rep.triangles)
      if (t.separating) sep = &t;
    if (!sep) {
      CHECK(rep.four_connected);
      continue;
    }
    SplitResult s = split_at_triangle(cur, sep->v);
    CHECK(s.inside.n + s.outside.n == cur.n + 3);
    todo.push_back(std::move(s.inside));
    todo.push_back(std::move(s.outside));
  }
}

TEST_CASE("split: outer face is not separating") {
  PlanarEmbedding g = gen_apollonian(5, 1);
  std::array<int, 3> outer{g.outer_face[0], g.outer_face[1], g.outer_face[2]};
  CHECK_THROWS_AS(split_at_triangle(g, outer), GraphError);
}

TEST_CASE("generators: Euler on every output") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    int n = 6 + static_cast<int>(rng() % 20);
    gen_random_triangulation(n, rng()).validate();
    gen_apollonian(n, rng()).validate();
    gen_double_wheel(n).validate();
  }
  gen_octahedron().validate();
  gen_k4().validate();
  for (int k = 1; k <= 6; ++k) gen_nested(k, 5).emb.validate();
}

TEST_CASE("generators: four-connected rejection works") {
  for (std::uint64_t s = 1; s <= 5; ++s) {
    PlanarEmbedding g = gen_four_connected(12, s);
    CHECK(classify_triangles(g).four_connected);
  }
}

TEST_CASE("generators: double wheel is 4-connected and triangulated") {
  for (int n : {6, 8, 10}) {
    PlanarEmbedding g = gen_double_wheel(n);
    CHECK(g.is_triangulated());
    CHECK(classify_triangles(g).four_connected);
  }
}
