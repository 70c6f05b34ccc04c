#include "rookdraw/generators.hpp"

#include <algorithm>
#include <random>

#include "rookdraw/triangles.hpp"

namespace rookdraw {

namespace {

// Portable deterministic sampling (uniform_int_distribution is not
// implementation-stable).
std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t k) {
  return rng() % k;
}

void set_outer_by_set(PlanarEmbedding& emb, std::vector<int> want) {
  std::sort(want.begin(), want.end());
  for (const auto& f : compute_faces(emb)) {
    std::vector<int> fs = f;
    std::sort(fs.begin(), fs.end());
    if (fs == want) {
      emb.outer_face = f;
      return;
    }
  }
  throw GraphError("generator: requested outer face is not a face");
}

}  // namespace

PlanarEmbedding gen_k4() {
  PlanarEmbedding g;
  g.n = 4;
  g.rotations = {{1, 2, 3}, {3, 2, 0}, {3, 0, 1}, {0, 2, 1}};
  g.outer_face = {0, 3, 1};
  return g;
}

PlanarEmbedding gen_octahedron() {
  PlanarEmbedding g;
  g.n = 6;
  g.rotations = {{1, 5, 4, 2}, {2, 3, 5, 0}, {0, 4, 3, 1},
                 {2, 4, 5, 1}, {3, 2, 0, 5}, {3, 4, 0, 1}};
  g.outer_face = {0, 2, 1};
  return g;
}

PlanarEmbedding gen_double_wheel(int n) {
  if (n < 6) throw GraphError("double-wheel: n >= 6 required");
  int m = n - 2;
  int h1 = n - 2, h2 = n - 1;  // inner and outer hub
  PlanarEmbedding g;
  g.n = n;
  g.rotations.resize(n);
  for (int i = 0; i < m; ++i) {
    int prev = (i - 1 + m) % m, next = (i + 1) % m;
    g.rotations[i] = {h2, next, h1, prev};
  }
  for (int i = 0; i < m; ++i) g.rotations[h1].push_back(i);
  g.rotations[h2].push_back(0);
  for (int i = m - 1; i >= 1; --i) g.rotations[h2].push_back(i);
  set_outer_by_set(g, {h2, 0, 1});
  return g;
}

PlanarEmbedding gen_random_triangulation(int n, std::uint64_t seed) {
  if (n < 3) throw GraphError("random-triangulation: n >= 3 required");
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL);

  PlanarEmbedding g;
  g.n = n;
  g.rotations.resize(n);
  g.rotations[0] = {1, 2};
  g.rotations[1] = {2, 0};
  g.rotations[2] = {0, 1};
  std::vector<int> chain{0, 2, 1};  // clockwise outer walk from v1 to v2

  for (int w = 3; w < n; ++w) {
    int L = static_cast<int>(chain.size());
    int i, j;
    if (w == n - 1) {
      i = 0;
      j = L - 1;  // the last vertex closes the outer face
    } else {
      i = static_cast<int>(rand_below(rng, L - 1));
      j = i + 1 + static_cast<int>(rand_below(rng, L - 1 - i));
    }

    g.rotations[w].assign(chain.begin() + i, chain.begin() + j + 1);
    for (int t = i; t <= j; ++t) {
      auto& rot = g.rotations[chain[t]];
      if (t == i) {
        auto it = std::find(rot.begin(), rot.end(), chain[i + 1]);
        rot.insert(it + 1, w);
      } else {
        auto it = std::find(rot.begin(), rot.end(), chain[t - 1]);
        rot.insert(it, w);
      }
    }
    std::vector<int> nc(chain.begin(), chain.begin() + i + 1);
    nc.push_back(w);
    nc.insert(nc.end(), chain.begin() + j, chain.end());
    chain = std::move(nc);
  }

  g.outer_face = chain;
  return g;
}

PlanarEmbedding gen_apollonian(int n, std::uint64_t seed) {
  if (n < 4) throw GraphError("apollonian: n >= 4 required");
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 0x2545F4914F6CDD1DULL);

  PlanarEmbedding g = gen_k4();
  for (int w = 4; w < n; ++w) {
    auto faces = compute_faces(g);
    std::vector<std::vector<int>> inner;
    for (auto& f : faces)
      if (!same_cycle(f, g.outer_face)) inner.push_back(f);
    const auto& f = inner[rand_below(rng, inner.size())];
    int a = f[0], b = f[1], c = f[2];
    g.rotations.push_back({a, b, c});
    ++g.n;
    auto wedge = [&](int at, int before) {
      auto& rot = g.rotations[at];
      auto it = std::find(rot.begin(), rot.end(), before);
      rot.insert(it, w);
    };
    wedge(a, c);  // rot[a] = [..., b, w, c, ...]
    wedge(b, a);
    wedge(c, b);
  }
  return g;
}

NestedTriangleGraph gen_nested(int k, std::uint64_t seed) {
  if (k < 1) throw GraphError("nested: k >= 1 required");
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 0x94D049BB133111EBULL);

  int n = 3 * k;
  NestedTriangleGraph g;
  g.k = k;
  for (int i = 0; i < k; ++i) {
    g.u.push_back(3 * i);
    g.v.push_back(3 * i + 1);
    g.w.push_back(3 * i + 2);
  }

  // Concentric layout for exact rotation extraction: ring i (1-based) at
  // radius r = k+1-i, u north, v southwest, w southeast.
  std::vector<std::pair<long long, long long>> pos(n);
  for (int i = 1; i <= k; ++i) {
    long long r = k + 1 - i;
    pos[g.u[i - 1]] = {0, 2 * r};
    pos[g.v[i - 1]] = {-2 * r, -r};
    pos[g.w[i - 1]] = {2 * r, -r};
  }

  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    edges.push_back(make_edge(g.u[i], g.v[i]));
    edges.push_back(make_edge(g.v[i], g.w[i]));
    edges.push_back(make_edge(g.w[i], g.u[i]));
  }
  for (int i = 0; i + 1 < k; ++i) {
    edges.push_back(make_edge(g.u[i], g.u[i + 1]));
    edges.push_back(make_edge(g.v[i], g.v[i + 1]));
    edges.push_back(make_edge(g.w[i], g.w[i + 1]));
    // One of {none, first diagonal, second diagonal} per quad.
    auto pick = [&](int p1, int p2, int q1, int q2) {
      switch (rand_below(rng, 3)) {
        case 1:
          g.diagonals.push_back(make_edge(p1, q2));
          break;
        case 2:
          g.diagonals.push_back(make_edge(p2, q1));
          break;
        default:
          break;
      }
    };
    pick(g.u[i], g.u[i + 1], g.v[i], g.v[i + 1]);
    pick(g.v[i], g.v[i + 1], g.w[i], g.w[i + 1]);
    pick(g.w[i], g.w[i + 1], g.u[i], g.u[i + 1]);
  }
  for (const Edge& e : g.diagonals) edges.push_back(e);

  PlanarEmbedding emb;
  emb.n = n;
  emb.rotations.resize(n);
  for (const Edge& e : edges) {
    emb.rotations[e.first].push_back(e.second);
    emb.rotations[e.second].push_back(e.first);
  }
  // CCW order by exact angle around each vertex.
  for (int v = 0; v < n; ++v) {
    auto [vx, vy] = pos[v];
    auto half = [&](int u) {
      auto [ux, uy] = pos[u];
      long long dx = ux - vx, dy = uy - vy;
      return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
    };
    std::sort(emb.rotations[v].begin(), emb.rotations[v].end(),
              [&](int a, int b) {
                int ha = half(a), hb = half(b);
                if (ha != hb) return ha < hb;
                auto [ax, ay] = pos[a];
                auto [bx, by] = pos[b];
                __int128 cross =
                    static_cast<__int128>(ax - vx) * (by - vy) -
                    static_cast<__int128>(ay - vy) * (bx - vx);
                return cross > 0;
              });
  }
  set_outer_by_set(emb, {g.u[0], g.v[0], g.w[0]});
  g.emb = std::move(emb);
  return g;
}

PlanarEmbedding gen_four_connected(int n, std::uint64_t seed) {
  if (n < 6) throw GraphError("four-connected: n >= 6 required");
  for (std::uint64_t attempt = 0; attempt < 20000; ++attempt) {
    PlanarEmbedding g =
        gen_random_triangulation(n, seed + attempt * 0x5DEECE66DULL);
    if (classify_triangles(g).four_connected) return g;
  }
  throw GraphError("four-connected: rejection sampling budget exhausted");
}

PlanarEmbedding generate(const std::string& type, int n_or_k,
                         std::uint64_t seed) {
  if (type == "octahedron") return gen_octahedron();
  if (type == "double-wheel") return gen_double_wheel(n_or_k);
  if (type == "random-triangulation")
    return gen_random_triangulation(n_or_k, seed);
  if (type == "apollonian") return gen_apollonian(n_or_k, seed);
  if (type == "nested") return gen_nested(n_or_k, seed).emb;
  if (type == "four-connected") return gen_four_connected(n_or_k, seed);
  throw GraphError("unknown generator type: " + type);
}

}  // namespace rookdraw
