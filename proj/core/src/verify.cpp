#include "rookdraw/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace rookdraw {

namespace {

std::string pt_str(const Pt& p) {
  return "(" + rat_to_string(p.x) + "," + rat_to_string(p.y) + ")";
}

// Generic planarity core; P must provide x, y with exact comparisons and
// the orientation sign. Instantiated for int64 (fast path, via __int128)
// and for exact rationals.
struct LLPt {
  long long x, y;
  bool operator==(const LLPt& o) const { return x == o.x && y == o.y; }
};

int orient_ll(const LLPt& a, const LLPt& b, const LLPt& c) {
  __int128 det = static_cast<__int128>(b.x - a.x) * (c.y - a.y) -
                 static_cast<__int128>(b.y - a.y) * (c.x - a.x);
  return det > 0 ? 1 : det < 0 ? -1 : 0;
}

int orient_pt(const Pt& a, const Pt& b, const Pt& c) {
  return orientation(a, b, c);
}

template <class P>
int orient3(const P& a, const P& b, const P& c);
template <>
int orient3<LLPt>(const LLPt& a, const LLPt& b, const LLPt& c) {
  return orient_ll(a, b, c);
}
template <>
int orient3<Pt>(const Pt& a, const Pt& b, const Pt& c) {
  return orient_pt(a, b, c);
}

template <class P>
bool on_closed_seg(const P& a, const P& b, const P& c) {
  if (orient3(a, b, c) != 0) return false;
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
}

template <class P>
bool strictly_on_seg(const P& a, const P& b, const P& c) {
  if (c == a || c == b) return false;
  return on_closed_seg(a, b, c);
}

template <class P>
bool segs_intersect(const P& a, const P& b, const P& c, const P& d) {
  int o1 = orient3(a, b, c), o2 = orient3(a, b, d);
  int o3 = orient3(c, d, a), o4 = orient3(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_closed_seg(a, b, c)) return true;
  if (o2 == 0 && on_closed_seg(a, b, d)) return true;
  if (o3 == 0 && on_closed_seg(c, d, a)) return true;
  if (o4 == 0 && on_closed_seg(c, d, b)) return true;
  return false;
}

template <class P>
struct Seg {
  P a, b;
  int edge;  // index into drawing edges
};

template <class P>
struct PlanarInput {
  std::vector<P> vtx;
  std::vector<Seg<P>> segs;
};

// Contact between segments of different edges is legal only at a shared
// graph vertex; within one edge, consecutive polyline segments share the
// bend point and nothing more.
template <class P>
std::optional<std::string> planar_core(const Drawing& d,
                                       const PlanarInput<P>& in) {
  const auto& segs = in.segs;
  const auto& vtx = in.vtx;
  int nv = static_cast<int>(vtx.size());

  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j)
      if (vtx[i] == vtx[j])
        return "vertices " + std::to_string(i) + " and " + std::to_string(j) +
               " coincide";

  for (size_t e = 0; e < d.edges.size(); ++e)
    for (size_t bi = 0; bi < d.edges[e].bends.size(); ++bi)
      for (int v = 0; v < nv; ++v)
        if (d.coords[v] == d.edges[e].bends[bi])
          return "bend of edge (" + std::to_string(d.edges[e].u) + "," +
                 std::to_string(d.edges[e].v) + ") coincides with vertex " +
                 std::to_string(v);

  for (size_t i = 0; i < segs.size(); ++i) {
    // No vertex in the relative interior of a segment.
    for (int v = 0; v < nv; ++v)
      if (strictly_on_seg(segs[i].a, segs[i].b, vtx[v]))
        return "vertex " + std::to_string(v) +
               " lies inside a segment of edge (" +
               std::to_string(d.edges[segs[i].edge].u) + "," +
               std::to_string(d.edges[segs[i].edge].v) + ")";
    for (size_t j = i + 1; j < segs.size(); ++j) {
      const auto& s = segs[i];
      const auto& t = segs[j];
      auto describe = [&]() {
        std::ostringstream os;
        os << "segments of edges (" << d.edges[s.edge].u << ","
           << d.edges[s.edge].v << ") and (" << d.edges[t.edge].u << ","
           << d.edges[t.edge].v << ") intersect";
        return os.str();
      };
      if (s.edge == t.edge) {
        bool consecutive = (j == i + 1);
        if (consecutive) {
          // Share exactly the bend point s.b == t.a.
          if (strictly_on_seg(s.a, s.b, t.b) ||
              strictly_on_seg(t.a, t.b, s.a))
            return describe();  // polyline folds back onto itself
        } else if (segs_intersect(s.a, s.b, t.a, t.b)) {
          return describe();
        }
        continue;
      }

      int u1 = d.edges[s.edge].u, v1 = d.edges[s.edge].v;
      int u2 = d.edges[t.edge].u, v2 = d.edges[t.edge].v;
      int shared = -1;
      if (u1 == u2 || u1 == v2) shared = u1;
      if (v1 == u2 || v1 == v2) shared = v1;

      if (shared < 0) {
        if (segs_intersect(s.a, s.b, t.a, t.b)) return describe();
        continue;
      }
      const P& sp = vtx[shared];
      bool s_at = (s.a == sp) || (s.b == sp);
      bool t_at = (t.a == sp) || (t.b == sp);
      if (s_at && t_at) {
        // May meet at the shared vertex only.
        if ((s.a == t.a && s.b == t.b) || (s.a == t.b && s.b == t.a))
          return describe();
        if (strictly_on_seg(s.a, s.b, t.a) || strictly_on_seg(s.a, s.b, t.b) ||
            strictly_on_seg(t.a, t.b, s.a) || strictly_on_seg(t.a, t.b, s.b))
          return describe();
        // With one common endpoint, any remaining intersection needs an
        // endpoint inside the other segment, handled above.
      } else if (segs_intersect(s.a, s.b, t.a, t.b)) {
        return describe();
      }
    }
  }
  return std::nullopt;
}

bool drawing_fits_ll(const Drawing& d) {
  auto ok = [](const Pt& p) {
    if (!is_integer(p.x) || !is_integer(p.y)) return false;
    return abs(numerator(p.x)) < (BigInt(1) << 60) &&
           abs(numerator(p.y)) < (BigInt(1) << 60);
  };
  for (const auto& p : d.coords)
    if (!ok(p)) return false;
  for (const auto& e : d.edges)
    for (const auto& b : e.bends)
      if (!ok(b)) return false;
  return true;
}

}  // namespace

CheckReport check_planar(const Drawing& d) {
  const std::string name = "planar";
  std::optional<std::string> bad;
  if (drawing_fits_ll(d)) {
    PlanarInput<LLPt> in;
    for (const auto& p : d.coords) in.vtx.push_back({to_ll(p.x), to_ll(p.y)});
    for (size_t e = 0; e < d.edges.size(); ++e) {
      auto poly = d.polyline(d.edges[e]);
      for (size_t i = 0; i + 1 < poly.size(); ++i)
        in.segs.push_back({{to_ll(poly[i].x), to_ll(poly[i].y)},
                           {to_ll(poly[i + 1].x), to_ll(poly[i + 1].y)},
                           static_cast<int>(e)});
    }
    bad = planar_core(d, in);
  } else {
    PlanarInput<Pt> in;
    in.vtx = d.coords;
    for (size_t e = 0; e < d.edges.size(); ++e) {
      auto poly = d.polyline(d.edges[e]);
      for (size_t i = 0; i + 1 < poly.size(); ++i)
        in.segs.push_back({poly[i], poly[i + 1], static_cast<int>(e)});
    }
    bad = planar_core(d, in);
  }
  if (bad) return CheckReport::fail(name, *bad);
  return CheckReport::ok(name);
}

CheckReport check_ri(const Drawing& d) {
  const std::string name = "ri";
  for (const auto& e : d.edges)
    if (!e.bends.empty())
      return CheckReport::fail(name, "drawing is not straight-line");
  for (const auto& e : d.edges) {
    const Pt& a = d.coords[e.u];
    const Pt& b = d.coords[e.v];
    Rat xlo = std::min(a.x, b.x), xhi = std::max(a.x, b.x);
    Rat ylo = std::min(a.y, b.y), yhi = std::max(a.y, b.y);
    for (int w = 0; w < d.n(); ++w) {
      if (w == e.u || w == e.v) continue;
      const Pt& p = d.coords[w];
      if (xlo < p.x && p.x < xhi && ylo < p.y && p.y < yhi)
        return CheckReport::fail(
            name, "vertex " + std::to_string(w) + " at " + pt_str(p) +
                      " lies inside the rectangle of edge (" +
                      std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
  }
  return CheckReport::ok(name);
}

CheckReport check_non_aligned(const Drawing& d) {
  const std::string name = "nonaligned";
  for (int i = 0; i < d.n(); ++i)
    for (int j = i + 1; j < d.n(); ++j) {
      if (d.coords[i].x == d.coords[j].x)
        return CheckReport::fail(name, "vertices " + std::to_string(i) + "," +
                                           std::to_string(j) +
                                           " share a column");
      if (d.coords[i].y == d.coords[j].y)
        return CheckReport::fail(name, "vertices " + std::to_string(i) + "," +
                                           std::to_string(j) + " share a row");
    }
  return CheckReport::ok(name);
}

CheckReport check_rook(const Drawing& d, int n) {
  const std::string name = "rook";
  if (d.n() != n)
    return CheckReport::fail(name, "vertex count differs from n");
  CheckReport na = check_non_aligned(d);
  if (!na.pass) return CheckReport::fail(name, na.detail);
  std::set<long long> xs, ys;
  for (const auto& p : d.coords) {
    if (!is_integer(p.x) || !is_integer(p.y))
      return CheckReport::fail(name, "non-integer vertex coordinate");
    xs.insert(to_ll(p.x));
    ys.insert(to_ll(p.y));
  }
  for (long long v = 1; v <= n; ++v)
    if (!xs.count(v) || !ys.count(v))
      return CheckReport::fail(
          name, "coordinates are not permutations of 1.." + std::to_string(n));
  return CheckReport::ok(name);
}

CheckReport check_grid(const Drawing& d) {
  const std::string name = "grid";
  Rat maxx = 0, maxy = 0;
  for (const auto& p : d.coords) {
    if (p.x < 1 || p.y < 1)
      return CheckReport::fail(name, "vertex below (1,1) at " + pt_str(p));
    maxx = std::max(maxx, p.x);
    maxy = std::max(maxy, p.y);
  }
  if (maxx > d.width || maxy > d.height)
    return CheckReport::fail(name, "vertex outside the declared grid");
  if (maxx != d.width || maxy != d.height)
    return CheckReport::fail(name, "declared grid exceeds the bounding box");
  return CheckReport::ok(name);
}

CheckReport check_weak_barycentric(const BarycentricRep& rep,
                                   const PlanarEmbedding& emb) {
  const std::string name = "weak-barycentric";
  int n = emb.n;
  if (static_cast<int>(rep.coords.size()) != n)
    return CheckReport::fail(name, "size mismatch");
  for (int v = 0; v < n; ++v) {
    long long s = rep.coords[v][0] + rep.coords[v][1] + rep.coords[v][2];
    if (s != rep.c)
      return CheckReport::fail(
          name, "vertex " + std::to_string(v) + " sum " + std::to_string(s) +
                    " != c = " + std::to_string(rep.c));
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rep.coords[u] == rep.coords[v])
        return CheckReport::fail(name, "vertices " + std::to_string(u) + "," +
                                           std::to_string(v) +
                                           " share a triple (not injective)");

  auto lex_less = [&](int a, int z, int k) {
    long long a0 = rep.coords[a][k], a1 = rep.coords[a][(k + 1) % 3];
    long long z0 = rep.coords[z][k], z1 = rep.coords[z][(k + 1) % 3];
    return a0 < z0 || (a0 == z0 && a1 < z1);
  };
  for (int u = 0; u < n; ++u)
    for (int v : emb.rotations[u]) {
      if (v <= u) continue;
      for (int z = 0; z < n; ++z) {
        if (z == u || z == v) continue;
        bool ok = false;
        for (int k = 0; k < 3 && !ok; ++k)
          ok = lex_less(u, z, k) && lex_less(v, z, k);
        if (!ok)
          return CheckReport::fail(
              name, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") and vertex " + std::to_string(z) +
                        " violate the lexicographic condition");
      }
    }
  return CheckReport::ok(name);
}

CheckReport check_slope_bound(const Drawing& d, const PlacementTrace& trace) {
  const std::string name = "slopes";
  auto cap = [&](int k) -> Rat {
    if (trace.mode == IncMode::DistinctX) return Rat(k - 3);
    return Rat(static_cast<long long>(k - 1) * (k - 2), 2);
  };
  for (const auto& step : trace.steps) {
    Rat sk = cap(step.k);
    for (size_t i = 0; i + 1 < step.chain.size(); ++i) {
      const Pt& a = d.coords[step.chain[i]];
      const Pt& b = d.coords[step.chain[i + 1]];
      if (!slope_at_most(a, b, sk))
        return CheckReport::fail(
            name, "chain edge (" + std::to_string(step.chain[i]) + "," +
                      std::to_string(step.chain[i + 1]) + ") at step k=" +
                      std::to_string(step.k) + " exceeds slope bound");
    }
    if (step.k >= 4 || (trace.mode == IncMode::NonAligned && step.k >= 3)) {
      const Pt& cl = d.coords[step.c_left];
      const Pt& pv = d.coords[step.vertex];
      Rat bound = cl.y + (pv.x - cl.x) * cap(step.k - 1) + 1;
      if (trace.mode == IncMode::NonAligned) bound += step.k - 3;
      if (pv.y > bound)
        return CheckReport::fail(name,
                                 "row of v_k exceeds the equation bound at k=" +
                                     std::to_string(step.k));
    }
  }
  return CheckReport::ok(name);
}

namespace {

struct RookSearch {
  const PlanarEmbedding& emb;
  int n;
  std::vector<std::pair<int, int>> pos;  // (x, y), -1 when unplaced
  std::vector<char> col_used, row_used;
  std::vector<int> order;  // placement order of vertices
  std::vector<std::pair<int, int>> placed_edges;

  explicit RookSearch(const PlanarEmbedding& e) : emb(e), n(e.n) {
    pos.assign(n, {-1, -1});
    col_used.assign(n + 1, 0);
    row_used.assign(n + 1, 0);
    // Most-constrained-first: descending degree.
    for (int v = 0; v < n; ++v) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (emb.degree(a) != emb.degree(b)) return emb.degree(a) > emb.degree(b);
      return a < b;
    });
  }

  bool ok_placement(int v, int x, int y) {
    LLPt p{x, y};
    // p not inside an existing segment; new segments avoid old ones.
    for (auto [a, b] : placed_edges) {
      LLPt pa{pos[a].first, pos[a].second}, pb{pos[b].first, pos[b].second};
      if (strictly_on_seg(pa, pb, p)) return false;
    }
    for (int u : emb.rotations[v]) {
      if (pos[u].first < 0) continue;
      LLPt pu{pos[u].first, pos[u].second};
      for (int w = 0; w < n; ++w) {
        if (w == v || w == u || pos[w].first < 0) continue;
        LLPt pw{pos[w].first, pos[w].second};
        if (strictly_on_seg(p, pu, pw)) return false;
      }
      for (auto [a, b] : placed_edges) {
        LLPt pa{pos[a].first, pos[a].second}, pb{pos[b].first, pos[b].second};
        if (a == u || b == u) {
          // shared endpoint pu
          if (strictly_on_seg(p, pu, pa) || strictly_on_seg(p, pu, pb))
            return false;
          if (strictly_on_seg(pa, pb, p)) return false;
        } else if (segs_intersect(p, pu, pa, pb)) {
          return false;
        }
      }
    }
    return true;
  }

  // Visits every complete rook placement (modulo a dihedral symmetry cut on
  // the first vertex); stops early when the visitor returns true.
  template <class Visit>
  bool dfs(size_t idx, const Visit& visit) {
    if (idx == order.size()) return visit(pos);
    int v = order[idx];
    int xmax = idx == 0 ? (n + 1) / 2 : n;
    for (int x = 1; x <= xmax; ++x) {
      if (col_used[x]) continue;
      int ymax = idx == 0 ? x : n;
      for (int y = 1; y <= ymax; ++y) {
        if (row_used[y]) continue;
        if (!ok_placement(v, x, y)) continue;
        pos[v] = {x, y};
        col_used[x] = row_used[y] = 1;
        size_t mark = placed_edges.size();
        for (int u : emb.rotations[v])
          if (pos[u].first >= 0 && u != v) placed_edges.push_back({v, u});
        bool stop = dfs(idx + 1, visit);
        placed_edges.resize(mark);
        pos[v] = {-1, -1};
        col_used[x] = row_used[y] = 0;
        if (stop) return true;
      }
    }
    return false;
  }
};

PlanarEmbedding without_edges(const PlanarEmbedding& emb,
                              const std::vector<Edge>& skip) {
  PlanarEmbedding g = emb;
  for (const Edge& e : skip) {
    auto& ru = g.rotations[e.first];
    ru.erase(std::find(ru.begin(), ru.end(), e.second));
    auto& rv = g.rotations[e.second];
    rv.erase(std::find(rv.begin(), rv.end(), e.first));
  }
  return g;
}

Drawing placement_to_drawing(const PlanarEmbedding& g,
                             const std::vector<std::pair<int, int>>& pos) {
  Drawing d = drawing_for(g);
  for (int v = 0; v < g.n; ++v) d.coords[v] = Pt(pos[v].first, pos[v].second);
  d.algo = "exhaustive";
  d.update_grid_meta();
  return d;
}

}  // namespace

std::optional<Drawing> exhaustive_rook_search(const PlanarEmbedding& emb,
                                              int allow_bends) {
  if (emb.n > 7)
    throw GraphError("exhaustive_rook_search: n > 7 is out of budget");

  {
    RookSearch rs(emb);
    std::optional<Drawing> found;
    rs.dfs(0, [&](const std::vector<std::pair<int, int>>& pos) {
      found = placement_to_drawing(emb, pos);
      return true;
    });
    if (found) return found;
  }
  if (allow_bends < 1) return std::nullopt;

  // One bend suffices for everything this oracle is asked about: for each
  // candidate bend edge, enumerate straight-line rook drawings of the rest
  // and try every integer grid point as the bend.
  std::vector<Edge> all_edges;
  for (int u = 0; u < emb.n; ++u)
    for (int v : emb.rotations[u])
      if (u < v) all_edges.push_back({u, v});

  for (const Edge& e : all_edges) {
    PlanarEmbedding g = without_edges(emb, {e});
    RookSearch rs(g);
    std::optional<Drawing> found;
    rs.dfs(0, [&](const std::vector<std::pair<int, int>>& pos) {
      Drawing base = placement_to_drawing(g, pos);
      for (int bx = 1; bx <= emb.n; ++bx)
        for (int by = 1; by <= emb.n; ++by) {
          Drawing cand = base;
          cand.edges.push_back({e.first, e.second, {Pt(bx, by)}});
          if (check_planar(cand).pass) {
            cand.update_grid_meta();
            cand.algo = "exhaustive-1bend";
            found = cand;
            return true;
          }
        }
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace rookdraw
