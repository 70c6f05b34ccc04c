#include "rookdraw/ri_drawing.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "rookdraw/triangles.hpp"
#include "rookdraw/verify.hpp"

namespace rookdraw {

namespace {

// ---------------------------------------------------------------------
// Rook RI search: rows are the ranks of a peeling order of H = emb - e,
// columns are chosen by backtracking over insertion slots. All constraints
// are order-theoretic: with every edge rectangle empty, two edges cross
// iff their column intervals nest one way and their row intervals nest the
// other way, so the search never needs coordinates.
// ---------------------------------------------------------------------

struct ColumnSearch {
  const std::vector<std::vector<int>>& adj;  // adjacency of H
  const std::vector<int>& order;             // v1..vn
  int n;
  int v2, v_second_last, v_last;
  long long budget;

  std::vector<int> rank;      // 1..n once placed, 0 otherwise
  std::vector<int> colv;      // vertex ids, left to right
  std::vector<int> pos;       // position in colv, -1 when unplaced
  std::vector<std::pair<int, int>> placed_edges;

  ColumnSearch(const std::vector<std::vector<int>>& a,
               const std::vector<int>& ord, int vb, int vsl, long long nodes)
      : adj(a),
        order(ord),
        n(static_cast<int>(ord.size())),
        v2(vb),
        v_second_last(vsl),
        v_last(ord.back()),
        budget(nodes) {
    rank.assign(n, 0);
    pos.assign(n, -1);
  }

  void reindex() {
    for (size_t i = 0; i < colv.size(); ++i) pos[colv[i]] = static_cast<int>(i);
  }

  bool edges_ok(int v) {
    // Constraints for the edges from v (the newest, topmost vertex) to its
    // already-placed neighbors.
    for (int q : adj[v]) {
      if (!rank[q]) continue;
      int lo = std::min(pos[q], pos[v]), hi = std::max(pos[q], pos[v]);
      // Open rectangle of (q,v): rows in (rank q, rank v), cols in (lo,hi).
      for (int z : colv) {
        if (z == q || z == v) continue;
        if (rank[z] > rank[q] && pos[z] > lo && pos[z] < hi) return false;
      }
      // Crossing pattern against every placed edge.
      for (auto [a, b] : placed_edges) {
        if (a == q || b == q || a == v || b == v) continue;
        int clo = std::min(pos[a], pos[b]), chi = std::max(pos[a], pos[b]);
        int rlo = std::min(rank[a], rank[b]), rhi = std::max(rank[a], rank[b]);
        int qlo = std::min(rank[q], rank[v]), qhi = std::max(rank[q], rank[v]);
        bool cols_inside = lo > clo && hi < chi;
        bool cols_outside = clo > lo && chi < hi;
        bool rows_inside = qlo > rlo && qhi < rhi;
        bool rows_outside = rlo > qlo && rhi < qhi;
        if ((cols_inside && rows_outside) || (cols_outside && rows_inside))
          return false;
      }
    }
    return true;
  }

  bool place(int k, std::vector<int>& out) {
    if (--budget < 0) return false;
    if (k > n) {
      out = colv;
      return true;
    }
    int v = order[k - 1];

    std::vector<int> slots;
    if (k == 1) {
      slots = {0};
    } else if (v == v2) {
      slots = {0};  // immediately left of v1; ends at column 2
    } else if (v == v_second_last) {
      slots = {static_cast<int>(colv.size()) - 1};  // just left of v1
    } else if (v == v_last) {
      slots = {0};  // leftmost column
    } else {
      // Anywhere strictly right of v2 and left of v1 (the rightmost).
      int lo = pos[v2] + 1;
      int hi = static_cast<int>(colv.size()) - 1;
      // Heuristic: positions near the median of placed neighbors first.
      long long mid = 0, cnt = 0;
      for (int q : adj[v])
        if (rank[q]) {
          mid += pos[q];
          ++cnt;
        }
      int center = cnt ? static_cast<int>((mid + cnt / 2) / cnt) + 1 : lo;
      center = std::clamp(center, lo, hi);
      slots.push_back(center);
      for (int d = 1; d <= hi - lo; ++d) {
        if (center + d <= hi) slots.push_back(center + d);
        if (center - d >= lo) slots.push_back(center - d);
      }
    }

    for (int slot : slots) {
      colv.insert(colv.begin() + slot, v);
      reindex();
      rank[v] = k;
      size_t mark = placed_edges.size();
      for (int q : adj[v])
        if (rank[q] && q != v) placed_edges.push_back({v, q});
      if (edges_ok(v) && place(k + 1, out)) return true;
      placed_edges.resize(mark);
      rank[v] = 0;
      colv.erase(colv.begin() + slot);
      reindex();
      pos[v] = -1;
      if (budget < 0) return false;
    }
    return false;
  }
};

struct Corners {
  int u, w, t, s;  // e = (u,w); t outer apex, s inner apex
};

Corners corner_vertices(const PlanarEmbedding& emb, Edge e) {
  const auto& of = emb.outer_face;
  if (of.size() != 3) throw GraphError("bbm: outer face must be a triangle");
  int L = 3;
  bool on_outer = false;
  for (int i = 0; i < L; ++i)
    if (make_edge(of[i], of[(i + 1) % L]) == e) on_outer = true;
  if (!on_outer) throw GraphError("bbm: e must lie on the outer face");

  Corners c{};
  c.u = e.first;
  c.w = e.second;
  c.t = -1;
  for (int v : of)
    if (v != c.u && v != c.w) c.t = v;
  auto [a, b] = triangle_faces_of_edge(emb, c.u, c.w);
  c.s = (a == c.t) ? b : a;
  if (c.s == c.t) throw GraphError("bbm: degenerate outer configuration");
  return c;
}

// Peeling orders of H with pinned ends: v1 (bottom), base partner v2,
// second-to-last and last vertices fixed. Enumerates up to max_orders.
std::vector<std::vector<int>> peeling_orders(
    const std::vector<std::vector<int>>& adj, const std::vector<int>& outer,
    int v1, int v2, int v_second_last, int v_last, size_t max_orders) {
  int n = static_cast<int>(adj.size());
  std::vector<std::vector<int>> orders;

  struct Peel {
    const std::vector<std::vector<int>>& adj;
    int n, v1, v2;
    std::vector<char> alive, on_outer;
    std::vector<int> next_cw, prev_cw, outer_nbrs;

    bool removable(int v) const {
      return alive[v] && on_outer[v] && v != v1 && v != v2 &&
             outer_nbrs[v] == 2;
    }
  };

  Peel p{adj,
         n,
         v1,
         v2,
         std::vector<char>(n, 1),
         std::vector<char>(n, 0),
         std::vector<int>(n, -1),
         std::vector<int>(n, -1),
         std::vector<int>(n, 0)};

  int L = static_cast<int>(outer.size());
  for (int i = 0; i < L; ++i) {
    int a = outer[i], b = outer[(i + 1) % L];
    p.next_cw[a] = b;
    p.prev_cw[b] = a;
    p.on_outer[a] = 1;
  }
  for (int v : outer)
    for (int u : adj[v])
      if (p.on_outer[u]) ++p.outer_nbrs[v];

  std::vector<int> removed;  // in peeling order: v_n, v_{n-1}, ...

  // Remove v on the outer cycle; returns the undo closure via state copies
  // (n is small here; plain copies keep this simple).
  auto snapshot = [&]() {
    return std::make_tuple(p.alive, p.on_outer, p.next_cw, p.prev_cw,
                           p.outer_nbrs);
  };
  auto restore = [&](auto& snap) {
    std::tie(p.alive, p.on_outer, p.next_cw, p.prev_cw, p.outer_nbrs) = snap;
  };

  auto remove_vertex = [&](int v) -> bool {
    int a = p.prev_cw[v], b = p.next_cw[v];
    std::vector<int> arc;
    {
      const auto& rot = p.adj[v];
      auto it = std::find(rot.begin(), rot.end(), a);
      if (it == rot.end()) return false;
      int start = static_cast<int>(it - rot.begin());
      int deg = static_cast<int>(rot.size());
      for (int t = 0; t < deg; ++t) {
        int u = rot[(start + t) % deg];
        if (!p.alive[u]) break;
        arc.push_back(u);
        if (u == b) break;
      }
      int alive_deg = 0;
      for (int u : rot)
        if (p.alive[u]) ++alive_deg;
      if (arc.empty() || arc.front() != a || arc.back() != b ||
          static_cast<int>(arc.size()) != alive_deg)
        return false;
    }
    p.alive[v] = 0;
    p.on_outer[v] = 0;
    for (int u : p.adj[v])
      if (p.alive[u] && p.on_outer[u]) --p.outer_nbrs[u];
    for (size_t i = 0; i + 1 < arc.size(); ++i) {
      p.next_cw[arc[i]] = arc[i + 1];
      p.prev_cw[arc[i + 1]] = arc[i];
    }
    for (size_t i = 1; i + 1 < arc.size(); ++i) {
      int x = arc[i];
      p.on_outer[x] = 1;
      p.outer_nbrs[x] = 0;
      for (int u : p.adj[x])
        if (p.alive[u] && p.on_outer[u]) ++p.outer_nbrs[x];
      for (int u : p.adj[x])
        if (p.alive[u] && p.on_outer[u]) ++p.outer_nbrs[u];
    }
    return true;
  };

  std::function<void()> dfs = [&]() {
    if (orders.size() >= max_orders) return;
    int placed = static_cast<int>(removed.size());
    if (placed == n - 2) {
      std::vector<int> ord{v1, v2};
      ord.insert(ord.end(), removed.rbegin(), removed.rend());
      orders.push_back(std::move(ord));
      return;
    }
    std::vector<int> cands;
    if (placed == 0) {
      cands = {v_last};
    } else if (placed == 1) {
      cands = {v_second_last};
    } else {
      for (int v = 0; v < n; ++v)
        if (p.removable(v) && v != v_second_last && v != v_last) cands.push_back(v);
    }
    for (int v : cands) {
      if (!p.removable(v)) continue;
      auto snap = snapshot();
      if (remove_vertex(v)) {
        removed.push_back(v);
        dfs();
        removed.pop_back();
      }
      restore(snap);
      if (orders.size() >= max_orders) return;
    }
  };
  dfs();
  return orders;
}

Drawing certified_or_throw(const PlanarEmbedding& h_emb,
                           const std::vector<int>& colv,
                           const std::vector<int>& rank, const Corners& c,
                           const char* who) {
  int n = h_emb.n;
  Drawing d = drawing_for(h_emb);
  for (size_t i = 0; i < colv.size(); ++i)
    d.coords[colv[i]] = Pt(static_cast<long long>(i) + 1, rank[colv[i]]);
  d.algo = "bbm";
  d.update_grid_meta();

  auto expect = [&](int v, long long x, long long y) {
    if (!(d.coords[v] == Pt(x, y)))
      throw ConstructionNotFound(std::string(who) + ": corner misplaced");
  };
  expect(c.u, 1, n);
  expect(c.w, n, 1);
  bool t22 = d.coords[c.t] == Pt(2, 2);
  bool s22 = d.coords[c.s] == Pt(2, 2);
  bool tnn = d.coords[c.t] == Pt(n - 1, n - 1);
  bool snn = d.coords[c.s] == Pt(n - 1, n - 1);
  if (!((t22 && snn) || (s22 && tnn)))
    throw ConstructionNotFound(std::string(who) + ": corner misplaced");

  if (!check_rook(d, n).pass || !check_ri(d).pass || !check_planar(d).pass)
    throw ConstructionNotFound(std::string(who) +
                               ": search produced an uncertified drawing");
  return d;
}

PlanarEmbedding minus_edge(const PlanarEmbedding& emb, Edge e) {
  PlanarEmbedding h = emb;
  auto& ru = h.rotations[e.first];
  ru.erase(std::find(ru.begin(), ru.end(), e.second));
  auto& rv = h.rotations[e.second];
  rv.erase(std::find(rv.begin(), rv.end(), e.first));
  // New outer face: the old outer triangle opened up across e.
  bool found = false;
  for (const auto& f : compute_faces(h))
    if (f.size() == 4) {
      std::vector<int> fs = f;
      std::sort(fs.begin(), fs.end());
      if (std::find(fs.begin(), fs.end(), e.first) != fs.end() &&
          std::find(fs.begin(), fs.end(), e.second) != fs.end()) {
        h.outer_face = f;
        found = true;
        break;
      }
    }
  if (!found) throw GraphError("minus_edge: no quadrilateral outer face");
  return h;
}

}  // namespace

Edge default_outer_edge(const PlanarEmbedding& emb) {
  const auto& of = emb.outer_face;
  Edge best{emb.n, emb.n};
  for (size_t i = 0; i < of.size(); ++i)
    best = std::min(best, make_edge(of[i], of[(i + 1) % of.size()]));
  return best;
}

Drawing bbm_drawing(const PlanarEmbedding& emb, Edge e) {
  if (emb.n < 4) throw GraphError("bbm_drawing: n >= 4 required");
  if (!emb.is_triangulated())
    throw GraphError("bbm_drawing: input not triangulated");
  if (!classify_triangles(emb).four_connected)
    throw GraphError("bbm_drawing: separating triangle present; use extend_bbm");

  Corners c = corner_vertices(emb, e);
  PlanarEmbedding h = minus_edge(emb, e);

  std::vector<std::vector<int>>& adj = h.rotations;

  // Both reflections: t at (2,2) with s at (n-1,n-1), and vice versa.
  const std::array<std::pair<int, int>, 2> variants{
      std::pair{c.t, c.s}, std::pair{c.s, c.t}};
  const std::array<long long, 3> budgets{20'000, 400'000, 8'000'000};
  const std::array<size_t, 3> order_caps{8, 32, 128};

  for (size_t round = 0; round < budgets.size(); ++round) {
    for (auto [bottom, top] : variants) {
      // v1 = w at (n,1); v2 = bottom at (2,2); v_{n-1} = top; v_n = u.
      auto orders = peeling_orders(adj, h.outer_face, c.w, bottom, top, c.u,
                                   order_caps[round]);
      for (const auto& ord : orders) {
        ColumnSearch cs(adj, ord, bottom, top, budgets[round]);
        std::vector<int> colv;
        if (cs.place(1, colv)) {
          std::vector<int> rank(h.n, 0);
          for (int k = 1; k <= h.n; ++k) rank[ord[k - 1]] = k;
          return certified_or_throw(h, colv, rank, c, "bbm_drawing");
        }
      }
    }
  }
  throw ConstructionNotFound("bbm_drawing: construction-not-found");
}

namespace {

// 180-degree rotation of an integer rook drawing.
void rotate_180(Drawing& d, int n) {
  for (auto& p : d.coords) p = Pt(Rat(n + 1) - p.x, Rat(n + 1) - p.y);
}

const Triangle* maximal_separating_on(const TriangleReport& rep, Edge e) {
  const Triangle* best = nullptr;
  for (const auto& t : rep.triangles) {
    if (!t.separating) continue;
    bool has_e =
        std::find(t.v.begin(), t.v.end(), e.first) != t.v.end() &&
        std::find(t.v.begin(), t.v.end(), e.second) != t.v.end();
    if (!has_e)
      throw GraphError("extend_bbm: separating triangle avoids e");
    if (!best || t.inside.size() > best->inside.size()) best = &t;
  }
  return best;
}

}  // namespace

Drawing extend_bbm(const PlanarEmbedding& emb, Edge e) {
  TriangleReport rep = classify_triangles(emb);
  if (rep.four_connected) return bbm_drawing(emb, e);

  const Triangle* T = maximal_separating_on(rep, e);
  int x = -1;
  for (int v : T->v)
    if (v != e.first && v != e.second) x = v;

  SplitResult split = split_at_triangle(emb, T->v);

  auto map_of = [](const std::vector<int>& to_orig, int n_orig) {
    std::vector<int> inv(n_orig, -1);
    for (size_t i = 0; i < to_orig.size(); ++i)
      inv[to_orig[i]] = static_cast<int>(i);
    return inv;
  };
  std::vector<int> orig_to_in = map_of(split.inside_to_orig, emb.n);
  std::vector<int> orig_to_out = map_of(split.outside_to_orig, emb.n);

  Edge e_in = make_edge(orig_to_in[e.first], orig_to_in[e.second]);
  Edge e_out = make_edge(orig_to_out[e.first], orig_to_out[e.second]);

  Drawing inner = extend_bbm(split.inside, e_in);
  Drawing outer = extend_bbm(split.outside, e_out);
  int n1 = split.inside.n, n2 = split.outside.n;

  // Reflect so x sits at (2,2) outside and at (n1-1, n1-1) inside.
  if (outer.coords[orig_to_out[x]] == Pt(n2 - 1, n2 - 1))
    rotate_180(outer, n2);
  if (!(outer.coords[orig_to_out[x]] == Pt(2, 2)))
    throw GraphError("extend_bbm: x not at a corner of the outer drawing");
  if (inner.coords[orig_to_in[x]] == Pt(2, 2)) rotate_180(inner, n1);
  if (!(inner.coords[orig_to_in[x]] == Pt(n1 - 1, n1 - 1)))
    throw GraphError("extend_bbm: x not at a corner of the inner drawing");

  // Merge on original ids: outer wins for u, w, x; the inner drawing minus
  // {u, w} lands in (1,2] x (1,2] via t -> 1 + (t-1)/(n1-2).
  Drawing merged = drawing_for(emb);
  merged.algo = "bbm";
  for (int v = 0; v < emb.n; ++v) {
    if (orig_to_out[v] >= 0) {
      merged.coords[v] = outer.coords[orig_to_out[v]];
    } else {
      const Pt& p = inner.coords[orig_to_in[v]];
      Rat scale(1, n1 - 2);
      merged.coords[v] =
          Pt(Rat(1) + (p.x - 1) * scale, Rat(1) + (p.y - 1) * scale);
    }
  }
  remove_edges(merged, {e});

  // Disjoint open ranges except at the identified vertices.
  for (int v = 0; v < emb.n; ++v) {
    if (orig_to_out[v] >= 0 || v == x) continue;
    if (!(merged.coords[v].x > 1 && merged.coords[v].x < 2 &&
          merged.coords[v].y > 1 && merged.coords[v].y < 2))
      throw GraphError("extend_bbm: inner drawing leaks out of (1,2)^2");
  }

  std::vector<char> all_int(emb.n, 1);
  Drawing out = renormalize(merged, all_int);
  out.algo = "bbm";

  Corners c = corner_vertices(emb, e);
  std::vector<int> colv(emb.n), rank(emb.n);
  for (int v = 0; v < emb.n; ++v) {
    colv[to_ll(out.coords[v].x) - 1] = v;
    rank[v] = static_cast<int>(to_ll(out.coords[v].y));
  }
  PlanarEmbedding h = minus_edge(emb, e);
  return certified_or_throw(h, colv, rank, c, "extend_bbm");
}

Drawing renormalize(const Drawing& d, const std::vector<char>& integer_set) {
  int n = d.n();
  long long vx = 0;
  for (int v = 0; v < n; ++v)
    if (!integer_set[v]) ++vx;

  Drawing out = d;
  for (int axis = 0; axis < 2; ++axis) {
    std::vector<int> by(n);
    for (int v = 0; v < n; ++v) by[v] = v;
    auto coord = [&](int v) -> const Rat& {
      return axis == 0 ? d.coords[v].x : d.coords[v].y;
    };
    std::sort(by.begin(), by.end(),
              [&](int a, int b) { return coord(a) < coord(b); });
    for (int i = 0; i + 1 < n; ++i)
      if (coord(by[i]) == coord(by[i + 1]))
        throw GraphError("renormalize: shared coordinate");

    Rat w = 0;
    Rat step(1, vx + 1);
    for (int v : by) {
      if (integer_set[v]) {
        BigInt fl = numerator(w) / denominator(w);  // w >= 0
        w = Rat(fl + 1);
      } else {
        w += step;
      }
      (axis == 0 ? out.coords[v].x : out.coords[v].y) = w;
    }
  }
  return out;
}

std::pair<Drawing, MoveReport> move_subdivision_vertex(const Drawing& d,
                                                       int x_e) {
  for (const auto& e : d.edges)
    if (!e.bends.empty())
      throw GraphError("move_subdivision_vertex: straight-line input only");

  std::vector<int> nbr;
  std::set<Edge> eset;
  for (const auto& e : d.edges) {
    eset.insert(make_edge(e.u, e.v));
    if (e.u == x_e) nbr.push_back(e.v);
    if (e.v == x_e) nbr.push_back(e.u);
  }
  if (nbr.size() != 4)
    throw GraphError("move_subdivision_vertex: degree must be 4");

  const Pt& px = d.coords[x_e];
  // Quadrant labeling u1..u4 = NE, NW, SW, SE.
  int q[4] = {-1, -1, -1, -1};
  for (int u : nbr) {
    const Pt& p = d.coords[u];
    if (p.x == px.x || p.y == px.y)
      throw GraphError("move_subdivision_vertex: shared grid line");
    int idx = p.x > px.x ? (p.y > px.y ? 0 : 3) : (p.y > px.y ? 1 : 2);
    if (q[idx] >= 0)
      throw GraphError("move_subdivision_vertex: two neighbors share a quadrant");
    q[idx] = u;
  }
  int u1 = q[0], u2 = q[1], u3 = q[2], u4 = q[3];
  // Neighbors must form the 4-cycle u1-u2-u3-u4.
  for (auto [a, b] : {std::pair{u1, u2}, std::pair{u2, u3}, std::pair{u3, u4},
                      std::pair{u4, u1}})
    if (!eset.count(make_edge(a, b)))
      throw GraphError("move_subdivision_vertex: neighbors not a 4-cycle");

  // Local frame: the five columns and rows, sorted.
  std::vector<Rat> xs, ys;
  for (int v : {x_e, u1, u2, u3, u4}) {
    xs.push_back(d.coords[v].x);
    ys.push_back(d.coords[v].y);
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  for (int i = 0; i < 4; ++i)
    if (xs[i] == xs[i + 1] || ys[i] == ys[i + 1])
      throw GraphError("move_subdivision_vertex: shared grid line");
  if (px.x != xs[2] || px.y != ys[2])
    throw GraphError("move_subdivision_vertex: x must sit at local (3,3)");

  auto occupied = [&](const Pt& p) {
    for (int v = 0; v < d.n(); ++v)
      if (d.coords[v] == p) return true;
    return false;
  };

  MoveReport rep;
  Pt target(xs[1], ys[1]);  // local (2,2)
  rep.target_local_col = 2;
  bool mirrored = false;
  if (occupied(target)) {
    target = Pt(xs[3], ys[1]);  // local (4,2), the mirrored case
    rep.target_local_col = 4;
    mirrored = true;
    if (occupied(target))
      throw GraphError("move_subdivision_vertex: both targets occupied");
  }

  // Appendix-B containments, stated for the (2,2) target; the (4,2) case is
  // the left-right mirror (u3 <-> u4, u2 <-> u1, local columns reversed).
  auto open_rect_empty = [&](const Pt& a, const Pt& b) {
    Rat xlo = std::min(a.x, b.x), xhi = std::max(a.x, b.x);
    Rat ylo = std::min(a.y, b.y), yhi = std::max(a.y, b.y);
    for (int v = 0; v < d.n(); ++v) {
      const Pt& p = d.coords[v];
      if (v == x_e) continue;  // x is being moved away
      if (xlo < p.x && p.x < xhi && ylo < p.y && p.y < yhi) return false;
    }
    return true;
  };
  auto rect_inside = [](const Pt& a1, const Pt& b1, const Pt& a2,
                        const Pt& b2) {
    Rat xlo1 = std::min(a1.x, b1.x), xhi1 = std::max(a1.x, b1.x);
    Rat ylo1 = std::min(a1.y, b1.y), yhi1 = std::max(a1.y, b1.y);
    Rat xlo2 = std::min(a2.x, b2.x), xhi2 = std::max(a2.x, b2.x);
    Rat ylo2 = std::min(a2.y, b2.y), yhi2 = std::max(a2.y, b2.y);
    return xlo2 <= xlo1 && xhi1 <= xhi2 && ylo2 <= ylo1 && yhi1 <= yhi2;
  };

  // Role labels: a3 lower-left of the target, a4 lower-right, a2 upper-left,
  // a1 upper-right; role-local column j maps to the real column lx(j).
  int a3 = mirrored ? u4 : u3;
  int a4 = mirrored ? u3 : u4;
  int a2 = mirrored ? u1 : u2;
  int a1 = mirrored ? u2 : u1;
  auto lx = [&](int j) { return mirrored ? xs[5 - j] : xs[j - 1]; };
  auto ly = [&](int j) { return ys[j - 1]; };

  rep.r_u3_contained = rect_inside(target, d.coords[a3], px, d.coords[a3]) &&
                       open_rect_empty(target, d.coords[a3]);
  rep.r_u4_contained =
      rect_inside(target, d.coords[a4], d.coords[a3], d.coords[a4]) &&
      open_rect_empty(target, d.coords[a4]);
  rep.r_u2_contained =
      rect_inside(target, d.coords[a2], d.coords[a2], d.coords[a3]) &&
      open_rect_empty(target, d.coords[a2]);

  // R(x', u1) is covered by R1 = R((2,2),(4,4)), R2 = R((2,4),(4,5)),
  // R3 = R((4,2),(5,4)) and, when u1 sits at (5,5), R4 = R((4,4),(5,5));
  // each piece must be empty.
  {
    bool col5 = d.coords[a1].x == lx(5);
    bool row5 = d.coords[a1].y == ly(5);
    bool pieces = open_rect_empty(Pt(lx(2), ly(2)), Pt(lx(4), ly(4)));
    if (row5) pieces = pieces && open_rect_empty(Pt(lx(2), ly(4)), Pt(lx(4), ly(5)));
    if (col5) pieces = pieces && open_rect_empty(Pt(lx(4), ly(2)), Pt(lx(5), ly(4)));
    if (col5 && row5)
      pieces = pieces && open_rect_empty(Pt(lx(4), ly(4)), Pt(lx(5), ly(5)));
    rep.r_u1_covered = pieces && open_rect_empty(target, d.coords[a1]);
  }
  if (!rep.r_u3_contained || !rep.r_u4_contained || !rep.r_u2_contained ||
      !rep.r_u1_covered)
    throw GraphError("move_subdivision_vertex: Appendix-B containment failed");

  Drawing out = d;
  out.coords[x_e] = target;

  CheckReport pl = check_planar(out);
  if (!pl.pass)
    throw GraphError("move_subdivision_vertex: planarity lost: " + pl.detail);
  CheckReport ri = check_ri(out);
  if (!ri.pass)
    throw GraphError("move_subdivision_vertex: RI property lost: " + ri.detail);
  return {out, rep};
}

namespace {

Drawing base_rook_drawing(const PlanarEmbedding& emb, Edge& e_out) {
  if (!classify_triangles(emb).four_connected)
    throw GraphError("4-connected triangulation required");
  Edge e = default_outer_edge(emb);
  e_out = e;
  return bbm_drawing(emb, e);
}

int vertex_at(const Drawing& d, long long x, long long y) {
  for (int v = 0; v < d.n(); ++v)
    if (d.coords[v] == Pt(x, y)) return v;
  throw GraphError("expected a vertex at a grid corner");
}

}  // namespace

Drawing one_bend_rook(const PlanarEmbedding& emb) {
  Edge e;
  Drawing d = base_rook_drawing(emb, e);
  int n = emb.n;
  int top = vertex_at(d, 1, n);
  int bot = vertex_at(d, n, 1);
  d.edges.push_back({top, bot, {Pt(1, 1)}});
  d.algo = "one-bend";
  d.update_grid_meta();
  CheckReport pl = check_planar(d);
  if (!pl.pass) throw GraphError("one_bend_rook: " + pl.detail);
  return d;
}

Drawing stretch_tall(const PlanarEmbedding& emb) {
  Edge e;
  Drawing d = base_rook_drawing(emb, e);
  long long n = emb.n;
  int top = vertex_at(d, 1, n);
  int bot = vertex_at(d, n, 1);
  d.coords[top] = Pt(1, n * n - 3 * n + 4);
  d.edges.push_back({top, bot, {}});
  d.algo = "stretch-tall";
  d.update_grid_meta();
  for (auto& chk : {check_planar(d), check_non_aligned(d)})
    if (!chk.pass) throw GraphError("stretch_tall: " + chk.detail);
  return d;
}

Drawing stretch_square(const PlanarEmbedding& emb) {
  Edge e;
  Drawing d = base_rook_drawing(emb, e);
  long long n = emb.n;
  int top = vertex_at(d, 1, n);
  int bot = vertex_at(d, n, 1);
  d.coords[top] = Pt(1, 2 * n - 2);
  d.coords[bot] = Pt(2 * n - 2, 1);
  d.edges.push_back({top, bot, {}});
  d.algo = "stretch-square";
  d.update_grid_meta();
  for (auto& chk : {check_planar(d), check_non_aligned(d)})
    if (!chk.pass) throw GraphError("stretch_square: " + chk.detail);
  return d;
}

}  // namespace rookdraw
