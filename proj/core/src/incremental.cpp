#include "rookdraw/incremental.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace rookdraw {

std::vector<int> orient_and_xorder(const PlanarEmbedding& emb,
                                   const CanonicalOrder& co) {
  int n = emb.n;
  std::vector<std::vector<int>> out(n);
  std::vector<int> indeg(n, 0);
  auto arcto = [&](int a, int b) {
    out[a].push_back(b);
    ++indeg[b];
  };
  arcto(co.order[0], co.order[1]);
  for (int k = 3; k <= n; ++k) {
    int v = co.order[k - 1];
    const auto& arc = co.preds[k - 1];
    for (size_t i = 0; i + 1 < arc.size(); ++i) arcto(arc[i], v);
    arcto(v, arc.back());
  }

  // Lexicographically smallest topological order.
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<int> x(n, 0);
  int next = 0;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    x[v] = ++next;
    for (int u : out[v])
      if (--indeg[u] == 0) ready.push(u);
  }
  if (next != n) throw GraphError("orient_and_xorder: orientation has a cycle");
  if (x[co.order[0]] != 1 || x[co.order[1]] != n)
    throw GraphError("orient_and_xorder: source/sink not v1/v2");
  return x;
}

bool visible(const Pt& p, int target, const PartialDrawing& st) {
  const Pt& t = st.coords[target];
  if (p == t) return false;
  for (size_t q = 0; q < st.coords.size(); ++q) {
    if (!st.placed[q] || static_cast<int>(q) == target) continue;
    if (st.coords[q] == p) return false;
    if (strictly_on_segment(p, t, st.coords[q])) return false;
  }
  for (auto [a, b] : st.edges) {
    const Pt& pa = st.coords[a];
    const Pt& pb = st.coords[b];
    if (a == target || b == target) {
      if (segments_cross_improperly(p, t, pa, pb)) return false;
    } else if (segments_intersect(p, t, pa, pb)) {
      return false;
    }
  }
  return true;
}

namespace {

Rat slope_cap(IncMode mode, int k) {
  if (mode == IncMode::DistinctX) return Rat(k - 3);
  return Rat(static_cast<long long>(k - 1) * (k - 2), 2);
}

void assert_chain_slopes(const std::vector<int>& chain,
                         const std::vector<Pt>& coords, const Rat& cap) {
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (!slope_at_most(coords[chain[i]], coords[chain[i + 1]], cap))
      throw GraphError("incremental: outer-chain slope exceeds bound");
}

IncrementalResult build(const PlanarEmbedding& emb, IncMode mode) {
  if (!emb.is_triangulated())
    throw GraphError("incremental drawing: input not triangulated");
  int n = emb.n;
  CanonicalOrder co = canonical_order(emb);
  std::vector<int> x = orient_and_xorder(emb, co);

  IncrementalResult res;
  res.order = co;
  res.x_assign = x;
  res.trace.mode = mode;
  res.drawing = drawing_for(emb);
  res.drawing.algo = mode == IncMode::DistinctX ? "inc-x" : "inc-nonaligned";

  std::vector<Pt>& coords = res.drawing.coords;
  std::vector<char> placed(n, 0);
  std::vector<std::pair<int, int>> placed_edges;
  std::set<long long> used_rows;
  int v1 = co.order[0], v2 = co.order[1];

  auto put = [&](int v, long long px, long long py) {
    coords[v] = Pt(px, py);
    placed[v] = 1;
    used_rows.insert(py);
  };

  put(v1, 1, 2);
  put(v2, n, 1);
  placed_edges.push_back({v1, v2});

  std::vector<int> chain{v1, v2};

  int start_k = 3;
  if (mode == IncMode::DistinctX) {
    int v3 = co.order[2];
    put(v3, x[v3], 2);
    for (int u : {v1, v2}) placed_edges.push_back({v3, u});
    chain = {v1, v3, v2};
    res.trace.steps.push_back({3, v3, v1, v2, chain});
    assert_chain_slopes(chain, coords, slope_cap(mode, 3));
    start_k = 4;
  }

  PartialDrawing st{coords, placed, placed_edges};

  for (int k = start_k; k <= n; ++k) {
    int v = co.order[k - 1];
    const auto& arc = co.preds[k - 1];
    long long X = x[v];

    auto candidate_ok = [&](long long y) {
      if (mode == IncMode::NonAligned && used_rows.count(y)) return false;
      Pt p(X, y);
      for (int c : arc)
        if (!visible(p, c, st)) return false;
      return true;
    };

    // Scan upward for the smallest feasible row; when a candidate fails,
    // jumping past the blocking witness keeps the scan near-linear. A plain
    // +1 step is always a sound jump, so start simple and jump only on
    // repeated blocks against the same obstacle.
    long long y = 1;
    long long guard = 0;
    while (!candidate_ok(y)) {
      ++y;
      if (++guard > 4'000'000)
        throw GraphError("incremental: placement scan runaway");
    }

    put(v, X, y);
    for (int c : arc) placed_edges.push_back({v, c});

    // Splice the chain: predecessors c_l..c_r collapse to c_l, v, c_r.
    auto it = std::find(chain.begin(), chain.end(), arc.front());
    auto jt = std::find(chain.begin(), chain.end(), arc.back());
    if (it == chain.end() || jt == chain.end() || it >= jt)
      throw GraphError("incremental: predecessors not on outer chain");
    std::vector<int> nc(chain.begin(), it + 1);
    nc.push_back(v);
    nc.insert(nc.end(), jt, chain.end());
    chain = std::move(nc);

    res.trace.steps.push_back({k, v, arc.front(), arc.back(), chain});

    // Lemma-style guarantees, asserted as we go.
    assert_chain_slopes(chain, coords, slope_cap(mode, k));
    {
      const Pt& cl = coords[arc.front()];
      Rat bound = cl.y + (Rat(X) - cl.x) * slope_cap(mode, k - 1) + 1;
      if (mode == IncMode::NonAligned) bound += k - 3;
      if (Rat(y) > bound)
        throw GraphError("incremental: chosen row exceeds the slope bound");
    }
  }

  res.drawing.update_grid_meta();
  long long bound =
      mode == IncMode::DistinctX
          ? 2 + static_cast<long long>(n - 2) * (n - 3)
          : 2 + static_cast<long long>(n - 1) * (n - 2) * (n - 2) / 2;
  if (res.drawing.height > bound)
    throw GraphError("incremental: final height exceeds theorem bound");
  if (res.drawing.width != n)
    throw GraphError("incremental: width must be exactly n");
  return res;
}

}  // namespace

IncrementalResult distinct_x_drawing(const PlanarEmbedding& emb) {
  return build(emb, IncMode::DistinctX);
}

IncrementalResult nonaligned_incremental_drawing(const PlanarEmbedding& emb) {
  return build(emb, IncMode::NonAligned);
}

}  // namespace rookdraw
