#include "rookdraw/pipeline.hpp"

#include <algorithm>
#include <map>

#include "rookdraw/ri_drawing.hpp"
#include "rookdraw/verify.hpp"

namespace rookdraw {

namespace {

std::vector<Edge> outer_edges(const PlanarEmbedding& emb) {
  std::vector<Edge> out;
  int L = static_cast<int>(emb.outer_face.size());
  for (int i = 0; i < L; ++i)
    out.push_back(make_edge(emb.outer_face[i], emb.outer_face[(i + 1) % L]));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PipelineRun rook_with_bends(const PlanarEmbedding& emb) {
  int n = emb.n;
  if (n < 5) throw GraphError("rook_with_bends: n >= 5 required");
  if (!emb.is_triangulated())
    throw GraphError("rook_with_bends: input not triangulated");

  PipelineRun run;

  // Step 1-2: smallest independent-filled-hitting set over the three outer
  // edges, both construction routes; ties by edge id then by route.
  {
    bool have = false;
    for (const Edge& e_o : outer_edges(emb)) {
      for (int route = 0; route < 2; ++route) {
        HittingSet hs = route == 0 ? recursive_hitting_set(emb, e_o)
                                   : min_weight_hitting_set(emb, e_o);
        if (!have || hs.edges.size() < run.hitting.edges.size()) {
          run.hitting = hs;
          have = true;
        }
      }
    }
  }
  TriangleReport rep = classify_triangles(emb);
  long long bound = std::min<long long>(
      rep.filled_count, (2LL * n - 5) / 3);
  if (static_cast<long long>(run.hitting.edges.size()) > bound)
    throw GraphError("rook_with_bends: hitting set exceeds min{f_G,(2n-5)/3}");

  // Step 3: subdivide E_s and re-triangulate.
  SubdivisionResult sub =
      subdivide_and_retriangulate(emb, run.hitting.interior());
  run.g1 = sub.emb;
  run.subdivision_vertices = sub.subdivision_vertices;

  // Every separating triangle of G1 must contain e_o.
  for (const auto& t : classify_triangles(run.g1).triangles)
    if (t.separating) {
      bool has_eo =
          std::find(t.v.begin(), t.v.end(), run.hitting.outer_edge.first) !=
              t.v.end() &&
          std::find(t.v.begin(), t.v.end(), run.hitting.outer_edge.second) !=
              t.v.end();
      if (!has_eo)
        throw GraphError(
            "rook_with_bends: G1 has a separating triangle avoiding e_o");
    }

  // Step 4: RI rook drawing of G1 - e_o.
  run.base = extend_bbm(run.g1, run.hitting.outer_edge);

  // Step 5: originals on the integer grid, subdivision vertices in between.
  std::vector<char> integer_set(run.g1.n, 1);
  for (auto& [e, x] : run.subdivision_vertices) integer_set[x] = 0;
  run.fractional = renormalize(run.base, integer_set);
  if (!check_ri(run.fractional).pass || !check_planar(run.fractional).pass)
    throw GraphError("rook_with_bends: renormalization broke the drawing");

  // Step 6: move each subdivision vertex onto neighbor grid lines.
  run.moved = run.fractional;
  for (auto& [e, x] : run.subdivision_vertices)
    run.moved = move_subdivision_vertex(run.moved, x).first;

  // Step 7: subdivision vertices become bends; straighten when planarity
  // allows; route e_o vertically from (1,n) and horizontally from (n,1).
  Drawing final_d;
  final_d.algo = "rook-bends";
  final_d.coords.assign(run.moved.coords.begin(),
                        run.moved.coords.begin() + n);
  std::map<Edge, int> subdivided;
  for (auto& [e, x] : run.subdivision_vertices) subdivided[e] = x;

  for (int u = 0; u < n; ++u)
    for (int v : emb.rotations[u]) {
      if (v <= u) continue;
      Edge e = make_edge(u, v);
      if (e == run.hitting.outer_edge) continue;
      auto it = subdivided.find(e);
      if (it == subdivided.end()) {
        final_d.edges.push_back({e.first, e.second, {}});
      } else {
        final_d.edges.push_back(
            {e.first, e.second, {run.moved.coords[it->second]}});
      }
    }
  // e_o with its bend in the corner shared by column 1 and row 1.
  final_d.edges.push_back(
      {run.hitting.outer_edge.first, run.hitting.outer_edge.second,
       {Pt(1, 1)}});

  if (!check_planar(final_d).pass)
    throw GraphError("rook_with_bends: assembled drawing not planar");

  // Straightening pass: drop a bend whenever the drawing stays planar.
  for (auto& e : final_d.edges) {
    if (e.bends.empty()) continue;
    if (make_edge(e.u, e.v) == run.hitting.outer_edge) continue;
    std::vector<Pt> saved = std::move(e.bends);
    e.bends.clear();
    if (!check_planar(final_d).pass) e.bends = std::move(saved);
  }

  final_d.update_grid_meta();
  run.result = final_d;

  CheckReport rook = check_rook(run.result, n);
  if (!rook.pass)
    throw GraphError("rook_with_bends: not a rook drawing: " + rook.detail);
  if (run.result.bend_count() > bound)
    throw GraphError("rook_with_bends: bend count exceeds the bound");
  return run;
}

}  // namespace rookdraw
