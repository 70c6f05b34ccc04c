#include "rookdraw/stats.hpp"

#include <chrono>
#include <sstream>

#include "rookdraw/generators.hpp"
#include "rookdraw/incremental.hpp"
#include "rookdraw/nested.hpp"
#include "rookdraw/pipeline.hpp"
#include "rookdraw/ri_drawing.hpp"
#include "rookdraw/schnyder.hpp"
#include "rookdraw/triangles.hpp"
#include "rookdraw/triangulate.hpp"

namespace rookdraw {

namespace {

Rat max_chain_slope(const Drawing& d, const PlacementTrace& trace) {
  Rat best = 0;
  for (const auto& step : trace.steps)
    for (size_t i = 0; i + 1 < step.chain.size(); ++i) {
      const Pt& a = d.coords[step.chain[i]];
      const Pt& b = d.coords[step.chain[i + 1]];
      Rat dx = b.x - a.x, dy = b.y - a.y;
      if (dx < 0) {
        dx = -dx;
        dy = -dy;
      }
      if (dx != 0) best = std::max(best, Rat(dy / dx));
    }
  return best;
}

}  // namespace

Drawing draw_by_name(const std::string& algo, const PlanarEmbedding& emb,
                     PlacementTrace* trace_out) {
  auto triangulated = [&]() {
    TriangulationResult tr = triangulate(emb);
    return tr;
  };

  if (algo == "schnyder") {
    TriangulationResult tr = triangulated();
    Drawing d = nonaligned_schnyder_drawing(tr.emb);
    remove_edges(d, tr.added_edges);
    return d;
  }
  if (algo == "inc-x" || algo == "inc-nonaligned") {
    TriangulationResult tr = triangulated();
    IncrementalResult r = algo == "inc-x"
                              ? distinct_x_drawing(tr.emb)
                              : nonaligned_incremental_drawing(tr.emb);
    if (trace_out) *trace_out = r.trace;
    remove_edges(r.drawing, tr.added_edges);
    return r.drawing;
  }
  if (algo == "nested") {
    auto g = recognize_nested(emb);
    if (!g) throw GraphError("draw: input is not a nested-triangle graph");
    return draw_nested(*g);
  }
  if (algo == "bbm") return extend_bbm(emb, default_outer_edge(emb));
  if (algo == "one-bend") return one_bend_rook(emb);
  if (algo == "stretch-tall") return stretch_tall(emb);
  if (algo == "stretch-square") return stretch_square(emb);
  if (algo == "rook-bends") return rook_with_bends(emb).result;
  throw GraphError("unknown algorithm: " + algo);
}

std::vector<StatsRow> run_stats(const StatsRequest& req) {
  std::vector<StatsRow> rows;
  for (int n = req.n_min; n <= req.n_max; n += req.n_step) {
    for (int s = 0; s < req.seeds; ++s) {
      std::uint64_t seed = req.seed0 + static_cast<std::uint64_t>(s);
      PlanarEmbedding emb = generate(req.type, n, seed);
      for (const auto& algo : req.algos) {
        StatsRow row;
        row.graph_id = req.type + "-n" + std::to_string(n) + "-s" +
                       std::to_string(seed);
        row.n = emb.n;
        row.m = emb.edge_count();
        row.f_g = emb.is_triangulated()
                      ? classify_triangles(emb).filled_count
                      : -1;
        row.algo = algo;
        auto t0 = std::chrono::steady_clock::now();
        PlacementTrace trace;
        Drawing d = draw_by_name(algo, emb, &trace);
        auto t1 = std::chrono::steady_clock::now();
        row.wall_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                .count();
        row.width = d.width;
        row.height = d.height;
        row.bends = d.bend_count();
        if (!trace.steps.empty())
          row.max_slope = rat_to_string(max_chain_slope(d, trace));
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::string stats_to_csv(const std::vector<StatsRow>& rows) {
  std::ostringstream s;
  s << "graph_id,n,m,f_G,algo,width,height,bends,max_slope,wall_ms\n";
  for (const auto& r : rows) {
    s << r.graph_id << ',' << r.n << ',' << r.m << ',';
    if (r.f_g >= 0) s << r.f_g;
    s << ',' << r.algo << ',' << r.width << ',' << r.height << ',' << r.bends
      << ',' << r.max_slope << ',' << r.wall_ms << '\n';
  }
  return s.str();
}

}  // namespace rookdraw
