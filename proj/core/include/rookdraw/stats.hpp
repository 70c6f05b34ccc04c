#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rookdraw/drawing.hpp"
#include "rookdraw/incremental.hpp"
#include "rookdraw/planar_graph.hpp"

namespace rookdraw {

// Dispatches a drawing algorithm by CLI name. Non-triangulated inputs are
// triangulated first and the helper edges removed from the result (for the
// algorithms whose grid bounds survive edge deletion). The placement trace
// is reported for the incremental modes.
Drawing draw_by_name(const std::string& algo, const PlanarEmbedding& emb,
                     PlacementTrace* trace_out = nullptr);

struct StatsRow {
  std::string graph_id;
  int n = 0, m = 0;
  int f_g = -1;  // -1 when not triangulated
  std::string algo;
  long long width = 0, height = 0;
  int bends = 0;
  std::string max_slope;  // exact rational, incremental modes only
  long long wall_ms = 0;
};

struct StatsRequest {
  std::vector<std::string> algos;
  std::string type = "random-triangulation";
  int n_min = 10, n_max = 20, n_step = 1;
  int seeds = 1;
  std::uint64_t seed0 = 1;
};

std::vector<StatsRow> run_stats(const StatsRequest& req);
std::string stats_to_csv(const std::vector<StatsRow>& rows);

}  // namespace rookdraw
