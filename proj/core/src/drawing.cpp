#include "rookdraw/drawing.hpp"

#include <algorithm>
#include <set>

namespace rookdraw {

int Drawing::bend_count() const {
  int b = 0;
  for (const auto& e : edges) b += static_cast<int>(e.bends.size());
  return b;
}

std::vector<Pt> Drawing::polyline(const DrawnEdge& e) const {
  std::vector<Pt> pts;
  pts.push_back(coords[e.u]);
  pts.insert(pts.end(), e.bends.begin(), e.bends.end());
  pts.push_back(coords[e.v]);
  return pts;
}

void Drawing::update_grid_meta() {
  Rat w = 0, h = 0;
  for (const auto& p : coords) {
    w = std::max(w, p.x);
    h = std::max(h, p.y);
  }
  auto ceil_ll = [](const Rat& r) {
    BigInt q = numerator(r) / denominator(r);
    if (q * denominator(r) < numerator(r)) ++q;
    return static_cast<long long>(q);
  };
  width = ceil_ll(w);
  height = ceil_ll(h);
}

Drawing drawing_for(const PlanarEmbedding& emb) {
  Drawing d;
  d.coords.resize(emb.n);
  for (int u = 0; u < emb.n; ++u)
    for (int v : emb.rotations[u])
      if (u < v) d.edges.push_back({u, v, {}});
  return d;
}

void remove_edges(Drawing& d, const std::vector<Edge>& edges) {
  std::set<Edge> kill(edges.begin(), edges.end());
  std::erase_if(d.edges, [&](const DrawnEdge& e) {
    return kill.count(make_edge(e.u, e.v)) > 0;
  });
}

}  // namespace rookdraw
