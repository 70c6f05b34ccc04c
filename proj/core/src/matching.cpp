#include "rookdraw/matching.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>
#include <boost/graph/maximum_weighted_matching.hpp>

#include <algorithm>
#include <functional>
#include <map>

#include "rookdraw/triangles.hpp"

namespace rookdraw {

std::vector<std::vector<int>> DualGraph::adjacency() const {
  std::vector<std::vector<int>> adj(nodes);
  for (size_t i = 0; i < links.size(); ++i) {
    adj[links[i].first].push_back(static_cast<int>(i));
    adj[links[i].second].push_back(static_cast<int>(i));
  }
  return adj;
}

DualGraph build_dual(const PlanarEmbedding& emb) {
  if (!emb.is_triangulated())
    throw GraphError("build_dual: input not triangulated");

  DualGraph d;
  d.faces = compute_faces(emb);
  d.nodes = static_cast<int>(d.faces.size());

  std::map<std::pair<int, int>, int> dir_face;  // directed edge -> face id
  for (int f = 0; f < d.nodes; ++f) {
    const auto& cyc = d.faces[f];
    for (size_t i = 0; i < cyc.size(); ++i)
      dir_face[{cyc[i], cyc[(i + 1) % cyc.size()]}] = f;
    if (same_cycle(cyc, emb.outer_face)) d.outer_node = f;
  }

  std::set<Edge> filled = classify_triangles(emb).filled_edges;

  for (int u = 0; u < emb.n; ++u)
    for (int v : emb.rotations[u]) {
      if (v <= u) continue;
      int f1 = dir_face.at({u, v});
      int f2 = dir_face.at({v, u});
      d.links.push_back({f1, f2});
      d.primal.push_back({u, v});
      d.weight.push_back(filled.count({u, v}) ? 1 : 0);
    }

  for (const auto& adj : d.adjacency())
    if (adj.size() != 3)
      throw GraphError("build_dual: dual of a triangulation must be cubic");
  return d;
}

namespace {

using BoostGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::undirectedS,
    boost::property<boost::vertex_index_t, int>,
    boost::property<boost::edge_weight_t, long>>;

// Matching over a subset of nodes/links; returns chosen link ids or empty
// if no perfect matching covers the kept nodes.
std::vector<int> weighted_pm(const DualGraph& dual,
                             const std::vector<char>& keep_node,
                             long (*link_weight)(const DualGraph&, int)) {
  int n = dual.nodes;
  std::vector<int> id(n, -1);
  std::vector<int> back;
  for (int v = 0; v < n; ++v)
    if (keep_node[v]) {
      id[v] = static_cast<int>(back.size());
      back.push_back(v);
    }
  int kept = static_cast<int>(back.size());
  if (kept == 0) return {};

  // Max-weight matching with weights C - w maximizes cardinality first,
  // then minimizes the original weight among perfect matchings.
  long C = static_cast<long>(dual.links.size()) + 2;
  BoostGraph g(kept);
  std::map<std::pair<int, int>, int> link_of;
  for (size_t i = 0; i < dual.links.size(); ++i) {
    auto [a, b] = dual.links[i];
    if (!keep_node[a] || !keep_node[b]) continue;
    auto key = std::minmax(id[a], id[b]);
    auto it = link_of.find({key.first, key.second});
    if (it == link_of.end()) {
      link_of[{key.first, key.second}] = static_cast<int>(i);
    } else if (link_weight(dual, static_cast<int>(i)) <
               link_weight(dual, it->second)) {
      // Parallel dual links happen only for the bare triangle; keep the
      // lighter one.
      it->second = static_cast<int>(i);
    }
  }
  for (auto& [key, li] : link_of)
    boost::add_edge(key.first, key.second, C - link_weight(dual, li), g);

  std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(kept);
  boost::maximum_weighted_matching(g, &mate[0]);

  std::vector<int> chosen;
  for (int v = 0; v < kept; ++v) {
    auto m = mate[v];
    if (m == boost::graph_traits<BoostGraph>::null_vertex()) return {};
    if (static_cast<int>(m) > v) {
      auto key = std::minmax(v, static_cast<int>(m));
      chosen.push_back(link_of.at({key.first, key.second}));
    }
  }
  if (static_cast<int>(chosen.size()) * 2 != kept) return {};
  return chosen;
}

long unit_weight(const DualGraph&, int) { return 0; }
long real_weight(const DualGraph& d, int i) { return d.weight[i]; }

void assert_perfect(const DualGraph& dual, const std::vector<int>& m,
                    const std::vector<char>& keep) {
  std::vector<int> deg(dual.nodes, 0);
  for (int li : m) {
    ++deg[dual.links[li].first];
    ++deg[dual.links[li].second];
  }
  for (int v = 0; v < dual.nodes; ++v)
    if (deg[v] != (keep[v] ? 1 : 0))
      throw GraphError("matching: not a perfect matching");
}

}  // namespace

std::vector<int> perfect_matching(const DualGraph& dual) {
  std::vector<char> keep(dual.nodes, 1);
  std::vector<int> m = weighted_pm(dual, keep, unit_weight);
  if (m.empty() && dual.nodes > 0)
    throw GraphError("perfect_matching: none found (input not as promised)");
  assert_perfect(dual, m, keep);
  return m;
}

std::vector<int> force_edge_in_matching(const DualGraph& dual,
                                        const std::vector<int>& m,
                                        int e_star) {
  if (std::find(m.begin(), m.end(), e_star) != m.end()) return m;

  auto [s, t] = dual.links[e_star];
  std::vector<char> keep(dual.nodes, 1);
  keep[s] = keep[t] = 0;
  std::vector<int> rest = weighted_pm(dual, keep, unit_weight);
  if (rest.empty() && dual.nodes > 2)
    throw GraphError(
        "force_edge_in_matching: no perfect matching uses that link");
  rest.push_back(e_star);

  // Both are perfect matchings, so the symmetric difference is a disjoint
  // union of alternating cycles; swap m along the one through e_star.
  std::set<int> in_m(m.begin(), m.end());
  std::set<int> in_rest(rest.begin(), rest.end());
  std::vector<std::vector<std::pair<int, int>>> sym(dual.nodes);
  for (int li : m)
    if (!in_rest.count(li)) {
      sym[dual.links[li].first].push_back({dual.links[li].second, li});
      sym[dual.links[li].second].push_back({dual.links[li].first, li});
    }
  for (int li : rest)
    if (!in_m.count(li)) {
      sym[dual.links[li].first].push_back({dual.links[li].second, li});
      sym[dual.links[li].second].push_back({dual.links[li].first, li});
    }

  // Trace the cycle containing e_star.
  std::set<int> cycle{e_star};
  int cur = t, prev_link = e_star;
  while (cur != s) {
    bool advanced = false;
    for (auto [nxt, li] : sym[cur]) {
      if (li == prev_link) continue;
      cycle.insert(li);
      prev_link = li;
      cur = nxt;
      advanced = true;
      break;
    }
    if (!advanced)
      throw GraphError("force_edge_in_matching: alternating cycle broken");
  }

  std::vector<int> out;
  for (int li : m)
    if (!cycle.count(li)) out.push_back(li);
  for (int li : cycle)
    if (!in_m.count(li)) out.push_back(li);

  std::vector<char> all(dual.nodes, 1);
  assert_perfect(dual, out, all);
  if (std::find(out.begin(), out.end(), e_star) == out.end())
    throw GraphError("force_edge_in_matching: swap lost the forced link");
  return out;
}

std::vector<int> min_weight_perfect_matching_forced(const DualGraph& dual,
                                                    int forced_link) {
  auto [s, t] = dual.links[forced_link];
  std::vector<char> keep(dual.nodes, 1);
  keep[s] = keep[t] = 0;
  std::vector<int> rest = weighted_pm(dual, keep, real_weight);
  if (rest.empty() && dual.nodes > 2)
    throw GraphError("min_weight_pm: no perfect matching uses that link");
  rest.push_back(forced_link);
  std::vector<char> all(dual.nodes, 1);
  assert_perfect(dual, rest, all);
  return rest;
}

std::vector<std::vector<int>> enumerate_perfect_matchings(const DualGraph& dual,
                                                          size_t limit) {
  auto adj = dual.adjacency();
  std::vector<char> matched(dual.nodes, 0);
  std::vector<int> current;
  std::vector<std::vector<int>> out;

  std::function<void()> go = [&]() {
    if (out.size() >= limit) return;
    int v = -1;
    for (int i = 0; i < dual.nodes; ++i)
      if (!matched[i]) {
        v = i;
        break;
      }
    if (v < 0) {
      out.push_back(current);
      return;
    }
    for (int li : adj[v]) {
      auto [a, b] = dual.links[li];
      int u = a == v ? b : a;
      if (matched[u] || u == v) continue;
      matched[v] = matched[u] = 1;
      current.push_back(li);
      go();
      current.pop_back();
      matched[v] = matched[u] = 0;
    }
  };
  go();
  return out;
}

}  // namespace rookdraw
