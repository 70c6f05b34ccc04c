#include "rookdraw/hitting.hpp"

#include <algorithm>
#include <map>

#include "rookdraw/triangles.hpp"

namespace rookdraw {

namespace {

bool on_outer_face(const PlanarEmbedding& emb, const Edge& e) {
  int L = static_cast<int>(emb.outer_face.size());
  for (int i = 0; i < L; ++i)
    if (make_edge(emb.outer_face[i], emb.outer_face[(i + 1) % L]) == e)
      return true;
  return false;
}

// Maximal separating triangles: not strictly inside any other separating
// triangle.
std::vector<const Triangle*> maximal_separating(const TriangleReport& rep) {
  std::vector<const Triangle*> seps;
  for (const auto& t : rep.triangles)
    if (t.separating) seps.push_back(&t);

  std::vector<const Triangle*> maximal;
  for (const Triangle* t : seps) {
    bool inside_other = false;
    for (const Triangle* o : seps) {
      if (o == t) continue;
      // t inside o iff every vertex of t is in o's triangle or interior.
      int contained = 0;
      for (int v : t->v)
        if (std::binary_search(o->inside.begin(), o->inside.end(), v) ||
            std::find(o->v.begin(), o->v.end(), v) != o->v.end())
          ++contained;
      if (contained == 3 && t->v != o->v &&
          // strict: at least one vertex truly inside o
          std::any_of(t->v.begin(), t->v.end(), [&](int v) {
            return std::binary_search(o->inside.begin(), o->inside.end(), v);
          })) {
        inside_other = true;
        break;
      }
    }
    if (!inside_other) maximal.push_back(t);
  }
  return maximal;
}

HittingSet recursive_impl(const PlanarEmbedding& emb, Edge e_o) {
  if (!on_outer_face(emb, e_o))
    throw GraphError("recursive_hitting_set: e_o must be an outer edge");

  HittingSet hs;
  hs.outer_edge = e_o;
  hs.edges.insert(e_o);

  TriangleReport rep = classify_triangles(emb);
  if (rep.filled_count <= 1) return hs;  // only the outer face is filled

  auto maximal = maximal_separating(rep);
  if (maximal.empty())
    throw GraphError("recursive_hitting_set: filled triangles but no "
                     "separating triangle");

  // Skeleton: remove the interiors of all maximal separating triangles.
  std::vector<char> drop(emb.n, 0);
  for (const Triangle* t : maximal)
    for (int v : t->inside) drop[v] = 1;
  std::vector<int> keep;
  for (int v = 0; v < emb.n; ++v)
    if (!drop[v]) keep.push_back(v);
  auto [skel, to_orig] = induced_embedding(emb, keep, emb.outer_face);

  std::vector<int> to_skel(emb.n, -1);
  for (size_t i = 0; i < to_orig.size(); ++i) to_skel[to_orig[i]] = (int)i;

  DualGraph dual = build_dual(skel);
  std::vector<int> m = perfect_matching(dual);

  // Force the dual edge of e_o into the matching.
  Edge e_o_skel = make_edge(to_skel[e_o.first], to_skel[e_o.second]);
  int e_star = -1;
  for (size_t i = 0; i < dual.primal.size(); ++i)
    if (dual.primal[i] == e_o_skel) e_star = static_cast<int>(i);
  if (e_star < 0) throw GraphError("recursive_hitting_set: lost e_o in dual");
  m = force_edge_in_matching(dual, m, e_star);

  std::set<int> matched(m.begin(), m.end());

  for (const Triangle* t : maximal) {
    // T_i is a face of the skeleton, so exactly one of its edges is
    // dual-matched; recurse into T_i with that edge prescribed.
    Edge e_i{-1, -1};
    int count = 0;
    for (const Edge& e : t->edges()) {
      Edge es = make_edge(to_skel[e.first], to_skel[e.second]);
      for (int li : matched)
        if (dual.primal[li] == es) {
          e_i = e;
          ++count;
        }
    }
    if (count != 1)
      throw GraphError(
          "recursive_hitting_set: separating triangle not matched once");

    std::vector<int> keep_in(t->v.begin(), t->v.end());
    keep_in.insert(keep_in.end(), t->inside.begin(), t->inside.end());
    std::sort(keep_in.begin(), keep_in.end());
    auto [gi, gi_to_orig] =
        induced_embedding(emb, keep_in, {t->v[0], t->v[1], t->v[2]});
    std::vector<int> orig_to_gi(emb.n, -1);
    for (size_t i = 0; i < gi_to_orig.size(); ++i)
      orig_to_gi[gi_to_orig[i]] = static_cast<int>(i);

    Edge e_i_gi = make_edge(orig_to_gi[e_i.first], orig_to_gi[e_i.second]);
    HittingSet sub = recursive_impl(gi, e_i_gi);
    for (const Edge& e : sub.edges)
      hs.edges.insert(make_edge(gi_to_orig[e.first], gi_to_orig[e.second]));
  }
  return hs;
}

}  // namespace

void assert_hitting_set(const PlanarEmbedding& emb, const HittingSet& hs) {
  TriangleReport rep = classify_triangles(emb);
  for (const auto& t : rep.triangles) {
    if (!t.filled) continue;
    int hit = 0;
    for (const Edge& e : t.edges()) hit += hs.edges.count(e);
    if (hit < 1) throw GraphError("hitting set misses a filled triangle");
  }
  for (const auto& f : compute_faces(emb)) {
    int on_face = 0;
    for (size_t i = 0; i < f.size(); ++i)
      on_face += hs.edges.count(make_edge(f[i], f[(i + 1) % f.size()]));
    if (on_face > 1) throw GraphError("hitting set is not independent");
  }
  if (!on_outer_face(emb, hs.outer_edge) || !hs.edges.count(hs.outer_edge))
    throw GraphError("hitting set: outer edge invalid");
  for (const Edge& e : hs.interior())
    if (on_outer_face(emb, e))
      throw GraphError("hitting set: interior part touches the outer face");
}

HittingSet recursive_hitting_set(const PlanarEmbedding& emb, Edge e_o) {
  if (emb.n < 4) throw GraphError("recursive_hitting_set: n >= 4 required");
  if (!emb.is_triangulated())
    throw GraphError("recursive_hitting_set: input not triangulated");
  HittingSet hs = recursive_impl(emb, e_o);
  assert_hitting_set(emb, hs);
  // Exactly one edge per filled triangle implies |E_f| <= f_G.
  TriangleReport rep = classify_triangles(emb);
  for (const auto& t : rep.triangles) {
    if (!t.filled) continue;
    int hit = 0;
    for (const Edge& e : t.edges()) hit += hs.edges.count(e);
    if (hit != 1)
      throw GraphError("recursive_hitting_set: filled triangle hit " +
                       std::to_string(hit) + " times");
  }
  if (static_cast<int>(hs.edges.size()) > rep.filled_count)
    throw GraphError("recursive_hitting_set: size exceeds f_G");
  return hs;
}

HittingSet min_weight_hitting_set(const PlanarEmbedding& emb, Edge e_o) {
  if (emb.n < 4) throw GraphError("min_weight_hitting_set: n >= 4 required");
  if (!emb.is_triangulated())
    throw GraphError("min_weight_hitting_set: input not triangulated");
  if (!on_outer_face(emb, e_o))
    throw GraphError("min_weight_hitting_set: e_o must be an outer edge");

  DualGraph dual = build_dual(emb);
  int e_star = -1;
  for (size_t i = 0; i < dual.primal.size(); ++i)
    if (dual.primal[i] == e_o) e_star = static_cast<int>(i);
  if (e_star < 0) throw GraphError("min_weight_hitting_set: e_o not found");
  if (dual.weight[e_star] != 1)
    throw GraphError("min_weight_hitting_set: outer edge must be filled");

  std::vector<int> m = min_weight_perfect_matching_forced(dual, e_star);

  HittingSet hs;
  hs.outer_edge = e_o;
  for (int li : m)
    if (dual.weight[li] == 1) hs.edges.insert(dual.primal[li]);
  assert_hitting_set(emb, hs);
  return hs;
}

}  // namespace rookdraw
