#include "rookdraw/io.hpp"

#include <fstream>
#include <sstream>

namespace rookdraw {

namespace {

json coord_to_json(const Rat& r) {
  if (is_integer(r)) return json(to_ll(r));
  return json(rat_to_string(r));
}

Rat coord_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  throw GraphError("coordinate must be an integer or a \"p/q\" string");
}

}  // namespace

json graph_to_json(const PlanarEmbedding& emb) {
  json j;
  j["n"] = emb.n;
  j["rotations"] = emb.rotations;
  j["outer_face"] = emb.outer_face;
  return j;
}

PlanarEmbedding graph_from_json(const json& j) {
  PlanarEmbedding emb;
  emb.n = j.at("n").get<int>();
  emb.rotations = j.at("rotations").get<std::vector<std::vector<int>>>();
  emb.outer_face = j.at("outer_face").get<std::vector<int>>();
  emb.validate();
  return emb;
}

json drawing_to_json(const Drawing& d) {
  json j;
  j["vertices"] = json::array();
  for (int v = 0; v < d.n(); ++v) {
    json jv;
    jv["id"] = v;
    jv["x"] = coord_to_json(d.coords[v].x);
    jv["y"] = coord_to_json(d.coords[v].y);
    j["vertices"].push_back(jv);
  }
  j["edges"] = json::array();
  for (const auto& e : d.edges) {
    json je;
    je["u"] = e.u;
    je["v"] = e.v;
    je["bends"] = json::array();
    for (const auto& b : e.bends)
      je["bends"].push_back(json::array({coord_to_json(b.x), coord_to_json(b.y)}));
    j["edges"].push_back(je);
  }
  j["meta"] = {{"algo", d.algo},
               {"width", d.width},
               {"height", d.height},
               {"bends", d.bend_count()}};
  return j;
}

Drawing drawing_from_json(const json& j) {
  Drawing d;
  const auto& vs = j.at("vertices");
  d.coords.resize(vs.size());
  for (const auto& jv : vs) {
    int id = jv.at("id").get<int>();
    if (id < 0 || id >= static_cast<int>(vs.size()))
      throw GraphError("drawing JSON: vertex id out of range");
    d.coords[id] = Pt(coord_from_json(jv.at("x")), coord_from_json(jv.at("y")));
  }
  for (const auto& je : j.at("edges")) {
    DrawnEdge e;
    e.u = je.at("u").get<int>();
    e.v = je.at("v").get<int>();
    for (const auto& jb : je.at("bends"))
      e.bends.push_back(Pt(coord_from_json(jb.at(0)), coord_from_json(jb.at(1))));
    d.edges.push_back(std::move(e));
  }
  const auto& meta = j.at("meta");
  d.algo = meta.at("algo").get<std::string>();
  d.width = meta.at("width").get<long long>();
  d.height = meta.at("height").get<long long>();
  return d;
}

json report_to_json(const CheckReport& r) {
  json j;
  j["check"] = r.check;
  j["pass"] = r.pass;
  j["detail"] = r.detail;
  return j;
}

std::string dump_graph(const PlanarEmbedding& emb) {
  return graph_to_json(emb).dump();
}

PlanarEmbedding parse_graph(const std::string& text) {
  return graph_from_json(json::parse(text));
}

std::string dump_drawing(const Drawing& d) { return drawing_to_json(d).dump(); }

Drawing parse_drawing(const std::string& text) {
  return drawing_from_json(json::parse(text));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GraphError("cannot write " + path);
  out << content;
}

}  // namespace rookdraw
