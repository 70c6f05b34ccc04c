#pragma once

#include <nlohmann/json.hpp>

#include "rookdraw/drawing.hpp"
#include "rookdraw/planar_graph.hpp"
#include "rookdraw/verify.hpp"

namespace rookdraw {

using json = nlohmann::ordered_json;

// Graph JSON: {"n": int, "rotations": [[...],...], "outer_face": [...]}.
// Fixed field order and compact dump keep round-trips byte-identical.
json graph_to_json(const PlanarEmbedding& emb);
PlanarEmbedding graph_from_json(const json& j);

// Drawing JSON: {"vertices":[{"id","x","y"}], "edges":[{"u","v","bends"}],
// "meta":{"algo","width","height","bends"}}; coordinates are integers or
// "p/q" strings before normalization.
json drawing_to_json(const Drawing& d);
Drawing drawing_from_json(const json& j);

json report_to_json(const CheckReport& r);

std::string dump_graph(const PlanarEmbedding& emb);
PlanarEmbedding parse_graph(const std::string& text);
std::string dump_drawing(const Drawing& d);
Drawing parse_drawing(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace rookdraw
