#include "vkcurve/document.hpp"

#include <map>

namespace vk {

using nlohmann::ordered_json;

namespace {

[[noreturn]] void malformed(std::string const& msg) {
  throw DiagramError(DiagramErrc::malformed, msg);
}

std::int64_t as_int(ordered_json const& j, char const* what) {
  if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

}  // namespace

Diagram parse_diagram(ordered_json const& doc) {
  if (!doc.is_object()) malformed("document must be a JSON object");
  for (auto const& [key, _] : doc.items()) {
    if (key != "n" && key != "surface" && key != "vertices" && key != "edges" && key != "rotation" &&
        key != "outer" && key != "colors") {
      malformed("unknown key '" + key + "'");
    }
  }
  for (char const* key : {"n", "surface", "vertices", "edges", "rotation"}) {
    if (!doc.contains(key)) malformed(std::string("missing key '") + key + "'");
  }

  DiagramSpec spec;
  spec.n = static_cast<int>(as_int(doc["n"], "n"));
  auto const& surface = doc["surface"];
  if (surface == "disk") {
    spec.surface = Surface::disk;
  } else if (surface == "sphere") {
    spec.surface = Surface::sphere;
  } else {
    malformed("surface must be \"disk\" or \"sphere\"");
  }

  if (!doc["vertices"].is_array()) malformed("vertices must be an array");
  std::map<std::int64_t, VertexIdx> vindex;
  for (auto const& v : doc["vertices"]) {
    auto id = as_int(v, "vertex id");
    if (!vindex.emplace(id, static_cast<VertexIdx>(spec.vertex_ids.size())).second) {
      malformed("duplicate vertex id " + std::to_string(id));
    }
    spec.vertex_ids.push_back(id);
  }

  if (!doc["edges"].is_array()) malformed("edges must be an array");
  std::map<std::int64_t, EdgeIdx> eindex;
  for (auto const& e : doc["edges"]) {
    if (!e.is_object() || !e.contains("id") || !e.contains("tail") || !e.contains("head") ||
        !e.contains("label")) {
      malformed("edge entries need id, tail, head and label");
    }
    Edge edge;
    edge.id = as_int(e["id"], "edge id");
    auto lookup = [&](ordered_json const& x) {
      auto it = vindex.find(as_int(x, "edge endpoint"));
      if (it == vindex.end()) {
        throw DiagramError(DiagramErrc::dangling, "edge " + std::to_string(edge.id) + " names an unknown vertex");
      }
      return it->second;
    };
    edge.tail = lookup(e["tail"]);
    edge.head = lookup(e["head"]);
    edge.label = static_cast<int>(as_int(e["label"], "label"));
    if (!eindex.emplace(edge.id, static_cast<EdgeIdx>(spec.edges.size())).second) {
      malformed("duplicate edge id " + std::to_string(edge.id));
    }
    spec.edges.push_back(edge);
  }

  auto half_edge = [&](ordered_json const& h) -> DartIdx {
    if (!h.is_object() || !h.contains("edge") || !h.contains("end")) {
      malformed("half-edge entries need edge and end");
    }
    auto it = eindex.find(as_int(h["edge"], "half-edge edge"));
    if (it == eindex.end()) throw DiagramError(DiagramErrc::dangling, "half-edge names an unknown edge");
    if (h["end"] == "tail") return 2 * it->second;
    if (h["end"] == "head") return 2 * it->second + 1;
    malformed("half-edge end must be \"tail\" or \"head\"");
  };

  auto const& rot = doc["rotation"];
  if (!rot.is_object()) malformed("rotation must be an object");
  spec.rotation.resize(spec.vertex_ids.size());
  std::vector<bool> listed(spec.vertex_ids.size(), false);
  for (auto const& [key, list] : rot.items()) {
    std::int64_t id = 0;
    try {
      std::size_t used = 0;
      id = std::stoll(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (std::exception const&) {
      malformed("rotation key '" + key + "' is not a vertex id");
    }
    auto it = vindex.find(id);
    if (it == vindex.end()) throw DiagramError(DiagramErrc::dangling, "rotation for unknown vertex " + key);
    if (!list.is_array()) malformed("rotation entries must be arrays");
    listed[it->second] = true;
    for (auto const& h : list) spec.rotation[it->second].push_back(half_edge(h));
  }
  for (std::size_t v = 0; v < listed.size(); ++v) {
    if (!listed[v]) {
      throw DiagramError(DiagramErrc::rotation, "no rotation for vertex " + std::to_string(spec.vertex_ids[v]));
    }
  }
  if (doc.contains("outer")) spec.outer = half_edge(doc["outer"]);
  return Diagram::assemble(std::move(spec));
}

Diagram parse_diagram_text(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  return parse_diagram(doc);
}

ordered_json emit_diagram(Diagram const& d) {
  auto half = [&](DartIdx x) {
    ordered_json h;
    h["edge"] = d.edge(Diagram::edge_of(x)).id;
    h["end"] = Diagram::is_forward(x) ? "tail" : "head";
    return h;
  };
  ordered_json doc;
  doc["n"] = d.n();
  doc["surface"] = d.is_disk() ? "disk" : "sphere";
  doc["vertices"] = ordered_json::array();
  for (auto id : d.vertex_ids()) doc["vertices"].push_back(id);
  doc["edges"] = ordered_json::array();
  for (auto const& e : d.edges()) {
    ordered_json j;
    j["id"] = e.id;
    j["tail"] = d.vertex_id(e.tail);
    j["head"] = d.vertex_id(e.head);
    j["label"] = e.label;
    doc["edges"].push_back(j);
  }
  doc["rotation"] = ordered_json::object();
  for (VertexIdx v = 0; v < d.vertex_count(); ++v) {
    auto& list = doc["rotation"][std::to_string(d.vertex_id(v))];
    list = ordered_json::array();
    for (DartIdx x : d.rotation(v)) list.push_back(half(x));
  }
  if (auto spec = d.spec(); spec.outer) doc["outer"] = half(*spec.outer);
  return doc;
}

std::string emit_diagram_text(Diagram const& d) { return emit_diagram(d).dump(1) + "\n"; }

}  // namespace vk
