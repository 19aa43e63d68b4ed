#include "vkcurve/report.hpp"

#include <sstream>

#include "vkcurve/document.hpp"

namespace vk {

std::string exact(Rational const& r) {
  auto s = r.str();
  return s.find('/') == std::string::npos ? s + "/1" : s;
}

Json dart_json(Diagram const& d, DartIdx x) {
  Json j;
  j["edge"] = d.edge(Diagram::edge_of(x)).id;
  j["end"] = Diagram::is_forward(x) ? "tail" : "head";
  return j;
}

namespace {

Json vertex_ref(Diagram const& d, VertexIdx v) { return v == kNone ? Json(nullptr) : Json(d.vertex_id(v)); }

Json face_list(std::vector<FaceIdx> const& faces) {
  Json out = Json::array();
  for (FaceIdx f : faces) out.push_back(f);
  return out;
}

Json profile_json(VertexProfile const& p) {
  Json j;
  j["degree"] = p.degree;
  j["boundary"] = p.is_boundary;
  j["uncoloured"] = p.uncoloured_count;
  j["coloured"] = p.coloured_count;
  j["runs"] = Json::array();
  for (auto const& r : p.runs) {
    Json run;
    run["direction"] = r.outward ? "out" : "in";
    run["length"] = r.length;
    run["orientation"] = r.orientation;
    run["uncoloured"] = r.uncoloured;
    j["runs"].push_back(run);
  }
  j["terms"] = p.terms;
  return j;
}

}  // namespace

Json stats_json(Diagram const& d) {
  Json j;
  j["n"] = d.n();
  j["surface"] = d.is_disk() ? "disk" : "sphere";
  j["vertices"] = d.vertex_count();
  j["edges"] = d.edge_count();
  j["faces"] = d.face_count();
  if (d.is_disk()) {
    auto s = stats(d);
    j["boundary_faces"] = s.boundary_faces;
    j["area"] = s.area;
    j["length"] = s.length;
    j["interior_corners"] = s.interior_corner_count;
    j["boundary_word"] = to_string(boundary_word(d));
  }
  auto red = check_reduced(d);
  j["reduced"] = red.reduced;
  Json w = Json::array();
  for (EdgeIdx e : red.witnesses) w.push_back(d.edge(e).id);
  j["mirror_edges"] = w;
  return j;
}

Json colored_document(ColoredDiagram const& cd) {
  auto doc = emit_diagram(cd.base);
  Json colors = Json::object();
  for (EdgeIdx e = 0; e < cd.base.edge_count(); ++e) {
    colors[std::to_string(cd.base.edge(e).id)] = to_string(cd.color(e));
  }
  doc["colors"] = colors;
  return doc;
}

Json color_report_json(ColoredDiagram const& cd, ColorReport const& rep) {
  auto const& d = cd.base;
  Json j;
  j["ok"] = rep.ok();
  for (auto c : {EdgeColor::blue, EdgeColor::green, EdgeColor::yellow}) j["counts"][to_string(c)] = cd.count(c);
  j["uncolourable"] = Json::array();
  for (VertexIdx v : cd.uncolourable) j["uncolourable"].push_back(d.vertex_id(v));
  j["conflicts"] = Json::array();
  for (EdgeIdx e : cd.conflicts) j["conflicts"].push_back(d.edge(e).id);
  j["violations"] = Json::array();
  for (auto const& v : rep.violations) {
    Json x;
    x["clause"] = v.clause;
    x["vertex"] = vertex_ref(d, v.vertex);
    x["edge"] = v.edge == kNone ? Json(nullptr) : Json(d.edge(v.edge).id);
    x["detail"] = v.detail;
    j["violations"].push_back(x);
  }
  return j;
}

Json classification_json(ColoredDiagram const& cd, ClassifiedDiagram const& cls, LayerReport const& layers) {
  auto const& d = cd.base;
  Json j;
  j["total"] = cls.total();
  j["layers_ok"] = layers.ok();
  j["vertices"] = Json::array();
  for (VertexIdx v = 0; v < d.vertex_count(); ++v) {
    auto const& c = cls.vertices[v];
    Json x;
    x["id"] = d.vertex_id(v);
    x["type"] = c.type ? Json(to_string(*c.type)) : Json(nullptr);
    x["layer"] = c.type ? layer_of(*c.type) : 0;
    x["profile"] = profile_json(c.profile);
    if (!c.problem.empty()) x["problem"] = c.problem;
    j["vertices"].push_back(x);
  }
  j["layer_violations"] = Json::array();
  for (auto const& v : layers.violations) {
    Json x;
    x["vertex"] = vertex_ref(d, v.vertex);
    x["layer"] = v.layer;
    x["detail"] = v.detail;
    j["layer_violations"].push_back(x);
  }
  return j;
}

Json match_json(Diagram const& k, SubdiagramMatch const& m) {
  Json j;
  j["faces"] = face_list(m.faces);
  j["image"] = face_list(m.image);
  j["face_count"] = m.face_count();
  j["shift"] = m.shift;
  j["seed"] = m.seed;
  Json vm = Json::array();
  for (VertexIdx v = 0; v < static_cast<VertexIdx>(m.vertex_map.size()); ++v) {
    if (m.vertex_map[v] == kNone) continue;
    vm.push_back(Json::array({k.vertex_id(v), m.vertex_map[v]}));
  }
  j["vertex_map"] = vm;
  return j;
}

Json curvature_json(Diagram const& k, CurvatureReport const& r) {
  Json j;
  j["n"] = r.n;
  j["pass"] = r.pass;
  j["floor"] = exact(r.floor);
  j["curvature"] = exact(r.curvature);
  j["corner_sum"] = exact(r.corner_sum());
  j["residue"] = exact(r.residue());
  j["conserved"] = r.conserved();
  j["corners"] = Json::array();
  for (auto const& c : r.corners) {
    Json x;
    x["vertex"] = k.vertex_id(c.vertex);
    x["dart"] = dart_json(k, c.dart);
    x["face"] = c.face;
    x["total"] = exact(c.total);
    j["corners"].push_back(x);
  }
  j["vertices"] = Json::array();
  for (auto const& v : r.vertices) {
    Json x;
    x["vertex"] = k.vertex_id(v.origin);
    x["star"] = v.index;
    x["type"] = v.type ? Json(to_string(*v.type)) : Json(nullptr);
    x["layer"] = v.layer;
    x["initial"] = exact(v.initial);
    x["received"] = exact(v.received);
    x["granted"] = exact(v.granted);
    x["balance"] = exact(v.balance());
    j["vertices"].push_back(x);
  }
  j["components"] = Json::array();
  for (auto const& c : r.components) {
    Json x;
    x["star"] = c.component.owner;
    x["kind"] = to_string(c.component.kind);
    x["edges"] = c.component.edge_count();
    x["uncoloured"] = c.component.uncoloured;
    x["share"] = exact(c.component.share);
    x["available"] = exact(c.available);
    x["granted"] = exact(c.granted);
    x["surplus"] = exact(c.surplus());
    if (!c.component.note.empty()) x["note"] = c.component.note;
    j["components"].push_back(x);
  }
  j["deficits"] = Json::array();
  for (auto const& dft : r.deficits) {
    Json x;
    x["star"] = dft.index;
    x["vertex"] = vertex_ref(k, dft.origin);
    x["what"] = dft.what;
    x["dart"] = dft.dart == kNone ? Json(nullptr) : dart_json(k, dft.dart);
    x["amount"] = exact(dft.amount);
    j["deficits"].push_back(x);
  }
  j["problems"] = r.problems;
  return j;
}

Json certificate_json(IsoperimetricCertificate const& c) {
  Json j;
  j["n"] = c.n;
  j["epsilon"] = exact(c.epsilon);
  j["faces"] = c.faces;
  j["boundary_faces"] = c.boundary_faces;
  j["area"] = c.area;
  j["length"] = c.length;
  j["corner_lhs"] = exact(c.corner_lhs);
  j["corner_rhs"] = exact(c.corner_rhs);
  j["corner_holds"] = c.corner_holds;
  j["bound"] = exact(c.bound);
  j["holds"] = c.holds;
  return j;
}

Json budget_case_json(BudgetCase const& c) {
  Json j;
  j["name"] = c.name;
  j["n"] = c.n;
  j["k"] = c.k;
  if (c.d) j["d"] = c.d;
  j["surplus"] = exact(c.surplus);
  j["closed_form"] = exact(c.closed_form);
  j["relation"] = c.identity ? "identity" : (c.strict ? ">" : ">=");
  return j;
}

Json budgets_json(BudgetReport const& r) {
  Json j;
  j["n_min"] = r.n_min;
  j["n_max"] = r.n_max;
  j["checked"] = r.checked;
  j["ok"] = r.ok();
  j["failures"] = Json::array();
  for (auto const& c : r.failures) j["failures"].push_back(budget_case_json(c));
  j["equalities"] = Json::array();
  for (auto const& c : r.equalities) j["equalities"].push_back(budget_case_json(c));
  return j;
}

std::string oracle_rows(std::map<int, std::vector<EnumeratedSolution>> const& sols) {
  std::ostringstream out;
  for (auto const& [components, list] : sols) {
    for (auto const& s : list) {
      out << components << ' ' << s.degree << ' ' << s.outward << ' ' << s.inward << " |";
      for (auto const& r : s.runs) out << ' ' << (r.outward ? '+' : '-') << r.length << (r.orientation > 0 ? 'a' : 'c');
      out << " |";
      for (int t : s.terms) out << ' ' << t;
      out << '\n';
    }
  }
  return out.str();
}

namespace {

void flatten(Json const& j, std::string const& path, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto const& [key, value] : j.items()) flatten(value, path.empty() ? key : path + "." + key, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

}  // namespace

std::string to_text(Json const& j) {
  std::ostringstream out;
  flatten(j, "", out);
  return out.str();
}

}  // namespace vk
