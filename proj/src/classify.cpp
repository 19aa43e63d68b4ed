#include "vkcurve/classify.hpp"

#include <algorithm>

namespace vk {

char const* to_string(VertexType t) {
  switch (t) {
    case VertexType::Boundary: return "Boundary";
    case VertexType::Deg7: return "Deg7";
    case VertexType::GG: return "GG";
    case VertexType::YB: return "YB";
    case VertexType::YPlus: return "YPlus";
    case VertexType::YMinus: return "YMinus";
    case VertexType::FiveG: return "FiveG";
    case VertexType::FiveVertex: return "FiveVertex";
  }
  return "?";
}

std::optional<VertexType> parse_vertex_type(std::string const& s) {
  for (auto t : {VertexType::Boundary, VertexType::Deg7, VertexType::GG, VertexType::YB, VertexType::YPlus,
                 VertexType::YMinus, VertexType::FiveG, VertexType::FiveVertex}) {
    if (s == to_string(t)) return t;
  }
  return std::nullopt;
}

int layer_of(VertexType t) {
  switch (t) {
    case VertexType::Boundary:
    case VertexType::Deg7: return 1;
    case VertexType::GG:
    case VertexType::YB: return 2;
    case VertexType::YPlus: return 3;
    case VertexType::YMinus:
    case VertexType::FiveG: return 4;
    case VertexType::FiveVertex: return 5;
  }
  return 0;
}

std::vector<int> type_terms(VertexType t, int n) {
  std::vector<int> terms;
  switch (t) {
    case VertexType::FiveVertex: terms = {2, -1, -1}; break;
    case VertexType::GG: terms = {2, 2, -1, -1, -1, -1}; break;
    case VertexType::YB:
    case VertexType::YPlus:
      terms.assign(static_cast<std::size_t>((n - 1) / 2), 2);
      terms.push_back(1);
      break;
    case VertexType::YMinus:
      terms.assign(static_cast<std::size_t>((n + 1) / 2), 2);
      terms.push_back(-1);
      break;
    case VertexType::FiveG: terms.assign(static_cast<std::size_t>(n), -1); break;
    default: break;
  }
  return canonical_terms(terms);
}

VertexProfile profile(ColoredDiagram const& cd, VertexIdx v) {
  Diagram const& d = cd.base;
  VertexProfile p;
  p.vertex = v;
  p.degree = d.degree(v);
  p.is_boundary = d.is_boundary_vertex(v);
  for (auto const& r : vertex_runs(d, v)) {
    RunProfile rp;
    rp.outward = r.outward;
    rp.length = r.size();
    rp.orientation = r.with_rotation ? 1 : -1;
    for (DartIdx x : r.darts) rp.uncoloured += cd.dart_color(x) == EdgeColor::uncoloured;
    p.uncoloured_count += rp.uncoloured;
    p.runs.push_back(rp);
  }
  p.coloured_count = p.degree - p.uncoloured_count;
  if (!p.is_boundary) p.terms = canonical_terms(angle_sum_solution(d, v).terms);
  return p;
}

Classification classify_vertex(ColoredDiagram const& cd, VertexIdx v) {
  Diagram const& d = cd.base;
  Classification c;
  c.profile = profile(cd, v);
  auto const& p = c.profile;
  int const n = d.n();
  if (p.is_boundary) {
    c.type = VertexType::Boundary;
  } else if (p.degree == 5) {
    c.type = VertexType::FiveVertex;
  } else if (p.uncoloured_count >= 7) {
    c.type = VertexType::Deg7;
  } else if (p.uncoloured_count < 6) {
    c.problem = "interior vertex with only " + std::to_string(p.uncoloured_count) + " uncoloured edges";
  } else if (p.terms == type_terms(VertexType::GG, n) && p.runs.size() == 2) {
    c.type = VertexType::GG;
  } else if (p.terms == type_terms(VertexType::YB, n) && p.runs.size() == 2) {
    auto runs = vertex_runs(d, v);
    auto const& out = runs[0].outward ? runs[0] : runs[1];
    c.type = cd.dart_color(out.last()) == EdgeColor::blue ? VertexType::YB : VertexType::YPlus;
  } else if (p.terms == type_terms(VertexType::YMinus, n) && p.runs.size() == 2) {
    c.type = VertexType::YMinus;
  } else if (n == 11 && p.runs.size() == 1 && !p.runs[0].outward && p.degree == n) {
    c.type = VertexType::FiveG;
  } else {
    c.problem = "deg-6 vertex matching no known configuration";
  }
  return c;
}

bool ClassifiedDiagram::total() const {
  return std::ranges::all_of(vertices, [](auto const& c) { return c.type.has_value(); });
}

ClassifiedDiagram classify_all(ColoredDiagram const& cd) {
  ClassifiedDiagram out;
  for (VertexIdx v = 0; v < cd.base.vertex_count(); ++v) out.vertices.push_back(classify_vertex(cd, v));
  return out;
}

LayerReport check_layer_connectivity(Diagram const& d, std::vector<int> const& layers) {
  LayerReport rep;
  for (VertexIdx v = 0; v < d.vertex_count(); ++v) {
    if (d.is_boundary_vertex(v) || layers[v] <= 1) continue;
    bool lower = std::ranges::any_of(d.rotation(v), [&](DartIdx x) { return layers[d.head(x)] < layers[v]; });
    if (!lower) rep.violations.push_back({v, layers[v], "no neighbour in a lower layer"});
  }
  return rep;
}

LayerReport check_layer_connectivity(ColoredDiagram const& cd) {
  auto all = classify_all(cd);
  std::vector<int> layers;
  LayerReport rep;
  for (auto const& c : all.vertices) {
    layers.push_back(c.type ? layer_of(*c.type) : 0);
    if (!c.type) rep.violations.push_back({c.profile.vertex, 0, "unclassified: " + c.problem});
  }
  auto more = check_layer_connectivity(cd.base, layers);
  rep.violations.insert(rep.violations.end(), more.violations.begin(), more.violations.end());
  return rep;
}

namespace {

// Most yellow edges n-windows allow in a straight run of the given length.
int window_yellow_cap(int length, int n) {
  int per = (n - 3) / 2;
  return (length / n) * per + std::min(length % n, per);
}

}  // namespace

int min_uncoloured(EnumeratedSolution const& s, int n) {
  if (s.degree == 5) return 4;
  int coloured = 0;
  if (s.components == 0) {
    auto const& r = s.runs.front();
    coloured = r.outward ? std::min(std::max(r.length - 4, 0), r.length * (n - 3) / (2 * n)) : r.length / 2;
    return s.degree - coloured;
  }
  int const k = static_cast<int>(s.runs.size());
  for (int i = 0; i < k; ++i) {
    auto const& r = s.runs[static_cast<std::size_t>(i)];
    if (r.outward) {
      auto const& next = s.runs[static_cast<std::size_t>((i + (r.orientation > 0 ? 1 : k - 1)) % k)];
      bool blue = next.orientation != r.orientation;
      int cap = r.length >= 5 ? r.length - 4 : 0;
      cap = std::min(cap, window_yellow_cap(r.length, n) + (blue ? 1 : 0));
      if (r.length < 5 && blue) cap = 1;
      coloured += cap;
    } else {
      coloured += (r.length - 1) / 2;
    }
  }
  return s.degree - coloured;
}

}  // namespace vk
