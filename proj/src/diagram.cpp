#include "vkcurve/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace vk {

char const* to_string(DiagramErrc code) {
  switch (code) {
    case DiagramErrc::malformed: return "malformed";
    case DiagramErrc::bad_n: return "bad-n";
    case DiagramErrc::dangling: return "dangling-dart";
    case DiagramErrc::rotation: return "rotation-inconsistent";
    case DiagramErrc::non_triangle: return "non-triangle-face";
    case DiagramErrc::not_relator: return "face-not-relator";
    case DiagramErrc::euler: return "euler-mismatch";
    case DiagramErrc::disconnected: return "disconnected";
    case DiagramErrc::outer_face: return "outer-face";
    case DiagramErrc::low_degree: return "interior-degree-below-5";
    case DiagramErrc::unsupported_surface: return "unsupported-surface";
  }
  return "unknown";
}

std::string to_string(Word const& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << 'x' << w[i].generator;
    if (w[i].inverse) os << "^-1";
  }
  return os.str();
}

namespace {

[[noreturn]] void fail(DiagramErrc code, std::string const& msg) { throw DiagramError(code, msg); }

std::optional<Triangle> triangle_of(std::span<Edge const> edges, int n,
                                    std::span<DartIdx const> walk) {
  if (walk.size() != 3) return std::nullopt;
  auto fwd = [](DartIdx d) { return (d & 1) == 0; };
  auto lab = [&](DartIdx d) { return edges[d >> 1].label; };
  auto tail = [&](DartIdx d) { return fwd(d) ? edges[d >> 1].tail : edges[d >> 1].head; };
  for (int r = 0; r < 3; ++r) {
    DartIdx e0 = walk[r], e1 = walk[(r + 1) % 3], e2 = walk[(r + 2) % 3];
    int j = lab(e1);
    bool outer_ok = fwd(e0) && !fwd(e2) && lab(e0) == wrap_generator(j + 1LL, n) &&
                    lab(e2) == wrap_generator(j - 1LL, n);
    bool inner_ok = fwd(e0) && fwd(e1) && !fwd(e2) && lab(e0) == wrap_generator(j - 1LL, n) &&
                    lab(e2) == wrap_generator(j + 1LL, n);
    Triangle t;
    t.j = j;
    if (outer_ok && !fwd(e1)) {
      t.positive = true;
      t.b = tail(e0);
      t.c = tail(e1);
      t.a = tail(e2);
    } else if (inner_ok) {
      t.positive = false;
      t.b = tail(e0);
      t.a = tail(e1);
      t.c = tail(e2);
    } else {
      continue;
    }
    if (t.a == t.b || t.b == t.c || t.a == t.c) return std::nullopt;
    return t;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Triangle> match_triangle(Diagram const& d, std::span<DartIdx const> walk) {
  return triangle_of(d.edges(), d.n(), walk);
}

Diagram Diagram::assemble(DiagramSpec spec) {
  if (spec.n < 11 || spec.n % 2 == 0) {
    fail(DiagramErrc::bad_n, "n must be odd and >= 11, got " + std::to_string(spec.n));
  }
  int const nv = static_cast<int>(spec.vertex_ids.size());
  int const ne = static_cast<int>(spec.edges.size());
  if (nv == 0) fail(DiagramErrc::malformed, "diagram has no vertices");
  if (static_cast<int>(spec.rotation.size()) != nv) {
    fail(DiagramErrc::rotation, "rotation must list every vertex");
  }

  // Canonical storage order: vertices and edges sorted by id.
  std::vector<int> vperm(nv), eperm(ne);
  std::iota(vperm.begin(), vperm.end(), 0);
  std::iota(eperm.begin(), eperm.end(), 0);
  std::ranges::sort(vperm, {}, [&](int i) { return spec.vertex_ids[i]; });
  std::ranges::sort(eperm, {}, [&](int i) { return spec.edges[i].id; });
  std::vector<int> vnew(nv), enew(ne);
  for (int i = 0; i < nv; ++i) vnew[vperm[i]] = i;
  for (int i = 0; i < ne; ++i) enew[eperm[i]] = i;

  Diagram g;
  g.n_ = spec.n;
  g.surface_ = spec.surface;
  g.vertex_ids_.resize(nv);
  for (int i = 0; i < nv; ++i) g.vertex_ids_[i] = spec.vertex_ids[vperm[i]];
  for (int i = 1; i < nv; ++i) {
    if (g.vertex_ids_[i] == g.vertex_ids_[i - 1]) {
      fail(DiagramErrc::malformed, "duplicate vertex id " + std::to_string(g.vertex_ids_[i]));
    }
  }
  g.edges_.resize(ne);
  for (int i = 0; i < ne; ++i) {
    Edge e = spec.edges[eperm[i]];
    if (i > 0 && e.id == g.edges_[i - 1].id) {
      fail(DiagramErrc::malformed, "duplicate edge id " + std::to_string(e.id));
    }
    if (e.tail < 0 || e.tail >= nv || e.head < 0 || e.head >= nv) {
      fail(DiagramErrc::dangling, "edge " + std::to_string(e.id) + " has a missing endpoint");
    }
    if (e.tail == e.head) fail(DiagramErrc::malformed, "edge " + std::to_string(e.id) + " is a loop");
    if (e.label < 1 || e.label > spec.n) {
      fail(DiagramErrc::malformed, "edge " + std::to_string(e.id) + " label out of range");
    }
    e.tail = vnew[e.tail];
    e.head = vnew[e.head];
    g.edges_[i] = e;
  }
  auto remap_dart = [&](DartIdx d) {
    if (d < 0 || d >= 2 * ne) fail(DiagramErrc::dangling, "rotation names an unknown half-edge");
    return 2 * enew[d >> 1] + (d & 1);
  };
  g.rotation_.resize(nv);
  for (int i = 0; i < nv; ++i) {
    for (DartIdx d : spec.rotation[vperm[i]]) g.rotation_[i].push_back(remap_dart(d));
  }
  if (spec.outer) g.outer_hint_ = remap_dart(*spec.outer);
  if (g.surface_ == Surface::sphere && g.outer_hint_) {
    fail(DiagramErrc::outer_face, "a sphere has no outer face");
  }
  g.derive();
  return g;
}

void Diagram::derive() {
  int const nv = vertex_count();
  int const nd = dart_count();
  sigma_.assign(nd, kNone);
  sigma_inv_.assign(nd, kNone);
  rot_index_.assign(nd, kNone);
  for (VertexIdx v = 0; v < nv; ++v) {
    auto const& rot = rotation_[v];
    if (rot.empty()) fail(DiagramErrc::dangling, "vertex " + std::to_string(vertex_ids_[v]) + " is isolated");
    for (std::size_t k = 0; k < rot.size(); ++k) {
      DartIdx d = rot[k];
      if (tail(d) != v) {
        fail(DiagramErrc::rotation, "vertex " + std::to_string(vertex_ids_[v]) +
                                        " lists a half-edge of edge " +
                                        std::to_string(edges_[edge_of(d)].id) + " it is not on");
      }
      if (rot_index_[d] != kNone) {
        fail(DiagramErrc::rotation, "half-edge listed twice on edge " + std::to_string(edges_[edge_of(d)].id));
      }
      rot_index_[d] = static_cast<int>(k);
      DartIdx next = rot[(k + 1) % rot.size()];
      sigma_[d] = next;
      sigma_inv_[next] = d;
    }
  }
  for (DartIdx d = 0; d < nd; ++d) {
    if (rot_index_[d] == kNone) {
      fail(DiagramErrc::rotation, "half-edge of edge " + std::to_string(edges_[edge_of(d)].id) +
                                      " missing from rotation");
    }
  }

  // Connectivity.
  std::vector<bool> seen(nv, false);
  std::vector<VertexIdx> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    VertexIdx v = stack.back();
    stack.pop_back();
    for (DartIdx d : rotation_[v]) {
      VertexIdx w = head(d);
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != nv) fail(DiagramErrc::disconnected, "diagram is not connected");

  walks_.clear();
  walk_of_.assign(nd, kNone);
  for (DartIdx d = 0; d < nd; ++d) {
    if (walk_of_[d] != kNone) continue;
    Face f;
    DartIdx x = d;
    do {
      walk_of_[x] = static_cast<int>(walks_.size());
      f.darts.push_back(x);
      x = phi(x);
    } while (x != d);
    walks_.push_back(std::move(f));
  }
  validate_faces();
}

void Diagram::validate_faces() {
  int const nw = static_cast<int>(walks_.size());
  std::vector<std::optional<Triangle>> tri(nw);
  for (int w = 0; w < nw; ++w) tri[w] = triangle_of(edges_, n_, walks_[w].darts);

  outer_walk_.reset();
  if (surface_ == Surface::disk) {
    if (outer_hint_) {
      outer_walk_ = walk_of_[*outer_hint_];
    } else {
      std::vector<int> candidates;
      for (int w = 0; w < nw; ++w) {
        if (!tri[w]) candidates.push_back(w);
      }
      if (candidates.size() != 1) {
        fail(DiagramErrc::outer_face,
             "cannot identify the outer face; give an outer half-edge explicitly");
      }
      outer_walk_ = candidates.front();
    }
  }

  face_index_.assign(nw, kNone);
  face_walk_.clear();
  triangles_.clear();
  for (int w = 0; w < nw; ++w) {
    if (outer_walk_ && *outer_walk_ == w) continue;
    if (walks_[w].darts.size() != 3) {
      fail(DiagramErrc::non_triangle, "face walk of length " + std::to_string(walks_[w].darts.size()) +
                                          " through edge " +
                                          std::to_string(edges_[edge_of(walks_[w].darts[0])].id));
    }
    if (!tri[w]) {
      fail(DiagramErrc::not_relator, "face through edge " +
                                         std::to_string(edges_[edge_of(walks_[w].darts[0])].id) +
                                         " does not spell a relator");
    }
    face_index_[w] = static_cast<int>(triangles_.size());
    face_walk_.push_back(w);
    triangles_.push_back(*tri[w]);
  }

  int const chi = vertex_count() - edge_count() + nw;
  if (chi != 2) {
    fail(DiagramErrc::euler, "V - E + F = " + std::to_string(chi - (surface_ == Surface::disk ? 1 : 0)) +
                                 (surface_ == Surface::disk ? ", expected 1" : ", expected 2"));
  }

  boundary_vertex_.assign(vertex_count(), false);
  if (outer_walk_) {
    for (DartIdx d : walks_[*outer_walk_].darts) boundary_vertex_[tail(d)] = true;
  }
  for (VertexIdx v = 0; v < vertex_count(); ++v) {
    if (!boundary_vertex_[v] && degree(v) < 5) {
      fail(DiagramErrc::low_degree, "interior vertex " + std::to_string(vertex_ids_[v]) + " has degree " +
                                        std::to_string(degree(v)));
    }
  }
}

std::optional<VertexIdx> Diagram::find_vertex(std::int64_t id) const {
  auto it = std::ranges::lower_bound(vertex_ids_, id);
  if (it == vertex_ids_.end() || *it != id) return std::nullopt;
  return static_cast<VertexIdx>(it - vertex_ids_.begin());
}

std::span<DartIdx const> Diagram::outer_darts() const {
  if (!outer_walk_) return {};
  return walks_[*outer_walk_].darts;
}

bool Diagram::is_boundary_edge(EdgeIdx e) const { return on_outer(2 * e) || on_outer(2 * e + 1); }

bool Diagram::is_interior_face(FaceIdx f) const {
  for (DartIdx d : face(f).darts) {
    if (is_boundary_edge(edge_of(d))) return false;
  }
  return true;
}

std::optional<DartIdx> Diagram::dart_between(VertexIdx u, VertexIdx v) const {
  for (DartIdx d : rotation_[u]) {
    if (head(d) == v) return d;
  }
  return std::nullopt;
}

DiagramSpec Diagram::spec() const {
  DiagramSpec s;
  s.n = n_;
  s.surface = surface_;
  s.vertex_ids = vertex_ids_;
  s.edges = edges_;
  s.rotation = rotation_;
  if (outer_walk_) s.outer = *std::ranges::min_element(walks_[*outer_walk_].darts);
  return s;
}

DiagramStats stats(Diagram const& d) {
  if (!d.is_disk()) {
    throw DiagramError(DiagramErrc::unsupported_surface, "stats are defined for disk diagrams only");
  }
  DiagramStats s;
  s.faces = d.face_count();
  s.edges = d.edge_count();
  s.vertices = d.vertex_count();
  for (FaceIdx f = 0; f < d.face_count(); ++f) {
    if (!d.is_interior_face(f)) ++s.boundary_faces;
  }
  s.area = s.faces;
  s.length = static_cast<int>(d.outer_darts().size());
  s.interior_corner_count = 3 * (s.faces - s.boundary_faces);
  return s;
}

ReducedCheck check_reduced(Diagram const& d) {
  ReducedCheck r;
  for (EdgeIdx e = 0; e < d.edge_count(); ++e) {
    FaceIdx f = d.face_of(2 * e), g = d.face_of(2 * e + 1);
    if (f == kNone || g == kNone || f == g) continue;
    if (d.triangle(f).j == d.triangle(g).j) {
      r.reduced = false;
      r.witnesses.push_back(e);
    }
  }
  return r;
}

Word boundary_word(Diagram const& d) {
  if (!d.is_disk()) {
    throw DiagramError(DiagramErrc::unsupported_surface, "a sphere has no boundary word");
  }
  auto walk = d.outer_darts();
  auto start = std::ranges::min_element(walk) - walk.begin();
  Word w;
  for (std::size_t k = 0; k < walk.size(); ++k) {
    DartIdx x = walk[(start + k) % walk.size()];
    w.push_back(Letter{d.label(x), !Diagram::is_forward(x)});
  }
  return w;
}

}  // namespace vk
