#include "vkcurve/sdn.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

#include "vkcurve/angles.hpp"

namespace vk {

Diagram build_sdn(int n) {
  if (n < 11 || n % 2 == 0) {
    throw DiagramError(DiagramErrc::bad_n, "n must be odd and >= 11, got " + std::to_string(n));
  }
  SdnLayout L{n};
  int const a = 1;
  DiagramSpec spec;
  spec.n = n;
  spec.surface = Surface::sphere;
  for (int v = 0; v < 2 * n + 2; ++v) spec.vertex_ids.push_back(v);
  std::map<std::pair<VertexIdx, VertexIdx>, DartIdx> dart;
  auto add = [&](VertexIdx t, VertexIdx h, int label) {
    auto e = static_cast<EdgeIdx>(spec.edges.size());
    spec.edges.push_back({e, t, h, wrap_generator(label, n)});
    dart[{t, h}] = 2 * e;
    dart[{h, t}] = 2 * e + 1;
  };
  for (int k = 0; k < n; ++k) {
    add(L.north(), L.u(k), a + 2 * k);
    add(L.south(), L.w(k), a + 2 * k + 1);
    add(L.u(k), L.u(k + 1), a + 2 * k + 1);
    add(L.w(k), L.w(k + 1), a + 2 * k + 2);
    add(L.u(k), L.w(k), a + 2 * k - 1);
    add(L.w(k), L.u(k + 1), a + 2 * k);
  }
  std::vector<DartIdx> sigma(2 * spec.edges.size(), kNone);
  auto face = [&](VertexIdx p, VertexIdx q, VertexIdx r) {
    VertexIdx walk[3] = {p, q, r};
    for (int i = 0; i < 3; ++i) {
      VertexIdx prev = walk[i], cur = walk[(i + 1) % 3], next = walk[(i + 2) % 3];
      sigma[dart.at({cur, prev})] = dart.at({cur, next});
    }
  };
  for (int k = 0; k < n; ++k) {
    face(L.north(), L.u(k + 1), L.u(k));
    face(L.u(k), L.u(k + 1), L.w(k));
    face(L.w(k - 1), L.u(k), L.w(k));
    face(L.south(), L.w(k - 1), L.w(k));
  }
  spec.rotation.resize(spec.vertex_ids.size());
  for (VertexIdx v = 0; v < static_cast<VertexIdx>(spec.vertex_ids.size()); ++v) {
    DartIdx start = kNone;
    for (auto const& [key, d] : dart) {
      if (key.first == v) {
        start = d;
        break;
      }
    }
    DartIdx d = start;
    do {
      spec.rotation[v].push_back(d);
      d = sigma[d];
    } while (d != start && d != kNone && spec.rotation[v].size() <= spec.edges.size());
  }
  return Diagram::assemble(std::move(spec));
}

bool is_disk_region(Diagram const& d, std::vector<FaceIdx> const& faces) {
  if (faces.empty()) return false;
  std::vector<bool> in(d.face_count(), false);
  for (FaceIdx f : faces) {
    if (f < 0 || f >= d.face_count() || in[f]) return false;
    in[f] = true;
  }
  auto inside = [&](FaceIdx f) { return f != kNone && in[f]; };
  // connected through edges
  std::vector<FaceIdx> stack{faces.front()};
  std::vector<bool> seen(d.face_count(), false);
  seen[faces.front()] = true;
  int reached = 0;
  while (!stack.empty()) {
    FaceIdx f = stack.back();
    stack.pop_back();
    ++reached;
    for (DartIdx x : d.face(f).darts) {
      FaceIdx g = d.face_of(Diagram::reverse(x));
      if (inside(g) && !seen[g]) {
        seen[g] = true;
        stack.push_back(g);
      }
    }
  }
  if (reached != static_cast<int>(faces.size())) return false;
  std::set<EdgeIdx> edges;
  std::map<VertexIdx, int> boundary_degree;
  for (FaceIdx f : faces) {
    for (DartIdx x : d.face(f).darts) {
      edges.insert(Diagram::edge_of(x));
      boundary_degree.try_emplace(d.tail(x), 0);
      if (!inside(d.face_of(Diagram::reverse(x)))) {
        ++boundary_degree[d.tail(x)];
        ++boundary_degree[d.head(x)];
      }
    }
  }
  auto nv = static_cast<long>(boundary_degree.size());
  if (nv - static_cast<long>(edges.size()) + static_cast<long>(faces.size()) != 1) return false;
  return std::ranges::all_of(boundary_degree, [](auto const& kv) { return kv.second == 0 || kv.second == 2; });
}

Diagram extract_subdiagram(Diagram const& d, std::vector<FaceIdx> const& faces) {
  if (!is_disk_region(d, faces)) throw std::invalid_argument("faces do not form a disk");
  std::vector<bool> in(d.face_count(), false);
  for (FaceIdx f : faces) in[f] = true;
  std::vector<EdgeIdx> edge_new(d.edge_count(), kNone);
  std::vector<VertexIdx> vertex_new(d.vertex_count(), kNone);
  DiagramSpec spec;
  spec.n = d.n();
  for (FaceIdx f : faces) {
    for (DartIdx x : d.face(f).darts) {
      vertex_new[d.tail(x)] = 0;
      edge_new[Diagram::edge_of(x)] = 0;
      if (!spec.outer) {
        FaceIdx g = d.face_of(Diagram::reverse(x));
        if (g == kNone || !in[g]) spec.outer = Diagram::reverse(x);
      }
    }
  }
  for (VertexIdx v = 0; v < d.vertex_count(); ++v) {
    if (vertex_new[v] == kNone) continue;
    vertex_new[v] = static_cast<VertexIdx>(spec.vertex_ids.size());
    spec.vertex_ids.push_back(d.vertex_id(v));
  }
  for (EdgeIdx e = 0; e < d.edge_count(); ++e) {
    if (edge_new[e] == kNone) continue;
    edge_new[e] = static_cast<EdgeIdx>(spec.edges.size());
    Edge ed = d.edge(e);
    ed.tail = vertex_new[ed.tail];
    ed.head = vertex_new[ed.head];
    spec.edges.push_back(ed);
  }
  auto map_dart = [&](DartIdx x) { return 2 * edge_new[Diagram::edge_of(x)] + (x & 1); };
  spec.rotation.resize(spec.vertex_ids.size());
  for (VertexIdx v = 0; v < d.vertex_count(); ++v) {
    if (vertex_new[v] == kNone) continue;
    for (DartIdx x : d.rotation(v)) {
      if (edge_new[Diagram::edge_of(x)] != kNone) spec.rotation[vertex_new[v]].push_back(map_dart(x));
    }
  }
  spec.outer = map_dart(*spec.outer);
  return Diagram::assemble(std::move(spec));
}

namespace {

class Matcher {
 public:
  Matcher(Diagram const& k, Diagram const& s) : k_(k), s_(s) {}

  std::optional<SubdiagramMatch> grow(FaceIdx fk, FaceIdx fs) {
    Triangle const& tk = k_.triangle(fk);
    Triangle const& ts = s_.triangle(fs);
    if (tk.positive != ts.positive) return std::nullopt;
    shift_ = ((ts.j - tk.j) % k_.n() + k_.n()) % k_.n();
    vmap_.assign(k_.vertex_count(), kNone);
    inv_.assign(s_.vertex_count(), kNone);
    fmap_.assign(k_.face_count(), kNone);
    used_.assign(s_.face_count(), false);
    order_.clear();
    if (!add(fk, fs)) return std::nullopt;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < order_.size(); ++i) {
        for (DartIdx x : k_.face(order_[i]).darts) {
          FaceIdx g = k_.face_of(Diagram::reverse(x));
          if (g == kNone || fmap_[g] != kNone) continue;
          auto img = s_.dart_between(vmap_[k_.tail(x)], vmap_[k_.head(x)]);
          if (!img) continue;
          FaceIdx gs = s_.face_of(Diagram::reverse(*img));
          if (gs == kNone || used_[gs] || !keeps_disk(g)) continue;
          if (add(g, gs)) changed = true;
        }
      }
    }
    SubdiagramMatch m;
    m.shift = shift_;
    m.seed = fk;
    for (FaceIdx f = 0; f < k_.face_count(); ++f) {
      if (fmap_[f] == kNone) continue;
      m.faces.push_back(f);
      m.image.push_back(fmap_[f]);
    }
    m.vertex_map = vmap_;
    return m;
  }

 private:
  bool keeps_disk(FaceIdx g) const {
    int shared = 0;
    for (DartIdx x : k_.face(g).darts) {
      FaceIdx h = k_.face_of(Diagram::reverse(x));
      shared += h != kNone && fmap_[h] != kNone;
    }
    if (shared == 1) {
      for (DartIdx x : k_.face(g).darts) {
        FaceIdx h = k_.face_of(Diagram::reverse(x));
        bool across = h != kNone && fmap_[h] != kNone;
        // the vertex opposite the shared edge must be new to the region
        if (across && vmap_[k_.head(k_.phi(x))] != kNone) return false;
      }
    }
    return shared == 1 || shared == 2;
  }

  bool add(FaceIdx fk, FaceIdx fs) {
    Triangle const& tk = k_.triangle(fk);
    Triangle const& ts = s_.triangle(fs);
    if (tk.positive != ts.positive || wrap_generator(tk.j + shift_, k_.n()) != ts.j) return false;
    std::pair<VertexIdx, VertexIdx> roles[3] = {{tk.b, ts.b}, {tk.a, ts.a}, {tk.c, ts.c}};
    for (auto [x, y] : roles) {
      if (vmap_[x] != kNone && vmap_[x] != y) return false;
      if (inv_[y] != kNone && inv_[y] != x) return false;
    }
    for (auto [x, y] : roles) {
      vmap_[x] = y;
      inv_[y] = x;
    }
    fmap_[fk] = fs;
    used_[fs] = true;
    order_.push_back(fk);
    return true;
  }

  Diagram const& k_;
  Diagram const& s_;
  int shift_ = 0;
  std::vector<VertexIdx> vmap_, inv_;
  std::vector<FaceIdx> fmap_;
  std::vector<bool> used_;
  std::vector<FaceIdx> order_;
};

bool subset_of(std::vector<FaceIdx> const& a, std::vector<FaceIdx> const& b) {
  return a.size() < b.size() && std::ranges::includes(b, a);
}

}  // namespace

std::vector<SubdiagramMatch> find_matches(Diagram const& k, Diagram const& sdn, int min_faces, int threads) {
  int const nf = k.face_count();
  std::vector<std::vector<SubdiagramMatch>> per_face(nf);
  auto work = [&](int start, int step) {
    Matcher m(k, sdn);
    for (FaceIdx fk = start; fk < nf; fk += step) {
      std::set<std::vector<FaceIdx>> local;
      for (FaceIdx fs = 0; fs < sdn.face_count(); ++fs) {
        auto found = m.grow(fk, fs);
        if (!found || local.contains(found->faces)) continue;
        local.insert(found->faces);
        per_face[fk].push_back(std::move(*found));
      }
    }
  };
  threads = std::max(1, std::min(threads, nf));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  }
  std::vector<SubdiagramMatch> all;
  std::set<std::vector<FaceIdx>> seen;
  for (auto& list : per_face) {
    for (auto& m : list) {
      if (seen.insert(m.faces).second) all.push_back(std::move(m));
    }
  }
  std::ranges::stable_sort(all, [](auto const& x, auto const& y) {
    if (x.face_count() != y.face_count()) return x.face_count() > y.face_count();
    return x.seed < y.seed;
  });
  std::vector<SubdiagramMatch> out;
  for (auto& m : all) {
    if (m.face_count() < min_faces) continue;
    bool inner = std::ranges::any_of(out, [&](auto const& big) { return subset_of(m.faces, big.faces); });
    if (!inner) out.push_back(std::move(m));
  }
  return out;
}

SphericalCheck is_spherically_reduced(Diagram const& k, int threads) {
  SphericalCheck c;
  auto matches = find_matches(k, build_sdn(k.n()), 1, threads);
  if (!matches.empty()) {
    c.witness = std::move(matches.front());
    c.reduced = c.witness->face_count() <= 2 * k.n();
  }
  return c;
}

Diagram replace_complement(Diagram const& k, Diagram const& sdn, SubdiagramMatch const& m) {
  int const n = k.n();
  if (static_cast<int>(m.vertex_map.size()) != k.vertex_count() || m.faces.size() != m.image.size()) {
    throw ReplacementError("match is stale");
  }
  std::vector<bool> in_r(k.face_count(), false), in_s(sdn.face_count(), false);
  for (std::size_t i = 0; i < m.faces.size(); ++i) {
    FaceIdx f = m.faces[i], g = m.image[i];
    if (f >= k.face_count() || g >= sdn.face_count()) throw ReplacementError("match is stale");
    Triangle const& tk = k.triangle(f);
    Triangle const& ts = sdn.triangle(g);
    if (tk.positive != ts.positive || wrap_generator(tk.j + m.shift, n) != ts.j ||
        m.vertex_map[tk.a] != ts.a || m.vertex_map[tk.b] != ts.b || m.vertex_map[tk.c] != ts.c) {
      throw ReplacementError("match is stale");
    }
    in_r[f] = in_s[g] = true;
  }
  if (!is_disk_region(k, m.faces)) throw ReplacementError("matched faces do not form a disk");
  auto r_face = [&](FaceIdx f) { return f != kNone && in_r[f]; };
  auto s_face = [&](FaceIdx f) { return f != kNone && in_s[f]; };

  std::vector<VertexIdx> inv(sdn.vertex_count(), kNone);
  for (VertexIdx v = 0; v < k.vertex_count(); ++v) {
    if (m.vertex_map[v] != kNone) inv[m.vertex_map[v]] = v;
  }
  auto r_interior = [&](VertexIdx v) {
    if (m.vertex_map[v] == kNone) return false;
    return std::ranges::all_of(k.rotation(v), [&](DartIdx x) { return r_face(k.corner_face(x)); });
  };

  DiagramSpec spec;
  spec.n = n;
  std::vector<VertexIdx> kv(k.vertex_count(), kNone), sv(sdn.vertex_count(), kNone);
  std::int64_t next_vid = 0, next_eid = 0;
  for (VertexIdx v = 0; v < k.vertex_count(); ++v) {
    next_vid = std::max(next_vid, k.vertex_id(v) + 1);
    if (r_interior(v)) continue;
    kv[v] = static_cast<VertexIdx>(spec.vertex_ids.size());
    spec.vertex_ids.push_back(k.vertex_id(v));
    if (m.vertex_map[v] != kNone) sv[m.vertex_map[v]] = kv[v];
  }
  for (VertexIdx v = 0; v < sdn.vertex_count(); ++v) {
    if (inv[v] != kNone) continue;
    sv[v] = static_cast<VertexIdx>(spec.vertex_ids.size());
    spec.vertex_ids.push_back(next_vid++);
  }
  std::vector<DartIdx> kd(k.dart_count(), kNone), sd(sdn.dart_count(), kNone);
  for (EdgeIdx e = 0; e < k.edge_count(); ++e) {
    next_eid = std::max(next_eid, k.edge(e).id + 1);
    if (r_face(k.face_of(2 * e)) && r_face(k.face_of(2 * e + 1))) continue;
    auto ne = static_cast<EdgeIdx>(spec.edges.size());
    Edge ed = k.edge(e);
    ed.tail = kv[ed.tail];
    ed.head = kv[ed.head];
    spec.edges.push_back(ed);
    kd[2 * e] = 2 * ne;
    kd[2 * e + 1] = 2 * ne + 1;
    if (r_face(k.face_of(2 * e)) || r_face(k.face_of(2 * e + 1))) {
      auto img = sdn.dart_between(m.vertex_map[k.edge(e).tail], m.vertex_map[k.edge(e).head]);
      if (!img) throw ReplacementError("boundary edge has no image");
      sd[*img] = 2 * ne;
      sd[Diagram::reverse(*img)] = 2 * ne + 1;
    }
  }
  for (EdgeIdx e = 0; e < sdn.edge_count(); ++e) {
    if (sd[2 * e] != kNone || s_face(sdn.face_of(2 * e)) || s_face(sdn.face_of(2 * e + 1))) continue;
    auto ne = static_cast<EdgeIdx>(spec.edges.size());
    Edge const& se = sdn.edge(e);
    if (sv[se.tail] == kNone || sv[se.head] == kNone) {
      throw ReplacementError("complement edge touches a removed vertex");
    }
    spec.edges.push_back({next_eid++, sv[se.tail], sv[se.head], wrap_generator(se.label - m.shift, n)});
    sd[2 * e] = 2 * ne;
    sd[2 * e + 1] = 2 * ne + 1;
  }

  spec.rotation.resize(spec.vertex_ids.size());
  for (VertexIdx v = 0; v < k.vertex_count(); ++v) {
    if (kv[v] == kNone) continue;
    auto& rot = spec.rotation[kv[v]];
    if (m.vertex_map[v] == kNone) {
      for (DartIdx x : k.rotation(v)) rot.push_back(kd[x]);
      continue;
    }
    // the matched fan at v runs from b1 to b2 through region corners
    DartIdx b1 = kNone;
    for (DartIdx x : k.rotation(v)) {
      if (r_face(k.corner_face(x)) && !r_face(k.corner_face(k.sigma_inv(x)))) b1 = x;
    }
    if (b1 == kNone) throw ReplacementError("matched fan is not contiguous");
    DartIdx b2 = b1;
    while (r_face(k.corner_face(b2))) b2 = k.sigma(b2);
    // complement darts at the image vertex, glued in mirror order
    DartIdx s1 = *sdn.dart_between(m.vertex_map[v], m.vertex_map[k.head(b1)]);
    DartIdx s2 = *sdn.dart_between(m.vertex_map[v], m.vertex_map[k.head(b2)]);
    std::vector<DartIdx> fill;
    for (DartIdx y = sdn.sigma(s2); y != s1; y = sdn.sigma(y)) fill.push_back(sd[y]);
    rot.push_back(kd[b1]);
    rot.insert(rot.end(), fill.rbegin(), fill.rend());
    for (DartIdx x = b2; x != b1; x = k.sigma(x)) rot.push_back(kd[x]);
  }
  for (VertexIdx v = 0; v < sdn.vertex_count(); ++v) {
    if (inv[v] != kNone) continue;
    auto rot = sdn.rotation(v);
    auto& out = spec.rotation[sv[v]];
    for (auto it = rot.rbegin(); it != rot.rend(); ++it) out.push_back(sd[*it]);
  }
  if (auto o = k.spec().outer) spec.outer = kd[*o];
  try {
    return Diagram::assemble(std::move(spec));
  } catch (DiagramError const& e) {
    throw ReplacementError(std::string("complement does not fit: ") + e.what());
  }
}

Diagram spherically_reduce(Diagram k, ReductionTrace* trace, int threads) {
  Diagram const sdn = build_sdn(k.n());
  for (;;) {
    if (trace) trace->face_counts.push_back(k.face_count());
    bool replaced = false;
    for (auto const& m : find_matches(k, sdn, 2 * k.n() + 1, threads)) {
      try {
        Diagram next = replace_complement(k, sdn, m);
        if (!check_reduced(next).reduced || next.face_count() >= k.face_count()) continue;
        k = std::move(next);
        replaced = true;
        break;
      } catch (ReplacementError const&) {
        continue;
      }
    }
    if (!replaced) return k;
  }
}

std::vector<VertexIdx> long_outward_vertices(Diagram const& d) {
  std::vector<VertexIdx> out;
  for (VertexIdx v = 0; v < d.vertex_count(); ++v) {
    auto runs = vertex_runs(d, v);
    if (std::ranges::any_of(runs, [&](Run const& r) { return r.outward && r.size() >= d.n(); })) out.push_back(v);
  }
  return out;
}

YellowBound check_yellow_bound(ColoredDiagram const& cd, VertexIdx v) {
  Diagram const& d = cd.base;
  int const n = d.n();
  YellowBound best;
  best.vertex = v;
  best.bound = (n - 3) / 2;
  best.certificate_rhs = 2 * n;
  bool any = false;
  for (auto const& r : vertex_runs(d, v)) {
    if (!r.outward || r.size() < n) continue;
    int starts = r.cyclic ? r.size() : r.size() - n + 1;
    for (int s = 0; s < starts; ++s) {
      int yellow = 0;
      for (int i = 0; i < n; ++i) {
        yellow += cd.dart_color(r.darts[static_cast<std::size_t>((s + i) % r.size())]) == EdgeColor::yellow;
      }
      if (!any || yellow > best.yellow) {
        best.yellow = yellow;
        best.run_start = s;
      }
      any = true;
    }
  }
  if (!any) throw std::invalid_argument("vertex has no " + std::to_string(n) + " consecutive outward edges");
  best.ok = best.yellow <= best.bound;
  best.certificate_lhs = n - 1 + 1 + 2 * (best.yellow + 1);
  best.certificate_ok = best.certificate_lhs <= best.certificate_rhs;
  return best;
}

}  // namespace vk
