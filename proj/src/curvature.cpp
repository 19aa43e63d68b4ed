#include "vkcurve/curvature.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace vk {

NormalizedDiagram normalize(Diagram const& k) {
  if (!k.is_disk()) {
    throw DiagramError(DiagramErrc::unsupported_surface, "curvature is defined for disk diagrams only");
  }
  NormalizedDiagram ns;
  std::vector<bool> gone(k.edge_count(), false);
  for (EdgeIdx e = 0; e < k.edge_count(); ++e) {
    if (k.on_outer(2 * e) && k.on_outer(2 * e + 1)) {
      gone[e] = true;
      ns.removed_edges.push_back(e);
    }
  }
  ns.edge_count = k.edge_count() - static_cast<int>(ns.removed_edges.size());
  ns.owner.assign(k.dart_count(), kNone);
  auto add = [&](VertexIdx v, std::vector<DartIdx> darts, bool boundary) {
    for (DartIdx x : darts) ns.owner[x] = ns.vertex_count();
    ns.vertices.push_back({v, std::move(darts), boundary});
  };
  for (VertexIdx v = 0; v < k.vertex_count(); ++v) {
    std::vector<DartIdx> keep;
    for (DartIdx x : k.rotation(v)) {
      if (!gone[Diagram::edge_of(x)]) keep.push_back(x);
    }
    if (keep.empty()) {
      ns.removed_vertices.push_back(v);
      continue;
    }
    if (k.is_interior_vertex(v)) {
      add(v, std::move(keep), false);
      continue;
    }
    // A kept dart whose following corner is outer ends a stretch; removed
    // tree darts always sit inside such gaps.
    int const m = static_cast<int>(keep.size());
    std::vector<int> gaps;
    for (int i = 0; i < m; ++i) {
      if (k.is_gap(keep[i])) gaps.push_back(i);
    }
    for (std::size_t g = 0; g < gaps.size(); ++g) {
      std::vector<DartIdx> seg;
      for (int i = (gaps[g] + 1) % m;; i = (i + 1) % m) {
        seg.push_back(keep[i]);
        if (i == gaps[(g + 1) % gaps.size()]) break;
      }
      add(v, std::move(seg), true);
    }
  }
  return ns;
}

char const* to_string(ComponentKind k) {
  switch (k) {
    case ComponentKind::big: return "big";
    case ComponentKind::small: return "small";
    case ComponentKind::boundary_first: return "boundary-first";
    case ComponentKind::boundary_last: return "boundary-last";
    case ComponentKind::boundary_middle: return "boundary-middle";
    case ComponentKind::boundary_single: return "boundary-single";
    case ComponentKind::deg7_pair: return "deg7-pair";
    case ComponentKind::whole_vertex: return "whole-vertex";
  }
  return "?";
}

namespace {

// Maximal stretch of darts with one direction. `forward` is true when the
// run's own order (first edge to last) follows the rotation.
struct Stretch {
  std::vector<DartIdx> darts;
  bool outward = false;
  bool forward = true;
};

bool runs_forward(Diagram const& d, DartIdx a, DartIdx b, bool outward) {
  int s = signed_step(d.label(a), d.label(b), d.n());
  return outward ? s == 2 : s == -1;
}

std::vector<Stretch> stretches(Diagram const& d, StarVertex const& v) {
  std::vector<DartIdx> seq = v.darts;
  int const m = static_cast<int>(seq.size());
  if (!v.boundary) {
    int change = kNone;
    for (int i = 0; i < m; ++i) {
      if (d.is_outward(seq[i]) != d.is_outward(seq[(i + m - 1) % m])) {
        change = i;
        break;
      }
    }
    if (change == kNone) change = static_cast<int>(std::ranges::min_element(seq) - seq.begin());
    std::ranges::rotate(seq, seq.begin() + change);
  }
  std::vector<Stretch> out;
  for (DartIdx x : seq) {
    if (out.empty() || out.back().outward != d.is_outward(x)) out.push_back({{}, d.is_outward(x), true});
    out.back().darts.push_back(x);
  }
  for (auto& s : out) {
    if (s.darts.size() >= 2) s.forward = runs_forward(d, s.darts[0], s.darts[1], s.outward);
  }
  return out;
}

int uncoloured_in(ColoredDiagram const& cd, std::vector<DartIdx> const& darts) {
  return static_cast<int>(std::ranges::count_if(
      darts, [&](DartIdx x) { return cd.dart_color(x) == EdgeColor::uncoloured; }));
}

Component make(ColoredDiagram const& cd, int owner, ComponentKind kind, std::vector<DartIdx> darts, Rational share) {
  Component c;
  c.owner = owner;
  c.kind = kind;
  c.uncoloured = uncoloured_in(cd, darts);
  c.darts = std::move(darts);
  c.share = std::move(share);
  return c;
}

std::vector<Component> split_large(ColoredDiagram const& cd, StarVertex const& v, int owner) {
  Diagram const& d = cd.base;
  int const n = d.n();
  std::vector<Component> out;
  for (auto const& s : stretches(d, v)) {
    int const m = static_cast<int>(s.darts.size());
    auto piece = [&](int from, int to, ComponentKind kind) {
      out.push_back(make(cd, owner, kind, {s.darts.begin() + from, s.darts.begin() + to}, 0));
    };
    int const rest = m % n;
    // Big components are cut from the run's last edge backwards.
    if (s.forward) {
      if (rest > 0) piece(0, rest, ComponentKind::small);
      for (int i = rest; i < m; i += n) piece(i, i + n, ComponentKind::big);
    } else {
      for (int i = 0; i + n <= m; i += n) piece(i, i + n, ComponentKind::big);
      if (rest > 0) piece(m - rest, m, ComponentKind::small);
    }
  }
  std::size_t chosen = out.size();
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].kind != ComponentKind::big) continue;
    if (chosen == out.size() || std::ranges::min(out[i].darts) < std::ranges::min(out[chosen].darts)) chosen = i;
  }
  out[chosen].share = Rational(-11, 12);
  out[(chosen + 1) % out.size()].share = Rational(-1, 12);
  return out;
}

std::vector<Component> split_boundary(ColoredDiagram const& cd, StarVertex const& v, int owner) {
  Diagram const& d = cd.base;
  auto parts = stretches(d, v);
  struct Part {
    std::vector<DartIdx> darts;
    bool pair_out = false;  // exactly the two outward edges of one stretch
    bool forward = true;
  };
  std::vector<Part> comps;
  std::vector<DartIdx> pending;  // single edges waiting for a component
  for (auto const& s : parts) {
    if (s.darts.size() < 2) {
      if (comps.empty()) {
        pending.insert(pending.end(), s.darts.begin(), s.darts.end());
      } else {
        comps.back().darts.insert(comps.back().darts.end(), s.darts.begin(), s.darts.end());
        comps.back().pair_out = false;
      }
      continue;
    }
    Part p{pending, s.outward && s.darts.size() == 2 && pending.empty(), s.forward};
    p.darts.insert(p.darts.end(), s.darts.begin(), s.darts.end());
    pending.clear();
    comps.push_back(std::move(p));
  }
  if (comps.empty()) comps.push_back({pending, false, true});
  std::vector<std::string> notes(comps.size());
  // An end component of two outward edges whose boundary edge starts the
  // run has no interior uncoloured edge; fold it into its neighbour.
  if (comps.size() > 1 && comps.front().pair_out && comps.front().forward) {
    comps[1].darts.insert(comps[1].darts.begin(), comps[0].darts.begin(), comps[0].darts.end());
    comps[1].pair_out = false;
    comps.erase(comps.begin());
    notes.erase(notes.begin());
    notes[0] = "merged first two-edge outward component";
  }
  if (comps.size() > 1 && comps.back().pair_out && !comps.back().forward) {
    auto& prev = comps[comps.size() - 2];
    prev.darts.insert(prev.darts.end(), comps.back().darts.begin(), comps.back().darts.end());
    comps.pop_back();
    notes.pop_back();
    notes.back() += (notes.back().empty() ? "" : "; ") + std::string("merged last two-edge outward component");
  }
  std::vector<Component> out;
  if (comps.size() == 1) {
    out.push_back(make(cd, owner, ComponentKind::boundary_single, comps[0].darts, -1));
    out.back().note = notes[0];
    return out;
  }
  for (std::size_t i = 0; i < comps.size(); ++i) {
    bool first = i == 0, last = i + 1 == comps.size();
    auto kind = first ? ComponentKind::boundary_first
                      : (last ? ComponentKind::boundary_last : ComponentKind::boundary_middle);
    out.push_back(make(cd, owner, kind, comps[i].darts, first || last ? Rational(-1, 2) : Rational(0)));
    out.back().note = notes[i];
  }
  return out;
}

std::vector<Component> split_deg7(ColoredDiagram const& cd, StarVertex const& v, int owner) {
  Diagram const& d = cd.base;
  auto parts = stretches(d, v);
  auto whole = [&](std::string note) {
    std::vector<Component> out{make(cd, owner, ComponentKind::whole_vertex, v.darts, -1)};
    out[0].note = std::move(note);
    return out;
  };
  if (parts.size() < 2 || parts.size() % 2 != 0) return whole("");
  if (parts.front().outward) std::ranges::rotate(parts, parts.begin() + 1);
  std::vector<Component> out;
  int const count = static_cast<int>(parts.size() / 2);
  for (int i = 0; i < count; ++i) {
    auto darts = parts[2 * i].darts;
    darts.insert(darts.end(), parts[2 * i + 1].darts.begin(), parts[2 * i + 1].darts.end());
    out.push_back(make(cd, owner, ComponentKind::deg7_pair, std::move(darts), 0));
  }
  std::vector<int> uc;
  for (auto const& c : out) uc.push_back(c.uncoloured);
  auto shares = deg7_shares(uc);
  if (shares.empty()) return whole(count == 2 ? "two components taken as one" : "");
  for (std::size_t i = 0; i < out.size(); ++i) out[i].share = shares[i];
  return out;
}

}  // namespace

std::vector<Rational> deg7_shares(std::vector<int> const& uncoloured) {
  auto const d = static_cast<std::int64_t>(uncoloured.size());
  if (d < 2) return {};
  if (d > 2) return std::vector<Rational>(uncoloured.size(), Rational(-1, d));
  int lo = std::min(uncoloured[0], uncoloured[1]), hi = std::max(uncoloured[0], uncoloured[1]);
  if (lo < 3 || (lo == 3 && hi <= 4)) return {};
  if (lo == 3) {
    return uncoloured[0] == 3 ? std::vector<Rational>{Rational(-1, 3), Rational(-2, 3)}
                              : std::vector<Rational>{Rational(-2, 3), Rational(-1, 3)};
  }
  return {Rational(-1, 2), Rational(-1, 2)};
}

bool is_large(Diagram const& d, StarVertex const& v) {
  if (v.degree() <= d.n()) return false;
  auto parts = stretches(d, v);
  return std::ranges::any_of(parts, [&](auto const& s) { return static_cast<int>(s.darts.size()) >= d.n(); });
}

std::vector<Component> decompose(NormalizedDiagram const& ks, ColoredDiagram const& cd, int index, VertexType type) {
  StarVertex const& v = ks.vertices.at(static_cast<std::size_t>(index));
  std::vector<Component> out;
  if ((type == VertexType::Boundary || type == VertexType::Deg7) && is_large(cd.base, v)) {
    out = split_large(cd, v, index);
  } else if (type == VertexType::Boundary) {
    out = split_boundary(cd, v, index);
  } else if (type == VertexType::Deg7) {
    out = split_deg7(cd, v, index);
  } else {
    out.push_back(make(cd, index, ComponentKind::whole_vertex, v.darts, -1));
  }
  std::size_t total = 0;
  Rational shares;
  for (auto const& c : out) {
    total += c.darts.size();
    shares += c.share;
  }
  if (total != v.darts.size() || shares != Rational(-1)) {
    throw std::logic_error("decomposition does not cover the vertex exactly once");
  }
  return out;
}

Rational CurvatureReport::corner_sum() const {
  Rational s;
  for (auto const& c : corners) s += c.total;
  return s;
}

Rational CurvatureReport::residue() const {
  Rational s;
  for (auto const& v : vertices) s += v.balance();
  return s;
}

namespace {

struct LayerGrant {
  Rational corner;
  Rational five;    // to a 5-vertex across a coloured edge
  Rational vertex;  // to every interior neighbour
};

LayerGrant grants_for(int layer, int n) {
  Rational const third(1, 3), sixth(1, 6);
  std::int64_t const m = n;
  switch (layer) {
    case 1: return {third + Rational(1, 24 * m), sixth, Rational(1, 24 * m)};
    case 2: return {third + Rational(1, 48 * m * m), sixth, Rational(1, 48 * m * m)};
    case 3: return {third + Rational(1, 96 * m * m * m), sixth, Rational(1, 96 * m * m * m)};
    default: {
      Rational e(1, 192 * m * m * m * m);
      return {third + e, sixth + e, 0};
    }
  }
}

}  // namespace

CurvatureReport distribute(Diagram const& k) {
  ColoredDiagram cd = color_diagram(k);
  Diagram const& d = cd.base;
  NormalizedDiagram ks = normalize(d);
  CurvatureReport r;
  r.n = d.n();
  std::int64_t const n = d.n();
  r.floor = Rational(1, 3) + Rational(1, 960 * n * n * n * n);
  r.curvature = Rational(ks.edge_count - ks.vertex_count());

  std::vector<int> corner_slot(d.dart_count(), kNone);
  for (DartIdx x = 0; x < d.dart_count(); ++x) {
    if (ks.owner[x] == kNone) continue;
    FaceIdx f = d.corner_face(x);
    if (f == kNone || !d.is_interior_face(f)) continue;
    corner_slot[x] = static_cast<int>(r.corners.size());
    r.corners.push_back({x, d.tail(x), f, 0});
  }

  for (int i = 0; i < ks.vertex_count(); ++i) {
    auto const& sv = ks.vertices[static_cast<std::size_t>(i)];
    VertexLedger led;
    led.index = i;
    led.origin = sv.origin;
    led.initial = Rational(sv.degree(), 2) - 1;
    if (sv.boundary) {
      led.type = VertexType::Boundary;
    } else {
      auto c = classify_vertex(cd, sv.origin);
      led.type = c.type;
      if (!c.type) r.problems.push_back("vertex " + std::to_string(d.vertex_id(sv.origin)) + ": " + c.problem);
    }
    if (led.type) led.layer = layer_of(*led.type);
    r.vertices.push_back(std::move(led));
  }

  auto pay = [&](Component const& c, LayerGrant const& g, Rational available) {
    ComponentLedger cl{c, std::move(available), 0};
    auto& src = r.vertices[static_cast<std::size_t>(c.owner)];
    for (DartIdx x : c.darts) {
      if (corner_slot[x] != kNone) {
        r.corners[static_cast<std::size_t>(corner_slot[x])].total += g.corner;
        cl.granted += g.corner;
      }
      VertexIdx h = d.head(x);
      if (!d.is_interior_vertex(h)) continue;
      Rational amount = g.vertex;
      if (cd.dart_color(x) != EdgeColor::uncoloured && d.is_five_vertex(h)) amount += g.five;
      if (amount.sign() == 0) continue;
      r.vertices[static_cast<std::size_t>(ks.owner[Diagram::reverse(x)])].received += amount;
      cl.granted += amount;
    }
    src.granted += cl.granted;
    if (cl.surplus().sign() < 0) {
      r.deficits.push_back({c.owner, src.origin, std::string("component ") + to_string(c.kind) + " overspends",
                            kNone, -cl.surplus()});
    }
    r.components.push_back(std::move(cl));
  };

  for (int layer = 1; layer <= 4; ++layer) {
    auto g = grants_for(layer, d.n());
    std::vector<Rational> receipts;
    for (auto const& v : r.vertices) receipts.push_back(v.received);
    for (int i = 0; i < ks.vertex_count(); ++i) {
      auto const& led = r.vertices[static_cast<std::size_t>(i)];
      if (led.layer != layer) continue;
      auto comps = decompose(ks, cd, i, *led.type);
      for (auto const& c : comps) {
        Rational available = Rational(c.edge_count(), 2) + c.share;
        if (layer > 1) available += receipts[static_cast<std::size_t>(i)];
        pay(c, g, std::move(available));
      }
    }
  }

  for (auto& led : r.vertices) {
    if (led.layer != 5) continue;
    auto const& sv = ks.vertices[static_cast<std::size_t>(led.index)];
    std::vector<int> slots;
    for (DartIdx x : sv.darts) {
      if (corner_slot[x] != kNone) slots.push_back(corner_slot[x]);
    }
    if (slots.empty()) continue;
    Rational each = led.balance() / Rational(static_cast<std::int64_t>(slots.size()));
    for (int s : slots) r.corners[static_cast<std::size_t>(s)].total += each;
    led.granted += each * Rational(static_cast<std::int64_t>(slots.size()));
  }

  for (auto const& c : r.corners) {
    if (c.total < r.floor) {
      int idx = ks.owner[c.dart];
      r.deficits.push_back({idx, c.vertex, "corner below the floor", c.dart, r.floor - c.total});
    }
  }
  r.pass = r.problems.empty() && r.deficits.empty();
  return r;
}

IsoperimetricCertificate certificate(Diagram const& k, CurvatureReport const& report) {
  if (!report.pass) throw std::invalid_argument("curvature distribution did not pass; no certificate");
  auto s = stats(k);
  IsoperimetricCertificate c;
  c.n = k.n();
  std::int64_t const n = k.n();
  c.epsilon = Rational(1, 320 * n * n * n * n);
  c.faces = s.faces;
  c.boundary_faces = s.boundary_faces;
  c.area = s.area;
  c.length = s.length;
  c.corner_lhs = Rational(s.faces - 1);
  c.corner_rhs = Rational(3 * (s.faces - s.boundary_faces)) * (Rational(1, 3) + c.epsilon / 3);
  c.corner_holds = c.corner_lhs >= c.corner_rhs;
  Rational inv = Rational(1) / c.epsilon;
  c.bound = Rational(s.length) * (Rational(1) + inv) - inv;
  c.holds = Rational(s.area) <= c.bound;
  return c;
}

namespace {

struct BudgetSpec {
  char const* name;
  bool strict;
  bool identity;
  int k_lo;  // k runs over [k_lo, k_hi(n)]; no parameter when k_hi is 0
  std::function<int(int)> k_hi;
  bool per_d;
  std::function<Rational(Rational const& n, Rational const& k, Rational const& d)> raw, closed;
};

}  // namespace

std::vector<BudgetCase> budget_cases(int n) {
  using R = Rational;
  auto e1 = [](R const& n) { return R(1) / (R(24) * n); };
  auto e2 = [](R const& n) { return R(1) / (R(48) * n * n); };
  auto e3 = [](R const& n) { return R(1) / (R(96) * n * n * n); };
  auto e4 = [](R const& n) { return R(1) / (R(192) * n * n * n * n); };
  R const third(1, 3), sixth(1, 6), half(1, 2);
  auto none = [](int) { return 0; };
  auto below_n = [](int n) { return n - 1; };
  auto upto_n = [](int n) { return n; };
  auto below_2n = [](int n) { return 2 * n - 1; };
  auto upto_2n = [](int n) { return 2 * n; };
  std::vector<BudgetSpec> specs{
      {"big", false, false, 0, none, false,
       [&](R const& n, R const&, R const&) {
         return n / 2 - R(11, 12) - (n / 3 + n * e1(n) + (n - 1) / 2 * sixth + n * e1(n));
       },
       [](R const& n, R const&, R const&) { return (n - 11) / 12; }},
      {"small", true, false, 1, below_n, false,
       [&](R const& n, R const& k, R const&) {
         return k / 2 - R(1, 12) - (k / 3 + k * e1(n) + (k - 1) / 6 + k * e1(n));
       },
       [](R const& n, R const& k, R const&) { return R(1, 12) - k / (R(12) * n); }},
      {"boundary-degree-3", true, false, 0, none, false,
       [&](R const& n, R const&, R const&) { return R(3, 2) - 1 - (sixth + e1(n)); },
       [&](R const& n, R const&, R const&) { return third - e1(n); }},
      {"boundary-single", true, false, 4, below_2n, false,
       [&](R const& n, R const& k, R const&) {
         return k / 2 - 1 - ((k - 3) / 3 + (k - 3) * e1(n) + (k - 3) / 6 + (k - 2) * e1(n));
       },
       [&](R const& n, R const& k, R const&) { return half - (R(2) * k - 5) * e1(n); }},
      {"boundary-first", true, false, 2, below_2n, false,
       [&](R const& n, R const& k, R const&) {
         return k / 2 - half - ((k - 1) / 3 + (k - 1) * e1(n) + (k - 2) / 6 + (k - 1) * e1(n));
       },
       [&](R const& n, R const& k, R const&) { return sixth - (R(2) * k - 2) * e1(n); }},
      {"boundary-last", true, false, 2, below_2n, false,
       [&](R const& n, R const& k, R const&) {
         return k / 2 - half - ((k - 2) / 3 + (k - 2) * e1(n) + (k - 2) / 6 + (k - 1) * e1(n));
       },
       [&](R const& n, R const& k, R const&) { return half - (R(2) * k - 3) * e1(n); }},
      {"boundary-middle", true, false, 2, below_2n, false,
       [&](R const& n, R const& k, R const&) { return k / 2 - (k / 3 + k * e1(n) + (k - 1) / 6 + k * e1(n)); },
       [&](R const& n, R const& k, R const&) { return sixth - R(2) * k * e1(n); }},
      {"deg7-many", false, false, 4, upto_2n, true,
       [&](R const& n, R const& k, R const& d) {
         return k / 2 - R(1) / d - (k / 3 + k * e1(n) + (k - 3) / 6 + k * e1(n));
       },
       [&](R const& n, R const& k, R const& d) { return half - R(1) / d - R(2) * k * e1(n); }},
      {"deg7-two-3", false, false, 4, upto_2n, false,
       [&](R const& n, R const& k, R const&) {
         return k / 2 - third - (k / 3 + k * e1(n) + (k - 3) / 6 + k * e1(n));
       },
       [&](R const& n, R const& k, R const&) { return sixth - R(2) * k * e1(n); }},
      {"deg7-two-5", false, false, 5, upto_2n, false,
       [&](R const& n, R const& k, R const&) {
         return k / 2 - R(2, 3) - (k / 3 + k * e1(n) + (k - 5) / 6 + k * e1(n));
       },
       [&](R const& n, R const& k, R const&) { return sixth - R(2) * k * e1(n); }},
      {"deg7-two-4", false, false, 4, upto_2n, false,
       [&](R const& n, R const& k, R const&) {
         return k / 2 - half - (k / 3 + k * e1(n) + (k - 4) / 6 + k * e1(n));
       },
       [&](R const& n, R const& k, R const&) { return sixth - R(2) * k * e1(n); }},
      {"deg7-one", false, false, 7, upto_2n, false,
       [&](R const& n, R const& k, R const&) {
         return k / 2 - 1 - (k / 3 + k * e1(n) + (k - 7) / 6 + k * e1(n));
       },
       [&](R const& n, R const& k, R const&) { return sixth - R(2) * k * e1(n); }},
      {"layer2", true, false, 6, below_n, false,
       [&](R const& n, R const& k, R const&) {
         return e1(n) + k / 2 - 1 - (k / 3 + k * e2(n) + (k - 6) / 6 + k * e2(n));
       },
       [&](R const& n, R const& k, R const&) { return e1(n) - R(2) * k * e2(n); }},
      {"layer3", true, false, 6, below_n, false,
       [&](R const& n, R const& k, R const&) {
         return e2(n) + k / 2 - 1 - (k / 3 + k * e3(n) + (k - 6) / 6 + k * e3(n));
       },
       [&](R const& n, R const& k, R const&) { return e2(n) - R(2) * k * e3(n); }},
      {"layer4", true, false, 6, upto_n, false,
       [&](R const& n, R const& k, R const&) {
         return e3(n) + k / 2 - 1 - (k / 3 + k * e4(n) + (k - 6) / 6 + (k - 6) * e4(n));
       },
       [&](R const& n, R const& k, R const&) { return e3(n) - (R(2) * k - 6) * e4(n); }},
      {"layer5", false, true, 0, none, false,
       [&](R const& n, R const&, R const&) { return R(5, 2) - 1 + sixth + e4(n); },
       [](R const& n, R const&, R const&) { return R(5, 3) + R(5) / (R(960) * n * n * n * n); }},
  };

  std::vector<BudgetCase> out;
  if (n < 11 || n % 2 == 0) return out;
  R const rn(n);
  for (auto const& s : specs) {
    int k_lo = s.k_lo, k_hi = s.k_hi(n);
    if (k_hi == 0) k_lo = 0;
    for (int k = k_lo; k <= k_hi; ++k) {
      int d_lo = s.per_d ? 3 : 0, d_hi = s.per_d ? n : 0;
      for (int dd = d_lo; dd <= d_hi; ++dd) {
        out.push_back({s.name, n, k, dd, s.raw(rn, R(k), R(dd)), s.closed(rn, R(k), R(dd)), s.strict, s.identity});
      }
    }
  }
  return out;
}

bool BudgetCase::holds() const {
  if (surplus != closed_form) return false;
  if (identity) {
    // five corners share the total and each must clear the floor
    Rational m(n);
    return surplus / 5 >= Rational(1, 3) + Rational(1) / (Rational(960) * m * m * m * m);
  }
  return strict ? surplus.sign() > 0 : surplus.sign() >= 0;
}

BudgetReport verify_budgets(int n_min, int n_max) {
  BudgetReport rep;
  rep.n_min = n_min;
  rep.n_max = n_max;
  for (int n = n_min; n <= n_max; ++n) {
    for (auto& c : budget_cases(n)) {
      ++rep.checked;
      if (!c.holds()) {
        rep.failures.push_back(std::move(c));
      } else if (c.tight()) {
        rep.equalities.push_back(std::move(c));
      }
    }
  }
  return rep;
}

}  // namespace vk
