#include <doctest.h>

#include <algorithm>

#include "vkcurve/builder.hpp"
#include "vkcurve/curvature.hpp"
#include "vkcurve/fixtures.hpp"
#include "vkcurve/sdn.hpp"

using namespace vk;

namespace {

// Rotation of v with the gap moved to the end.
std::vector<DartIdx> gap_last(Diagram const& d, VertexIdx v) {
  std::vector<DartIdx> rot(d.rotation(v).begin(), d.rotation(v).end());
  auto it = std::ranges::find_if(rot, [&](DartIdx x) { return d.is_gap(x); });
  std::ranges::rotate(rot, it + 1);
  return rot;
}

Diagram with_pendant(Diagram const& d, VertexIdx v, int label) {
  auto spec = d.spec();
  auto w = static_cast<VertexIdx>(spec.vertex_ids.size());
  spec.vertex_ids.push_back(1000);
  auto e = static_cast<EdgeIdx>(spec.edges.size());
  spec.edges.push_back({1000, v, w, label});
  spec.rotation[v] = gap_last(d, v);
  spec.rotation[v].push_back(2 * e);
  spec.rotation.push_back({2 * e + 1});
  spec.outer = 2 * e;
  return Diagram::assemble(std::move(spec));
}

// Two diagrams glued at one boundary vertex each.
Diagram wedge(Diagram const& a, VertexIdx va, Diagram const& b, VertexIdx vb) {
  auto spec = a.spec();
  auto sb = b.spec();
  int const voff = a.vertex_count(), eoff = a.edge_count();
  auto mapv = [&](VertexIdx v) { return v == vb ? va : (v < vb ? v : v - 1) + voff; };
  for (VertexIdx v = 0; v < b.vertex_count(); ++v) {
    if (v != vb) spec.vertex_ids.push_back(2000 + sb.vertex_ids[v]);
  }
  for (auto const& e : sb.edges) spec.edges.push_back({3000 + e.id, mapv(e.tail), mapv(e.head), e.label});
  spec.rotation[va] = gap_last(a, va);
  for (DartIdx x : gap_last(b, vb)) spec.rotation[va].push_back(x + 2 * eoff);
  for (VertexIdx v = 0; v < b.vertex_count(); ++v) {
    if (v == vb) continue;
    std::vector<DartIdx> rot;
    for (DartIdx x : sb.rotation[v]) rot.push_back(x + 2 * eoff);
    spec.rotation.push_back(rot);
  }
  spec.outer = a.outer_darts().front();
  return Diagram::assemble(std::move(spec));
}

// A boundary vertex with `length` consecutive outward edges.
std::pair<Diagram, VertexIdx> outward_fan(int n, int length) {
  for (int step : {2, -2}) {
    Builder b(n);
    b.attach_face(1);
    auto d = b.build();
    for (VertexIdx x = 0; x < 3; ++x) {
      auto rot = gap_last(d, x);
      if (!d.is_outward(rot[0]) || !d.is_outward(rot[1])) continue;
      try {
        Builder c = b;
        int label = d.label(rot[1]);
        for (int i = 2; i < length; ++i) {
          label = wrap_generator(label + step, n);
          c.extend(x, true, true, label);
        }
        auto out = c.build();
        if (check_reduced(out).reduced && out.degree(x) == length) return {out, x};
      } catch (BuilderError const&) {
      }
    }
  }
  throw std::logic_error("no fan");
}

int star_index(NormalizedDiagram const& ks, VertexIdx v) {
  for (int i = 0; i < ks.vertex_count(); ++i) {
    if (ks.vertices[i].origin == v) return i;
  }
  return kNone;
}

}  // namespace

TEST_CASE("normalize") {
  auto one = single_face(11);
  auto k1 = normalize(one);
  CHECK(k1.vertex_count() == 3);
  CHECK(k1.edge_count == 3);
  CHECK(k1.removed_edges.empty());

  auto p = with_pendant(one, 0, 5);
  REQUIRE(p.edge_count() == 4);
  auto kp = normalize(p);
  CHECK(kp.removed_edges.size() == 1);
  CHECK(kp.removed_vertices.size() == 1);
  CHECK(kp.edge_count - kp.vertex_count() <= p.edge_count() - p.vertex_count());
  CHECK(kp.edge_count - kp.vertex_count() == 0);

  auto w = wedge(one, 0, one, 1);
  REQUIRE(w.vertex_count() == 5);
  auto kw = normalize(w);
  CHECK(kw.vertex_count() == 6);
  CHECK(kw.edge_count == 6);
  for (auto const& v : kw.vertices) {
    CHECK(v.boundary);
    CHECK(v.degree() == 2);
  }
  int corners = 0;
  for (DartIdx x = 0; x < w.dart_count(); ++x) corners += !w.is_gap(x);
  int star_corners = 0;
  for (auto const& v : kw.vertices) {
    for (DartIdx x : v.darts) star_corners += !w.is_gap(x);
  }
  CHECK(star_corners == corners);
  CHECK(distribute(w).pass);

  CHECK_THROWS_AS((void)normalize(build_sdn(11)), DiagramError);
}

TEST_CASE("large vertex components") {
  int const n = 11;
  auto [d, x] = outward_fan(n, 2 * n + 1);
  auto cd = color_diagram(d);
  auto ks = normalize(d);
  int i = star_index(ks, x);
  REQUIRE(i != kNone);
  CHECK(is_large(d, ks.vertices[i]));
  auto comps = decompose(ks, cd, i, VertexType::Boundary);
  std::vector<ComponentKind> kinds;
  for (auto const& c : comps) kinds.push_back(c.kind);
  CHECK(std::ranges::count(kinds, ComponentKind::big) == 2);
  CHECK(std::ranges::count(kinds, ComponentKind::small) == 1);
  Rational sum;
  int big_share = 0;
  for (auto const& c : comps) {
    sum += c.share;
    if (c.kind == ComponentKind::big) CHECK(c.edge_count() == n);
    if (c.share == Rational(-11, 12)) {
      ++big_share;
      CHECK(c.kind == ComponentKind::big);
    }
  }
  CHECK(sum == Rational(-1));
  CHECK(big_share == 1);
  auto r = distribute(d);
  CHECK(r.conserved());
  CHECK(r.pass);
}

TEST_CASE("boundary vertex components") {
  auto [d, x] = outward_fan(11, 3);
  auto cd = color_diagram(d);
  auto ks = normalize(d);
  int i = star_index(ks, x);
  auto comps = decompose(ks, cd, i, VertexType::Boundary);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].kind == ComponentKind::boundary_single);
  CHECK(comps[0].share == Rational(-1));

  auto [d6, x6] = outward_fan(11, 6);
  auto c6 = decompose(normalize(d6), color_diagram(d6), star_index(normalize(d6), x6), VertexType::Boundary);
  REQUIRE(c6.size() == 1);
  CHECK(c6[0].edge_count() == 6);
}

TEST_CASE("deg-7 shares") {
  CHECK(deg7_shares({5}).empty());
  CHECK(deg7_shares({3, 3, 3}) == std::vector<Rational>(3, Rational(-1, 3)));
  CHECK(deg7_shares({4, 3, 5, 3}) == std::vector<Rational>(4, Rational(-1, 4)));
  CHECK(deg7_shares({3, 5}) == std::vector<Rational>{Rational(-1, 3), Rational(-2, 3)});
  CHECK(deg7_shares({6, 3}) == std::vector<Rational>{Rational(-2, 3), Rational(-1, 3)});
  CHECK(deg7_shares({4, 4}) == std::vector<Rational>{Rational(-1, 2), Rational(-1, 2)});
  CHECK(deg7_shares({3, 4}).empty());
  CHECK(deg7_shares({4, 3}).empty());
  CHECK(deg7_shares({2, 6}).empty());
}

TEST_CASE("distribution on fixtures") {
  for (auto const& f : fixture_suite({11, 13})) {
    CAPTURE(f.name);
    CAPTURE(f.n);
    auto r = distribute(f.diagram);
    auto s = stats(f.diagram);
    CHECK(r.conserved());
    CHECK(r.curvature == Rational(s.faces - 1));
    CHECK(static_cast<int>(r.corners.size()) == s.interior_corner_count);
    if (!is_spherically_reduced(f.diagram).reduced) continue;
    CHECK(r.pass);
    for (auto const& c : r.corners) CHECK(c.total >= r.floor);
    std::int64_t const n = f.n;
    Rational five = Rational(5, 3) + Rational(5, 960 * n * n * n * n);
    for (auto const& v : r.vertices) {
      if (v.layer == 5) CHECK(v.initial + v.received >= five);
    }
    auto cert = certificate(f.diagram, r);
    CHECK(cert.holds);
    CHECK(cert.corner_holds);
  }
}

TEST_CASE("single face and region certificates") {
  auto one = single_face(11);
  auto r1 = distribute(one);
  CHECK(r1.pass);
  CHECK(r1.corners.empty());
  CHECK(r1.curvature == Rational(0));
  CHECK(r1.residue() == Rational(0));
  auto c1 = certificate(one, r1);
  std::int64_t const k4 = 320LL * 11 * 11 * 11 * 11;
  CHECK(c1.bound == Rational(3 * (1 + k4) - k4));
  CHECK(c1.holds);

  auto k5 = region19_fixture();
  auto c5 = certificate(k5, distribute(k5));
  CHECK(c5.length == 13);
  CHECK(c5.bound == Rational(13 * (1 + k4) - k4));
  CHECK(c5.epsilon == Rational(1, k4));
  CHECK(c5.holds);

  auto bad = sdn_minus_face(11);
  auto rb = distribute(bad);
  CHECK_FALSE(rb.pass);
  CHECK(rb.conserved());
  CHECK_THROWS_AS((void)certificate(bad, rb), std::invalid_argument);
}

TEST_CASE("random diagrams keep the ledger balanced") {
  int passed = 0, total = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto d = spherically_reduce(random_diagram(seed, 12 + static_cast<int>(seed % 20), 11));
    auto r = distribute(d);
    CAPTURE(seed);
    CHECK(r.conserved());
    CHECK(r.curvature <= Rational(d.edge_count() - d.vertex_count()));
    ++total;
    passed += r.pass;
    if (r.pass) CHECK(certificate(d, r).holds);
  }
  CHECK(passed == total);
}

TEST_CASE("budget cases") {
  auto cases = budget_cases(11);
  auto find = [&](std::string const& name, int k) {
    return *std::ranges::find_if(cases, [&](auto const& c) { return c.name == name && c.k == k; });
  };
  CHECK(find("big", 0).surplus == Rational(0));
  CHECK(find("big", 0).tight());
  // 1/(24*11) - 2*10/(48*121)
  CHECK(find("layer2", 10).surplus == Rational(1, 2904));
  auto five = find("layer5", 0);
  CHECK(five.identity);
  CHECK(five.surplus == Rational(5, 3) + Rational(5, 960LL * 14641));
  CHECK(budget_cases(12).empty());

  auto rep = verify_budgets(11, 101);
  CHECK(rep.ok());
  CHECK(rep.checked > 100000);
  bool big11 = std::ranges::any_of(rep.equalities, [](auto const& c) { return c.name == "big" && c.n == 11; });
  CHECK(big11);
  for (auto const& c : rep.equalities) {
    CAPTURE(c.name);
    CHECK((c.name == "big" || c.k == 2 * c.n));
    CHECK_FALSE(c.strict);
  }
}
