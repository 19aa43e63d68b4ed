#include <doctest.h>

#include "vkcurve/builder.hpp"
#include "vkcurve/canonical.hpp"
#include "vkcurve/document.hpp"

using namespace vk;

namespace {

Diagram single_face(int j = 2) { return Builder(11).attach_face(j).build(); }

// Euler, degree sum and edge/face incidences.
void check_invariants(Diagram const& d) {
  int walks = static_cast<int>(d.walks().size());
  CHECK(d.vertex_count() - d.edge_count() + walks == 2);
  int degree_sum = 0;
  for (VertexIdx v = 0; v < d.vertex_count(); ++v) degree_sum += d.degree(v);
  CHECK(degree_sum == 2 * d.edge_count());
  for (EdgeIdx e = 0; e < d.edge_count(); ++e) {
    int on_faces = (d.face_of(2 * e) != kNone) + (d.face_of(2 * e + 1) != kNone);
    CHECK(on_faces == (d.is_boundary_edge(e) ? 1 : 2));
  }
}

}  // namespace

TEST_CASE("single face diagram") {
  auto d = single_face();
  CHECK(d.face_count() == 1);
  CHECK(d.edge_count() == 3);
  CHECK(d.vertex_count() == 3);
  for (EdgeIdx e = 0; e < 3; ++e) CHECK(d.is_boundary_edge(e));
  auto s = stats(d);
  CHECK(s.boundary_faces == 1);
  CHECK(s.length == 3);
  CHECK(s.interior_corner_count == 0);
  CHECK(check_reduced(d).reduced);
  auto w = boundary_word(d);
  REQUIRE(w.size() == 3);
  // Some cyclic shift of the boundary spells x1 x2 x3^-1 or its inverse.
  std::vector<Word> shapes;
  Word rel{{1, false}, {2, false}, {3, true}};
  Word inv{{3, false}, {2, true}, {1, true}};
  bool found = false;
  for (int s0 = 0; s0 < 3; ++s0) {
    Word a, b;
    for (int k = 0; k < 3; ++k) {
      a.push_back(rel[(s0 + k) % 3]);
      b.push_back(inv[(s0 + k) % 3]);
    }
    found = found || w == a || w == b;
  }
  CHECK(found);
  check_invariants(d);
}

TEST_CASE("two faces sharing one edge") {
  Builder b(11);
  b.attach_face(5);
  DartIdx d = b.frontier().front();
  auto opts = b.attach_options(d);
  REQUIRE(opts.size() == 3);
  int j = opts.front() == 5 ? opts[1] : opts.front();
  b.attach_face(d, j);
  auto g = b.build();
  CHECK(g.face_count() == 2);
  CHECK(g.edge_count() == 5);
  CHECK(g.vertex_count() == 4);
  CHECK(stats(g).length == 4);
  check_invariants(g);
}

TEST_CASE("mirror copy glued along an edge is not reduced") {
  Builder b(11);
  b.attach_face(5);
  DartIdx d = b.frontier().front();
  b.attach_face(d, 5);
  CHECK_FALSE(b.last_face_reduced());
  auto g = b.build();
  auto r = check_reduced(g);
  CHECK_FALSE(r.reduced);
  CHECK(r.witnesses.size() == 1);
}

TEST_CASE("parse rejects broken documents") {
  auto doc = emit_diagram(single_face());
  SUBCASE("malformed json") {
    CHECK_THROWS_AS((void)parse_diagram_text("{ not json"), DiagramError);
  }
  SUBCASE("dangling edge endpoint") {
    doc["edges"][0]["tail"] = 99;
    try {
      (void)parse_diagram(doc);
      FAIL("expected an error");
    } catch (DiagramError const& e) {
      CHECK(e.code() == DiagramErrc::dangling);
    }
  }
  SUBCASE("rotation missing a half-edge") {
    doc["rotation"]["0"].erase(0);
    try {
      (void)parse_diagram(doc);
      FAIL("expected an error");
    } catch (DiagramError const& e) {
      CHECK(e.code() == DiagramErrc::rotation);
    }
  }
  SUBCASE("face label not a relator") {
    doc["edges"][0]["label"] = 9;
    try {
      (void)parse_diagram(doc);
      FAIL("expected an error");
    } catch (DiagramError const& e) {
      CHECK((e.code() == DiagramErrc::not_relator || e.code() == DiagramErrc::outer_face));
    }
  }
  SUBCASE("even n") {
    doc["n"] = 12;
    try {
      (void)parse_diagram(doc);
      FAIL("expected an error");
    } catch (DiagramError const& e) {
      CHECK(e.code() == DiagramErrc::bad_n);
    }
  }
}

TEST_CASE("random diagrams are reduced, valid and reproducible") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    int faces = 1 + static_cast<int>(seed % 50);
    auto d = random_diagram(seed, faces, 11 + 2 * static_cast<int>(seed % 3));
    CHECK(d.face_count() == faces);
    CHECK(check_reduced(d).reduced);
    check_invariants(d);
    CHECK(emit_diagram_text(d) == emit_diagram_text(random_diagram(seed, faces, d.n())));
    auto again = parse_diagram_text(emit_diagram_text(d));
    CHECK(isomorphic(d, again));
    CHECK(boundary_word(again) == boundary_word(d));
  }
}

TEST_CASE("canonical form ignores ids") {
  auto d = random_diagram(7, 30, 13);
  auto doc = emit_diagram(d);
  // Shift every id; the map is unchanged.
  for (auto& v : doc["vertices"]) v = v.get<int>() + 1000;
  for (auto& e : doc["edges"]) {
    e["id"] = e["id"].get<int>() + 500;
    e["tail"] = e["tail"].get<int>() + 1000;
    e["head"] = e["head"].get<int>() + 1000;
  }
  nlohmann::ordered_json rot = nlohmann::ordered_json::object();
  for (auto& [k, list] : doc["rotation"].items()) {
    for (auto& h : list) h["edge"] = h["edge"].get<int>() + 500;
    rot[std::to_string(std::stoi(k) + 1000)] = list;
  }
  doc["rotation"] = rot;
  doc["outer"]["edge"] = doc["outer"]["edge"].get<int>() + 500;
  auto shifted = parse_diagram(doc);
  CHECK(isomorphic(d, shifted));
  CHECK(check_reduced(shifted).reduced == check_reduced(d).reduced);
  CHECK_FALSE(isomorphic(d, random_diagram(8, 30, 13)));
}
