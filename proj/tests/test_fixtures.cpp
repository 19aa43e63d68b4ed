#include <doctest.h>

#include "vkcurve/classify.hpp"
#include "vkcurve/coloring.hpp"
#include "vkcurve/fixtures.hpp"
#include "vkcurve/sdn.hpp"

using namespace vk;

TEST_CASE("region fixtures before and after replacement") {
  auto k4 = region25_fixture();
  auto k5 = region19_fixture();
  auto s4 = stats(k4), s5 = stats(k5);
  CHECK(s4.faces == 25);
  CHECK(s4.length == 13);
  CHECK(s5.faces == 19);
  CHECK(s5.length == 13);
  CHECK(boundary_word(k4) == boundary_word(k5));
  CHECK(check_reduced(k4).reduced);
  CHECK(check_reduced(k5).reduced);
  auto c4 = color_diagram(k4), c5 = color_diagram(k5);
  CHECK(c4.count(EdgeColor::yellow) == 6);
  CHECK(c5.count(EdgeColor::yellow) == 2);
  CHECK(check_color_lemmas(c4).ok());
  CHECK(check_color_lemmas(c5).ok());
  auto sr4 = is_spherically_reduced(k4);
  CHECK_FALSE(sr4.reduced);
  REQUIRE(sr4.witness);
  CHECK(sr4.witness->face_count() == 25);
  CHECK(find_matches(k4, build_sdn(11), 25).size() == 1);
  CHECK(is_spherically_reduced(k5).reduced);
}

TEST_CASE("SDn-derived disks") {
  for (int n : {11, 13}) {
    CAPTURE(n);
    auto minus = sdn_minus_face(n);
    CHECK(minus.face_count() == 4 * n - 1);
    CHECK_FALSE(is_spherically_reduced(minus).reduced);
    auto cm = color_diagram(minus);
    auto poles = long_outward_vertices(minus);
    REQUIRE(poles.size() == 2);
    bool broken = false;
    for (VertexIdx v : poles) broken |= !check_yellow_bound(cm, v).ok;
    CHECK(broken);

    auto cap = sdn_north_cap(n);
    CHECK(cap.face_count() == 2 * n);
    CHECK(is_spherically_reduced(cap).reduced);
    auto cc = color_diagram(cap);
    CHECK(check_color_lemmas(cc).ok());
    for (VertexIdx v : long_outward_vertices(cap)) CHECK(check_yellow_bound(cc, v).ok);
    for (auto const& c : classify_all(cc).vertices) {
      if (c.type == VertexType::FiveVertex) {
        bool pole = false;
        for (DartIdx x : cap.rotation(c.profile.vertex)) pole |= cap.degree(cap.head(x)) == n;
        CHECK(pole);
      }
    }

    auto band = sdn_band(n);
    CHECK(band.face_count() == 2 * n - 2);
    CHECK(is_spherically_reduced(band).reduced);
  }
}

TEST_CASE("named fixtures") {
  CHECK(make_fixture("single-face", 11).face_count() == 1);
  CHECK(make_fixture("sdn", 13).face_count() == 52);
  CHECK_THROWS_AS((void)make_fixture("region-25", 13), std::invalid_argument);
  CHECK_THROWS_AS((void)make_fixture("nope", 11), std::invalid_argument);
  CHECK_THROWS_AS((void)make_fixture("single-face", 12), std::invalid_argument);
  auto suite = fixture_suite({11, 13});
  CHECK(suite.size() == 2 + 12 + 11);
  for (auto const& f : suite) {
    CAPTURE(f.name);
    CAPTURE(f.n);
    CHECK(f.diagram.is_disk());
    CHECK(f.diagram.n() == f.n);
    CHECK(check_reduced(f.diagram).reduced);
  }
}
