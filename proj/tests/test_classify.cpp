#include <doctest.h>

#include <set>

#include "vkcurve/classify.hpp"
#include "vkcurve/sdn.hpp"
#include "vkcurve/vertex_star.hpp"

using namespace vk;

namespace {

std::vector<VertexType> star_types(int n) {
  std::vector<VertexType> out = {VertexType::FiveVertex, VertexType::GG, VertexType::YB, VertexType::YPlus,
                                 VertexType::YMinus};
  if (n == 11) out.push_back(VertexType::FiveG);
  return out;
}

}  // namespace

TEST_CASE("layer mapping") {
  CHECK(layer_of(VertexType::Boundary) == 1);
  CHECK(layer_of(VertexType::Deg7) == 1);
  CHECK(layer_of(VertexType::GG) == 2);
  CHECK(layer_of(VertexType::YB) == 2);
  CHECK(layer_of(VertexType::YPlus) == 3);
  CHECK(layer_of(VertexType::YMinus) == 4);
  CHECK(layer_of(VertexType::FiveG) == 4);
  CHECK(layer_of(VertexType::FiveVertex) == 5);
  for (auto t : {VertexType::Boundary, VertexType::Deg7, VertexType::GG, VertexType::YB, VertexType::YPlus,
                 VertexType::YMinus, VertexType::FiveG, VertexType::FiveVertex}) {
    CHECK(parse_vertex_type(to_string(t)) == t);
  }
}

TEST_CASE("star centres classify as built") {
  for (int n : {11, 13, 15}) {
    for (auto t : star_types(n)) {
      CAPTURE(n);
      CAPTURE(to_string(t));
      auto s = vertex_star({t, n, 0});
      auto cd = color_diagram(s.diagram);
      CHECK(check_color_lemmas(cd).ok());
      auto c = classify_vertex(cd, s.centre);
      REQUIRE(c.type.has_value());
      CHECK(*c.type == t);
      auto all = classify_all(cd);
      CHECK(all.total());
      CHECK(check_layer_connectivity(cd).ok());
      if (t != VertexType::FiveVertex) CHECK(c.profile.uncoloured_count == 6);
    }
  }
}

TEST_CASE("star profiles") {
  int const n = 11;
  auto five = vertex_star({VertexType::FiveVertex, n, 0});
  auto p = profile(color_diagram(five.diagram), five.centre);
  CHECK(p.degree == 5);
  REQUIRE(p.runs.size() == 2);
  std::multiset<std::pair<bool, int>> shape;
  for (auto const& r : p.runs) shape.insert({r.outward, r.length});
  CHECK(shape == std::multiset<std::pair<bool, int>>{{false, 3}, {true, 2}});

  auto g5 = vertex_star({VertexType::FiveG, n, 0});
  auto q = profile(color_diagram(g5.diagram), g5.centre);
  CHECK(q.degree == 11);
  REQUIRE(q.runs.size() == 1);
  CHECK_FALSE(q.runs[0].outward);

  auto gg = vertex_star({VertexType::GG, n, 0});
  CHECK(gg.diagram.degree(gg.centre) == 8);
  auto yb = vertex_star({VertexType::YB, n, 0});
  CHECK(yb.diagram.degree(yb.centre) == (n + 3) / 2 + 1);
  auto ym = vertex_star({VertexType::YMinus, n, 0});
  CHECK(ym.diagram.degree(ym.centre) == (n + 5) / 2 + 1);

  auto single = color_diagram(Builder(n).attach_face(1).build());
  auto b = profile(single, 0);
  CHECK(b.is_boundary);
  CHECK(b.degree == 2);
  CHECK(classify_vertex(single, 0).type == VertexType::Boundary);
}

TEST_CASE("two-component stars are deg-7") {
  for (int variant : {0, 1}) {
    auto s = vertex_star({VertexType::Deg7, 11, variant});
    auto c = classify_vertex(color_diagram(s.diagram), s.centre);
    CHECK(c.type == VertexType::Deg7);
    CHECK(s.diagram.degree(s.centre) == (variant == 0 ? 8 : 10));
  }
}

TEST_CASE("FiveG only at n = 11") {
  CHECK_THROWS_AS((void)vertex_star({VertexType::FiveG, 13, 0}), std::invalid_argument);
}

TEST_CASE("deg-6-compatible oracle solutions are exactly the star types") {
  for (int n : {11, 13}) {
    OracleOptions opts;
    opts.n = n;
    std::set<std::vector<int>> compatible;
    for (auto const& [c, list] : enumerate_angle_solutions(opts)) {
      for (auto const& s : list) {
        if (min_uncoloured(s, n) <= 6) compatible.insert(s.terms);
      }
    }
    std::set<std::vector<int>> realized;
    for (auto t : star_types(n)) {
      auto s = vertex_star({t, n, 0});
      realized.insert(canonical_terms(angle_sum_solution(s.diagram, s.centre).terms));
    }
    CAPTURE(n);
    CHECK(compatible == realized);
  }
}

TEST_CASE("layer connectivity flags isolated high layers") {
  auto s = vertex_star({VertexType::GG, 11, 0});
  std::vector<int> layers(s.diagram.vertex_count(), 5);
  CHECK_FALSE(check_layer_connectivity(s.diagram, layers).ok());
}
