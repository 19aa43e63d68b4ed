#include <doctest.h>

#include <map>

#include "vkcurve/builder.hpp"
#include "vkcurve/coloring.hpp"

using namespace vk;

TEST_CASE("colour names round-trip") {
  for (auto c : {EdgeColor::uncoloured, EdgeColor::blue, EdgeColor::green, EdgeColor::yellow}) {
    CHECK(parse_color(to_string(c)) == c);
  }
  CHECK_FALSE(parse_color("red").has_value());
}

TEST_CASE("random diagrams colour cleanly") {
  std::map<std::string, int> seen;
  int fives = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    auto cd = color_diagram(random_diagram(seed, 10 + static_cast<int>(seed % 50), 11));
    auto rep = check_color_lemmas(cd);
    for (auto const& v : rep.violations) ++seen[v.clause + ": " + v.detail];
    CHECK(cd.uncolourable.empty());
    CHECK(cd.conflicts.empty());
    for (VertexIdx v = 0; v < cd.base.vertex_count(); ++v) fives += cd.base.is_five_vertex(v);
  }
  for (auto const& [k, c] : seen) MESSAGE(k << " x" << c);
  CHECK(seen.empty());
  MESSAGE("five vertices: " << fives);
}

TEST_CASE("all three colours occur") {
  int blue = 0, green = 0, yellow = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    auto cd = color_diagram(random_diagram(seed, 10 + static_cast<int>(seed % 50), 11));
    blue += cd.count(EdgeColor::blue);
    green += cd.count(EdgeColor::green);
    yellow += cd.count(EdgeColor::yellow);
  }
  MESSAGE(blue << " " << green << " " << yellow);
  CHECK(blue > 0);
  CHECK(green > 0);
  CHECK(yellow > 0);
}

TEST_CASE("single-edge mutations are caught") {
  int mutations = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto cd = color_diagram(random_diagram(seed, 30, 13));
    for (EdgeIdx e = 0; e < cd.base.edge_count(); ++e) {
      for (auto c : {EdgeColor::uncoloured, EdgeColor::blue, EdgeColor::green, EdgeColor::yellow}) {
        if (c == cd.colors[e]) continue;
        auto m = cd;
        m.colors[e] = c;
        ++mutations;
        CHECK_FALSE(check_color_lemmas(m).ok());
      }
    }
  }
  CHECK(mutations > 1000);
}

TEST_CASE("adjacent greens break clause b") {
  bool tried = false;
  for (std::uint64_t seed = 1; seed <= 200 && !tried; ++seed) {
    auto cd = color_diagram(random_diagram(seed, 50, 11));
    auto const& g = cd.base;
    for (EdgeIdx e = 0; e < g.edge_count() && !tried; ++e) {
      if (cd.colors[e] != EdgeColor::green) continue;
      VertexIdx a = g.edge(e).head;
      DartIdx x = 2 * e + 1;
      for (DartIdx y : {g.sigma(x), g.sigma_inv(x)}) {
        if (g.is_outward(y) || cd.dart_color(y) != EdgeColor::uncoloured) continue;
        if (g.is_gap(x) && y == g.sigma(x)) continue;
        if (g.is_gap(y) && y == g.sigma_inv(x)) continue;
        auto m = cd;
        m.colors[Diagram::edge_of(y)] = EdgeColor::green;
        CHECK(check_color_lemmas(m).count("clause-b") >= 1);
        CHECK(!g.is_five_vertex(a));
        tried = true;
        break;
      }
    }
  }
  CHECK(tried);
}
