#include <doctest.h>

#include <regex>

#include "vkcurve/fixtures.hpp"
#include "vkcurve/render.hpp"
#include "vkcurve/sdn.hpp"

using namespace vk;

namespace {

int count(std::string const& text, std::string const& pattern) {
  std::regex re(pattern);
  return static_cast<int>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

}  // namespace

TEST_CASE("dot output") {
  auto one = render_dot(single_face(11));
  CHECK(count(one, R"(\[label="\d+")") == 3);
  CHECK(count(one, "->") == 3);

  auto star = make_fixture("star-FiveVertex", 11);
  auto cd = color_diagram(star);
  auto dot = render_dot(star, &cd);
  CHECK(count(dot, "->") == star.edge_count());
  CHECK(count(dot, "color=(blue|green|gold)") == 1);

  auto sdn = render_dot(build_sdn(11));
  CHECK(count(sdn, R"(\[label="\d+")") == 24);
  CHECK(count(sdn, "->") == 66);
  CHECK(render_dot(build_sdn(11)) == sdn);
}

TEST_CASE("svg output") {
  auto d = region19_fixture();
  auto cd = color_diagram(d);
  auto svg = render_svg(d, &cd);
  CHECK(count(svg, "<line ") == d.edge_count());
  CHECK(count(svg, "<circle ") == d.vertex_count());
  CHECK(count(svg, "stroke=\"gold\"") == 2);
  CHECK(svg.find("nan") == std::string::npos);
  CHECK_THROWS_AS((void)render_svg(build_sdn(11)), DiagramError);
}
