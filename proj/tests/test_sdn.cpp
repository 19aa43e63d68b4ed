#include <doctest.h>

#include <algorithm>
#include <map>

#include "vkcurve/builder.hpp"
#include "vkcurve/sdn.hpp"

using namespace vk;

TEST_CASE("SDn structure") {
  for (int n : {11, 13, 15, 21}) {
    auto s = build_sdn(n);
    CAPTURE(n);
    CHECK(s.face_count() == 4 * n);
    CHECK(s.vertex_count() == 2 * n + 2);
    CHECK(s.edge_count() == 6 * n);
    std::map<int, int> degrees;
    for (VertexIdx v = 0; v < s.vertex_count(); ++v) ++degrees[s.degree(v)];
    CHECK(degrees == std::map<int, int>{{5, 2 * n}, {n, 2}});
    CHECK(check_reduced(s).reduced);
  }
  CHECK_THROWS_AS((void)build_sdn(12), DiagramError);
  CHECK_THROWS_AS((void)build_sdn(9), DiagramError);
}

namespace {

std::vector<FaceIdx> all_but(int count, FaceIdx skip) {
  std::vector<FaceIdx> out;
  for (FaceIdx f = 0; f < count; ++f) {
    if (f != skip) out.push_back(f);
  }
  return out;
}

}  // namespace

TEST_CASE("SDn minus one face") {
  int const n = 11;
  auto s = build_sdn(n);
  auto k = extract_subdiagram(s, all_but(s.face_count(), 7));
  CHECK(k.face_count() == 4 * n - 1);
  auto matches = find_matches(k, s, 4 * n - 1);
  REQUIRE(matches.size() == 1);
  CHECK(matches[0].face_count() == 4 * n - 1);
  auto sr = is_spherically_reduced(k);
  CHECK_FALSE(sr.reduced);
  auto word = boundary_word(k);
  auto r = replace_complement(k, s, matches[0]);
  CHECK(r.face_count() == 1);
  CHECK(boundary_word(r) == word);
  CHECK(is_spherically_reduced(r).reduced);
}

TEST_CASE("single face has no large match") {
  auto k = Builder(11).attach_face(3).build();
  CHECK(find_matches(k, build_sdn(11), 2).empty());
  CHECK(is_spherically_reduced(k).reduced);
}

TEST_CASE("random regions of SDn replace cleanly") {
  int const n = 11;
  auto s = build_sdn(n);
  int replaced = 0;
  for (int size = 2 * n + 1; size < 4 * n; ++size) {
    // grow a disk region greedily from face 0 in index order
    std::vector<FaceIdx> region{0};
    for (FaceIdx f = 1; f < s.face_count() && static_cast<int>(region.size()) < size; ++f) {
      region.push_back(f);
      if (!is_disk_region(s, region)) region.pop_back();
    }
    if (static_cast<int>(region.size()) != size) continue;
    auto k = extract_subdiagram(s, region);
    auto word = boundary_word(k);
    auto m = find_matches(k, s, size);
    REQUIRE(m.size() == 1);
    auto r = replace_complement(k, s, m[0]);
    CHECK(r.face_count() == 4 * n - size);
    CHECK(boundary_word(r) == word);
    ++replaced;
  }
  CHECK(replaced > 5);
}
