#include "vkcurve/fixtures.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "vkcurve/builder.hpp"
#include "vkcurve/sdn.hpp"
#include "vkcurve/vertex_star.hpp"

namespace vk {

std::pair<std::vector<FaceIdx>, std::vector<FaceIdx>> split_by_cycle(Diagram const& d,
                                                                     std::vector<VertexIdx> const& cycle) {
  std::set<EdgeIdx> cut;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    auto x = d.dart_between(cycle[i], cycle[(i + 1) % cycle.size()]);
    if (!x) throw std::invalid_argument("cycle vertices are not joined by edges");
    cut.insert(Diagram::edge_of(*x));
  }
  std::vector<int> side(d.face_count(), -1);
  int sides = 0;
  for (FaceIdx f0 = 0; f0 < d.face_count(); ++f0) {
    if (side[f0] != -1) continue;
    std::vector<FaceIdx> stack{f0};
    side[f0] = sides;
    while (!stack.empty()) {
      FaceIdx f = stack.back();
      stack.pop_back();
      for (DartIdx x : d.face(f).darts) {
        FaceIdx g = d.face_of(Diagram::reverse(x));
        if (g == kNone || cut.contains(Diagram::edge_of(x)) || side[g] != -1) continue;
        side[g] = sides;
        stack.push_back(g);
      }
    }
    ++sides;
  }
  if (sides != 2) throw std::invalid_argument("cycle does not split the faces in two");
  std::vector<FaceIdx> a, b;
  for (FaceIdx f = 0; f < d.face_count(); ++f) (side[f] == 0 ? a : b).push_back(f);
  if (a.size() < b.size()) std::swap(a, b);
  return {a, b};
}

namespace {

std::vector<FaceIdx> faces_where(Diagram const& d, auto pred) {
  std::vector<FaceIdx> out;
  for (FaceIdx f = 0; f < d.face_count(); ++f) {
    std::vector<VertexIdx> vs;
    for (DartIdx x : d.face(f).darts) vs.push_back(d.tail(x));
    if (pred(vs)) out.push_back(f);
  }
  return out;
}

}  // namespace

Diagram region25_fixture() {
  Diagram sdn = build_sdn(11);
  SdnLayout L{11};
  std::vector<VertexIdx> cycle{L.south(), L.w(1), L.w(0), L.u(0)};
  for (int k = 10; k >= 4; --k) cycle.push_back(L.u(k));
  cycle.push_back(L.w(3));
  cycle.push_back(L.w(2));
  return extract_subdiagram(sdn, split_by_cycle(sdn, cycle).first);
}

Diagram region19_fixture() {
  Diagram sdn = build_sdn(11);
  Diagram k = region25_fixture();
  auto matches = find_matches(k, sdn, k.face_count());
  if (matches.empty()) throw std::logic_error("region fixture lost its match");
  return replace_complement(k, sdn, matches.front());
}

Diagram sdn_minus_face(int n) {
  Diagram sdn = build_sdn(n);
  SdnLayout L{n};
  auto drop = faces_where(sdn, [&](auto const& vs) {
    return std::ranges::find(vs, L.u(0)) != vs.end() && std::ranges::find(vs, L.u(1)) != vs.end() &&
           std::ranges::find(vs, L.w(0)) != vs.end();
  });
  auto keep = faces_where(sdn, [&](auto const& vs) {
    return !(std::ranges::find(vs, L.u(0)) != vs.end() && std::ranges::find(vs, L.u(1)) != vs.end() &&
             std::ranges::find(vs, L.w(0)) != vs.end());
  });
  if (drop.size() != 1) throw std::logic_error("unexpected SDn face layout");
  return extract_subdiagram(sdn, keep);
}

Diagram sdn_north_cap(int n) {
  Diagram sdn = build_sdn(n);
  SdnLayout L{n};
  auto is_u = [&](VertexIdx v) { return v >= L.u(0) && v < L.u(0) + n; };
  auto keep = faces_where(sdn, [&](auto const& vs) {
    return std::ranges::find(vs, L.north()) != vs.end() || std::ranges::count_if(vs, is_u) == 2;
  });
  return extract_subdiagram(sdn, keep);
}

Diagram sdn_band(int n) {
  Diagram sdn = build_sdn(n);
  SdnLayout L{n};
  auto keep = faces_where(sdn, [&](auto const& vs) {
    bool pole = std::ranges::find(vs, L.north()) != vs.end() || std::ranges::find(vs, L.south()) != vs.end();
    bool dropped = std::ranges::find(vs, L.u(1)) != vs.end() && std::ranges::find(vs, L.w(0)) != vs.end();
    return !pole && !dropped;
  });
  return extract_subdiagram(sdn, keep);
}

Diagram single_face(int n) {
  Builder b(n);
  b.attach_face(1);
  return b.build();
}

namespace {

struct StarName {
  char const* name;
  VertexType type;
  int variant;
};

constexpr StarName kStars[] = {
    {"star-FiveVertex", VertexType::FiveVertex, 0}, {"star-GG", VertexType::GG, 0},
    {"star-YB", VertexType::YB, 0},                 {"star-YPlus", VertexType::YPlus, 0},
    {"star-YMinus", VertexType::YMinus, 0},         {"star-FiveG", VertexType::FiveG, 0},
    {"star-Deg7-0", VertexType::Deg7, 0},           {"star-Deg7-1", VertexType::Deg7, 1},
};

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> names{"single-face", "region-25", "region-19", "sdn", "sdn-minus-face", "sdn-north-cap",
                                 "sdn-band"};
  for (auto const& s : kStars) names.emplace_back(s.name);
  return names;
}

Diagram make_fixture(std::string const& name, int n) {
  if (name == "region-25" || name == "region-19") {
    if (n != 11) throw std::invalid_argument(name + " exists only for n = 11");
    return name == "region-25" ? region25_fixture() : region19_fixture();
  }
  if (n < 11 || n % 2 == 0) throw std::invalid_argument("n must be odd and >= 11");
  if (name == "single-face") return single_face(n);
  if (name == "sdn") return build_sdn(n);
  if (name == "sdn-minus-face") return sdn_minus_face(n);
  if (name == "sdn-north-cap") return sdn_north_cap(n);
  if (name == "sdn-band") return sdn_band(n);
  for (auto const& s : kStars) {
    if (name == s.name) return vertex_star({s.type, n, s.variant}).diagram;
  }
  throw std::invalid_argument("unknown fixture: " + name);
}

std::vector<NamedFixture> fixture_suite(std::vector<int> const& ns) {
  std::vector<NamedFixture> out;
  out.push_back({"region-25", 11, region25_fixture()});
  out.push_back({"region-19", 11, region19_fixture()});
  for (int n : ns) {
    for (auto const& name : fixture_names()) {
      if (name == "region-25" || name == "region-19" || name == "sdn") continue;
      if (name == "star-FiveG" && n != 11) continue;
      out.push_back({name, n, make_fixture(name, n)});
    }
  }
  return out;
}

}  // namespace vk
