#include <doctest.h>

#include <algorithm>
#include <set>

#include "vkcurve/angles.hpp"
#include "vkcurve/builder.hpp"

using namespace vk;

namespace {

std::set<std::vector<int>> oracle_terms(OracleOptions const& opts, int components) {
  std::set<std::vector<int>> out;
  auto all = enumerate_angle_solutions(opts);
  for (auto const& s : all[components]) out.insert(s.terms);
  return out;
}

std::vector<int> repeat(int value, int count) { return std::vector<int>(static_cast<std::size_t>(count), value); }

std::vector<int> concat(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> out;
  for (auto const& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

TEST_CASE("corner angles of a single face") {
  auto d = Builder(11).attach_face(4).build();
  int outward = 0, inward = 0, transitional = 0;
  for (VertexIdx v = 0; v < 3; ++v) {
    auto const& rot = d.rotation(v);
    REQUIRE(rot.size() == 2);
    DartIdx first = d.is_gap(rot[0]) ? rot[1] : rot[0];
    Angle a = corner_angle(d, v, first, d.sigma(first));
    Angle b = corner_angle(d, v, d.sigma(first), first);
    CHECK(a.value == -b.value);
    CHECK(a.kind == b.kind);
    switch (a.kind) {
      case AngleKind::outward_pair: ++outward; CHECK(std::abs(a.value) == 2); break;
      case AngleKind::inward_pair: ++inward; CHECK(std::abs(a.value) == 1); break;
      case AngleKind::transitional: ++transitional; CHECK(std::abs(a.value) == 1); break;
    }
  }
  CHECK(outward == 1);
  CHECK(inward == 1);
  CHECK(transitional == 1);
  CHECK_THROWS_AS((void)angle_sum_solution(d, 0), AngleError);
}

TEST_CASE("interior vertices of random diagrams satisfy the angle sum") {
  OracleOptions opts;
  opts.n = 11;
  opts.max_degree = 24;
  auto all = enumerate_angle_solutions(opts);
  std::set<std::vector<int>> known;
  for (auto const& [c, list] : all) {
    for (auto const& s : list) known.insert(s.terms);
  }
  int interior = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto d = random_diagram(seed, 40, 11);
    for (VertexIdx v = 0; v < d.vertex_count(); ++v) {
      if (!d.is_interior_vertex(v)) continue;
      ++interior;
      auto s = angle_sum_solution(d, v);
      for (auto const& r : vertex_runs(d, v)) {
        CHECK(r.uniform);
        if (!r.cyclic && vertex_runs(d, v).size() > 1) CHECK(r.size() >= 2);
      }
      if (d.degree(v) <= opts.max_degree) CHECK(known.contains(canonical_terms(s.terms)));
    }
  }
  CHECK(interior > 100);
}

TEST_CASE("canonical terms") {
  CHECK(canonical_terms({-1, 2, -1}) == std::vector<int>{2, -1, -1});
  // reversal negates
  CHECK(canonical_terms({1, 1, -2}) == canonical_terms({2, -1, -1}));
  CHECK(canonical_terms({2, 2, 1}) == std::vector<int>{2, 2, 1});
}

TEST_CASE("three-term solution is unique") {
  for (int n : {11, 13, 15, 21}) {
    OracleOptions opts;
    opts.n = n;
    opts.max_degree = 2 * n + 2;
    std::set<std::vector<int>> three;
    for (auto const& [c, list] : enumerate_angle_solutions(opts)) {
      for (auto const& s : list) {
        if (s.terms.size() == 3) three.insert(s.terms);
      }
    }
    CAPTURE(n);
    CHECK(three == std::set<std::vector<int>>{{2, -1, -1}});
  }
}

TEST_CASE("single outward run of degree n") {
  for (int n : {11, 13, 17}) {
    OracleOptions opts;
    opts.n = n;
    opts.max_degree = n;
    auto zero = oracle_terms(opts, 0);
    CHECK(zero.contains(repeat(2, n)));
    CHECK(zero.contains(repeat(1, n)));
  }
}

TEST_CASE("two-component solutions with short runs") {
  for (int n : {11, 13}) {
    OracleOptions opts;
    opts.n = n;
    opts.max_outward_run = 2;
    opts.max_inward_run = 3;
    auto two = oracle_terms(opts, 2);
    std::set<std::vector<int>> listed = {
        canonical_terms({2, -1, -2, 1}),
        canonical_terms({2, 1, -2, -1}),
        canonical_terms({2, -1, -1, -2, 1, 1}),
        canonical_terms({2, 1, 1, -2, -1, -1}),
    };
    std::set<std::vector<int>> extra;
    for (auto const& t : two) {
      if (!listed.contains(t)) extra.insert(t);
    }
    for (auto const& t : listed) CHECK(two.contains(t));
    // Two equal components with three inward edges each also sum to zero.
    CHECK(extra == std::set<std::vector<int>>{canonical_terms({2, -1, -1, 2, -1, -1})});
  }
}

TEST_CASE("single-component solutions by inward count") {
  int const n = 13;
  OracleOptions opts;
  opts.n = n;
  opts.max_components = 1;
  opts.max_outward_run = n;
  opts.max_inward_run = n;
  auto one = enumerate_angle_solutions(opts)[1];
  auto with_inward = [&](int i) {
    std::set<std::vector<int>> out;
    for (auto const& s : one) {
      if (s.inward == i) out.insert(s.terms);
    }
    return out;
  };
  CHECK(with_inward(2) == std::set<std::vector<int>>{canonical_terms(concat({{1}, repeat(2, (n - 1) / 2)})),
                                                     canonical_terms(concat({repeat(2, (n + 1) / 2), {-1}}))});
  CHECK(with_inward(3) == std::set<std::vector<int>>{canonical_terms({1, 1, -2}),
                                                     canonical_terms(concat({{1, 1}, repeat(2, n - 1)}))});
  CHECK(with_inward(4) == std::set<std::vector<int>>{canonical_terms(concat({{1, 1, 1}, repeat(2, (n - 3) / 2)})),
                                                     canonical_terms(concat({repeat(2, (n + 3) / 2), {-1, -1, -1}}))});
}
