#include "vkcurve/vertex_star.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace vk {

std::vector<RunShape> star_runs(VertexStarSpec const& spec) {
  int const n = spec.n;
  switch (spec.type) {
    case VertexType::FiveVertex: return {{false, 3, 1}, {true, 2, 1}};
    case VertexType::GG: return {{true, 3, 1}, {false, 5, 1}};
    case VertexType::YB:
    case VertexType::YPlus: return {{true, (n + 1) / 2, 1}, {false, 2, -1}};
    case VertexType::YMinus: return {{true, (n + 3) / 2, 1}, {false, 2, 1}};
    case VertexType::FiveG:
      if (n != 11) throw std::invalid_argument("FiveG stars exist only for n = 11");
      return {{false, n, 1}};
    case VertexType::Deg7:
      if (spec.variant == 0) return {{true, 2, 1}, {false, 2, -1}, {true, 2, -1}, {false, 2, 1}};
      return {{true, 2, 1}, {false, 3, 1}, {true, 2, -1}, {false, 3, -1}};
    case VertexType::Boundary: break;
  }
  throw std::invalid_argument("no star for boundary vertices");
}

namespace {

struct StarEdge {
  bool outward;
  int label;
};

// Directions and labels of the centre's edges in rotation order.
std::vector<StarEdge> star_edges(std::vector<RunShape> const& runs, int n) {
  std::vector<StarEdge> out;
  int label = 1;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    auto const& run = runs[r];
    for (int i = 0; i < run.length; ++i) {
      if (!out.empty()) {
        bool prev_out = out.back().outward;
        if (i > 0) {
          label += run.outward ? 2 * run.orientation : -run.orientation;
        } else {
          label += prev_out ? -1 : 1;
        }
      }
      out.push_back({run.outward, wrap_generator(label, n)});
    }
  }
  return out;
}

std::optional<Builder> build_centre(std::vector<StarEdge> const& edges, int n, VertexIdx& centre) {
  for (int j = 1; j <= n; ++j) {
    for (bool positive : {true, false}) {
      Builder first(n);
      first.attach_face(j, positive);
      for (VertexIdx x = 0; x < 3; ++x) {
        for (bool after : {true, false}) {
          Builder b = first;
          // orient x's two darts so the face corner runs from edges[0] to edges[1]
          auto d = b.build();
          auto rot = d.rotation(x);
          DartIdx p = d.is_gap(rot[0]) ? rot[1] : rot[0];
          DartIdx q = d.sigma(p);
          if (d.is_outward(p) != edges[0].outward || d.label(p) != edges[0].label ||
              d.is_outward(q) != edges[1].outward || d.label(q) != edges[1].label) {
            continue;
          }
          try {
            for (std::size_t i = 2; i < edges.size(); ++i) b.extend(x, after, edges[i].outward, edges[i].label);
            if (!b.can_close(x)) continue;
            b.close(x);
          } catch (BuilderError const&) {
            continue;
          }
          auto built = b.build();
          if (!built.is_interior_vertex(x) || !check_reduced(built).reduced) continue;
          std::vector<int> want;
          for (std::size_t i = 0; i < edges.size(); ++i) {
            auto const& a = edges[i];
            auto const& c = edges[(i + 1) % edges.size()];
            if (a.outward == c.outward) want.push_back(signed_step(a.label, c.label, n));
          }
          if (canonical_terms(angle_sum_solution(built, x).terms) != canonical_terms(want)) continue;
          centre = x;
          return b;
        }
      }
    }
  }
  return std::nullopt;
}

// Blue fires at a 5-vertex when its first inward edge is the second edge
// of an outward run at the far end B. One more face at B pushes that edge
// further along the run. Returns false if some blue cannot be cleared.
bool clear_blues(Builder& b, std::vector<VertexIdx> const& keep) {
  for (int round = 0; round < 16; ++round) {
    auto d = b.build();
    auto cd = color_diagram(d);
    VertexIdx target = kNone, far = kNone;
    for (VertexIdx g : keep) {
      auto sh = five_vertex_shape(d, g);
      if (!sh || cd.dart_color(sh->in2) != EdgeColor::blue) continue;
      target = g;
      far = d.head(sh->in1);
      break;
    }
    if (target == kNone) return true;
    if (!b.on_frontier(far)) return false;
    bool fixed = false;
    for (DartIdx fd : {b.frontier_in(far), b.frontier_out(far)}) {
      for (int j : b.attach_options(fd)) {
        Builder next = b;
        next.attach_face(fd, j);
        if (!next.last_face_reduced()) continue;
        auto nd = next.build();
        auto sh = five_vertex_shape(nd, target);
        if (!sh) continue;
        auto runs = vertex_runs(nd, far);
        auto pos = locate(runs, Diagram::reverse(sh->in1));
        auto const& run = runs[pos.run];
        if (run.outward && (run.cyclic || pos.index != 1)) {
          b = std::move(next);
          fixed = true;
          break;
        }
      }
      if (fixed) break;
    }
    if (!fixed) return false;
  }
  return false;
}

}  // namespace

std::vector<Builder> close_as_five(Builder const& b, VertexIdx x) {
  std::vector<Builder> out;
  if (!b.on_frontier(x)) return out;
  std::function<void(Builder const&)> go = [&](Builder const& cur) {
    if (cur.rotation(x).size() >= 5) {
      DartIdx d = cur.frontier_in(x);
      for (int j : cur.fill_options(d)) {
        Builder next = cur;
        next.fill_corner(d, j);
        if (next.last_face_reduced()) out.push_back(std::move(next));
      }
      return;
    }
    DartIdx d = cur.frontier_in(x);
    for (int j : cur.attach_options(d)) {
      Builder next = cur;
      next.attach_face(d, j);
      if (next.last_face_reduced()) go(next);
    }
  };
  go(b);
  return out;
}

StarCentre star_centre(VertexStarSpec const& spec) {
  auto edges = star_edges(star_runs(spec), spec.n);
  VertexIdx centre = kNone;
  auto base = build_centre(edges, spec.n, centre);
  if (!base) throw std::invalid_argument("centre star cannot be built");
  return {std::move(*base), centre};
}

VertexStar vertex_star(VertexStarSpec const& spec) {
  auto sc = star_centre(spec);
  auto const* base = &sc.builder;
  VertexIdx const centre = sc.centre;
  auto built = base->build();
  std::vector<VertexIdx> ring;
  for (DartIdx x : built.rotation(centre)) ring.push_back(built.head(x));

  std::optional<VertexStar> best;
  std::vector<VertexIdx> completed;
  std::function<void(Builder const&, std::size_t)> search = [&](Builder const& b, std::size_t i) {
    if (i == ring.size()) {
      Builder cleared = b;
      bool wants_green = spec.type == VertexType::GG || spec.type == VertexType::FiveG;
      if (wants_green && !clear_blues(cleared, completed)) return;
      auto d = cleared.build();
      if (best && d.face_count() >= best->diagram.face_count()) return;
      if (!check_reduced(d).reduced) return;
      auto cd = color_diagram(d);
      if (!cd.uncolourable.empty() || !cd.conflicts.empty() || !check_color_lemmas(cd).ok()) return;
      auto c = classify_vertex(cd, centre);
      if (c.type != spec.type) return;
      best = VertexStar{std::move(d), centre, completed};
      return;
    }
    search(b, i + 1);
    for (auto const& next : close_as_five(b, ring[i])) {
      completed.push_back(ring[i]);
      search(next, i + 1);
      completed.pop_back();
    }
  };
  search(*base, 0);
  if (!best) throw std::invalid_argument(std::string("no star found for ") + to_string(spec.type));
  return std::move(*best);
}

}  // namespace vk
