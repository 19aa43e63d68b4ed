#include "vkcurve/coloring.hpp"

#include <algorithm>
#include <stdexcept>

#include "vkcurve/angles.hpp"

namespace vk {

char const* to_string(EdgeColor c) {
  switch (c) {
    case EdgeColor::uncoloured: return "uncoloured";
    case EdgeColor::blue: return "blue";
    case EdgeColor::green: return "green";
    case EdgeColor::yellow: return "yellow";
  }
  return "?";
}

std::optional<EdgeColor> parse_color(std::string const& s) {
  for (auto c : {EdgeColor::uncoloured, EdgeColor::blue, EdgeColor::green, EdgeColor::yellow}) {
    if (s == to_string(c)) return c;
  }
  return std::nullopt;
}

int ColoredDiagram::count(EdgeColor c) const {
  return static_cast<int>(std::ranges::count(colors, c));
}

int ColorReport::count(std::string const& clause) const {
  return static_cast<int>(std::ranges::count_if(violations, [&](auto const& v) { return v.clause == clause; }));
}

std::optional<FiveVertexShape> five_vertex_shape(Diagram const& d, VertexIdx v) {
  if (!d.is_five_vertex(v)) return std::nullopt;
  auto runs = vertex_runs(d, v);
  if (runs.size() != 2) return std::nullopt;
  Run const* in = runs[0].outward ? &runs[1] : &runs[0];
  Run const* out = runs[0].outward ? &runs[0] : &runs[1];
  if (in->outward || !out->outward || in->size() != 3 || out->size() != 2) return std::nullopt;
  if (!in->uniform || !out->uniform || in->with_rotation != out->with_rotation) return std::nullopt;
  return FiveVertexShape{in->darts[0], in->darts[1], in->darts[2], out->darts[0], out->darts[1]};
}

namespace {

bool middle_of_five(Run const& r, int index) {
  if (!r.outward) return false;
  if (r.cyclic) return r.size() >= 5;
  return index >= 2 && index <= r.size() - 3;
}

}  // namespace

ColoredDiagram color_diagram(Diagram d) {
  if (!check_reduced(d).reduced) throw std::invalid_argument("colouring needs a reduced diagram");
  ColoredDiagram cd{std::move(d), {}, {}, {}};
  Diagram const& g = cd.base;
  cd.colors.assign(g.edge_count(), EdgeColor::uncoloured);
  std::vector<std::vector<Run>> runs(g.vertex_count());
  std::vector<bool> have(g.vertex_count(), false);
  auto runs_at = [&](VertexIdx v) -> std::vector<Run> const& {
    if (!have[v]) {
      runs[v] = vertex_runs(g, v);
      have[v] = true;
    }
    return runs[v];
  };
  auto assign = [&](DartIdx x, EdgeColor c) {
    EdgeIdx e = Diagram::edge_of(x);
    if (cd.colors[e] != EdgeColor::uncoloured && cd.colors[e] != c) {
      cd.conflicts.push_back(e);
      return;
    }
    cd.colors[e] = c;
  };

  for (VertexIdx v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_five_vertex(v)) continue;
    auto shape = five_vertex_shape(g, v);
    if (!shape) {
      cd.uncolourable.push_back(v);
      continue;
    }
    DartIdx b_to_v = Diagram::reverse(shape->in1);
    auto const& rb = runs_at(g.tail(b_to_v));
    auto pos = locate(rb, b_to_v);
    Run const& run = rb[pos.run];
    VertexIdx a = g.head(shape->out2);
    if (run.outward && !run.cyclic && pos.index == 1) {
      assign(shape->in2, EdgeColor::blue);
    } else if (!g.is_five_vertex(a)) {
      assign(shape->out2, EdgeColor::green);
    } else if (middle_of_five(run, pos.index)) {
      assign(shape->in1, EdgeColor::yellow);
    } else {
      cd.uncolourable.push_back(v);
    }
  }
  return cd;
}

ColorReport check_color_lemmas(ColoredDiagram const& cd) {
  Diagram const& g = cd.base;
  ColorReport rep;
  auto flag = [&](char const* clause, VertexIdx v, EdgeIdx e, std::string detail) {
    rep.violations.push_back({clause, v, e, std::move(detail)});
  };
  auto col = [&](DartIdx x) { return cd.colors[Diagram::edge_of(x)]; };

  auto fresh = color_diagram(g);
  for (EdgeIdx e = 0; e < g.edge_count(); ++e) {
    if (fresh.colors[e] != cd.colors[e]) {
      flag("definition", kNone, e,
           std::string("coloured ") + to_string(cd.colors[e]) + ", rules give " + to_string(fresh.colors[e]));
    }
    if (cd.colors[e] != EdgeColor::uncoloured && !g.is_five_vertex(g.edge(e).tail) &&
        !g.is_five_vertex(g.edge(e).head)) {
      flag("support", kNone, e, "coloured edge without an interior 5-vertex end");
    }
  }
  for (VertexIdx v : fresh.uncolourable) flag("one-coloured", v, kNone, "no colour rule applies");
  for (EdgeIdx e : fresh.conflicts) flag("one-coloured", kNone, e, "two colour rules disagree");

  for (VertexIdx v = 0; v < g.vertex_count(); ++v) {
    if (g.is_five_vertex(v)) {
      int coloured = 0;
      for (DartIdx x : g.rotation(v)) {
        if (col(x) == EdgeColor::uncoloured) continue;
        ++coloured;
        if (g.is_five_vertex(g.head(x))) flag("one-coloured", v, Diagram::edge_of(x), "coloured edge joins two 5-vertices");
      }
      if (coloured != 1) flag("one-coloured", v, kNone, std::to_string(coloured) + " coloured edges");
      continue;
    }
    auto runs = vertex_runs(g, v);
    for (auto const& r : runs) {
      int const k = r.size();
      auto at = [&](int i) { return r.darts[static_cast<std::size_t>(((i % k) + k) % k)]; };
      if (r.outward) {
        if (!r.cyclic && col(r.first()) != EdgeColor::uncoloured) {
          flag("clause-a", v, Diagram::edge_of(r.first()), "first outward edge coloured");
        }
        int uncoloured = 0;
        std::vector<int> blues, yellows;
        for (int i = 0; i < k; ++i) {
          auto c = col(at(i));
          if (c == EdgeColor::uncoloured) ++uncoloured;
          if (c == EdgeColor::blue) blues.push_back(i);
          if (c == EdgeColor::yellow) yellows.push_back(i);
        }
        if (k >= 5 && uncoloured < 4) {
          flag("clause-e", v, kNone, "outward run of " + std::to_string(k) + " has " + std::to_string(uncoloured) +
                                        " uncoloured edges");
        }
        if (!r.cyclic) {
          for (int b : blues) {
            for (int y : yellows) {
              int between = 0;
              for (int i = std::min(b, y) + 1; i < std::max(b, y); ++i) {
                between += col(at(i)) == EdgeColor::uncoloured;
              }
              if (between < 2) flag("clause-d", v, Diagram::edge_of(at(b)), "blue and yellow too close");
            }
          }
        }
        for (int y : yellows) {
          if (!r.cyclic && y == k - 1) {
            flag("clause-f", v, Diagram::edge_of(at(y)), "yellow edge ends its run");
            continue;
          }
          DartIdx next = at(y + 1);
          if (col(next) != EdgeColor::yellow && !g.is_five_vertex(g.head(next))) {
            flag("clause-f", v, Diagram::edge_of(next), "edge after a yellow edge misses a 5-vertex");
          }
        }
      } else {
        if (!r.cyclic) {
          if (col(r.first()) != EdgeColor::uncoloured) flag("clause-a", v, Diagram::edge_of(r.first()), "first inward edge coloured");
          if (col(r.last()) != EdgeColor::uncoloured) flag("clause-a", v, Diagram::edge_of(r.last()), "last inward edge coloured");
        }
        int pairs = r.cyclic ? k : k - 1;
        for (int i = 0; i < pairs; ++i) {
          if (col(at(i)) == EdgeColor::green && col(at(i + 1)) == EdgeColor::green) {
            flag("clause-b", v, Diagram::edge_of(at(i)), "consecutive green inward edges");
          }
        }
      }
    }
    for (DartIdx x : g.rotation(v)) {
      if (col(x) != EdgeColor::blue) continue;
      auto pos = locate(runs, x);
      Run const& r = runs[pos.run];
      if (!r.outward || r.cyclic || pos.index != r.size() - 1) {
        flag("clause-c", v, Diagram::edge_of(x), "blue edge is not the last outward edge");
        continue;
      }
      DartIdx lead = r.with_rotation ? x : g.sigma_inv(x);
      DartIdx next = r.with_rotation ? g.sigma(x) : g.sigma_inv(x);
      if (g.is_gap(lead) || g.is_outward(next)) {
        flag("clause-c", v, Diagram::edge_of(x), "blue edge not followed by an inward edge");
        continue;
      }
      auto npos = locate(runs, next);
      if (npos.index != runs[npos.run].size() - 1) {
        flag("clause-c", v, Diagram::edge_of(x), "edge after blue is not the last inward edge");
      }
    }
  }
  return rep;
}

}  // namespace vk
