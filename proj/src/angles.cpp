#include "vkcurve/angles.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

namespace vk {

Angle corner_angle(Diagram const& d, VertexIdx v, DartIdx first, DartIdx second) {
  if (d.tail(first) != v || d.tail(second) != v) throw AngleError("darts do not leave the vertex");
  DartIdx lead;
  if (d.sigma(first) == second && (d.sigma(second) != first || !d.is_gap(first))) {
    lead = first;
  } else if (d.sigma(second) == first) {
    lead = second;
  } else {
    throw AngleError("darts are not consecutive in the rotation");
  }
  if (d.is_gap(lead)) throw AngleError("darts do not share a face corner");
  Angle a;
  a.value = signed_step(d.label(first), d.label(second), d.n());
  bool out1 = d.is_outward(first), out2 = d.is_outward(second);
  a.kind = out1 && out2   ? AngleKind::outward_pair
           : !out1 && !out2 ? AngleKind::inward_pair
                            : AngleKind::transitional;
  int mag = a.value < 0 ? -a.value : a.value;
  if ((a.kind == AngleKind::outward_pair && mag != 2) || (a.kind != AngleKind::outward_pair && mag != 1)) {
    throw AngleError("label change " + std::to_string(a.value) + " is not a legal angle");
  }
  return a;
}

namespace {

// Along-rotation orientation of one step inside a run: +1, -1, or 0 if illegal.
int step_orientation(Diagram const& d, DartIdx a, DartIdx b, bool outward) {
  int s = signed_step(d.label(a), d.label(b), d.n());
  if (outward) return s == 2 ? 1 : (s == -2 ? -1 : 0);
  return s == -1 ? 1 : (s == 1 ? -1 : 0);
}

Run make_run(Diagram const& d, std::vector<DartIdx> darts, bool outward, bool cyclic) {
  Run r;
  r.outward = outward;
  r.cyclic = cyclic;
  int steps = static_cast<int>(darts.size()) - (cyclic ? 0 : 1);
  int orient = 0;
  for (int k = 0; k < steps; ++k) {
    int o = step_orientation(d, darts[k], darts[(k + 1) % darts.size()], outward);
    if (k == 0) orient = o;
    if (o == 0 || o != orient) r.uniform = false;
  }
  r.with_rotation = orient >= 0;
  if (!r.with_rotation) std::ranges::reverse(darts);
  r.darts = std::move(darts);
  return r;
}

void split_segment(Diagram const& d, std::vector<DartIdx> const& seg, std::vector<Run>& out) {
  std::size_t i = 0;
  while (i < seg.size()) {
    bool dir = d.is_outward(seg[i]);
    std::size_t j = i;
    while (j + 1 < seg.size() && d.is_outward(seg[j + 1]) == dir) ++j;
    out.push_back(make_run(d, {seg.begin() + static_cast<long>(i), seg.begin() + static_cast<long>(j) + 1},
                           dir, false));
    i = j + 1;
  }
}

}  // namespace

std::vector<Run> vertex_runs(Diagram const& d, VertexIdx v) {
  auto rot = d.rotation(v);
  int const k = static_cast<int>(rot.size());
  std::vector<Run> runs;
  std::vector<int> gaps;
  for (int i = 0; i < k; ++i) {
    if (d.is_gap(rot[i])) gaps.push_back(i);
  }
  if (gaps.empty()) {
    int change = kNone;
    for (int i = 0; i < k; ++i) {
      if (d.is_outward(rot[i]) != d.is_outward(rot[(i + k - 1) % k])) {
        change = i;
        break;
      }
    }
    if (change == kNone) {
      runs.push_back(make_run(d, {rot.begin(), rot.end()}, d.is_outward(rot[0]), true));
      return runs;
    }
    std::vector<DartIdx> seg;
    for (int i = 0; i < k; ++i) seg.push_back(rot[(change + i) % k]);
    split_segment(d, seg, runs);
    return runs;
  }
  for (std::size_t g = 0; g < gaps.size(); ++g) {
    int start = (gaps[g] + 1) % k;
    int stop = gaps[(g + 1) % gaps.size()];  // inclusive
    std::vector<DartIdx> seg;
    for (int i = start;; i = (i + 1) % k) {
      seg.push_back(rot[i]);
      if (i == stop) break;
    }
    split_segment(d, seg, runs);
  }
  return runs;
}

RunPosition locate(std::vector<Run> const& runs, DartIdx x) {
  for (std::size_t r = 0; r < runs.size(); ++r) {
    auto it = std::ranges::find(runs[r].darts, x);
    if (it != runs[r].darts.end()) {
      return RunPosition{static_cast<int>(r), static_cast<int>(it - runs[r].darts.begin())};
    }
  }
  return {};
}

AngleSumSolution angle_sum_solution(Diagram const& d, VertexIdx v) {
  if (!d.is_interior_vertex(v)) throw AngleError("angle sums are taken at interior vertices");
  auto rot = d.rotation(v);
  int const k = static_cast<int>(rot.size());
  AngleSumSolution s;
  long total = 0, kept = 0;
  for (int i = 0; i < k; ++i) {
    Angle a = corner_angle(d, v, rot[i], rot[(i + 1) % k]);
    total += a.value;
    if (a.kind != AngleKind::transitional) {
      s.terms.push_back(a.value);
      kept += a.value;
    }
  }
  if (total % d.n() != 0 || kept % d.n() != 0) {
    throw AngleError("angle sum at vertex " + std::to_string(d.vertex_id(v)) + " is not 0 mod n");
  }
  return s;
}

std::vector<int> canonical_terms(std::vector<int> const& terms) {
  std::vector<int> best = terms;
  std::vector<int> mirrored(terms.rbegin(), terms.rend());
  for (int& t : mirrored) t = -t;
  for (auto const* base : std::array<std::vector<int> const*, 2>{&terms, &mirrored}) {
    std::vector<int> cur = *base;
    for (std::size_t r = 0; r < cur.size(); ++r) {
      best = std::max(best, cur);
      std::ranges::rotate(cur, cur.begin() + 1);
    }
  }
  return best;
}

std::vector<int> terms_of(std::vector<RunShape> const& runs) {
  std::vector<int> terms;
  bool single = runs.size() == 1;
  for (auto const& r : runs) {
    int count = single ? r.length : r.length - 1;
    int value = r.outward ? 2 * r.orientation : -r.orientation;
    terms.insert(terms.end(), static_cast<std::size_t>(count), value);
  }
  return terms;
}

namespace {

bool has_cancelling_pair(std::vector<int> const& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] + t[(i + 1) % t.size()] == 0) return true;
  }
  return false;
}

struct Enumerator {
  OracleOptions opts;
  int max_out;
  int max_in;
  std::map<std::vector<int>, EnumeratedSolution> found;
  std::vector<RunShape> runs;

  void record(int components) {
    auto terms = terms_of(runs);
    long sum = 0;
    for (int t : terms) sum += t;
    if (sum % opts.n != 0 || terms.empty() || has_cancelling_pair(terms)) return;
    auto key = canonical_terms(terms);
    if (found.contains(key)) return;
    EnumeratedSolution s;
    s.runs = runs;
    s.terms = key;
    s.components = components;
    for (auto const& r : runs) {
      s.degree += r.length;
      (r.outward ? s.outward : s.inward) += r.length;
    }
    found.emplace(std::move(key), std::move(s));
  }

  void grow(int components, int remaining_degree) {
    if (static_cast<int>(runs.size()) == 2 * components) {
      record(components);
      return;
    }
    int left_runs = 2 * components - static_cast<int>(runs.size());
    bool outward = runs.size() % 2 == 0;
    int max_run = outward ? max_out : max_in;
    for (int len = 2; len <= max_run && len + 2 * (left_runs - 1) <= remaining_degree; ++len) {
      for (int orient : {1, -1}) {
        runs.push_back({outward, len, orient});
        grow(components, remaining_degree - len);
        runs.pop_back();
      }
    }
  }
};

}  // namespace

std::map<int, std::vector<EnumeratedSolution>> enumerate_angle_solutions(OracleOptions const& opts) {
  OracleOptions o = opts;
  if (o.max_degree <= 0) o.max_degree = 2 * o.n + 2;
  int run_cap = std::max(o.n, o.max_degree);
  Enumerator e{o, o.max_outward_run > 0 ? o.max_outward_run : run_cap,
               o.max_inward_run > 0 ? o.max_inward_run : run_cap, {}, {}};
  for (bool outward : {true, false}) {
    for (int len = 1; len <= o.max_degree; ++len) {
      e.runs = {{outward, len, 1}};
      e.record(0);
    }
  }
  e.runs.clear();
  for (int c = 1; c <= o.max_components && 4 * c <= o.max_degree; ++c) e.grow(c, o.max_degree);
  std::map<int, std::vector<EnumeratedSolution>> out;
  for (auto& [_, s] : e.found) out[s.components].push_back(std::move(s));
  return out;
}

}  // namespace vk
