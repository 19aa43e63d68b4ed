#include "vkcurve/canonical.hpp"

namespace vk {

namespace {

std::vector<int> code_from(Diagram const& d, DartIdx start) {
  int const nd = d.dart_count();
  std::vector<int> num(nd, -1);
  std::vector<DartIdx> order;
  order.reserve(nd);
  num[start] = 0;
  order.push_back(start);
  std::vector<int> code;
  code.reserve(static_cast<std::size_t>(nd) * 5 + 3);
  code.push_back(d.n());
  code.push_back(d.is_disk() ? 0 : 1);
  code.push_back(nd);
  auto visit = [&](DartIdx x) {
    if (num[x] < 0) {
      num[x] = static_cast<int>(order.size());
      order.push_back(x);
    }
    return num[x];
  };
  for (std::size_t k = 0; k < order.size(); ++k) {
    DartIdx x = order[k];
    code.push_back(visit(d.sigma(x)));
    code.push_back(visit(Diagram::reverse(x)));
    code.push_back(d.label(x));
    code.push_back(Diagram::is_forward(x) ? 1 : 0);
    code.push_back(d.on_outer(x) ? 1 : 0);
  }
  return code;
}

}  // namespace

std::vector<int> canonical_code(Diagram const& d) {
  std::vector<DartIdx> starts;
  if (d.is_disk()) {
    auto outer = d.outer_darts();
    starts.assign(outer.begin(), outer.end());
  } else {
    for (DartIdx x = 0; x < d.dart_count(); ++x) starts.push_back(x);
  }
  std::vector<int> best;
  for (DartIdx s : starts) {
    auto c = code_from(d, s);
    if (best.empty() || c < best) best = std::move(c);
  }
  return best;
}

bool isomorphic(Diagram const& a, Diagram const& b) {
  if (a.n() != b.n() || a.surface() != b.surface() || a.dart_count() != b.dart_count() ||
      a.vertex_count() != b.vertex_count()) {
    return false;
  }
  return canonical_code(a) == canonical_code(b);
}

}  // namespace vk
