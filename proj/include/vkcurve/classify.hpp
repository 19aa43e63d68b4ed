#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vkcurve/angles.hpp"
#include "vkcurve/coloring.hpp"

namespace vk {

struct RunProfile {
  bool outward = false;
  int length = 0;
  int orientation = 1;  // +1 along the rotation, -1 against
  int uncoloured = 0;
};

struct VertexProfile {
  VertexIdx vertex = kNone;
  int degree = 0;
  std::vector<RunProfile> runs;  // rotation order
  int uncoloured_count = 0;
  int coloured_count = 0;
  bool is_boundary = false;
  std::vector<int> terms;  // canonical angle-sum solution; empty on the boundary
};

[[nodiscard]] VertexProfile profile(ColoredDiagram const& cd, VertexIdx v);

enum class VertexType { Boundary, Deg7, GG, YB, YPlus, YMinus, FiveG, FiveVertex };

[[nodiscard]] char const* to_string(VertexType t);
[[nodiscard]] std::optional<VertexType> parse_vertex_type(std::string const& s);
[[nodiscard]] int layer_of(VertexType t);

/// The canonical angle-sum solution each deg-6 type must show.
[[nodiscard]] std::vector<int> type_terms(VertexType t, int n);

struct Classification {
  std::optional<VertexType> type;  // empty when no case fits
  VertexProfile profile;
  std::string problem;
};

[[nodiscard]] Classification classify_vertex(ColoredDiagram const& cd, VertexIdx v);

struct ClassifiedDiagram {
  std::vector<Classification> vertices;
  [[nodiscard]] bool total() const;
};

[[nodiscard]] ClassifiedDiagram classify_all(ColoredDiagram const& cd);

struct LayerViolation {
  VertexIdx vertex = kNone;
  int layer = 0;
  std::string detail;
};

struct LayerReport {
  std::vector<LayerViolation> violations;
  [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Every interior vertex above layer 1 must have a neighbour in a lower
/// layer. `layers` gives the layer of every vertex.
[[nodiscard]] LayerReport check_layer_connectivity(Diagram const& d, std::vector<int> const& layers);
[[nodiscard]] LayerReport check_layer_connectivity(ColoredDiagram const& cd);

/// A lower bound on the uncoloured edges of any vertex realizing an
/// oracle solution, from the colour lemmas alone.
[[nodiscard]] int min_uncoloured(EnumeratedSolution const& s, int n);

}  // namespace vk
