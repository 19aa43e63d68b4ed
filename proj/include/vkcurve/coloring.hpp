#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vkcurve/diagram.hpp"

namespace vk {

enum class EdgeColor { uncoloured, blue, green, yellow };

[[nodiscard]] char const* to_string(EdgeColor c);
[[nodiscard]] std::optional<EdgeColor> parse_color(std::string const& s);

/// The five edges at an interior 5-vertex V, in the vertex's own
/// orientation: three inward edges followed by two outward ones. The far
/// ends of in1, in2 and out2 are the vertices B, C and A.
struct FiveVertexShape {
  DartIdx in1 = kNone, in2 = kNone, in3 = kNone, out1 = kNone, out2 = kNone;
};

/// Shape of an interior degree-5 vertex, or nullopt if it is not three
/// inward edges followed by two outward edges with a common orientation.
[[nodiscard]] std::optional<FiveVertexShape> five_vertex_shape(Diagram const& d, VertexIdx v);

struct ColoredDiagram {
  Diagram base;
  std::vector<EdgeColor> colors;  // by edge index
  /// Interior 5-vertices none of the three rules applies to.
  std::vector<VertexIdx> uncolourable;
  /// Edges two rules tried to give different colours.
  std::vector<EdgeIdx> conflicts;

  [[nodiscard]] EdgeColor color(EdgeIdx e) const { return colors[e]; }
  [[nodiscard]] EdgeColor dart_color(DartIdx d) const { return colors[Diagram::edge_of(d)]; }
  [[nodiscard]] int count(EdgeColor c) const;
};

/// Applies the blue, green and yellow rules at every interior 5-vertex.
/// Throws std::invalid_argument if the diagram is not reduced.
[[nodiscard]] ColoredDiagram color_diagram(Diagram d);

struct ColorViolation {
  std::string clause;  // "definition", "one-coloured", "clause-a" ... "clause-f", "support"
  VertexIdx vertex = kNone;
  EdgeIdx edge = kNone;
  std::string detail;
};

struct ColorReport {
  std::vector<ColorViolation> violations;
  [[nodiscard]] bool ok() const { return violations.empty(); }
  [[nodiscard]] int count(std::string const& clause) const;
};

/// Re-derives the colouring and checks the structural consequences of the
/// colour rules: one coloured edge per 5-vertex, and clauses a-f at every
/// other vertex.
[[nodiscard]] ColorReport check_color_lemmas(ColoredDiagram const& cd);

}  // namespace vk
