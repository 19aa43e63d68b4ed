#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vkcurve/classify.hpp"
#include "vkcurve/coloring.hpp"
#include "vkcurve/rational.hpp"

namespace vk {

/// A vertex of the normalized diagram K*. Interior vertices keep their
/// whole rotation. Boundary vertices hold one stretch of darts between two
/// gaps of the outer face, listed in rotation order starting right after
/// the gap, so the first and last darts are boundary edges.
struct StarVertex {
  VertexIdx origin = kNone;
  std::vector<DartIdx> darts;
  bool boundary = false;
  [[nodiscard]] int degree() const { return static_cast<int>(darts.size()); }
};

/// K with face-free boundary trees removed and boundary vertices split so
/// that each one meets exactly two boundary edges. Darts, edges and faces
/// keep their K indices.
struct NormalizedDiagram {
  std::vector<StarVertex> vertices;
  std::vector<EdgeIdx> removed_edges;
  std::vector<VertexIdx> removed_vertices;
  std::vector<int> owner;  // dart -> index into vertices, or kNone if removed
  int edge_count = 0;      // E*
  [[nodiscard]] int vertex_count() const { return static_cast<int>(vertices.size()); }
};

/// Throws DiagramError(unsupported_surface) on spheres.
[[nodiscard]] NormalizedDiagram normalize(Diagram const& k);

enum class ComponentKind {
  big,
  small,
  boundary_first,
  boundary_last,
  boundary_middle,
  boundary_single,
  deg7_pair,
  whole_vertex,
};

[[nodiscard]] char const* to_string(ComponentKind k);

/// A stretch of consecutive darts at one vertex of K* that pays its own
/// grants. Each dart pays for the corner that follows it in the rotation.
struct Component {
  int owner = kNone;  // index into NormalizedDiagram::vertices
  ComponentKind kind = ComponentKind::whole_vertex;
  std::vector<DartIdx> darts;
  int uncoloured = 0;
  Rational share;  // slice of the -1 in d(v)/2 - 1
  std::string note;  // set when a merge had no compatible neighbour
  [[nodiscard]] int edge_count() const { return static_cast<int>(darts.size()); }
};

/// Degree above n with n consecutive darts of one direction.
[[nodiscard]] bool is_large(Diagram const& d, StarVertex const& v);

/// Shares of the -1 over the inward-then-outward pairs of a deg-7 vertex,
/// given each pair's uncoloured edge count. Empty when the vertex is paid
/// for as a whole.
[[nodiscard]] std::vector<Rational> deg7_shares(std::vector<int> const& uncoloured);

/// Splits the darts of vertex `index` of K* into components. Every dart
/// ends up in exactly one component and the shares sum to -1.
[[nodiscard]] std::vector<Component> decompose(NormalizedDiagram const& ks, ColoredDiagram const& cd, int index,
                                               VertexType type);

struct CornerTotal {
  DartIdx dart = kNone;  // the corner between dart and sigma(dart)
  VertexIdx vertex = kNone;
  FaceIdx face = kNone;
  Rational total;
};

struct VertexLedger {
  int index = kNone;  // into NormalizedDiagram::vertices
  VertexIdx origin = kNone;
  std::optional<VertexType> type;
  int layer = 0;
  Rational initial;
  Rational received;
  Rational granted;
  [[nodiscard]] Rational balance() const { return initial + received - granted; }
};

struct ComponentLedger {
  Component component;
  Rational available;
  Rational granted;
  [[nodiscard]] Rational surplus() const { return available - granted; }
};

struct Deficit {
  int index = kNone;
  VertexIdx origin = kNone;
  std::string what;
  DartIdx dart = kNone;  // the corner, when the deficit is at a corner
  Rational amount;       // how far below the requirement
};

struct CurvatureReport {
  int n = 0;
  Rational floor;      // 1/3 + 1/960n^4
  Rational curvature;  // E* - V*
  std::vector<CornerTotal> corners;  // every interior face corner
  std::vector<VertexLedger> vertices;
  std::vector<ComponentLedger> components;
  std::vector<Deficit> deficits;
  std::vector<std::string> problems;  // unclassified vertices and the like
  bool pass = false;

  [[nodiscard]] Rational corner_sum() const;
  /// Curvature left at the vertices once all grants are posted.
  [[nodiscard]] Rational residue() const;
  [[nodiscard]] bool conserved() const { return corner_sum() + residue() == curvature; }
};

/// Colours and classifies K, normalizes it, then posts grants layer by
/// layer. Throws std::invalid_argument if K is not reduced.
[[nodiscard]] CurvatureReport distribute(Diagram const& k);

struct IsoperimetricCertificate {
  int n = 0;
  Rational epsilon;  // 1/320n^4
  int faces = 0;
  int boundary_faces = 0;
  int area = 0;
  int length = 0;
  Rational corner_lhs;  // F - 1
  Rational corner_rhs;  // 3(F - B)(1/3 + epsilon/3)
  bool corner_holds = false;
  Rational bound;  // Length(1 + 1/epsilon) - 1/epsilon
  bool holds = false;
};

/// Throws std::invalid_argument when the report did not pass.
[[nodiscard]] IsoperimetricCertificate certificate(Diagram const& k, CurvatureReport const& report);

struct BudgetCase {
  std::string name;
  int n = 0;
  int k = 0;  // edge count parameter, 0 when the case has none
  int d = 0;  // component count, deg-7 only
  Rational surplus;      // the budget as written term by term
  Rational closed_form;  // the simplified right-hand side
  bool strict = true;    // > 0 required, otherwise >= 0
  bool identity = false;  // an exact balance rather than a surplus

  /// The term-by-term form equals the closed form and has the required sign.
  [[nodiscard]] bool holds() const;
  [[nodiscard]] bool tight() const { return !identity && surplus.sign() == 0; }
};

/// Every budget case for one odd n >= 11; empty otherwise.
[[nodiscard]] std::vector<BudgetCase> budget_cases(int n);

struct BudgetReport {
  int n_min = 0, n_max = 0;
  long checked = 0;
  std::vector<BudgetCase> failures;
  std::vector<BudgetCase> equalities;
  [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Evaluates every per-component budget for odd n in [n_min, n_max] over
/// its whole parameter range, plus the 5-vertex identity.
[[nodiscard]] BudgetReport verify_budgets(int n_min, int n_max);

}  // namespace vk
