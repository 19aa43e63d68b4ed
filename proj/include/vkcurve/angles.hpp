#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "vkcurve/diagram.hpp"

namespace vk {

class AngleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class AngleKind { outward_pair, inward_pair, transitional };

struct Angle {
  int value = 0;  // one of -2, -1, +1, +2
  AngleKind kind = AngleKind::transitional;
};

/// Signed label change from `first` to `second`, two darts leaving v that
/// are adjacent in the rotation and share a face corner (either order).
[[nodiscard]] Angle corner_angle(Diagram const& d, VertexIdx v, DartIdx first, DartIdx second);

/// A maximal block of consecutive same-direction edges at a vertex.
/// `darts` runs from the first edge to the last in the run's own
/// orientation; `with_rotation` says whether that order agrees with the
/// anticlockwise rotation. A run of one edge has no orientation.
struct Run {
  bool outward = false;
  std::vector<DartIdx> darts;
  bool with_rotation = true;
  bool cyclic = false;  // the whole rotation of an interior vertex
  bool uniform = true;  // every internal angle has the same sign

  [[nodiscard]] int size() const { return static_cast<int>(darts.size()); }
  [[nodiscard]] DartIdx first() const { return darts.front(); }
  [[nodiscard]] DartIdx last() const { return darts.back(); }
};

/// Runs at v in rotation order. Boundary vertices are cut open at every
/// outer-face gap, so a run never spans the outside of the diagram.
[[nodiscard]] std::vector<Run> vertex_runs(Diagram const& d, VertexIdx v);

/// Locates a dart inside the runs of its tail.
struct RunPosition {
  int run = kNone;
  int index = kNone;  // 0 = first edge of the run
};
[[nodiscard]] RunPosition locate(std::vector<Run> const& runs, DartIdx d);

struct AngleSumSolution {
  std::vector<int> terms;  // non-transitional angles in rotation order
  [[nodiscard]] int term_count() const { return static_cast<int>(terms.size()); }
};

/// Non-transitional angles around an interior vertex. Throws AngleError on
/// boundary vertices or when the sums are not 0 mod n.
[[nodiscard]] AngleSumSolution angle_sum_solution(Diagram const& d, VertexIdx v);

/// Representative of a cyclic term sequence up to rotation and reflection
/// (reading the other way round reverses and negates the terms): the
/// lexicographically greatest of all those sequences.
[[nodiscard]] std::vector<int> canonical_terms(std::vector<int> const& terms);

/// One run of an abstract vertex configuration.
struct RunShape {
  bool outward = false;
  int length = 0;
  int orientation = 1;  // +1 along the rotation, -1 against
  friend auto operator<=>(RunShape const&, RunShape const&) = default;
};

struct EnumeratedSolution {
  std::vector<RunShape> runs;  // rotation order; one cyclic run when components == 0
  std::vector<int> terms;      // canonical_terms of the solution
  int components = 0;          // outward run followed by inward run pairs
  int degree = 0;
  int inward = 0;
  int outward = 0;
};

struct OracleOptions {
  int n = 11;
  int max_degree = 0;      // 0 means 2n + 2
  int max_components = 2;
  int max_outward_run = 0;  // 0 means max(n, max_degree)
  int max_inward_run = 0;   // 0 means max(n, max_degree)
};

/// Brute force over every cyclic sequence of alternating outward/inward
/// runs (each of length >= 2, with an orientation), plus single cyclic runs,
/// whose non-transitional angles sum to 0 mod n. Duplicates up to rotation
/// and reflection are removed. Keyed by component count, with 0 standing
/// for a single cyclic run.
[[nodiscard]] std::map<int, std::vector<EnumeratedSolution>> enumerate_angle_solutions(
    OracleOptions const& opts);

/// Terms produced by a run configuration, in rotation order.
[[nodiscard]] std::vector<int> terms_of(std::vector<RunShape> const& runs);

}  // namespace vk
