#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "vkcurve/coloring.hpp"
#include "vkcurve/diagram.hpp"

namespace vk {

/// Vertex numbering used by build_sdn: the poles, then the ring next to
/// the north pole, then the ring next to the south pole.
struct SdnLayout {
  int n = 0;
  [[nodiscard]] VertexIdx north() const { return 0; }
  [[nodiscard]] VertexIdx south() const { return 1; }
  [[nodiscard]] VertexIdx u(int k) const { return 2 + ((k % n) + n) % n; }
  [[nodiscard]] VertexIdx w(int k) const { return 2 + n + ((k % n) + n) % n; }
};

/// The spherical diagram with 4n faces: two degree-n poles whose outward
/// edges reach 2n vertices of degree 5. Throws DiagramError for bad n.
[[nodiscard]] Diagram build_sdn(int n);

/// The disk formed by a set of faces of d. Vertex and edge ids are kept.
/// Throws std::invalid_argument unless the faces form a disk.
[[nodiscard]] Diagram extract_subdiagram(Diagram const& d, std::vector<FaceIdx> const& faces);

/// Whether a set of faces is connected through edges and forms a disk
/// with a simple boundary cycle.
[[nodiscard]] bool is_disk_region(Diagram const& d, std::vector<FaceIdx> const& faces);

/// A set of faces of K isomorphic to a set of faces of SDn. Labels agree
/// after adding `shift` to every K label; arrows, face orientation and
/// adjacency are preserved. The face set always forms a disk.
struct SubdiagramMatch {
  int shift = 0;
  FaceIdx seed = kNone;
  std::vector<FaceIdx> faces;       // K faces, ascending
  std::vector<FaceIdx> image;       // SDn face of each entry of `faces`
  std::vector<VertexIdx> vertex_map;  // K vertex -> SDn vertex, or kNone
  [[nodiscard]] int face_count() const { return static_cast<int>(faces.size()); }
};

/// Maximal matches with at least min_faces faces, each grown from a seed
/// face pair. Matches covering the same K faces are reported once; matches
/// contained in a larger one are dropped. Sorted by size, then seed.
[[nodiscard]] std::vector<SubdiagramMatch> find_matches(Diagram const& k, Diagram const& sdn,
                                                        int min_faces, int threads = 1);

struct SphericalCheck {
  bool reduced = true;
  std::optional<SubdiagramMatch> witness;  // the largest match found
};

[[nodiscard]] SphericalCheck is_spherically_reduced(Diagram const& k, int threads = 1);

class ReplacementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Swaps the matched faces for the rest of SDn, glued in along the same
/// boundary. Throws ReplacementError if the match does not fit k.
[[nodiscard]] Diagram replace_complement(Diagram const& k, Diagram const& sdn, SubdiagramMatch const& m);

struct ReductionTrace {
  std::vector<int> face_counts;  // before each step, then the final count
};

/// Replaces matches of more than 2n faces until none is left.
[[nodiscard]] Diagram spherically_reduce(Diagram k, ReductionTrace* trace = nullptr, int threads = 1);

struct YellowBound {
  VertexIdx vertex = kNone;
  int run_start = 0;  // index into the run of the worst window
  int yellow = 0;
  int bound = 0;  // (n - 3) / 2
  bool ok = true;
  int certificate_lhs = 0;  // n - 1 + 1 + 2(k + 1)
  int certificate_rhs = 0;  // 2n
  bool certificate_ok = true;
};

/// Checks every window of n consecutive outward edges at v and reports
/// the one with most yellow edges. Throws std::invalid_argument if v has
/// no n consecutive outward edges.
[[nodiscard]] YellowBound check_yellow_bound(ColoredDiagram const& cd, VertexIdx v);

/// Vertices with at least n consecutive outward edges.
[[nodiscard]] std::vector<VertexIdx> long_outward_vertices(Diagram const& d);

}  // namespace vk
