#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vk {

using VertexIdx = int;
using EdgeIdx = int;
using DartIdx = int;
using FaceIdx = int;

inline constexpr int kNone = -1;

enum class Surface { disk, sphere };

/// Reduces an arbitrary integer to the generator range 1..n.
[[nodiscard]] constexpr int wrap_generator(long long value, int n) {
  long long r = (value - 1) % n;
  if (r < 0) r += n;
  return static_cast<int>(r) + 1;
}

/// Signed difference b - a modulo n, taken in (-n/2, n/2].
[[nodiscard]] constexpr int signed_step(int a, int b, int n) {
  int d = ((b - a) % n + n) % n;
  return d > n / 2 ? d - n : d;
}

enum class DiagramErrc {
  malformed,
  bad_n,
  dangling,
  rotation,
  non_triangle,
  not_relator,
  euler,
  disconnected,
  outer_face,
  low_degree,
  unsupported_surface,
};

[[nodiscard]] char const* to_string(DiagramErrc code);

class DiagramError : public std::runtime_error {
 public:
  DiagramError(DiagramErrc code, std::string const& what)
      : std::runtime_error(what), code_(code) {}
  [[nodiscard]] DiagramErrc code() const noexcept { return code_; }

 private:
  DiagramErrc code_;
};

/// An edge with its arrow tail -> head and generator label in 1..n.
struct Edge {
  std::int64_t id = 0;
  VertexIdx tail = kNone;
  VertexIdx head = kNone;
  int label = 0;
};

/// The relator triangle carried by an inner face. Vertex roles: darts
/// b->a carries x_{j-1}, a->c carries x_j and b->c carries x_{j+1}.
/// `positive` faces are traversed b, c, a; negative ones b, a, c.
struct Triangle {
  int j = 0;
  bool positive = true;
  VertexIdx b = kNone, a = kNone, c = kNone;
};

struct Face {
  std::vector<DartIdx> darts;  // boundary walk, each dart's head is the next one's tail
};

struct Letter {
  int generator = 0;
  bool inverse = false;
  friend bool operator==(Letter const&, Letter const&) = default;
};

using Word = std::vector<Letter>;

[[nodiscard]] std::string to_string(Word const& w);

/// Raw material for a diagram before validation. Darts are numbered
/// 2*e (tail -> head) and 2*e + 1 (head -> tail) for edge index e.
struct DiagramSpec {
  int n = 0;
  Surface surface = Surface::disk;
  std::vector<std::int64_t> vertex_ids;
  std::vector<Edge> edges;
  std::vector<std::vector<DartIdx>> rotation;  // anticlockwise, darts leaving each vertex
  std::optional<DartIdx> outer;                 // a dart on the outer walk (disks)
};

/// A van Kampen diagram of F(2,n) stored as a labelled combinatorial map.
///
/// The rotation sigma maps a dart leaving v to the next dart leaving v
/// anticlockwise. Face walks follow phi(d) = sigma(reverse(d)); the corner
/// between d and sigma(d) at tail(d) belongs to face_of(sigma(d)).
/// Instances are immutable once built.
class Diagram {
 public:
  /// Validates and derives faces. Throws DiagramError.
  static Diagram assemble(DiagramSpec spec);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] Surface surface() const { return surface_; }
  [[nodiscard]] bool is_disk() const { return surface_ == Surface::disk; }

  [[nodiscard]] int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  [[nodiscard]] int edge_count() const { return static_cast<int>(edges_.size()); }
  [[nodiscard]] int dart_count() const { return 2 * edge_count(); }
  /// Number of relator faces (the outer face of a disk is excluded).
  [[nodiscard]] int face_count() const { return static_cast<int>(triangles_.size()); }

  [[nodiscard]] std::int64_t vertex_id(VertexIdx v) const { return vertex_ids_[v]; }
  [[nodiscard]] std::span<std::int64_t const> vertex_ids() const { return vertex_ids_; }
  [[nodiscard]] Edge const& edge(EdgeIdx e) const { return edges_[e]; }
  [[nodiscard]] std::span<Edge const> edges() const { return edges_; }
  [[nodiscard]] std::optional<VertexIdx> find_vertex(std::int64_t id) const;

  static constexpr EdgeIdx edge_of(DartIdx d) { return d >> 1; }
  static constexpr DartIdx reverse(DartIdx d) { return d ^ 1; }
  static constexpr bool is_forward(DartIdx d) { return (d & 1) == 0; }
  [[nodiscard]] VertexIdx tail(DartIdx d) const {
    return is_forward(d) ? edges_[edge_of(d)].tail : edges_[edge_of(d)].head;
  }
  [[nodiscard]] VertexIdx head(DartIdx d) const { return tail(reverse(d)); }
  [[nodiscard]] int label(DartIdx d) const { return edges_[edge_of(d)].label; }
  /// True when the dart leaves its tail along the arrow (an outward edge there).
  [[nodiscard]] bool is_outward(DartIdx d) const { return is_forward(d); }

  [[nodiscard]] std::span<DartIdx const> rotation(VertexIdx v) const { return rotation_[v]; }
  [[nodiscard]] int degree(VertexIdx v) const { return static_cast<int>(rotation_[v].size()); }
  [[nodiscard]] DartIdx sigma(DartIdx d) const { return sigma_[d]; }
  [[nodiscard]] DartIdx sigma_inv(DartIdx d) const { return sigma_inv_[d]; }
  [[nodiscard]] DartIdx phi(DartIdx d) const { return sigma_[reverse(d)]; }
  /// Position of d inside rotation(tail(d)).
  [[nodiscard]] int rotation_index(DartIdx d) const { return rot_index_[d]; }

  /// Every face walk, including the outer one of a disk.
  [[nodiscard]] std::span<Face const> walks() const { return walks_; }
  [[nodiscard]] int walk_of(DartIdx d) const { return walk_of_[d]; }
  [[nodiscard]] std::optional<int> outer_walk() const { return outer_walk_; }
  [[nodiscard]] std::span<DartIdx const> outer_darts() const;

  /// Relator faces, indexed 0..face_count()-1.
  [[nodiscard]] Triangle const& triangle(FaceIdx f) const { return triangles_[f]; }
  [[nodiscard]] Face const& face(FaceIdx f) const { return walks_[face_walk_[f]]; }
  /// Relator face containing dart d in its walk, or kNone for the outer walk.
  [[nodiscard]] FaceIdx face_of(DartIdx d) const { return face_index_[walk_of_[d]]; }
  /// Face of the corner between d and sigma(d) at tail(d); kNone for the outer gap.
  [[nodiscard]] FaceIdx corner_face(DartIdx d) const { return face_of(sigma_[d]); }
  [[nodiscard]] bool is_gap(DartIdx d) const { return corner_face(d) == kNone; }

  [[nodiscard]] bool on_outer(DartIdx d) const { return face_of(d) == kNone; }
  [[nodiscard]] bool is_boundary_edge(EdgeIdx e) const;
  [[nodiscard]] bool is_boundary_vertex(VertexIdx v) const { return boundary_vertex_[v]; }
  [[nodiscard]] bool is_interior_vertex(VertexIdx v) const { return !boundary_vertex_[v]; }
  /// A face that has no boundary edge.
  [[nodiscard]] bool is_interior_face(FaceIdx f) const;
  /// Interior vertex of degree 5.
  [[nodiscard]] bool is_five_vertex(VertexIdx v) const {
    return !boundary_vertex_[v] && degree(v) == 5;
  }

  /// Dart leaving u towards v, if an edge joins them.
  [[nodiscard]] std::optional<DartIdx> dart_between(VertexIdx u, VertexIdx v) const;

  /// Back to raw form (rotation, ids and outer dart preserved).
  [[nodiscard]] DiagramSpec spec() const;

 private:
  Diagram() = default;
  void derive();
  void validate_faces();

  int n_ = 0;
  Surface surface_ = Surface::disk;
  std::vector<std::int64_t> vertex_ids_;
  std::vector<Edge> edges_;
  std::vector<std::vector<DartIdx>> rotation_;
  std::vector<DartIdx> sigma_, sigma_inv_;
  std::vector<int> rot_index_;
  std::vector<Face> walks_;
  std::vector<int> walk_of_;
  std::optional<int> outer_walk_;
  std::optional<DartIdx> outer_hint_;
  std::vector<FaceIdx> face_index_;  // walk -> relator face or kNone
  std::vector<int> face_walk_;       // relator face -> walk
  std::vector<Triangle> triangles_;
  std::vector<bool> boundary_vertex_;
};

/// Counts attached to a disk diagram.
struct DiagramStats {
  int faces = 0;     // F
  int edges = 0;     // E
  int vertices = 0;  // V
  int boundary_faces = 0;  // B
  int area = 0;
  int length = 0;
  int interior_corner_count = 0;
};

/// Throws DiagramError(unsupported_surface) on spheres.
[[nodiscard]] DiagramStats stats(Diagram const& d);

struct ReducedCheck {
  bool reduced = true;
  std::vector<EdgeIdx> witnesses;  // edges shared by a mirror pair of faces
};

[[nodiscard]] ReducedCheck check_reduced(Diagram const& d);

/// Boundary label read along the outer walk, starting at its lowest dart.
[[nodiscard]] Word boundary_word(Diagram const& d);

/// Identifies the relator triangle spelled by a three-dart walk.
[[nodiscard]] std::optional<Triangle> match_triangle(Diagram const& d,
                                                     std::span<DartIdx const> walk);

}  // namespace vk
