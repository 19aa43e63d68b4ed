#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "vkcurve/diagram.hpp"

namespace vk {

class BuilderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Grows a disk diagram one relator face at a time. The boundary stays a
/// simple cycle (the frontier), stored as the outer walk. Dart numbering
/// matches the Diagram produced by build(): 2*e and 2*e + 1 for edge e.
class Builder {
 public:
  explicit Builder(int n);

  /// First face of an empty builder: a fresh triangle for generator j.
  Builder& attach_face(int j, bool positive = true);
  /// New face on the far side of frontier dart d, with a new third vertex.
  Builder& attach_face(DartIdx d, int j);
  /// New face across frontier darts d and its successor, adding one edge
  /// and making their shared vertex interior.
  Builder& fill_corner(DartIdx d, int j);

  /// Adds a face in the outer gap of v next to its last (after == true) or
  /// first rotation dart, such that the new edge at v has the requested
  /// direction and label. Returns the new vertex.
  VertexIdx extend(VertexIdx v, bool after, bool outward, int label);
  /// Closes the outer gap at v with one face if the labels allow it.
  void close(VertexIdx v);
  [[nodiscard]] bool can_close(VertexIdx v) const;

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] bool empty() const { return edges_.empty(); }
  [[nodiscard]] int face_count() const { return static_cast<int>(face_j_.size()); }
  [[nodiscard]] int vertex_count() const { return static_cast<int>(rotation_.size()); }
  [[nodiscard]] std::vector<DartIdx> const& frontier() const { return frontier_; }
  [[nodiscard]] std::vector<DartIdx> const& rotation(VertexIdx v) const { return rotation_[v]; }
  [[nodiscard]] bool on_frontier(VertexIdx v) const;
  /// Frontier dart arriving at / leaving v.
  [[nodiscard]] DartIdx frontier_in(VertexIdx v) const;
  [[nodiscard]] DartIdx frontier_out(VertexIdx v) const;
  [[nodiscard]] VertexIdx tail(DartIdx d) const;
  [[nodiscard]] VertexIdx head(DartIdx d) const { return tail(d ^ 1); }
  [[nodiscard]] int label(DartIdx d) const { return edges_[d >> 1].label; }
  /// Whether the last added face shares an edge with an identically labelled face.
  [[nodiscard]] bool last_face_reduced() const { return last_reduced_; }
  /// Generator index j of the face on the left of d, if any.
  [[nodiscard]] std::optional<int> face_j(DartIdx d) const;

  /// Which j values attach_face / fill_corner would accept at d.
  [[nodiscard]] std::vector<int> attach_options(DartIdx d) const;
  [[nodiscard]] std::vector<int> fill_options(DartIdx d) const;

  [[nodiscard]] Diagram build() const;

 private:
  struct Roles;
  [[nodiscard]] std::optional<Roles> roles_for(DartIdx d, int j) const;
  [[nodiscard]] int frontier_pos(DartIdx d) const;
  VertexIdx add_vertex();
  DartIdx add_edge(VertexIdx tail, VertexIdx head, int label);
  void insert_before(VertexIdx v, DartIdx anchor, DartIdx d);
  void insert_after(VertexIdx v, DartIdx anchor, DartIdx d);
  void record_face(std::vector<DartIdx> const& walk, int j);

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<DartIdx>> rotation_;
  std::vector<DartIdx> frontier_;
  std::vector<int> dart_face_;  // face index on the left of each dart, or kNone
  std::vector<int> face_j_;
  bool last_reduced_ = true;
};

/// Seeded random reduced disk diagram with exactly `faces` faces.
[[nodiscard]] Diagram random_diagram(std::uint64_t seed, int faces, int n);

}  // namespace vk
