#pragma once

#include <vector>

#include "vkcurve/angles.hpp"
#include "vkcurve/builder.hpp"
#include "vkcurve/classify.hpp"

namespace vk {

struct VertexStarSpec {
  VertexType type = VertexType::FiveVertex;
  int n = 11;
  int variant = 0;  // Deg7 only: 0 gives 2+1-2-1, 1 gives 2-1-1-2+1+1
};

struct VertexStar {
  Diagram diagram;
  VertexIdx centre = kNone;
  std::vector<VertexIdx> completed;  // ring vertices closed into 5-vertices
};

/// Runs around the centre of a star, in rotation order.
[[nodiscard]] std::vector<RunShape> star_runs(VertexStarSpec const& spec);

struct StarCentre {
  Builder builder;
  VertexIdx centre = kNone;
};

/// The centre and its single ring of faces, nothing else.
[[nodiscard]] StarCentre star_centre(VertexStarSpec const& spec);

/// A disk whose centre has the requested type once coloured. The centre
/// is surrounded by one ring of faces; ring vertices are closed into
/// interior 5-vertices where the colours need them. Throws
/// std::invalid_argument for specs with no fixture.
[[nodiscard]] VertexStar vertex_star(VertexStarSpec const& spec);

/// Every way of closing frontier vertex x into an interior 5-vertex of a
/// reduced diagram.
[[nodiscard]] std::vector<Builder> close_as_five(Builder const& b, VertexIdx x);

}  // namespace vk
