#pragma once

#include <string>

#include "vkcurve/coloring.hpp"

namespace vk {

/// Graphviz digraph with one node per vertex and one arrow per edge,
/// labelled by generator and coloured when a colouring is given.
[[nodiscard]] std::string render_dot(Diagram const& d, ColoredDiagram const* cd = nullptr);

/// Straight-line drawing of a disk: boundary vertices on a circle in outer
/// walk order, interior vertices at the barycentre of their neighbours.
/// Throws DiagramError(unsupported_surface) for spheres.
[[nodiscard]] std::string render_svg(Diagram const& d, ColoredDiagram const* cd = nullptr);

}  // namespace vk
