#pragma once

#include <vector>

#include "vkcurve/diagram.hpp"

namespace vk {

/// Id-free code of a diagram: the lexicographically least traversal code
/// over all orientation-preserving start darts (outer darts only, for disks).
/// Two diagrams are isomorphic as labelled maps iff their codes are equal.
[[nodiscard]] std::vector<int> canonical_code(Diagram const& d);

[[nodiscard]] bool isomorphic(Diagram const& a, Diagram const& b);

}  // namespace vk
