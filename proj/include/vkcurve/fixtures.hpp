#pragma once

#include <string>
#include <vector>

#include "vkcurve/diagram.hpp"

namespace vk {

/// The two face sets a simple vertex cycle of d cuts the surface into, the
/// larger first. Throws std::invalid_argument if the cycle is not a closed
/// path of edges or does not separate.
[[nodiscard]] std::pair<std::vector<FaceIdx>, std::vector<FaceIdx>> split_by_cycle(
    Diagram const& d, std::vector<VertexIdx> const& cycle);

/// The 25-face region of SD11 cut off by a 13-edge cycle. It matches SD11
/// in more than 22 faces and carries 6 yellow edges.
[[nodiscard]] Diagram region25_fixture();
/// region25_fixture with its region swapped for the other 19 faces of SD11.
[[nodiscard]] Diagram region19_fixture();

/// SDn with one face removed: the poles become interior with a full ring of
/// outward edges, and the whole disk lies inside SDn.
[[nodiscard]] Diagram sdn_minus_face(int n);
/// The 2n faces around the north pole of SDn.
[[nodiscard]] Diagram sdn_north_cap(int n);
/// The band between the two rings of SDn with the two faces on edge
/// w0 u1 removed, so that the 2n - 2 remaining faces form a disk.
[[nodiscard]] Diagram sdn_band(int n);

[[nodiscard]] Diagram single_face(int n);

/// Names accepted by make_fixture.
[[nodiscard]] std::vector<std::string> fixture_names();

/// Builds a named fixture for generator count n. Throws
/// std::invalid_argument for unknown names or unsupported n.
[[nodiscard]] Diagram make_fixture(std::string const& name, int n);

struct NamedFixture {
  std::string name;
  int n = 0;
  Diagram diagram;
};

/// Every disk fixture for each n in `ns` that supports it, plus the two
/// n = 11 region fixtures.
[[nodiscard]] std::vector<NamedFixture> fixture_suite(std::vector<int> const& ns);

}  // namespace vk
