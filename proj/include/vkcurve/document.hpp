#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "vkcurve/diagram.hpp"

namespace vk {

/// Reads the JSON interchange document. Structural problems surface as
/// DiagramError(malformed); everything else as Diagram::assemble reports it.
/// A top-level "colors" key is tolerated and ignored here.
[[nodiscard]] Diagram parse_diagram(nlohmann::ordered_json const& doc);
[[nodiscard]] Diagram parse_diagram_text(std::string_view text);

/// Writes the interchange document. Disks carry an "outer" half-edge so the
/// outer face survives a round trip even when every walk is a triangle.
[[nodiscard]] nlohmann::ordered_json emit_diagram(Diagram const& d);
[[nodiscard]] std::string emit_diagram_text(Diagram const& d);

}  // namespace vk
