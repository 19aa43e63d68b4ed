#pragma once

#include <string>

#include <json.hpp>

#include "vkcurve/angles.hpp"
#include "vkcurve/classify.hpp"
#include "vkcurve/coloring.hpp"
#include "vkcurve/curvature.hpp"
#include "vkcurve/sdn.hpp"

namespace vk {

using Json = nlohmann::ordered_json;

/// Exact "p/q" form, with q = 1 written out.
[[nodiscard]] std::string exact(Rational const& r);

/// Half-edge as it appears in the interchange document.
[[nodiscard]] Json dart_json(Diagram const& d, DartIdx x);

[[nodiscard]] Json stats_json(Diagram const& d);
/// The interchange document plus a "colors" key, edge id to colour name.
[[nodiscard]] Json colored_document(ColoredDiagram const& cd);
[[nodiscard]] Json color_report_json(ColoredDiagram const& cd, ColorReport const& rep);
[[nodiscard]] Json classification_json(ColoredDiagram const& cd, ClassifiedDiagram const& cls, LayerReport const& layers);
[[nodiscard]] Json match_json(Diagram const& k, SubdiagramMatch const& m);
[[nodiscard]] Json curvature_json(Diagram const& k, CurvatureReport const& r);
[[nodiscard]] Json certificate_json(IsoperimetricCertificate const& c);
[[nodiscard]] Json budget_case_json(BudgetCase const& c);
[[nodiscard]] Json budgets_json(BudgetReport const& r);

/// One text row per solution: components, degree, outward and inward
/// counts, the runs as +L/-L with orientation, then the canonical terms.
[[nodiscard]] std::string oracle_rows(std::map<int, std::vector<EnumeratedSolution>> const& sols);

/// Flattens a document into "path = value" lines.
[[nodiscard]] std::string to_text(Json const& j);

}  // namespace vk
