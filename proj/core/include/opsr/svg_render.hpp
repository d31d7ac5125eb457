#pragma once

#include <optional>
#include <string>

#include "opsr/recommend.hpp"

namespace opsr {

/// Renders the lot as SVG: spaces as stall rectangles (occupied filled,
/// vacant outlined), edges as road lines, and, when a recommendation is
/// given, the chosen space highlighted with its entrance and exit paths
/// drawn as polylines. Scale is 10 px/m, origin at the minimum coordinate.
std::string render_svg(const LotGraph& graph, const OccupancyState& state,
                       const std::optional<Recommendation>& rec,
                       const std::string& entrance, std::span<const std::string> exits);

}  // namespace opsr
