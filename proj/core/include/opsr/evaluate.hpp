#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "opsr/recommend.hpp"

namespace opsr {

struct DurationModel {
    double walk_speed = 1.1;            // m/s
    double drive_speed = 25.0 / 18.0;   // 5 km/h, exact
    // maneuver seconds indexed by difficulty - 1
    std::array<double, 3> maneuver{105.0, 157.5, 210.0};
};

struct DurationBreakdown {
    double drive_s = 0.0;
    double maneuver_s = 0.0;
    double walk_s = 0.0;
    double total_s = 0.0;
};

enum class Method { OPSR, FixedI, FixedII, FixedIII, FixedIV };

const char* to_string(Method m);

/// Fixed weight vector for a baseline method; empty for OPSR (entropy mode).
std::optional<WeightVector> method_weights(Method m);

struct Scenario {
    char id = 'A';
    std::string description;
    OccupancyState occupancy;
};

struct ReportCell {
    char scenario;
    Method method;
    std::string space;
    DurationBreakdown duration;
};

struct ComparisonReport {
    std::vector<ReportCell> cells;  // canonical (scenario, method) order
    std::string summary;            // informational: is OPSR's total lowest?
};

/// Scores one vacant space: drive = X / drive_speed, maneuver by difficulty,
/// walk = L / walk_speed.
DurationBreakdown duration(const LotGraph& graph, const OccupancyState& state,
                           const std::string& space, const DurationModel& model,
                           const std::string& entrance, std::span<const std::string> exits);

/// Occupancy scenarios on the reference lot:
///   A - every space vacant
///   B - only interior column-3 spaces vacant, each flanked by two cars
///   C - only C3, C4, C5, D3, D5 vacant (equal driving distance)
///   D - only A3, A5, B3, B4, B5 vacant (equal walking distance)
Scenario build_scenario(const LotGraph& graph, char id);

/// Runs every (scenario, method) cell: recommend, then score the chosen
/// space with the duration model.
ComparisonReport run_comparison(const LotGraph& graph, const std::vector<Scenario>& scenarios,
                                const std::vector<Method>& methods, const DurationModel& model);

}  // namespace opsr
