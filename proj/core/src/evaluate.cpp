#include "opsr/evaluate.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <set>

#include "opsr/pathfind.hpp"

namespace opsr {
namespace {

Scenario vacancy_scenario(const LotGraph& graph, char id, std::string description,
                          const std::vector<std::string>& vacant) {
    for (const auto& space : vacant) {
        if (!graph.has_node(space) || graph.node(space).kind != NodeKind::Space)
            throw LotError(std::string("scenario ") + id + " names missing space '" + space +
                           "'");
    }
    Scenario s{id, std::move(description), graph.all_vacant()};
    const std::set<std::string> keep(vacant.begin(), vacant.end());
    for (auto& [space, occ] : s.occupancy.occupied) occ = !keep.contains(space);
    return s;
}

}  // namespace

const char* to_string(Method m) {
    switch (m) {
        case Method::OPSR: return "OPSR";
        case Method::FixedI: return "I";
        case Method::FixedII: return "II";
        case Method::FixedIII: return "III";
        case Method::FixedIV: return "IV";
    }
    return "?";
}

std::optional<WeightVector> method_weights(Method m) {
    switch (m) {
        case Method::OPSR: return std::nullopt;
        case Method::FixedI: return WeightVector{1.0, 1.0, 1.0};
        case Method::FixedII: return WeightVector{10.0, 1.0, 1.0};
        case Method::FixedIII: return WeightVector{1.0, 10.0, 1.0};
        case Method::FixedIV: return WeightVector{1.0, 1.0, 10.0};
    }
    throw LotError("unknown method");
}

DurationBreakdown duration(const LotGraph& graph, const OccupancyState& state,
                           const std::string& space, const DurationModel& model,
                           const std::string& entrance, std::span<const std::string> exits) {
    if (state.is_occupied(space)) throw LotError("space '" + space + "' is occupied");
    const RawFactors raw = raw_factors(graph, state, space, entrance, exits);
    DurationBreakdown d;
    d.drive_s = raw.x / model.drive_speed;
    d.maneuver_s = model.maneuver.at(static_cast<std::size_t>(raw.s - 1));
    d.walk_s = raw.l / model.walk_speed;
    d.total_s = d.drive_s + d.maneuver_s + d.walk_s;
    return d;
}

Scenario build_scenario(const LotGraph& graph, char id) {
    switch (id) {
        case 'A':
            return Scenario{'A', "vacant lot", graph.all_vacant()};
        case 'B':
            // Interior stalls only, so every candidate really has a car on
            // both sides.
            return vacancy_scenario(graph, 'B', "every candidate flanked by two cars",
                                    {"A3", "B3", "C3", "D3"});
        case 'C':
            return vacancy_scenario(graph, 'C', "equal driving distance",
                                    {"C3", "C4", "C5", "D3", "D5"});
        case 'D':
            return vacancy_scenario(graph, 'D', "equal walking distance",
                                    {"A3", "A5", "B3", "B4", "B5"});
        default:
            throw LotError(std::string("unknown scenario '") + id + "'");
    }
}

ComparisonReport run_comparison(const LotGraph& graph, const std::vector<Scenario>& scenarios,
                                const std::vector<Method>& methods,
                                const DurationModel& model) {
    const std::string entrance = graph.entrances().front();
    const std::span<const std::string> exits(graph.exits());

    ComparisonReport report;
    int opsr_lowest = 0;
    int scenario_count = 0;
    for (const Scenario& scenario : scenarios) {
        double opsr_total = 0.0;
        double best_other = std::numeric_limits<double>::infinity();
        bool has_opsr = false;
        for (Method method : methods) {
            const Recommendation rec = recommend(graph, scenario.occupancy, entrance, exits,
                                                 method_weights(method));
            const DurationBreakdown d =
                duration(graph, scenario.occupancy, rec.space, model, entrance, exits);
            report.cells.push_back({scenario.id, method, rec.space, d});
            if (method == Method::OPSR) {
                opsr_total = d.total_s;
                has_opsr = true;
            } else {
                best_other = std::min(best_other, d.total_s);
            }
        }
        if (has_opsr) {
            ++scenario_count;
            if (opsr_total <= best_other + 1e-9) ++opsr_lowest;
        }
    }
    if (scenario_count > 0) {
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "informational: OPSR total lowest in %d of %d scenarios", opsr_lowest,
                      scenario_count);
        report.summary = buf;
    }
    return report;
}

}  // namespace opsr
