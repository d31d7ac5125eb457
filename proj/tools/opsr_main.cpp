#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "opsr/evaluate.hpp"
#include "opsr/svg_render.hpp"

namespace {

using opsr::LotGraph;
using opsr::OccupancyState;
using ojson = nlohmann::ordered_json;

constexpr int kExitInvalid = 1;
constexpr int kExitLotFull = 2;

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

// Structured output carries numbers rounded to 6 decimals so the encoding
// is byte-stable.
double r6(double v) { return std::round(v * 1e6) / 1e6; }

OccupancyState resolve_state(const LotGraph& graph, const std::optional<std::string>& occupied_flag) {
    if (!occupied_flag.has_value()) return graph.initial_state();
    OccupancyState state = graph.all_vacant();
    for (const auto& id : split_csv(*occupied_flag))
        state = opsr::set_occupancy(graph, std::move(state), id, true);
    return state;
}

std::optional<opsr::WeightVector> parse_weights(const std::string& spec) {
    if (spec == "entropy") return std::nullopt;
    const auto parts = split_csv(spec);
    if (parts.size() != 3) throw opsr::LotError("--weights expects 'entropy' or w1,w2,w3");
    opsr::WeightVector w{std::stod(parts[0]), std::stod(parts[1]), std::stod(parts[2])};
    if (w.w1 < 0 || w.w2 < 0 || w.w3 < 0 || !(w.w1 > 0 || w.w2 > 0 || w.w3 > 0))
        throw opsr::LotError("fixed weights must be nonnegative and not all zero");
    return w;
}

int cmd_validate(const std::string& lot_path) {
    try {
        const LotGraph graph = LotGraph::load_file(lot_path);
        std::cout << "valid lot: " << graph.nodes().size() << " nodes, "
                  << graph.edges().size() << " edges, " << graph.spaces().size()
                  << " spaces, " << graph.entrances().size() << " entrances, "
                  << graph.exits().size() << " exits\n"
                  << "connected driving network, all edge lengths admissible\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "invalid lot: " << e.what() << '\n';
        return kExitInvalid;
    }
}

int cmd_recommend(const std::string& lot_path, const std::optional<std::string>& occupied,
                  const std::string& weights_spec, const std::string& format) {
    const LotGraph graph = LotGraph::load_file(lot_path);
    const OccupancyState state = resolve_state(graph, occupied);
    const auto weights = parse_weights(weights_spec);
    const opsr::Recommendation rec =
        opsr::recommend(graph, state, graph.entrances().front(), graph.exits(), weights);

    if (format == "structured") {
        ojson doc;
        doc["space"] = rec.space;
        doc["h"] = r6(rec.h_value);
        doc["weights"] = {r6(rec.weights_used.w1), r6(rec.weights_used.w2),
                          r6(rec.weights_used.w3)};
        doc["fallback"] = rec.fallback_flag;
        doc["indices"] = ojson::array();
        for (const auto& [space, h] : rec.per_space_indices)
            doc["indices"].push_back({{"space", space}, {"h", r6(h)}});
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "recommended space: " << rec.space << "  (H = " << fixed6(rec.h_value)
                  << ")\n"
                  << "weights: W1 = " << fixed6(rec.weights_used.w1)
                  << ", W2 = " << fixed6(rec.weights_used.w2)
                  << ", W3 = " << fixed6(rec.weights_used.w3)
                  << (rec.fallback_flag ? "  [fallback]" : "") << '\n';
        for (const auto& [space, h] : rec.per_space_indices)
            std::cout << "  " << space << "  H = " << fixed6(h) << '\n';
    }
    return 0;
}

int cmd_weights(const std::string& lot_path, const std::optional<std::string>& occupied) {
    const LotGraph graph = LotGraph::load_file(lot_path);
    const OccupancyState state = resolve_state(graph, occupied);
    if (opsr::vacant_spaces(graph, state).size() < 2) {
        std::cerr << "entropy weights need at least 2 vacant spaces\n";
        return kExitInvalid;
    }
    const opsr::FactorMatrix matrix =
        opsr::build_factor_matrix(graph, state, graph.entrances().front(), graph.exits());
    const opsr::EntropyReport report = opsr::entropy_weights(matrix);
    std::cout << "k = " << fixed6(report.k) << '\n';
    const char* names[3] = {"X", "L", "S"};
    for (int j = 0; j < 3; ++j)
        std::cout << names[j] << ": e = " << fixed6(report.e[j])
                  << "  h = " << fixed6(report.h[j]) << '\n';
    std::cout << "weights: W1 = " << fixed6(report.w.w1) << ", W2 = " << fixed6(report.w.w2)
              << ", W3 = " << fixed6(report.w.w3)
              << (report.fallback ? "  [fallback: equal weights]" : "") << '\n';
    return 0;
}

int cmd_compare(const std::string& lot_path, const std::string& scenario_spec,
                const std::string& format) {
    const LotGraph graph = LotGraph::load_file(lot_path);
    std::vector<opsr::Scenario> scenarios;
    for (const auto& token : split_csv(scenario_spec)) {
        if (token.size() != 1) throw opsr::LotError("bad scenario '" + token + "'");
        scenarios.push_back(opsr::build_scenario(graph, token[0]));
    }
    const std::vector<opsr::Method> methods{opsr::Method::OPSR, opsr::Method::FixedI,
                                            opsr::Method::FixedII, opsr::Method::FixedIII,
                                            opsr::Method::FixedIV};
    const opsr::ComparisonReport report =
        opsr::run_comparison(graph, scenarios, methods, opsr::DurationModel{});

    if (format == "structured") {
        ojson doc = ojson::array();
        for (const auto& cell : report.cells) {
            doc.push_back({{"scenario", std::string(1, cell.scenario)},
                           {"method", opsr::to_string(cell.method)},
                           {"space", cell.space},
                           {"drive_s", r6(cell.duration.drive_s)},
                           {"maneuver_s", r6(cell.duration.maneuver_s)},
                           {"walk_s", r6(cell.duration.walk_s)},
                           {"total_s", r6(cell.duration.total_s)}});
        }
        std::cout << doc.dump(2) << '\n';
        if (!report.summary.empty()) std::cerr << report.summary << '\n';
    } else {
        std::printf("%-9s %-6s %-6s %12s %12s %12s %12s\n", "scenario", "method", "space",
                    "drive_s", "maneuver_s", "walk_s", "total_s");
        for (const auto& cell : report.cells) {
            std::printf("%-9c %-6s %-6s %12.6f %12.6f %12.6f %12.6f\n", cell.scenario,
                        opsr::to_string(cell.method), cell.space.c_str(),
                        cell.duration.drive_s, cell.duration.maneuver_s, cell.duration.walk_s,
                        cell.duration.total_s);
        }
        if (!report.summary.empty()) std::cout << report.summary << '\n';
    }
    return 0;
}

int cmd_render(const std::string& lot_path, const std::optional<std::string>& occupied,
               const std::string& out_path) {
    const LotGraph graph = LotGraph::load_file(lot_path);
    const OccupancyState state = resolve_state(graph, occupied);

    std::optional<opsr::Recommendation> rec;
    try {
        rec = opsr::recommend(graph, state, graph.entrances().front(), graph.exits());
    } catch (const opsr::LotFullError&) {
        std::cerr << "warning: lot is full, rendering without a recommendation\n";
    }
    const std::string svg =
        opsr::render_svg(graph, state, rec, graph.entrances().front(), graph.exits());

    if (out_path.empty()) {
        std::cout << svg;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write '" << out_path << "'\n";
            return kExitInvalid;
        }
        out << svg;
        if (!out.good()) {
            std::cerr << "write failure on '" << out_path << "'\n";
            return kExitInvalid;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"OPSR parking-space recommendation"};
    app.require_subcommand(1);

    std::string lot_path;
    std::optional<std::string> occupied;
    std::string weights_spec = "entropy";
    std::string scenario_spec = "A,B,C,D";
    std::string format = "table";
    std::string out_path;

    auto add_common = [&](CLI::App* sub, bool with_occupied = true) {
        sub->add_option("lot_path", lot_path, "lot layout file")->required();
        if (with_occupied)
            sub->add_option("--occupied", occupied, "comma-separated occupied space ids "
                                                    "(overrides the file's occupied list)");
    };

    auto* validate = app.add_subcommand("validate", "validate a lot layout file");
    add_common(validate, false);

    auto* rec = app.add_subcommand("recommend", "recommend a parking space");
    add_common(rec);
    rec->add_option("--weights", weights_spec, "'entropy' or fixed w1,w2,w3");
    rec->add_option("--format", format)->check(CLI::IsMember({"table", "structured"}));

    auto* weights = app.add_subcommand("weights", "show the entropy weight derivation");
    add_common(weights);

    auto* compare = app.add_subcommand("compare", "run the scenario comparison harness");
    add_common(compare, false);
    compare->add_option("--scenario", scenario_spec, "comma-separated subset of A,B,C,D");
    compare->add_option("--format", format)->check(CLI::IsMember({"table", "structured"}));

    auto* render = app.add_subcommand("render", "render the lot and recommendation as SVG");
    add_common(render);
    render->add_option("--out", out_path, "output SVG path (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(lot_path);
        if (rec->parsed()) return cmd_recommend(lot_path, occupied, weights_spec, format);
        if (weights->parsed()) return cmd_weights(lot_path, occupied);
        if (compare->parsed()) return cmd_compare(lot_path, scenario_spec, format);
        if (render->parsed()) return cmd_render(lot_path, occupied, out_path);
    } catch (const opsr::LotFullError& e) {
        std::cerr << e.what() << '\n';
        return kExitLotFull;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return 0;
}
