#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "powercolor/coloring.hpp"
#include "powercolor/graph.hpp"
#include "powercolor/triviality.hpp"

namespace powercolor {

/// Everything `analyze` reports about one graph. Predicates that could not
/// be decided within the budget are empty and `status` says why.
struct AnalysisReport {
  std::string graph6;
  std::size_t vertices = 0;
  std::size_t edges = 0;

  bool connected = false;
  std::optional<std::size_t> chi;
  std::optional<bool> tight;
  std::optional<bool> weakly_cliqued;
  std::optional<bool> strongly_cliqued;
  /// Clique-path components among the chi-cliques; only for weakly cliqued graphs.
  std::optional<std::size_t> clique_components;
  bool is_cograph = false;

  Verdict verdict;
  std::vector<PowerResult> per_power;
  std::vector<std::string> violations;

  std::string status = "ok";
  double seconds = 0;
  std::uint64_t budget_used = 0;
  std::uint64_t budget_limit = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Recomputes every predicate of `g` and verifies powers 1..n_max
/// (none when n_max is 0), all under one budget.
AnalysisReport analyze_graph(const Graph& g, std::size_t n_max, std::uint64_t budget_limit,
                             std::uint64_t seed = 0, const ProductLimits& limits = {});

nlohmann::json to_json(const Coloring& c);
Coloring coloring_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Verdict& v);
Verdict verdict_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PowerResult& p);
PowerResult power_result_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PowerTrivialityReport& r);
PowerTrivialityReport power_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AnalysisReport& r);
AnalysisReport analysis_report_from_json(const nlohmann::json& j);

std::string status_name(PowerStatus s);

}  // namespace powercolor
