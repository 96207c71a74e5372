#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "powercolor/coloring.hpp"
#include "powercolor/graph.hpp"

namespace powercolor {

/// One line of the findings log.
struct Finding {
  std::string graph6;
  std::size_t n = 0;  // vertex count
  std::optional<std::size_t> chi;
  bool connected = false;
  std::optional<bool> tight;
  std::optional<bool> weakly_cliqued;
  std::optional<bool> strongly_cliqued;
  std::string verdict;
  /// Largest power whose triviality was settled, if any was examined.
  std::optional<std::size_t> power;
  std::optional<bool> all_trivial;
  std::optional<std::vector<Color>> nontrivial_witness;
  /// "ok", "budget_exceeded" or "error: <message>".
  std::string status = "ok";
  std::vector<std::string> violations;

  /// Open zone: connected, tight, chi >= 3 and not weakly cliqued.
  bool open_zone() const;

  friend bool operator==(const Finding&, const Finding&) = default;
};

nlohmann::json to_json(const Finding& f);
Finding finding_from_json(const nlohmann::json& j);

struct SearchOptions {
  /// Powers examined for graphs not settled by the square construction.
  std::size_t power = 2;
  std::uint64_t budget_per_graph = WorkBudget::kDefaultLimit;
  ProductLimits limits;
};

/// Computes the predicates of one graph and checks the theorems against it:
/// non-tight graphs get the explicit nontrivial square coloring, others are
/// verified up to the configured power. Never throws for budget or
/// capacity trouble; those end up in `status`.
Finding examine_graph(const Graph& g, const SearchOptions& options = {});

/// Append-only JSON-lines log keyed by graph6. Unparseable lines, such as
/// a line cut short by an interrupted run, are skipped on load. Appends are
/// serialized, so a single log can be fed from many threads.
class FindingsLog {
 public:
  explicit FindingsLog(const std::string& path);

  const Finding* find(const std::string& graph6) const;
  std::size_t size() const { return entries_.size(); }
  std::size_t skipped_lines() const { return skipped_lines_; }
  const std::map<std::string, Finding>& entries() const { return entries_; }

  void append(const Finding& f);

  /// Parses a log file without opening it for writing.
  static std::map<std::string, Finding> read(const std::string& path,
                                             std::size_t* skipped_lines = nullptr);

 private:
  std::string path_;
  std::map<std::string, Finding> entries_;
  std::size_t skipped_lines_ = 0;
  std::ofstream out_;
  std::mutex mutex_;
};

struct SearchSummary {
  std::size_t examined = 0;  // newly computed
  std::size_t resumed = 0;   // taken from the log
  std::size_t violations = 0;
  std::size_t open_zone = 0;
  std::size_t budget_exceeded = 0;
  std::size_t errors = 0;
  /// One finding per input graph, sorted by graph6.
  std::vector<Finding> findings;
};

/// Examines every graph on an OpenMP pool. Graphs already present in `log`
/// are not recomputed; new findings are appended to it as they complete.
SearchSummary counterexample_search(std::span<const Graph> graphs,
                                    const SearchOptions& options = {},
                                    FindingsLog* log = nullptr);

}  // namespace powercolor
