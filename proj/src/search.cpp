#include "powercolor/search.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "powercolor/cliques.hpp"
#include "powercolor/errors.hpp"
#include "powercolor/graph_io.hpp"
#include "powercolor/triviality.hpp"

namespace powercolor {

bool Finding::open_zone() const {
  return connected && chi && *chi >= 3 && tight.value_or(false) && weakly_cliqued &&
         !*weakly_cliqued;
}

namespace {

template <class T>
nlohmann::json opt(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <class T>
std::optional<T> get_opt(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

nlohmann::json to_json(const Finding& f) {
  return {{"graph6", f.graph6},
          {"n", f.n},
          {"chi", opt(f.chi)},
          {"connected", f.connected},
          {"tight", opt(f.tight)},
          {"weakly_cliqued", opt(f.weakly_cliqued)},
          {"strongly_cliqued", opt(f.strongly_cliqued)},
          {"verdict", f.verdict},
          {"nontrivial_witness", opt(f.nontrivial_witness)},
          {"power", opt(f.power)},
          {"all_trivial", opt(f.all_trivial)},
          {"status", f.status},
          {"violations", f.violations}};
}

Finding finding_from_json(const nlohmann::json& j) {
  try {
    Finding f;
    f.graph6 = j.at("graph6").get<std::string>();
    f.n = j.at("n").get<std::size_t>();
    f.chi = get_opt<std::size_t>(j, "chi");
    f.connected = j.at("connected").get<bool>();
    f.tight = get_opt<bool>(j, "tight");
    f.weakly_cliqued = get_opt<bool>(j, "weakly_cliqued");
    f.strongly_cliqued = get_opt<bool>(j, "strongly_cliqued");
    f.verdict = j.at("verdict").get<std::string>();
    f.nontrivial_witness = get_opt<std::vector<Color>>(j, "nontrivial_witness");
    f.power = get_opt<std::size_t>(j, "power");
    f.all_trivial = get_opt<bool>(j, "all_trivial");
    f.status = j.value("status", std::string("ok"));
    f.violations = j.value("violations", std::vector<std::string>{});
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("finding JSON: ") + e.what());
  }
}

Finding examine_graph(const Graph& g, const SearchOptions& options) {
  Finding f;
  f.graph6 = to_graph6(g);
  f.n = g.order();
  f.connected = is_connected(g);
  if (g.empty()) {
    f.status = "error: empty graph";
    return f;
  }
  WorkBudget budget(options.budget_per_graph);
  try {
    f.chi = chromatic_number(g, &budget);
    f.weakly_cliqued = is_weakly_cliqued(g, &budget).cliqued;
    f.strongly_cliqued = is_strongly_cliqued(g, &budget).cliqued;
    f.tight = is_tight_graph(g, &budget).tight;
    const Verdict verdict = decide_by_theorems(g, &budget);
    f.verdict = verdict_name(verdict);

    if (verdict.reason == VerdictReason::not_tight) {
      try {
        auto square = nontrivial_square_from_witness(g, *verdict.non_tight_coloring,
                                                     *verdict.recoloring, &budget);
        f.power = 2;
        f.all_trivial = false;
        f.nontrivial_witness = std::move(square.colors);
      } catch (const InternalError& e) {
        f.violations.push_back(std::string("square construction failed: ") + e.what());
      }
      return f;
    }

    // Bipartite squares are still all trivial; the cube is the first
    // power where nontrivial colorings must appear.
    const std::size_t top =
        *f.chi == 2 ? std::max<std::size_t>(options.power, 3) : options.power;
    const auto report = verify_power_triviality(g, top, &budget, options.limits);
    f.violations = report.violations;
    for (const auto& p : report.per_power) {
      if (p.status == PowerStatus::budget_exceeded) f.status = "budget_exceeded";
      if (p.status != PowerStatus::verified) break;
      f.power = p.n;
      f.all_trivial = p.all_trivial;
      if (!p.all_trivial) {
        f.nontrivial_witness = p.nontrivial_example->colors;
        break;
      }
    }
  } catch (const BudgetExceeded&) {
    f.status = "budget_exceeded";
  } catch (const InternalError& e) {
    f.violations.push_back(e.what());
  } catch (const Error& e) {
    f.status = std::string("error: ") + e.what();
  }
  if (f.verdict.empty()) f.verdict = "Unknown";
  return f;
}

std::map<std::string, Finding> FindingsLog::read(const std::string& path,
                                                 std::size_t* skipped_lines) {
  std::map<std::string, Finding> out;
  std::size_t skipped = 0;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      auto f = finding_from_json(nlohmann::json::parse(line));
      auto key = f.graph6;
      out.insert_or_assign(std::move(key), std::move(f));
    } catch (const std::exception&) {
      ++skipped;
    }
  }
  if (skipped_lines) *skipped_lines = skipped;
  return out;
}

FindingsLog::FindingsLog(const std::string& path) : path_(path) {
  entries_ = read(path, &skipped_lines_);
  bool needs_newline = false;
  if (std::filesystem::exists(path) && std::filesystem::file_size(path) > 0) {
    std::ifstream in(path, std::ios::binary);
    in.seekg(-1, std::ios::end);
    needs_newline = in.get() != '\n';
  }
  out_.open(path, std::ios::app);
  if (!out_) throw Error("cannot open findings log " + path);
  if (needs_newline) out_ << '\n';
}

const Finding* FindingsLog::find(const std::string& graph6) const {
  auto it = entries_.find(graph6);
  return it == entries_.end() ? nullptr : &it->second;
}

void FindingsLog::append(const Finding& f) {
  std::lock_guard lock(mutex_);
  out_ << to_json(f).dump() << '\n';
  out_.flush();
  if (!out_) throw Error("write to findings log " + path_ + " failed");
  entries_.insert_or_assign(f.graph6, f);
}

SearchSummary counterexample_search(std::span<const Graph> graphs, const SearchOptions& options,
                                    FindingsLog* log) {
  SearchSummary s;
  std::vector<Finding> results(graphs.size());
  std::vector<char> fresh(graphs.size(), 0);
  std::vector<std::int64_t> todo;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Finding* known = log ? log->find(to_graph6(graphs[i])) : nullptr;
    if (known) {
      results[i] = *known;
    } else {
      todo.push_back(static_cast<std::int64_t>(i));
      fresh[i] = 1;
    }
  }
  const auto jobs = static_cast<std::int64_t>(todo.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t t = 0; t < jobs; ++t) {
    const auto i = static_cast<std::size_t>(todo[t]);
    results[i] = examine_graph(graphs[i], options);
    if (log) {
      try {
        log->append(results[i]);
      } catch (...) {
#pragma omp critical(powercolor_search_failure)
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& f = results[i];
    (fresh[i] ? s.examined : s.resumed)++;
    if (!f.violations.empty()) ++s.violations;
    if (f.open_zone()) ++s.open_zone;
    if (f.status == "budget_exceeded") ++s.budget_exceeded;
    if (f.status.rfind("error", 0) == 0) ++s.errors;
  }
  std::sort(results.begin(), results.end(),
            [](const Finding& a, const Finding& b) { return a.graph6 < b.graph6; });
  results.erase(std::unique(results.begin(), results.end(),
                            [](const Finding& a, const Finding& b) { return a.graph6 == b.graph6; }),
                results.end());
  s.findings = std::move(results);
  return s;
}

}  // namespace powercolor
