#include "powercolor/report.hpp"

#include <chrono>

#include "powercolor/cliques.hpp"
#include "powercolor/cograph.hpp"
#include "powercolor/errors.hpp"
#include "powercolor/graph_io.hpp"

namespace powercolor {

namespace {

using nlohmann::json;

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

const std::pair<VerdictKind, const char*> kKinds[] = {
    {VerdictKind::trivially_power_colorable, "trivially_power_colorable"},
    {VerdictKind::not_trivially_power_colorable, "not_trivially_power_colorable"},
    {VerdictKind::unknown, "unknown"},
};

const std::pair<VerdictReason, const char*> kReasons[] = {
    {VerdictReason::none, "none"},
    {VerdictReason::edgeless, "edgeless"},
    {VerdictReason::weakly_cliqued, "weakly_cliqued"},
    {VerdictReason::disconnected, "disconnected"},
    {VerdictReason::chromatic_below_3, "chromatic_below_3"},
    {VerdictReason::not_tight, "not_tight"},
    {VerdictReason::open_zone, "open_zone"},
    {VerdictReason::budget_exceeded, "budget_exceeded"},
};

const std::pair<PowerStatus, const char*> kStatuses[] = {
    {PowerStatus::verified, "verified"},
    {PowerStatus::budget_exceeded, "budget_exceeded"},
    {PowerStatus::capacity_exceeded, "capacity_exceeded"},
};

template <class E, std::size_t N>
const char* name_of(const std::pair<E, const char*> (&table)[N], E e) {
  for (const auto& [k, v] : table)
    if (k == e) return v;
  return "";
}

template <class E, std::size_t N>
E parse_name(const std::pair<E, const char*> (&table)[N], const std::string& s) {
  for (const auto& [k, v] : table)
    if (s == v) return k;
  throw ParseError("unknown enumerator \"" + s + "\"");
}

template <class F>
auto wrap(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + " JSON: " + e.what());
  }
}

}  // namespace

std::string status_name(PowerStatus s) { return name_of(kStatuses, s); }

json to_json(const Coloring& c) { return {{"colors", c.colors}, {"palette", c.palette}}; }

Coloring coloring_from_json(const json& j) {
  return wrap("coloring", [&] {
    return Coloring{j.at("colors").get<std::vector<Color>>(), j.at("palette").get<std::size_t>()};
  });
}

json to_json(const Verdict& v) {
  json j = {{"name", verdict_name(v)},
            {"theorem", theorem_verdict_name(v)},
            {"kind", name_of(kKinds, v.kind)},
            {"reason", name_of(kReasons, v.reason)},
            {"chi", v.chi},
            {"connected", v.connected},
            {"tight", opt(v.tight)},
            {"weakly_cliqued", opt(v.weakly_cliqued)},
            {"uncovered_vertex", opt(v.uncovered_vertex)}};
  j["non_tight_coloring"] = v.non_tight_coloring ? to_json(*v.non_tight_coloring) : json(nullptr);
  j["recoloring"] = v.recoloring
                        ? json{{"vertex", v.recoloring->vertex}, {"color", v.recoloring->color}}
                        : json(nullptr);
  return j;
}

Verdict verdict_from_json(const json& j) {
  return wrap("verdict", [&] {
    Verdict v;
    v.kind = parse_name(kKinds, j.at("kind").get<std::string>());
    v.reason = parse_name(kReasons, j.at("reason").get<std::string>());
    v.chi = j.at("chi").get<std::size_t>();
    v.connected = j.at("connected").get<bool>();
    v.tight = get_opt<bool>(j, "tight");
    v.weakly_cliqued = get_opt<bool>(j, "weakly_cliqued");
    v.uncovered_vertex = get_opt<Vertex>(j, "uncovered_vertex");
    if (!j.at("non_tight_coloring").is_null())
      v.non_tight_coloring = coloring_from_json(j.at("non_tight_coloring"));
    if (!j.at("recoloring").is_null())
      v.recoloring = Recoloring{j.at("recoloring").at("vertex").get<Vertex>(),
                                j.at("recoloring").at("color").get<Color>()};
    return v;
  });
}

json to_json(const PowerResult& p) {
  json j = {{"n", p.n},
            {"status", status_name(p.status)},
            {"all_trivial", p.all_trivial},
            {"components", opt(p.components)}};
  j["total_proper_colorings"] =
      p.total_proper_colorings ? json(p.total_proper_colorings->str()) : json(nullptr);
  j["nontrivial_example"] = p.nontrivial_example ? to_json(*p.nontrivial_example) : json(nullptr);
  return j;
}

PowerResult power_result_from_json(const json& j) {
  return wrap("power result", [&] {
    PowerResult p;
    p.n = j.at("n").get<std::size_t>();
    p.status = parse_name(kStatuses, j.at("status").get<std::string>());
    p.all_trivial = j.at("all_trivial").get<bool>();
    p.components = get_opt<std::size_t>(j, "components");
    if (auto t = get_opt<std::string>(j, "total_proper_colorings")) p.total_proper_colorings = BigCount(*t);
    if (!j.at("nontrivial_example").is_null())
      p.nontrivial_example = coloring_from_json(j.at("nontrivial_example"));
    return p;
  });
}

json to_json(const PowerTrivialityReport& r) {
  json powers = json::array();
  for (const auto& p : r.per_power) powers.push_back(to_json(p));
  return {{"chi", r.chi},
          {"theorem_verdict", theorem_verdict_name(r.verdict)},
          {"verdict", to_json(r.verdict)},
          {"per_power", std::move(powers)},
          {"violations", r.violations},
          {"budget_used", r.budget_used}};
}

PowerTrivialityReport power_report_from_json(const json& j) {
  return wrap("power report", [&] {
    PowerTrivialityReport r;
    r.chi = j.at("chi").get<std::size_t>();
    r.verdict = verdict_from_json(j.at("verdict"));
    for (const auto& p : j.at("per_power")) r.per_power.push_back(power_result_from_json(p));
    r.violations = j.at("violations").get<std::vector<std::string>>();
    r.budget_used = j.at("budget_used").get<std::uint64_t>();
    return r;
  });
}

AnalysisReport analyze_graph(const Graph& g, std::size_t n_max, std::uint64_t budget_limit,
                             std::uint64_t seed, const ProductLimits& limits) {
  if (g.empty()) throw DomainError("cannot analyze the empty graph");
  const auto start = std::chrono::steady_clock::now();
  WorkBudget budget(budget_limit);
  AnalysisReport r;
  r.graph6 = to_graph6(g);
  r.vertices = g.order();
  r.edges = g.size();
  r.connected = is_connected(g);
  r.budget_limit = budget_limit;
  r.seed = seed;
  try {
    build_cotree(g);
    r.is_cograph = true;
  } catch (const NotACograph&) {
    r.is_cograph = false;
  }
  bool verdict_done = false;
  try {
    r.chi = chromatic_number(g, &budget);
    r.weakly_cliqued = is_weakly_cliqued(g, &budget).cliqued;
    r.strongly_cliqued = is_strongly_cliqued(g, &budget).cliqued;
    if (*r.weakly_cliqued)
      r.clique_components = clique_connected_components(g, &budget).component_count;
    r.tight = is_tight_graph(g, &budget).tight;
    if (n_max > 0) {
      auto rep = verify_power_triviality(g, n_max, &budget, limits);
      r.verdict = std::move(rep.verdict);
      r.per_power = std::move(rep.per_power);
      r.violations = std::move(rep.violations);
      for (const auto& p : r.per_power)
        if (p.status == PowerStatus::budget_exceeded) r.status = "budget_exceeded";
    } else {
      r.verdict = decide_by_theorems(g, &budget);
    }
    verdict_done = true;
  } catch (const BudgetExceeded&) {
    r.status = "budget_exceeded";
  }
  if (!verdict_done) {
    r.verdict = Verdict{};
    r.verdict.reason = VerdictReason::budget_exceeded;
    r.verdict.connected = r.connected;
    r.verdict.chi = r.chi.value_or(0);
  }
  r.budget_used = budget.used();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

json to_json(const AnalysisReport& r) {
  json powers = json::array();
  for (const auto& p : r.per_power) powers.push_back(to_json(p));
  return {{"graph", {{"graph6", r.graph6}, {"vertices", r.vertices}, {"edges", r.edges}}},
          {"predicates",
           {{"connected", r.connected},
            {"chi", opt(r.chi)},
            {"tight", opt(r.tight)},
            {"weakly_cliqued", opt(r.weakly_cliqued)},
            {"strongly_cliqued", opt(r.strongly_cliqued)},
            {"clique_components", opt(r.clique_components)},
            {"is_cograph", r.is_cograph}}},
          {"verdict", to_json(r.verdict)},
          {"per_power", std::move(powers)},
          {"violations", r.violations},
          {"status", r.status},
          {"seconds", r.seconds},
          {"budget", {{"used", r.budget_used}, {"limit", r.budget_limit}}},
          {"seed", r.seed}};
}

AnalysisReport analysis_report_from_json(const json& j) {
  return wrap("analysis report", [&] {
    AnalysisReport r;
    const auto& g = j.at("graph");
    r.graph6 = g.at("graph6").get<std::string>();
    r.vertices = g.at("vertices").get<std::size_t>();
    r.edges = g.at("edges").get<std::size_t>();
    const auto& p = j.at("predicates");
    r.connected = p.at("connected").get<bool>();
    r.chi = get_opt<std::size_t>(p, "chi");
    r.tight = get_opt<bool>(p, "tight");
    r.weakly_cliqued = get_opt<bool>(p, "weakly_cliqued");
    r.strongly_cliqued = get_opt<bool>(p, "strongly_cliqued");
    r.clique_components = get_opt<std::size_t>(p, "clique_components");
    r.is_cograph = p.at("is_cograph").get<bool>();
    r.verdict = verdict_from_json(j.at("verdict"));
    for (const auto& x : j.at("per_power")) r.per_power.push_back(power_result_from_json(x));
    r.violations = j.at("violations").get<std::vector<std::string>>();
    r.status = j.at("status").get<std::string>();
    r.seconds = j.at("seconds").get<double>();
    r.budget_used = j.at("budget").at("used").get<std::uint64_t>();
    r.budget_limit = j.at("budget").at("limit").get<std::uint64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    return r;
  });
}

}  // namespace powercolor
