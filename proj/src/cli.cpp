#include "powercolor/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "powercolor/cograph.hpp"
#include "powercolor/errors.hpp"
#include "powercolor/generate.hpp"
#include "powercolor/graph_io.hpp"
#include "powercolor/partition.hpp"
#include "powercolor/report.hpp"
#include "powercolor/search.hpp"
#include "powercolor/triviality.hpp"

namespace powercolor {

namespace {

using nlohmann::json;

struct Common {
  std::uint64_t budget = WorkBudget::kDefaultLimit;
  std::string format = "text";
  std::string input_format = "auto";
  std::uint64_t seed = 0;
  std::string out;

  bool as_json() const { return format == "json"; }
  GraphFormat graph_format() const {
    if (input_format == "graph6") return GraphFormat::graph6;
    if (input_format == "json") return GraphFormat::json;
    return GraphFormat::automatic;
  }
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

template <class T>
std::string opt_text(const std::optional<T>& v) {
  if (!v) return "undetermined";
  if constexpr (std::is_same_v<T, bool>)
    return yes_no(*v);
  else
    return std::to_string(*v);
}

std::string colors_text(const std::vector<Color>& colors) {
  std::string s = "(";
  for (std::size_t i = 0; i < colors.size(); ++i) s += (i ? "," : "") + std::to_string(colors[i]);
  return s + ")";
}

void print_powers(std::ostream& o, const std::vector<PowerResult>& powers) {
  for (const auto& p : powers) {
    o << "power " << p.n << ": ";
    if (p.status != PowerStatus::verified) {
      o << "unverified (" << status_name(p.status) << ")\n";
      continue;
    }
    o << (p.total_proper_colorings ? p.total_proper_colorings->str() : std::string("?"))
      << " proper colorings, " << (p.all_trivial ? "all trivial" : "nontrivial coloring found");
    if (p.nontrivial_example) o << " " << colors_text(p.nontrivial_example->colors);
    o << "\n";
  }
}

void print_violations(std::ostream& o, const std::vector<std::string>& v) {
  for (const auto& s : v) o << "THEOREM VIOLATION: " << s << "\n";
}

int cmd_analyze(const Common& c, const std::string& input, std::size_t n, std::ostream& o) {
  const Graph g = load_graph(input, c.graph_format());
  const auto r = analyze_graph(g, n, c.budget, c.seed);
  if (c.as_json()) {
    o << to_json(r).dump(2) << "\n";
  } else {
    o << "graph " << r.graph6 << " (" << r.vertices << " vertices, " << r.edges << " edges)\n"
      << "connected: " << yes_no(r.connected) << "\n"
      << "chi: " << opt_text(r.chi) << "\n"
      << "tight: " << opt_text(r.tight) << "\n"
      << "weakly cliqued: " << opt_text(r.weakly_cliqued) << "\n"
      << "strongly cliqued: " << opt_text(r.strongly_cliqued) << "\n"
      << "clique components: " << opt_text(r.clique_components) << "\n"
      << "cograph: " << yes_no(r.is_cograph) << "\n"
      << "verdict: " << verdict_name(r.verdict) << " [" << theorem_verdict_name(r.verdict) << "]\n";
    print_powers(o, r.per_power);
    print_violations(o, r.violations);
    o << "status: " << r.status << "\n"
      << "budget: " << r.budget_used << " / " << r.budget_limit << " nodes\n"
      << "seconds: " << r.seconds << "\n"
      << "seed: " << r.seed << "\n";
  }
  return r.violations.empty() ? kExitOk : kExitViolation;
}

int cmd_verify(const Common& c, const std::string& input, std::size_t n, std::ostream& o) {
  const Graph g = load_graph(input, c.graph_format());
  WorkBudget budget(c.budget);
  const auto r = verify_power_triviality(g, n, &budget);
  if (c.as_json()) {
    auto j = to_json(r);
    j["graph6"] = to_graph6(g);
    j["budget_limit"] = c.budget;
    j["seed"] = c.seed;
    o << j.dump(2) << "\n";
  } else {
    o << "graph " << to_graph6(g) << ", chi " << r.chi << "\n"
      << "verdict: " << verdict_name(r.verdict) << " [" << theorem_verdict_name(r.verdict) << "]\n";
    print_powers(o, r.per_power);
    print_violations(o, r.violations);
    o << "budget: " << r.budget_used << " / " << c.budget << " nodes\n"
      << "seed: " << c.seed << "\n";
  }
  return r.violations.empty() ? kExitOk : kExitViolation;
}

struct SearchArgs {
  std::size_t max_vertices = 6;
  bool connected_only = false;
  std::size_t power = 2;
  std::size_t samples = 100;
};

int cmd_search(const Common& c, const SearchArgs& a, std::ostream& o) {
  std::vector<Graph> graphs =
      nonisomorphic_graphs_up_to(std::min(a.max_vertices, kMaxExhaustiveOrder), a.connected_only);
  for (std::size_t n = kMaxExhaustiveOrder + 1; n <= a.max_vertices; ++n)
    for (auto& g : random_graphs(n, a.samples, c.seed + n))
      if (!a.connected_only || is_connected(g)) graphs.push_back(std::move(g));

  SearchOptions options;
  options.power = a.power;
  options.budget_per_graph = c.budget;
  std::unique_ptr<FindingsLog> log;
  if (!c.out.empty()) log = std::make_unique<FindingsLog>(c.out);
  const auto s = counterexample_search(graphs, options, log.get());

  std::vector<std::string> open, violating;
  for (const auto& f : s.findings) {
    if (f.open_zone()) open.push_back(f.graph6);
    if (!f.violations.empty()) violating.push_back(f.graph6);
  }
  if (c.as_json()) {
    json j = {{"max_vertices", a.max_vertices},
              {"connected_only", a.connected_only},
              {"power", a.power},
              {"samples", a.samples},
              {"seed", c.seed},
              {"graphs", s.findings.size()},
              {"examined", s.examined},
              {"resumed", s.resumed},
              {"violations", s.violations},
              {"open_zone", s.open_zone},
              {"budget_exceeded", s.budget_exceeded},
              {"errors", s.errors},
              {"open_zone_graphs", open},
              {"violating_graphs", violating},
              {"log", c.out.empty() ? json(nullptr) : json(c.out)}};
    o << j.dump(2) << "\n";
  } else {
    o << "graphs: " << s.findings.size() << " (" << s.examined << " examined, " << s.resumed
      << " resumed from log)\n"
      << "theorem violations: " << s.violations << "\n"
      << "open zone: " << s.open_zone << "\n"
      << "budget exceeded: " << s.budget_exceeded << "\n"
      << "errors: " << s.errors << "\n";
    for (const auto& g6 : open) o << "open zone graph: " << g6 << "\n";
    for (const auto& g6 : violating) o << "THEOREM VIOLATION: " << g6 << "\n";
    if (!c.out.empty()) o << "log: " << c.out << "\n";
    o << "seed: " << c.seed << "\n";
  }
  return s.violations == 0 ? kExitOk : kExitViolation;
}

int cmd_cograph(const Common& c, const std::string& input, std::ostream& o) {
  const Graph g = load_graph(input, c.graph_format());
  WorkBudget budget(c.budget);
  const auto p4 = is_cograph_p4(g);
  std::vector<std::string> violations;
  json j = {{"graph6", to_graph6(g)}, {"cograph", p4.cograph}, {"seed", c.seed}};
  j["p4"] = p4.p4 ? json(*p4.p4) : json(nullptr);

  std::optional<Cotree> tree;
  try {
    tree = build_cotree(g);
  } catch (const NotACograph&) {
  }
  if (tree.has_value() != p4.cograph)
    violations.push_back("P4 scan and cotree decomposition disagree");

  std::optional<EquivalenceReport> eq;
  std::optional<Verdict> verdict;
  if (tree && p4.cograph) {
    j["cotree"] = to_json(*tree);
    if (!(tree->evaluate() == g)) violations.push_back("cotree does not evaluate to the graph");
    if (!(replay_trace(tree->trace(), g.order()) == g))
      violations.push_back("construction trace does not rebuild the graph");
    eq = equivalence_report(g, &budget);
    verdict = decide_by_theorems(g, &budget);
    if (!eq->consistent()) violations.push_back("the five cograph conditions disagree");
    if (verdict->kind == VerdictKind::unknown)
      violations.push_back("no verdict for a cograph");
    j["equivalence"] = to_json(*eq);
    j["verdict"] = verdict_name(*verdict);
  }
  j["violations"] = violations;

  if (c.as_json()) {
    o << j.dump(2) << "\n";
  } else {
    o << "graph " << to_graph6(g) << "\n" << "cograph: " << yes_no(p4.cograph) << "\n";
    if (p4.p4) {
      const auto& q = *p4.p4;
      o << "induced P4: " << q[0] << "-" << q[1] << "-" << q[2] << "-" << q[3] << "\n";
    }
    if (tree) o << "cotree: " << to_json(*tree).dump() << "\n";
    if (eq) {
      o << "chi: " << eq->k << "\n"
        << "tight: " << yes_no(eq->tight) << "\n"
        << "tight coloring exists: " << yes_no(eq->exists_tight_coloring) << "\n"
        << "all maximal cliques of size chi: " << yes_no(eq->all_maximal_cliques_size_k) << "\n"
        << "strongly cliqued: " << yes_no(eq->strongly_cliqued) << "\n"
        << "weakly cliqued: " << yes_no(eq->weakly_cliqued) << "\n"
        << "verdict: " << verdict_name(*verdict) << "\n";
    }
    print_violations(o, violations);
    o << "seed: " << c.seed << "\n";
  }
  return violations.empty() ? kExitOk : kExitViolation;
}

Coloring parse_coloring_arg(const std::string& arg, std::size_t palette) {
  std::string text = arg;
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("coloring: ") + e.what());
  }
  if (j.is_array()) {
    try {
      return Coloring{j.get<std::vector<Color>>(), palette};
    } catch (const json::exception& e) {
      throw ParseError(std::string("coloring: ") + e.what());
    }
  }
  return coloring_from_json(j);
}

int cmd_ultrafilter(const Common& c, const std::string& input, std::size_t n,
                    const std::string& coloring_arg, std::ostream& o) {
  const Graph g = load_graph(input, c.graph_format());
  WorkBudget budget(c.budget);
  const std::size_t chi = chromatic_number(g, &budget);
  const auto ps = power(g, n);

  Coloring phi;
  if (!coloring_arg.empty()) {
    phi = parse_coloring_arg(coloring_arg, chi);
  } else {
    enumerate_colorings_unordered(
        ps.product(), chi,
        [&](const Coloring& x) {
          phi = x;
          return false;
        },
        &budget);
  }

  json j = {{"graph6", to_graph6(g)}, {"n", n}, {"chi", chi}, {"seed", c.seed}};
  std::vector<std::string> violations;
  std::optional<PrincipalUltrafilterWitness> w;
  try {
    w = extract_ultrafilter(ps, phi);
  } catch (const NontrivialColoring&) {
    const auto v = decide_by_theorems(g, &budget);
    if (v.kind == VerdictKind::trivially_power_colorable)
      violations.push_back("nontrivial coloring of a graph certified trivially power-colorable");
  }
  bool round_trip = false;
  std::optional<bool> filter_ok;
  if (w) {
    round_trip = ultrafilter_coloring(g, w->factor_coloring, w->generator, n) == phi;
    if (!round_trip) violations.push_back("ultrafilter coloring does not reproduce the input");
    if (n <= 4) {
      std::vector<IndexMask> gens;
      for (const auto& p : all_partitions(n)) gens.push_back(to_mask(index_block(ps, phi, p)));
      const auto family = upward_closure(gens, n);
      filter_ok = is_ultrafilter(family, n) && family == principal_filter(w->generator, n);
      if (!*filter_ok) violations.push_back("index blocks do not generate the principal ultrafilter");
    }
    j["generator"] = w->generator;
    j["factor_coloring"] = to_json(w->factor_coloring);
  }
  j["trivial"] = w.has_value();
  j["round_trip"] = round_trip;
  j["ultrafilter_check"] = filter_ok ? json(*filter_ok) : json(nullptr);
  j["violations"] = violations;

  if (c.as_json()) {
    o << j.dump(2) << "\n";
  } else {
    o << "graph " << to_graph6(g) << ", power " << n << ", chi " << chi << "\n";
    if (w) {
      o << "principal generator: " << w->generator << "\n"
        << "factor coloring: " << colors_text(w->factor_coloring.colors) << "\n"
        << "round trip: " << yes_no(round_trip) << "\n";
      if (filter_ok) o << "index blocks generate the principal ultrafilter: " << yes_no(*filter_ok) << "\n";
    } else {
      o << "coloring is nontrivial: no principal ultrafilter\n";
    }
    print_violations(o, violations);
    o << "seed: " << c.seed << "\n";
  }
  return violations.empty() ? kExitOk : kExitViolation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Common common;
  if (const char* env = std::getenv("POWERCOLOR_BUDGET")) {
    try {
      std::size_t used = 0;
      common.budget = std::stoull(env, &used);
      if (env[used] != '\0') throw std::invalid_argument(env);
    } catch (const std::exception&) {
      err << "error: POWERCOLOR_BUDGET must be a non-negative integer\n";
      return kExitError;
    }
  }

  CLI::App app{"Analysis of trivially power-colorable graphs", "powercolor"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--budget", common.budget, "Node expansion budget (env POWERCOLOR_BUDGET)");
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--input-format", common.input_format, "Graph input format")
      ->check(CLI::IsMember({"auto", "graph6", "json"}));
  app.add_option("--seed", common.seed, "Seed for random sampling");
  app.add_option("--out", common.out, "Report file; for search, the findings log");

  std::string input;
  std::size_t n_analyze = 2, n_verify = 2, n_ultra = 2;
  auto* analyze = app.add_subcommand("analyze", "Predicates and theorem verdict of one graph");
  analyze->add_option("input", input, "graph6 string, JSON, or a file containing either")->required();
  analyze->add_option("--n", n_analyze, "Largest power to verify (0 skips verification)");

  auto* verify = app.add_subcommand("verify", "Exhaustive triviality check of G^1..G^n");
  verify->add_option("input", input, "graph6 string, JSON, or a file")->required();
  verify->add_option("--n", n_verify, "Largest power")->check(CLI::PositiveNumber);

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Counterexample search over small graphs");
  search->add_option("--max-vertices", search_args.max_vertices, "Largest order examined")
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  search->add_flag("--connected-only", search_args.connected_only, "Skip disconnected graphs");
  search->add_option("--power", search_args.power, "Power verified per graph")
      ->check(CLI::PositiveNumber);
  search->add_option("--samples", search_args.samples,
                     "Random graphs per order above the exhaustive range");

  auto* cograph = app.add_subcommand("cograph", "Cograph recognition and the five-way report");
  cograph->add_option("input", input, "graph6 string, JSON, or a file")->required();

  std::string coloring_arg;
  auto* ultra = app.add_subcommand("ultrafilter", "Principal ultrafilter of a coloring of G^n");
  ultra->add_option("input", input, "graph6 string, JSON, or a file")->required();
  ultra->add_option("--n", n_ultra, "Exponent")->check(CLI::PositiveNumber);
  ultra->add_option("--coloring", coloring_arg,
                    "Coloring of G^n as a JSON array or file; default: first proper coloring");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }

  std::ostringstream buffer;
  const bool to_file = !common.out.empty() && !search->parsed();
  std::ostream& o = to_file ? static_cast<std::ostream&>(buffer) : out;
  int code = kExitOk;
  try {
    if (analyze->parsed())
      code = cmd_analyze(common, input, n_analyze, o);
    else if (verify->parsed())
      code = cmd_verify(common, input, n_verify, o);
    else if (search->parsed())
      code = cmd_search(common, search_args, o);
    else if (cograph->parsed())
      code = cmd_cograph(common, input, o);
    else if (ultra->parsed())
      code = cmd_ultrafilter(common, input, n_ultra, coloring_arg, o);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  if (to_file) {
    std::ofstream f(common.out);
    f << buffer.str();
    if (!f) {
      err << "error: cannot write " << common.out << "\n";
      return kExitError;
    }
  }
  return code;
}

}  // namespace powercolor
