#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "powercolor/coloring.hpp"
#include "powercolor/graph.hpp"

namespace powercolor {

/// A coloring of a product that factors through one coordinate:
/// c(v) = factor_coloring(coordinate(v, coordinate)).
struct TrivialityWitness {
  std::size_t coordinate = 0;
  Coloring factor_coloring;

  friend bool operator==(const TrivialityWitness&, const TrivialityWitness&) = default;
};

/// Least coordinate whose fibers are monochromatic and whose induced factor
/// coloring is proper; nullopt when the coloring is nontrivial.
/// ImproperColoring if `c` is not proper on the product.
std::optional<TrivialityWitness> classify_coloring(const ProductSpace& ps, const Coloring& c);

/// c(v) = factor_coloring(v_i) over every product vertex.
Coloring lift_coloring(const ProductSpace& ps, const TrivialityWitness& w);

enum class PowerStatus { verified, budget_exceeded, capacity_exceeded };

struct PowerResult {
  std::size_t n = 0;
  PowerStatus status = PowerStatus::verified;
  /// P(G^n, chi(G)); absent when the count did not finish.
  std::optional<BigCount> total_proper_colorings;
  /// Meaningful only when status is verified.
  bool all_trivial = false;
  std::optional<Coloring> nontrivial_example;
  /// c(G^n), recorded whenever the power was built.
  std::optional<std::size_t> components;

  friend bool operator==(const PowerResult&, const PowerResult&) = default;
};

enum class VerdictKind { trivially_power_colorable, not_trivially_power_colorable, unknown };

enum class VerdictReason {
  none,
  edgeless,        // the only chi-coloring of any power is constant
  weakly_cliqued,  // connected, chi >= 3, every vertex in a chi-clique
  disconnected,
  chromatic_below_3,
  not_tight,
  open_zone,        // connected, tight, chi >= 3, not weakly cliqued
  budget_exceeded,  // a predicate could not be decided
};

struct Verdict {
  VerdictKind kind = VerdictKind::unknown;
  VerdictReason reason = VerdictReason::none;
  std::size_t chi = 0;
  bool connected = false;
  std::optional<bool> tight;
  std::optional<bool> weakly_cliqued;
  /// Evidence for a not_tight verdict.
  std::optional<Coloring> non_tight_coloring;
  std::optional<Recoloring> recoloring;
  /// Evidence for an open_zone verdict.
  std::optional<Vertex> uncovered_vertex;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// "TriviallyPowerColorable", "Not(not-tight)", "Unknown", ...
std::string verdict_name(const Verdict& v);
/// "SufficientApplies", "NecessaryFails(not-tight)", "Undetermined".
std::string theorem_verdict_name(const Verdict& v);

/// Applies the necessary conditions (connected, chi >= 3, tight) and the
/// weakly-cliqued sufficient condition, in that order. Edgeless graphs are
/// trivially power-colorable outright. DomainError on the empty graph;
/// BudgetExceeded from the tightness check.
Verdict decide_by_theorems(const Graph& g, WorkBudget* budget = nullptr);

struct PowerTrivialityReport {
  std::size_t chi = 0;
  std::vector<PowerResult> per_power;
  Verdict verdict;
  /// Observations contradicting a theorem. Non-empty means a defect.
  std::vector<std::string> violations;
  std::uint64_t budget_used = 0;

  friend bool operator==(const PowerTrivialityReport&, const PowerTrivialityReport&) = default;
};

/// For n = 1..n_max enumerates the proper chi(g)-colorings of g^n and
/// classifies each, stopping at the first nontrivial one. One budget is
/// shared by the whole call; once it is exhausted the remaining powers are
/// reported as budget_exceeded. DomainError on the empty graph or n_max = 0.
PowerTrivialityReport verify_power_triviality(const Graph& g, std::size_t n_max,
                                              WorkBudget* budget = nullptr,
                                              const ProductLimits& limits = {});

/// Theorem checks over a finished report (also run by verify_power_triviality).
std::vector<std::string> theorem_violations(const Graph& g, const PowerTrivialityReport& r);

/// Phi(u, v) = phi_prime(v) at (w, w) and phi(v) elsewhere, on g^2 encoded as
/// u * |V| + v. DomainError unless phi and phi_prime are chi(g)-colorings
/// differing exactly at w; ImproperColoring if either is improper.
/// InternalError if the result is improper or trivial.
Coloring construct_nontrivial_square(const Graph& g, const Coloring& phi,
                                     const Coloring& phi_prime, Vertex w,
                                     WorkBudget* budget = nullptr);

/// The square coloring built from a non-tightness witness.
Coloring nontrivial_square_from_witness(const Graph& g, const Coloring& phi,
                                        const Recoloring& change,
                                        WorkBudget* budget = nullptr);

struct ProductTrivialityResult {
  std::size_t k = 0;
  std::uint64_t total = 0;
  std::uint64_t by_first = 0;
  std::uint64_t by_second = 0;
  std::uint64_t nontrivial = 0;
  std::optional<Coloring> nontrivial_example;
};

/// Classifies every proper k-coloring of g x h. DomainError unless
/// chi(g) = chi(h) = k >= 3.
ProductTrivialityResult product_triviality_check(const Graph& g, const Graph& h,
                                                 WorkBudget* budget = nullptr,
                                                 const ProductLimits& limits = {});

}  // namespace powercolor
