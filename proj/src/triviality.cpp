#include "powercolor/triviality.hpp"

#include <limits>
#include <memory>

#include "powercolor/cliques.hpp"
#include "powercolor/errors.hpp"

namespace powercolor {

namespace {

constexpr Color kUnset = std::numeric_limits<Color>::max();

// Fiber scan of one coordinate; aborts at the first two-colored fiber.
std::optional<Coloring> factor_through(const ProductSpace& ps, const Coloring& c,
                                       std::size_t i) {
  const Graph& factor = ps.factor(i);
  std::vector<Color> f(factor.order(), kUnset);
  for (Vertex v = 0; v < c.size(); ++v) {
    Color& slot = f[ps.coordinate(v, i)];
    if (slot == kUnset)
      slot = c[v];
    else if (slot != c[v])
      return std::nullopt;
  }
  for (auto& x : f)
    if (x == kUnset) x = 0;
  for (auto [a, b] : factor.edges())
    if (f[a] == f[b]) return std::nullopt;
  return Coloring{std::move(f), c.palette};
}

// Caller guarantees properness.
std::optional<TrivialityWitness> classify_proper(const ProductSpace& ps, const Coloring& c) {
  for (std::size_t i = 0; i < ps.factor_count(); ++i)
    if (auto f = factor_through(ps, c, i)) return TrivialityWitness{i, std::move(*f)};
  return std::nullopt;
}

class OwnedBudget {
 public:
  explicit OwnedBudget(WorkBudget* b) {
    if (b == nullptr) {
      owned_ = std::make_unique<WorkBudget>();
      b = owned_.get();
    }
    ref_ = b;
  }
  WorkBudget* get() const { return ref_; }

 private:
  std::unique_ptr<WorkBudget> owned_;
  WorkBudget* ref_;
};

const char* reason_name(VerdictReason r) {
  switch (r) {
    case VerdictReason::none: return "";
    case VerdictReason::edgeless: return "edgeless";
    case VerdictReason::weakly_cliqued: return "weakly-cliqued";
    case VerdictReason::disconnected: return "disconnected";
    case VerdictReason::chromatic_below_3: return "chromatic<3";
    case VerdictReason::not_tight: return "not-tight";
    case VerdictReason::open_zone: return "open-zone";
    case VerdictReason::budget_exceeded: return "budget-exceeded";
  }
  return "";
}

}  // namespace

std::optional<TrivialityWitness> classify_coloring(const ProductSpace& ps, const Coloring& c) {
  if (!is_proper(ps.product(), c))
    throw ImproperColoring("only proper colorings can be classified");
  return classify_proper(ps, c);
}

Coloring lift_coloring(const ProductSpace& ps, const TrivialityWitness& w) {
  if (w.coordinate >= ps.factor_count()) throw DomainError("witness coordinate out of range");
  if (w.factor_coloring.size() != ps.factor(w.coordinate).order())
    throw DomainError("factor coloring does not match the factor");
  Coloring out{std::vector<Color>(ps.product().order()), w.factor_coloring.palette};
  for (Vertex v = 0; v < out.size(); ++v)
    out.colors[v] = w.factor_coloring[ps.coordinate(v, w.coordinate)];
  return out;
}

std::string verdict_name(const Verdict& v) {
  switch (v.kind) {
    case VerdictKind::trivially_power_colorable: return "TriviallyPowerColorable";
    case VerdictKind::not_trivially_power_colorable:
      return std::string("Not(") + reason_name(v.reason) + ")";
    case VerdictKind::unknown: return "Unknown";
  }
  return "Unknown";
}

std::string theorem_verdict_name(const Verdict& v) {
  switch (v.kind) {
    case VerdictKind::trivially_power_colorable: return "SufficientApplies";
    case VerdictKind::not_trivially_power_colorable:
      return std::string("NecessaryFails(") + reason_name(v.reason) + ")";
    case VerdictKind::unknown: return "Undetermined";
  }
  return "Undetermined";
}

Verdict decide_by_theorems(const Graph& g, WorkBudget* budget) {
  if (g.empty()) throw DomainError("no verdict for the empty graph");
  Verdict v;
  v.connected = is_connected(g);
  if (g.size() == 0) {
    v.chi = 1;
    v.tight = true;
    v.weakly_cliqued = true;
    v.kind = VerdictKind::trivially_power_colorable;
    v.reason = VerdictReason::edgeless;
    return v;
  }
  v.chi = chromatic_number(g, budget);
  v.kind = VerdictKind::not_trivially_power_colorable;
  if (!v.connected) {
    v.reason = VerdictReason::disconnected;
    return v;
  }
  if (v.chi < 3) {
    v.reason = VerdictReason::chromatic_below_3;
    return v;
  }
  const auto tight = is_tight_graph(g, budget);
  v.tight = tight.tight;
  if (!tight.tight) {
    v.reason = VerdictReason::not_tight;
    v.non_tight_coloring = tight.coloring;
    v.recoloring = tight.witness;
    return v;
  }
  const auto weak = is_weakly_cliqued(g, budget);
  v.weakly_cliqued = weak.cliqued;
  if (weak.cliqued) {
    v.kind = VerdictKind::trivially_power_colorable;
    v.reason = VerdictReason::weakly_cliqued;
  } else {
    v.kind = VerdictKind::unknown;
    v.reason = VerdictReason::open_zone;
    v.uncovered_vertex = weak.uncovered;
  }
  return v;
}

std::vector<std::string> theorem_violations(const Graph& g, const PowerTrivialityReport& r) {
  std::vector<std::string> out;
  std::optional<BigCount> base;
  for (const auto& p : r.per_power)
    if (p.n == 1 && p.status == PowerStatus::verified) base = p.total_proper_colorings;
  const bool has_edge = g.size() > 0;

  for (const auto& p : r.per_power) {
    if (p.status != PowerStatus::verified) continue;
    const std::string at = "n=" + std::to_string(p.n) + ": ";
    if (p.n == 1 && !p.all_trivial) out.push_back(at + "a coloring of g itself was classified nontrivial");
    if (!p.all_trivial && r.verdict.kind == VerdictKind::trivially_power_colorable)
      out.push_back(at + "nontrivial coloring of a graph certified trivially power-colorable");
    if (!p.all_trivial || p.n < 2 || !has_edge) continue;
    if (r.verdict.reason == VerdictReason::not_tight)
      out.push_back(at + "all colorings trivial although g is not tight");
    // Connected bipartite G has 2^(n-1) components in G^n, too many for
    // n P(G, 2) trivial colorings once n >= 3.
    if (r.chi == 2 && p.n >= 3)
      out.push_back(at + "all colorings trivial although g is bipartite");
    if (base && p.total_proper_colorings &&
        *p.total_proper_colorings != BigCount(p.n) * *base)
      out.push_back(at + "all colorings trivial but the count is not n * P(G, chi)");
    // P(G^n, k) >= k^c(G^n), yet only n P(G, k) colorings can be trivial.
    if (base && p.components && *p.components < 100000) {
      const BigCount bound = boost::multiprecision::pow(BigCount(r.chi),
                                                        static_cast<unsigned>(*p.components));
      if (BigCount(p.n) * *base < bound)
        out.push_back(at + "all colorings trivial, contradicting the component count bound");
    }
  }
  return out;
}

PowerTrivialityReport verify_power_triviality(const Graph& g, std::size_t n_max,
                                              WorkBudget* budget_ptr,
                                              const ProductLimits& limits) {
  if (g.empty()) throw DomainError("cannot verify the empty graph");
  if (n_max == 0) throw DomainError("the largest power must be at least 1");
  OwnedBudget owned(budget_ptr);
  WorkBudget* budget = owned.get();
  PowerTrivialityReport r;

  auto mark_all = [&](PowerStatus s) {
    for (std::size_t n = 1; n <= n_max; ++n) r.per_power.push_back({n, s, {}, false, {}, {}});
  };
  try {
    r.verdict = decide_by_theorems(g, budget);
  } catch (const BudgetExceeded&) {
    r.verdict.kind = VerdictKind::unknown;
    r.verdict.reason = VerdictReason::budget_exceeded;
    r.verdict.connected = is_connected(g);
  }
  if (r.verdict.chi == 0) {
    mark_all(PowerStatus::budget_exceeded);
    r.budget_used = budget->used();
    return r;
  }
  r.chi = r.verdict.chi;

  bool capacity_hit = false;
  for (std::size_t n = 1; n <= n_max; ++n) {
    PowerResult p{n, PowerStatus::verified, {}, false, {}, {}};
    if (capacity_hit) {
      p.status = PowerStatus::capacity_exceeded;
    } else if (budget->exhausted()) {
      p.status = PowerStatus::budget_exceeded;
    } else {
      std::optional<ProductSpace> ps;
      try {
        ps.emplace(power(g, n, limits));
      } catch (const CapacityError&) {
        capacity_hit = true;
        p.status = PowerStatus::capacity_exceeded;
      }
      if (ps) {
        p.components = connected_components(ps->product()).count();
        try {
          std::uint64_t seen = 0;
          p.all_trivial = enumerate_colorings_unordered(
              ps->product(), r.chi,
              [&](const Coloring& c) {
                ++seen;
                if (classify_proper(*ps, c)) return true;
                p.nontrivial_example = c;
                return false;
              },
              budget);
          if (p.all_trivial) {
            p.total_proper_colorings = seen;
          } else {
            try {
              p.total_proper_colorings =
                  count_colorings(ps->product(), r.chi, budget, {true}).count;
            } catch (const BudgetExceeded&) {
            }
          }
        } catch (const BudgetExceeded&) {
          p = {n, PowerStatus::budget_exceeded, {}, false, {}, p.components};
        }
      }
    }
    r.per_power.push_back(std::move(p));
  }
  r.violations = theorem_violations(g, r);
  r.budget_used = budget->used();
  return r;
}

Coloring construct_nontrivial_square(const Graph& g, const Coloring& phi,
                                     const Coloring& phi_prime, Vertex w,
                                     WorkBudget* budget) {
  const std::size_t n = g.order();
  if (w >= n) throw DomainError("vertex w is not in the graph");
  if (!is_proper(g, phi) || !is_proper(g, phi_prime))
    throw ImproperColoring("both input colorings must be proper");
  if (phi.palette != phi_prime.palette)
    throw DomainError("input colorings use different palettes");
  for (Vertex v = 0; v < n; ++v)
    if ((phi[v] != phi_prime[v]) != (v == w))
      throw DomainError("input colorings must differ exactly at vertex " + std::to_string(w));
  const std::size_t chi = chromatic_number(g, budget);
  if (phi.palette != chi)
    throw DomainError("input colorings must use exactly chi(g) = " + std::to_string(chi) +
                      " colors");

  const auto ps = power(g, 2);
  Coloring out{std::vector<Color>(n * n), chi};
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      out.colors[u * n + v] = (u == w && v == w) ? phi_prime[w] : phi[v];
  if (!is_proper(ps.product(), out))
    throw InternalError("constructed square coloring is improper");
  if (classify_proper(ps, out))
    throw InternalError("constructed square coloring is trivial");
  return out;
}

Coloring nontrivial_square_from_witness(const Graph& g, const Coloring& phi,
                                        const Recoloring& change, WorkBudget* budget) {
  return construct_nontrivial_square(g, phi, recolor(phi, change), change.vertex, budget);
}

ProductTrivialityResult product_triviality_check(const Graph& g, const Graph& h,
                                                 WorkBudget* budget_ptr,
                                                 const ProductLimits& limits) {
  OwnedBudget owned(budget_ptr);
  WorkBudget* budget = owned.get();
  const std::size_t kg = chromatic_number(g, budget);
  const std::size_t kh = chromatic_number(h, budget);
  if (kg != kh)
    throw DomainError("chromatic numbers differ: " + std::to_string(kg) + " vs " +
                      std::to_string(kh));
  if (kg < 3) throw DomainError("the product check needs chromatic number at least 3");
  const auto ps = tensor_product(g, h, limits);
  ProductTrivialityResult r;
  r.k = kg;
  enumerate_colorings_unordered(
      ps.product(), r.k,
      [&](const Coloring& c) {
        ++r.total;
        const auto w = classify_proper(ps, c);
        if (!w) {
          ++r.nontrivial;
          if (!r.nontrivial_example) r.nontrivial_example = c;
        } else if (w->coordinate == 0) {
          ++r.by_first;
        } else {
          ++r.by_second;
        }
        return true;
      },
      budget);
  return r;
}

}  // namespace powercolor
