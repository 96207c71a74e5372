#include "powercolor/partition.hpp"

#include <algorithm>
#include <bit>

#include "powercolor/errors.hpp"
#include "powercolor/triviality.hpp"

namespace powercolor {

Partition::Partition(std::size_t n, std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  block_of_.assign(n, kNone);
  for (auto& b : blocks_) {
    if (b.empty()) throw DomainError("partition blocks must be non-empty");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Block& a, const Block& b) { return a.front() < b.front(); });
  for (std::size_t j = 0; j < blocks_.size(); ++j)
    for (auto i : blocks_[j]) {
      if (i >= n) throw DomainError("index " + std::to_string(i) + " outside the index set");
      if (block_of_[i] != kNone)
        throw DomainError("index " + std::to_string(i) + " lies in two blocks");
      block_of_[i] = j;
    }
  for (std::size_t i = 0; i < n; ++i)
    if (block_of_[i] == kNone) throw DomainError("index " + std::to_string(i) + " is uncovered");
}

Partition Partition::discrete(std::size_t n) {
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks.push_back({i});
  return Partition(n, std::move(blocks));
}

Partition Partition::trivial(std::size_t n) {
  if (n == 0) return Partition(0, {});
  Block all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return Partition(n, {std::move(all)});
}

std::vector<Partition> all_partitions(std::size_t n) {
  std::vector<Partition> out;
  if (n == 0) {
    out.push_back(Partition(0, {}));
    return out;
  }
  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<std::size_t> a(n, 0);
  while (true) {
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == blocks.size()) blocks.emplace_back();
      blocks[a[i]].push_back(i);
    }
    out.emplace_back(n, std::move(blocks));
    std::size_t i = n;
    while (i-- > 1) {
      const std::size_t top = *std::max_element(a.begin(), a.begin() + i);
      if (a[i] <= top) break;
    }
    if (i == 0) return out;
    ++a[i];
    std::fill(a.begin() + i + 1, a.end(), 0);
  }
}

namespace {
void check_same(const Partition& a, const Partition& b) {
  if (a.index_count() != b.index_count())
    throw DomainError("partitions of index sets of different sizes");
}
}  // namespace

bool refines(const Partition& fine, const Partition& coarse) {
  check_same(fine, coarse);
  for (const auto& b : fine.blocks()) {
    const std::size_t target = coarse.block_of(b.front());
    for (auto i : b)
      if (coarse.block_of(i) != target) return false;
  }
  return true;
}

Partition meet(const Partition& a, const Partition& b) {
  check_same(a, b);
  std::vector<Block> blocks;
  for (const auto& x : a.blocks())
    for (const auto& y : b.blocks()) {
      Block both;
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(both));
      if (!both.empty()) blocks.push_back(std::move(both));
    }
  return Partition(a.index_count(), std::move(blocks));
}

RestrictedColoring restrict_to_partition(const ProductSpace& ps, const Coloring& c,
                                         const Partition& p) {
  if (!ps.is_power()) throw DomainError("restriction needs a power of a single graph");
  if (p.index_count() != ps.factor_count())
    throw DomainError("partition index set does not match the exponent");
  if (!is_proper(ps.product(), c)) throw ImproperColoring("restriction needs a proper coloring");
  auto space = power(ps.factor(0), p.block_count());
  const auto strides = ps.strides();
  Coloring out{std::vector<Color>(space.product().order()), c.palette};
  for (Vertex w = 0; w < out.size(); ++w) {
    std::size_t v = 0;
    for (std::size_t xi = 0; xi < p.index_count(); ++xi)
      v += space.coordinate(w, p.block_of(xi)) * strides[xi];
    out.colors[w] = c[static_cast<Vertex>(v)];
  }
  return {std::move(space), std::move(out), p.blocks()};
}

Block index_block(const ProductSpace& ps, const Coloring& c, const Partition& p) {
  const auto rc = restrict_to_partition(ps, c, p);
  const auto w = classify_coloring(rc.space, rc.coloring);
  if (!w) throw NontrivialColoring("the restricted coloring is not trivial");
  return rc.block_order[w->coordinate];
}

PrincipalUltrafilterWitness extract_ultrafilter(const ProductSpace& ps, const Coloring& c) {
  const std::size_t n = ps.factor_count();
  const Block block = index_block(ps, c, Partition::discrete(n));
  PrincipalUltrafilterWitness out;
  out.generator = block.front();
  const Graph& g = ps.factor(0);
  out.factor_coloring = {std::vector<Color>(g.order()), c.palette};
  std::vector<Vertex> diagonal(n);
  for (Vertex u = 0; u < g.order(); ++u) {
    std::fill(diagonal.begin(), diagonal.end(), u);
    out.factor_coloring.colors[u] = c[ps.encode(diagonal)];
  }
  for (Vertex v = 0; v < c.size(); ++v)
    if (c[v] != out.factor_coloring[ps.coordinate(v, out.generator)])
      throw InternalError("extracted ultrafilter does not reproduce the coloring");
  return out;
}

Coloring ultrafilter_coloring(const Graph& g, const Coloring& phi, std::size_t i,
                              std::size_t n, const ProductLimits& limits) {
  if (!is_proper(g, phi)) throw ImproperColoring("the factor coloring must be proper");
  if (i >= n) throw DomainError("generator index must be below the exponent");
  const std::size_t base = g.order();
  std::size_t total = 1;
  std::size_t stride = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (base != 0 && total > limits.max_vertices / base)
      throw CapacityError("power exceeds the vertex limit");
    total *= base;
    if (j > i) stride *= base;
  }
  Coloring out{std::vector<Color>(total), phi.palette};
  for (std::size_t v = 0; v < total; ++v)
    out.colors[v] = phi[static_cast<Vertex>((v / stride) % base)];
  return out;
}

IndexMask to_mask(std::span<const std::size_t> indices) {
  IndexMask m = 0;
  for (auto i : indices) {
    if (i >= 20) throw DomainError("index masks support at most 20 indices");
    m |= IndexMask{1} << i;
  }
  return m;
}

namespace {
void check_small(std::size_t n) {
  if (n > 20) throw DomainError("index masks support at most 20 indices");
}
}  // namespace

std::vector<IndexMask> upward_closure(std::span<const IndexMask> generators, std::size_t n) {
  check_small(n);
  std::vector<IndexMask> out;
  for (IndexMask s = 0; s < (IndexMask{1} << n); ++s)
    if (std::any_of(generators.begin(), generators.end(),
                    [s](IndexMask g) { return (g & ~s) == 0; }))
      out.push_back(s);
  return out;
}

bool is_ultrafilter(std::span<const IndexMask> family, std::size_t n) {
  check_small(n);
  const IndexMask full = (IndexMask{1} << n) - 1;
  std::vector<char> in(std::size_t{1} << n, 0);
  for (auto s : family) {
    if ((s & ~full) != 0) return false;
    in[s] = 1;
  }
  if (family.empty() || in[0]) return false;
  for (IndexMask s = 0; s <= full; ++s) {
    if (in[s] == in[full & ~s]) return false;
    if (!in[s]) continue;
    for (IndexMask t = 0; t <= full; ++t) {
      if ((s & ~t) == 0 && !in[t]) return false;
      if (in[t] && !in[s & t]) return false;
    }
  }
  return true;
}

std::vector<IndexMask> principal_filter(std::size_t i, std::size_t n) {
  check_small(n);
  if (i >= n) throw DomainError("generator index out of range");
  const IndexMask gen = IndexMask{1} << i;
  return upward_closure(std::span<const IndexMask>(&gen, 1), n);
}

nlohmann::json to_json(const Partition& p) { return p.blocks(); }

Partition partition_from_json(const nlohmann::json& j) {
  try {
    auto blocks = j.get<std::vector<Block>>();
    std::size_t n = 0;
    for (const auto& b : blocks)
      for (auto i : b) n = std::max(n, i + 1);
    return Partition(n, std::move(blocks));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("partition JSON: ") + e.what());
  }
}

}  // namespace powercolor
