#include <doctest.h>

#include <algorithm>
#include <bit>
#include <iterator>

#include "powercolor/errors.hpp"
#include "powercolor/coloring.hpp"
#include "powercolor/partition.hpp"
#include "powercolor/triviality.hpp"

using namespace powercolor;

namespace {

Block intersect(const Block& a, const Block& b) {
  Block out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool subset(const Block& a, const Block& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace

TEST_CASE("partition normalization and validation") {
  Partition p(4, {{3, 1}, {0}, {2}});
  CHECK(p.blocks() == std::vector<Block>{{0}, {1, 3}, {2}});
  CHECK(p.block_of(3) == 1);
  CHECK_THROWS_AS(Partition(3, {{0, 1}}), DomainError);
  CHECK_THROWS_AS(Partition(3, {{0, 1}, {1, 2}}), DomainError);
  CHECK_THROWS_AS(Partition(2, {{0}, {}, {1}}), DomainError);
  CHECK(Partition::discrete(3).block_count() == 3);
  CHECK(Partition::trivial(3).block_count() == 1);
  CHECK(Partition::trivial(0).block_count() == 0);
  CHECK(partition_from_json(to_json(p)) == p);
}

TEST_CASE("partition lattice") {
  const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203};
  for (std::size_t n = 0; n <= 6; ++n) CHECK(all_partitions(n).size() == bell[n]);
  const auto parts = all_partitions(4);
  for (const auto& a : parts) {
    CHECK(refines(Partition::discrete(4), a));
    CHECK(refines(a, Partition::trivial(4)));
    CHECK(refines(a, a));
    for (const auto& b : parts) {
      const auto m = meet(a, b);
      CHECK(refines(m, a));
      CHECK(refines(m, b));
      CHECK(m == meet(b, a));
      // The meet is the coarsest common refinement.
      for (const auto& c : parts)
        if (refines(c, a) && refines(c, b)) CHECK(refines(c, m));
    }
  }
  CHECK_THROWS_AS(meet(Partition::discrete(2), Partition::discrete(3)), DomainError);
}

TEST_CASE("index blocks follow the lattice") {
  const auto g = complete_graph(3);
  const auto ps = power(g, 3);
  const auto parts = all_partitions(3);
  for (const auto& c : all_colorings(ps.product(), 3)) {
    const auto w = extract_ultrafilter(ps, c);
    for (const auto& a : parts) {
      const auto ia = index_block(ps, c, a);
      CHECK(std::binary_search(ia.begin(), ia.end(), w.generator));
      for (const auto& b : parts) {
        const auto ib = index_block(ps, c, b);
        CHECK(index_block(ps, c, meet(a, b)) == intersect(ia, ib));
        if (refines(a, b)) CHECK(subset(ia, ib));
      }
    }
  }
}

TEST_CASE("restriction to a partition identifies coordinates") {
  const auto ps = power(complete_graph(3), 2);
  const auto c = ultrafilter_coloring(complete_graph(3), {{2, 0, 1}, 3}, 1, 2);
  auto r = restrict_to_partition(ps, c, Partition::trivial(2));
  CHECK(r.space.product().order() == 3);
  CHECK(r.coloring.colors == std::vector<Color>{2, 0, 1});
  CHECK_THROWS_AS(restrict_to_partition(ps, c, Partition::discrete(3)), DomainError);
  Coloring improper{std::vector<Color>(9, 0), 3};
  CHECK_THROWS_AS(restrict_to_partition(ps, improper, Partition::trivial(2)), ImproperColoring);
}

TEST_CASE("ultrafilter extraction round trips") {
  const auto g = complete_graph(3);
  const Coloring phi{{1, 2, 0}, 3};
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t i = 0; i < n; ++i) {
      const auto c = ultrafilter_coloring(g, phi, i, n);
      const auto w = extract_ultrafilter(power(g, n), c);
      CHECK(w.generator == i);
      CHECK(w.factor_coloring == phi);
    }
  CHECK_THROWS_AS(ultrafilter_coloring(g, phi, 3, 3), DomainError);
  CHECK_THROWS_AS(ultrafilter_coloring(g, {{0, 0, 1}, 3}, 0, 2), ImproperColoring);
  ProductLimits tiny{.max_vertices = 10, .max_edges = 1000};
  CHECK_THROWS_AS(ultrafilter_coloring(g, phi, 0, 3, tiny), CapacityError);
}

TEST_CASE("nontrivial colorings have no ultrafilter") {
  const auto g = complete_graph(2);
  const auto ps = power(g, 3);
  bool found = false;
  for (const auto& c : all_colorings(ps.product(), 2)) {
    if (classify_coloring(ps, c)) continue;
    found = true;
    CHECK_THROWS_AS(extract_ultrafilter(ps, c), NontrivialColoring);
  }
  CHECK(found);
}

TEST_CASE("ultrafilters on finite index sets are principal") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto f = principal_filter(i, n);
      CHECK(is_ultrafilter(f, n));
      CHECK(f.size() == std::size_t{1} << (n - 1));
    }
    // Exhaustive over all set families.
    if (n <= 3) {
      const std::size_t subsets = std::size_t{1} << n;
      std::size_t ultra = 0;
      for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
        std::vector<IndexMask> family;
        for (IndexMask s = 0; s < subsets; ++s)
          if (fam >> s & 1) family.push_back(s);
        if (!is_ultrafilter(family, n)) continue;
        ++ultra;
        IndexMask common = static_cast<IndexMask>(subsets - 1);
        for (auto s : family) common &= s;
        REQUIRE(std::popcount(common) == 1);
        CHECK(family == principal_filter(static_cast<std::size_t>(std::countr_zero(common)), n));
      }
      CHECK(ultra == n);
    }
  }
  const std::size_t idx[] = {0, 2};
  CHECK(to_mask(idx) == 0b101u);
  const IndexMask gens[] = {0b011};
  CHECK(upward_closure(gens, 2) == std::vector<IndexMask>{0b11});
  CHECK_FALSE(is_ultrafilter(upward_closure(gens, 3), 3));
}
