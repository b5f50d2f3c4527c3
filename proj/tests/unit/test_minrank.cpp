#include <doctest.h>

#include <random>

#include "icode/minrank.hpp"
#include "oracles.hpp"
#include "sweep.hpp"

using namespace icode;

namespace {

ProblemSpec random_graph(std::mt19937_64& rng, std::size_t K, double density) {
  std::bernoulli_distribution edge(density);
  std::vector<IndexSet> a(K);
  for (std::size_t i = 1; i <= K; ++i)
    for (std::size_t j = 1; j <= K; ++j)
      if (i != j && edge(rng)) a[i - 1].push_back(j);
  return ProblemSpec(K, a);
}

void check_witness(const ProblemSpec& g, const MinrankResult& r) {
  REQUIRE(fits(r.witness, g));
  REQUIRE(rank(r.witness) == r.value);
  REQUIRE(oracle::rank(r.witness) == r.value);
}

}  // namespace

TEST_CASE("fits") {
  CHECK(fits(BitMatrix::identity(4), ProblemSpec::empty(4)));
  CHECK(fits(BitMatrix::identity(4), ProblemSpec::one_sided(4, 2)));
  CHECK(fits(BitMatrix::ones(3, 3), ProblemSpec::complete(3)));
  CHECK_FALSE(fits(BitMatrix::ones(3, 3), ProblemSpec::empty(3)));
  CHECK_FALSE(fits(BitMatrix(3, 3), ProblemSpec::complete(3)));
  CHECK_THROWS_AS(fits(BitMatrix::identity(3), ProblemSpec::empty(4)), DimensionError);
}

TEST_CASE("minrank of small named graphs") {
  auto r = minrank(ProblemSpec::complete(3));
  CHECK(r.value == 1);
  check_witness(ProblemSpec::complete(3), r);
  r = minrank(ProblemSpec::empty(3));
  CHECK(r.value == 3);
  CHECK(r.witness == BitMatrix::identity(3));

  const auto g1 = ProblemSpec::from_case(make_case_params(Case::I, 6, 2));
  r = minrank(g1);
  CHECK(r.value == oracle::minrank(g1));
  CHECK(r.value == 4);
  check_witness(g1, r);

  const auto g2 = ProblemSpec::from_case(make_case_params(Case::II, 6, 4));
  r = minrank(g2);
  CHECK(r.value == oracle::minrank(g2));
  CHECK(r.value == 2);
  check_witness(g2, r);
}

TEST_CASE("minrank agrees with full enumeration on random graphs") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  int compared = 0;
  while (compared < 150) {
    const ProblemSpec g = random_graph(rng, size(rng), 0.35);
    if (g.edge_count() > 12) continue;
    const auto r = minrank(g);
    REQUIRE(r.value == oracle::minrank(g));
    check_witness(g, r);
    ++compared;
  }
}

TEST_CASE("removing an edge never lowers minrank") {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<std::size_t> size(2, 7);
  int done = 0;
  while (done < 1000) {
    const ProblemSpec g = random_graph(rng, size(rng), 0.3);
    if (g.edge_count() == 0 || g.edge_count() > 16) continue;
    const auto edges = g.edges();
    const auto e = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
    REQUIRE(minrank(g.without_edge(e.first, e.second)).value >= minrank(g).value);
    ++done;
  }
}

TEST_CASE("smallest instance of each case has minrank K-D") {
  for (Case c : sweep::kCases) {
    CAPTURE(to_string(c));
    bool found = false;
    for (const auto& p : sweep::valid_instances(30)) {
      if (p.kind != c) continue;
      const ProblemSpec g = ProblemSpec::from_case(p);
      if (g.edge_count() > 26) continue;
      CAPTURE(p.K);
      CAPTURE(p.D);
      const auto r = minrank(g);
      CHECK(r.value == p.K - p.D);
      check_witness(g, r);
      found = true;
      break;
    }
    CHECK(found);
  }
}

TEST_CASE("a working code bounds minrank from above") {
  for (const auto& p : sweep::valid_instances(12)) {
    const ProblemSpec g = ProblemSpec::from_case(p);
    if (g.edge_count() > 20) continue;
    CHECK(minrank(g).value <= p.K - p.D);
  }
}

TEST_CASE("search limits are reported, never truncated") {
  const auto g = ProblemSpec::one_sided(10, 5);
  CHECK_THROWS_AS(minrank(g), Inconclusive);
  MinrankLimits tiny;
  tiny.max_nodes = 5;
  CHECK_THROWS_AS(minrank(ProblemSpec::one_sided(6, 2), tiny), Inconclusive);
}

TEST_CASE("criticality") {
  const auto r1 = is_critical(ProblemSpec::from_case(make_case_params(Case::I, 6, 2)));
  CHECK(r1.minrank == 4);
  CHECK(r1.edges.size() == 6);
  CHECK(r1.critical);
  for (const auto& e : r1.edges) CHECK(e.critical);

  const auto full = ProblemSpec::one_sided(6, 2);
  const auto r2 = is_critical(full);
  CHECK(r2.minrank == 4);
  CHECK_FALSE(r2.critical);
  for (const auto& e : r2.edges) {
    CHECK(e.minrank_without == oracle::minrank(full.without_edge(e.i, e.j)));
    // The window's nearest neighbour edges are the redundant ones.
    if (e.j == e.i % 6 + 1) CHECK_FALSE(e.critical);
  }

  const auto r3 = is_critical(ProblemSpec::empty(3));
  CHECK(r3.edges.empty());
  CHECK(r3.critical);
}
