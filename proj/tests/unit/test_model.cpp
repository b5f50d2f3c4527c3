#include <doctest.h>

#include <numeric>

#include "icode/model.hpp"
#include "sweep.hpp"

using namespace icode;

namespace {

std::string diagnostic(Case c, std::size_t K, std::size_t D, std::optional<std::size_t> l = {}) {
  try {
    make_case_params(c, K, D, l);
  } catch (const InvalidParameters& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("case names") {
  CHECK(parse_case("caseI") == Case::I);
  CHECK(parse_case("viii") == Case::VIII);
  CHECK(parse_case("X") == Case::X);
  CHECK(parse_case("general") == Case::General);
  CHECK_FALSE(parse_case("XI").has_value());
  CHECK_FALSE(parse_case("").has_value());
  for (Case c : sweep::kCases) CHECK(parse_case(to_string(c)) == c);
  CHECK_FALSE(uses_lambda(Case::IV));
  CHECK(uses_lambda(Case::V));
}

TEST_CASE("parameter validation names the violated condition") {
  CHECK(diagnostic(Case::I, 6, 4) == "D must divide K");
  CHECK(diagnostic(Case::I, 4, 4) == "D must satisfy 1 <= D <= K-1");
  CHECK(diagnostic(Case::II, 5, 2) == "K-D must divide K");
  CHECK(diagnostic(Case::III, 20, 13) == "D-K/2 must divide K/2");
  CHECK(diagnostic(Case::III, 20, 10) == "D-K/2 must be at least 1");
  CHECK(diagnostic(Case::IV, 20, 7) == "K/2-D must divide D");
  CHECK(diagnostic(Case::V, 21, 4, 3) == "lambda must divide D");
  CHECK(diagnostic(Case::V, 21, 4) == "lambda is required for this case");
  CHECK(diagnostic(Case::I, 20, 4, 1) == "lambda is not a parameter of this case");
  CHECK(diagnostic(Case::VI, 21, 15, 1) == "K-D must divide K-lambda");
  CHECK(diagnostic(Case::VI, 21, 16, 1).empty());
  CHECK(diagnostic(Case::VII, 18, 5, 2) == "lambda must divide D");
  CHECK(diagnostic(Case::VIII, 24, 19, 2) == "lambda must divide K-D");
  CHECK(diagnostic(Case::IX, 19, 5, 2) == "lambda must divide D");
  CHECK(diagnostic(Case::X, 28, 18, 3) == "lambda must divide K-D");
}

TEST_CASE("derived quantities") {
  auto p = make_case_params(Case::IV, 20, 8);
  CHECK(p.m == 2);
  CHECK(p.p == 4);
  CHECK(p.n == 10);
  CHECK(p.n == 2 * p.p + 2);
  p = make_case_params(Case::VIII, 24, 19, 1);
  CHECK(p.m == 5);
  CHECK(p.p == 4);
  CHECK(p.s == 5);
  p = make_case_params(Case::IX, 19, 5, 1);
  CHECK(p.n == 4);
  CHECK(p.p == 4);
  CHECK(p.p == 19 % 5);
  p = make_case_params(Case::X, 28, 18, 2);
  CHECK(p.m == 10);
  CHECK(p.p == 8);
  CHECK(p.q == 3);
  CHECK(p.s == 5);
}

TEST_CASE("general antidote window") {
  CHECK(antidotes_general(5, 1, 2, 1) == IndexSet{2, 3, 5});
  CHECK(antidotes_general(5, 0, 4, 3) == IndexSet{1, 2, 4, 5});
  CHECK(antidotes_general(20, 0, 4, 17) == IndexSet{1, 18, 19, 20});
  CHECK_THROWS_AS(antidotes_general(5, 2, 3, 1), InvalidParameters);
}

TEST_CASE("case antidote patterns") {
  CHECK(antidotes_for_case(make_case_params(Case::VIII, 24, 19, 1), 1) ==
        IndexSet{2, 7, 8, 13, 14, 19, 20});
  CHECK(antidotes_for_case(make_case_params(Case::V, 21, 4, 1), 18) == IndexSet{1, 19, 20, 21});
  CHECK(antidotes_for_case(make_case_params(Case::V, 21, 4, 1), 16) == IndexSet{20});
  CHECK(antidotes_for_case(make_case_params(Case::I, 6, 2), 5) == IndexSet{1});
  CHECK(antidotes_for_case(make_case_params(Case::III, 20, 12), 1) == IndexSet{3, 11, 13});
  CHECK(antidotes_for_case(make_case_params(Case::II, 20, 16), 1) == IndexSet{5, 9, 13, 17});
}

TEST_CASE("case patterns sit inside the one-sided window") {
  for (const auto& p : sweep::valid_instances(40)) {
    for (std::size_t k = 1; k <= p.K; ++k) {
      const IndexSet a = antidotes_for_case(p, k);
      const IndexSet w = antidotes_general(p.K, 0, p.D, k);
      REQUIRE(std::includes(w.begin(), w.end(), a.begin(), a.end()));
      REQUIRE_FALSE(std::binary_search(a.begin(), a.end(), k));
      if (p.kind == Case::VI || p.kind == Case::X) REQUIRE(a == w);
      switch (p.kind) {
        case Case::I: REQUIRE(a.size() == 1); break;
        case Case::II: REQUIRE(a.size() == p.n - 1); break;
        case Case::III: REQUIRE(a.size() == 3); break;
        case Case::IV:
        case Case::VII: REQUIRE(a.size() == p.p); break;
        default: break;
      }
    }
  }
}

TEST_CASE("problem spec") {
  CHECK_THROWS_AS(ProblemSpec(3, {{2}, {2}, {}}), InvalidParameters);
  CHECK_THROWS_AS(ProblemSpec(3, {{4}, {}, {}}), InvalidParameters);
  CHECK_THROWS_AS(ProblemSpec(3, {{2}}), InvalidParameters);
  const ProblemSpec g(3, {{3, 2, 2}, {}, {1}});
  CHECK(g.antidotes(1) == IndexSet{2, 3});
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(3, 1));
  CHECK(g.has_edge(1, 3));
  const auto h = g.without_edge(1, 3);
  CHECK(h.edge_count() == 2);
  CHECK_FALSE(h.has_edge(1, 3));
  CHECK(ProblemSpec::complete(4).edge_count() == 12);
  CHECK(ProblemSpec::empty(4).edge_count() == 0);
  CHECK(ProblemSpec::one_sided(6, 2).edge_count() == 12);
  CHECK(ProblemSpec::from_case(make_case_params(Case::I, 6, 2)).edge_count() == 6);
}

TEST_CASE("capacity") {
  CHECK(capacity_general(5, 1, 1) == Rational{2, 5});
  CHECK(capacity_general(5, 2, 2) == Rational{1, 1});
  CHECK(capacity_general(20, 0, 4) == Rational{1, 16});
  CHECK(capacity_one_sided(20, 16) == Rational{1, 4});
  CHECK(capacity_one_sided(4, 3) == Rational{1, 1});
  CHECK(capacity_one_sided(19, 5) == Rational{1, 14});
  CHECK_THROWS_AS(capacity_general(5, 3, 2), InvalidParameters);
  CHECK_THROWS_AS(capacity_one_sided(5, 5), InvalidParameters);
  CHECK(Rational{1, 1}.to_string() == "1");
  CHECK(Rational{2, 5}.to_string() == "2/5");
  CHECK(Rational::make(4, 10) == Rational{2, 5});
}

TEST_CASE("capacity formulas agree for one-sided windows up to K=100") {
  for (std::size_t K = 2; K <= 100; ++K) {
    for (std::size_t D = 1; D < K; ++D) {
      const Rational a = capacity_one_sided(K, D);
      REQUIRE(a == capacity_general(K, 0, D));
      REQUIRE(std::gcd(a.num, a.den) == 1);
    }
  }
  for (std::size_t K = 1; K <= 40; ++K)
    for (std::size_t U = 0; U < K; ++U)
      for (std::size_t D = 0; U + D < K; ++D) {
        const Rational c = capacity_general(K, U, D);
        REQUIRE(std::gcd(c.num, c.den) == 1);
        REQUIRE(c.num <= c.den);
        REQUIRE(capacity_general(K, D, U) == c);
      }
}
