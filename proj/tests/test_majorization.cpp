#include <cmath>
#include <random>

#include "doctest.h"
#include "ordermono/error.hpp"
#include "ordermono/majorization.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace ordermono;

namespace {

Dist dist(std::initializer_list<const char*> probs) {
  std::vector<Rational> v;
  for (const char* s : probs) v.push_back(parse_rational(s));
  return Dist(std::move(v));
}

std::vector<Rational> rationals(std::initializer_list<const char*> xs) {
  std::vector<Rational> v;
  for (const char* s : xs) v.push_back(parse_rational(s));
  return v;
}

}  // namespace

TEST_CASE("Dist validation") {
  CHECK_THROWS_AS(dist({"1/2", "1/3"}), PreconditionError);
  CHECK_THROWS_AS(dist({"3/2", "-1/2"}), PreconditionError);
  CHECK_THROWS_AS(Dist(std::vector<Rational>{}), PreconditionError);
  CHECK(Dist::uniform(4)[2] == Rational(1, 4));
  CHECK(Dist::dirac(3, 1)[1] == 1);
}

TEST_CASE("decreasing rearrangement") {
  CHECK(decreasing_rearrangement(dist({"1/4", "1/2", "1/4"})) == dist({"1/2", "1/4", "1/4"}));
  CHECK(decreasing_rearrangement(Dist::uniform(3)) == Dist::uniform(3));
  CHECK(decreasing_rearrangement(dist({"0.6", "0.2", "0.2"})) == dist({"0.6", "0.2", "0.2"}));
}

TEST_CASE("Lorenz utilities") {
  CHECK(lorenz_utilities(Dist::dirac(3)) == rationals({"-1", "-1"}));
  CHECK(lorenz_utilities(Dist::uniform(3)) == rationals({"-1/3", "-2/3"}));
  CHECK(lorenz_utilities(dist({"1/2", "1/4", "1/4"})) == rationals({"-1/2", "-3/4"}));
}

TEST_CASE("uncertainty comparison examples") {
  CHECK(uncertainty_compare(Dist::dirac(3), Dist::uniform(3)) == OrderRelation::StrictlyLess);
  CHECK(uncertainty_compare(dist({"0.6", "0.2", "0.2"}), dist({"0.5", "0.4", "0.1"})) ==
        OrderRelation::Incomparable);
  CHECK(uncertainty_compare(dist({"0.6", "0.2", "0.2", "0", "0"}),
                            dist({"0.5", "0.4", "0.1", "0", "0"})) == OrderRelation::Incomparable);
  CHECK(uncertainty_compare(dist({"0.1", "0.5", "0.4"}), dist({"0.4", "0.1", "0.5"})) ==
        OrderRelation::Equivalent);
  CHECK_THROWS_AS(uncertainty_compare(Dist::uniform(2), Dist::uniform(3)), DimensionMismatch);
}

TEST_CASE("majorization comparison examples") {
  CHECK(majorization_compare(Dist::uniform(3), Dist::dirac(3)) == OrderRelation::StrictlyLess);
  CHECK(majorization_compare(dist({"0.4", "0.4", "0.1", "0.1"}),
                             dist({"0.5", "0.25", "0.25", "0"})) == OrderRelation::Incomparable);
  CHECK(majorization_compare(Dist::uniform(2), Dist::dirac(3)) == OrderRelation::StrictlyLess);
}

TEST_CASE("comparisons match the oracle, are permutation invariant, and dual") {
  gen::Rng rng(41);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = gen::uniform_index(rng, 2, 6);
    const auto p = gen::random_dist(rng, n, 6), q = gen::random_dist(rng, n, 6);
    const auto rel = uncertainty_compare(p, q);
    CHECK(rel == oracle::uncertainty(p, q));
    CHECK(uncertainty_compare(gen::permuted(rng, p), gen::permuted(rng, q)) == rel);
    CHECK(majorization_compare(p, q) == reversed(rel));
    CHECK(shannon_entropy(gen::permuted(rng, p)) == doctest::Approx(shannon_entropy(p)).epsilon(1e-14));
  }
}

TEST_CASE("Dirac is least and uniform is greatest") {
  gen::Rng rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = gen::uniform_index(rng, 2, 7);
    const auto p = gen::random_dist(rng, n);
    const auto lo = uncertainty_compare(Dist::dirac(n), p);
    const auto hi = uncertainty_compare(p, Dist::uniform(n));
    CHECK((lo == OrderRelation::StrictlyLess || lo == OrderRelation::Equivalent));
    CHECK((hi == OrderRelation::StrictlyLess || hi == OrderRelation::Equivalent));
  }
}

TEST_CASE("Shannon entropy values") {
  CHECK(shannon_entropy(Dist::dirac(4)) == 0.0);
  CHECK(shannon_entropy(Dist::uniform(5)) == doctest::Approx(std::log(5.0)).epsilon(1e-14));
  CHECK(shannon_entropy(dist({"1/2", "1/4", "1/4"})) ==
        doctest::Approx(1.5 * std::log(2.0)).epsilon(1e-14));
  CHECK(shannon_entropy(dist({"1/2", "1/4", "1/4"}), LogBase::Bits) ==
        doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("transfers") {
  const auto q = transfer(Dist::dirac(2), 0, 1, Rational(1, 4));
  CHECK(q == dist({"3/4", "1/4"}));
  CHECK(uncertainty_compare(Dist::dirac(2), q) == OrderRelation::StrictlyLess);
  CHECK_THROWS_AS(transfer(Dist::dirac(2), 0, 1, Rational(0)), PreconditionError);
  CHECK_THROWS_AS(transfer(Dist::dirac(2), 1, 0, Rational(1, 4)), PreconditionError);
  CHECK_THROWS_AS(transfer(Dist::dirac(2), 0, 1, Rational(1)), PreconditionError);
}

TEST_CASE("random comparable pairs are strictly ordered and deterministic") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 2 + seed % 7;
    const auto [p, q] = random_comparable_pair(seed, n, 1 + seed % 4);
    CHECK(oracle::uncertainty(p, q) == OrderRelation::StrictlyLess);
    CHECK(oracle::entropy(p) < oracle::entropy(q));
    CHECK(oracle::neg_square_sum(p) < oracle::neg_square_sum(q));
    const auto again = random_comparable_pair(seed, n, 1 + seed % 4);
    CHECK(again.first == p);
    CHECK(again.second == q);
  }
}

TEST_CASE("constraint grid") {
  const EnergyFunction E{rationals({"1", "-1", "0"})};
  const auto grid = constraint_grid(E, Rational(1, 4), Rational(1, 4));
  bool has_p = false;
  for (const auto& g : grid) {
    CHECK(expectation(E, g.p) == Rational(1, 4));
    has_p = has_p || g.p == dist({"1/2", "1/4", "1/4"});
  }
  CHECK(has_p);
  CHECK(grid.front().p == dist({"1/4", "0", "3/4"}));
  CHECK(grid.back().p == dist({"5/8", "3/8", "0"}));

  const auto top = constraint_grid(E, Rational(1), Rational(1, 1000));
  REQUIRE(top.size() == 1);
  CHECK(top[0].p == Dist::dirac(3, 0));

  CHECK_THROWS_AS(constraint_grid(E, Rational(2), Rational(1, 10)), InfeasibleConstraint);
  CHECK_THROWS_AS(constraint_grid(EnergyFunction{rationals({"1", "0"})}, 0, Rational(1, 10)),
                  PreconditionError);
  CHECK_THROWS_AS(constraint_grid(E, 0, Rational(0)), PreconditionError);
}

TEST_CASE("constraint grid parametrizes lines with equal leading energies") {
  const EnergyFunction E{rationals({"0", "1", "1"})};
  const auto grid = constraint_grid(E, Rational(1, 2), Rational(1, 10));
  for (const auto& g : grid) {
    CHECK(expectation(E, g.p) == Rational(1, 2));
    CHECK(g.p[0] == Rational(1, 2));
  }
  CHECK(grid.size() == 6);
}

TEST_CASE("maxent audit on the constraint <E> = 1/4") {
  const EnergyFunction E{rationals({"1", "-1", "0"})};
  const auto report = maxent_audit(E, Rational(1, 4));
  CHECK(report.grid_size == 376);
  const auto p = dist({"1/2", "1/4", "1/4"});
  auto contains = [](const std::vector<Dist>& v, const Dist& d) {
    return std::find(v.begin(), v.end(), d) != v.end();
  };
  CHECK(contains(report.maximal_set, p));
  CHECK(contains(report.missed, p));
  CHECK_FALSE(contains(report.entropy_argmax, p));
  for (const auto& d : report.entropy_argmax) CHECK(contains(report.maximal_set, d));

  // The second point of the example is feasible and has larger entropy.
  const auto q = dist({"9/20", "4/20", "7/20"});
  CHECK(expectation(E, q) == Rational(1, 4));
  CHECK(oracle::entropy(q) > oracle::entropy(p));

  const auto single = maxent_audit(E, Rational(1));
  CHECK(single.grid_size == 1);
  CHECK(single.maximal_set == single.entropy_argmax);
  CHECK(single.missed.empty());
}

TEST_CASE("maximal set in the audit matches a brute-force scan") {
  const EnergyFunction E{rationals({"2", "-1", "1/2"})};
  const auto report = maxent_audit(E, Rational(1, 3), Rational(1, 50));
  for (std::size_t a = 0; a < report.grid.size(); ++a) {
    bool dominated = false;
    for (const auto& g : report.grid)
      dominated = dominated || oracle::uncertainty(report.grid[a].p, g.p) == OrderRelation::StrictlyLess;
    CHECK(report.is_maximal[a] == !dominated);
  }
}

TEST_CASE("upper dense witness") {
  const auto x = dist({"0.6", "0.2", "0.2"}), y = dist({"0.5", "0.4", "0.1"});
  const auto z = upper_dense_witness(x, y);
  CHECK(oracle::uncertainty(x, z) == OrderRelation::Incomparable);
  CHECK(oracle::uncertainty(z, y) == OrderRelation::StrictlyLess);
  const auto w = upper_dense_witness(y, x);
  CHECK(oracle::uncertainty(y, w) == OrderRelation::Incomparable);
  CHECK(oracle::uncertainty(w, x) == OrderRelation::StrictlyLess);
  CHECK_THROWS_AS(upper_dense_witness(Dist::dirac(3), Dist::uniform(3)), PreconditionError);
}

TEST_CASE("upper dense witness on random incomparable pairs, with zeros") {
  gen::Rng rng(43);
  int found = 0;
  while (found < 300) {
    const std::size_t n = gen::uniform_index(rng, 3, 6);
    const auto x = gen::random_dist(rng, n, 5), y = gen::random_dist(rng, n, 5);
    if (oracle::uncertainty(x, y) != OrderRelation::Incomparable) continue;
    ++found;
    const auto z = upper_dense_witness(x, y);
    CHECK(oracle::uncertainty(x, z) == OrderRelation::Incomparable);
    CHECK(oracle::uncertainty(z, y) == OrderRelation::StrictlyLess);
  }
}

TEST_CASE("order dense witness in two dimensions") {
  const auto r = order_dense_witness_dim2(dist({"9/10", "1/10"}), dist({"3/5", "2/5"}));
  CHECK(r == dist({"3/4", "1/4"}));
  CHECK(order_dense_witness_dim2(dist({"1", "0"}), dist({"1/2", "1/2"})) == dist({"3/4", "1/4"}));
  CHECK(order_dense_witness_dim2(dist({"0", "1"}), dist({"1/2", "1/2"})) == dist({"3/4", "1/4"}));
  CHECK_THROWS_AS(order_dense_witness_dim2(Dist::uniform(2), Dist::uniform(2)), PreconditionError);
  CHECK_THROWS_AS(order_dense_witness_dim2(Dist::dirac(3), Dist::uniform(3)), PreconditionError);
}

TEST_CASE("equal entropy incomparable pairs") {
  const auto [p, q] = equal_entropy_incomparable_pair(0.8, 3);
  CHECK(std::abs(shannon_entropy(p) - 0.8) <= 1e-9);
  CHECK(std::abs(shannon_entropy(q) - 0.8) <= 1e-9);
  CHECK(oracle::uncertainty(p, q) == OrderRelation::Incomparable);
  for (std::size_t n : {4u, 5u}) {
    const auto [a, b] = equal_entropy_incomparable_pair(1.2, n);
    CHECK(oracle::uncertainty(a, b) == OrderRelation::Incomparable);
  }
  CHECK_THROWS_AS(equal_entropy_incomparable_pair(std::log(3.0), 3), PreconditionError);
  CHECK_THROWS_AS(equal_entropy_incomparable_pair(0.0, 3), PreconditionError);
  CHECK_THROWS_AS(equal_entropy_incomparable_pair(0.5, 2), PreconditionError);
  CHECK_THROWS_AS(equal_entropy_incomparable_pair(0.8, 3, 1e-17), ConvergenceError);
}

TEST_CASE("tensor products") {
  const auto t = tensor(dist({"0.4", "0.4", "0.1", "0.1"}), dist({"0.6", "0.4"}));
  CHECK(t == dist({"0.24", "0.16", "0.24", "0.16", "0.06", "0.04", "0.06", "0.04"}));
  CHECK(tensor(Dist::uniform(2), Dist::uniform(3)) == Dist::uniform(6));
  const auto p = dist({"1/3", "2/3"});
  CHECK(uncertainty_compare(tensor(p, Dist::dirac(2)), dist({"1/3", "0", "2/3", "0"})) ==
        OrderRelation::Equivalent);
}

TEST_CASE("trumping") {
  const auto p = dist({"0.4", "0.4", "0.1", "0.1"}), q = dist({"0.5", "0.25", "0.25", "0"});
  const auto res = trumping_check(p, q, dist({"0.6", "0.4"}));
  CHECK(res.base_relation == OrderRelation::Incomparable);
  CHECK(res.catalyzed);
  CHECK(trumping_check(p, p, dist({"0.6", "0.4"})).catalyzed);
  const auto trivial = trumping_check(p, q, Dist::dirac(1));
  CHECK_FALSE(trivial.catalyzed);
  CHECK(trumping_check(Dist::uniform(2), Dist::dirac(2), Dist::dirac(1)).catalyzed);
}
