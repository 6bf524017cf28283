#include <random>

#include "doctest.h"
#include "ordermono/error.hpp"
#include "ordermono/monotones.hpp"
#include "ordermono/separability.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace ordermono;

namespace {

// Straight from the definitions, with upper density required in both
// directions.
DensityReport oracle_report(const FinitePreorder& P, const ElementSet& Z) {
  using oracle::inc;
  using oracle::lt;
  DensityReport r{true, true, true, true, std::nullopt};
  const auto zs = Z.members();
  for (Element x = 0; x < P.size(); ++x)
    for (Element y = 0; y < P.size(); ++y) {
      bool od = false, dd = false, ud = false, dud = false;
      for (Element z : zs) {
        od = od || (lt(P, x, z) && lt(P, z, y));
        dd = dd || (P.leq(x, z) && P.leq(z, y));
        ud = ud || (inc(P, x, z) && lt(P, z, y));
        dud = dud || (inc(P, x, z) && P.leq(z, y));
      }
      if (lt(P, x, y)) {
        r.order_dense = r.order_dense && od;
        r.debreu_dense = r.debreu_dense && dd;
      }
      if (inc(P, x, y)) {
        r.upper_dense = r.upper_dense && ud;
        r.debreu_upper_dense = r.debreu_upper_dense && dud;
      }
    }
  return r;
}

ElementSet random_subset(gen::Rng& rng, std::size_t n) {
  ElementSet Z(n);
  for (Element x = 0; x < n; ++x)
    if (gen::coin(rng)) Z.insert(x);
  return Z;
}

}  // namespace

TEST_CASE("density examples") {
  auto chain = FinitePreorder::chain(3);
  auto rep = density_report(chain, ElementSet(3, {1}));
  CHECK_FALSE(rep.order_dense);
  CHECK(rep.debreu_dense);
  CHECK(rep.first_violation == std::make_pair(Element{0}, Element{1}));

  auto anti = FinitePreorder::antichain(2);
  auto empty = density_report(anti, ElementSet(2));
  CHECK_FALSE(empty.upper_dense);
  CHECK(empty.first_violation == std::make_pair(Element{0}, Element{1}));

  CHECK_THROWS_AS(density_report(chain, ElementSet(2)), DimensionMismatch);
}

TEST_CASE("the whole ground set is always Debreu dense and Debreu upper dense") {
  gen::Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    auto P = gen::random_preorder(rng, gen::uniform_index(rng, 1, 6));
    const auto rep = density_report(P, ElementSet::full(P.size()));
    CHECK(rep.debreu_dense);
    CHECK(rep.debreu_upper_dense);
  }
}

TEST_CASE("density flags agree with the definitions and their implications") {
  gen::Rng rng(32);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = gen::uniform_index(rng, 1, 6);
    auto P = gen::random_preorder(rng, n);
    auto Z = random_subset(rng, n);
    const auto rep = density_report(P, Z);
    const auto ref = oracle_report(P, Z);
    CHECK(rep.order_dense == ref.order_dense);
    CHECK(rep.debreu_dense == ref.debreu_dense);
    CHECK(rep.upper_dense == ref.upper_dense);
    CHECK(rep.debreu_upper_dense == ref.debreu_upper_dense);
    if (rep.order_dense) CHECK(rep.debreu_dense);
    if (rep.upper_dense) CHECK(rep.debreu_upper_dense);
    const bool all = rep.order_dense && rep.debreu_dense && rep.upper_dense && rep.debreu_upper_dense;
    CHECK(all == !rep.first_violation.has_value());
  }
}

TEST_CASE("multi-utility from a dense set") {
  auto chain = FinitePreorder::chain(2);
  const auto U = multi_utility_from_dense(chain, ElementSet::full(2));
  CHECK(U.size() == 4);
  CHECK(is_multi_utility(chain, U).ok);

  auto single = FinitePreorder::antichain(1);
  CHECK(is_multi_utility(single, multi_utility_from_dense(single, ElementSet::full(1))).ok);

  auto anti = FinitePreorder::antichain(2);
  CHECK_THROWS_AS(multi_utility_from_dense(anti, ElementSet(2)), PreconditionError);

  gen::Rng rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    auto P = gen::random_preorder(rng, gen::uniform_index(rng, 1, 6));
    const auto V = multi_utility_from_dense(P, ElementSet::full(P.size()));
    CHECK(oracle::represents(P, V));
    CHECK(oracle::is_injective(P, injective_from_multi_utility(P, V)));
  }
}

TEST_CASE("multi-utility from a strict monotone and an upper dense set") {
  auto chain = FinitePreorder::chain(3);
  const ValueTable u(std::vector<Rational>{0, 1, 2});
  CHECK(multi_utility_from_strict_and_upper_dense(chain, u, ElementSet(3)).size() == 1);
  CHECK(is_multi_utility(chain, multi_utility_from_strict_and_upper_dense(chain, u, ElementSet(3))).ok);

  auto anti = FinitePreorder::antichain(2);
  const ValueTable v(std::vector<Rational>{0, 1});
  const auto W = multi_utility_from_strict_and_upper_dense(anti, v, ElementSet::full(2));
  CHECK(W.size() == 3);
  CHECK(is_multi_utility(anti, W).ok);

  CHECK_THROWS_AS(multi_utility_from_strict_and_upper_dense(anti, v, ElementSet(2)),
                  PreconditionError);
  CHECK_THROWS_AS(multi_utility_from_strict_and_upper_dense(
                      chain, ValueTable(std::vector<Rational>{0, 0, 0}), ElementSet(3)),
                  PreconditionError);

  gen::Rng rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    auto P = gen::random_preorder(rng, gen::uniform_index(rng, 1, 6));
    const auto c = injective_from_multi_utility(P, up_set_indicators(P));
    const auto V = multi_utility_from_strict_and_upper_dense(P, c, ElementSet::full(P.size()));
    CHECK(oracle::represents(P, V));
  }
}

TEST_CASE("greedy minimal dense sets are minimal") {
  auto chain = FinitePreorder::chain(3);
  auto Z = greedy_minimal_dense(chain, DensityKind::Debreu);
  REQUIRE(Z);
  CHECK(density_report(chain, *Z).debreu_dense);
  CHECK(greedy_minimal_dense(FinitePreorder::antichain(1), DensityKind::Upper)->empty());
  // A chain has gaps, so no subset is order dense.
  CHECK_FALSE(greedy_minimal_dense(chain, DensityKind::Order));

  gen::Rng rng(35);
  for (int trial = 0; trial < 150; ++trial) {
    auto P = gen::random_preorder(rng, gen::uniform_index(rng, 1, 6));
    for (auto kind : {DensityKind::Order, DensityKind::Debreu, DensityKind::Upper,
                      DensityKind::DebreuUpper}) {
      const auto full_ok = density_report(P, ElementSet::full(P.size())).holds(kind);
      const auto M = greedy_minimal_dense(P, kind);
      CHECK(M.has_value() == full_ok);
      if (!M) continue;
      CHECK(density_report(P, *M).holds(kind));
      for (Element x : M->members()) {
        auto smaller = *M;
        smaller.erase(x);
        CHECK_FALSE(density_report(P, smaller).holds(kind));
      }
    }
  }
}

TEST_CASE("density kind names") {
  for (auto kind : {DensityKind::Order, DensityKind::Debreu, DensityKind::Upper,
                    DensityKind::DebreuUpper})
    CHECK(parse_density_kind(to_string(kind)) == kind);
  CHECK_THROWS_AS(parse_density_kind("dense"), ParseError);
}
