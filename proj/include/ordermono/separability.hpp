#pragma once

// Order-density predicates on finite preordered spaces and the
// multi-utilities they induce.
//
// Separability asks for a *countable* dense subset. Every subset of a finite
// space is countable, so on the spaces handled here separability reduces to
// the density predicates below, evaluated for a concrete Z.

#include <optional>
#include <string_view>
#include <utility>

#include "ordermono/core_order.hpp"
#include "ordermono/monotones.hpp"

namespace ordermono {

enum class DensityKind {
  Order,        ///< x < y  =>  x < z < y
  Debreu,       ///< x < y  =>  x <= z <= y
  Upper,        ///< x, y incomparable  =>  x incomparable to z, z < y
  DebreuUpper,  ///< x, y incomparable  =>  x incomparable to z, z <= y
};

std::string_view to_string(DensityKind kind);
/// Accepts "order", "debreu", "upper", "debreu-upper".
DensityKind parse_density_kind(std::string_view text);

struct DensityReport {
  bool order_dense = false;
  bool debreu_dense = false;
  bool upper_dense = false;
  bool debreu_upper_dense = false;
  /// First ordered pair, row-major, that breaks any of the four predicates.
  std::optional<std::pair<Element, Element>> first_violation;

  bool holds(DensityKind kind) const;
};

/// All four predicates by exhaustive scan over ordered pairs. The upper
/// predicates range over ordered pairs, so both directions of every
/// incomparable pair need a witness.
DensityReport density_report(const FinitePreorder& P, const ElementSet& Z);

/// {chi_{i(d)}, chi_{r(d)}} for d in D, ascending d. Requires D Debreu dense
/// and Debreu upper dense. An empty D (possible only when every pair is
/// equivalent) yields the single constant-zero function.
MultiUtility multi_utility_from_dense(const FinitePreorder& P, const ElementSet& D);

/// {u} u {chi_{i(d)}} for d in D. Requires u strict and D Debreu upper dense.
MultiUtility multi_utility_from_strict_and_upper_dense(const FinitePreorder& P,
                                                       const ValueTable& u,
                                                       const ElementSet& D);

/// Inclusion-minimal Z satisfying `kind`, found by greedy removal from X in
/// descending index order. Empty optional when X itself fails (order density
/// fails on any finite space with a covering pair x < y).
std::optional<ElementSet> greedy_minimal_dense(const FinitePreorder& P, DensityKind kind);

}  // namespace ordermono
