#pragma once

// Real-valued representations of finite preordered spaces: classification of
// value tables, multi-utility checks, and the constructions that turn
// separating families of increasing sets, multi-utilities and strict
// monotones into injective monotones and injective multi-utilities.
//
// All values are exact rationals. The geometric aggregation compares sums of
// powers of r, and those comparisons are only trustworthy in exact
// arithmetic.

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ordermono/core_order.hpp"
#include "ordermono/rational.hpp"

namespace ordermono {

/// A function X -> Q given by its value on every element.
class ValueTable {
 public:
  ValueTable() = default;
  explicit ValueTable(std::vector<Rational> values) : values_(std::move(values)) {}

  /// Characteristic function of A.
  static ValueTable indicator(const ElementSet& A);
  static ValueTable constant(std::size_t n, const Rational& value);

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](Element x) const { return values_[x]; }
  Rational& operator[](Element x) { return values_[x]; }
  const std::vector<Rational>& values() const { return values_; }

  friend bool operator==(const ValueTable&, const ValueTable&) = default;

 private:
  std::vector<Rational> values_;
};

/// Nested classes; a later enumerator implies every earlier one except
/// NotMonotone.
enum class MonotoneClass { NotMonotone, Monotone, StrictMonotone, InjectiveMonotone, Utility };

std::string_view to_string(MonotoneClass cls);

/// True when `cls` is `floor` or a stronger class.
constexpr bool at_least(MonotoneClass cls, MonotoneClass floor) {
  return static_cast<int>(cls) >= static_cast<int>(floor);
}

/// Ordered finite family (A_0, ..., A_{N-1}) of subsets of {0..n-1}.
struct IncreasingFamily {
  std::size_t n = 0;
  std::vector<ElementSet> sets;
};

/// Nonempty ordered family of value tables on a common ground set.
using MultiUtility = std::vector<ValueTable>;

/// The strongest class f belongs to, checked over all ordered pairs.
MonotoneClass classify(const FinitePreorder& P, const ValueTable& f);

struct MultiUtilityCheck {
  bool ok = false;
  /// First pair (x, y), row-major, where x <= y disagrees with
  /// "u(x) <= u(y) for every u".
  std::optional<std::pair<Element, Element>> counterexample;
};

MultiUtilityCheck is_multi_utility(const FinitePreorder& P, const MultiUtility& U);

/// (chi_{i(x)})_x, the multi-utility every preordered space has.
MultiUtility up_set_indicators(const FinitePreorder& P);

/// c(x) = sum_k r^k chi_{A_k}(x). Requires 0 < r < 1.
ValueTable geometric_aggregate(const IncreasingFamily& F, const Rational& r);

enum class Divergence {
  XAbsentYPresent,  ///< first differing set contains y but not x
  XPresentYAbsent,
};

struct FirstDivergence {
  std::size_t index;
  Divergence direction;
};

/// Smallest k with chi_{A_k}(x) != chi_{A_k}(y).
std::optional<FirstDivergence> first_divergence(const IncreasingFamily& F, Element x, Element y);

struct SeparationReport {
  /// Every x < y is separated: some A_k holds y but not x.
  bool strict_ok = false;
  /// strict_ok, and every incomparable pair is separated in some direction.
  bool injective_ok = false;
};

/// Throws PreconditionError if a member of F is not increasing.
SeparationReport check_separating(const FinitePreorder& P, const IncreasingFamily& F);

/// Upper level sets u_m^{-1}([q, inf)) at the midpoints q between consecutive
/// distinct values of each u_m, ordered by (m, ascending q). Throws
/// NotMultiUtility if U does not represent P.
IncreasingFamily thresholds_family(const FinitePreorder& P, const MultiUtility& U);

/// Default aggregation ratio.
inline Rational default_ratio() { return Rational(1, 3); }

/// geometric_aggregate(thresholds_family(P, U), r); requires 0 < r < 1/2.
ValueTable injective_from_multi_utility(const FinitePreorder& P, const MultiUtility& U,
                                        const Rational& r = default_ratio());

/// {c} plus one c_{m,p} per pair m < p of threshold sets, where c_{m,p}
/// aggregates the threshold family with sets m and p swapped.
MultiUtility injective_multi_utility_swap(const FinitePreorder& P, const MultiUtility& U,
                                          const Rational& r = default_ratio());

/// I_f = {x | exists y with f(x) = f(y) and x, y incomparable}.
/// Requires f to be a strict monotone.
ElementSet non_injective_set(const FinitePreorder& P, const ValueTable& f);

/// Lifts a strict monotone to an injective one by walking I_f in ascending
/// index order and, at the k-th element x_k, adding 2^-k to every value
/// f(x) >= f(x_k) with x not equivalent to x_k.
ValueTable eliminate_noninjective(const FinitePreorder& P, const ValueTable& f);

/// Maps the k-th smallest of K distinct values to k/(K+1).
ValueTable rescale_to_unit(const ValueTable& f);

/// From an injective monotone c: the rescaled c~ plus c~ + chi_{i(x)} for one
/// representative x of every equivalence class inside
/// A_c = {x | exists y incomparable to x with c(x) < c(y)}.
MultiUtility injective_multi_utility_from_injective(const FinitePreorder& P, const ValueTable& c);

/// Midpoint threshold family of a strict (or better) monotone.
IncreasingFamily separating_family_from_monotone(const FinitePreorder& P, const ValueTable& f);

/// Maximum ground set size for which verify_representation enumerates subsets.
inline constexpr std::size_t kMaxExhaustiveSize = 6;

struct RepresentationReport {
  /// argmax_B f lies inside the maximal elements of B, for every nonempty B.
  bool represents = false;
  /// argmax_B f is exactly [x0] restricted to B for a maximal x0, for every
  /// nonempty B.
  bool injectively_represents = false;
};

/// Exhaustive over all nonempty subsets; throws PreconditionError for
/// n > kMaxExhaustiveSize.
RepresentationReport verify_representation(const FinitePreorder& P, const ValueTable& f);

/// {x in B | no y in B with f(x) < f(y)}.
ElementSet argmax_in(const ValueTable& f, const ElementSet& B);

}  // namespace ordermono
