#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordermono/rational.hpp"

namespace ordermono {

using Element = std::size_t;

/// How two elements of a preordered space relate. Exactly one holds.
enum class OrderRelation { Equivalent, StrictlyLess, StrictlyGreater, Incomparable };

/// relate(y, x) given relate(x, y).
OrderRelation reversed(OrderRelation rel);
std::string_view to_string(OrderRelation rel);

/// Subset of the ground set {0, ..., universe-1}.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_(universe, false) {}
  ElementSet(std::size_t universe, const std::vector<Element>& members);

  static ElementSet full(std::size_t universe);

  std::size_t universe() const { return bits_.size(); }
  bool contains(Element x) const { return x < bits_.size() && bits_[x]; }
  void insert(Element x);
  void erase(Element x);
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  /// Members in ascending order.
  std::vector<Element> members() const;
  bool is_subset_of(const ElementSet& other) const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<bool> bits_;
};

/// A reflexive and transitive relation on {0, ..., n-1}, stored as a dense
/// boolean matrix. Every constructor closes its input, so instances always
/// satisfy the preorder axioms.
class FinitePreorder {
 public:
  using Pair = std::pair<Element, Element>;

  /// Smallest preorder containing `pairs` (x, y), read as x <= y.
  static FinitePreorder from_relation_pairs(std::size_t n, const std::vector<Pair>& pairs,
                                            std::vector<std::string> labels = {});

  /// Closure of the relation given by `pred(x, y)`.
  template <typename Pred>
  static FinitePreorder from_predicate(std::size_t n, Pred&& pred) {
    FinitePreorder out(n);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (pred(x, y)) out.set(x, y);
    out.close();
    return out;
  }

  static FinitePreorder antichain(std::size_t n);
  /// 0 < 1 < ... < n-1.
  static FinitePreorder chain(std::size_t n);

  std::size_t size() const { return n_; }
  /// x <= y. Unchecked beyond an assertion; use relate() for checked access.
  bool leq(Element x, Element y) const { return leq_[x * n_ + y]; }
  bool less(Element x, Element y) const { return leq(x, y) && !leq(y, x); }
  bool equivalent(Element x, Element y) const { return leq(x, y) && leq(y, x); }
  bool incomparable(Element x, Element y) const { return !leq(x, y) && !leq(y, x); }
  bool is_total() const;

  const std::vector<std::string>& labels() const { return labels_; }
  /// Label of x, or its index when unlabeled.
  std::string label(Element x) const;

  /// Non-reflexive pairs of the closed relation, row-major.
  std::vector<Pair> pairs() const;

  friend bool operator==(const FinitePreorder& a, const FinitePreorder& b) {
    return a.n_ == b.n_ && a.leq_ == b.leq_;
  }

 private:
  explicit FinitePreorder(std::size_t n);
  void set(Element x, Element y) { leq_[x * n_ + y] = true; }
  void close();

  std::size_t n_ = 0;
  std::vector<bool> leq_;
  std::vector<std::string> labels_;
};

OrderRelation relate(const FinitePreorder& P, Element x, Element y);

enum class UpSetKind {
  Weak,    ///< i(x) = {y | x <= y}
  Strict,  ///< r(x) = {y | x < y}
};

ElementSet up_set(const FinitePreorder& P, Element x, UpSetKind kind = UpSetKind::Weak);

/// [x] = {y | y ~ x}.
ElementSet equivalence_class(const FinitePreorder& P, Element x);

/// x in A and x <= y imply y in A.
bool is_increasing(const FinitePreorder& P, const ElementSet& A);

/// {x in B | no y in B with x < y}. Throws PreconditionError("empty domain")
/// when B is empty.
ElementSet maximal_elements_in(const FinitePreorder& P, const ElementSet& B);

struct Quotient {
  /// Equivalence classes, each ascending, ordered by their smallest member.
  std::vector<std::vector<Element>> classes;
  /// class_of[x] is the index of x's class.
  std::vector<std::size_t> class_of;
  /// Induced partial order on class indices.
  FinitePreorder order;
};

Quotient quotient(const FinitePreorder& P);

// Two copies of the unit interval, X = [0,1] u [2,3], where x <= y iff
// x == y, or x in [0,1], y in [2,3] and y != x + 2. It has an injective
// monotone (the identity) but no countable multi-utility; the finite samples
// below can only illustrate the relation, not that property.

bool in_interval_domain(const Rational& x);
OrderRelation interval_preorder_relate(const Rational& x, const Rational& y);
/// Restriction of the interval preorder to distinct points of its domain.
FinitePreorder sample_interval_preorder(const std::vector<Rational>& points);

}  // namespace ordermono
