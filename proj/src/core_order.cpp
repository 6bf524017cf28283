#include "ordermono/core_order.hpp"

#include <algorithm>

#include "ordermono/error.hpp"

namespace ordermono {

namespace {

void check_index(const FinitePreorder& P, Element x) {
  if (x >= P.size()) {
    throw IndexOutOfRange("element " + std::to_string(x) + " out of range for ground set of size " +
                          std::to_string(P.size()));
  }
}

}  // namespace

OrderRelation reversed(OrderRelation rel) {
  switch (rel) {
    case OrderRelation::StrictlyLess: return OrderRelation::StrictlyGreater;
    case OrderRelation::StrictlyGreater: return OrderRelation::StrictlyLess;
    default: return rel;
  }
}

std::string_view to_string(OrderRelation rel) {
  switch (rel) {
    case OrderRelation::Equivalent: return "Equivalent";
    case OrderRelation::StrictlyLess: return "StrictlyLess";
    case OrderRelation::StrictlyGreater: return "StrictlyGreater";
    case OrderRelation::Incomparable: return "Incomparable";
  }
  return "?";
}

// ElementSet ---------------------------------------------------------------

ElementSet::ElementSet(std::size_t universe, const std::vector<Element>& members)
    : bits_(universe, false) {
  for (Element x : members) insert(x);
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet out(universe);
  out.bits_.assign(universe, true);
  return out;
}

void ElementSet::insert(Element x) {
  if (x >= bits_.size()) {
    throw IndexOutOfRange("element " + std::to_string(x) + " outside universe of size " +
                          std::to_string(bits_.size()));
  }
  bits_[x] = true;
}

void ElementSet::erase(Element x) {
  if (x < bits_.size()) bits_[x] = false;
}

std::size_t ElementSet::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<Element> ElementSet::members() const {
  std::vector<Element> out;
  for (Element x = 0; x < bits_.size(); ++x)
    if (bits_[x]) out.push_back(x);
  return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (Element x = 0; x < bits_.size(); ++x)
    if (bits_[x] && !other.contains(x)) return false;
  return true;
}

// FinitePreorder -----------------------------------------------------------

FinitePreorder::FinitePreorder(std::size_t n) : n_(n), leq_(n * n, false) {
  for (Element x = 0; x < n; ++x) set(x, x);
}

void FinitePreorder::close() {
  // Warshall.
  for (Element k = 0; k < n_; ++k)
    for (Element i = 0; i < n_; ++i) {
      if (!leq(i, k)) continue;
      for (Element j = 0; j < n_; ++j)
        if (leq(k, j)) set(i, j);
    }
}

FinitePreorder FinitePreorder::from_relation_pairs(std::size_t n, const std::vector<Pair>& pairs,
                                                   std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n) {
    throw DimensionMismatch("expected " + std::to_string(n) + " labels, got " +
                            std::to_string(labels.size()));
  }
  FinitePreorder out(n);
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n) {
      throw IndexOutOfRange("pair (" + std::to_string(x) + ", " + std::to_string(y) +
                            ") out of range for ground set of size " + std::to_string(n));
    }
    out.set(x, y);
  }
  out.close();
  out.labels_ = std::move(labels);
  return out;
}

FinitePreorder FinitePreorder::antichain(std::size_t n) { return from_relation_pairs(n, {}); }

FinitePreorder FinitePreorder::chain(std::size_t n) {
  std::vector<Pair> pairs;
  for (Element x = 0; x + 1 < n; ++x) pairs.emplace_back(x, x + 1);
  return from_relation_pairs(n, pairs);
}

bool FinitePreorder::is_total() const {
  for (Element x = 0; x < n_; ++x)
    for (Element y = x + 1; y < n_; ++y)
      if (incomparable(x, y)) return false;
  return true;
}

std::string FinitePreorder::label(Element x) const {
  return labels_.empty() ? std::to_string(x) : labels_.at(x);
}

std::vector<FinitePreorder::Pair> FinitePreorder::pairs() const {
  std::vector<Pair> out;
  for (Element x = 0; x < n_; ++x)
    for (Element y = 0; y < n_; ++y)
      if (x != y && leq(x, y)) out.emplace_back(x, y);
  return out;
}

// Queries ------------------------------------------------------------------

OrderRelation relate(const FinitePreorder& P, Element x, Element y) {
  check_index(P, x);
  check_index(P, y);
  const bool xy = P.leq(x, y);
  const bool yx = P.leq(y, x);
  if (xy && yx) return OrderRelation::Equivalent;
  if (xy) return OrderRelation::StrictlyLess;
  if (yx) return OrderRelation::StrictlyGreater;
  return OrderRelation::Incomparable;
}

ElementSet up_set(const FinitePreorder& P, Element x, UpSetKind kind) {
  check_index(P, x);
  ElementSet out(P.size());
  for (Element y = 0; y < P.size(); ++y) {
    if (kind == UpSetKind::Weak ? P.leq(x, y) : P.less(x, y)) out.insert(y);
  }
  return out;
}

ElementSet equivalence_class(const FinitePreorder& P, Element x) {
  check_index(P, x);
  ElementSet out(P.size());
  for (Element y = 0; y < P.size(); ++y)
    if (P.equivalent(x, y)) out.insert(y);
  return out;
}

bool is_increasing(const FinitePreorder& P, const ElementSet& A) {
  if (A.universe() != P.size()) {
    throw DimensionMismatch("set universe " + std::to_string(A.universe()) +
                            " differs from ground set size " + std::to_string(P.size()));
  }
  for (Element x : A.members())
    for (Element y = 0; y < P.size(); ++y)
      if (P.leq(x, y) && !A.contains(y)) return false;
  return true;
}

ElementSet maximal_elements_in(const FinitePreorder& P, const ElementSet& B) {
  if (B.universe() != P.size()) {
    throw DimensionMismatch("set universe " + std::to_string(B.universe()) +
                            " differs from ground set size " + std::to_string(P.size()));
  }
  const auto members = B.members();
  if (members.empty()) throw PreconditionError("empty domain");
  ElementSet out(P.size());
  for (Element x : members) {
    bool dominated = std::any_of(members.begin(), members.end(),
                                 [&](Element y) { return P.less(x, y); });
    if (!dominated) out.insert(x);
  }
  return out;
}

Quotient quotient(const FinitePreorder& P) {
  const std::size_t n = P.size();
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  std::vector<std::vector<Element>> classes;
  std::vector<std::size_t> class_of(n, unassigned);
  for (Element x = 0; x < n; ++x) {
    if (class_of[x] != unassigned) continue;
    const std::size_t id = classes.size();
    classes.emplace_back();
    for (Element y = x; y < n; ++y) {
      if (P.equivalent(x, y)) {
        class_of[y] = id;
        classes.back().push_back(y);
      }
    }
  }
  auto order = FinitePreorder::from_predicate(classes.size(), [&](std::size_t a, std::size_t b) {
    return P.leq(classes[a].front(), classes[b].front());
  });
  return Quotient{std::move(classes), std::move(class_of), std::move(order)};
}

// Interval preorder --------------------------------------------------------

bool in_interval_domain(const Rational& x) {
  return (x >= 0 && x <= 1) || (x >= 2 && x <= 3);
}

namespace {

bool interval_leq(const Rational& x, const Rational& y) {
  if (x == y) return true;
  return x <= 1 && y >= 2 && y != x + 2;
}

}  // namespace

OrderRelation interval_preorder_relate(const Rational& x, const Rational& y) {
  for (const Rational* v : {&x, &y}) {
    if (!in_interval_domain(*v)) {
      throw PreconditionError("point " + to_string(*v) + " outside [0,1] u [2,3]");
    }
  }
  const bool xy = interval_leq(x, y);
  const bool yx = interval_leq(y, x);
  if (xy && yx) return OrderRelation::Equivalent;
  if (xy) return OrderRelation::StrictlyLess;
  if (yx) return OrderRelation::StrictlyGreater;
  return OrderRelation::Incomparable;
}

FinitePreorder sample_interval_preorder(const std::vector<Rational>& points) {
  std::vector<FinitePreorder::Pair> pairs;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!in_interval_domain(points[i])) {
      throw PreconditionError("point " + to_string(points[i]) + " outside [0,1] u [2,3]");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (points[i] == points[j]) {
        throw PreconditionError("duplicate sample point " + to_string(points[i]));
      }
    }
    labels.push_back(to_string(points[i]));
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j)
      if (i != j && interval_leq(points[i], points[j])) pairs.emplace_back(i, j);
  return FinitePreorder::from_relation_pairs(points.size(), pairs, std::move(labels));
}

}  // namespace ordermono
