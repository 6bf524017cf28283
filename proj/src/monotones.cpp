#include "ordermono/monotones.hpp"

#include <algorithm>

#include "ordermono/error.hpp"

namespace ordermono {

namespace {

void check_table(const FinitePreorder& P, const ValueTable& f) {
  if (f.size() != P.size()) {
    throw DimensionMismatch("value table has " + std::to_string(f.size()) +
                            " entries, ground set has " + std::to_string(P.size()));
  }
}

void check_family(const FinitePreorder& P, const IncreasingFamily& F) {
  if (F.n != P.size()) {
    throw DimensionMismatch("family lives on " + std::to_string(F.n) +
                            " elements, ground set has " + std::to_string(P.size()));
  }
  for (std::size_t k = 0; k < F.sets.size(); ++k) {
    if (F.sets[k].universe() != F.n) {
      throw DimensionMismatch("set " + std::to_string(k) + " has the wrong universe size");
    }
    if (!is_increasing(P, F.sets[k])) {
      throw PreconditionError("set " + std::to_string(k) + " of the family is not increasing");
    }
  }
}

void check_injective_ratio(const Rational& r) {
  if (!(r > 0 && r < Rational(1, 2))) {
    throw PreconditionError("ratio r = " + to_string(r) + " must lie in (0, 1/2)");
  }
}

std::vector<Rational> distinct_sorted(const ValueTable& f) {
  std::vector<Rational> v = f.values();
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// f^{-1}([q, inf)) for each midpoint q between consecutive distinct values.
void append_level_sets(const ValueTable& f, std::vector<ElementSet>& out) {
  const auto levels = distinct_sorted(f);
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    const Rational q = (levels[k] + levels[k + 1]) / 2;
    ElementSet A(f.size());
    for (Element x = 0; x < f.size(); ++x)
      if (f[x] >= q) A.insert(x);
    out.push_back(std::move(A));
  }
}

}  // namespace

ValueTable ValueTable::indicator(const ElementSet& A) {
  std::vector<Rational> v(A.universe());
  for (Element x = 0; x < A.universe(); ++x) v[x] = A.contains(x) ? 1 : 0;
  return ValueTable(std::move(v));
}

ValueTable ValueTable::constant(std::size_t n, const Rational& value) {
  return ValueTable(std::vector<Rational>(n, value));
}

std::string_view to_string(MonotoneClass cls) {
  switch (cls) {
    case MonotoneClass::NotMonotone: return "NotMonotone";
    case MonotoneClass::Monotone: return "Monotone";
    case MonotoneClass::StrictMonotone: return "StrictMonotone";
    case MonotoneClass::InjectiveMonotone: return "InjectiveMonotone";
    case MonotoneClass::Utility: return "Utility";
  }
  return "?";
}

MonotoneClass classify(const FinitePreorder& P, const ValueTable& f) {
  check_table(P, f);
  bool monotone = true, strict = true, injective = true, utility = true;
  for (Element x = 0; x < P.size(); ++x) {
    for (Element y = 0; y < P.size(); ++y) {
      const bool le = P.leq(x, y);
      const bool fle = f[x] <= f[y];
      if (le && !fle) monotone = false;
      if (P.less(x, y) && !(f[x] < f[y])) strict = false;
      if (f[x] == f[y] && !P.equivalent(x, y)) injective = false;
      if (le != fle) utility = false;
    }
  }
  if (!monotone) return MonotoneClass::NotMonotone;
  if (utility) return MonotoneClass::Utility;
  if (injective && strict) return MonotoneClass::InjectiveMonotone;
  if (strict) return MonotoneClass::StrictMonotone;
  return MonotoneClass::Monotone;
}

MultiUtilityCheck is_multi_utility(const FinitePreorder& P, const MultiUtility& U) {
  if (U.empty()) throw PreconditionError("empty family of functions");
  for (const auto& u : U) check_table(P, u);
  for (Element x = 0; x < P.size(); ++x) {
    for (Element y = 0; y < P.size(); ++y) {
      const bool all_le =
          std::all_of(U.begin(), U.end(), [&](const ValueTable& u) { return u[x] <= u[y]; });
      if (all_le != P.leq(x, y)) return {false, std::make_pair(x, y)};
    }
  }
  return {true, std::nullopt};
}

MultiUtility up_set_indicators(const FinitePreorder& P) {
  MultiUtility out;
  for (Element x = 0; x < P.size(); ++x) out.push_back(ValueTable::indicator(up_set(P, x)));
  return out;
}

ValueTable geometric_aggregate(const IncreasingFamily& F, const Rational& r) {
  if (!(r > 0 && r < 1)) {
    throw PreconditionError("ratio r = " + to_string(r) + " must lie in (0, 1)");
  }
  std::vector<Rational> c(F.n, Rational(0));
  Rational weight = 1;
  for (const auto& A : F.sets) {
    if (A.universe() != F.n) throw DimensionMismatch("family member has the wrong universe size");
    for (Element x : A.members()) c[x] += weight;
    weight *= r;
  }
  return ValueTable(std::move(c));
}

std::optional<FirstDivergence> first_divergence(const IncreasingFamily& F, Element x, Element y) {
  if (x >= F.n || y >= F.n) throw IndexOutOfRange("element out of range for family");
  for (std::size_t k = 0; k < F.sets.size(); ++k) {
    const bool in_x = F.sets[k].contains(x);
    const bool in_y = F.sets[k].contains(y);
    if (in_x != in_y) {
      return FirstDivergence{k, in_y ? Divergence::XAbsentYPresent : Divergence::XPresentYAbsent};
    }
  }
  return std::nullopt;
}

SeparationReport check_separating(const FinitePreorder& P, const IncreasingFamily& F) {
  check_family(P, F);
  auto separates = [&](Element x, Element y) {
    return std::any_of(F.sets.begin(), F.sets.end(),
                       [&](const ElementSet& A) { return !A.contains(x) && A.contains(y); });
  };
  SeparationReport out{true, true};
  for (Element x = 0; x < P.size(); ++x) {
    for (Element y = 0; y < P.size(); ++y) {
      if (P.less(x, y) && !separates(x, y)) out.strict_ok = false;
      if (x < y && P.incomparable(x, y) && !separates(x, y) && !separates(y, x)) {
        out.injective_ok = false;
      }
    }
  }
  out.injective_ok = out.injective_ok && out.strict_ok;
  return out;
}

IncreasingFamily thresholds_family(const FinitePreorder& P, const MultiUtility& U) {
  const auto check = is_multi_utility(P, U);
  if (!check.ok) throw NotMultiUtility(check.counterexample->first, check.counterexample->second);
  IncreasingFamily F{P.size(), {}};
  for (const auto& u : U) append_level_sets(u, F.sets);
  return F;
}

ValueTable injective_from_multi_utility(const FinitePreorder& P, const MultiUtility& U,
                                        const Rational& r) {
  check_injective_ratio(r);
  return geometric_aggregate(thresholds_family(P, U), r);
}

MultiUtility injective_multi_utility_swap(const FinitePreorder& P, const MultiUtility& U,
                                          const Rational& r) {
  check_injective_ratio(r);
  const IncreasingFamily F = thresholds_family(P, U);
  MultiUtility out;
  out.push_back(geometric_aggregate(F, r));
  for (std::size_t m = 0; m < F.sets.size(); ++m) {
    for (std::size_t p = m + 1; p < F.sets.size(); ++p) {
      IncreasingFamily swapped = F;
      std::swap(swapped.sets[m], swapped.sets[p]);
      out.push_back(geometric_aggregate(swapped, r));
    }
  }
  return out;
}

ElementSet non_injective_set(const FinitePreorder& P, const ValueTable& f) {
  if (!at_least(classify(P, f), MonotoneClass::StrictMonotone)) {
    throw PreconditionError("function is not a strict monotone");
  }
  ElementSet out(P.size());
  for (Element x = 0; x < P.size(); ++x)
    for (Element y = 0; y < P.size(); ++y)
      if (f[x] == f[y] && P.incomparable(x, y)) out.insert(x);
  return out;
}

ValueTable eliminate_noninjective(const FinitePreorder& P, const ValueTable& f) {
  const auto pending = non_injective_set(P, f).members();
  ValueTable current = f;
  Rational step = 1;
  for (Element pivot : pending) {
    const Rational level = current[pivot];
    ValueTable next = current;
    for (Element x = 0; x < P.size(); ++x) {
      if (current[x] >= level && !P.equivalent(x, pivot)) next[x] += step;
    }
    current = std::move(next);
    step /= 2;
  }
  return current;
}

ValueTable rescale_to_unit(const ValueTable& f) {
  const auto levels = distinct_sorted(f);
  const Rational denom(static_cast<long>(levels.size() + 1));
  std::vector<Rational> out(f.size());
  for (Element x = 0; x < f.size(); ++x) {
    const auto rank = std::lower_bound(levels.begin(), levels.end(), f[x]) - levels.begin() + 1;
    out[x] = Rational(static_cast<long>(rank)) / denom;
  }
  return ValueTable(std::move(out));
}

MultiUtility injective_multi_utility_from_injective(const FinitePreorder& P,
                                                    const ValueTable& c) {
  if (!at_least(classify(P, c), MonotoneClass::InjectiveMonotone)) {
    throw PreconditionError("function is not an injective monotone");
  }
  const ValueTable unit = rescale_to_unit(c);
  MultiUtility out{unit};
  std::vector<bool> class_done(P.size(), false);
  for (Element x = 0; x < P.size(); ++x) {
    if (class_done[x]) continue;
    bool in_a = false;
    for (Element y = 0; y < P.size() && !in_a; ++y) in_a = P.incomparable(x, y) && unit[x] < unit[y];
    if (!in_a) continue;
    for (Element y = 0; y < P.size(); ++y)
      if (P.equivalent(x, y)) class_done[y] = true;
    const ElementSet above = up_set(P, x);
    ValueTable lifted = unit;
    for (Element y : above.members()) lifted[y] += 1;
    out.push_back(std::move(lifted));
  }
  return out;
}

IncreasingFamily separating_family_from_monotone(const FinitePreorder& P, const ValueTable& f) {
  if (!at_least(classify(P, f), MonotoneClass::StrictMonotone)) {
    throw PreconditionError("function is not a strict monotone");
  }
  IncreasingFamily F{P.size(), {}};
  append_level_sets(f, F.sets);
  return F;
}

ElementSet argmax_in(const ValueTable& f, const ElementSet& B) {
  if (B.universe() != f.size()) throw DimensionMismatch("set and table sizes differ");
  const auto members = B.members();
  ElementSet out(f.size());
  if (members.empty()) return out;
  Rational best = f[members.front()];
  for (Element x : members) best = std::max(best, f[x]);
  for (Element x : members)
    if (f[x] == best) out.insert(x);
  return out;
}

RepresentationReport verify_representation(const FinitePreorder& P, const ValueTable& f) {
  check_table(P, f);
  const std::size_t n = P.size();
  if (n > kMaxExhaustiveSize) {
    throw PreconditionError("exhaustive representation check supports at most " +
                            std::to_string(kMaxExhaustiveSize) + " elements, got " +
                            std::to_string(n));
  }
  RepresentationReport out{true, true};
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    ElementSet B(n);
    for (Element x = 0; x < n; ++x)
      if (mask & (1u << x)) B.insert(x);
    const ElementSet top = argmax_in(f, B);
    const ElementSet maximal = maximal_elements_in(P, B);
    if (!top.is_subset_of(maximal)) out.represents = false;

    const Element x0 = top.members().front();
    ElementSet cls = equivalence_class(P, x0);
    for (Element x = 0; x < n; ++x)
      if (!B.contains(x)) cls.erase(x);
    if (!maximal.contains(x0) || cls != top) out.injectively_represents = false;
    if (!out.represents && !out.injectively_represents) break;
  }
  return out;
}

}  // namespace ordermono
