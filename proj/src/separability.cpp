#include "ordermono/separability.hpp"

#include <algorithm>

#include "ordermono/error.hpp"

namespace ordermono {

std::string_view to_string(DensityKind kind) {
  switch (kind) {
    case DensityKind::Order: return "order";
    case DensityKind::Debreu: return "debreu";
    case DensityKind::Upper: return "upper";
    case DensityKind::DebreuUpper: return "debreu-upper";
  }
  return "?";
}

DensityKind parse_density_kind(std::string_view text) {
  for (auto kind : {DensityKind::Order, DensityKind::Debreu, DensityKind::Upper,
                    DensityKind::DebreuUpper}) {
    if (text == to_string(kind)) return kind;
  }
  throw ParseError("unknown density kind '" + std::string(text) + "'");
}

bool DensityReport::holds(DensityKind kind) const {
  switch (kind) {
    case DensityKind::Order: return order_dense;
    case DensityKind::Debreu: return debreu_dense;
    case DensityKind::Upper: return upper_dense;
    case DensityKind::DebreuUpper: return debreu_upper_dense;
  }
  return false;
}

DensityReport density_report(const FinitePreorder& P, const ElementSet& Z) {
  if (Z.universe() != P.size()) {
    throw DimensionMismatch("set universe " + std::to_string(Z.universe()) +
                            " differs from ground set size " + std::to_string(P.size()));
  }
  const auto zs = Z.members();
  auto witness = [&](auto&& pred) { return std::any_of(zs.begin(), zs.end(), pred); };

  DensityReport out{true, true, true, true, std::nullopt};
  for (Element x = 0; x < P.size(); ++x) {
    for (Element y = 0; y < P.size(); ++y) {
      bool broken = false;
      if (P.less(x, y)) {
        if (!witness([&](Element z) { return P.less(x, z) && P.less(z, y); })) {
          out.order_dense = false;
          broken = true;
        }
        if (!witness([&](Element z) { return P.leq(x, z) && P.leq(z, y); })) {
          out.debreu_dense = false;
          broken = true;
        }
      } else if (P.incomparable(x, y)) {
        if (!witness([&](Element z) { return P.incomparable(x, z) && P.less(z, y); })) {
          out.upper_dense = false;
          broken = true;
        }
        if (!witness([&](Element z) { return P.incomparable(x, z) && P.leq(z, y); })) {
          out.debreu_upper_dense = false;
          broken = true;
        }
      }
      if (broken && !out.first_violation) out.first_violation = std::make_pair(x, y);
    }
  }
  return out;
}

MultiUtility multi_utility_from_dense(const FinitePreorder& P, const ElementSet& D) {
  const auto report = density_report(P, D);
  if (!report.debreu_dense || !report.debreu_upper_dense) {
    throw PreconditionError("set is not both Debreu dense and Debreu upper dense");
  }
  MultiUtility out;
  for (Element d : D.members()) {
    out.push_back(ValueTable::indicator(up_set(P, d, UpSetKind::Weak)));
    out.push_back(ValueTable::indicator(up_set(P, d, UpSetKind::Strict)));
  }
  if (out.empty()) out.push_back(ValueTable::constant(P.size(), 0));
  return out;
}

MultiUtility multi_utility_from_strict_and_upper_dense(const FinitePreorder& P,
                                                       const ValueTable& u,
                                                       const ElementSet& D) {
  if (!at_least(classify(P, u), MonotoneClass::StrictMonotone)) {
    throw PreconditionError("function is not a strict monotone");
  }
  if (!density_report(P, D).debreu_upper_dense) {
    throw PreconditionError("set is not Debreu upper dense");
  }
  MultiUtility out{u};
  for (Element d : D.members()) out.push_back(ValueTable::indicator(up_set(P, d)));
  return out;
}

std::optional<ElementSet> greedy_minimal_dense(const FinitePreorder& P, DensityKind kind) {
  ElementSet Z = ElementSet::full(P.size());
  if (!density_report(P, Z).holds(kind)) return std::nullopt;
  for (Element x = P.size(); x-- > 0;) {
    Z.erase(x);
    if (!density_report(P, Z).holds(kind)) Z.insert(x);
  }
  return Z;
}

}  // namespace ordermono
