#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>

#include "ordermono/cli.hpp"
#include "ordermono/error.hpp"
#include "ordermono/majorization.hpp"
#include "ordermono/monotones.hpp"
#include "ordermono/separability.hpp"

namespace py = pybind11;
using namespace ordermono;

// Rationals cross the boundary as fractions.Fraction. Ints and strings in
// any parse_rational form are also accepted; floats are refused.
namespace pybind11::detail {
template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src || PyFloat_Check(src.ptr())) return false;
    const auto fraction = module_::import("fractions").attr("Fraction");
    if (!PyLong_Check(src.ptr()) && !PyUnicode_Check(src.ptr()) &&
        !isinstance(src, fraction)) {
      return false;
    }
    try {
      value = parse_rational(str(src).cast<std::string>());
    } catch (const ParseError&) {
      return false;
    }
    return true;
  }

  static handle cast(const Rational& r, return_value_policy, handle) {
    const auto fraction = module_::import("fractions").attr("Fraction");
    return fraction(to_string(r)).release();
  }
};
}  // namespace pybind11::detail

namespace {

FinitePreorder make_preorder(std::size_t n, const std::vector<FinitePreorder::Pair>& pairs) {
  return FinitePreorder::from_relation_pairs(n, pairs);
}

ValueTable table(const std::vector<Rational>& v) { return ValueTable(v); }

MultiUtility multi(const std::vector<std::vector<Rational>>& U) {
  MultiUtility out;
  for (const auto& u : U) out.emplace_back(u);
  return out;
}

std::vector<std::vector<Rational>> values(const MultiUtility& U) {
  std::vector<std::vector<Rational>> out;
  for (const auto& u : U) out.push_back(u.values());
  return out;
}

ElementSet set_of(std::size_t n, const std::vector<Element>& members) { return ElementSet(n, members); }

IncreasingFamily family(std::size_t n, const std::vector<std::vector<Element>>& sets) {
  IncreasingFamily F{n, {}};
  for (const auto& s : sets) F.sets.emplace_back(n, s);
  return F;
}

Dist dist(const std::vector<Rational>& p) { return Dist(p); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Monotone representations of finite preorders and the uncertainty order";

  auto base = py::register_exception<Error>(m, "OrderMonoError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base.ptr());
  py::register_exception<IndexOutOfRange>(m, "IndexOutOfRange", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<InfeasibleConstraint>(m, "InfeasibleConstraint", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<VerificationError>(m, "VerificationError", base.ptr());
  py::register_exception<NotMultiUtility>(m, "NotMultiUtility", base.ptr());

  py::enum_<OrderRelation>(m, "OrderRelation")
      .value("Equivalent", OrderRelation::Equivalent)
      .value("StrictlyLess", OrderRelation::StrictlyLess)
      .value("StrictlyGreater", OrderRelation::StrictlyGreater)
      .value("Incomparable", OrderRelation::Incomparable);

  py::enum_<MonotoneClass>(m, "MonotoneClass")
      .value("NotMonotone", MonotoneClass::NotMonotone)
      .value("Monotone", MonotoneClass::Monotone)
      .value("StrictMonotone", MonotoneClass::StrictMonotone)
      .value("InjectiveMonotone", MonotoneClass::InjectiveMonotone)
      .value("Utility", MonotoneClass::Utility);

  py::enum_<DensityKind>(m, "DensityKind")
      .value("Order", DensityKind::Order)
      .value("Debreu", DensityKind::Debreu)
      .value("Upper", DensityKind::Upper)
      .value("DebreuUpper", DensityKind::DebreuUpper);

  py::class_<FinitePreorder>(m, "FinitePreorder")
      .def(py::init(&make_preorder), py::arg("n"), py::arg("pairs") = std::vector<FinitePreorder::Pair>{},
           "Smallest preorder on range(n) containing the pairs (x, y), read as x <= y.")
      .def_static("chain", &FinitePreorder::chain)
      .def_static("antichain", &FinitePreorder::antichain)
      .def("__len__", &FinitePreorder::size)
      .def("leq", &FinitePreorder::leq)
      .def("less", &FinitePreorder::less)
      .def("equivalent", &FinitePreorder::equivalent)
      .def("incomparable", &FinitePreorder::incomparable)
      .def("is_total", &FinitePreorder::is_total)
      .def("pairs", &FinitePreorder::pairs)
      .def("relate", [](const FinitePreorder& P, Element x, Element y) { return relate(P, x, y); })
      .def("maximal", [](const FinitePreorder& P, const std::vector<Element>& B) {
        return maximal_elements_in(P, ElementSet(P.size(), B)).members();
      })
      .def("__eq__", [](const FinitePreorder& a, const FinitePreorder& b) { return a == b; });

  m.def("classify", [](const FinitePreorder& P, const std::vector<Rational>& f) {
    return classify(P, table(f));
  });
  m.def("is_multi_utility", [](const FinitePreorder& P, const std::vector<std::vector<Rational>>& U) {
    const auto check = is_multi_utility(P, multi(U));
    return py::make_tuple(check.ok, check.counterexample ? py::cast(*check.counterexample) : py::none());
  });
  m.def("verify_representation", [](const FinitePreorder& P, const std::vector<Rational>& f) {
    const auto rep = verify_representation(P, table(f));
    return py::make_tuple(rep.represents, rep.injectively_represents);
  });
  m.def(
      "geometric_aggregate",
      [](std::size_t n, const std::vector<std::vector<Element>>& sets, const Rational& r) {
        return geometric_aggregate(family(n, sets), r).values();
      },
      py::arg("n"), py::arg("sets"), py::arg("r") = default_ratio());
  m.def(
      "injective_from_multi_utility",
      [](const FinitePreorder& P, const std::vector<std::vector<Rational>>& U, const Rational& r) {
        return injective_from_multi_utility(P, multi(U), r).values();
      },
      py::arg("P"), py::arg("U"), py::arg("r") = default_ratio());
  m.def(
      "injective_multi_utility_swap",
      [](const FinitePreorder& P, const std::vector<std::vector<Rational>>& U, const Rational& r) {
        return values(injective_multi_utility_swap(P, multi(U), r));
      },
      py::arg("P"), py::arg("U"), py::arg("r") = default_ratio());
  m.def("up_set_indicators", [](const FinitePreorder& P) { return values(up_set_indicators(P)); });
  m.def("non_injective_set", [](const FinitePreorder& P, const std::vector<Rational>& f) {
    return non_injective_set(P, table(f)).members();
  });
  m.def("eliminate_noninjective", [](const FinitePreorder& P, const std::vector<Rational>& f) {
    return eliminate_noninjective(P, table(f)).values();
  });
  m.def("injective_multi_utility_from_injective", [](const FinitePreorder& P, const std::vector<Rational>& c) {
    return values(injective_multi_utility_from_injective(P, table(c)));
  });

  m.def("density_report", [](const FinitePreorder& P, const std::vector<Element>& Z) {
    const auto r = density_report(P, set_of(P.size(), Z));
    py::dict d;
    d["order_dense"] = r.order_dense;
    d["debreu_dense"] = r.debreu_dense;
    d["upper_dense"] = r.upper_dense;
    d["debreu_upper_dense"] = r.debreu_upper_dense;
    d["first_violation"] = r.first_violation ? py::cast(*r.first_violation) : py::none();
    return d;
  });
  m.def("multi_utility_from_dense", [](const FinitePreorder& P, const std::vector<Element>& D) {
    return values(multi_utility_from_dense(P, set_of(P.size(), D)));
  });
  m.def("greedy_minimal_dense", [](const FinitePreorder& P, DensityKind kind) -> py::object {
    const auto Z = greedy_minimal_dense(P, kind);
    if (!Z) return py::none();
    return py::cast(Z->members());
  });

  m.def("uncertainty_compare", [](const std::vector<Rational>& p, const std::vector<Rational>& q) {
    return uncertainty_compare(dist(p), dist(q));
  });
  m.def("majorization_compare", [](const std::vector<Rational>& p, const std::vector<Rational>& q) {
    return majorization_compare(dist(p), dist(q));
  });
  m.def("lorenz_utilities", [](const std::vector<Rational>& p) { return lorenz_utilities(dist(p)); });
  m.def(
      "shannon_entropy",
      [](const std::vector<Rational>& p, bool bits) {
        return shannon_entropy(dist(p), bits ? LogBase::Bits : LogBase::Nats);
      },
      py::arg("p"), py::arg("bits") = false);
  m.def("tensor", [](const std::vector<Rational>& p, const std::vector<Rational>& r) {
    return tensor(dist(p), dist(r)).probs();
  });
  m.def("trumping_check", [](const std::vector<Rational>& p, const std::vector<Rational>& q,
                             const std::vector<Rational>& r) {
    const auto res = trumping_check(dist(p), dist(q), dist(r));
    return py::make_tuple(res.catalyzed, res.base_relation);
  });
  m.def("upper_dense_witness", [](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    return upper_dense_witness(dist(x), dist(y)).probs();
  });
  m.def(
      "equal_entropy_incomparable_pair",
      [](double c, std::size_t n, double tol) {
        const auto [p, q] = equal_entropy_incomparable_pair(c, n, tol);
        return py::make_tuple(p.probs(), q.probs());
      },
      py::arg("c"), py::arg("n") = 3, py::arg("tol") = kDefaultEntropyTolerance);
  m.def(
      "random_comparable_pair",
      [](std::uint64_t seed, std::size_t n, std::size_t transfers) {
        const auto [p, q] = random_comparable_pair(seed, n, transfers);
        return py::make_tuple(p.probs(), q.probs());
      },
      py::arg("seed"), py::arg("n"), py::arg("transfers") = 3);
  m.def(
      "maxent_audit",
      [](const std::vector<Rational>& energy, const Rational& level, const Rational& step) {
        const auto report = maxent_audit(EnergyFunction{energy}, level, step);
        auto probs = [](const std::vector<Dist>& v) {
          std::vector<std::vector<Rational>> out;
          for (const auto& p : v) out.push_back(p.probs());
          return out;
        };
        py::dict d;
        d["grid_size"] = report.grid_size;
        d["entropy"] = report.entropy;
        d["maximal_set"] = probs(report.maximal_set);
        d["entropy_argmax"] = probs(report.entropy_argmax);
        d["missed"] = probs(report.missed);
        return d;
      },
      py::arg("energy"), py::arg("level"), py::arg("step") = default_grid_step());

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
