#include "ordermono/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ordermono/error.hpp"
#include "ordermono/json_io.hpp"

namespace ordermono::cli {

namespace {

struct RunConfig {
  std::uint64_t seed = 0;
  std::string preorder_path;
  std::string function_path;
  std::string multi_utility_path;
  std::string out_path;
  std::string r_text = "1/3";
  std::string step_text = "1/1000";
  std::string level_text;
  std::string energy_text;
  std::optional<std::string> set_text;
  std::string method = "indicators";
  std::string minimal_kind;
  std::vector<std::string> positional;
  bool bits = false;
  bool interval = false;
  double level_real = 0.0;
  std::size_t outcomes = 3;
  std::size_t transfers = 3;
  double tol = kDefaultEntropyTolerance;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw ParseError("empty list of numbers");
  return out;
}

Dist parse_dist(const std::string& text) {
  try {
    return Dist(parse_rational_list(text));
  } catch (const PreconditionError& e) {
    throw ParseError("'" + text + "' is not a probability vector: " + e.what());
  }
}

ElementSet parse_set(const std::string& text, std::size_t n) {
  ElementSet out(n);
  if (text.empty()) return out;
  for (const auto& item : split(text, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.insert(v);
    } catch (const std::logic_error&) {
      throw ParseError("'" + item + "' is not an element index");
    }
  }
  return out;
}

std::size_t parse_index(const std::string& text) {
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("'" + text + "' is not an element index");
  }
}

ElementSet selected_set(const RunConfig& cfg, std::size_t n) {
  return cfg.set_text ? parse_set(*cfg.set_text, n) : ElementSet::full(n);
}

Rational parse_ratio(const RunConfig& cfg) {
  const Rational r = parse_rational(cfg.r_text);
  if (!(r > 0 && r < Rational(1, 2))) {
    throw ParseError("--r must lie in (0, 1/2), got " + cfg.r_text);
  }
  return r;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write '" + path + "'");
  f << content;
}

Json class_json(const FinitePreorder& P, const ValueTable& f) {
  Json j;
  j["class"] = std::string(to_string(classify(P, f)));
  if (P.size() <= kMaxExhaustiveSize) {
    const auto rep = verify_representation(P, f);
    j["represents"] = rep.represents;
    j["injectively_represents"] = rep.injectively_represents;
  } else {
    j["represents"] = nullptr;
    j["injectively_represents"] = nullptr;
  }
  return j;
}

Json multi_utility_report(const FinitePreorder& P, const MultiUtility& U) {
  Json classes = Json::array();
  for (const auto& u : U) classes.push_back(std::string(to_string(classify(P, u))));
  const auto check = is_multi_utility(P, U);
  Json j{{"size", U.size()}, {"is_multi_utility", check.ok}, {"classes", classes}};
  if (check.counterexample) {
    j["counterexample"] = {check.counterexample->first, check.counterexample->second};
  }
  return j;
}

// Subcommands -------------------------------------------------------------------

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const auto P = preorder_from_json(load_json_file(cfg.preorder_path));
  const auto f = table_from_json(load_json_file(cfg.function_path));
  emit(out, class_json(P, f));
  return kOk;
}

int cmd_build_injective(const RunConfig& cfg, std::ostream& out) {
  const Rational r = parse_ratio(cfg);
  const auto P = preorder_from_json(load_json_file(cfg.preorder_path));
  const auto U = multi_utility_from_json(load_json_file(cfg.multi_utility_path));
  const auto family = thresholds_family(P, U);
  const auto c = geometric_aggregate(family, r);
  const auto cls = classify(P, c);
  if (!cfg.out_path.empty()) write_file(cfg.out_path, to_json(c).dump(2) + "\n");
  emit(out, Json{{"function", to_json(c)},
                 {"r", to_string(r)},
                 {"family_size", family.sets.size()},
                 {"class", std::string(to_string(cls))},
                 {"injective", at_least(cls, MonotoneClass::InjectiveMonotone)}});
  return at_least(cls, MonotoneClass::InjectiveMonotone) ? kOk : kVerification;
}

int cmd_build_multi(const RunConfig& cfg, std::ostream& out) {
  const auto P = preorder_from_json(load_json_file(cfg.preorder_path));
  MultiUtility U;
  if (cfg.method == "indicators") {
    U = up_set_indicators(P);
  } else if (cfg.method == "swap") {
    const Rational r = parse_ratio(cfg);
    U = injective_multi_utility_swap(P, multi_utility_from_json(load_json_file(cfg.multi_utility_path)), r);
  } else if (cfg.method == "from-injective") {
    U = injective_multi_utility_from_injective(P, table_from_json(load_json_file(cfg.function_path)));
  } else if (cfg.method == "dense") {
    const ElementSet D = selected_set(cfg, P.size());
    U = multi_utility_from_dense(P, D);
  } else if (cfg.method == "strict-dense") {
    const ElementSet D = selected_set(cfg, P.size());
    U = multi_utility_from_strict_and_upper_dense(
        P, table_from_json(load_json_file(cfg.function_path)), D);
  } else {
    throw ParseError("unknown method '" + cfg.method + "'");
  }
  if (!cfg.out_path.empty()) write_file(cfg.out_path, to_json(U).dump(2) + "\n");
  Json report = multi_utility_report(P, U);
  report["method"] = cfg.method;
  report["multi_utility"] = to_json(U);
  emit(out, report);
  return report["is_multi_utility"].get<bool>() ? kOk : kVerification;
}

int cmd_eliminate(const RunConfig& cfg, std::ostream& out) {
  const auto P = preorder_from_json(load_json_file(cfg.preorder_path));
  const auto f = table_from_json(load_json_file(cfg.function_path));
  const auto before = non_injective_set(P, f);
  const auto g = eliminate_noninjective(P, f);
  const auto after = non_injective_set(P, g);
  if (!cfg.out_path.empty()) write_file(cfg.out_path, to_json(g).dump(2) + "\n");
  emit(out, Json{{"function", to_json(g)},
                 {"non_injective_before", to_json(before)},
                 {"non_injective_after", to_json(after)},
                 {"class", std::string(to_string(classify(P, g)))}});
  return after.empty() ? kOk : kVerification;
}

int cmd_density(const RunConfig& cfg, std::ostream& out) {
  const auto P = preorder_from_json(load_json_file(cfg.preorder_path));
  if (!cfg.minimal_kind.empty()) {
    const DensityKind kind = parse_density_kind(cfg.minimal_kind);
    const auto Z = greedy_minimal_dense(P, kind);
    emit(out, Json{{"kind", std::string(to_string(kind))},
                   {"set", Z ? to_json(*Z) : Json(nullptr)}});
    return kOk;
  }
  const ElementSet Z = selected_set(cfg, P.size());
  Json report = to_json(density_report(P, Z));
  report["set"] = to_json(Z);
  emit(out, report);
  return kOk;
}

int cmd_maxent_audit(const RunConfig& cfg, std::ostream& out) {
  const EnergyFunction E{parse_rational_list(cfg.energy_text)};
  const Rational level = parse_rational(cfg.level_text);
  const Rational step = parse_rational(cfg.step_text);
  const auto report = maxent_audit(E, level, step);
  const LogBase base = cfg.bits ? LogBase::Bits : LogBase::Nats;
  if (!cfg.out_path.empty()) {
    std::ofstream f(cfg.out_path);
    if (!f) throw ParseError("cannot write '" + cfg.out_path + "'");
    write_maxent_csv(f, report, base);
  }
  auto dists = [](const std::vector<Dist>& v) {
    Json a = Json::array();
    for (const auto& p : v) a.push_back(to_json(p));
    return a;
  };
  double best = 0.0;
  for (double h : report.entropy) best = std::max(best, h);
  emit(out, Json{{"level", to_string(level)},
                 {"step", to_string(step)},
                 {"grid_size", report.grid_size},
                 {"maximal", report.maximal_set.size()},
                 {"entropy_argmax", report.entropy_argmax.size()},
                 {"missed", report.missed.size()},
                 {"unit", cfg.bits ? "bits" : "nats"},
                 {"max_entropy", best * (cfg.bits ? 1.0 / std::log(2.0) : 1.0)},
                 {"argmax_points", dists(report.entropy_argmax)},
                 {"missed_points", dists(report.missed)}});
  return kOk;
}

std::string relation_name(OrderRelation rel) { return std::string(to_string(rel)); }

int cmd_witness(const std::string& kind, const RunConfig& cfg, std::ostream& out) {
  const auto& args = cfg.positional;
  auto need = [&](std::size_t count) {
    if (args.size() != count) {
      throw ParseError("witness " + kind + " expects " + std::to_string(count) + " distributions");
    }
  };
  if (kind == "upper-dense") {
    need(2);
    const Dist x = parse_dist(args[0]), y = parse_dist(args[1]);
    const Dist z = upper_dense_witness(x, y);
    emit(out, Json{{"witness", to_json(z)},
                   {"x_vs_z", relation_name(uncertainty_compare(x, z))},
                   {"z_vs_y", relation_name(uncertainty_compare(z, y))},
                   {"verified", true}});
  } else if (kind == "order-dense-2") {
    need(2);
    const Dist p = parse_dist(args[0]), q = parse_dist(args[1]);
    const Dist r = order_dense_witness_dim2(p, q);
    emit(out, Json{{"witness", to_json(r)},
                   {"p_vs_r", relation_name(uncertainty_compare(p, r))},
                   {"r_vs_q", relation_name(uncertainty_compare(r, q))},
                   {"verified", true}});
  } else if (kind == "equal-entropy") {
    need(0);
    const double scale = cfg.bits ? std::log(2.0) : 1.0;
    const auto [p, q] = equal_entropy_incomparable_pair(cfg.level_real * scale, cfg.outcomes,
                                                        cfg.tol * scale);
    const LogBase base = cfg.bits ? LogBase::Bits : LogBase::Nats;
    const auto rel = uncertainty_compare(p, q);
    emit(out, Json{{"p", to_json(p)},
                   {"q", to_json(q)},
                   {"entropy_p", shannon_entropy(p, base)},
                   {"entropy_q", shannon_entropy(q, base)},
                   {"unit", cfg.bits ? "bits" : "nats"},
                   {"relation", relation_name(rel)},
                   {"verified", rel == OrderRelation::Incomparable}});
    if (rel != OrderRelation::Incomparable) return kVerification;
  } else if (kind == "trumping") {
    need(3);
    const Dist p = parse_dist(args[0]), q = parse_dist(args[1]), r = parse_dist(args[2]);
    const auto res = trumping_check(p, q, r);
    emit(out, Json{{"base_relation", relation_name(res.base_relation)},
                   {"catalyzed", res.catalyzed},
                   {"p_tensor_r", to_json(tensor(p, r))},
                   {"q_tensor_r", to_json(tensor(q, r))},
                   {"verified", true}});
  } else if (kind == "comparable-pair") {
    need(0);
    const auto [p, q] = random_comparable_pair(cfg.seed, cfg.outcomes, cfg.transfers);
    const auto rel = uncertainty_compare(p, q);
    emit(out, Json{{"seed", cfg.seed},
                   {"p", to_json(p)},
                   {"q", to_json(q)},
                   {"relation", relation_name(rel)},
                   {"entropy_p", shannon_entropy(p)},
                   {"entropy_q", shannon_entropy(q)},
                   {"verified", rel == OrderRelation::StrictlyLess}});
  } else {
    throw ParseError("unknown witness kind '" + kind + "'");
  }
  return kOk;
}

int cmd_relate(const RunConfig& cfg, std::ostream& out) {
  const auto& args = cfg.positional;
  if (args.size() != 2) throw ParseError("relate expects two arguments");
  if (!cfg.preorder_path.empty()) {
    const auto P = preorder_from_json(load_json_file(cfg.preorder_path));
    const Element x = parse_index(args[0]), y = parse_index(args[1]);
    emit(out, Json{{"relation", relation_name(relate(P, x, y))}});
  } else if (cfg.interval) {
    const Rational x = parse_rational(args[0]), y = parse_rational(args[1]);
    emit(out, Json{{"relation", relation_name(interval_preorder_relate(x, y))}});
  } else {
    const Dist p = parse_dist(args[0]), q = parse_dist(args[1]);
    emit(out, Json{{"uncertainty", relation_name(uncertainty_compare(p, q))},
                   {"majorization", relation_name(majorization_compare(p, q))}});
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Monotone representations of finite preordered spaces", "ordermono"};
  app.require_subcommand(1);
  app.add_option("--seed", cfg.seed, "Random seed (ORDERMONO_SEED overrides)");

  auto* classify_cmd = app.add_subcommand("classify", "Classify a value table on a preorder");
  classify_cmd->add_option("--preorder", cfg.preorder_path)->required();
  classify_cmd->add_option("--function", cfg.function_path)->required();

  auto* inj = app.add_subcommand("build-injective", "Injective monotone from a multi-utility");
  inj->add_option("--preorder", cfg.preorder_path)->required();
  inj->add_option("--multi-utility", cfg.multi_utility_path)->required();
  inj->add_option("--r", cfg.r_text, "Aggregation ratio in (0, 1/2)");
  inj->add_option("--out", cfg.out_path, "Write the value table here");

  auto* multi = app.add_subcommand("build-multi", "Construct a multi-utility");
  multi->add_option("--preorder", cfg.preorder_path)->required();
  multi->add_option("--method", cfg.method)
      ->check(CLI::IsMember({"indicators", "swap", "from-injective", "dense", "strict-dense"}));
  multi->add_option("--multi-utility", cfg.multi_utility_path);
  multi->add_option("--function", cfg.function_path);
  multi->add_option("--set", cfg.set_text, "Comma-separated element indices (default: all)");
  multi->add_option("--r", cfg.r_text);
  multi->add_option("--out", cfg.out_path);

  auto* elim = app.add_subcommand("eliminate", "Lift a strict monotone to an injective one");
  elim->add_option("--preorder", cfg.preorder_path)->required();
  elim->add_option("--function", cfg.function_path)->required();
  elim->add_option("--out", cfg.out_path);

  auto* density = app.add_subcommand("density", "Order-density report for a subset");
  density->add_option("--preorder", cfg.preorder_path)->required();
  density->add_option("--set", cfg.set_text, "Comma-separated element indices (default: all)");
  density->add_option("--minimal", cfg.minimal_kind,
                      "Greedy minimal set for: order, debreu, upper, debreu-upper");

  auto* maxent = app.add_subcommand("maxent-audit", "Maximal elements vs. entropy maximizers");
  maxent->add_option("--energy", cfg.energy_text, "Three comma-separated energies")->required();
  maxent->add_option("--level", cfg.level_text, "Constraint level c in <E> = c")->required();
  maxent->add_option("--step", cfg.step_text, "Grid step");
  maxent->add_option("--out", cfg.out_path, "CSV output path");
  maxent->add_flag("--bits", cfg.bits, "Report entropy in bits");

  auto* witness = app.add_subcommand("witness", "Construct and verify a witness");
  witness->require_subcommand(1);
  std::string witness_kind;
  for (const char* kind : {"upper-dense", "order-dense-2", "equal-entropy", "trumping",
                           "comparable-pair"}) {
    auto* sub = witness->add_subcommand(kind);
    sub->callback([&witness_kind, kind] { witness_kind = kind; });
    if (std::string(kind) == "equal-entropy") {
      sub->add_option("--c", cfg.level_real, "Entropy level")->required();
      sub->add_option("--n", cfg.outcomes, "Number of outcomes");
      sub->add_option("--tol", cfg.tol, "Entropy tolerance");
      sub->add_flag("--bits", cfg.bits, "Level and tolerance in bits");
    } else if (std::string(kind) == "comparable-pair") {
      sub->add_option("--n", cfg.outcomes, "Number of outcomes");
      sub->add_option("--transfers", cfg.transfers, "Number of transfers");
    } else {
      sub->add_option("dists", cfg.positional, "Comma-separated distributions");
    }
  }

  auto* relate_cmd = app.add_subcommand("relate", "Relate two elements or distributions");
  relate_cmd->add_option("--preorder", cfg.preorder_path, "Relate element indices in this preorder");
  relate_cmd->add_flag("--interval", cfg.interval, "Relate points of [0,1] u [2,3]");
  relate_cmd->add_option("args", cfg.positional)->expected(2);

  std::vector<std::string> argv_storage{"ordermono"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  }

  if (const char* env = std::getenv("ORDERMONO_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::logic_error&) {
      err << "error: ORDERMONO_SEED is not an unsigned integer\n";
      return kParse;
    }
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(cfg, out);
    if (inj->parsed()) return cmd_build_injective(cfg, out);
    if (multi->parsed()) return cmd_build_multi(cfg, out);
    if (elim->parsed()) return cmd_eliminate(cfg, out);
    if (density->parsed()) return cmd_density(cfg, out);
    if (maxent->parsed()) return cmd_maxent_audit(cfg, out);
    if (witness->parsed()) return cmd_witness(witness_kind, cfg, out);
    if (relate_cmd->parsed()) return cmd_relate(cfg, out);
  } catch (const NotMultiUtility& e) {
    err << "error: " << e.what() << '\n';
    emit(out, Json{{"error", "not a multi-utility"},
                   {"counterexample", {e.pair().first, e.pair().second}}});
    return kNotMultiUtility;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kDimension;
  } catch (const InfeasibleConstraint& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kConvergence;
  } catch (const VerificationError& e) {
    err << "error: " << e.what() << '\n';
    return kVerification;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  }
  return kFailure;
}

}  // namespace ordermono::cli
