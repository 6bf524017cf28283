#include <sstream>

#include "doctest.h"
#include "ordermono/error.hpp"
#include "ordermono/json_io.hpp"

using namespace ordermono;

TEST_CASE("preorder round trip") {
  auto P = FinitePreorder::from_relation_pairs(3, {{0, 1}, {1, 2}}, {"a", "b", "c"});
  const auto j = to_json(P);
  CHECK(j["n"] == 3);
  CHECK(j["pairs"].size() == 3);
  const auto Q = preorder_from_json(j);
  CHECK(Q == P);
  CHECK(Q.label(2) == "c");
}

TEST_CASE("preorder documents are validated") {
  CHECK_THROWS_AS(preorder_from_json(parse_json_text(R"({"pairs": []})")), ParseError);
  CHECK_THROWS_AS(preorder_from_json(parse_json_text(R"({"n": -1})")), ParseError);
  CHECK_THROWS_AS(preorder_from_json(parse_json_text(R"({"n": 2, "pairs": [[0]]})")), ParseError);
  CHECK_THROWS_AS(preorder_from_json(parse_json_text(R"({"n": 2, "pairs": [[0, 5]]})")),
                  IndexOutOfRange);
  CHECK_THROWS_AS(parse_json_text("{"), ParseError);
  CHECK_THROWS_AS(load_json_file("/nonexistent/preorder.json"), ParseError);
}

TEST_CASE("value tables accept strings and integers") {
  const auto f = table_from_json(parse_json_text(R"({"values": ["1/2", 3, "0.25", "-2"]})"));
  CHECK(f[0] == Rational(1, 2));
  CHECK(f[1] == 3);
  CHECK(f[2] == Rational(1, 4));
  CHECK(to_json(f).dump() == R"({"values":["1/2","3/1","1/4","-2/1"]})");
  CHECK(table_from_json(to_json(f)) == f);
  CHECK_THROWS_AS(table_from_json(parse_json_text(R"({"values": [0.5]})")), ParseError);
  CHECK_THROWS_AS(table_from_json(parse_json_text(R"([1, 2])")), ParseError);
}

TEST_CASE("multi-utilities and families") {
  const auto U = multi_utility_from_json(parse_json_text(R"([{"values": [0, 1]}, {"values": [1, 0]}])"));
  CHECK(U.size() == 2);
  CHECK(multi_utility_from_json(to_json(U)) == U);
  CHECK_THROWS_AS(multi_utility_from_json(parse_json_text(R"({"values": [0]})")), ParseError);

  const auto F = family_from_json(parse_json_text(R"({"sets": [[1, 2], [2]]})"), 3);
  CHECK(F.sets.size() == 2);
  CHECK(F.sets[0].members() == std::vector<Element>{1, 2});
  CHECK(to_json(F).dump() == R"({"n":3,"sets":[[1,2],[2]]})");
  CHECK_THROWS_AS(family_from_json(parse_json_text(R"({"sets": []})")), ParseError);
  CHECK_THROWS_AS(family_from_json(parse_json_text(R"({"n": 2, "sets": [[3]]})")), IndexOutOfRange);
}

TEST_CASE("density report and distributions") {
  DensityReport r{false, true, false, true, std::make_pair(Element{0}, Element{1})};
  CHECK(to_json(r).dump() ==
        R"({"debreu_dense":true,"debreu_upper_dense":true,"first_violation":[0,1],"order_dense":false,"upper_dense":false})");
  r.first_violation.reset();
  CHECK(to_json(r)["first_violation"].is_null());

  const auto p = dist_from_json(parse_json_text(R"(["1/2", "0.25", "1/4"])"));
  CHECK(to_json(p).dump() == R"(["1/2","1/4","1/4"])");
  CHECK_THROWS_AS(dist_from_json(parse_json_text(R"(["1/2", "1/4"])")), PreconditionError);
}

TEST_CASE("maxent CSV") {
  const EnergyFunction E{{Rational(1), Rational(-1), Rational(0)}};
  const auto report = maxent_audit(E, Rational(1, 4), Rational(1, 8));
  std::ostringstream os;
  write_maxent_csv(os, report);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,p1,p2,p3,entropy,is_maximal,is_entropy_argmax");
  std::size_t rows = 0;
  bool saw_p = false;
  while (std::getline(in, line)) {
    ++rows;
    if (line.rfind("1/2,1/2,1/4,1/4,", 0) == 0) {
      saw_p = true;
      CHECK(line.find("1.03972077083992,1,1") != std::string::npos);
    }
  }
  CHECK(rows == report.grid_size);
  CHECK(saw_p);
}
