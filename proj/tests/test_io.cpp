#include <doctest.h>

#include <json.hpp>

#include "d6spin/coherent.hpp"
#include "d6spin/crystal.hpp"
#include "d6spin/io.hpp"

using namespace d6;
using nlohmann::json;

TEST_CASE("element JSON") {
  const Element b = *apply_f(Element{}, Level::infinity(), 0);
  const std::string text = element_to_json(b, Level::infinity());
  const json j = json::parse(text);
  CHECK(j["level"] == "inf");
  CHECK(j["b"][0] == json({1, 0, 0, 0, 0, -1}));
  const auto back = element_from_json(text);
  CHECK(back.b == b);
  CHECK(back.level.is_infinite());

  const auto finite = element_from_json(element_to_json(Element::diag(2), Level::finite(2)));
  CHECK(finite.level == Level::finite(2));
  CHECK(element_from_json("[[1,0,0,0,0,0],[1,0,0,0,0,0],[1,0,0,0,0,0],[1,0,0,0,0,0],"
                          "[1,0,0,0,0,0],[1,0,0,0,0,0]]")
            .b == Element::diag(1));
  CHECK(rows_to_json(Element::diag(1)).rfind("[[1,0,0,0,0,0],", 0) == 0);

  CHECK_THROWS_AS(element_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(element_from_json(R"({"b": [[1,2]]})"), std::invalid_argument);
  CHECK_THROWS_AS(element_from_json(R"({"level": 1})"), std::invalid_argument);
}

TEST_CASE("point JSON") {
  UDPoint x{};
  for (int i = 0; i < kUdDim; ++i) x[i] = i - 7;
  const json j = json::parse(point_to_json(x));
  CHECK(j["vars"].size() == 15);
  CHECK(j["vars"][0] == "x6_3");
  CHECK(point_from_json(point_to_json(x)) == x);
  CHECK(point_from_json(j["x"].dump()) == x);
  CHECK_THROWS_AS(point_from_json("[1,2,3]"), std::invalid_argument);
  CHECK_THROWS_AS(point_from_json(R"({"vars": ["a"], "x": [0,0,0,0,0,0,0,0,0,0,0,0,0,0,0]})"),
                  std::invalid_argument);
}

TEST_CASE("derived JSON") {
  const json s = json::parse(stats_to_json(Element::diag(1), Level::finite(1)));
  CHECK(s["eps"] == json({1, 0, 0, 0, 0, 0, 0}));
  CHECK(s["phi"] == json({0, 0, 0, 0, 0, 0, 1}));
  CHECK(s["wt"] == json({-1, 0, 0, 0, 0, 0, 1}));

  const Element f1 = *apply_f(Element{}, Level::infinity(), 1);
  const json d = json::parse(decomposition_to_json(decompose(f1)));
  CHECK(d["l"] == 1);
  CHECK(d["a"] == json({0, 1, 0, 0, 0, 0, 0}));
  CHECK(d["b0"]["level"] == 1);

  const json m = json::parse(minimal_set_to_json(2));
  CHECK(m.size() == 13);
  CHECK(m[0].contains("a"));
}
