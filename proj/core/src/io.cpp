#include "d6spin/io.hpp"

#include "d6spin/crystal.hpp"
#include "json.hpp"

namespace d6 {

namespace {

using nlohmann::json;

json rows(const Element& b) {
  json r = json::array();
  for (int i = 1; i <= 6; ++i) {
    json row = json::array();
    for (int j = i; j <= i + 5; ++j) row.push_back(b(i, j));
    r.push_back(row);
  }
  return r;
}

json level_json(const Level& l) { return l.is_infinite() ? json("inf") : json(l.value()); }

json element_json(const Element& b, const Level& l) {
  return json{{"level", level_json(l)}, {"b", rows(b)}};
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

Int integer(const json& v, const char* what) {
  if (!v.is_number_integer())
    throw std::invalid_argument(std::string(what) + " must be an integer");
  return v.get<Int>();
}

json weights(const Weight& w) { return json(std::vector<Int>(w.begin(), w.end())); }

}  // namespace

std::string rows_to_json(const Element& b) { return rows(b).dump(); }

std::string element_to_json(const Element& b, const Level& level) {
  return element_json(b, level).dump();
}

std::string elements_to_json(const std::vector<Element>& bs, const Level& level) {
  json arr = json::array();
  for (const auto& b : bs) arr.push_back(element_json(b, level));
  return arr.dump();
}

LoadedElement element_from_json(const std::string& text) {
  const json j = parse(text);
  const json* body = &j;
  LoadedElement out;
  if (j.is_object()) {
    if (!j.contains("b")) throw std::invalid_argument("element JSON needs a \"b\" field");
    body = &j.at("b");
    if (j.contains("level")) {
      const json& lv = j.at("level");
      if (lv.is_string())
        out.level = Level::parse(lv.get<std::string>());
      else
        out.level = Level::finite(integer(lv, "level"));
    }
  }
  if (!body->is_array() || body->size() != 6) throw std::invalid_argument("\"b\" must hold 6 rows");
  for (int i = 1; i <= 6; ++i) {
    const json& row = body->at(i - 1);
    if (!row.is_array() || row.size() != 6)
      throw std::invalid_argument("row " + std::to_string(i) + " must hold 6 entries");
    for (int d = 0; d < 6; ++d) out.b(i, i + d) = integer(row.at(d), "entry");
  }
  return out;
}

std::string point_to_json(const UDPoint& x) {
  return json{{"vars", ud_variable_names()}, {"x", std::vector<Int>(x.begin(), x.end())}}.dump();
}

UDPoint point_from_json(const std::string& text) {
  const json j = parse(text);
  const json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("x")) throw std::invalid_argument("point JSON needs an \"x\" field");
    arr = &j.at("x");
    if (j.contains("vars") && j.at("vars") != json(ud_variable_names()))
      throw std::invalid_argument("\"vars\" must list the coordinates in the standard order");
  }
  if (!arr->is_array() || arr->size() != kUdDim)
    throw std::invalid_argument("a point has 15 integer coordinates");
  UDPoint x{};
  for (int i = 0; i < kUdDim; ++i) x[i] = integer(arr->at(i), "coordinate");
  return x;
}

std::string stats_to_json(const Element& b, const Level& level) {
  return json{{"eps", weights(epsilon_vector(b, level))},
              {"phi", weights(phi_vector(b, level))},
              {"wt", weights(weight(b))}}
      .dump();
}

std::string decomposition_to_json(const Decomposition& d) {
  const Level l = Level::finite(d.l);
  return json{{"l", d.l},
              {"a", std::vector<Int>(d.a.a.begin(), d.a.a.end())},
              {"b0", element_json(d.b0, l)},
              {"b", element_json(d.b, l)}}
      .dump();
}

std::string minimal_set_to_json(Int l) {
  json arr = json::array();
  for (const auto& a : coefficient_solutions(l))
    arr.push_back(json{{"a", std::vector<Int>(a.a.begin(), a.a.end())},
                       {"element", element_json(minimal_from_coeffs(a), Level::finite(l))}});
  return arr.dump();
}

}  // namespace d6
