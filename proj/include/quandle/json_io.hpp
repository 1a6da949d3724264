#ifndef QUANDLE_JSON_IO_HPP
#define QUANDLE_JSON_IO_HPP

// JSON forms of the library's value types. Needs nlohmann/json (single header
// "json.hpp" on the include path).

#include <string>
#include <vector>

#include "json.hpp"

#include "quandle/core.hpp"
#include "quandle/error.hpp"
#include "quandle/link_diagram.hpp"
#include "quandle/morphisms.hpp"
#include "quandle/permutation.hpp"

namespace quandle {

using Json = nlohmann::json;

namespace detail {

template <typename T>
T json_field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string(what) + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string(what) + ": bad \"" + key + "\": " + e.what());
  }
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace detail

// {"n": 3, "image": [2, 3, 1]}
inline Json to_json(const Permutation& p) {
  return Json{{"n", p.degree()}, {"image", std::vector<int>(p.image().begin(), p.image().end())}};
}

inline Permutation permutation_from_json(const Json& j) {
  const int n = detail::json_field<int>(j, "n", "permutation");
  auto image = detail::json_field<std::vector<int>>(j, "image", "permutation");
  if (static_cast<int>(image.size()) != n)
    throw ParseError("permutation: image has " + std::to_string(image.size()) + " entries, expected " +
                     std::to_string(n));
  return Permutation::from_image(std::move(image));
}

// {"order": m, "table": [[...], ...]}, row x holds x*y.
inline Json to_json(const Quandle& q) { return Json{{"order", q.order()}, {"table", q.table()}}; }

// Shape-checked but not axiom-checked, so that callers can report failures.
inline CayleyTable cayley_table_from_json(const Json& j) {
  const int m = detail::json_field<int>(j, "order", "quandle");
  auto table = detail::json_field<CayleyTable>(j, "table", "quandle");
  if (m < 0 || static_cast<int>(table.size()) != m)
    throw ParseError("quandle: table has " + std::to_string(table.size()) + " rows, order is " + std::to_string(m));
  return table;
}

inline Quandle quandle_from_json(const Json& j) { return Quandle::from_table(cayley_table_from_json(j)); }

// {"m": 2, "weights": [[0, 1], [1, 0]]}
inline Json to_json(const LinkingGraph& g) { return Json{{"m", g.m}, {"weights", g.weights}}; }

inline LinkingGraph linking_graph_from_json(const Json& j) {
  const int m = detail::json_field<int>(j, "m", "linking graph");
  auto weights = detail::json_field<std::vector<std::vector<long long>>>(j, "weights", "linking graph");
  if (static_cast<int>(weights.size()) != m)
    throw ParseError("linking graph: weights has " + std::to_string(weights.size()) + " rows, m is " +
                     std::to_string(m));
  return LinkingGraph::from_weights(std::move(weights));
}

// A list of maps as image arrays: [[0, 2, 1], [0, 1, 2]].
inline std::vector<QuandleMap> maps_from_json(const Json& j, int source_order, int target_order) {
  if (!j.is_array()) throw ParseError("maps: expected an array of image arrays");
  std::vector<QuandleMap> maps;
  for (const auto& entry : j) {
    std::vector<Element> image;
    try {
      image = entry.get<std::vector<Element>>();
    } catch (const Json::exception& e) {
      throw ParseError(std::string("maps: ") + e.what());
    }
    if (static_cast<int>(image.size()) != source_order)
      throw ParseError("maps: image of length " + std::to_string(image.size()) + ", expected " +
                       std::to_string(source_order));
    for (Element v : image)
      if (v < 0 || v >= target_order) throw ParseError("maps: value " + std::to_string(v) + " out of range");
    maps.push_back({source_order, target_order, std::move(image)});
  }
  return maps;
}

}  // namespace quandle

#endif  // QUANDLE_JSON_IO_HPP
