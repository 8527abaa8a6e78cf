#include "eqmon/io.hpp"

#include <fstream>

#include "eqmon/error.hpp"

namespace eqmon {

using nlohmann::json;

namespace {

json const& field(json const& doc, char const* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  }
  return doc.at(key);
}

template <typename T>
T as(json const& value, char const* what) {
  try {
    return value.get<T>();
  } catch (json::exception const& e) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

}  // namespace

GroupSpec parse_group_spec(json const& doc) {
  auto const family = as<std::string>(field(doc, "family"), "family");
  GroupSpec spec;
  if (family == "product") {
    auto const& factors = field(doc, "factors");
    if (!factors.is_array() || factors.size() != 2) {
      throw Error(ErrorCode::ParseError, "product needs exactly two factors");
    }
    spec.family = GroupSpec::Family::Product;
    spec.n = 0;
    spec.factors = {parse_group_spec(factors[0]), parse_group_spec(factors[1])};
    return spec;
  }
  if (family == "cyclic") {
    spec.family = GroupSpec::Family::Cyclic;
  } else if (family == "dihedral") {
    spec.family = GroupSpec::Family::Dihedral;
  } else if (family == "symmetric") {
    spec.family = GroupSpec::Family::Symmetric;
  } else {
    throw Error(ErrorCode::ParseError, "unknown group family '" + family + "'");
  }
  spec.n = as<unsigned>(field(doc, "n"), "n");
  return spec;
}

Group parse_group(json const& doc) {
  std::string const kind = doc.is_object() && doc.contains("kind")
                               ? as<std::string>(doc.at("kind"), "kind")
                               : "named";
  if (kind == "named") {
    return build_named_group(parse_group_spec(doc));
  }
  if (kind == "table") {
    auto names = as<std::vector<std::string>>(field(doc, "names"), "names");
    auto table = as<std::vector<std::vector<Element>>>(field(doc, "table"), "table");
    return build_group_from_table(std::move(names), table);
  }
  throw Error(ErrorCode::ParseError, "unknown group kind '" + kind + "'");
}

GSet parse_gset(json const& doc) {
  Group G = parse_group(field(doc, "group"));
  auto names = as<std::vector<std::string>>(field(doc, "points"), "points");
  json const& action = field(doc, "action");
  if (!action.is_object()) {
    throw Error(ErrorCode::ParseError, "action must be an object keyed by element name");
  }
  auto point_index = [&](json const& v) -> Point {
    if (v.is_number_unsigned()) {
      return v.get<Point>();
    }
    if (v.is_string()) {
      auto it = std::find(names.begin(), names.end(), v.get<std::string>());
      if (it == names.end()) {
        throw Error(ErrorCode::ParseError, "unknown point '" + v.get<std::string>() + "'");
      }
      return static_cast<Point>(it - names.begin());
    }
    throw Error(ErrorCode::ParseError, "action images must be names or indices");
  };
  std::vector<std::vector<Point>> table(G.order());
  for (Element g = 0; g < G.order(); ++g) {
    if (!action.contains(G.name(g))) {
      throw Error(ErrorCode::ParseError, "action row for element '" + G.name(g) + "' missing");
    }
    json const& row = action.at(G.name(g));
    if (!row.is_array()) {
      throw Error(ErrorCode::ParseError, "action row '" + G.name(g) + "' is not an array");
    }
    for (json const& v : row) {
      table[g].push_back(point_index(v));
    }
  }
  if (action.size() != G.order()) {
    throw Error(ErrorCode::ParseError, "action lists elements that are not in the group");
  }
  if (names.empty()) {
    throw Error(ErrorCode::EmptyPointSet, "a G-set needs at least one point");
  }
  return build_gset(std::move(G), table, std::move(names));
}

json read_json_file(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  }
  try {
    return json::parse(in);
  } catch (json::parse_error const& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

GSet load_gset(std::filesystem::path const& path) { return parse_gset(read_json_file(path)); }

json gset_to_json(GSet const& X) {
  Group const& G = X.group();
  std::vector<std::vector<Element>> table(G.order(), std::vector<Element>(G.order()));
  for (Element a = 0; a < G.order(); ++a) {
    for (Element b = 0; b < G.order(); ++b) {
      table[a][b] = G.mul(a, b);
    }
  }
  json action = json::object();
  for (Element g = 0; g < G.order(); ++g) {
    json row = json::array();
    for (Point x = 0; x < X.size(); ++x) {
      row.push_back(X.point_name(X.act(g, x)));
    }
    action[G.name(g)] = std::move(row);
  }
  return {{"group", {{"kind", "table"}, {"names", G.names()}, {"table", table}}},
          {"points", X.point_names()},
          {"action", std::move(action)}};
}

nlohmann::ordered_json witness_to_json(GSet const& X, EquivMap const& f,
                                       CollapsingWitness const& w, bool fixing) {
  Group const& G = X.group();
  json k_class = json::array();
  for (Subgroup const& K : w.type.k_class) {
    k_class.push_back(element_names(G, K));
  }
  return {{"element", format_word(X, f)},
          {"x", w.x},
          {"y", w.y},
          {"z", w.z},
          {"H", element_names(G, w.type.h)},
          {"K_class", std::move(k_class)},
          {"fixing", fixing}};
}

}  // namespace eqmon
