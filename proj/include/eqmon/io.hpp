#pragma once

#include <filesystem>

#include <json.hpp>

#include "eqmon/collapsing.hpp"

namespace eqmon {

// Input schemas:
//   group: {"kind":"table","names":[...],"table":[[...]]}
//        | {"kind":"named","family":"cyclic|dihedral|symmetric|product","n":k,
//           "factors":[<group>, <group>]}
//   G-set: {"group":<group>,"points":["0",...],"action":{"<element>":[images]}}
// Images may be point names or indices. All errors are Error(ParseError) unless
// the data parses but fails validation, in which case the validating
// constructor's error propagates.

GroupSpec parse_group_spec(nlohmann::json const& doc);
Group parse_group(nlohmann::json const& doc);
GSet parse_gset(nlohmann::json const& doc);

nlohmann::json read_json_file(std::filesystem::path const& path);
GSet load_gset(std::filesystem::path const& path);

/// A G-set in the input schema, with the group written as a table.
nlohmann::json gset_to_json(GSet const& X);

/// {"element":"(3000)","x":1,"y":3,"z":1,"H":["e"],"K_class":[["e","a"]],"fixing":false}
nlohmann::ordered_json witness_to_json(GSet const& X, EquivMap const& f,
                                       CollapsingWitness const& w,
                                       bool fixing);

}  // namespace eqmon
