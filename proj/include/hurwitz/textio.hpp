#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hurwitz/constellation.hpp"
#include "hurwitz/family.hpp"
#include "hurwitz/perm.hpp"
#include "hurwitz/ramdata.hpp"

namespace hurwitz {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " at position " + std::to_string(position)),
        position(position) {}
  std::size_t position;
};

// Ramification data: "[1,3][2,2][2,2][2,2]".
RamData parse_ramdata(std::string_view text);
std::string format_ramdata(const RamData& data);  // entries printed ascending

// Family: "[1,3|2*][2*][2*][2*]"; entries before '|' are the irregular part,
// "k*" is the regular filler.
FamilySpec parse_family(std::string_view text);
std::string format_family(const FamilySpec& f);

// Witness: cycle notation per permutation, '|'-separated:
// "(0 1)(2 3 4) | (0 2)(1 3 4)". Fixed points are omitted, so the degree
// must be supplied.
Perm parse_perm_cycles(std::string_view text, int degree);
Constellation parse_witness(std::string_view text, int degree);
std::string format_perm_cycles(const Perm& p);
std::string format_witness(const Constellation& c);

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Json to_json(const RamData& data);
Json to_json(const FamilySpec& f);
Json to_json(const Constellation& c);  // array of image tables + degree
RamData ramdata_from_json(const Json& j);
FamilySpec family_from_json(const Json& j);
Constellation witness_from_json(const Json& j);

}  // namespace hurwitz
