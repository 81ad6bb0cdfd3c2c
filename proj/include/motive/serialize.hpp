#pragma once

#include "json.hpp"

#include "motive/motive.hpp"
#include "motive/parabolic.hpp"
#include "motive/rootsys.hpp"
#include "motive/weyl.hpp"

// JSON wire formats.  nlohmann::json keeps object keys sorted, so every
// document serialized here is byte-deterministic.
namespace motive {

using json = nlohmann::json;

json to_json(const DynkinType& t);
json to_json(const Root& r);
json to_json(const Cocharacter& lambda);
json to_json(const ParabolicType& tau);
json to_json(const PseudoParabolic& pp);
json to_json(const WeylElement& w); // reduced word
json to_json(const Cell& c);
json to_json(const GradedRanks& g);
json to_json(const Polynomial& p); // coefficient array
json to_json(const Summand& s);
json to_json(const MotiveDecomposition& dec);
json to_json(const IsoReport& r);

DynkinType dynkin_from_json(const json& j);
Root root_from_json(const json& j, int rank);
Cocharacter cocharacter_from_json(const json& j);
ParabolicType parabolic_from_json(const json& j);
PseudoParabolic pseudo_from_json(const json& j, int rank);
Summand summand_from_json(const json& j);
MotiveDecomposition decomposition_from_json(const json& j);

// Field helpers shared with the CLI; all throw ParseError on bad shape.
const json& require_field(const json& j, const char* name);
long long require_integer(const json& j, const char* name);
std::vector<int> int_array(const json& j, const char* what);
std::set<int> node_set_from_json(const json& j, const char* what);

} // namespace motive
