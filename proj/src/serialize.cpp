#include "motive/serialize.hpp"

namespace motive {

json to_json(const DynkinType& t) {
  return json{{"family", std::string(1, static_cast<char>(t.family))}, {"rank", t.rank}};
}

json to_json(const Root& r) { return json(r.coeffs); }

json to_json(const Cocharacter& lambda) { return json(lambda.pairings); }

json to_json(const ParabolicType& tau) { return json(std::vector<int>(tau.tau.begin(), tau.tau.end())); }

json to_json(const PseudoParabolic& pp) {
  json exps = json::array();
  for (const auto& [root, n] : pp.exponents) exps.push_back(json{{"root", to_json(root)}, {"n", n}});
  return json{{"tau", to_json(pp.tau)}, {"exponents", std::move(exps)}};
}

json to_json(const WeylElement& w) { return json(w.word()); }

json to_json(const Cell& c) { return json{{"word", to_json(c.w)}, {"dim", c.dim}}; }

json to_json(const GradedRanks& g) { return json(g.ranks); }

json to_json(const Polynomial& p) {
  if (p.is_zero()) return json::array({0});
  return json(p.coefficients());
}

json to_json(const Summand& s) {
  json base;
  if (s.is_tate()) {
    base = json{{"kind", "tate"}};
  } else {
    const FlagLabel& fl = s.flag();
    json comps = json::array();
    for (const DynkinType& t : fl.components) comps.push_back(to_json(t));
    base = json{{"kind", "flag"},
                {"components", std::move(comps)},
                {"tau_h", std::vector<int>(fl.tau_h.begin(), fl.tau_h.end())},
                {"anisotropic", fl.anisotropic}};
  }
  return json{{"base", std::move(base)}, {"twist", s.twist}};
}

json to_json(const MotiveDecomposition& dec) {
  json summands = json::array();
  for (const Summand& s : dec.summands) summands.push_back(to_json(s));
  return json{{"ambient_dim", dec.ambient_dim}, {"summands", std::move(summands)}};
}

json to_json(const IsoReport& r) {
  json f = json::array(), s = json::array();
  for (const Summand& x : r.only_in_first) f.push_back(to_json(x));
  for (const Summand& x : r.only_in_second) s.push_back(to_json(x));
  return json{{"isomorphic", r.isomorphic}, {"only_in_first", std::move(f)}, {"only_in_second", std::move(s)}};
}

const json& require_field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw ParseError("missing required field \"" + std::string(name) + "\"");
  return j.at(name);
}

long long require_integer(const json& j, const char* name) {
  const json& v = require_field(j, name);
  if (!v.is_number_integer())
    throw ParseError("field \"" + std::string(name) + "\" must be an integer");
  return v.get<long long>();
}

std::vector<int> int_array(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw ParseError(std::string(what) + " must be an array of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::set<int> node_set_from_json(const json& j, const char* what) {
  auto v = int_array(j, what);
  return std::set<int>(v.begin(), v.end());
}

DynkinType dynkin_from_json(const json& j) {
  if (j.is_string()) return DynkinType::parse(j.get<std::string>());
  const json& fam = require_field(j, "family");
  if (!fam.is_string() || fam.get<std::string>().size() != 1)
    throw ParseError("\"family\" must be a one-letter string A..G");
  const long long rank = require_integer(j, "rank");
  DynkinType t{static_cast<Family>(fam.get<std::string>()[0]), static_cast<int>(rank)};
  if (!t.legal()) throw ValidationError("illegal Dynkin type " + t.name());
  return t;
}

Root root_from_json(const json& j, int rank) {
  Root r{int_array(j, "root")};
  if (static_cast<int>(r.coeffs.size()) != rank)
    throw ValidationError("root has " + std::to_string(r.coeffs.size()) + " coordinates; expected " +
                          std::to_string(rank));
  return r;
}

Cocharacter cocharacter_from_json(const json& j) { return Cocharacter{int_array(j, "lambda")}; }

ParabolicType parabolic_from_json(const json& j) {
  return ParabolicType{node_set_from_json(j, "tau")};
}

PseudoParabolic pseudo_from_json(const json& j, int rank) {
  PseudoParabolic pp;
  pp.tau = parabolic_from_json(require_field(j, "tau"));
  const json& exps = require_field(j, "exponents");
  if (!exps.is_array()) throw ParseError("\"exponents\" must be an array");
  for (const auto& e : exps) {
    Root r = root_from_json(require_field(e, "root"), rank);
    const long long n = require_integer(e, "n");
    if (pp.exponents.count(r)) throw ValidationError("duplicate exponent entry for a root");
    pp.exponents[r] = static_cast<int>(n);
  }
  return pp;
}

namespace {

FlagLabel flag_from_json(const json& base) {
  FlagLabel fl;
  const json& comps = require_field(base, "components");
  if (!comps.is_array()) throw ParseError("\"components\" must be an array");
  for (const auto& c : comps) fl.components.push_back(dynkin_from_json(c));
  fl.tau_h = node_set_from_json(require_field(base, "tau_h"), "tau_h");
  const json& aniso = require_field(base, "anisotropic");
  if (!aniso.is_boolean()) throw ParseError("\"anisotropic\" must be a boolean");
  fl.anisotropic = aniso.get<bool>();
  const int total = fl.total_rank();
  for (int v : fl.tau_h)
    if (v < 1 || v > total)
      throw ValidationError("tau_h node " + std::to_string(v) + " outside 1.." + std::to_string(total));
  return fl;
}

} // namespace

Summand summand_from_json(const json& j) {
  const json& base = require_field(j, "base");
  const json& kind = require_field(base, "kind");
  if (!kind.is_string()) throw ParseError("base \"kind\" must be a string");
  Summand s;
  s.twist = static_cast<int>(require_integer(j, "twist"));
  if (s.twist < 0) throw ValidationError("twist must be nonnegative");
  const std::string k = kind.get<std::string>();
  if (k == "tate")
    s.base = TateBase{};
  else if (k == "flag")
    s.base = flag_from_json(base);
  else
    throw ParseError("unknown summand kind \"" + k + "\"");
  return s;
}

MotiveDecomposition decomposition_from_json(const json& j) {
  MotiveDecomposition dec;
  dec.ambient_dim = static_cast<int>(require_integer(j, "ambient_dim"));
  const json& summands = require_field(j, "summands");
  if (!summands.is_array()) throw ParseError("\"summands\" must be an array");
  for (const auto& s : summands) dec.summands.push_back(summand_from_json(s));
  sort_summands(dec.summands);
  return dec;
}

} // namespace motive
