#include "motive/parabolic.hpp"

#include <algorithm>

namespace motive {

namespace {

std::string root_text(const Root& r) {
  std::string s = "[";
  for (size_t i = 0; i < r.coeffs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(r.coeffs[i]);
  }
  return s + "]";
}

bool support_meets(const Root& r, const std::set<int>& nodes) {
  for (int v : nodes)
    if (r.coeff(v) != 0) return true;
  return false;
}

} // namespace

std::set<int> ParabolicType::stabilizer_nodes(const RootSystem& sys) const {
  validate(sys);
  std::set<int> s;
  for (int i = 1; i <= sys.rank(); ++i)
    if (!tau.count(i)) s.insert(i);
  return s;
}

std::vector<Root> tangent_roots(const ParabolicType& tau, const RootSystem& sys) {
  tau.validate(sys);
  std::vector<Root> out;
  for (const Root& pos : sys.positive_roots()) {
    Root neg = pos.negated();
    if (support_meets(neg, tau.tau)) out.push_back(neg);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const PseudoParabolic& validate_pseudo(const PseudoParabolic& pp, const RootSystem& sys) {
  pp.tau.validate(sys);
  std::vector<Root> tangent = tangent_roots(pp.tau, sys);
  std::set<Root> expected(tangent.begin(), tangent.end());
  for (const auto& [root, n] : pp.exponents) {
    if (!expected.count(root))
      throw ValidationError("exponent given on " + root_text(root) +
                            ", which is not a tangent root of the parabolic type");
    if (n < 0)
      throw ValidationError("negative exponent " + std::to_string(n) + " on root " + root_text(root));
  }
  for (const Root& r : tangent)
    if (!pp.exponents.count(r))
      throw ValidationError("missing exponent on tangent root " + root_text(r));
  return pp;
}

} // namespace motive
