#pragma once

#include <map>
#include <set>
#include <vector>

#include "motive/rootsys.hpp"

namespace motive {

// Conjugacy class of parabolic subgroups, named by the subset tau of
// Dynkin nodes.  Convention, fixed for the whole project: tau lists the
// classes of maximal parabolics containing P, so tau = {} is the whole
// group (X a point) and tau = all nodes is the Borel class.  The Levi /
// stabilizer node set is the complement of tau.
struct ParabolicType {
  std::set<int> tau;

  void validate(const RootSystem& sys) const { sys.check_node_set(tau); }
  std::set<int> stabilizer_nodes(const RootSystem& sys) const;

  auto operator<=>(const ParabolicType&) const = default;
};

// Negative roots whose support meets tau: the roots of the unipotent
// radical opposite to P.  Their count is dim X_tau.
std::vector<Root> tangent_roots(const ParabolicType& tau, const RootSystem& sys);

// Parabolic subgroup scheme datum: the reduced type plus a finite
// exponent n(beta) >= 0 on each tangent root.  The exponent scales the
// coordinate on the big cell by the n(beta)-th power of Frobenius; only
// finiteness and nonnegativity matter downstream.
struct PseudoParabolic {
  ParabolicType tau;
  std::map<Root, int> exponents;
};

// Accepts iff the exponent domain is exactly tangent_roots(pp.tau) and
// all values are >= 0.  Errors name the offending root.
const PseudoParabolic& validate_pseudo(const PseudoParabolic& pp, const RootSystem& sys);

inline ParabolicType reduced_part(const PseudoParabolic& pp) { return pp.tau; }

} // namespace motive
