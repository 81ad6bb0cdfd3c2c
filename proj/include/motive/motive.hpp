#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "motive/parabolic.hpp"
#include "motive/poly.hpp"
#include "motive/rootsys.hpp"
#include "motive/weyl.hpp"

namespace motive {

// Ranks of the graded pieces of the Chow group, indexed by dimension.
struct GradedRanks {
  std::vector<long long> ranks;

  long long total() const;
  bool palindromic() const;
  int top_dim() const { return static_cast<int>(ranks.size()) - 1; }

  bool operator==(const GradedRanks&) const = default;
};

// Affine cell indexed by a minimal coset representative.
struct Cell {
  WeylElement w;
  int dim = 0;
};

// Canonical label of a split flag variety: a product of irreducible
// factors, each an X_tau for one Dynkin component.  Components are
// canonically sorted and renumbered consecutively (Bourbaki inside each
// factor); factors on which tau_h is empty are point factors and are
// dropped.  The empty label is the point and is represented by TateBase
// instead.
struct FlagLabel {
  std::vector<DynkinType> components;
  std::set<int> tau_h;
  bool anisotropic = false;

  int total_rank() const;
  std::string key() const;

  bool operator==(const FlagLabel&) const = default;
};

struct TateBase {
  bool operator==(const TateBase&) const = default;
};

using SummandBase = std::variant<TateBase, FlagLabel>;

struct Summand {
  SummandBase base;
  int twist = 0;

  bool is_tate() const { return std::holds_alternative<TateBase>(base); }
  const FlagLabel& flag() const { return std::get<FlagLabel>(base); }
  std::string base_key() const; // "" for Tate, FlagLabel::key() otherwise

  bool operator==(const Summand&) const = default;
};

// Multiset of twisted summands; kept sorted by (twist, base key) so that
// equal decompositions are representation-identical.
struct MotiveDecomposition {
  int ambient_dim = 0;
  std::vector<Summand> summands;

  bool operator==(const MotiveDecomposition&) const = default;
};

struct IsoReport {
  bool isomorphic = false;
  std::vector<Summand> only_in_first;
  std::vector<Summand> only_in_second;
};

// --- cell-level invariants -------------------------------------------------

// One cell per element of W^tau (stabilizer = complement of tau),
// dim = length.  The pseudo twist of the variety does not change this
// list: the comparison morphism is a homeomorphism on cells.
std::vector<Cell> cell_decomposition(const ParabolicType& tau, const WeylGroup& W);

// Length generating function of W^tau; degree = dim X_tau; palindromic.
Polynomial poincare_polynomial(const ParabolicType& tau, const WeylGroup& W);

GradedRanks chow_ranks(const ParabolicType& tau, const WeylGroup& W);

// Same ranks, reached through the non-reduced datum: the dimension is
// read off the exponent domain and the cells off the reduced part.  The
// result is checked against chow_ranks of the reduced part; a mismatch
// is an implementation bug and raises InvariantViolation.
GradedRanks chow_ranks_pseudo(const PseudoParabolic& pp, const WeylGroup& W);

// --- one-parameter-subgroup decompositions ---------------------------------

// #{beta in w(tangent_roots(tau)) : <lambda, beta> > 0}: the dimension
// of the positive eigenspace on the tangent space at the fixed point
// indexed by w.
int bb_twist(const Cocharacter& lambda, const WeylElement& w, const ParabolicType& tau,
             const RootSystem& sys);

// The same count traversing the exponent map of the non-reduced datum:
// each coordinate carries weight scaled by a p-power with p > 3, which
// never changes the sign.  The result is asserted equal to bb_twist on
// the reduced part.
int bb_twist_pseudo(const Cocharacter& lambda, const WeylElement& w, const PseudoParabolic& pp,
                    const RootSystem& sys);

// Fixed-point decomposition for a dominant cocharacter.  One summand per
// minimal (W_lambda, W_{Delta\tau}) double-coset representative w, with
// base the flag variety of the lambda-centralizer Levi of type
// tau_H(w) = {a in Delta_lambda : w^-1(a) outside the span of Delta\tau}
// and twist bb_twist(lambda, w, tau).  The output is checked against the
// Poincare polynomial of X_tau on every call.
MotiveDecomposition bb_decomposition(const Cocharacter& lambda, const ParabolicType& tau,
                                     const WeylGroup& W);

// Same decomposition computed through the non-reduced datum (twists via
// bb_twist_pseudo).
MotiveDecomposition bb_decomposition_pseudo(const Cocharacter& lambda, const PseudoParabolic& pp,
                                            const WeylGroup& W);

// One decomposition step over a field recorded by its set of circled
// nodes delta (inner forms: no Galois action on the diagram).  Runs
// bb_decomposition for the cocharacter with pairing 1 on delta and 0
// elsewhere; summands with nonempty type are flags of the anisotropic
// kernel (type inside the complement of delta) and are labeled
// anisotropic; summands with empty type are Tate.
MotiveDecomposition decompose_over_index(const std::set<int>& delta, const ParabolicType& tau,
                                         const WeylGroup& W);

// Multiset equality of summands, with the symmetric difference on
// failure.
IsoReport motive_iso_check(const MotiveDecomposition& first, const MotiveDecomposition& second);

// (d+1)^(n_K - n), the nilpotence exponent bound for a d-dimensional
// variety whose decomposition has n terms over the base and n_K terms
// over the closure.  Exact; overflow past 64 bits raises ResourceError.
unsigned long long rost_bound(long long d, long long n, long long n_K);

// |W^tau|: the number of terms when every fixed component is a point.
long long n_K_for(const ParabolicType& tau, const WeylGroup& W);

// --- label machinery --------------------------------------------------------

// Connected components of the subdiagram induced on `nodes`, each sorted,
// listed in order of smallest node.
std::vector<std::vector<int>> diagram_components(const RootSystem& sys, const std::set<int>& nodes);

struct ComponentClassification {
  DynkinType type;
  // all isomorphisms component -> standard Bourbaki numbering,
  // as maps ambient node -> standard node
  std::vector<std::map<int, int>> isomorphisms;
};

ComponentClassification classify_component(const RootSystem& sys, const std::vector<int>& nodes);

// Build the canonical label for the flag of the Levi on `levi_nodes`
// with ambient parabolic nodes `tau_h`; requires tau_h nonempty.
FlagLabel make_flag_label(const RootSystem& sys, const std::set<int>& levi_nodes,
                          const std::set<int>& tau_h, bool anisotropic);

// Split Poincare polynomial of a summand base (1 for Tate), and the
// twist-weighted total of a decomposition.
Polynomial split_poincare(const SummandBase& base, long long weyl_cap = WeylGroup::kDefaultCap);
Polynomial total_poincare(const MotiveDecomposition& dec, long long weyl_cap = WeylGroup::kDefaultCap);

void sort_summands(std::vector<Summand>& summands);

} // namespace motive
