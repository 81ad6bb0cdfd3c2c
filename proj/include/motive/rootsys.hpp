#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "motive/errors.hpp"

namespace motive {

enum class Family : char {
  A = 'A',
  B = 'B',
  C = 'C',
  D = 'D',
  E = 'E',
  F = 'F',
  G = 'G',
};

// Irreducible Dynkin type.  Node numbering is Bourbaki throughout:
//   A_n   1-2-...-n
//   B_n   1-2-...-(n-1)=>n          (alpha_n short)
//   C_n   1-2-...-(n-1)<=n          (alpha_n long)
//   D_n   1-2-...-(n-2)<(n-1,n)     (fork at n-2)
//   E_n   1-3-4-5-6(-7)(-8), 2 attached to 4
//   F_4   1-2=>3-4                  (alpha_3, alpha_4 short)
//   G_2   1<=2                      (alpha_1 short)
struct DynkinType {
  Family family{Family::A};
  int rank{1};

  bool legal() const;
  std::string name() const; // "A2", "E6", ...
  static DynkinType parse(std::string_view text);

  auto operator<=>(const DynkinType&) const = default;
};

// A root in simple-root coordinates: coeffs[i-1] is the coefficient of
// alpha_i.  Valid roots have all coefficients >= 0 or all <= 0.
struct Root {
  std::vector<int> coeffs;

  int coeff(int node) const { return coeffs[static_cast<size_t>(node) - 1]; }
  bool positive() const;
  bool negative() const { return !coeffs.empty() && negated().positive(); }
  Root negated() const;
  std::vector<int> support() const; // 1-based nodes with nonzero coefficient
  int height() const;               // sum of coefficients

  auto operator<=>(const Root&) const = default;
};

// One-parameter subgroup recorded by its pairings with the simple roots:
// pairings[i-1] = <lambda, alpha_i>.  Dominant means all entries >= 0.
struct Cocharacter {
  std::vector<int> pairings;

  int entry(int node) const { return pairings[static_cast<size_t>(node) - 1]; }
  bool dominant() const;

  auto operator<=>(const Cocharacter&) const = default;
};

// Full root system of an irreducible type, with exact integer data only.
//
// Cartan convention: cartan(i,j) = <alpha_j, alpha_i^vee>
//                               = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i),
// so the pairing of a root beta with the coroot alpha_i^vee is row i of
// the Cartan matrix dotted with beta's coefficient vector.
class RootSystem {
public:
  explicit RootSystem(DynkinType type);

  const DynkinType& type() const { return type_; }
  int rank() const { return type_.rank; }

  int cartan(int i, int j) const {
    return cartan_[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1];
  }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  const std::vector<Root>& positive_roots() const { return positive_; }
  std::vector<Root> negative_roots() const;
  Root simple(int node) const;
  bool contains(const Root& beta) const { return root_set_.count(beta) > 0; }

  // <beta, alpha_node^vee>
  int coroot_pairing(int node, const Root& beta) const;
  // s_node(beta) = beta - <beta, alpha_node^vee> alpha_node
  Root reflect(int node, const Root& beta) const;

  // <lambda, beta> extended linearly from the simple roots; beta must be
  // a root of this system.
  int pairing(const Cocharacter& lambda, const Root& beta) const;

  // Degrees of the fundamental invariants; their product is |W|.
  const std::vector<int>& degrees() const { return degrees_; }
  long long weyl_order() const;

  void check_node(int node) const;
  void check_node_set(const std::set<int>& nodes) const;
  void check_cocharacter(const Cocharacter& lambda) const;

private:
  DynkinType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> positive_; // ordered by height, then lexicographically
  std::set<Root> root_set_;    // positive and negative
  std::vector<int> degrees_;
};

// Spec-level name for RootSystem construction.
inline RootSystem build_root_system(DynkinType type) { return RootSystem(type); }

// Cartan matrix of a legal type, same convention as RootSystem::cartan.
std::vector<std::vector<int>> cartan_matrix_for(const DynkinType& type);

// Free-function form of RootSystem::pairing.
inline int pairing(const Cocharacter& lambda, const Root& beta, const RootSystem& sys) {
  return sys.pairing(lambda, beta);
}

} // namespace motive
