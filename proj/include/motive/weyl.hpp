#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "motive/poly.hpp"
#include "motive/rootsys.hpp"

namespace motive {

// A Weyl group element.  Identity is the empty word.  Elements compare
// equal iff their actions on the root lattice agree; the stored word is
// one reduced word (BFS discovery order), not a canonical one.
class WeylElement {
public:
  int length() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }

  // action matrix: column j-1 holds w(alpha_j) in simple-root coordinates
  const std::vector<std::vector<int>>& action() const { return action_; }
  const std::vector<std::vector<int>>& inverse_action() const { return inverse_; }

  Root apply(const Root& beta) const;
  Root apply_inverse(const Root& beta) const;
  bool maps_simple_positive(int node) const;         // w(alpha_node) > 0
  bool inverse_maps_simple_positive(int node) const; // w^-1(alpha_node) > 0

  bool operator==(const WeylElement& o) const { return action_ == o.action_; }

private:
  friend class WeylGroup;
  std::vector<int> word_;
  std::vector<std::vector<int>> action_;  // columns w(alpha_j)
  std::vector<std::vector<int>> inverse_; // columns w^-1(alpha_j)
};

// Minimal-length representatives of the cosets w W_S, where W_S is
// generated by the reflections of `stabilizer`.  With the parabolic-type
// convention used throughout, stabilizer = Delta \ tau.
struct CosetSystem {
  std::set<int> stabilizer;
  std::vector<WeylElement> reps;
};

// Exhaustive enumeration of a finite Weyl group, breadth-first by
// length.  The table is immutable after construction; all queries are
// pure.
class WeylGroup {
public:
  static constexpr long long kDefaultCap = 1'000'000;

  explicit WeylGroup(RootSystem sys, long long enumeration_cap = kDefaultCap);

  const RootSystem& system() const { return sys_; }
  long long order() const { return static_cast<long long>(elements_.size()); }
  const std::vector<WeylElement>& elements() const { return elements_; } // sorted by length
  const WeylElement& identity() const { return elements_.front(); }

  Polynomial length_generating_function() const;

  // w with w(alpha) > 0 for every alpha in `stabilizer`
  CosetSystem min_coset_reps(const std::set<int>& stabilizer) const;

  // w with w(alpha) > 0 for alpha in `right` and w^-1(alpha) > 0 for
  // alpha in `left`: the unique minimal-length element of each
  // (W_left, W_right) double coset.
  std::vector<WeylElement> min_double_coset_reps(const std::set<int>& left,
                                                 const std::set<int>& right) const;

  // The parabolic subgroup W_S generated by the reflections in `nodes`,
  // with lengths taken in the ambient group.
  std::vector<WeylElement> subgroup_elements(const std::set<int>& nodes) const;

  // Table lookup of a*b; both operands must belong to this group.
  const WeylElement& multiply(const WeylElement& a, const WeylElement& b) const;
  const WeylElement& element_for_action(const std::vector<std::vector<int>>& action) const;

private:
  std::vector<WeylElement> bfs(const std::vector<int>& generators, long long cap) const;

  RootSystem sys_;
  std::vector<WeylElement> elements_;
  std::vector<std::pair<std::vector<int>, size_t>> index_; // flattened action -> element
};

// Conjugate lambda into the dominant chamber by repeated simple
// reflections at negative entries.  Pairings against the full root set
// are preserved as a multiset.
Cocharacter dominant_form(const Cocharacter& lambda, const RootSystem& sys);

} // namespace motive
