#pragma once

#include <string>
#include <vector>

#include "motive/serialize.hpp"

namespace motive {

// One verification family run to exhaustion over a rank window.  A
// failing check carries the first counterexample found.
struct CheckResult {
  std::string name;
  bool passed = true;
  long long cases = 0;
  json counterexample; // null when passed
};

struct SweepOptions {
  int max_rank = 3;
  int exponent_max = 2;
  long long weyl_cap = WeylGroup::kDefaultCap;
  // odometer guard for the exponent sweep; (exponent_max+1)^m grows fast
  long long max_assignments_per_tau = 250'000;
};

// All legal irreducible types of rank <= max_rank, in a fixed order.
std::vector<DynkinType> types_up_to_rank(int max_rank);

CheckResult check_weyl_product_formula(const std::vector<DynkinType>& types, long long weyl_cap);
CheckResult check_sum_formula(const SweepOptions& opt);
CheckResult check_twist_equality(const SweepOptions& opt);
CheckResult check_rank_equality(const SweepOptions& opt);
CheckResult check_index_monotonicity(const SweepOptions& opt);
CheckResult check_index_boundaries(const SweepOptions& opt);
CheckResult check_rost_nesting(long long d_max, long long n_max);
CheckResult check_duality_counting(const SweepOptions& opt);
CheckResult check_bb_cell_consistency(const SweepOptions& opt);

std::vector<CheckResult> run_all_sweeps(const SweepOptions& opt);

json to_json(const CheckResult& c);
json sweep_report(const std::vector<CheckResult>& checks);

} // namespace motive
