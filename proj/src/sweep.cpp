#include "motive/sweep.hpp"

#include <algorithm>
#include <cmath>

namespace motive {

namespace {

// all subsets of {1..rank}, in mask order (deterministic)
std::vector<std::set<int>> all_node_subsets(int rank) {
  std::vector<std::set<int>> out;
  for (unsigned mask = 0; mask < (1u << rank); ++mask) {
    std::set<int> s;
    for (int i = 0; i < rank; ++i)
      if (mask & (1u << i)) s.insert(i + 1);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Cocharacter> zero_one_dominant(int rank) {
  std::vector<Cocharacter> out;
  for (unsigned mask = 0; mask < (1u << rank); ++mask) {
    std::vector<int> v(static_cast<size_t>(rank), 0);
    for (int i = 0; i < rank; ++i)
      if (mask & (1u << i)) v[static_cast<size_t>(i)] = 1;
    out.push_back(Cocharacter{std::move(v)});
  }
  return out;
}

bool advance_odometer(std::vector<int>& vals, int max_value) {
  for (size_t i = 0; i < vals.size(); ++i) {
    if (vals[i] < max_value) {
      ++vals[i];
      std::fill(vals.begin(), vals.begin() + static_cast<long>(i), 0);
      return true;
    }
  }
  return false;
}

json case_payload(const DynkinType& type, const std::set<int>& tau) {
  return json{{"group", to_json(type)}, {"tau", std::vector<int>(tau.begin(), tau.end())}};
}

} // namespace

std::vector<DynkinType> types_up_to_rank(int max_rank) {
  std::vector<DynkinType> out;
  for (int r = 1; r <= max_rank; ++r)
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G}) {
      DynkinType t{f, r};
      if (t.legal()) out.push_back(t);
    }
  return out;
}

CheckResult check_weyl_product_formula(const std::vector<DynkinType>& types, long long weyl_cap) {
  CheckResult res{"weyl-product-formula"};
  for (const DynkinType& t : types) {
    WeylGroup W(RootSystem(t), weyl_cap);
    Polynomial product = Polynomial::one();
    for (int d : W.system().degrees()) product = product * t_ladder(d);
    ++res.cases;
    if (W.length_generating_function() != product) {
      res.passed = false;
      res.counterexample = json{{"group", to_json(t)},
                                {"bfs", to_json(W.length_generating_function())},
                                {"product", to_json(product)}};
      return res;
    }
  }
  return res;
}

CheckResult check_sum_formula(const SweepOptions& opt) {
  CheckResult res{"sum-formula"};
  for (const DynkinType& t : types_up_to_rank(opt.max_rank)) {
    WeylGroup W(RootSystem(t), opt.weyl_cap);
    for (const auto& tau_nodes : all_node_subsets(t.rank)) {
      ParabolicType tau{tau_nodes};
      const Polynomial expected = poincare_polynomial(tau, W);
      for (const Cocharacter& lambda : zero_one_dominant(t.rank)) {
        ++res.cases;
        try {
          MotiveDecomposition dec = bb_decomposition(lambda, tau, W);
          if (total_poincare(dec, opt.weyl_cap) != expected)
            throw InvariantViolation("summand total differs from the cell generating function");
        } catch (const Error& e) {
          res.passed = false;
          res.counterexample = case_payload(t, tau_nodes);
          res.counterexample["lambda"] = to_json(lambda);
          res.counterexample["error"] = e.what();
          return res;
        }
      }
    }
  }
  return res;
}

CheckResult check_twist_equality(const SweepOptions& opt) {
  CheckResult res{"twist-equality"};
  for (const DynkinType& t : types_up_to_rank(std::min(opt.max_rank, 3))) {
    WeylGroup W(RootSystem(t), opt.weyl_cap);
    const RootSystem& sys = W.system();
    const auto lambdas = zero_one_dominant(t.rank);
    for (const auto& tau_nodes : all_node_subsets(t.rank)) {
      ParabolicType tau{tau_nodes};
      const auto tangent = tangent_roots(tau, sys);
      const auto stab = tau.stabilizer_nodes(sys);

      // double-coset representatives per cocharacter zero-set
      std::vector<std::vector<WeylElement>> reps;
      for (const Cocharacter& lambda : lambdas) {
        std::set<int> zero;
        for (int i = 1; i <= t.rank; ++i)
          if (lambda.entry(i) == 0) zero.insert(i);
        reps.push_back(W.min_double_coset_reps(zero, stab));
      }

      std::vector<int> vals(tangent.size(), 0);
      long long seen = 0;
      do {
        PseudoParabolic pp;
        pp.tau = tau;
        for (size_t i = 0; i < tangent.size(); ++i) pp.exponents[tangent[i]] = vals[i];
        for (size_t li = 0; li < lambdas.size(); ++li) {
          for (const WeylElement& w : reps[li]) {
            ++res.cases;
            try {
              bb_twist_pseudo(lambdas[li], w, pp, sys);
            } catch (const Error& e) {
              res.passed = false;
              res.counterexample = case_payload(t, tau_nodes);
              res.counterexample["lambda"] = to_json(lambdas[li]);
              res.counterexample["word"] = to_json(w);
              res.counterexample["pseudo"] = to_json(pp);
              res.counterexample["error"] = e.what();
              return res;
            }
          }
        }
        ++seen;
      } while (seen < opt.max_assignments_per_tau && advance_odometer(vals, opt.exponent_max));
    }
  }
  return res;
}

CheckResult check_rank_equality(const SweepOptions& opt) {
  CheckResult res{"rank-equality"};
  for (const DynkinType& t : types_up_to_rank(opt.max_rank)) {
    WeylGroup W(RootSystem(t), opt.weyl_cap);
    for (const auto& tau_nodes : all_node_subsets(t.rank)) {
      ParabolicType tau{tau_nodes};
      const auto tangent = tangent_roots(tau, W.system());
      // the graded ranks do not depend on the exponent values, so one
      // zero and one mixed assignment exercise the path
      for (int variant = 0; variant < 2; ++variant) {
        PseudoParabolic pp;
        pp.tau = tau;
        int k = 0;
        for (const Root& r : tangent) pp.exponents[r] = variant == 0 ? 0 : (k++ % (opt.exponent_max + 1));
        ++res.cases;
        try {
          if (chow_ranks_pseudo(pp, W) != chow_ranks(tau, W))
            throw InvariantViolation("rank vectors differ");
        } catch (const Error& e) {
          res.passed = false;
          res.counterexample = case_payload(t, tau_nodes);
          res.counterexample["pseudo"] = to_json(pp);
          res.counterexample["error"] = e.what();
          return res;
        }
      }
    }
  }
  return res;
}

CheckResult check_index_monotonicity(const SweepOptions& opt) {
  CheckResult res{"index-monotonicity"};
  for (const DynkinType& t : types_up_to_rank(opt.max_rank)) {
    WeylGroup W(RootSystem(t), opt.weyl_cap);
    const auto subsets = all_node_subsets(t.rank);
    for (const auto& tau_nodes : subsets) {
      ParabolicType tau{tau_nodes};
      std::vector<size_t> count(subsets.size(), 0);
      for (size_t di = 0; di < subsets.size(); ++di)
        count[di] = decompose_over_index(subsets[di], tau, W).summands.size();
      for (size_t big = 0; big < subsets.size(); ++big) {
        // iterate sub-masks of `big`
        for (unsigned sub = static_cast<unsigned>(big);; sub = (sub - 1) & static_cast<unsigned>(big)) {
          ++res.cases;
          if (count[sub] > count[big]) {
            res.passed = false;
            res.counterexample = case_payload(t, tau_nodes);
            res.counterexample["delta_small"] = std::vector<int>(subsets[sub].begin(), subsets[sub].end());
            res.counterexample["delta_large"] = std::vector<int>(subsets[big].begin(), subsets[big].end());
            return res;
          }
          if (sub == 0) break;
        }
      }
      ++res.cases;
      if (static_cast<long long>(count[subsets.size() - 1]) != n_K_for(tau, W)) {
        res.passed = false;
        res.counterexample = case_payload(t, tau_nodes);
        res.counterexample["error"] = "full index summand count differs from |W^tau|";
        return res;
      }
    }
  }
  return res;
}

CheckResult check_index_boundaries(const SweepOptions& opt) {
  CheckResult res{"index-boundaries"};
  for (const DynkinType& t : types_up_to_rank(opt.max_rank)) {
    WeylGroup W(RootSystem(t), opt.weyl_cap);
    std::set<int> full;
    for (int i = 1; i <= t.rank; ++i) full.insert(i);
    for (const auto& tau_nodes : all_node_subsets(t.rank)) {
      ParabolicType tau{tau_nodes};
      ++res.cases;
      auto fail = [&](const std::string& why) {
        res.passed = false;
        res.counterexample = case_payload(t, tau_nodes);
        res.counterexample["error"] = why;
      };

      // split case: pure Tate, coefficients = Poincare polynomial
      MotiveDecomposition split = decompose_over_index(full, tau, W);
      Polynomial twists;
      for (const Summand& s : split.summands) {
        if (!s.is_tate()) {
          fail("split decomposition has a non-Tate summand");
          return res;
        }
        twists += Polynomial::monomial(s.twist);
      }
      if (twists != poincare_polynomial(tau, W)) {
        fail("split decomposition does not match the Poincare polynomial");
        return res;
      }

      // anisotropic case: a single undecomposed summand at twist 0
      MotiveDecomposition aniso = decompose_over_index({}, tau, W);
      if (aniso.summands.size() != 1 || aniso.summands[0].twist != 0) {
        fail("empty index must give a single summand at twist 0");
        return res;
      }
      const Summand& only = aniso.summands[0];
      if (tau_nodes.empty()) {
        if (!only.is_tate()) {
          fail("the point must decompose as a single Tate summand");
          return res;
        }
      } else if (only.is_tate() || !only.flag().anisotropic) {
        fail("empty index must give one anisotropic flag summand");
        return res;
      }
    }
  }
  return res;
}

CheckResult check_rost_nesting(long long d_max, long long n_max) {
  CheckResult res{"rost-nesting"};
  for (long long d = 0; d <= d_max; ++d)
    for (long long nK = 1; nK <= n_max; ++nK) {
      for (long long n = 1; n <= nK; ++n) {
        ++res.cases;
        const bool ok =
            (n == nK || (d + 1) * rost_bound(d, n + 1, nK) == rost_bound(d, n, nK)) &&
            rost_bound(d, nK, nK) == 1;
        if (!ok) {
          res.passed = false;
          res.counterexample = json{{"d", d}, {"n", n}, {"n_K", nK}};
          return res;
        }
      }
    }
  return res;
}

CheckResult check_duality_counting(const SweepOptions& opt) {
  CheckResult res{"duality-counting"};
  for (const DynkinType& t : types_up_to_rank(opt.max_rank)) {
    WeylGroup W(RootSystem(t), opt.weyl_cap);
    for (const auto& tau_nodes : all_node_subsets(t.rank)) {
      ParabolicType tau{tau_nodes};
      ++res.cases;
      const GradedRanks ranks = chow_ranks(tau, W);
      const auto cells = cell_decomposition(tau, W);
      int max_dim = 0;
      for (const Cell& c : cells) max_dim = std::max(max_dim, c.dim);
      const bool ok = ranks.palindromic() && ranks.total() == n_K_for(tau, W) &&
                      ranks.total() == static_cast<long long>(cells.size()) &&
                      static_cast<int>(tangent_roots(tau, W.system()).size()) == max_dim;
      if (!ok) {
        res.passed = false;
        res.counterexample = case_payload(t, tau_nodes);
        res.counterexample["ranks"] = to_json(ranks);
        return res;
      }
    }
  }
  return res;
}

CheckResult check_bb_cell_consistency(const SweepOptions& opt) {
  CheckResult res{"bb-cell-consistency"};
  for (const DynkinType& t : types_up_to_rank(opt.max_rank)) {
    WeylGroup W(RootSystem(t), opt.weyl_cap);
    std::set<int> full;
    for (int i = 1; i <= t.rank; ++i) full.insert(i);
    ParabolicType borel{full};
    Cocharacter strict{std::vector<int>(static_cast<size_t>(t.rank), 1)};
    ++res.cases;
    MotiveDecomposition dec = bb_decomposition(strict, borel, W);
    std::vector<int> twists, dims;
    for (const Summand& s : dec.summands) {
      if (!s.is_tate()) {
        res.passed = false;
        res.counterexample = json{{"group", to_json(t)}, {"error", "non-Tate summand for strict cocharacter"}};
        return res;
      }
      twists.push_back(s.twist);
    }
    for (const Cell& c : cell_decomposition(borel, W)) dims.push_back(c.dim);
    std::sort(twists.begin(), twists.end());
    std::sort(dims.begin(), dims.end());
    if (twists != dims) {
      res.passed = false;
      res.counterexample = json{{"group", to_json(t)}, {"error", "twist multiset differs from cell dimensions"}};
      return res;
    }
  }
  return res;
}

std::vector<CheckResult> run_all_sweeps(const SweepOptions& opt) {
  std::vector<CheckResult> checks;
  checks.push_back(check_weyl_product_formula(types_up_to_rank(std::max(opt.max_rank, 4)), opt.weyl_cap));
  checks.push_back(check_sum_formula(opt));
  checks.push_back(check_twist_equality(opt));
  checks.push_back(check_rank_equality(opt));
  checks.push_back(check_index_monotonicity(opt));
  checks.push_back(check_index_boundaries(opt));
  checks.push_back(check_rost_nesting(10, 10));
  checks.push_back(check_duality_counting(opt));
  checks.push_back(check_bb_cell_consistency(opt));
  return checks;
}

json to_json(const CheckResult& c) {
  json j{{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
  j["counterexample"] = c.passed ? json(nullptr) : c.counterexample;
  return j;
}

json sweep_report(const std::vector<CheckResult>& checks) {
  bool all = true;
  json arr = json::array();
  for (const auto& c : checks) {
    all = all && c.passed;
    arr.push_back(to_json(c));
  }
  return json{{"passed", all}, {"checks", std::move(arr)}};
}

} // namespace motive
