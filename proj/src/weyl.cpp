#include "motive/weyl.hpp"

#include <algorithm>
#include <map>

namespace motive {

namespace {

std::vector<int> flatten(const std::vector<std::vector<int>>& m) {
  std::vector<int> f;
  f.reserve(m.size() * m.size());
  for (const auto& col : m) f.insert(f.end(), col.begin(), col.end());
  return f;
}

bool column_positive(const std::vector<int>& col) {
  bool nonzero = false;
  for (int c : col) {
    if (c < 0) return false;
    if (c > 0) nonzero = true;
  }
  return nonzero;
}

} // namespace

Root WeylElement::apply(const Root& beta) const {
  const size_t n = action_.size();
  Root out{std::vector<int>(n, 0)};
  for (size_t j = 0; j < n; ++j) {
    const int c = beta.coeffs[j];
    if (c == 0) continue;
    for (size_t k = 0; k < n; ++k) out.coeffs[k] += c * action_[j][k];
  }
  return out;
}

Root WeylElement::apply_inverse(const Root& beta) const {
  const size_t n = inverse_.size();
  Root out{std::vector<int>(n, 0)};
  for (size_t j = 0; j < n; ++j) {
    const int c = beta.coeffs[j];
    if (c == 0) continue;
    for (size_t k = 0; k < n; ++k) out.coeffs[k] += c * inverse_[j][k];
  }
  return out;
}

bool WeylElement::maps_simple_positive(int node) const {
  return column_positive(action_[static_cast<size_t>(node) - 1]);
}

bool WeylElement::inverse_maps_simple_positive(int node) const {
  return column_positive(inverse_[static_cast<size_t>(node) - 1]);
}

WeylGroup::WeylGroup(RootSystem sys, long long enumeration_cap) : sys_(std::move(sys)) {
  const long long order = sys_.weyl_order();
  if (order > enumeration_cap)
    throw ResourceError("Weyl group of " + sys_.type().name() + " has order " +
                        std::to_string(order) + ", which exceeds the enumeration cap " +
                        std::to_string(enumeration_cap));
  std::vector<int> gens(static_cast<size_t>(sys_.rank()));
  for (int i = 0; i < sys_.rank(); ++i) gens[static_cast<size_t>(i)] = i + 1;
  elements_ = bfs(gens, enumeration_cap);
  if (static_cast<long long>(elements_.size()) != order)
    throw InvariantViolation("enumerated " + std::to_string(elements_.size()) + " elements of W(" +
                             sys_.type().name() + "), expected " + std::to_string(order));
  index_.reserve(elements_.size());
  for (size_t i = 0; i < elements_.size(); ++i) index_.emplace_back(flatten(elements_[i].action()), i);
  std::sort(index_.begin(), index_.end());
}

std::vector<WeylElement> WeylGroup::bfs(const std::vector<int>& generators, long long cap) const {
  const size_t n = static_cast<size_t>(sys_.rank());
  WeylElement id;
  id.action_.assign(n, std::vector<int>(n, 0));
  for (size_t j = 0; j < n; ++j) id.action_[j][j] = 1;
  id.inverse_ = id.action_;

  std::vector<WeylElement> out{id};
  std::set<std::vector<int>> seen{flatten(id.action_)};
  size_t frontier_begin = 0;
  while (frontier_begin < out.size()) {
    const size_t frontier_end = out.size();
    for (size_t e = frontier_begin; e < frontier_end; ++e) {
      for (int i : generators) {
        // length goes up along w -> w s_i exactly when w(alpha_i) > 0
        if (!out[e].maps_simple_positive(i)) continue;
        WeylElement next;
        next.word_ = out[e].word_;
        next.word_.push_back(i);
        const auto& act = out[e].action_;
        next.action_ = act;
        const auto& col_i = act[static_cast<size_t>(i) - 1];
        for (size_t j = 0; j < n; ++j) {
          const int c = sys_.cartan(i, static_cast<int>(j) + 1);
          if (c == 0) continue;
          for (size_t k = 0; k < n; ++k) next.action_[j][k] -= c * col_i[k];
        }
        next.inverse_ = out[e].inverse_;
        for (auto& col : next.inverse_) {
          Root r{col};
          col = sys_.reflect(i, r).coeffs;
        }
        auto key = flatten(next.action_);
        if (seen.insert(std::move(key)).second) {
          out.push_back(std::move(next));
          if (static_cast<long long>(out.size()) > cap)
            throw ResourceError("Weyl enumeration exceeded the cap " + std::to_string(cap));
        }
      }
    }
    frontier_begin = frontier_end;
  }
  return out;
}

Polynomial WeylGroup::length_generating_function() const {
  std::vector<long long> coeffs(sys_.positive_roots().size() + 1, 0);
  for (const auto& w : elements_) coeffs[static_cast<size_t>(w.length())] += 1;
  return Polynomial(std::move(coeffs));
}

CosetSystem WeylGroup::min_coset_reps(const std::set<int>& stabilizer) const {
  sys_.check_node_set(stabilizer);
  CosetSystem cs;
  cs.stabilizer = stabilizer;
  for (const auto& w : elements_) {
    bool ok = true;
    for (int s : stabilizer)
      if (!w.maps_simple_positive(s)) {
        ok = false;
        break;
      }
    if (ok) cs.reps.push_back(w);
  }
  return cs;
}

std::vector<WeylElement> WeylGroup::min_double_coset_reps(const std::set<int>& left,
                                                          const std::set<int>& right) const {
  sys_.check_node_set(left);
  sys_.check_node_set(right);
  std::vector<WeylElement> reps;
  for (const auto& w : elements_) {
    bool ok = true;
    for (int s : right)
      if (!w.maps_simple_positive(s)) {
        ok = false;
        break;
      }
    if (ok)
      for (int s : left)
        if (!w.inverse_maps_simple_positive(s)) {
          ok = false;
          break;
        }
    if (ok) reps.push_back(w);
  }
  return reps;
}

std::vector<WeylElement> WeylGroup::subgroup_elements(const std::set<int>& nodes) const {
  sys_.check_node_set(nodes);
  std::vector<int> gens(nodes.begin(), nodes.end());
  return bfs(gens, order());
}

const WeylElement& WeylGroup::element_for_action(const std::vector<std::vector<int>>& action) const {
  const auto key = flatten(action);
  auto it = std::lower_bound(index_.begin(), index_.end(), key,
                             [](const auto& entry, const std::vector<int>& k) { return entry.first < k; });
  if (it == index_.end() || it->first != key)
    throw ValidationError("action matrix does not belong to W(" + sys_.type().name() + ")");
  return elements_[it->second];
}

const WeylElement& WeylGroup::multiply(const WeylElement& a, const WeylElement& b) const {
  const size_t n = static_cast<size_t>(sys_.rank());
  // column j of a*b is a(b(alpha_j))
  std::vector<std::vector<int>> prod(n);
  for (size_t j = 0; j < n; ++j) prod[j] = a.apply(Root{b.action()[j]}).coeffs;
  return element_for_action(prod);
}

Cocharacter dominant_form(const Cocharacter& lambda, const RootSystem& sys) {
  sys.check_cocharacter(lambda);
  Cocharacter v = lambda;
  for (;;) {
    int neg = 0;
    for (int i = 1; i <= sys.rank(); ++i)
      if (v.entry(i) < 0) {
        neg = i;
        break;
      }
    if (neg == 0) return v;
    // <s_i lambda, alpha_j> = <lambda, s_i alpha_j>
    Cocharacter next = v;
    const int vi = v.entry(neg);
    for (int j = 1; j <= sys.rank(); ++j)
      next.pairings[static_cast<size_t>(j) - 1] = v.entry(j) - sys.cartan(neg, j) * vi;
    v = std::move(next);
  }
}

} // namespace motive
