#include "motive/motive.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace motive {

namespace {

bool support_inside(const Root& r, const std::set<int>& nodes) {
  for (size_t i = 0; i < r.coeffs.size(); ++i)
    if (r.coeffs[i] != 0 && !nodes.count(static_cast<int>(i) + 1)) return false;
  return true;
}

long long raw_pairing(const Cocharacter& lambda, const Root& beta) {
  long long s = 0;
  for (size_t i = 0; i < beta.coeffs.size(); ++i)
    s += static_cast<long long>(lambda.pairings[i]) * beta.coeffs[i];
  return s;
}

std::string node_set_text(const std::set<int>& s) {
  std::string out = "{";
  for (int v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

} // namespace

long long GradedRanks::total() const {
  long long t = 0;
  for (long long r : ranks) t += r;
  return t;
}

bool GradedRanks::palindromic() const {
  for (size_t i = 0, n = ranks.size(); i < n; ++i)
    if (ranks[i] != ranks[n - 1 - i]) return false;
  return true;
}

int FlagLabel::total_rank() const {
  int r = 0;
  for (const auto& c : components) r += c.rank;
  return r;
}

std::string FlagLabel::key() const {
  std::string k;
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) k += "x";
    k += components[i].name();
  }
  k += ":";
  bool first = true;
  for (int v : tau_h) {
    if (!first) k += ",";
    first = false;
    k += std::to_string(v);
  }
  if (anisotropic) k += "~aniso";
  return k;
}

std::string Summand::base_key() const {
  return is_tate() ? std::string{} : flag().key();
}

void sort_summands(std::vector<Summand>& summands) {
  std::stable_sort(summands.begin(), summands.end(), [](const Summand& a, const Summand& b) {
    if (a.twist != b.twist) return a.twist < b.twist;
    return a.base_key() < b.base_key();
  });
}

std::vector<Cell> cell_decomposition(const ParabolicType& tau, const WeylGroup& W) {
  CosetSystem cs = W.min_coset_reps(tau.stabilizer_nodes(W.system()));
  std::vector<Cell> cells;
  cells.reserve(cs.reps.size());
  for (auto& w : cs.reps) cells.push_back(Cell{w, w.length()});
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.w.word() < b.w.word();
  });
  return cells;
}

Polynomial poincare_polynomial(const ParabolicType& tau, const WeylGroup& W) {
  std::vector<long long> coeffs(W.system().positive_roots().size() + 1, 0);
  for (const Cell& c : cell_decomposition(tau, W)) coeffs[static_cast<size_t>(c.dim)] += 1;
  return Polynomial(std::move(coeffs));
}

GradedRanks chow_ranks(const ParabolicType& tau, const WeylGroup& W) {
  const Polynomial p = poincare_polynomial(tau, W);
  const int dim = static_cast<int>(tangent_roots(tau, W.system()).size());
  if (p.degree() != dim)
    throw InvariantViolation("top cell dimension " + std::to_string(p.degree()) +
                             " disagrees with dim X = " + std::to_string(dim));
  GradedRanks out;
  out.ranks.reserve(static_cast<size_t>(dim) + 1);
  for (int i = 0; i <= dim; ++i) out.ranks.push_back(p.coeff(i));
  return out;
}

GradedRanks chow_ranks_pseudo(const PseudoParabolic& pp, const WeylGroup& W) {
  validate_pseudo(pp, W.system());
  const int m = static_cast<int>(pp.exponents.size()); // dim of the big cell
  GradedRanks out;
  out.ranks.assign(static_cast<size_t>(m) + 1, 0);
  for (const Cell& c : cell_decomposition(reduced_part(pp), W)) {
    if (c.dim > m)
      throw InvariantViolation("cell of dimension " + std::to_string(c.dim) +
                               " exceeds the exponent-domain dimension " + std::to_string(m));
    out.ranks[static_cast<size_t>(c.dim)] += 1;
  }
  if (out != chow_ranks(reduced_part(pp), W))
    throw InvariantViolation("graded ranks from the non-reduced datum disagree with the reduced ranks");
  return out;
}

int bb_twist(const Cocharacter& lambda, const WeylElement& w, const ParabolicType& tau,
             const RootSystem& sys) {
  tau.validate(sys);
  sys.check_cocharacter(lambda);
  int count = 0;
  for (const Root& beta : tangent_roots(tau, sys))
    if (raw_pairing(lambda, w.apply(beta)) > 0) ++count;
  return count;
}

int bb_twist_pseudo(const Cocharacter& lambda, const WeylElement& w, const PseudoParabolic& pp,
                    const RootSystem& sys) {
  sys.check_cocharacter(lambda);
  int count = 0;
  for (const auto& [root, n] : pp.exponents) {
    // the coordinate at `root` moves with weight p^n * <lambda, w(root)>
    // for a fixed prime p > 3, so positivity is decided by the pairing
    (void)n;
    if (raw_pairing(lambda, w.apply(root)) > 0) ++count;
  }
  const int reduced = bb_twist(lambda, w, reduced_part(pp), sys);
  if (count != reduced)
    throw InvariantViolation("positive-eigenspace dimensions differ between the non-reduced datum (" +
                             std::to_string(count) + ") and its reduced part (" +
                             std::to_string(reduced) + ")");
  return count;
}

std::vector<std::vector<int>> diagram_components(const RootSystem& sys, const std::set<int>& nodes) {
  sys.check_node_set(nodes);
  std::set<int> remaining = nodes;
  std::vector<std::vector<int>> comps;
  while (!remaining.empty()) {
    std::vector<int> comp{*remaining.begin()};
    remaining.erase(remaining.begin());
    for (size_t k = 0; k < comp.size(); ++k) {
      for (auto it = remaining.begin(); it != remaining.end();) {
        if (sys.cartan(comp[k], *it) != 0) {
          comp.push_back(*it);
          it = remaining.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

namespace {

void match_nodes(const RootSystem& sys, const std::vector<int>& nodes,
                 const std::vector<std::vector<int>>& std_cartan, size_t pos,
                 std::vector<int>& assign, std::vector<bool>& used,
                 std::vector<std::map<int, int>>& found) {
  const size_t r = nodes.size();
  if (pos == r) {
    std::map<int, int> iso;
    for (size_t k = 0; k < r; ++k) iso[nodes[static_cast<size_t>(assign[k])]] = static_cast<int>(k) + 1;
    found.push_back(std::move(iso));
    return;
  }
  for (size_t a = 0; a < r; ++a) {
    if (used[a]) continue;
    bool ok = true;
    for (size_t l = 0; l < pos && ok; ++l) {
      const int amb_a = nodes[a];
      const int amb_l = nodes[static_cast<size_t>(assign[l])];
      ok = sys.cartan(amb_a, amb_l) == std_cartan[pos][l] &&
           sys.cartan(amb_l, amb_a) == std_cartan[l][pos];
    }
    if (!ok) continue;
    used[a] = true;
    assign[pos] = static_cast<int>(a);
    match_nodes(sys, nodes, std_cartan, pos + 1, assign, used, found);
    used[a] = false;
  }
}

} // namespace

ComponentClassification classify_component(const RootSystem& sys, const std::vector<int>& nodes) {
  const int r = static_cast<int>(nodes.size());
  static constexpr Family kFamilies[] = {Family::A, Family::B, Family::C, Family::D,
                                         Family::E, Family::F, Family::G};
  for (Family f : kFamilies) {
    DynkinType candidate{f, r};
    if (!candidate.legal()) continue;
    const auto std_cartan = cartan_matrix_for(candidate);
    std::vector<int> assign(static_cast<size_t>(r), -1);
    std::vector<bool> used(static_cast<size_t>(r), false);
    std::vector<std::map<int, int>> found;
    match_nodes(sys, nodes, std_cartan, 0, assign, used, found);
    if (!found.empty()) return ComponentClassification{candidate, std::move(found)};
  }
  std::string ns;
  for (int v : nodes) ns += std::to_string(v) + " ";
  throw InvariantViolation("subdiagram { " + ns + "} of " + sys.type().name() +
                           " matched no irreducible type");
}

FlagLabel make_flag_label(const RootSystem& sys, const std::set<int>& levi_nodes,
                          const std::set<int>& tau_h, bool anisotropic) {
  if (tau_h.empty())
    throw InvariantViolation("empty parabolic type in a flag label; use the Tate base instead");
  for (int v : tau_h)
    if (!levi_nodes.count(v))
      throw InvariantViolation("flag label node " + std::to_string(v) + " outside the Levi");

  struct Part {
    DynkinType type;
    std::vector<int> local_tau; // in standard numbering, sorted
  };
  std::vector<Part> parts;
  for (const auto& comp : diagram_components(sys, levi_nodes)) {
    std::vector<int> marked;
    for (int v : comp)
      if (tau_h.count(v)) marked.push_back(v);
    if (marked.empty()) continue; // point factor
    const auto cls = classify_component(sys, comp);
    // among the diagram isomorphisms, take the lexicographically least image
    std::vector<int> best;
    for (const auto& iso : cls.isomorphisms) {
      std::vector<int> image;
      image.reserve(marked.size());
      for (int v : marked) image.push_back(iso.at(v));
      std::sort(image.begin(), image.end());
      if (best.empty() || image < best) best = std::move(image);
    }
    parts.push_back(Part{cls.type, std::move(best)});
  }
  std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
    if (a.type != b.type) return a.type < b.type;
    return a.local_tau < b.local_tau;
  });
  FlagLabel label;
  label.anisotropic = anisotropic;
  int offset = 0;
  for (const Part& p : parts) {
    label.components.push_back(p.type);
    for (int t : p.local_tau) label.tau_h.insert(offset + t);
    offset += p.type.rank;
  }
  return label;
}

Polynomial split_poincare(const SummandBase& base, long long weyl_cap) {
  if (std::holds_alternative<TateBase>(base)) return Polynomial::one();
  const FlagLabel& fl = std::get<FlagLabel>(base);
  Polynomial p = Polynomial::one();
  int offset = 0;
  for (const DynkinType& type : fl.components) {
    std::set<int> local;
    for (int t : fl.tau_h)
      if (t > offset && t <= offset + type.rank) local.insert(t - offset);
    WeylGroup Wc(RootSystem(type), weyl_cap);
    p = p * poincare_polynomial(ParabolicType{std::move(local)}, Wc);
    offset += type.rank;
  }
  return p;
}

Polynomial total_poincare(const MotiveDecomposition& dec, long long weyl_cap) {
  Polynomial total;
  for (const Summand& s : dec.summands) total += split_poincare(s.base, weyl_cap).shifted(s.twist);
  return total;
}

namespace {

template <typename TwistFn>
MotiveDecomposition bb_core(const Cocharacter& lambda, const ParabolicType& tau, const WeylGroup& W,
                            bool anisotropic, TwistFn&& twist_of) {
  const RootSystem& sys = W.system();
  tau.validate(sys);
  sys.check_cocharacter(lambda);
  if (!lambda.dominant())
    throw ValidationError(
        "cocharacter is not dominant; conjugate it into the dominant chamber first "
        "(see dominant_form)");

  std::set<int> zero_nodes;
  for (int i = 1; i <= sys.rank(); ++i)
    if (lambda.entry(i) == 0) zero_nodes.insert(i);
  const std::set<int> stab = tau.stabilizer_nodes(sys);

  MotiveDecomposition dec;
  dec.ambient_dim = static_cast<int>(tangent_roots(tau, sys).size());
  for (const WeylElement& w : W.min_double_coset_reps(zero_nodes, stab)) {
    std::set<int> tau_h;
    for (int a : zero_nodes)
      if (!support_inside(w.apply_inverse(sys.simple(a)), stab)) tau_h.insert(a);
    Summand s;
    s.twist = twist_of(w);
    if (s.twist < 0 || s.twist > dec.ambient_dim)
      throw InvariantViolation("twist " + std::to_string(s.twist) + " outside [0, dim X] for tau " +
                               node_set_text(tau.tau));
    if (tau_h.empty())
      s.base = TateBase{};
    else
      s.base = make_flag_label(sys, zero_nodes, tau_h, anisotropic);
    dec.summands.push_back(std::move(s));
  }
  sort_summands(dec.summands);

  // every run re-derives the Poincare polynomial from the summands;
  // a mismatch means the fixed-point combinatorics above is wrong
  if (total_poincare(dec) != poincare_polynomial(tau, W))
    throw InvariantViolation("decomposition fails to reproduce the Poincare polynomial of X_tau " +
                             node_set_text(tau.tau) + " in " + sys.type().name());
  return dec;
}

} // namespace

MotiveDecomposition bb_decomposition(const Cocharacter& lambda, const ParabolicType& tau,
                                     const WeylGroup& W) {
  return bb_core(lambda, tau, W, false,
                 [&](const WeylElement& w) { return bb_twist(lambda, w, tau, W.system()); });
}

MotiveDecomposition bb_decomposition_pseudo(const Cocharacter& lambda, const PseudoParabolic& pp,
                                            const WeylGroup& W) {
  validate_pseudo(pp, W.system());
  return bb_core(lambda, reduced_part(pp), W, false,
                 [&](const WeylElement& w) { return bb_twist_pseudo(lambda, w, pp, W.system()); });
}

MotiveDecomposition decompose_over_index(const std::set<int>& delta, const ParabolicType& tau,
                                         const WeylGroup& W) {
  const RootSystem& sys = W.system();
  sys.check_node_set(delta);
  Cocharacter lambda{std::vector<int>(static_cast<size_t>(sys.rank()), 0)};
  for (int v : delta) lambda.pairings[static_cast<size_t>(v) - 1] = 1;
  return bb_core(lambda, tau, W, true,
                 [&](const WeylElement& w) { return bb_twist(lambda, w, tau, sys); });
}

IsoReport motive_iso_check(const MotiveDecomposition& first, const MotiveDecomposition& second) {
  // keyed multiset difference; the key determines the summand completely
  std::map<std::pair<int, std::string>, std::pair<long long, Summand>> tally;
  for (const Summand& s : first.summands) {
    auto& slot = tally[{s.twist, s.base_key()}];
    slot.first += 1;
    slot.second = s;
  }
  for (const Summand& s : second.summands) {
    auto& slot = tally[{s.twist, s.base_key()}];
    slot.first -= 1;
    slot.second = s;
  }
  IsoReport report;
  report.isomorphic = true;
  for (const auto& [key, slot] : tally) {
    for (long long i = 0; i < slot.first; ++i) report.only_in_first.push_back(slot.second);
    for (long long i = 0; i < -slot.first; ++i) report.only_in_second.push_back(slot.second);
  }
  if (!report.only_in_first.empty() || !report.only_in_second.empty()) report.isomorphic = false;
  sort_summands(report.only_in_first);
  sort_summands(report.only_in_second);
  return report;
}

unsigned long long rost_bound(long long d, long long n, long long n_K) {
  if (d < 0) throw ValidationError("dimension d must be nonnegative");
  if (n < 1 || n_K < 1) throw ValidationError("term counts n and n_K must be positive");
  if (n > n_K)
    throw ValidationError("n = " + std::to_string(n) + " exceeds n_K = " + std::to_string(n_K));
  const unsigned long long base = static_cast<unsigned long long>(d) + 1;
  unsigned long long acc = 1;
  for (long long i = 0; i < n_K - n; ++i) {
    if (acc > std::numeric_limits<unsigned long long>::max() / base)
      throw ResourceError("nilpotence bound exceeds the 64-bit integer range");
    acc *= base;
  }
  return acc;
}

long long n_K_for(const ParabolicType& tau, const WeylGroup& W) {
  return static_cast<long long>(W.min_coset_reps(tau.stabilizer_nodes(W.system())).reps.size());
}

} // namespace motive
