#include "motive/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace motive {

bool DynkinType::legal() const {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 3;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

std::string DynkinType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

DynkinType DynkinType::parse(std::string_view text) {
  if (text.size() < 2)
    throw ValidationError("Dynkin type '" + std::string(text) + "' is malformed; expected e.g. \"A2\"");
  char f = text[0];
  if (f < 'A' || f > 'G')
    throw ValidationError("unknown Dynkin family '" + std::string(1, f) + "'");
  int rank = 0;
  for (size_t i = 1; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw ValidationError("Dynkin type '" + std::string(text) + "' has a non-numeric rank");
    rank = rank * 10 + (text[i] - '0');
  }
  DynkinType t{static_cast<Family>(f), rank};
  if (!t.legal()) throw ValidationError("illegal Dynkin type " + t.name());
  return t;
}

bool Root::positive() const {
  bool nonzero = false;
  for (int c : coeffs) {
    if (c < 0) return false;
    if (c > 0) nonzero = true;
  }
  return nonzero;
}

Root Root::negated() const {
  Root r = *this;
  for (int& c : r.coeffs) c = -c;
  return r;
}

std::vector<int> Root::support() const {
  std::vector<int> s;
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) s.push_back(static_cast<int>(i) + 1);
  return s;
}

int Root::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

bool Cocharacter::dominant() const {
  return std::all_of(pairings.begin(), pairings.end(), [](int v) { return v >= 0; });
}

std::vector<std::vector<int>> cartan_matrix_for(const DynkinType& t) {
  if (!t.legal()) throw ValidationError("illegal Dynkin family/rank pair " + t.name());
  const int n = t.rank;
  std::vector<std::vector<int>> c(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  auto at = [&](int i, int j) -> int& { return c[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1]; };
  for (int i = 1; i <= n; ++i) at(i, i) = 2;
  auto bond = [&](int i, int j, int cij = -1, int cji = -1) {
    at(i, j) = cij;
    at(j, i) = cji;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      bond(n - 1, n, -1, -2); // alpha_n short
      break;
    case Family::C:
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      bond(n - 1, n, -2, -1); // alpha_n long
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      at(n - 1, n) = 0;
      at(n, n - 1) = 0;
      bond(n - 2, n);
      break;
    case Family::E:
      bond(1, 3);
      bond(2, 4);
      for (int i = 3; i < n; ++i) bond(i, i + 1);
      break;
    case Family::F:
      bond(1, 2);
      bond(2, 3, -1, -2); // alpha_3 short
      bond(3, 4);
      break;
    case Family::G:
      bond(1, 2, -3, -1); // alpha_1 short
      break;
  }
  return c;
}

namespace {

std::vector<int> degrees_for(const DynkinType& t) {
  const int n = t.rank;
  std::vector<int> d;
  switch (t.family) {
    case Family::A:
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      break;
    case Family::E:
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Family::F:
      d = {2, 6, 8, 12};
      break;
    case Family::G:
      d = {2, 6};
      break;
  }
  return d;
}

} // namespace

RootSystem::RootSystem(DynkinType type) : type_(type) {
  if (!type.legal())
    throw ValidationError("illegal Dynkin family/rank pair " + type.name());
  cartan_ = cartan_matrix_for(type);
  degrees_ = degrees_for(type);

  const int n = type.rank;
  // Generate positive roots by height.  A candidate beta + alpha_i is a
  // root iff the alpha_i-string through beta extends upwards, i.e.
  // (depth of the string below beta) - <beta, alpha_i^vee> > 0.
  std::set<Root> found;
  std::vector<Root> frontier;
  for (int i = 1; i <= n; ++i) {
    Root alpha{std::vector<int>(static_cast<size_t>(n), 0)};
    alpha.coeffs[static_cast<size_t>(i) - 1] = 1;
    found.insert(alpha);
    frontier.push_back(alpha);
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& beta : frontier) {
      for (int i = 1; i <= n; ++i) {
        Root up = beta;
        up.coeffs[static_cast<size_t>(i) - 1] += 1;
        if (found.count(up)) continue;
        if (beta.height() == 1 && beta.coeff(i) == 1) continue; // 2*alpha_i is never a root
        int depth = 0;
        Root down = beta;
        for (;;) {
          down.coeffs[static_cast<size_t>(i) - 1] -= 1;
          if (!found.count(down)) break;
          ++depth;
        }
        if (depth - coroot_pairing(i, beta) > 0) {
          found.insert(up);
          next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }

  positive_.assign(found.begin(), found.end());
  std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a < b;
  });
  for (const Root& r : positive_) {
    root_set_.insert(r);
    root_set_.insert(r.negated());
  }
}

std::vector<Root> RootSystem::negative_roots() const {
  std::vector<Root> neg;
  neg.reserve(positive_.size());
  for (const Root& r : positive_) neg.push_back(r.negated());
  return neg;
}

Root RootSystem::simple(int node) const {
  check_node(node);
  Root alpha{std::vector<int>(static_cast<size_t>(rank()), 0)};
  alpha.coeffs[static_cast<size_t>(node) - 1] = 1;
  return alpha;
}

int RootSystem::coroot_pairing(int node, const Root& beta) const {
  const auto& row = cartan_[static_cast<size_t>(node) - 1];
  int s = 0;
  for (size_t j = 0; j < row.size(); ++j) s += row[j] * beta.coeffs[j];
  return s;
}

Root RootSystem::reflect(int node, const Root& beta) const {
  Root r = beta;
  r.coeffs[static_cast<size_t>(node) - 1] -= coroot_pairing(node, beta);
  return r;
}

int RootSystem::pairing(const Cocharacter& lambda, const Root& beta) const {
  check_cocharacter(lambda);
  if (!contains(beta)) {
    std::string cs;
    for (int c : beta.coeffs) cs += std::to_string(c) + " ";
    throw ValidationError("root [" + cs + "] does not belong to " + type_.name());
  }
  int s = 0;
  for (size_t i = 0; i < lambda.pairings.size(); ++i) s += lambda.pairings[i] * beta.coeffs[i];
  return s;
}

long long RootSystem::weyl_order() const {
  long long o = 1;
  for (int d : degrees_) o *= d;
  return o;
}

void RootSystem::check_node(int node) const {
  if (node < 1 || node > rank())
    throw ValidationError("node index " + std::to_string(node) + " out of range for " + type_.name());
}

void RootSystem::check_node_set(const std::set<int>& nodes) const {
  for (int v : nodes) check_node(v);
}

void RootSystem::check_cocharacter(const Cocharacter& lambda) const {
  if (static_cast<int>(lambda.pairings.size()) != rank())
    throw ValidationError("cocharacter has " + std::to_string(lambda.pairings.size()) +
                          " entries; " + type_.name() + " needs " + std::to_string(rank()));
}

} // namespace motive
