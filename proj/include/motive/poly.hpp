#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace motive {

// Dense polynomial in one variable t with exact 64-bit integer
// coefficients.  Everything in this project that looks like a generating
// function (Poincare polynomials, graded ranks) lives here.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial zero() { return Polynomial{}; }
  static Polynomial one() { return monomial(0); }
  static Polynomial monomial(int degree, long long coeff = 1) {
    std::vector<long long> c(static_cast<size_t>(degree) + 1, 0);
    c.back() = coeff;
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is reported as -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  long long coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : 0;
  }
  const std::vector<long long>& coefficients() const { return c_; }

  long long eval_at_one() const {
    long long s = 0;
    for (long long c : c_) s += c;
    return s;
  }

  // symmetric under i -> degree - i
  bool is_palindromic() const {
    for (size_t i = 0, j = c_.size(); i < j; ++i)
      if (c_[i] != c_[c_.size() - 1 - i]) return false;
    return true;
  }

  Polynomial shifted(int k) const {
    if (is_zero()) return {};
    std::vector<long long> c(static_cast<size_t>(k), 0);
    c.insert(c.end(), c_.begin(), c_.end());
    return Polynomial(std::move(c));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<long long> c(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }

  bool operator==(const Polynomial&) const = default;

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (i == 0 || c_[i] != 1) os << c_[i];
      if (i >= 1) {
        if (c_[i] != 1) os << "*";
        os << "t";
        if (i >= 2) os << "^" << i;
      }
    }
    return os.str();
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<long long> c_;
};

// 1 + t + ... + t^(n-1)
inline Polynomial t_ladder(int n) {
  return Polynomial(std::vector<long long>(static_cast<size_t>(n), 1));
}

} // namespace motive
