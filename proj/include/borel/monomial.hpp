#ifndef BOREL_MONOMIAL_HPP
#define BOREL_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "borel/errors.hpp"

namespace borel {

/// A monomial in K[x_0,...,x_n], stored as its exponent vector.
/// Index 0 is the smallest variable x_0; the ambient variable order is
/// x_n > ... > x_0.
class monomial {
public:
  monomial() = default;

  explicit monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_) {
      if (e < 0) throw error("monomial: negative exponent");
      degree_ += e;
    }
  }

  static monomial one(int num_vars) {
    return monomial(std::vector<int>(static_cast<std::size_t>(num_vars), 0));
  }

  static monomial variable(int num_vars, int index, int power = 1) {
    std::vector<int> e(static_cast<std::size_t>(num_vars), 0);
    e.at(static_cast<std::size_t>(index)) = power;
    return monomial(std::move(e));
  }

  int num_vars() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }

  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& exponents() const { return exps_; }

  /// Smallest index j with x_j | m; num_vars() for the constant monomial.
  int min_index() const {
    for (int i = 0; i < num_vars(); ++i)
      if (exps_[static_cast<std::size_t>(i)] > 0) return i;
    return num_vars();
  }

  /// Largest index j with x_j | m; -1 for the constant monomial.
  int max_index() const {
    for (int i = num_vars() - 1; i >= 0; --i)
      if (exps_[static_cast<std::size_t>(i)] > 0) return i;
    return -1;
  }

  monomial times_variable(int i) const {
    monomial m(*this);
    ++m.exps_[static_cast<std::size_t>(i)];
    ++m.degree_;
    return m;
  }

  bool divides(const monomial& other) const {
    if (num_vars() != other.num_vars()) return false;
    for (int i = 0; i < num_vars(); ++i)
      if ((*this)[i] > other[i]) return false;
    return true;
  }

  monomial operator*(const monomial& other) const {
    std::vector<int> e(exps_);
    for (int i = 0; i < other.num_vars(); ++i) e[static_cast<std::size_t>(i)] += other[i];
    return monomial(std::move(e));
  }

  bool operator==(const monomial&) const = default;

  // Lexicographic order on exponent vectors. Within one degree this is the
  // reverse of graded-revlex, so sorted containers iterate revlex-descending.
  auto operator<=>(const monomial& other) const { return exps_ <=> other.exps_; }

private:
  std::vector<int> exps_;
  int degree_ = 0;
};

struct monomial_hash {
  std::size_t operator()(const monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (int e : m.exponents()) {
      h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

inline bool can_move_down(const monomial& m, int i) {
  return i > 0 && i < m.num_vars() && m[i] > 0;
}

/// Elementary decreasing move: one exponent unit from x_i to x_{i-1}.
inline monomial move_down(const monomial& m, int i) {
  if (!can_move_down(m, i))
    throw inadmissible_move("move_down: index " + std::to_string(i) + " on " +
                            std::to_string(m.num_vars()) + " variables");
  std::vector<int> e(m.exponents());
  --e[static_cast<std::size_t>(i)];
  ++e[static_cast<std::size_t>(i - 1)];
  return monomial(std::move(e));
}

inline bool can_move_up(const monomial& m, int j) {
  return j >= 0 && j + 1 < m.num_vars() && m[j] > 0;
}

/// Elementary increasing move: one exponent unit from x_j to x_{j+1}.
inline monomial move_up(const monomial& m, int j) {
  if (!can_move_up(m, j))
    throw inadmissible_move("move_up: index " + std::to_string(j) + " on " +
                            std::to_string(m.num_vars()) + " variables");
  std::vector<int> e(m.exponents());
  --e[static_cast<std::size_t>(j)];
  ++e[static_cast<std::size_t>(j + 1)];
  return monomial(std::move(e));
}

/// Whether b >=_B a in the Borel partial order, i.e. a is reachable from b
/// by elementary decreasing moves. Characterized by non-negative suffix sums
/// of the exponent difference.
inline bool borel_leq(const monomial& a, const monomial& b) {
  if (a.num_vars() != b.num_vars() || a.degree() != b.degree())
    throw degree_mismatch("borel_leq: monomials must live in the same graded piece");
  int sigma = 0;
  for (int j = a.num_vars() - 1; j >= 0; --j) {
    sigma += b[j] - a[j];
    if (sigma < 0) return false;
  }
  return true;
}

/// Canonical text form, e.g. "x3^2*x0^6"; "1" for the constant monomial.
inline std::string to_string(const monomial& m) {
  std::string s;
  for (int i = m.num_vars() - 1; i >= 0; --i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x';
    s += std::to_string(i);
    if (m[i] > 1) {
      s += '^';
      s += std::to_string(m[i]);
    }
  }
  return s.empty() ? "1" : s;
}

/// Parses "x3^2*x0^6" (the '*' may be omitted); "1" is the constant monomial.
inline monomial parse_monomial(std::string_view text, int num_vars) {
  std::vector<int> e(static_cast<std::size_t>(num_vars), 0);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto read_uint = [&]() -> long {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) throw parse_error("monomial: expected a number in '" + std::string(text) + "'");
    return std::stol(std::string(text.substr(start, pos - start)));
  };
  skip_ws();
  if (pos < text.size() && text[pos] == '1' && pos + 1 >= text.size()) return monomial(std::move(e));
  bool any = false;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] == '*') {
      ++pos;
      skip_ws();
    }
    if (pos >= text.size() || text[pos] != 'x')
      throw parse_error("monomial: expected 'x<i>' in '" + std::string(text) + "'");
    ++pos;
    long idx = read_uint();
    if (idx < 0 || idx >= num_vars)
      throw parse_error("monomial: variable index " + std::to_string(idx) + " out of range");
    long pw = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      pw = read_uint();
      if (pw < 1) throw parse_error("monomial: exponent must be positive");
    }
    e[static_cast<std::size_t>(idx)] += static_cast<int>(pw);
    any = true;
    skip_ws();
  }
  if (!any) throw parse_error("monomial: empty input");
  return monomial(std::move(e));
}

}  // namespace borel

#endif
