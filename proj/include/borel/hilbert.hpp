#ifndef BOREL_HILBERT_HPP
#define BOREL_HILBERT_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "borel/errors.hpp"

namespace borel {

/// Exact binomial coefficient C(top, k), defined for any integer top via the
/// falling-factorial product; C(top, 0) = 1.
inline mpz_class binomial(const mpz_class& top, unsigned k) {
  mpz_class num = 1;
  for (unsigned u = 0; u < k; ++u) num *= top - u;
  mpz_class den = 1;
  for (unsigned u = 2; u <= k; ++u) den *= u;
  return num / den;
}

/// An integer-valued polynomial in one variable t with exact rational
/// coefficients in the power basis.
class hilbert_polynomial {
public:
  hilbert_polynomial() = default;  // the zero polynomial

  explicit hilbert_polynomial(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
    normalize();
    // integer-valuedness at deg+1 consecutive integers forces it everywhere
    for (int t = 0; t <= degree() + 1; ++t) {
      mpq_class v = eval(mpz_class(t));
      if (v.get_den() != 1)
        throw error("hilbert_polynomial: not integer-valued at t=" + std::to_string(t));
    }
  }

  static hilbert_polynomial zero() { return hilbert_polynomial(); }

  static hilbert_polynomial constant(const mpz_class& v) {
    if (v == 0) return zero();
    return hilbert_polynomial(std::vector<mpq_class>{mpq_class(v)});
  }

  /// C(t + shift, k) as a polynomial in t.
  static hilbert_polynomial binomial_in_t(long shift, unsigned k) {
    std::vector<mpq_class> co{mpq_class(1)};
    for (unsigned u = 0; u < k; ++u) {
      std::vector<mpq_class> next(co.size() + 1, mpq_class(0));
      for (std::size_t i = 0; i < co.size(); ++i) {
        next[i + 1] += co[i];
        next[i] += co[i] * mpq_class(static_cast<long>(shift) - static_cast<long>(u));
      }
      co = std::move(next);
    }
    mpz_class fact = 1;
    for (unsigned u = 2; u <= k; ++u) fact *= u;
    for (auto& q : co) q /= fact;
    return hilbert_polynomial(std::move(co));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }

  mpq_class coeff(int k) const {
    if (k < 0 || k > degree()) return mpq_class(0);
    return c_[static_cast<std::size_t>(k)];
  }
  const std::vector<mpq_class>& coefficients() const { return c_; }

  /// Exact integer value at an integer argument.
  mpz_class operator()(const mpz_class& t) const {
    mpq_class v = eval(t);
    if (v.get_den() != 1) throw invariant_violation("hilbert_polynomial: non-integer value");
    return v.get_num();
  }

  /// m-fold difference operator, (delta p)(t) = p(t) - p(t-1).
  hilbert_polynomial delta(unsigned m = 1) const {
    hilbert_polynomial p = *this;
    for (unsigned step = 0; step < m; ++step) {
      // p(t) - p(t-1)
      std::vector<mpq_class> shifted(p.c_.size(), mpq_class(0));
      std::vector<mpq_class> pascal{mpq_class(1)};  // (t-1)^k expansion, iteratively
      for (std::size_t k = 0; k < p.c_.size(); ++k) {
        for (std::size_t i = 0; i < pascal.size(); ++i) shifted[i] += p.c_[k] * pascal[i];
        // pascal <- pascal * (t - 1)
        std::vector<mpq_class> next(pascal.size() + 1, mpq_class(0));
        for (std::size_t i = 0; i < pascal.size(); ++i) {
          next[i + 1] += pascal[i];
          next[i] -= pascal[i];
        }
        pascal = std::move(next);
      }
      std::vector<mpq_class> diff(p.c_.size(), mpq_class(0));
      for (std::size_t i = 0; i < p.c_.size(); ++i) diff[i] = p.c_[i] - shifted[i];
      p.c_ = std::move(diff);
      p.normalize();
    }
    return p;
  }

  hilbert_polynomial operator+(const hilbert_polynomial& o) const {
    std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return hilbert_polynomial(std::move(r));
  }

  hilbert_polynomial operator-(const hilbert_polynomial& o) const {
    std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return hilbert_polynomial(std::move(r));
  }

  hilbert_polynomial operator*(const mpz_class& s) const {
    std::vector<mpq_class> r(c_);
    for (auto& q : r) q *= s;
    return hilbert_polynomial(std::move(r));
  }

  bool operator==(const hilbert_polynomial& o) const { return c_ == o.c_; }

private:
  mpq_class eval(const mpz_class& t) const {
    mpq_class v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = v * t + c_[i];
    return v;
  }

  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<mpq_class> c_;
};

/// Number of summands of the Gotzmann binomial decomposition
///   p(t) = sum_{i=1..r} C(t + a_i - i + 1, a_i),  a_1 >= ... >= a_r >= 0,
/// computed greedily. Throws not_admissible if no such decomposition exists.
inline int gotzmann_number(const hilbert_polynomial& p) {
  constexpr long limit = 2000000;
  hilbert_polynomial rem = p;
  long r = 0;
  long i = 1;
  while (!rem.is_zero()) {
    int a = rem.degree();
    if (a == 0) {
      mpq_class c = rem.coeff(0);
      if (c < 0) throw not_admissible("gotzmann_number: negative constant remainder");
      mpz_class ci = c.get_num();  // integer-valued, so den == 1
      if (ci > limit - r) throw error("gotzmann_number: result exceeds supported range");
      return static_cast<int>(r + ci.get_si());
    }
    if (rem.coeff(a) <= 0)
      throw not_admissible("gotzmann_number: non-positive leading coefficient");
    rem = rem - hilbert_polynomial::binomial_in_t(a - i + 1, static_cast<unsigned>(a));
    ++r;
    ++i;
    if (r > limit) throw error("gotzmann_number: result exceeds supported range");
  }
  return static_cast<int>(r);
}

/// q(t) = C(n+t, n) - p(t), the dimension of the degree-t piece of an ideal
/// whose quotient has Hilbert polynomial p.
inline mpz_class complement(const hilbert_polynomial& p, int n, const mpz_class& t) {
  return binomial(mpz_class(n) + t, static_cast<unsigned>(n)) - p(t);
}

/// Parses integer-coefficient polynomials like "6t-5", "8", "2t^2+t-1".
inline hilbert_polynomial parse_polynomial(std::string_view text) {
  std::vector<mpq_class> coeffs;
  std::size_t pos = 0;
  auto skip_ws = [&] { while (pos < text.size() && text[pos] == ' ') ++pos; };
  auto at_digit = [&] { return pos < text.size() && text[pos] >= '0' && text[pos] <= '9'; };
  auto read_uint = [&]() -> mpz_class {
    std::size_t start = pos;
    while (at_digit()) ++pos;
    return mpz_class(std::string(text.substr(start, pos - start)));
  };
  skip_ws();
  if (pos >= text.size()) throw parse_error("polynomial: empty input");
  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw parse_error("polynomial: expected '+' or '-' in '" + std::string(text) + "'");
    }
    first = false;
    mpz_class coef = 1;
    bool saw_coef = false;
    if (at_digit()) {
      coef = read_uint();
      saw_coef = true;
    }
    long power = 0;
    skip_ws();
    if (pos < text.size() && text[pos] == 't') {
      ++pos;
      power = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        if (!at_digit()) throw parse_error("polynomial: expected exponent after '^'");
        mpz_class e = read_uint();
        if (e < 0 || e > 64) throw parse_error("polynomial: unsupported exponent");
        power = e.get_si();
      }
    } else if (!saw_coef) {
      throw parse_error("polynomial: expected a term in '" + std::string(text) + "'");
    }
    if (static_cast<std::size_t>(power) >= coeffs.size())
      coeffs.resize(static_cast<std::size_t>(power) + 1, mpq_class(0));
    coeffs[static_cast<std::size_t>(power)] += mpq_class(sign * coef);
  }
  try {
    return hilbert_polynomial(std::move(coeffs));
  } catch (const error& e) {
    throw parse_error(e.what());
  }
}

inline std::string to_string(const mpq_class& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const hilbert_polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int k = p.degree(); k >= 0; --k) {
    mpq_class c = p.coeff(k);
    if (c == 0) continue;
    if (s.empty()) {
      if (c < 0) s += '-';
    } else {
      s += c < 0 ? '-' : '+';
    }
    mpq_class ac = abs(c);
    if (ac != 1 || k == 0) s += to_string(ac);
    if (k >= 1) {
      s += 't';
      if (k >= 2) s += '^' + std::to_string(k);
    }
  }
  return s;
}

}  // namespace borel

#endif
