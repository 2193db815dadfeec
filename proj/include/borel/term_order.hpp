#ifndef BOREL_TERM_ORDER_HPP
#define BOREL_TERM_ORDER_HPP

#include <compare>
#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "borel/errors.hpp"
#include "borel/monomial.hpp"

namespace borel {

/// Graded term orderings on x_n > ... > x_0 that refine the Borel partial
/// order: DegLex, DegRevLex and the matrix order determined by a strictly
/// increasing positive weight vector (degree row, weight row, then unit
/// tie-break rows selecting x_{n-1},...,x_1).
class term_order {
public:
  enum class kind_t { deglex, degrevlex, weight };

  static term_order deglex() { return term_order(kind_t::deglex, {}); }
  static term_order degrevlex() { return term_order(kind_t::degrevlex, {}); }

  /// Weights are indexed by variable, ascending: w[0] for x_0, ..., w[n] for x_n.
  static term_order weight_order(std::vector<mpz_class> weights) {
    if (weights.size() < 2) throw error("term_order: need at least two weights");
    if (weights.front() <= 0) throw error("term_order: weights must be positive");
    for (std::size_t i = 0; i + 1 < weights.size(); ++i)
      if (weights[i] >= weights[i + 1])
        throw error("term_order: weights must strictly increase with variable index");
    return term_order(kind_t::weight, std::move(weights));
  }

  kind_t kind() const { return kind_; }
  const std::vector<mpz_class>& weights() const { return weights_; }

  std::strong_ordering compare(const monomial& a, const monomial& b) const {
    if (a.num_vars() != b.num_vars())
      throw degree_mismatch("term_order: different variable counts");
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    switch (kind_) {
      case kind_t::deglex:
        for (int i = a.num_vars() - 1; i >= 0; --i)
          if (a[i] != b[i]) return a[i] <=> b[i];
        return std::strong_ordering::equal;
      case kind_t::degrevlex:
        // the monomial involving less of the smaller variables wins
        for (int i = 0; i < a.num_vars(); ++i)
          if (a[i] != b[i]) return b[i] <=> a[i];
        return std::strong_ordering::equal;
      case kind_t::weight: {
        if (static_cast<int>(weights_.size()) != a.num_vars())
          throw error("term_order: weight count does not match variable count");
        mpz_class wa = 0, wb = 0;
        for (int i = 0; i < a.num_vars(); ++i) {
          wa += weights_[static_cast<std::size_t>(i)] * a[i];
          wb += weights_[static_cast<std::size_t>(i)] * b[i];
        }
        int c = cmp(wa, wb);
        if (c != 0) return c <=> 0;
        for (int i = a.num_vars() - 2; i >= 1; --i)
          if (a[i] != b[i]) return a[i] <=> b[i];
        return std::strong_ordering::equal;
      }
    }
    return std::strong_ordering::equal;
  }

  bool greater(const monomial& a, const monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }
  bool less(const monomial& a, const monomial& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }

  bool operator==(const term_order& other) const {
    return kind_ == other.kind_ && weights_ == other.weights_;
  }

private:
  term_order(kind_t k, std::vector<mpz_class> w) : kind_(k), weights_(std::move(w)) {}

  kind_t kind_;
  std::vector<mpz_class> weights_;
};

/// Parses "deglex", "degrevlex" or "weights=w0,w1,...,wn" (ascending index).
inline term_order parse_order(std::string_view text) {
  if (text == "deglex") return term_order::deglex();
  if (text == "degrevlex" || text == "revlex") return term_order::degrevlex();
  constexpr std::string_view prefix = "weights=";
  if (text.substr(0, prefix.size()) == prefix) {
    std::vector<mpz_class> ws;
    std::string cur;
    for (char ch : text.substr(prefix.size())) {
      if (ch == ',') {
        if (cur.empty()) throw parse_error("order: empty weight");
        ws.emplace_back(cur);
        cur.clear();
      } else if ((ch >= '0' && ch <= '9') || ch == '-') {
        cur += ch;
      } else if (ch != ' ') {
        throw parse_error(std::string("order: unexpected character '") + ch + "'");
      }
    }
    if (cur.empty()) throw parse_error("order: empty weight");
    ws.emplace_back(cur);
    try {
      return term_order::weight_order(std::move(ws));
    } catch (const error& e) {
      throw parse_error(e.what());
    }
  }
  throw parse_error("order: expected deglex | degrevlex | weights=w0,w1,...");
}

inline std::string to_string(const term_order& o) {
  switch (o.kind()) {
    case term_order::kind_t::deglex: return "deglex";
    case term_order::kind_t::degrevlex: return "degrevlex";
    case term_order::kind_t::weight: {
      std::string s = "weights=";
      for (std::size_t i = 0; i < o.weights().size(); ++i) {
        if (i) s += ',';
        s += o.weights()[i].get_str();
      }
      return s;
    }
  }
  return {};
}

}  // namespace borel

#endif
