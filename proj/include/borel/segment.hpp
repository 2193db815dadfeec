#ifndef BOREL_SEGMENT_HPP
#define BOREL_SEGMENT_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "borel/borel_set.hpp"
#include "borel/errors.hpp"
#include "borel/monomial.hpp"
#include "borel/simplex.hpp"
#include "borel/term_order.hpp"

namespace borel {

/// An integer weight vector 0 < w_0 < ... < w_n certifying that a Borel set
/// consists of the greatest degree-r monomials under the induced matrix
/// term order (a segment).
struct segment_certificate {
  std::vector<mpz_class> weights;  // ascending variable index
  bool verified = false;
};

inline term_order order_of(const segment_certificate& cert) {
  return term_order::weight_order(cert.weights);
}

/// Exhaustive check of the segment property: every member of B must beat
/// every complement monomial under the certificate's matrix order. Weight
/// vectors violating positivity or monotonicity are rejected outright.
inline bool verify_certificate(const borel_set& b, const segment_certificate& cert) {
  if (cert.weights.size() != static_cast<std::size_t>(b.num_vars())) return false;
  if (cert.weights.front() <= 0) return false;
  for (std::size_t i = 0; i + 1 < cert.weights.size(); ++i)
    if (cert.weights[i] >= cert.weights[i + 1]) return false;
  term_order ord = term_order::weight_order(cert.weights);
  auto n = b.complement();
  for (const monomial& inside : b.members())
    for (const monomial& outside : n)
      if (!ord.greater(inside, outside)) return false;
  return true;
}

/// Searches for a segment certificate by exact-LP feasibility. Variables are
/// the weights; constraints are w_0 >= 1, w_{i+1} - w_i >= 1 and, for every
/// (minimal member, maximal complement monomial) pair, w.(alpha - beta) >= 1.
/// Strictness over only those pairs is enough: the Borel order sandwiches all
/// other pairs. The sum of the weights is minimized to keep certificates
/// small and deterministic; the rational optimum is cleared to integers.
inline std::optional<segment_certificate> find_segment_order(const borel_set& b) {
  const int nv = b.num_vars();
  std::vector<std::vector<mpq_class>> a;
  std::vector<mpq_class> rhs;
  {
    std::vector<mpq_class> row(static_cast<std::size_t>(nv), 0);
    row[0] = 1;
    a.push_back(row);
    rhs.emplace_back(1);
  }
  for (int i = 0; i + 1 < nv; ++i) {
    std::vector<mpq_class> row(static_cast<std::size_t>(nv), 0);
    row[static_cast<std::size_t>(i)] = -1;
    row[static_cast<std::size_t>(i) + 1] = 1;
    a.push_back(row);
    rhs.emplace_back(1);
  }
  for (const monomial& alpha : minimal_elements(b)) {
    for (const monomial& beta : maximal_elements(b)) {
      std::vector<mpq_class> row(static_cast<std::size_t>(nv), 0);
      for (int i = 0; i < nv; ++i) row[static_cast<std::size_t>(i)] = alpha[i] - beta[i];
      a.push_back(std::move(row));
      rhs.emplace_back(1);
    }
  }
  std::vector<mpq_class> cost(static_cast<std::size_t>(nv), 1);
  simplex_solver solver;
  auto sol = solver.minimize(a, rhs, cost);
  if (!sol) return std::nullopt;
  mpz_class common_den = 1;
  for (const mpq_class& q : *sol) common_den = lcm(common_den, q.get_den());
  segment_certificate cert;
  cert.weights.reserve(sol->size());
  for (const mpq_class& q : *sol)
    cert.weights.push_back(mpz_class(q.get_num() * (common_den / q.get_den())));
  cert.verified = verify_certificate(b, cert);
  if (!cert.verified)
    throw invariant_violation("find_segment_order: LP solution failed verification");
  return cert;
}

/// The certificate's full ordering matrix in text form: degree row, weight
/// row (descending variable order, matching the display convention
/// x_n > ... > x_0), then the unit tie-break rows.
inline std::string matrix_text(const segment_certificate& cert) {
  const std::size_t nv = cert.weights.size();
  auto row_text = [&](const std::vector<std::string>& cells) {
    std::string s = "[ ";
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += ' ';
      s += cells[i];
    }
    s += " ]\n";
    return s;
  };
  std::string out;
  out += row_text(std::vector<std::string>(nv, "1"));
  std::vector<std::string> w;
  for (std::size_t i = nv; i-- > 0;) w.push_back(cert.weights[i].get_str());
  out += row_text(w);
  for (std::size_t r = 1; r + 1 < nv; ++r) {
    std::vector<std::string> unit(nv, "0");
    unit[r] = "1";  // selects x_{n-r}
    out += row_text(unit);
  }
  return out;
}

}  // namespace borel

#endif
