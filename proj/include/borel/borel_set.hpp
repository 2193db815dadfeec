#ifndef BOREL_BOREL_SET_HPP
#define BOREL_BOREL_SET_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "borel/errors.hpp"
#include "borel/hilbert.hpp"
#include "borel/monomial.hpp"
#include "borel/term_order.hpp"

namespace borel {

/// All monomials of degree r in the variables x_minvar,...,x_n, as elements
/// of K[x_0,...,x_n]. This is the poset P(n - minvar, r) embedded in P(n, r).
inline std::vector<monomial> poset(int n, int r, int minvar = 0) {
  std::vector<monomial> out;
  std::vector<int> cur(static_cast<std::size_t>(n) + 1, 0);
  auto rec = [&](auto&& self, int i, int rem) -> void {
    if (i == n) {
      cur[static_cast<std::size_t>(i)] = rem;
      out.emplace_back(cur);
      return;
    }
    int hi = (i < minvar) ? 0 : rem;
    for (int e = 0; e <= hi; ++e) {
      cur[static_cast<std::size_t>(i)] = e;
      self(self, i + 1, rem - e);
    }
    cur[static_cast<std::size_t>(i)] = 0;
  };
  if (r == 0) return {monomial::one(n + 1)};
  rec(rec, 0, r);
  return out;
}

/// The degree-r piece of a Borel-fixed ideal: a subset of P(n, r) closed
/// under elementary increasing moves. Members are kept sorted DegLex
/// descending, which is the canonical form used for equality and hashing.
class borel_set {
public:
  borel_set(int ambient_dim, int degree, std::vector<monomial> members)
      : n_(ambient_dim), r_(degree), members_(std::move(members)) {
    if (n_ < 1) throw error("borel_set: ambient dimension must be >= 1");
    if (r_ < 0) throw error("borel_set: negative degree");
    for (const monomial& m : members_) {
      if (m.num_vars() != n_ + 1) throw error("borel_set: wrong variable count");
      if (m.degree() != r_) throw not_borel("borel_set: member of wrong degree " + to_string(m));
    }
    term_order o = term_order::deglex();
    std::sort(members_.begin(), members_.end(),
              [&](const monomial& a, const monomial& b) { return o.greater(a, b); });
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    index_ = std::unordered_set<monomial, monomial_hash>(members_.begin(), members_.end());
    for (const monomial& m : members_)
      for (int j = 0; j < n_; ++j)
        if (can_move_up(m, j) && !contains(move_up(m, j)))
          throw not_borel("borel_set: not closed under increasing moves at " + to_string(m));
  }

  static borel_set full_poset(int n, int r) { return borel_set(n, r, poset(n, r)); }

  /// Degree-r span of a list of monomial generators.
  static borel_set from_generators(int n, int r, const std::vector<monomial>& gens) {
    std::vector<monomial> members;
    std::unordered_set<monomial, monomial_hash> seen;
    for (const monomial& g : gens) {
      if (g.degree() > r)
        throw error("borel_set: generator " + to_string(g) + " exceeds degree " + std::to_string(r));
      for (const monomial& f : poset(n, r - g.degree())) {
        monomial m = g * f;
        if (seen.insert(m).second) members.push_back(m);
      }
    }
    return borel_set(n, r, std::move(members));
  }

  int ambient_dim() const { return n_; }
  int num_vars() const { return n_ + 1; }
  int degree() const { return r_; }
  int size() const { return static_cast<int>(members_.size()); }

  const std::vector<monomial>& members() const { return members_; }
  bool contains(const monomial& m) const { return index_.count(m) > 0; }

  /// Complement N = P(n, r) \ B, DegLex descending.
  std::vector<monomial> complement() const {
    std::vector<monomial> out;
    for (const monomial& m : poset(n_, r_))
      if (!contains(m)) out.push_back(m);
    term_order o = term_order::deglex();
    std::sort(out.begin(), out.end(),
              [&](const monomial& a, const monomial& b) { return o.greater(a, b); });
    return out;
  }

  bool operator==(const borel_set& o) const {
    return n_ == o.n_ && r_ == o.r_ && members_ == o.members_;
  }

  /// Stable string key for dedup maps.
  std::string key() const {
    std::string s = std::to_string(n_) + "@" + std::to_string(r_) + ":";
    for (const monomial& m : members_) {
      for (int e : m.exponents()) {
        s += std::to_string(e);
        s += ',';
      }
      s += ';';
    }
    return s;
  }

private:
  int n_;
  int r_;
  std::vector<monomial> members_;
  std::unordered_set<monomial, monomial_hash> index_;
};

/// One stratum of a Borel set: B_j = B intersected with P(n-j, r) and its
/// complement N_j inside P(n-j, r).
struct stratum_pair {
  std::vector<monomial> in_set;         // B_j
  std::vector<monomial> in_complement;  // N_j
};

/// The strata (B_j, N_j) for j = 0..n-1.
inline std::vector<stratum_pair> strata(const borel_set& b) {
  std::vector<stratum_pair> out(static_cast<std::size_t>(b.ambient_dim()));
  for (const monomial& m : poset(b.ambient_dim(), b.degree())) {
    int mi = std::min(m.min_index(), b.ambient_dim() - 1);
    bool in = b.contains(m);
    for (int j = 0; j <= mi; ++j) {
      if (in)
        out[static_cast<std::size_t>(j)].in_set.push_back(m);
      else
        out[static_cast<std::size_t>(j)].in_complement.push_back(m);
    }
  }
  return out;
}

/// Minimal elements of B_j lying in B_j \ B_{j+1}: members with min index j
/// whose admissible decreasing moves at indices > j all leave B.
inline std::vector<monomial> minimal_elements(const borel_set& b, int j) {
  std::vector<monomial> out;
  for (const monomial& m : b.members()) {
    if (m.min_index() != j) continue;
    bool minimal = true;
    for (int i = j + 1; i < b.num_vars() && minimal; ++i)
      if (can_move_down(m, i) && b.contains(move_down(m, i))) minimal = false;
    if (minimal) out.push_back(m);
  }
  return out;
}

/// Maximal elements of N_j lying in N_j \ N_{j+1}: complement monomials with
/// min index j whose admissible increasing moves all land in B.
inline std::vector<monomial> maximal_elements(const borel_set& b, int j) {
  std::vector<monomial> out;
  for (const monomial& m : b.complement()) {
    if (m.min_index() != j) continue;
    bool maximal = true;
    for (int i = j; i + 1 < b.num_vars() && maximal; ++i)
      if (can_move_up(m, i) && !b.contains(move_up(m, i))) maximal = false;
    if (maximal) out.push_back(m);
  }
  return out;
}

/// Globally minimal members: every admissible decreasing move leaves B.
inline std::vector<monomial> minimal_elements(const borel_set& b) {
  std::vector<monomial> out;
  for (const monomial& m : b.members()) {
    bool minimal = true;
    for (int i = 1; i < b.num_vars() && minimal; ++i)
      if (can_move_down(m, i) && b.contains(move_down(m, i))) minimal = false;
    if (minimal) out.push_back(m);
  }
  return out;
}

/// Globally maximal complement monomials: every admissible increasing move
/// lands in B.
inline std::vector<monomial> maximal_elements(const borel_set& b) {
  std::vector<monomial> out;
  for (const monomial& m : b.complement()) {
    bool maximal = true;
    for (int i = 0; i + 1 < b.num_vars() && maximal; ++i)
      if (can_move_up(m, i) && !b.contains(move_up(m, i))) maximal = false;
    if (maximal) out.push_back(m);
  }
  return out;
}

/// Recovers the Hilbert polynomial of K[x]/<B> from the stratum cardinalities
/// |N_j|: the unique polynomial p of degree < n with delta^j p(r) = |N_j|,
/// reconstructed in the Newton basis at r and verified against every stratum.
inline hilbert_polynomial hilbert_polynomial_of(const borel_set& b) {
  const int n = b.ambient_dim();
  const long r = b.degree();
  std::vector<long> counts(static_cast<std::size_t>(n), 0);
  auto st = strata(b);
  for (int j = 0; j < n; ++j)
    counts[static_cast<std::size_t>(j)] =
        static_cast<long>(st[static_cast<std::size_t>(j)].in_complement.size());
  hilbert_polynomial p;
  for (int j = 0; j < n; ++j)
    p = p + hilbert_polynomial::binomial_in_t(j - 1 - r, static_cast<unsigned>(j)) *
                mpz_class(counts[static_cast<std::size_t>(j)]);
  for (int j = 0; j < n; ++j)
    if (p.delta(static_cast<unsigned>(j))(r) != counts[static_cast<std::size_t>(j)])
      throw invariant_violation("hilbert_polynomial_of: stratum equation failed");
  return p;
}

/// A Borel-fixed ideal presented by one degree-r stratum together with the
/// minimal generators of its saturation.
struct borel_ideal {
  borel_set stratum;
  std::vector<monomial> saturated_generators;  // x_0-free, sorted by degree then revlex-desc
  int regularity = 0;
};

/// Saturation: substitute 1 for x_0 in every member and keep the monomials
/// minimal under divisibility. The regularity is the largest generator degree.
inline borel_ideal saturate(const borel_set& b) {
  std::vector<monomial> reduced;
  std::unordered_set<monomial, monomial_hash> seen;
  for (const monomial& m : b.members()) {
    std::vector<int> e = m.exponents();
    e[0] = 0;
    monomial q{std::move(e)};
    if (seen.insert(q).second) reduced.push_back(q);
  }
  std::sort(reduced.begin(), reduced.end(), [](const monomial& a, const monomial& b2) {
    if (a.degree() != b2.degree()) return a.degree() < b2.degree();
    return a < b2;  // within a degree: revlex descending
  });
  std::vector<monomial> gens;
  for (const monomial& m : reduced) {
    bool redundant = false;
    for (const monomial& g : gens)
      if (g.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) gens.push_back(m);
  }
  int reg = 0;
  for (const monomial& g : gens) reg = std::max(reg, g.degree());
  return borel_ideal{b, std::move(gens), reg};
}

}  // namespace borel

#endif
