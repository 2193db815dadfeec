#ifndef BOREL_DEFORM_HPP
#define BOREL_DEFORM_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "borel/borel_set.hpp"
#include "borel/errors.hpp"
#include "borel/hilbert.hpp"
#include "borel/monomial.hpp"
#include "borel/rank.hpp"
#include "borel/term_order.hpp"

namespace borel {

/// A composition of elementary decreasing moves, stored as the exponent map
/// index -> multiplicity with strictly decreasing indices. The empty
/// composition is the identity. Admissibility is the endpoint condition:
/// the product of the move quotients times the monomial stays in K[x].
class move_composition {
public:
  move_composition() = default;  // identity

  explicit move_composition(std::vector<std::pair<int, int>> steps) : steps_(std::move(steps)) {
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      if (steps_[i].first < 1 || steps_[i].second < 1)
        throw error("move_composition: indices and multiplicities must be positive");
      if (i + 1 < steps_.size() && steps_[i].first <= steps_[i + 1].first)
        throw error("move_composition: indices must strictly decrease");
    }
  }

  static move_composition identity() { return {}; }

  bool is_identity() const { return steps_.empty(); }
  const std::vector<std::pair<int, int>>& steps() const { return steps_; }

  bool admissible_on(const monomial& m) const {
    return net_exponents(m).has_value();
  }

  monomial apply(const monomial& m) const {
    auto e = net_exponents(m);
    if (!e) throw inadmissible_move("move_composition: not admissible on " + to_string(m));
    return monomial(std::move(*e));
  }

  auto operator<=>(const move_composition&) const = default;

private:
  std::optional<std::vector<int>> net_exponents(const monomial& m) const {
    std::vector<int> e = m.exponents();
    for (const auto& [idx, mult] : steps_) {
      if (idx >= m.num_vars()) return std::nullopt;
      e[static_cast<std::size_t>(idx)] -= mult;
      e[static_cast<std::size_t>(idx) - 1] += mult;
    }
    for (int v : e)
      if (v < 0) return std::nullopt;
    return e;
  }

  std::vector<std::pair<int, int>> steps_;
};

inline std::string to_string(const move_composition& f) {
  if (f.is_identity()) return "id";
  std::string s;
  for (const auto& [idx, mult] : f.steps()) {
    if (!s.empty()) s += '*';
    s += "e" + std::to_string(idx);
    if (mult > 1) s += "^" + std::to_string(mult);
  }
  return s;
}

/// The family of admissible decreasing-move compositions attached to a
/// minimal monomial of a stratum: all compositions over indices <= j whose
/// image of the pivot stays in B, together with the identity.
class dec_move_family {
public:
  dec_move_family(int stratum, std::vector<move_composition> comps)
      : stratum_(stratum), comps_(std::move(comps)) {
    std::sort(comps_.begin(), comps_.end());
    comps_.erase(std::unique(comps_.begin(), comps_.end()), comps_.end());
  }

  int stratum() const { return stratum_; }
  int size() const { return static_cast<int>(comps_.size()); }
  const std::vector<move_composition>& compositions() const { return comps_; }

  std::vector<monomial> image_of(const monomial& m) const {
    std::vector<monomial> out;
    out.reserve(comps_.size());
    for (const move_composition& f : comps_) out.push_back(f.apply(m));
    return out;
  }

  bool operator==(const dec_move_family&) const = default;

private:
  int stratum_;
  std::vector<move_composition> comps_;
};

/// All compositions F over indices <= j with F(alpha) in B, plus the
/// identity. Images of sub-compositions stay in B automatically (B is an
/// up-set), so the search extends compositions only while the endpoint
/// remains inside.
inline dec_move_family decreasing_family(const borel_set& b, const monomial& alpha, int j) {
  {
    auto mins = minimal_elements(b, j);
    if (std::find(mins.begin(), mins.end(), alpha) == mins.end())
      throw pivot_not_minimal("decreasing_family: " + to_string(alpha) +
                              " is not minimal in stratum " + std::to_string(j));
  }
  std::vector<move_composition> comps{move_composition::identity()};
  std::vector<std::pair<int, int>> steps;
  auto extend = [&](auto&& self, int max_index) -> void {
    for (int l = max_index; l >= 1; --l) {
      for (int mult = 1;; ++mult) {
        steps.emplace_back(l, mult);
        move_composition f(steps);
        steps.pop_back();
        if (!f.admissible_on(alpha) || !b.contains(f.apply(alpha))) break;
        comps.push_back(f);
        steps.emplace_back(l, mult);
        self(self, l - 1);
        steps.pop_back();
      }
    }
  };
  extend(extend, j);
  return dec_move_family(j, std::move(comps));
}

/// Borel consistency of a family w.r.t. a maximal complement monomial beta:
/// every composition must be admissible on beta and every admissible
/// increasing move at index >= j of every image must land back in B.
inline bool is_borel_consistent(const borel_set& b, const dec_move_family& fam,
                                const monomial& beta) {
  for (const move_composition& f : fam.compositions()) {
    if (!f.admissible_on(beta)) return false;
    monomial img = f.apply(beta);
    for (int i = fam.stratum(); i + 1 < b.num_vars(); ++i)
      if (can_move_up(img, i) && !b.contains(move_up(img, i))) return false;
  }
  return true;
}

/// One rational deformation: the swap of F(alpha) with F(beta) over a
/// Borel-consistent family, connecting two Borel sets with equal Hilbert
/// polynomial.
struct deformation {
  borel_set source;
  borel_set target;
  int stratum;
  monomial alpha;
  monomial beta;
  dec_move_family family;
};

namespace detail {

inline borel_set swap_family(const borel_set& b, const dec_move_family& fam,
                             const monomial& alpha, const monomial& beta) {
  std::unordered_set<monomial, monomial_hash> removed;
  for (const monomial& m : fam.image_of(alpha)) removed.insert(m);
  std::vector<monomial> members;
  members.reserve(b.members().size());
  for (const monomial& m : b.members())
    if (!removed.count(m)) members.push_back(m);
  for (const monomial& m : fam.image_of(beta)) members.push_back(m);
  return borel_set(b.ambient_dim(), b.degree(), std::move(members));
}

inline void check_deformation_invariants(const deformation& d) {
  auto src = strata(d.source), tgt = strata(d.target);
  for (std::size_t j = 0; j < src.size(); ++j)
    if (src[j].in_set.size() != tgt[j].in_set.size())
      throw invariant_violation("deformation: stratum cardinality changed");
  if (!(hilbert_polynomial_of(d.source) == hilbert_polynomial_of(d.target)))
    throw invariant_violation("deformation: Hilbert polynomial changed");
}

}  // namespace detail

/// Every rational deformation of B: for each stratum i, each pair of a
/// minimal member and a maximal complement monomial not one decreasing move
/// apart (at an index > i) is swapped when the family is Borel-consistent.
/// Deduplicated by target; scan order is stratum ascending, pairs DegLex
/// descending.
inline std::vector<deformation> all_deformations(const borel_set& b) {
  std::vector<deformation> out;
  std::unordered_set<std::string> seen_targets;
  for (int i = 0; i < b.ambient_dim(); ++i) {
    auto mins = minimal_elements(b, i);
    auto maxs = maximal_elements(b, i);
    for (const monomial& alpha : mins) {
      for (const monomial& beta : maxs) {
        bool one_move_apart = false;
        for (int k = i + 1; k < b.num_vars() && !one_move_apart; ++k)
          if (can_move_down(alpha, k) && move_down(alpha, k) == beta) one_move_apart = true;
        if (one_move_apart) continue;
        dec_move_family fam = decreasing_family(b, alpha, i);
        if (!is_borel_consistent(b, fam, beta)) continue;
        borel_set target = detail::swap_family(b, fam, alpha, beta);
        if (!seen_targets.insert(target.key()).second) continue;
        deformation d{b, std::move(target), i, alpha, beta, std::move(fam)};
        detail::check_deformation_invariants(d);
        out.push_back(std::move(d));
      }
    }
  }
  return out;
}

/// The unique deformation of B selected by a term order refining the Borel
/// order: scan strata upward and swap at the first stratum whose order-least
/// minimal member is order-smaller than the order-greatest maximal
/// complement monomial, provided the family is Borel-consistent. Returns
/// nullopt when B is an endpoint for the order.
inline std::optional<deformation> to_deformation(const borel_set& b, const term_order& ord) {
  for (int i = 0; i < b.ambient_dim(); ++i) {
    auto mins = minimal_elements(b, i);
    auto maxs = maximal_elements(b, i);
    if (mins.empty() || maxs.empty()) continue;
    monomial alpha = mins.front();
    for (const monomial& m : mins)
      if (ord.less(m, alpha)) alpha = m;
    monomial beta = maxs.front();
    for (const monomial& m : maxs)
      if (ord.greater(m, beta)) beta = m;
    if (!ord.less(alpha, beta)) continue;
    dec_move_family fam = decreasing_family(b, alpha, i);
    if (!is_borel_consistent(b, fam, beta)) continue;
    borel_set target = detail::swap_family(b, fam, alpha, beta);
    deformation d{b, std::move(target), i, alpha, beta, std::move(fam)};
    detail::check_deformation_invariants(d);
    return d;
  }
  return std::nullopt;
}

/// Compatibility of several deformations of one source (pairwise conditions):
///   (i)  no beta_j lies below an alpha_i in the Borel order;
///   (ii) for min(alpha_i) > min(alpha_j), no admissible decreasing move of
///        alpha_j at an index >= min(alpha_i) lands below beta_i;
///   (iii) the swapped monomial sets are pairwise disjoint on both sides.
/// Compatible deformations can be performed simultaneously.
inline bool compatible(const std::vector<deformation>& defs) {
  for (std::size_t i = 1; i < defs.size(); ++i)
    if (!(defs[i].source == defs[0].source))
      throw mismatched_source("compatible: all deformations must share one source");
  if (defs.size() < 2) return true;
  const int nv = defs[0].source.num_vars();
  for (std::size_t i = 0; i < defs.size(); ++i) {
    for (std::size_t j = 0; j < defs.size(); ++j) {
      if (i == j) continue;
      if (borel_leq(defs[j].beta, defs[i].alpha)) return false;  // (i)
      if (defs[i].alpha.min_index() > defs[j].alpha.min_index()) {  // (ii)
        for (int l = defs[i].alpha.min_index(); l < nv; ++l) {
          if (!can_move_down(defs[j].alpha, l)) continue;
          if (borel_leq(move_down(defs[j].alpha, l), defs[i].beta)) return false;
        }
      }
    }
  }
  for (std::size_t i = 0; i < defs.size(); ++i) {  // (iii)
    std::unordered_set<monomial, monomial_hash> ai, bi;
    for (const monomial& m : defs[i].family.image_of(defs[i].alpha)) ai.insert(m);
    for (const monomial& m : defs[i].family.image_of(defs[i].beta)) bi.insert(m);
    for (std::size_t j = i + 1; j < defs.size(); ++j) {
      for (const monomial& m : defs[j].family.image_of(defs[j].alpha))
        if (ai.count(m)) return false;
      for (const monomial& m : defs[j].family.image_of(defs[j].beta))
        if (bi.count(m)) return false;
    }
  }
  return true;
}

/// Performs a subset of compatible swaps simultaneously: for each deformation
/// with take_beta set, F(alpha) leaves and F(beta) enters. The result is a
/// Borel set with the same Hilbert polynomial.
inline borel_set compose(const std::vector<deformation>& defs, const std::vector<bool>& take_beta) {
  if (defs.empty()) throw error("compose: empty deformation set");
  if (take_beta.size() != defs.size())
    throw error("compose: one side choice per deformation required");
  if (!compatible(defs)) throw incompatible("compose: deformations are not compatible");
  std::unordered_set<monomial, monomial_hash> removed;
  std::vector<monomial> added;
  for (std::size_t i = 0; i < defs.size(); ++i) {
    if (!take_beta[i]) continue;
    for (const monomial& m : defs[i].family.image_of(defs[i].alpha)) removed.insert(m);
    for (const monomial& m : defs[i].family.image_of(defs[i].beta)) added.push_back(m);
  }
  std::vector<monomial> members;
  for (const monomial& m : defs[0].source.members())
    if (!removed.count(m)) members.push_back(m);
  members.insert(members.end(), added.begin(), added.end());
  try {
    borel_set result(defs[0].source.ambient_dim(), defs[0].source.degree(), std::move(members));
    if (!(hilbert_polynomial_of(result) == hilbert_polynomial_of(defs[0].source)))
      throw invariant_violation("compose: Hilbert polynomial changed");
    return result;
  } catch (const not_borel& e) {
    throw invariant_violation(std::string("compose: result not Borel: ") + e.what());
  }
}

/// Direct flatness verification for one deformation via the persistence
/// criterion: the fiber at y0 = 1, y1 of the pencil
///   < B \ F(alpha) , { F(alpha) + y1 F(beta) } >
/// must span exactly q(r+1) dimensions in degree r+1, as must both monomial
/// fibers. The dimension is the exact rank of the multiplication rows.
inline bool verify_flat(const deformation& d, const mpq_class& y1 = 1) {
  const borel_set& b = d.source;
  const int nv = b.num_vars();
  const hilbert_polynomial p = hilbert_polynomial_of(b);
  const mpz_class q_next = complement(p, b.ambient_dim(), b.degree() + 1);

  std::unordered_map<monomial, long, monomial_hash> col;
  auto col_of = [&](const monomial& m) -> long {
    auto [it, inserted] = col.try_emplace(m, static_cast<long>(col.size()));
    return it->second;
  };

  auto monomial_span = [&](const std::vector<monomial>& gens) -> long {
    std::unordered_set<monomial, monomial_hash> spanned;
    for (const monomial& g : gens)
      for (int i = 0; i < nv; ++i) spanned.insert(g.times_variable(i));
    return static_cast<long>(spanned.size());
  };

  if (monomial_span(b.members()) != q_next) return false;
  if (monomial_span(d.target.members()) != q_next) return false;

  std::unordered_set<monomial, monomial_hash> removed;
  for (const monomial& m : d.family.image_of(d.alpha)) removed.insert(m);
  std::unordered_set<monomial, monomial_hash> covered;
  for (const monomial& g : b.members()) {
    if (removed.count(g)) continue;
    for (int i = 0; i < nv; ++i) covered.insert(g.times_variable(i));
  }
  std::vector<sparse_row> residual;
  for (const move_composition& f : d.family.compositions()) {
    monomial fa = f.apply(d.alpha);
    monomial fb = f.apply(d.beta);
    for (int i = 0; i < nv; ++i) {
      monomial ma = fa.times_variable(i);
      monomial mb = fb.times_variable(i);
      sparse_row row;
      if (!covered.count(ma)) row.emplace_back(col_of(ma), mpq_class(1));
      if (!covered.count(mb)) row.emplace_back(col_of(mb), y1);
      if (!row.empty()) residual.push_back(std::move(row));
    }
  }
  long dim = static_cast<long>(covered.size()) + rank_of_rows(residual);
  return dim == q_next;
}

}  // namespace borel

#endif
