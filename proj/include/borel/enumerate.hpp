#ifndef BOREL_ENUMERATE_HPP
#define BOREL_ENUMERATE_HPP

#include <algorithm>
#include <cstddef>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "borel/borel_set.hpp"
#include "borel/errors.hpp"
#include "borel/hilbert.hpp"
#include "borel/monomial.hpp"

namespace borel {

namespace detail {

// Enumerates the order ideals of exact size `target` in the sub-poset of
// monomials of degree `deg` supported on x_minvar..x_n (decreasing moves at
// indices > minvar), each containing the down-closure of `floor`. Elements
// are scanned in an ascending linear extension, so a monomial may enter the
// ideal only once all its move-images are in; excluding a monomial blocks
// its parents, which drives the remaining-capacity bound.
class downset_search {
public:
  downset_search(int n, int deg, int minvar, const std::vector<monomial>& floor) {
    elems_ = poset(n, deg, minvar);
    term_order o = term_order::deglex();
    std::sort(elems_.begin(), elems_.end(),
              [&](const monomial& a, const monomial& b) { return o.less(a, b); });
    pos_.reserve(elems_.size());
    for (std::size_t k = 0; k < elems_.size(); ++k) pos_[elems_[k]] = k;
    children_.resize(elems_.size());
    parents_.resize(elems_.size());
    for (std::size_t k = 0; k < elems_.size(); ++k) {
      for (int i = minvar + 1; i <= n; ++i)
        if (can_move_down(elems_[k], i)) {
          std::size_t c = pos_.at(move_down(elems_[k], i));
          children_[k].push_back(c);
          parents_[c].push_back(k);
        }
    }
    floor_.assign(elems_.size(), false);
    std::vector<std::size_t> stack;
    for (const monomial& m : floor) {
      std::size_t k = pos_.at(m);
      if (!floor_[k]) {
        floor_[k] = true;
        stack.push_back(k);
      }
    }
    while (!stack.empty()) {
      std::size_t k = stack.back();
      stack.pop_back();
      for (std::size_t c : children_[k])
        if (!floor_[c]) {
          floor_[c] = true;
          stack.push_back(c);
        }
    }
    floor_size_ = static_cast<long>(std::count(floor_.begin(), floor_.end(), true));
  }

  /// Calls fn(selected monomials) for every qualifying order ideal.
  template <typename Fn>
  void run(long target, Fn&& fn) {
    if (target < floor_size_ || target > static_cast<long>(elems_.size())) return;
    chosen_.assign(elems_.size(), false);
    blocked_.assign(elems_.size(), 0);
    dfs(0, 0, target, fn);
  }

private:
  template <typename Fn>
  void dfs(std::size_t k, long cnt, long target, Fn&& fn) {
    if (k == elems_.size()) {
      if (cnt == target) {
        std::vector<monomial> sel;
        sel.reserve(static_cast<std::size_t>(cnt));
        for (std::size_t i = 0; i < elems_.size(); ++i)
          if (chosen_[i]) sel.push_back(elems_[i]);
        fn(sel);
      }
      return;
    }
    bool addable = true;
    for (std::size_t c : children_[k])
      if (!chosen_[c]) {
        addable = false;
        break;
      }
    if (floor_[k]) {
      if (!addable || cnt >= target) return;  // floor is down-closed; only count can fail
      chosen_[k] = true;
      dfs(k + 1, cnt + 1, target, fn);
      chosen_[k] = false;
      return;
    }
    if (addable && cnt < target) {
      chosen_[k] = true;
      dfs(k + 1, cnt + 1, target, fn);
      chosen_[k] = false;
    }
    // exclude k: its parents can no longer be chosen
    for (std::size_t p : parents_[k]) ++blocked_[p];
    long cap = 0;
    for (std::size_t i = k + 1; i < elems_.size(); ++i)
      if (blocked_[i] == 0) ++cap;
    if (cnt + cap >= target) dfs(k + 1, cnt, target, fn);
    for (std::size_t p : parents_[k]) --blocked_[p];
  }

  std::vector<monomial> elems_;
  std::unordered_map<monomial, std::size_t, monomial_hash> pos_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::vector<std::size_t>> parents_;
  std::vector<bool> floor_;
  std::vector<bool> chosen_;
  std::vector<int> blocked_;
  long floor_size_ = 0;
};

}  // namespace detail

/// All Borel sets B in P(n, r), r the Gotzmann number of p, whose ideal has
/// Hilbert polynomial p: the complement N is built stratum by stratum from
/// j = n-1 down to 0, constrained to |N_j| = delta^j p(r). Returns the empty
/// vector when no Borel set satisfies the cardinalities.
inline std::vector<borel_set> enumerate_ideals(int n, const hilbert_polynomial& p) {
  if (n < 1) throw error("enumerate_ideals: ambient dimension must be >= 1");
  if (p.degree() >= n)
    throw not_admissible("enumerate_ideals: Hilbert polynomial degree must be < " +
                         std::to_string(n));
  const int r = gotzmann_number(p);
  if (r == 0) return {borel_set::full_poset(n, 0)};

  std::vector<long> want(static_cast<std::size_t>(n) + 1, 0);  // |N_j|
  for (int j = 0; j < n; ++j) {
    mpz_class v = p.delta(static_cast<unsigned>(j))(r);
    if (v < 0) return {};
    if (!v.fits_slong_p()) throw error("enumerate_ideals: stratum size out of range");
    want[static_cast<std::size_t>(j)] = v.get_si();
  }
  std::vector<long> slice(static_cast<std::size_t>(n), 0);  // |N_j \ N_{j+1}|
  for (int j = 0; j < n; ++j) {
    slice[static_cast<std::size_t>(j)] =
        want[static_cast<std::size_t>(j)] - want[static_cast<std::size_t>(j) + 1];
    if (slice[static_cast<std::size_t>(j)] < 0) return {};
  }

  std::vector<borel_set> results;
  std::vector<monomial> complement_acc;

  // At stage j the new complement monomials have min index exactly j; divided
  // by x_j they form an order ideal of the degree-(r-1) sub-poset on
  // x_j..x_n. The floor comes from the moves e^-_{j+1} of the previous stage.
  auto descend = [&](auto&& self, int j, const std::vector<monomial>& prev_slice) -> void {
    std::vector<monomial> floor;
    floor.reserve(prev_slice.size());
    for (const monomial& m : prev_slice) {
      std::vector<int> e = m.exponents();
      --e[static_cast<std::size_t>(j) + 1];
      floor.emplace_back(std::move(e));  // = e^-_{j+1}(m) / x_j
    }
    detail::downset_search search(n, r - 1, j, floor);
    search.run(slice[static_cast<std::size_t>(j)], [&](const std::vector<monomial>& sel) {
      std::vector<monomial> here;
      here.reserve(sel.size());
      for (const monomial& u : sel) here.push_back(u.times_variable(j));
      std::size_t mark = complement_acc.size();
      complement_acc.insert(complement_acc.end(), here.begin(), here.end());
      if (j == 0) {
        std::unordered_set<monomial, monomial_hash> excluded(complement_acc.begin(),
                                                             complement_acc.end());
        std::vector<monomial> members;
        for (const monomial& m : poset(n, r))
          if (!excluded.count(m)) members.push_back(m);
        results.emplace_back(n, r, std::move(members));
      } else {
        self(self, j - 1, here);
      }
      complement_acc.resize(mark);
    });
  };
  descend(descend, n - 1, {});

  std::sort(results.begin(), results.end(),
            [](const borel_set& a, const borel_set& b) { return a.members() < b.members(); });
  return results;
}

}  // namespace borel

#endif
