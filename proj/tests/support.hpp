#ifndef BOREL_TESTS_SUPPORT_HPP
#define BOREL_TESTS_SUPPORT_HPP

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "borel/borel_set.hpp"
#include "borel/io.hpp"
#include "borel/monomial.hpp"

namespace test_support {

using namespace borel;

inline monomial mono(const std::string& text, int num_vars) {
  return parse_monomial(text, num_vars);
}

inline borel_set stratum(const std::string& ideal) {
  return parse_and_resolve_ideal(ideal).stratum;
}

// K[x0..x3], Hilbert polynomial 6t-5, truncation degree 10. Index k holds
// reference catalog entry I_{k+1}.
inline std::vector<std::string> hilb3_6tm5() {
  return {
      "x3, x2^7, x2^6*x1^4 @ 10",
      "x3, x2^8, x2^7*x1, x2^6*x1^3 @ 10",
      "x3^2, x3*x2, x3*x1, x2^7, x2^6*x1^3 @ 10",
      "x3^2, x3*x2, x3*x1, x2^8, x2^7*x1, x2^6*x1^2 @ 10",
      "x3^2, x3*x2, x3*x1^2, x2^7, x2^6*x1^2 @ 10",
      "x3^2, x3*x2, x3*x1^3, x2^7, x2^6*x1 @ 10",
      "x3^2, x3*x2^2, x3*x2*x1, x3*x1^2, x2^7, x2^6*x1 @ 10",
      "x3^2, x3*x2, x3*x1^4, x2^6 @ 10",
      "x3^2, x3*x2^2, x3*x2*x1, x3*x1^3, x2^6 @ 10",
      "x3^3, x3^2*x2, x3*x2^2, x3^2*x1, x3*x2*x1, x3*x1^2, x2^6 @ 10",
      "x3^2, x3*x2, x2^5 @ 10",
  };
}

// K[x0..x3], constant Hilbert polynomial 8 (eight points), degree 8.
inline std::vector<std::string> hilb3_8() {
  return {
      "x3, x2, x1^8 @ 8",
      "x3, x2^2, x2*x1, x1^7 @ 8",
      "x3, x2^2, x2*x1^2, x1^6 @ 8",
      "x3^2, x3*x2, x2^2, x3*x1, x2*x1, x1^6 @ 8",
      "x3, x2^2, x2*x1^3, x1^5 @ 8",
      "x3, x2^3, x2^2*x1, x2*x1^2, x1^5 @ 8",
      "x3^2, x3*x2, x2^2, x3*x1, x2*x1^2, x1^5 @ 8",
      "x3, x2^3, x2^2*x1, x2*x1^3, x1^4 @ 8",
      "x3^2, x3*x2, x2^2, x3*x1, x2*x1^3, x1^4 @ 8",
      "x3^2, x3*x2, x3*x1, x2^3, x2^2*x1, x2*x1^2, x1^4 @ 8",
      "x3^2, x3*x2, x2^2, x3*x1^2, x2*x1^2, x1^4 @ 8",
      "x3^2, x3*x2, x2^3, x2^2*x1, x3*x1^2, x2*x1^2, x1^3 @ 8",
  };
}

// K[x0..x4], Hilbert polynomial 4t+1, degree 7.
inline std::vector<std::string> hilb4_4tp1() {
  return {
      "x4, x3, x2^5, x2^4*x1^3 @ 7",
      "x4, x3, x2^6, x2^5*x1, x2^4*x1^2 @ 7",
      "x4, x3^2, x3*x2, x3*x1, x2^5, x2^4*x1^2 @ 7",
      "x4, x3^2, x3*x2, x3*x1^2, x2^5, x2^4*x1 @ 7",
      "x4^2, x4*x3, x3^2, x4*x2, x3*x2, x4*x1, x3*x1, x2^5, x2^4*x1 @ 7",
      "x4, x3^2, x3*x2, x2^4, x3*x1^3 @ 7",
      "x4, x3^2, x3*x2^2, x3*x2*x1, x3*x1^2, x2^4 @ 7",
      "x4^2, x4*x3, x3^2, x4*x2, x3*x2, x4*x1, x3*x1^2, x2^4 @ 7",
      "x4, x3^2, x3*x2, x2^4, x2^3*x1 @ 7",
      "x4, x3^2, x3*x2^2, x2^3, x3*x2*x1 @ 7",
      "x4^2, x4*x3, x3^2, x4*x2, x3*x2, x4*x1, x2^3 @ 7",
      "x4^2, x4*x3, x3^2, x4*x2, x3*x2, x2^2 @ 7",
  };
}

// The running example on Hilb^3_{3t+5}: source ideal and its five targets.
inline std::string example_3t5_source() {
  return "x3^2, x3*x2^2, x3*x2*x1, x2^4, x2^3*x1, x2^2*x1^2 @ 8";
}
inline std::vector<std::string> example_3t5_targets() {
  return {
      "x3^3, x3^2*x2, x3*x2^2, x2^3, x3^2*x1, x3*x2*x1, x2^2*x1^2 @ 8",
      "x3^2, x3*x2^2, x2^3, x3*x2*x1^2, x2^2*x1^2 @ 8",
      "x3^2, x3*x2, x2^4, x2^3*x1, x2^2*x1^3 @ 8",
      "x3^2, x3*x2^2, x2^3, x3*x2*x1, x2^2*x1^3 @ 8",
      "x3^2, x3*x2^2, x3*x2*x1, x2^4, x2^3*x1, x3*x1^3 @ 8",
  };
}
inline std::string example_3t5_pair_target() {  // both swaps at once
  return "x3^3, x3^2*x2, x3*x2^2, x2^3, x3^2*x1, x3*x2*x1, x3*x1^3 @ 8";
}

// Reflexive-transitive closure of single decreasing moves on P(n, r):
// oracle for the Borel partial order. reachable[a] holds every monomial
// obtainable from a by decreasing moves, a included.
inline std::map<monomial, std::set<monomial>> down_closure_oracle(int n, int r) {
  std::map<monomial, std::set<monomial>> reach;
  for (const monomial& start : poset(n, r)) {
    std::set<monomial>& seen = reach[start];
    std::queue<monomial> q;
    q.push(start);
    seen.insert(start);
    while (!q.empty()) {
      monomial m = q.front();
      q.pop();
      for (int i = 1; i <= n; ++i)
        if (can_move_down(m, i)) {
          monomial d = move_down(m, i);
          if (seen.insert(d).second) q.push(d);
        }
    }
  }
  return reach;
}

// Brute-force enumeration of all down-closed subsets of P(n, r) with at most
// max_size elements, by direct include/exclude over an ascending scan. Used
// as the independent oracle for enumerate_ideals.
inline std::vector<std::set<monomial>> all_downsets_oracle(int n, int r, std::size_t max_size) {
  std::vector<monomial> elems = poset(n, r);
  term_order o = term_order::deglex();
  std::sort(elems.begin(), elems.end(),
            [&](const monomial& a, const monomial& b) { return o.less(a, b); });
  std::vector<std::set<monomial>> out;
  std::set<monomial> cur;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == elems.size()) {
      out.push_back(cur);
      return;
    }
    bool can_add = cur.size() < max_size;
    for (int i = 1; i <= n && can_add; ++i)
      if (can_move_down(elems[k], i) && !cur.count(move_down(elems[k], i))) can_add = false;
    if (can_add) {
      cur.insert(elems[k]);
      self(self, k + 1);
      cur.erase(elems[k]);
    }
    self(self, k + 1);
  };
  rec(rec, 0);
  return out;
}

inline bool same_ideal_set(const std::vector<borel_set>& got,
                           const std::vector<std::string>& expected) {
  if (got.size() != expected.size()) return false;
  std::set<std::string> a, b;
  for (const borel_set& s : got) a.insert(s.key());
  for (const std::string& e : expected) b.insert(stratum(e).key());
  return a == b;
}

}  // namespace test_support

#endif
