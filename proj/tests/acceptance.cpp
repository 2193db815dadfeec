// Acceptance suite: one pass/fail line per criterion, exit status = number of
// failed criteria. Expected values are the reference values for the schemes
// Hilb^3_{6t-5}, Hilb^3_8, Hilb^4_{4t+1} and the running 3t+5 example.

#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "borel/deform.hpp"
#include "borel/enumerate.hpp"
#include "borel/graph.hpp"
#include "borel/io.hpp"
#include "borel/segment.hpp"
#include "support.hpp"

using namespace borel;
using test_support::mono;
using test_support::stratum;

namespace {

int g_failures = 0;
std::ostringstream g_detail;

void report(int number, const std::string& title, bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << "\n";
  if (!ok) {
    ++g_failures;
    std::string detail = g_detail.str();
    if (!detail.empty()) std::cout << detail;
  }
  g_detail.str("");
}

#define EXPECT(cond)                                                       \
  do {                                                                     \
    if (!(cond)) {                                                         \
      ok = false;                                                          \
      g_detail << "       failed: " << #cond << " (line " << __LINE__      \
               << ")\n";                                                   \
    }                                                                      \
  } while (0)

std::map<int, int> label_map(const deform_graph& g, const std::vector<std::string>& pub) {
  std::map<std::string, int> by_key;
  for (std::size_t k = 0; k < pub.size(); ++k)
    by_key[stratum(pub[k]).key()] = static_cast<int>(k) + 1;
  std::map<int, int> labels;
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    labels[static_cast<int>(i)] = by_key.at(g.vertices[i].stratum.key());
  return labels;
}

// ---- criterion 1: the 3t+5 running example is reproduced exactly ----
void criterion1() {
  bool ok = true;
  borel_set src = stratum(test_support::example_3t5_source());
  auto defs = all_deformations(src);
  EXPECT(defs.size() == 5);
  std::set<std::string> got, want;
  for (const deformation& d : defs) got.insert(saturate(d.target).stratum.key());
  for (const std::string& s : test_support::example_3t5_targets()) want.insert(stratum(s).key());
  EXPECT(got == want);
  bool family_found = false;
  for (const deformation& d : defs) {
    if (d.stratum != 1) continue;
    family_found = true;
    EXPECT(d.alpha == mono("x2^2*x1^6", 4));
    EXPECT(d.beta == mono("x3*x1^7", 4));
    std::set<move_composition> comps(d.family.compositions().begin(),
                                     d.family.compositions().end());
    std::set<move_composition> expected{move_composition::identity()};
    for (int m = 1; m <= 4; ++m) expected.insert(move_composition({{1, m}}));
    EXPECT(comps == expected);
  }
  EXPECT(family_found);
  report(1, "deform-all on the 3t+5 example yields the five reference targets", ok);
}

// ---- criterion 2: enumeration counts ----
void criterion2() {
  bool ok = true;
  EXPECT(enumerate_ideals(3, parse_polynomial("6t-5")).size() == 11);
  EXPECT(enumerate_ideals(3, parse_polynomial("8")).size() == 12);
  EXPECT(enumerate_ideals(4, parse_polynomial("4t+1")).size() == 12);
  report(2, "enumeration counts 11 / 12 / 12", ok);
}

// ---- criterion 3: Gotzmann numbers ----
void criterion3() {
  bool ok = true;
  EXPECT(gotzmann_number(parse_polynomial("3t+5")) == 8);
  EXPECT(gotzmann_number(parse_polynomial("3t+2")) == 5);
  EXPECT(gotzmann_number(parse_polynomial("t+7")) == 7);
  EXPECT(gotzmann_number(parse_polynomial("6t-5")) == 10);
  EXPECT(gotzmann_number(parse_polynomial("4t+1")) == 7);
  for (int d = 1; d <= 10; ++d) EXPECT(gotzmann_number(hilbert_polynomial::constant(d)) == d);
  report(3, "Gotzmann numbers 8, 5, 7, 10, 7 and d for constants", ok);
}

// ---- criterion 4: the two reference graphs on Hilb^3_{6t-5} ----
void criterion4() {
  bool ok = true;
  auto pub = test_support::hilb3_6tm5();

  deform_graph w = deformation_graph(3, parse_polynomial("6t-5"),
                                     term_order::weight_order({1, 2, 5, 25}));
  graph_report wrep = analyze(w);
  EXPECT(w.vertices.size() == 11);
  EXPECT(w.edges.size() == 10);
  EXPECT(wrep.is_tree);
  EXPECT(wrep.components == 1);
  EXPECT(wrep.root.has_value());
  if (wrep.root)
    EXPECT(w.vertices[static_cast<std::size_t>(*wrep.root)].stratum == stratum(pub[4]));

  deform_graph rl = deformation_graph(3, parse_polynomial("6t-5"), term_order::degrevlex());
  graph_report rrep = analyze(rl);
  EXPECT(rrep.components == 2);
  std::set<std::string> endpoint_keys;
  for (int e : rrep.endpoints)
    endpoint_keys.insert(rl.vertices[static_cast<std::size_t>(e)].stratum.key());
  EXPECT(endpoint_keys ==
         (std::set<std::string>{stratum(pub[9]).key(), stratum(pub[10]).key()}));

  // soft check, reported only: edge lists against the reference drawings
  auto edge_list = [&](const deform_graph& g) {
    auto labels = label_map(g, pub);
    std::set<std::pair<int, int>> out;
    for (const auto& e : g.edges) out.emplace(labels.at(e.source), labels.at(e.target));
    return out;
  };
  std::set<std::pair<int, int>> fig_a{{7, 5}, {1, 3}, {10, 7}, {11, 8}, {4, 5},
                                      {3, 5}, {6, 5}, {9, 6},  {2, 3},  {8, 6}};
  std::set<std::pair<int, int>> fig_b{{7, 10}, {2, 4}, {4, 5}, {3, 5}, {6, 9},
                                      {9, 10}, {1, 3}, {8, 9}, {5, 7}};
  std::cout << "       note: weight-order edge list matches the reference drawing: "
            << (edge_list(w) == fig_a ? "yes" : "no") << "\n";
  std::cout << "       note: degrevlex edge list matches the reference drawing: "
            << (edge_list(rl) == fig_b ? "yes" : "no") << "\n";

  report(4, "graph shapes on 6t-5: rooted tree with the reference root; two degrevlex components",
         ok);
}

// ---- criterion 5: tree heights ----
void criterion5() {
  bool ok = true;
  // s is fixed by sum_{i<s} C(n-1+i, n-1) < d <= sum_{i<=s} C(n-1+i, n-1)
  const int n = 3, d = 8;
  int s = 0;
  mpz_class partial = 0;
  while (partial + binomial(n - 1 + s, static_cast<unsigned>(n - 1)) < d) {
    partial += binomial(n - 1 + s, static_cast<unsigned>(n - 1));
    ++s;
  }
  EXPECT(s == 2);
  graph_report deglex = analyze(deformation_graph(3, parse_polynomial("8"), term_order::deglex()));
  EXPECT(deglex.is_tree);
  EXPECT(deglex.height.has_value() && *deglex.height == d - s - 1);
  EXPECT(deglex.height.has_value() && *deglex.height == 5);

  deform_graph w = deformation_graph(3, parse_polynomial("8"),
                                     term_order::weight_order({1, 2, 4, 5}));
  graph_report wrep = analyze(w);
  EXPECT(wrep.is_tree);
  EXPECT(wrep.height.has_value() && *wrep.height == 3);
  EXPECT(wrep.root.has_value());
  if (wrep.root)
    EXPECT(w.vertices[static_cast<std::size_t>(*wrep.root)].stratum ==
           stratum(test_support::hilb3_8()[6]));
  report(5, "deglex height 5 on eight points; weight-order height 3 with the reference root", ok);
}

// ---- criterion 6: segment certificates ----
void criterion6() {
  bool ok = true;
  borel_set i5 = stratum(test_support::hilb3_6tm5()[4]);
  borel_set j7 = stratum(test_support::hilb3_8()[6]);
  EXPECT(verify_certificate(i5, segment_certificate{{1, 2, 5, 25}, false}));
  EXPECT(verify_certificate(j7, segment_certificate{{1, 2, 4, 5}, false}));
  auto c5 = find_segment_order(i5);
  EXPECT(c5.has_value() && c5->verified);
  auto c7 = find_segment_order(j7);
  EXPECT(c7.has_value() && c7->verified);

  std::vector<monomial> all = poset(3, 10);
  term_order rl = term_order::degrevlex();
  std::sort(all.begin(), all.end(),
            [&](const monomial& a, const monomial& b) { return rl.greater(a, b); });
  borel_set top(3, 10, std::vector<monomial>(all.begin(), all.begin() + 231));
  EXPECT(hilbert_polynomial_of(top) == hilbert_polynomial::constant(55));
  report(6, "reference certificates verify; search certifies both; degrevlex top-231 has "
            "constant polynomial 55",
         ok);
}

// ---- criterion 7: flatness oracle on every deformation edge ----
void criterion7() {
  bool ok = true;
  struct scheme {
    int n;
    const char* hp;
  };
  for (scheme s : {scheme{3, "6t-5"}, scheme{3, "8"}, scheme{4, "4t+1"}}) {
    for (const borel_set& b : enumerate_ideals(s.n, parse_polynomial(s.hp)))
      for (const deformation& d : all_deformations(b)) EXPECT(verify_flat(d));
  }
  borel_set four_points = stratum("x2^2, x2*x1, x1^3 @ 4");
  auto defs = all_deformations(four_points);
  EXPECT(defs.size() == 1);
  for (const deformation& d : defs) {
    EXPECT(d.beta == mono("x2*x0^3", 3));
    EXPECT(d.alpha == mono("x1^3*x0", 3));
    EXPECT(verify_flat(d));
  }
  report(7, "every deformation across the three schemes and the four-point pencil is flat", ok);
}

// ---- criterion 8: step counts toward the lexsegment ----
void criterion8() {
  bool ok = true;
  term_order deglex = term_order::deglex();
  borel_set cur = stratum("x2^2, x2*x1^2, x1^3 @ 5");
  int steps = 0;
  while (auto d = to_deformation(cur, deglex)) {
    cur = d->target;
    ++steps;
  }
  EXPECT(steps == 2);
  EXPECT(cur == stratum("x2, x1^5 @ 5"));

  deform_graph g = deformation_graph(3, parse_polynomial("8"), deglex);
  std::map<int, int> next;
  for (const auto& e : g.edges) next[e.source] = e.target;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    int v = static_cast<int>(i), dist = 0;
    while (next.count(v)) {
      v = next[v];
      ++dist;
    }
    EXPECT(dist == 8 - g.vertices[i].regularity);
  }
  report(8, "deglex reaches the lexsegment in d - reg(sat I) steps", ok);
}

// ---- criterion 9: compatible pair and incidence-graph memberships ----
void criterion9() {
  bool ok = true;
  borel_set src = stratum(test_support::example_3t5_source());
  auto defs = all_deformations(src);
  const deformation *phi1 = nullptr, *phi2 = nullptr;
  for (const deformation& d : defs) {
    if (d.alpha == mono("x3^2*x0^6", 4)) phi1 = &d;
    if (d.stratum == 1) phi2 = &d;
  }
  EXPECT(phi1 != nullptr && phi2 != nullptr);
  if (phi1 && phi2) {
    EXPECT(compatible({*phi1, *phi2}));
    EXPECT(compose({*phi1, *phi2}, {true, true}) ==
           stratum(test_support::example_3t5_pair_target()));
  }

  deform_graph g = incidence_graph(4, parse_polynomial("4t+1"));
  auto labels = label_map(g, test_support::hilb4_4tp1());
  std::set<std::pair<int, int>> simple, composed;
  for (const auto& e : g.edges) {
    int a = labels.at(e.source), b = labels.at(e.target);
    auto key = std::make_pair(std::min(a, b), std::max(a, b));
    (e.kind == deform_graph::edge_kind::simple ? simple : composed).insert(key);
  }
  for (auto e : {std::pair{7, 8}, std::pair{7, 10}, std::pair{8, 11}, std::pair{10, 11}})
    EXPECT(simple.count(e) == 1);
  EXPECT(composed.count({8, 10}) == 1);
  EXPECT(composed.count({7, 11}) == 1);
  report(9, "compatible pair composes to the reference ideal; incidence memberships hold", ok);
}

// ---- criterion 10: oracle equivalences and structural properties ----
void criterion10() {
  bool ok = true;
  // Borel order vs brute-force move closure
  struct window {
    int n, r;
  };
  for (window wdw : {window{2, 3}, window{2, 4}, window{3, 4}}) {
    auto reach = test_support::down_closure_oracle(wdw.n, wdw.r);
    auto ps = poset(wdw.n, wdw.r);
    for (const monomial& a : ps)
      for (const monomial& b : ps)
        if (borel_leq(a, b) != (reach.at(b).count(a) > 0)) {
          EXPECT(false);
          break;
        }
  }
  // enumeration vs brute-force downset filter
  auto brute_match = [&](int n, const hilbert_polynomial& p) {
    int r = gotzmann_number(p);
    std::size_t size = p(r).get_ui();
    std::set<std::string> keys;
    for (const auto& nset : test_support::all_downsets_oracle(n, r, size)) {
      if (nset.size() != size) continue;
      bool fits = true;
      for (int j = 0; j < n && fits; ++j) {
        std::size_t count = 0;
        for (const monomial& m : nset)
          if (m.min_index() >= j) ++count;
        fits = count == p.delta(static_cast<unsigned>(j))(r).get_ui();
      }
      if (!fits) continue;
      std::vector<monomial> members;
      for (const monomial& m : poset(n, r))
        if (!nset.count(m)) members.push_back(m);
      keys.insert(borel_set(n, r, std::move(members)).key());
    }
    std::set<std::string> got;
    for (const borel_set& b : enumerate_ideals(n, p)) got.insert(b.key());
    return got == keys;
  };
  for (const char* hp : {"1", "2", "3", "4", "5", "t+1", "t+3", "t+5", "2t+1", "2t+4", "3t+2"}) {
    hilbert_polynomial p = parse_polynomial(hp);
    if (gotzmann_number(p) <= 5) EXPECT(brute_match(2, p));
  }
  for (int d = 1; d <= 6; ++d) EXPECT(brute_match(3, hilbert_polynomial::constant(d)));

  // every deformation preserves stratum cardinalities and the polynomial;
  // symmetry on the criterion-4 graphs
  for (const term_order& o :
       {term_order::weight_order({1, 2, 5, 25}), term_order::degrevlex()}) {
    deform_graph g = deformation_graph(3, parse_polynomial("6t-5"), o);
    for (const auto& e : g.edges) {
      const deformation& d = e.witnesses.front();
      auto ss = strata(d.source), ts = strata(d.target);
      for (std::size_t j = 0; j < ss.size(); ++j)
        EXPECT(ss[j].in_set.size() == ts[j].in_set.size());
      EXPECT(hilbert_polynomial_of(d.source) == hilbert_polynomial_of(d.target));
      bool reverse_found = false;
      for (const deformation& r : all_deformations(d.target))
        if (r.target == d.source && r.family == d.family) reverse_found = true;
      EXPECT(reverse_found);
    }
  }
  report(10, "oracle equivalences (Borel order, enumeration) and edge invariants", ok);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  if (g_failures == 0)
    std::cout << "acceptance: all criteria passed\n";
  else
    std::cout << "acceptance: " << g_failures << " criteria FAILED\n";
  return g_failures;
}
