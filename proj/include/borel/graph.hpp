#ifndef BOREL_GRAPH_HPP
#define BOREL_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "borel/borel_set.hpp"
#include "borel/deform.hpp"
#include "borel/enumerate.hpp"
#include "borel/errors.hpp"
#include "borel/hilbert.hpp"
#include "borel/io.hpp"
#include "borel/parallel.hpp"
#include "borel/term_order.hpp"

namespace borel {

/// A graph over the Borel-fixed ideals of one Hilbert scheme. Directed
/// graphs come from an order-driven deformation scan (every non-endpoint
/// vertex has exactly one out-edge); the undirected incidence graph collects
/// simple deformations and composed edges from compatible families.
struct deform_graph {
  enum class edge_kind { simple, composed };
  struct edge {
    int source;
    int target;
    edge_kind kind;
    std::vector<deformation> witnesses;  // one for simple, the compatible set for composed
  };
  std::vector<borel_ideal> vertices;
  std::vector<edge> edges;
  bool directed = false;
  std::vector<int> endpoints;  // directed graphs only
};

namespace detail {

inline std::vector<borel_ideal> graph_vertices(int n, const hilbert_polynomial& p) {
  std::vector<borel_set> sets = enumerate_ideals(n, p);
  std::vector<borel_ideal> vs;
  vs.reserve(sets.size());
  for (const borel_set& b : sets) vs.push_back(saturate(b));
  return vs;
}

inline std::unordered_map<std::string, int> vertex_lookup(const std::vector<borel_ideal>& vs) {
  std::unordered_map<std::string, int> lookup;
  for (std::size_t i = 0; i < vs.size(); ++i)
    lookup.emplace(vs[i].stratum.key(), static_cast<int>(i));
  return lookup;
}

}  // namespace detail

/// The order-driven deformation graph: vertices are all Borel ideals with
/// Hilbert polynomial p, and each vertex points at its unique deformation
/// under the given term order, endpoints marked.
inline deform_graph deformation_graph(int n, const hilbert_polynomial& p, const term_order& ord) {
  deform_graph g;
  g.directed = true;
  g.vertices = detail::graph_vertices(n, p);
  auto lookup = detail::vertex_lookup(g.vertices);
  std::vector<std::optional<deformation>> step(g.vertices.size());
  parallel_for_index(g.vertices.size(),
                     [&](std::size_t i) { step[i] = to_deformation(g.vertices[i].stratum, ord); });
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    if (!step[i]) {
      g.endpoints.push_back(static_cast<int>(i));
      continue;
    }
    auto it = lookup.find(step[i]->target.key());
    if (it == lookup.end())
      throw invariant_violation("deformation_graph: target is not a vertex");
    g.edges.push_back({static_cast<int>(i), it->second, deform_graph::edge_kind::simple,
                       {std::move(*step[i])}});
  }
  return g;
}

/// The Borel incidence graph: one vertex per Borel ideal of the scheme,
/// simple edges wherever a rational deformation connects two of them, and
/// composed edges between members of a compatible family not already
/// adjacent. Compatible subsets are scanned up to max_compose deformations.
inline deform_graph incidence_graph(int n, const hilbert_polynomial& p, int max_compose = 3) {
  deform_graph g;
  g.directed = false;
  g.vertices = detail::graph_vertices(n, p);
  auto lookup = detail::vertex_lookup(g.vertices);
  std::vector<std::vector<deformation>> defs(g.vertices.size());
  parallel_for_index(g.vertices.size(),
                     [&](std::size_t i) { defs[i] = all_deformations(g.vertices[i].stratum); });

  std::set<std::pair<int, int>> simple;
  auto norm = [](int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (const deformation& d : defs[i]) {
      auto it = lookup.find(d.target.key());
      if (it == lookup.end()) throw invariant_violation("incidence_graph: unknown target");
      auto key = norm(static_cast<int>(i), it->second);
      if (key.first == key.second) throw invariant_violation("incidence_graph: self-loop");
      if (simple.insert(key).second)
        g.edges.push_back({key.first, key.second, deform_graph::edge_kind::simple, {d}});
    }
  }

  std::set<std::pair<int, int>> composed;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& ds = defs[i];
    const int count = static_cast<int>(ds.size());
    std::vector<int> pick;
    auto scan = [&](auto&& self, int from) -> void {
      if (static_cast<int>(pick.size()) >= 2) {
        std::vector<deformation> sel;
        for (int idx : pick) sel.push_back(ds[static_cast<std::size_t>(idx)]);
        std::vector<int> members;
        const std::size_t s = sel.size();
        for (std::size_t mask = 0; mask < (1u << s); ++mask) {
          std::vector<bool> take(s, false);
          for (std::size_t b = 0; b < s; ++b) take[b] = (mask >> b) & 1;
          borel_set fiber = compose(sel, take);
          auto it = lookup.find(fiber.key());
          if (it == lookup.end())
            throw invariant_violation("incidence_graph: family member is not a vertex");
          members.push_back(it->second);
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (std::size_t a = 0; a < members.size(); ++a)
          for (std::size_t b2 = a + 1; b2 < members.size(); ++b2) {
            auto key = norm(members[a], members[b2]);
            if (simple.count(key) || composed.count(key)) continue;
            composed.insert(key);
            g.edges.push_back({key.first, key.second, deform_graph::edge_kind::composed, sel});
          }
      }
      if (static_cast<int>(pick.size()) >= max_compose) return;
      for (int nxt = from; nxt < count; ++nxt) {
        pick.push_back(nxt);
        // conditions are pairwise, so supersets of an incompatible set stay out
        bool selection_ok = true;
        if (pick.size() >= 2) {
          std::vector<deformation> sel;
          for (int idx : pick) sel.push_back(ds[static_cast<std::size_t>(idx)]);
          selection_ok = compatible(sel);
        }
        if (selection_ok) self(self, nxt + 1);
        pick.pop_back();
      }
    };
    scan(scan, 0);
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const auto& a, const auto& b) {
    if (a.kind != b.kind) return a.kind == deform_graph::edge_kind::simple;
    return std::make_pair(a.source, a.target) < std::make_pair(b.source, b.target);
  });
  return g;
}

/// Structural summary: components, tree property, root and height (height
/// counts deformation steps to the root; neighbours of the root are at
/// distance 1).
struct graph_report {
  bool is_tree = false;
  std::optional<int> root;
  std::optional<int> height;
  int components = 0;
  std::vector<int> endpoints;
};

inline graph_report analyze(const deform_graph& g) {
  graph_report rep;
  rep.endpoints = g.endpoints;
  const int nv = static_cast<int>(g.vertices.size());
  std::vector<int> parent(static_cast<std::size_t>(nv));
  for (int i = 0; i < nv; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (const auto& e : g.edges) {
    int a = find(e.source), b = find(e.target);
    if (a != b) parent[static_cast<std::size_t>(a)] = b;
  }
  std::set<int> roots;
  for (int i = 0; i < nv; ++i) roots.insert(find(i));
  rep.components = static_cast<int>(roots.size());
  rep.is_tree = nv > 0 && rep.components == 1 &&
                static_cast<int>(g.edges.size()) == nv - 1;
  if (g.directed && rep.is_tree && g.endpoints.size() == 1) {
    rep.root = g.endpoints.front();
    // distances along reversed edges from the root
    std::vector<std::vector<int>> into(static_cast<std::size_t>(nv));
    for (const auto& e : g.edges) into[static_cast<std::size_t>(e.target)].push_back(e.source);
    std::vector<int> dist(static_cast<std::size_t>(nv), -1);
    std::queue<int> q;
    q.push(*rep.root);
    dist[static_cast<std::size_t>(*rep.root)] = 0;
    int h = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : into[static_cast<std::size_t>(v)])
        if (dist[static_cast<std::size_t>(u)] < 0) {
          dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
          h = std::max(h, dist[static_cast<std::size_t>(u)]);
          q.push(u);
        }
    }
    rep.height = h;
  } else if (nv == 1 && g.edges.empty()) {
    rep.is_tree = true;
    rep.root = 0;
    rep.height = 0;
  }
  return rep;
}

/// DOT export: digraph for directed graphs, graph otherwise; endpoints and
/// the root are boxes, composed edges dashed. Output is byte-stable.
inline std::string to_dot(const deform_graph& g) {
  std::string out = g.directed ? "digraph deformation_graph {\n" : "graph borel_incidence {\n";
  out += "  node [shape=ellipse];\n";
  std::set<int> boxed(g.endpoints.begin(), g.endpoints.end());
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    out += "  v" + std::to_string(i) + " [label=\"" + ideal_text(g.vertices[i]) + "\"";
    if (boxed.count(static_cast<int>(i))) out += ", shape=box";
    out += "];\n";
  }
  for (const auto& e : g.edges) {
    out += "  v" + std::to_string(e.source) + (g.directed ? " -> v" : " -- v") +
           std::to_string(e.target);
    if (e.kind == deform_graph::edge_kind::composed) out += " [style=dashed]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

inline json to_json(const deform_graph& g) {
  json j;
  j["directed"] = g.directed;
  json vs = json::array();
  for (const auto& v : g.vertices) vs.push_back(ideal_json(v));
  j["vertices"] = std::move(vs);
  json es = json::array();
  for (const auto& e : g.edges) {
    json je;
    je["source"] = e.source;
    je["target"] = e.target;
    je["kind"] = e.kind == deform_graph::edge_kind::simple ? "simple" : "composed";
    json ws = json::array();
    for (const deformation& d : e.witnesses) {
      json w;
      w["stratum"] = d.stratum;
      w["alpha"] = to_string(d.alpha);
      w["beta"] = to_string(d.beta);
      w["family"] = family_json(d.family);
      ws.push_back(std::move(w));
    }
    je["witnesses"] = std::move(ws);
    es.push_back(std::move(je));
  }
  j["edges"] = std::move(es);
  j["endpoints"] = g.endpoints;
  return j;
}

}  // namespace borel

#endif
