#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ntf/decomposition.hpp"
#include "ntf/hypergraph.hpp"
#include "ntf/properties.hpp"

namespace ntf {

// Graph-only helpers over 2-uniform Hypergraphs. Vertices are 1..n.

namespace detail {

inline void require_graph(const Hypergraph& g) {
  if (!g.is_graph()) throw input_error("expected a graph (every edge of size two)");
}

inline std::vector<std::vector<std::size_t>> adjacency(const Hypergraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.num_vertices() + 1);
  for (const auto& e : g.edges()) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

// Vertices reachable from `from` without entering vertices marked in `blocked`.
inline std::vector<char> reachable(const std::vector<std::vector<std::size_t>>& adj, std::size_t from,
                                   const std::vector<char>& blocked) {
  std::vector<char> seen(adj.size(), 0);
  if (blocked[from]) return seen;
  std::deque<std::size_t> queue{from};
  seen[from] = 1;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : adj[v]) {
      if (!seen[w] && !blocked[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

// Two-colouring of the subgraph induced on `vertices`, if one exists.
inline bool induced_is_bipartite(const std::vector<std::vector<std::size_t>>& adj, const VertexSet& vertices) {
  std::vector<int> colour(adj.size(), -1);
  std::vector<char> inside(adj.size(), 0);
  for (std::size_t v : vertices) inside[v] = 1;
  for (std::size_t s : vertices) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w : adj[v]) {
        if (!inside[w]) continue;
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace detail

inline bool is_connected(const Hypergraph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return true;
  std::vector<std::vector<std::size_t>> adj(n + 1);
  for (const auto& e : g.edges()) {
    for (std::size_t a : e) {
      for (std::size_t b : e) {
        if (a != b) adj[a].push_back(b);
      }
    }
  }
  const auto seen = detail::reachable(adj, 1, std::vector<char>(n + 1, 0));
  return std::all_of(seen.begin() + 1, seen.end(), [](char c) { return c != 0; });
}

inline bool is_bipartite(const Hypergraph& g) {
  detail::require_graph(g);
  VertexSet all(g.num_vertices());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i + 1;
  return detail::induced_is_bipartite(detail::adjacency(g), all);
}

// The subgraph on `vertices`, keeping the ambient labelling 1..n.
inline Hypergraph induced_subgraph(const Hypergraph& g, const VertexSet& vertices) {
  std::vector<VertexSet> edges;
  for (const auto& e : g.edges()) {
    if (std::all_of(e.begin(), e.end(),
                    [&](std::size_t v) { return std::find(vertices.begin(), vertices.end(), v) != vertices.end(); })) {
      edges.push_back(e);
    }
  }
  return Hypergraph(g.num_vertices(), std::move(edges));
}

// Every chordless cycle of odd length, each listed from its smallest vertex
// in the direction with the smaller second vertex.
inline std::vector<std::vector<std::size_t>> induced_odd_cycles(const Hypergraph& g) {
  detail::require_graph(g);
  const auto adj = detail::adjacency(g);
  const std::size_t n = g.num_vertices();
  auto adjacent = [&](std::size_t a, std::size_t b) { return std::binary_search(adj[a].begin(), adj[a].end(), b); };

  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> path;
  std::vector<char> on_path(n + 1, 0);

  // `path` is always an induced path whose vertices are all > path[0].
  std::function<void()> extend = [&]() {
    const std::size_t start = path.front();
    const std::size_t last = path.back();
    for (std::size_t w : adj[last]) {
      if (w <= start || on_path[w]) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        if (adjacent(w, path[i])) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (path.size() >= 2 && adjacent(w, start)) {
        // closes a chordless cycle; w cannot be extended past it
        if ((path.size() + 1) % 2 == 1 && path[1] < w) {
          auto cycle = path;
          cycle.push_back(w);
          out.push_back(std::move(cycle));
        }
        continue;
      }
      on_path[w] = 1;
      path.push_back(w);
      extend();
      path.pop_back();
      on_path[w] = 0;
    }
  };

  for (std::size_t s = 1; s <= n; ++s) {
    path = {s};
    on_path[s] = 1;
    extend();
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

enum class GraphKind { bipartite, almost_bipartite, other };

inline const char* to_string(GraphKind k) {
  switch (k) {
    case GraphKind::bipartite: return "bipartite";
    case GraphKind::almost_bipartite: return "almost_bipartite";
    case GraphKind::other: return "other";
  }
  return "?";
}

struct GraphClass {
  GraphKind kind = GraphKind::bipartite;
  std::vector<std::size_t> cycle;  // the unique induced odd cycle when almost bipartite
  std::size_t induced_odd_cycle_count = 0;
};

// Connected graphs only: bipartite, exactly one chordless odd cycle, or other.
inline GraphClass classify_graph(const Hypergraph& g) {
  detail::require_graph(g);
  if (!is_connected(g)) throw input_error("classify_graph: the graph is not connected");
  GraphClass c;
  if (is_bipartite(g)) return c;
  const auto cycles = induced_odd_cycles(g);
  c.induced_odd_cycle_count = cycles.size();
  if (cycles.size() == 1) {
    c.kind = GraphKind::almost_bipartite;
    c.cycle = cycles.front();
  } else {
    c.kind = GraphKind::other;
  }
  return c;
}

// The partition of an almost bipartite graph around its odd cycle C:
//   A_i = { x != i : i lies on every (x, j)-path, for all j in C }
//   B_e = { x not in C : for every m in C \ e there is an (x, m)-path through
//           i avoiding j, and one through j avoiding i }, e = {i, j} in E(C).
struct AlmostBipartiteDecomposition {
  std::vector<std::size_t> cycle;
  std::map<std::size_t, VertexSet> a_sets;                              // keyed by cycle vertex
  std::map<std::pair<std::size_t, std::size_t>, VertexSet> b_sets;      // keyed by cycle edge (i < j)
  bool partition_holds = false;   // V(C), A_i, B_e partition V(G)
  bool parts_bipartite = false;   // every non-empty <A_i>, <B_e> is bipartite
};

namespace detail {

// Is there a simple (from, to)-path avoiding `avoid` that visits `through`?
inline bool path_through_exists(const std::vector<std::vector<std::size_t>>& adj, std::size_t from, std::size_t to,
                                std::size_t through, std::size_t avoid) {
  std::vector<char> on_path(adj.size(), 0);
  on_path[avoid] = 1;
  std::function<bool(std::size_t, bool)> walk = [&](std::size_t v, bool visited) {
    if (v == to) return visited;
    for (std::size_t w : adj[v]) {
      if (on_path[w]) continue;
      on_path[w] = 1;
      const bool ok = walk(w, visited || w == through);
      on_path[w] = 0;
      if (ok) return true;
    }
    return false;
  };
  if (from == avoid) return false;
  on_path[from] = 1;
  return walk(from, from == through);
}

}  // namespace detail

inline AlmostBipartiteDecomposition almost_bipartite_decomposition(const Hypergraph& g) {
  const GraphClass cls = classify_graph(g);
  if (cls.kind != GraphKind::almost_bipartite) {
    throw input_error("almost_bipartite_decomposition: the graph is not almost bipartite");
  }
  const auto adj = detail::adjacency(g);
  const std::size_t n = g.num_vertices();
  AlmostBipartiteDecomposition out;
  out.cycle = cls.cycle;
  const auto& c = out.cycle;
  std::vector<char> in_cycle(n + 1, 0);
  for (std::size_t v : c) in_cycle[v] = 1;

  // i lies on every (x, j)-path iff x and j are disconnected in G - i.
  for (std::size_t i : c) {
    std::vector<char> blocked(n + 1, 0);
    blocked[i] = 1;
    VertexSet a;
    for (std::size_t x = 1; x <= n; ++x) {
      if (x == i) continue;
      const auto seen = detail::reachable(adj, x, blocked);
      const bool all_cut = std::all_of(c.begin(), c.end(), [&](std::size_t j) { return j == i || !seen[j]; });
      if (all_cut) a.push_back(x);
    }
    out.a_sets[i] = std::move(a);
  }

  for (std::size_t k = 0; k < c.size(); ++k) {
    std::size_t i = c[k], j = c[(k + 1) % c.size()];
    if (i > j) std::swap(i, j);
    VertexSet b;
    for (std::size_t x = 1; x <= n; ++x) {
      if (in_cycle[x]) continue;
      bool member = true;
      for (std::size_t m : c) {
        if (m == i || m == j) continue;
        if (!detail::path_through_exists(adj, x, m, i, j) || !detail::path_through_exists(adj, x, m, j, i)) {
          member = false;
          break;
        }
      }
      if (member) b.push_back(x);
    }
    out.b_sets[{i, j}] = std::move(b);
  }

  std::vector<int> hits(n + 1, 0);
  for (std::size_t v : c) ++hits[v];
  for (const auto& [_, s] : out.a_sets) {
    for (std::size_t v : s) ++hits[v];
  }
  for (const auto& [_, s] : out.b_sets) {
    for (std::size_t v : s) ++hits[v];
  }
  out.partition_holds = std::all_of(hits.begin() + 1, hits.end(), [](int h) { return h == 1; });
  out.parts_bipartite = true;
  for (const auto& [_, s] : out.a_sets) out.parts_bipartite = out.parts_bipartite && detail::induced_is_bipartite(adj, s);
  for (const auto& [_, s] : out.b_sets) out.parts_bipartite = out.parts_bipartite && detail::induced_is_bipartite(adj, s);
  return out;
}

// ---------------------------------------------------------------------------
// Gluing two connected graphs

enum class GluingKind { shared_vertex, shared_edge };

struct GluingReport {
  GluingKind kind = GluingKind::shared_vertex;
  unsigned bound = 0;
  Hypergraph glued;
  std::map<unsigned, bool> equal_by_power;
  std::map<unsigned, PrimeSet> ass_glued;
  std::map<unsigned, PrimeSet> ass_union;
  bool holds = true;
};

// Both graphs use one common labelling 1..n. Checks
//   Ass(J(L)^s) = Ass(J(G1)^s) ∪ Ass(J(G2)^s),  s = 1..K,
// where L is the union, for graphs sharing exactly one vertex (and no edge) or
// exactly two vertices and the edge between them.
inline GluingReport verify_gluing(const Hypergraph& g1, const Hypergraph& g2, unsigned max_power) {
  detail::require_graph(g1);
  detail::require_graph(g2);
  if (g1.num_vertices() != g2.num_vertices()) throw input_error("glued graphs must share one vertex labelling");
  if (max_power == 0) throw input_error("max power must be positive");
  const std::size_t n = g1.num_vertices();

  auto connected_on_own_vertices = [](const Hypergraph& g) {
    const VertexSet vs = g.covered_vertices();
    if (vs.empty()) return false;
    std::vector<std::vector<std::size_t>> adj = detail::adjacency(g);
    const auto seen = detail::reachable(adj, vs.front(), std::vector<char>(adj.size(), 0));
    return std::all_of(vs.begin(), vs.end(), [&](std::size_t v) { return seen[v] != 0; });
  };
  if (!connected_on_own_vertices(g1) || !connected_on_own_vertices(g2)) {
    throw input_error("verify_gluing: both graphs must be connected");
  }

  const VertexSet v1 = g1.covered_vertices(), v2 = g2.covered_vertices();
  VertexSet shared;
  std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(), std::back_inserter(shared));
  std::vector<VertexSet> shared_edges;
  std::set_intersection(g1.edges().begin(), g1.edges().end(), g2.edges().begin(), g2.edges().end(),
                        std::back_inserter(shared_edges));

  GluingReport report;
  report.bound = max_power;
  if (shared.size() == 1 && shared_edges.empty()) {
    report.kind = GluingKind::shared_vertex;
  } else if (shared.size() == 2 && shared_edges.size() == 1) {
    report.kind = GluingKind::shared_edge;
  } else {
    throw input_error("verify_gluing: graphs must share exactly one vertex, or exactly two vertices and one edge");
  }

  std::vector<VertexSet> edges = g1.edges();
  for (const auto& e : g2.edges()) {
    if (!g1.has_edge(e)) edges.push_back(e);
  }
  report.glued = Hypergraph(n, std::move(edges));

  const MonomialIdeal jl = cover_ideal(report.glued);
  const MonomialIdeal j1 = cover_ideal(g1);
  const MonomialIdeal j2 = cover_ideal(g2);
  const AssProfile pl = ass_of_powers(jl, max_power);
  const AssProfile p1 = ass_of_powers(j1, max_power);
  const AssProfile p2 = ass_of_powers(j2, max_power);
  for (unsigned s = 1; s <= max_power; ++s) {
    PrimeSet u = p1.at(s);
    u.insert(p2.at(s).begin(), p2.at(s).end());
    report.ass_glued[s] = pl.at(s);
    report.ass_union[s] = u;
    report.equal_by_power[s] = (pl.at(s) == u);
    report.holds = report.holds && report.equal_by_power[s];
  }
  return report;
}

}  // namespace ntf
