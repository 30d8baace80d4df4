#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ntf/decomposition.hpp"
#include "ntf/error.hpp"
#include "ntf/ideal.hpp"

namespace ntf {

// Sorted, duplicate-free list of 1-based vertex indices.
using VertexSet = std::vector<std::size_t>;

// A simple hypergraph on vertices 1..n: no edge contains another. Edges are
// stored sorted and in lexicographic order.
class Hypergraph {
 public:
  Hypergraph() = default;

  Hypergraph(std::size_t n, std::vector<VertexSet> edges) : n_(n), edges_(std::move(edges)) {
    for (auto& e : edges_) {
      std::sort(e.begin(), e.end());
      if (e.empty()) throw input_error("hypergraph edges must be non-empty");
      if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw input_error("edge repeats a vertex");
      for (std::size_t v : e) {
        if (v < 1 || v > n_) throw input_error("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
      }
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      for (std::size_t j = 0; j < edges_.size(); ++j) {
        if (i != j && std::includes(edges_[j].begin(), edges_[j].end(), edges_[i].begin(), edges_[i].end())) {
          throw input_error("hypergraph is not simple: an edge contains another");
        }
      }
    }
  }

  std::size_t num_vertices() const noexcept { return n_; }
  const std::vector<VertexSet>& edges() const noexcept { return edges_; }

  bool is_graph() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const VertexSet& e) { return e.size() == 2; });
  }

  bool has_edge(const VertexSet& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

  // Vertices lying on at least one edge.
  VertexSet covered_vertices() const {
    std::set<std::size_t> s;
    for (const auto& e : edges_) s.insert(e.begin(), e.end());
    return VertexSet(s.begin(), s.end());
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<VertexSet> edges_;
};

// The hypergraph whose edges are the supports of a square-free ideal's
// generators.
inline Hypergraph hypergraph_of(const MonomialIdeal& ideal) {
  if (!ideal.is_square_free()) throw input_error("only square-free ideals define a hypergraph");
  std::vector<VertexSet> edges;
  for (const auto& g : ideal.generators()) edges.push_back(g.support());
  return Hypergraph(ideal.num_vars(), std::move(edges));
}

inline MonomialIdeal edge_ideal(const Hypergraph& h) {
  std::vector<Monomial> g;
  for (const auto& e : h.edges()) g.push_back(Monomial::from_support(h.num_vertices(), e));
  return MonomialIdeal(h.num_vertices(), std::move(g));
}

// All inclusion-minimal vertex covers, in lexicographic order.
//
// Branch on the first uncovered edge; branch j takes its j-th vertex and
// forbids the earlier ones, so each cover is produced at most once. A cover
// is kept only if each of its vertices has a private edge.
inline std::vector<VertexSet> minimal_vertex_covers(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  const auto& edges = h.edges();
  std::vector<char> chosen(n + 1, 0), forbidden(n + 1, 0);
  std::vector<VertexSet> out;

  auto is_minimal = [&]() {
    for (std::size_t v = 1; v <= n; ++v) {
      if (!chosen[v]) continue;
      bool has_private = false;
      for (const auto& e : edges) {
        std::size_t hits = 0;
        bool contains_v = false;
        for (std::size_t w : e) {
          if (chosen[w]) {
            ++hits;
            contains_v = contains_v || w == v;
          }
        }
        if (contains_v && hits == 1) {
          has_private = true;
          break;
        }
      }
      if (!has_private) return false;
    }
    return true;
  };

  std::function<void()> branch = [&]() {
    const VertexSet* open = nullptr;
    for (const auto& e : edges) {
      if (std::none_of(e.begin(), e.end(), [&](std::size_t v) { return chosen[v] != 0; })) {
        open = &e;
        break;
      }
    }
    if (open == nullptr) {
      if (is_minimal()) {
        VertexSet cover;
        for (std::size_t v = 1; v <= n; ++v) {
          if (chosen[v]) cover.push_back(v);
        }
        out.push_back(std::move(cover));
      }
      return;
    }
    std::vector<std::size_t> newly_forbidden;
    for (std::size_t v : *open) {
      if (forbidden[v]) continue;
      chosen[v] = 1;
      branch();
      chosen[v] = 0;
      forbidden[v] = 1;
      newly_forbidden.push_back(v);
    }
    for (std::size_t v : newly_forbidden) forbidden[v] = 0;
  };
  branch();
  std::sort(out.begin(), out.end());
  return out;
}

// J(H), generated by the minimal vertex covers. Cross-checked against the
// Alexander dual of the edge ideal; a mismatch is a library bug.
inline MonomialIdeal cover_ideal(const Hypergraph& h) {
  std::vector<Monomial> g;
  for (const auto& c : minimal_vertex_covers(h)) g.push_back(Monomial::from_support(h.num_vertices(), c));
  MonomialIdeal j(h.num_vertices(), std::move(g));
  if (j != alexander_dual(edge_ideal(h))) {
    throw std::logic_error("cover ideal disagrees with the Alexander dual of the edge ideal");
  }
  return j;
}

// Adds the vertex n+1 and the edge {v, n+1}.
inline Hypergraph whisker(const Hypergraph& h, std::size_t v) {
  if (v < 1 || v > h.num_vertices()) throw input_error("whisker vertex outside the vertex set");
  std::vector<VertexSet> edges = h.edges();
  edges.push_back({v, h.num_vertices() + 1});
  return Hypergraph(h.num_vertices() + 1, std::move(edges));
}

// ---------------------------------------------------------------------------
// Special odd cycles

// v_1, E_1, v_2, E_2, ..., v_s, E_s with v_i, v_{i+1} in E_i (indices mod s).
struct HyperCycle {
  std::vector<std::size_t> vertices;
  std::vector<VertexSet> edges;

  friend bool operator==(const HyperCycle&, const HyperCycle&) = default;
  friend auto operator<=>(const HyperCycle&, const HyperCycle&) = default;
};

enum class SpecialCondition {
  // each edge of the cycle contains exactly two of the cycle's vertices
  cycle_edges,
  // every edge of the hypergraph contains at most two of the cycle's vertices
  all_edges,
};

// Rotate so the smallest vertex comes first, then pick the direction whose
// second vertex is smaller.
inline HyperCycle canonical_cycle(HyperCycle c) {
  const std::size_t s = c.vertices.size();
  if (s == 0) return c;
  const auto first = static_cast<std::size_t>(
      std::min_element(c.vertices.begin(), c.vertices.end()) - c.vertices.begin());
  HyperCycle fwd, bwd;
  for (std::size_t k = 0; k < s; ++k) {
    fwd.vertices.push_back(c.vertices[(first + k) % s]);
    fwd.edges.push_back(c.edges[(first + k) % s]);
    bwd.vertices.push_back(c.vertices[(first + s - k) % s]);
    bwd.edges.push_back(c.edges[(first + 2 * s - k - 1) % s]);
  }
  if (s > 1 && bwd.vertices[1] < fwd.vertices[1]) return bwd;
  return fwd;
}

// Every special cycle of odd length 3 <= s <= max_length, canonicalized and
// sorted.
inline std::vector<HyperCycle> special_odd_cycles(const Hypergraph& h, std::size_t max_length,
                                                  SpecialCondition condition = SpecialCondition::cycle_edges) {
  const auto& edges = h.edges();
  const std::size_t n = h.num_vertices();
  std::vector<char> on_cycle(n + 1, 0), edge_used(edges.size(), 0);
  std::vector<std::size_t> path;
  std::vector<std::size_t> path_edges;
  std::vector<HyperCycle> out;

  auto hits = [&](const VertexSet& e) {
    std::size_t c = 0;
    for (std::size_t v : e) c += on_cycle[v] ? 1 : 0;
    return c;
  };
  auto special_so_far = [&]() {
    if (condition == SpecialCondition::all_edges) {
      return std::all_of(edges.begin(), edges.end(), [&](const VertexSet& e) { return hits(e) <= 2; });
    }
    return std::all_of(path_edges.begin(), path_edges.end(), [&](std::size_t i) { return hits(edges[i]) <= 2; });
  };

  std::function<void()> extend = [&]() {
    const std::size_t start = path.front();
    const std::size_t current = path.back();
    for (std::size_t ei = 0; ei < edges.size(); ++ei) {
      const VertexSet& e = edges[ei];
      if (edge_used[ei] || !std::binary_search(e.begin(), e.end(), current)) continue;
      // close the cycle
      if (path.size() >= 3 && path.size() % 2 == 1 && std::binary_search(e.begin(), e.end(), start) &&
          hits(e) <= 2 && path[1] < path.back()) {
        path_edges.push_back(ei);
        if (special_so_far()) {
          HyperCycle c;
          c.vertices = path;
          for (std::size_t i : path_edges) c.edges.push_back(edges[i]);
          out.push_back(canonical_cycle(std::move(c)));
        }
        path_edges.pop_back();
      }
      if (path.size() >= max_length) continue;
      for (std::size_t w : e) {
        if (w <= start || on_cycle[w]) continue;
        on_cycle[w] = 1;
        path.push_back(w);
        path_edges.push_back(ei);
        edge_used[ei] = 1;
        if (special_so_far()) extend();
        edge_used[ei] = 0;
        path_edges.pop_back();
        path.pop_back();
        on_cycle[w] = 0;
      }
    }
  };

  for (std::size_t v = 1; v <= n; ++v) {
    on_cycle[v] = 1;
    path = {v};
    extend();
    on_cycle[v] = 0;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// A partition V_1..V_d of the vertices such that every edge meets each part
// exactly once, for d-uniform H; parts sorted by smallest element. Vertices
// on no edge go to the first part.
inline std::optional<std::vector<VertexSet>> is_d_uniform_d_partite(const Hypergraph& h) {
  const auto& edges = h.edges();
  if (edges.empty()) return std::nullopt;
  const std::size_t d = edges.front().size();
  if (!std::all_of(edges.begin(), edges.end(), [&](const VertexSet& e) { return e.size() == d; })) {
    return std::nullopt;
  }
  const std::size_t n = h.num_vertices();
  // Rainbow edges with d colours = proper colouring of the 2-section.
  std::vector<std::vector<std::size_t>> adj(n + 1);
  for (const auto& e : edges) {
    for (std::size_t a : e) {
      for (std::size_t b : e) {
        if (a != b) adj[a].push_back(b);
      }
    }
  }
  const VertexSet used = h.covered_vertices();
  std::vector<int> colour(n + 1, -1);
  for (std::size_t k = 0; k < d; ++k) colour[edges.front()[k]] = static_cast<int>(k);

  std::vector<std::size_t> order;
  for (std::size_t v : used) {
    if (colour[v] < 0) order.push_back(v);
  }
  std::function<bool(std::size_t)> assign = [&](std::size_t idx) {
    if (idx == order.size()) return true;
    const std::size_t v = order[idx];
    for (int c = 0; c < static_cast<int>(d); ++c) {
      if (std::any_of(adj[v].begin(), adj[v].end(), [&](std::size_t w) { return colour[w] == c; })) continue;
      colour[v] = c;
      if (assign(idx + 1)) return true;
    }
    colour[v] = -1;
    return false;
  };
  if (!assign(0)) return std::nullopt;

  std::vector<VertexSet> parts(d);
  for (std::size_t v : used) parts[static_cast<std::size_t>(colour[v])].push_back(v);
  std::sort(parts.begin(), parts.end());
  for (std::size_t v = 1; v <= n; ++v) {
    if (!std::binary_search(used.begin(), used.end(), v)) parts.front().push_back(v);
  }
  for (auto& p : parts) std::sort(p.begin(), p.end());
  std::sort(parts.begin(), parts.end());
  return parts;
}

}  // namespace ntf
