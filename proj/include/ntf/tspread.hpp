#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ntf/ideal.hpp"

namespace ntf {

// B_t(u) for a t-spread square-free u = x_{i_1} ... x_{i_d}; the ambient ring
// is K[x_1..x_{i_d}].
class BorelSpec {
 public:
  BorelSpec(unsigned t, std::vector<std::size_t> indices) : t_(t), indices_(std::move(indices)) {
    if (t_ == 0) throw input_error("t must be positive");
    if (indices_.empty()) throw input_error("u must have positive degree");
    if (indices_.front() < 1) throw input_error("variable indices start at 1");
    for (std::size_t k = 1; k < indices_.size(); ++k) {
      if (indices_[k] < indices_[k - 1] + t_) {
        throw input_error("u is not " + std::to_string(t_) + "-spread: x" + std::to_string(indices_[k - 1]) +
                          " and x" + std::to_string(indices_[k]) + " are too close");
      }
    }
  }

  // u given as a square-free monomial; trailing unused variables are dropped.
  static BorelSpec from_monomial(unsigned t, const Monomial& u) {
    if (!u.is_square_free()) throw input_error("u must be square-free");
    return BorelSpec(t, u.support());
  }

  unsigned t() const noexcept { return t_; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  std::size_t degree() const noexcept { return indices_.size(); }
  std::size_t num_vars() const noexcept { return indices_.back(); }
  Monomial u() const { return Monomial::from_support(num_vars(), indices_); }

  friend bool operator==(const BorelSpec&, const BorelSpec&) = default;

 private:
  unsigned t_ = 1;
  std::vector<std::size_t> indices_;
};

// Index tuples (j_1 < ... < j_d) of G(B_t(u)), lexicographically.
inline std::vector<std::vector<std::size_t>> borel_index_tuples(const BorelSpec& spec) {
  const auto& top = spec.indices();
  const std::size_t d = top.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> j(d);
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == d) {
      out.push_back(j);
      return;
    }
    const std::size_t lo = k == 0 ? 1 : j[k - 1] + spec.t();
    for (std::size_t v = lo; v <= top[k]; ++v) {
      j[k] = v;
      fill(k + 1);
    }
  };
  fill(0);
  return out;
}

inline MonomialIdeal borel_generators(const BorelSpec& spec) {
  std::vector<Monomial> gens;
  for (const auto& j : borel_index_tuples(spec)) gens.push_back(Monomial::from_support(spec.num_vars(), j));
  return MonomialIdeal(spec.num_vars(), std::move(gens));
}

// Generators laid out in rows: one row per (j_2, ..., j_d), ordered
// lexicographically, each row listing j_1 in increasing order.
inline std::vector<std::vector<Monomial>> borel_table(const BorelSpec& spec) {
  std::map<std::vector<std::size_t>, std::vector<Monomial>> rows;
  for (const auto& j : borel_index_tuples(spec)) {
    rows[std::vector<std::size_t>(j.begin() + 1, j.end())].push_back(Monomial::from_support(spec.num_vars(), j));
  }
  std::vector<std::vector<Monomial>> out;
  for (auto& [_, row] : rows) out.push_back(std::move(row));
  return out;
}

struct Interval {
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::size_t size() const noexcept { return hi >= lo ? hi - lo + 1 : 0; }
  bool contains(std::size_t v) const noexcept { return lo <= v && v <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct AIntervals {
  std::vector<Interval> intervals;   // A_k = [(k-1)t + 1, i_k]
  std::vector<std::size_t> unsupported;  // indices in 1..n lying in no A_k
};

inline AIntervals a_intervals(const BorelSpec& spec) {
  AIntervals out;
  for (std::size_t k = 0; k < spec.degree(); ++k) {
    out.intervals.push_back({k * spec.t() + 1, spec.indices()[k]});
  }
  for (std::size_t v = 1; v <= spec.num_vars(); ++v) {
    if (std::none_of(out.intervals.begin(), out.intervals.end(), [&](const Interval& a) { return a.contains(v); })) {
      out.unsupported.push_back(v);
    }
  }
  return out;
}

// Linear relation graph: {i, j} is an edge when x_i u_k = x_j u_l for some
// generators u_k, u_l.
struct LinearRelationGraph {
  struct Edge {
    std::size_t i = 0;
    std::size_t j = 0;  // i < j
    Monomial left;      // u_k with x_i u_k = x_j u_l
    Monomial right;     // u_l
  };
  std::vector<std::size_t> vertices;
  std::vector<Edge> edges;
  std::vector<std::vector<std::size_t>> components;
  bool equigenerated = true;

  std::size_t rank() const noexcept { return vertices.size(); }
  bool has_edge(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    return std::any_of(edges.begin(), edges.end(), [&](const Edge& e) { return e.i == a && e.j == b; });
  }
};

inline LinearRelationGraph linear_relation_graph(const MonomialIdeal& ideal) {
  LinearRelationGraph g;
  g.equigenerated = ideal.is_equigenerated();
  const auto& gens = ideal.generators();
  std::map<std::pair<std::size_t, std::size_t>, std::pair<Monomial, Monomial>> found;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if (gens[a].degree() != gens[b].degree()) continue;
      const Monomial l = colon(gens[b], gens[a]);  // x_i: what u_b has beyond u_a
      const Monomial r = colon(gens[a], gens[b]);  // x_j
      if (l.degree() != 1 || r.degree() != 1) continue;
      // x_i * u_a = x_j * u_b with x_i = l, x_j = r
      std::size_t i = l.support().front(), j = r.support().front();
      Monomial left = gens[a], right = gens[b];
      if (i > j) {
        std::swap(i, j);
        std::swap(left, right);
      }
      found.try_emplace({i, j}, left, right);
    }
  }
  std::vector<std::size_t> parent(ideal.num_vars() + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t v) {
    return parent[v] == v ? v : parent[v] = root(parent[v]);
  };
  std::vector<char> used(ideal.num_vars() + 1, 0);
  for (const auto& [key, w] : found) {
    g.edges.push_back({key.first, key.second, w.first, w.second});
    used[key.first] = used[key.second] = 1;
    parent[root(key.first)] = root(key.second);
  }
  std::map<std::size_t, std::vector<std::size_t>> comps;
  for (std::size_t v = 1; v <= ideal.num_vars(); ++v) {
    if (!used[v]) continue;
    g.vertices.push_back(v);
    comps[root(v)].push_back(v);
  }
  for (auto& [_, c] : comps) g.components.push_back(std::move(c));
  std::sort(g.components.begin(), g.components.end());
  return g;
}

// r - s + 1 with r vertices and s components of the linear relation graph.
// Only valid for t-spread principal Borel ideals, which have linear first
// syzygies.
inline std::size_t analytic_spread(const BorelSpec& spec) {
  const auto g = linear_relation_graph(borel_generators(spec));
  return g.vertices.size() - g.components.size() + 1;
}

// The spec with B_t(u) = I, if there is one. I may live in a ring with extra
// unused trailing variables.
inline std::optional<BorelSpec> recognize_borel(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit() || !ideal.is_square_free() || !ideal.is_equigenerated()) return std::nullopt;
  // u is the componentwise largest index tuple.
  std::vector<std::size_t> top;
  for (const auto& g : ideal.generators()) {
    const auto s = g.support();
    if (top.empty()) top = s;
    for (std::size_t k = 0; k < s.size(); ++k) top[k] = std::max(top[k], s[k]);
  }
  std::size_t min_gap = top.size() > 1 ? top[1] - top[0] : top.front();
  for (std::size_t k = 1; k < top.size(); ++k) min_gap = std::min(min_gap, top[k] - top[k - 1]);
  for (std::size_t t = std::max<std::size_t>(min_gap, 1); t >= 1; --t) {
    const BorelSpec spec(static_cast<unsigned>(t), top);
    std::vector<Monomial> padded;
    for (const auto& j : borel_index_tuples(spec)) padded.push_back(Monomial::from_support(ideal.num_vars(), j));
    if (MonomialIdeal(ideal.num_vars(), std::move(padded)) == ideal) return spec;
  }
  return std::nullopt;
}

// Refuses ideals that are not of the form B_t(u).
inline std::size_t analytic_spread(const MonomialIdeal& ideal) {
  const auto spec = recognize_borel(ideal);
  if (!spec) throw input_error("analytic spread is only computed for t-spread principal Borel ideals");
  return analytic_spread(*spec);
}

struct NtfClassification {
  bool ntf = false;
  std::string reason;
};

// B_t(u) is normally torsion-free iff i_{d-1} <= (d-1)t, i.e. iff it is the
// edge ideal of a d-uniform d-partite hypergraph with parts A_1..A_d.
inline NtfClassification classify_ntf(const BorelSpec& spec) {
  const std::size_t d = spec.degree();
  if (d == 1) return {true, "principal ideal"};
  const std::size_t prev = spec.indices()[d - 2];
  const std::size_t limit = (d - 1) * spec.t();
  const std::string cmp = "i_{d-1} = " + std::to_string(prev) + (prev <= limit ? " <= " : " > ") +
                          std::to_string(limit) + " = (d-1)t";
  if (prev <= limit) return {true, cmp + "; the A_k partition the support and each generator meets each A_k once"};
  return {false, cmp + "; A_{d-1} and A_d overlap"};
}

enum class TspreadVerdict { ntf, nearly_ntf, not_nearly_ntf };

inline const char* to_string(TspreadVerdict v) {
  switch (v) {
    case TspreadVerdict::ntf: return "ntf";
    case TspreadVerdict::nearly_ntf: return "nearly_ntf";
    case TspreadVerdict::not_nearly_ntf: return "not_nearly_ntf";
  }
  return "?";
}

struct TspreadClassification {
  TspreadVerdict verdict = TspreadVerdict::ntf;
  std::string reason;
  bool covered = true;  // false when the degree-specific statement does not apply
  std::vector<PrimeSupport> witness_primes;
};

// u = x_a x_b x_n.
inline TspreadClassification classify_degree3(const BorelSpec& spec) {
  if (spec.degree() != 3) throw input_error("classify_degree3 needs a degree 3 generator");
  const std::size_t a = spec.indices()[0], b = spec.indices()[1], n = spec.num_vars();
  const std::size_t t = spec.t();
  TspreadClassification c;
  if (b < 2 * t + 1) {
    c.verdict = TspreadVerdict::ntf;
    c.reason = "b < 2t + 1";
    return c;
  }
  if (a == 1) {
    c.verdict = TspreadVerdict::nearly_ntf;
    c.reason = "a = 1 and b >= 2t + 1";
    return c;
  }
  c.verdict = TspreadVerdict::not_nearly_ntf;
  c.reason = "a > 1 and b >= 2t + 1";
  std::vector<std::size_t> p1, p2{1};
  for (std::size_t v = t + 1; v <= n; ++v) p1.push_back(v);
  for (std::size_t v = t + 2; v <= n; ++v) p2.push_back(v);
  c.witness_primes = {PrimeSupport(n, p1), PrimeSupport(n, p2)};
  return c;
}

// u = x_i x_n with i >= t: ntf when i = t, otherwise nearly ntf and not ntf.
inline TspreadClassification classify_degree2(const BorelSpec& spec) {
  if (spec.degree() != 2) throw input_error("classify_degree2 needs a degree 2 generator");
  const std::size_t i = spec.indices()[0], t = spec.t();
  TspreadClassification c;
  if (i < t) {
    c.covered = false;
    c.verdict = classify_ntf(spec).ntf ? TspreadVerdict::ntf : TspreadVerdict::not_nearly_ntf;
    c.reason = "i < t: decided by the general criterion only";
    return c;
  }
  if (i == t) {
    c.verdict = TspreadVerdict::ntf;
    c.reason = "i = t: edge ideal of a bipartite graph";
  } else {
    c.verdict = TspreadVerdict::nearly_ntf;
    c.reason = "i > t";
  }
  return c;
}

// x_j -> x_{j - offset}; every supported index must exceed the offset.
inline MonomialIdeal relabel_shift(const MonomialIdeal& ideal, std::size_t offset) {
  if (offset == 0) return ideal;
  const std::size_t n = ideal.num_vars();
  if (offset >= n) throw input_error("shift offset " + std::to_string(offset) + " leaves no variables");
  for (std::size_t v : ideal.support()) {
    if (v <= offset) {
      throw input_error("x" + std::to_string(v) + " is supported but would shift below x1");
    }
  }
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    gens.emplace_back(std::vector<Exponent>(g.exponents().begin() + static_cast<std::ptrdiff_t>(offset),
                                            g.exponents().end()));
  }
  return MonomialIdeal(n - offset, std::move(gens));
}

// x_j -> x_{j + offset}, growing the ring by `offset` variables.
inline MonomialIdeal relabel_unshift(const MonomialIdeal& ideal, std::size_t offset) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    std::vector<Exponent> e(offset, 0);
    e.insert(e.end(), g.exponents().begin(), g.exponents().end());
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(ideal.num_vars() + offset, std::move(gens));
}

}  // namespace ntf
