#pragma once

// Brute-force reference implementations. They work on raw exponent vectors
// and only use divisibility, so they share no algorithm with the library.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<unsigned>;
using Gens = std::vector<Vec>;

inline bool divides(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline bool in_ideal(const Gens& gens, const Vec& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Vec& g) { return divides(g, m); });
}

// Calls f on every vector in the box [0, top].
inline void for_box(const Vec& top, const std::function<void(const Vec&)>& f) {
  Vec e(top.size(), 0);
  while (true) {
    f(e);
    std::size_t i = 0;
    while (i < e.size() && e[i] == top[i]) e[i++] = 0;
    if (i == e.size()) return;
    ++e[i];
  }
}

inline Vec add(const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline Vec componentwise_max(const Gens& gens, std::size_t n) {
  Vec top(n, 0);
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < n; ++i) top[i] = std::max(top[i], g[i]);
  }
  return top;
}

// Divisibility-minimal members of a predicate within a box.
inline std::set<Vec> minimal_in_box(const Vec& top, const std::function<bool(const Vec&)>& member) {
  std::vector<Vec> hits;
  for_box(top, [&](const Vec& e) {
    if (member(e)) hits.push_back(e);
  });
  std::set<Vec> out;
  for (const auto& h : hits) {
    const bool minimal = std::none_of(hits.begin(), hits.end(), [&](const Vec& o) { return o != h && divides(o, h); });
    if (minimal) out.insert(h);
  }
  return out;
}

// m in I^k: some product of k generators divides m.
inline bool in_power(const Gens& gens, unsigned k, const Vec& m) {
  std::function<bool(std::size_t, unsigned, const Vec&)> pick = [&](std::size_t from, unsigned left, const Vec& acc) {
    if (!divides(acc, m)) return false;
    if (left == 0) return true;
    for (std::size_t i = from; i < gens.size(); ++i) {
      if (pick(i, left - 1, add(acc, gens[i]))) return true;
    }
    return false;
  };
  return pick(0, k, Vec(m.size(), 0));
}

// Associated primes as variable sets (1-based): F is associated iff some v
// outside I has x_i v in I exactly for i in F, and no monomial in the other
// variables multiplies v into I. Witnesses range over the box [0, lcm].
inline std::set<std::vector<std::size_t>> associated_primes(const Gens& gens, std::size_t n) {
  const Vec top = componentwise_max(gens, n);
  std::set<std::vector<std::size_t>> out;
  for_box(top, [&](const Vec& v) {
    if (in_ideal(gens, v)) return;
    std::vector<std::size_t> f;
    Vec outside = v;
    for (std::size_t i = 0; i < n; ++i) {
      Vec w = v;
      ++w[i];
      if (in_ideal(gens, w)) {
        f.push_back(i + 1);
      } else {
        outside[i] += top[i];
      }
    }
    if (!f.empty() && !in_ideal(gens, outside)) out.insert(f);
  });
  return out;
}

// u^j in I^{kj} for some 1 <= j <= max_j; the classical criterion for u to
// lie in the integral closure of I^k.
inline bool closure_member(const Gens& gens, unsigned k, const Vec& u, unsigned max_j) {
  for (unsigned j = 1; j <= max_j; ++j) {
    Vec uj(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) uj[i] = u[i] * j;
    if (in_power(gens, k * j, uj)) return true;
  }
  return false;
}

}  // namespace oracle
