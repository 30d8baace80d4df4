#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ntf/error.hpp"
#include "ntf/monomial.hpp"

namespace ntf {

// Divisibility-minimal elements of `monomials`, deduplicated and sorted in
// CanonicalOrder. All monomials must share the same number of variables.
inline std::vector<Monomial> minimal_elements(std::vector<Monomial> monomials) {
  if (monomials.empty()) return monomials;
  const std::size_t n = monomials.front().num_vars();
  for (const auto& m : monomials) {
    if (m.num_vars() != n) throw input_error("mismatched exponent vector lengths");
  }
  // A divisor has degree no larger than its multiple, so scanning by degree
  // only needs to test against already-kept elements.
  std::vector<std::pair<std::uint64_t, std::size_t>> order;
  order.reserve(monomials.size());
  for (std::size_t i = 0; i < monomials.size(); ++i) order.emplace_back(monomials[i].degree(), i);
  std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return monomials[a.second] < monomials[b.second];
  });

  std::vector<Monomial> kept;
  const Monomial* prev = nullptr;
  for (const auto& [deg, idx] : order) {
    const Monomial& m = monomials[idx];
    if (prev != nullptr && *prev == m) continue;
    prev = &m;
    bool dominated = false;
    for (const auto& k : kept) {
      if (k.degree() < deg && k.divides(m)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end(), CanonicalOrder{});
  return kept;
}

// A monomial ideal in K[x_1..x_n], held as its unique minimal generating set
// G(I) in CanonicalOrder. Structural equality is ideal equality.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  // The zero ideal of K[x_1..x_n].
  explicit MonomialIdeal(std::size_t n) : n_(n) {}

  MonomialIdeal(std::size_t n, std::vector<Monomial> generators) : n_(n) {
    for (const auto& g : generators) {
      if (g.num_vars() != n) {
        throw input_error("generator has " + std::to_string(g.num_vars()) +
                          " exponents, expected " + std::to_string(n));
      }
    }
    gens_ = minimal_elements(std::move(generators));
  }

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n); }
  static MonomialIdeal unit(std::size_t n) { return MonomialIdeal(n, {Monomial(n)}); }

  // (x_i : i in vars)
  static MonomialIdeal prime(std::size_t n, std::span<const std::size_t> vars) {
    std::vector<Monomial> g;
    for (std::size_t v : vars) g.push_back(Monomial::variable(n, v));
    return MonomialIdeal(n, std::move(g));
  }

  std::size_t num_vars() const noexcept { return n_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_proper() const noexcept { return !is_unit(); }

  bool is_square_free() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_square_free(); });
  }

  bool is_equigenerated() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return g.degree() == gens_.front().degree(); });
  }

  bool contains(const Monomial& m) const {
    if (m.num_vars() != n_) throw input_error("monomial and ideal live in different rings");
    for (const auto& g : gens_) {
      if (g.divides(m)) return true;
    }
    return false;
  }

  bool contains(const MonomialIdeal& other) const {
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& g) { return contains(g); });
  }

  // 1-based indices of variables dividing some generator.
  std::vector<std::size_t> support() const {
    std::vector<bool> used(n_, false);
    for (const auto& g : gens_) {
      for (std::size_t i = 0; i < n_; ++i) used[i] = used[i] || g[i] > 0;
    }
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n_; ++i) {
      if (used[i]) s.push_back(i + 1);
    }
    return s;
  }

  // Componentwise maximum of the generator exponents.
  Monomial lcm_of_generators() const {
    Monomial r(n_);
    for (const auto& g : gens_) r = lcm(r, g);
    return r;
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

// A monomial prime p_F = (x_i : i in F), F a sorted duplicate-free set of
// 1-based variable indices. Ordered by size, then lexicographically.
class PrimeSupport {
 public:
  PrimeSupport() = default;

  PrimeSupport(std::size_t n, std::vector<std::size_t> vars) : n_(n), vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    if (std::adjacent_find(vars_.begin(), vars_.end()) != vars_.end()) {
      throw input_error("prime support has duplicate variables");
    }
    for (std::size_t v : vars_) Monomial::check_index(n_, v);
  }

  static PrimeSupport maximal(std::size_t n) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i + 1;
    return PrimeSupport(n, std::move(all));
  }

  std::size_t num_vars() const noexcept { return n_; }
  const std::vector<std::size_t>& vars() const noexcept { return vars_; }
  std::size_t size() const noexcept { return vars_.size(); }
  bool empty() const noexcept { return vars_.empty(); }

  bool contains_var(std::size_t v) const { return std::binary_search(vars_.begin(), vars_.end(), v); }

  bool is_subset_of(const PrimeSupport& other) const {
    return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(), vars_.end());
  }

  // m \ {x_i} style removal of one variable.
  PrimeSupport without(std::size_t v) const {
    std::vector<std::size_t> rest;
    for (std::size_t x : vars_) {
      if (x != v) rest.push_back(x);
    }
    return PrimeSupport(n_, std::move(rest));
  }

  MonomialIdeal to_ideal() const { return MonomialIdeal::prime(n_, vars_); }

  friend bool operator==(const PrimeSupport& a, const PrimeSupport& b) { return a.vars_ == b.vars_; }
  friend std::strong_ordering operator<=>(const PrimeSupport& a, const PrimeSupport& b) {
    if (a.vars_.size() != b.vars_.size()) return a.vars_.size() <=> b.vars_.size();
    return a.vars_ <=> b.vars_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> vars_;
};

using PrimeSet = std::set<PrimeSupport>;

// ---------------------------------------------------------------------------
// Ideal arithmetic. All operations are pure and return canonical ideals.

namespace detail {

inline void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars() != b.num_vars()) throw input_error("ideals live in rings with different numbers of variables");
}

inline void require_same_ring(const MonomialIdeal& a, const Monomial& m) {
  if (a.num_vars() != m.num_vars()) throw input_error("monomial and ideal live in different rings");
}

}  // namespace detail

inline MonomialIdeal minimalize(std::vector<Monomial> monomials, std::size_t n) {
  return MonomialIdeal(n, std::move(monomials));
}

inline bool membership(const Monomial& m, const MonomialIdeal& ideal) { return ideal.contains(m); }

inline MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same_ring(a, b);
  std::vector<Monomial> g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.num_vars(), std::move(g));
}

inline MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same_ring(a, b);
  std::vector<Monomial> g;
  g.reserve(a.size() * b.size());
  for (const auto& u : a.generators()) {
    for (const auto& v : b.generators()) g.push_back(u * v);
  }
  return MonomialIdeal(a.num_vars(), std::move(g));
}

inline MonomialIdeal multiply(const Monomial& h, const MonomialIdeal& ideal) {
  detail::require_same_ring(ideal, h);
  std::vector<Monomial> g;
  for (const auto& u : ideal.generators()) g.push_back(h * u);
  return MonomialIdeal(ideal.num_vars(), std::move(g));
}

// I^k by repeated multiplication. power(I, 0) is the unit ideal.
inline MonomialIdeal power(const MonomialIdeal& ideal, unsigned k) {
  MonomialIdeal result = MonomialIdeal::unit(ideal.num_vars());
  for (unsigned i = 0; i < k; ++i) result = multiply(result, ideal);
  return result;
}

// (I : v) = (u / gcd(u, v) : u in G(I))
inline MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& v) {
  detail::require_same_ring(ideal, v);
  std::vector<Monomial> g;
  g.reserve(ideal.size());
  for (const auto& u : ideal.generators()) g.push_back(colon(u, v));
  return MonomialIdeal(ideal.num_vars(), std::move(g));
}

// (I ∩ J) = (lcm(u, v) : u in G(I), v in G(J))
inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same_ring(a, b);
  std::vector<Monomial> g;
  g.reserve(a.size() * b.size());
  for (const auto& u : a.generators()) {
    for (const auto& v : b.generators()) g.push_back(lcm(u, v));
  }
  return MonomialIdeal(a.num_vars(), std::move(g));
}

inline MonomialIdeal intersect(std::span<const MonomialIdeal> ideals, std::size_t n) {
  MonomialIdeal result = MonomialIdeal::unit(n);
  for (const auto& i : ideals) result = intersect(result, i);
  return result;
}

// (I : J) = ∩_{v in G(J)} (I : v). The colon by the zero ideal is rejected.
inline MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  detail::require_same_ring(ideal, by);
  if (by.is_zero()) throw input_error("colon by the zero ideal");
  MonomialIdeal result = MonomialIdeal::unit(ideal.num_vars());
  for (const auto& v : by.generators()) {
    result = intersect(result, colon(ideal, v));
    if (result == ideal) break;
  }
  return result;
}

// (I : v^∞), reached by iterating the colon until it stabilizes.
inline MonomialIdeal saturation(const MonomialIdeal& ideal, const Monomial& v) {
  detail::require_same_ring(ideal, v);
  MonomialIdeal current = ideal;
  while (true) {
    MonomialIdeal next = colon(current, v);
    if (next == current) return current;
    current = std::move(next);
  }
}

inline MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> g;
  g.reserve(ideal.size());
  for (const auto& u : ideal.generators()) g.push_back(u.square_free_part());
  return MonomialIdeal(ideal.num_vars(), std::move(g));
}

// I \ x_i: drop every generator divisible by x_i (set x_i = 0).
inline MonomialIdeal deletion(const MonomialIdeal& ideal, std::size_t index) {
  Monomial::check_index(ideal.num_vars(), index);
  std::vector<Monomial> g;
  for (const auto& u : ideal.generators()) {
    if (u.exponent(index) == 0) g.push_back(u);
  }
  return MonomialIdeal(ideal.num_vars(), std::move(g));
}

// I(p): the image of I under x_j -> 1 for every x_j outside p.
struct Localization {
  PrimeSupport prime;
  // Ideal in K[x_i : i in prime.vars()], the k-th variable standing for
  // x_{prime.vars()[k-1]}.
  MonomialIdeal restricted;
  // The same generators, zero-padded back into the ambient ring.
  MonomialIdeal padded;
};

inline Localization localization(const MonomialIdeal& ideal, const PrimeSupport& p) {
  if (p.num_vars() != ideal.num_vars()) throw input_error("prime and ideal live in different rings");
  const auto& vars = p.vars();
  std::vector<Monomial> restricted;
  std::vector<Monomial> padded;
  for (const auto& u : ideal.generators()) {
    std::vector<Exponent> r(vars.size());
    std::vector<Exponent> pe(ideal.num_vars(), 0);
    for (std::size_t k = 0; k < vars.size(); ++k) {
      r[k] = u.exponent(vars[k]);
      pe[vars[k] - 1] = r[k];
    }
    restricted.emplace_back(std::move(r));
    padded.emplace_back(std::move(pe));
  }
  return {p, MonomialIdeal(vars.size(), std::move(restricted)),
          MonomialIdeal(ideal.num_vars(), std::move(padded))};
}

// Largest common monomial factor h of the generators and the quotient J with
// I = h * J.
struct CommonFactor {
  Monomial factor;
  MonomialIdeal quotient;
};

inline CommonFactor strip_common_factor(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw input_error("the zero ideal has no common factor");
  Monomial h = ideal.generators().front();
  for (const auto& u : ideal.generators()) h = gcd(h, u);
  std::vector<Monomial> g;
  for (const auto& u : ideal.generators()) g.push_back(u / h);
  return {h, MonomialIdeal(ideal.num_vars(), std::move(g))};
}

}  // namespace ntf
