#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "ntf/error.hpp"

namespace ntf {

using Exponent = std::uint32_t;

namespace detail {

inline Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b) {
    throw std::overflow_error("monomial exponent overflow");
  }
  return a + b;
}

inline Exponent checked_mul(Exponent a, std::uint64_t k) {
  const std::uint64_t r = static_cast<std::uint64_t>(a) * k;
  if (k != 0 && (r / k != a || r > std::numeric_limits<Exponent>::max())) {
    throw std::overflow_error("monomial exponent overflow");
  }
  return static_cast<Exponent>(r);
}

}  // namespace detail

// A monomial x_1^{a_1} ... x_n^{a_n} stored as its exponent vector over a
// fixed number of variables. Variable indices in the public API are 1-based,
// matching the usual x_1, ..., x_n notation; operator[] is 0-based.
//
// Exponent arithmetic is checked: any result that does not fit in Exponent
// throws std::overflow_error rather than wrapping.
class Monomial {
 public:
  Monomial() = default;

  // The identity monomial in n variables.
  explicit Monomial(std::size_t n) : exps_(n, 0) {}

  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t n, std::size_t index, Exponent power = 1) {
    check_index(n, index);
    Monomial m(n);
    m.exps_.at(index - 1) = power;
    return m;
  }

  // Product of the variables in `vars` (1-based indices, duplicates allowed).
  static Monomial from_support(std::size_t n, std::span<const std::size_t> vars) {
    Monomial m(n);
    for (std::size_t v : vars) {
      check_index(n, v);
      m.exps_[v - 1] = detail::checked_add(m.exps_[v - 1], 1);
    }
    return m;
  }

  std::size_t num_vars() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent exponent(std::size_t index) const { return exps_.at(index - 1); }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  std::uint64_t degree() const noexcept {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
  }

  bool is_one() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  bool is_square_free() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
  }

  // True for x_i^a with a >= 1.
  bool is_pure_power() const noexcept {
    return std::count_if(exps_.begin(), exps_.end(), [](Exponent e) { return e > 0; }) == 1;
  }

  // 1-based indices of the variables dividing this monomial.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] > 0) s.push_back(i + 1);
    }
    return s;
  }

  bool divides(const Monomial& other) const noexcept {
    const std::size_t n = exps_.size();
    const Exponent* a = exps_.data();
    const Exponent* b = other.exps_.data();
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] > b[i]) return false;
    }
    return true;
  }

  Monomial pow(std::uint64_t k) const {
    Monomial r(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = detail::checked_mul(exps_[i], k);
    return r;
  }

  // Each exponent clamped to at most one.
  Monomial square_free_part() const {
    Monomial r(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] > 0 ? 1 : 0;
    return r;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    require_same_ring(a, b);
    Monomial r(a.exps_.size());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] = detail::checked_add(a.exps_[i], b.exps_[i]);
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_ring(a, b);
    Monomial r(a.exps_.size());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    require_same_ring(a, b);
    Monomial r(a.exps_.size());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    return r;
  }

  // u / gcd(u, v): the generator of the colon ((u) : v).
  friend Monomial colon(const Monomial& u, const Monomial& v) {
    require_same_ring(u, v);
    Monomial r(u.exps_.size());
    for (std::size_t i = 0; i < u.exps_.size(); ++i) {
      r.exps_[i] = u.exps_[i] > v.exps_[i] ? u.exps_[i] - v.exps_[i] : 0;
    }
    return r;
  }

  // Exact quotient; throws if `b` does not divide `a`.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    require_same_ring(a, b);
    if (!b.divides(a)) throw input_error("monomial division is not exact");
    return colon(a, b);
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  // Lexicographic on exponent vectors.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

  static void require_same_ring(const Monomial& a, const Monomial& b) {
    if (a.exps_.size() != b.exps_.size()) {
      throw input_error("monomials live in rings with different numbers of variables");
    }
  }

  static void check_index(std::size_t n, std::size_t index) {
    if (index < 1 || index > n) {
      throw input_error("variable index " + std::to_string(index) + " outside 1.." + std::to_string(n));
    }
  }

 private:
  std::vector<Exponent> exps_;
};

// Canonical generator order: descending lexicographic on exponent vectors,
// i.e. the lex monomial order with x_1 > x_2 > ... > x_n, largest first.
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const { return b < a; }
};

}  // namespace ntf
