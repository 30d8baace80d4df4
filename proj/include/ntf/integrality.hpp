#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "ntf/exact_lp.hpp"
#include "ntf/ideal.hpp"

namespace ntf {

// Membership of an exponent vector e in k * NP(I), NP(I) = conv(exponents of
// G(I)) + R^n_{>=0}: decided by exact feasibility of
//   lambda >= 0, sum lambda = k, sum lambda_u * exp(u) <= e.
inline bool newton_member(const std::vector<Exponent>& e, const MonomialIdeal& ideal, unsigned k) {
  const std::size_t n = ideal.num_vars();
  if (e.size() != n) throw input_error("exponent vector length does not match the ring");
  if (ideal.is_zero()) return false;
  const std::size_t m = ideal.size();

  std::vector<ExactFeasibility::Row> a(n + 1, ExactFeasibility::Row(m + n));
  ExactFeasibility::Row b(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t u = 0; u < m; ++u) a[i][u] = ideal.generators()[u][i];
    a[i][m + i] = 1;
    b[i] = e[i];
  }
  for (std::size_t u = 0; u < m; ++u) a[n][u] = 1;
  b[n] = k;
  return ExactFeasibility(std::move(a), std::move(b)).solve().has_value();
}

inline bool newton_member(const Monomial& u, const MonomialIdeal& ideal, unsigned k) {
  return newton_member(u.exponents(), ideal, k);
}

// The integral closure of I^k: minimal lattice points of k * NP(I).
//
// Every minimal lattice point lies in the box [0, k * M_i] where M_i is the
// largest exponent of x_i in G(I): if a point of k * NP(I) has coordinate
// c_i > k * M_i, then lowering c_i by one keeps it above the convex
// combination sum lambda_u * exp(u), whose i-th coordinate is at most k * M_i.
inline MonomialIdeal integral_closure_of_power(const MonomialIdeal& ideal, unsigned k) {
  if (k == 0) throw input_error("integral closure: k must be positive");
  const std::size_t n = ideal.num_vars();
  if (ideal.is_zero()) return ideal;
  const MonomialIdeal ordinary = power(ideal, k);
  const Monomial top = ideal.lcm_of_generators();

  std::vector<Exponent> bound(n);
  for (std::size_t i = 0; i < n; ++i) bound[i] = detail::checked_mul(top[i], k);

  std::vector<Monomial> points;
  std::vector<Exponent> e(n, 0);
  while (true) {
    Monomial candidate(e);
    const bool found_smaller =
        std::any_of(points.begin(), points.end(), [&](const Monomial& p) { return p.divides(candidate); });
    if (!found_smaller && (ordinary.contains(candidate) || newton_member(e, ideal, k))) {
      points.push_back(std::move(candidate));
    }
    // odometer over the box
    std::size_t i = 0;
    while (i < n && e[i] == bound[i]) e[i++] = 0;
    if (i == n) break;
    ++e[i];
  }
  return MonomialIdeal(n, std::move(points));
}

struct NormalityReport {
  unsigned bound = 0;
  unsigned normal_up_to = 0;
  std::optional<unsigned> first_failure;
  std::optional<Monomial> witness;
};

// Checks closure(I^k) = I^k for k = 1..K and reports the first gap.
inline NormalityReport is_normal_up_to(const MonomialIdeal& ideal, unsigned max_power) {
  if (max_power == 0) throw input_error("max power must be positive");
  NormalityReport report;
  report.bound = max_power;
  for (unsigned k = 1; k <= max_power; ++k) {
    const MonomialIdeal ordinary = power(ideal, k);
    const MonomialIdeal closure = integral_closure_of_power(ideal, k);
    if (closure != ordinary) {
      report.first_failure = k;
      for (const auto& g : closure.generators()) {
        if (!ordinary.contains(g)) {
          report.witness = g;
          break;
        }
      }
      return report;
    }
    report.normal_up_to = k;
  }
  return report;
}

}  // namespace ntf
