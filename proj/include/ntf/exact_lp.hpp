#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ntf/error.hpp"

namespace ntf {

using Rational = boost::multiprecision::cpp_rational;

// Exact feasibility of { x >= 0 : A x = b } by phase-one simplex over the
// rationals with Bland's rule (no cycling, no rounding).
class ExactFeasibility {
 public:
  using Row = std::vector<Rational>;

  ExactFeasibility(std::vector<Row> a, Row b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.size() != b_.size()) throw input_error("constraint matrix and right-hand side disagree in size");
    cols_ = a_.empty() ? 0 : a_.front().size();
    for (const auto& r : a_) {
      if (r.size() != cols_) throw input_error("ragged constraint matrix");
    }
  }

  // A feasible point if one exists.
  std::optional<Row> solve() const {
    const std::size_t m = a_.size();
    const std::size_t width = cols_ + m;
    // Tableau rows: [A | I | b] with every b >= 0.
    std::vector<Row> t(m, Row(width + 1));
    for (std::size_t r = 0; r < m; ++r) {
      const bool flip = b_[r] < 0;
      for (std::size_t c = 0; c < cols_; ++c) t[r][c] = flip ? Rational(-a_[r][c]) : a_[r][c];
      t[r][cols_ + r] = 1;
      t[r][width] = flip ? Rational(-b_[r]) : b_[r];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t r = 0; r < m; ++r) basis[r] = cols_ + r;

    // Reduced costs of the phase-one objective (sum of artificials).
    Row cost(width + 1);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) cost[c] -= t[r][c];
      cost[width] -= t[r][width];
    }

    while (true) {
      std::size_t enter = width;
      for (std::size_t c = 0; c < width; ++c) {
        if (cost[c] < 0) {
          enter = c;
          break;
        }
      }
      if (enter == width) break;

      std::size_t leave = m;
      Rational best;
      for (std::size_t r = 0; r < m; ++r) {
        if (t[r][enter] <= 0) continue;
        Rational ratio = t[r][width] / t[r][enter];
        if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == m) break;  // unbounded direction; cannot happen in phase one

      const Rational pivot = t[leave][enter];
      for (auto& v : t[leave]) v /= pivot;
      for (std::size_t r = 0; r < m; ++r) {
        if (r == leave || t[r][enter] == 0) continue;
        const Rational f = t[r][enter];
        for (std::size_t c = 0; c <= width; ++c) t[r][c] -= f * t[leave][c];
      }
      if (cost[enter] != 0) {
        const Rational f = cost[enter];
        for (std::size_t c = 0; c <= width; ++c) cost[c] -= f * t[leave][c];
      }
      basis[leave] = enter;
    }

    if (cost[width] != 0) return std::nullopt;
    Row x(cols_);
    for (std::size_t r = 0; r < m; ++r) {
      if (basis[r] < cols_) x[basis[r]] = t[r][width];
    }
    return x;
  }

 private:
  std::vector<Row> a_;
  Row b_;
  std::size_t cols_ = 0;
};

}  // namespace ntf
