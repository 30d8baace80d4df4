#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <set>
#include <vector>

#include "ntf/error.hpp"
#include "ntf/ideal.hpp"

namespace ntf {

// An irreducible monomial ideal (x_{i_1}^{a_1}, ..., x_{i_r}^{a_r}), stored as
// variable index -> exponent with every exponent >= 1.
class IrreducibleComponent {
 public:
  IrreducibleComponent() = default;

  explicit IrreducibleComponent(std::map<std::size_t, Exponent> entries) : entries_(std::move(entries)) {
    for (const auto& [var, exp] : entries_) {
      if (var == 0 || exp == 0) throw input_error("irreducible component entries must be positive");
    }
  }

  // Reads an ideal generated by pure powers; throws otherwise.
  static IrreducibleComponent from_ideal(const MonomialIdeal& ideal) {
    std::map<std::size_t, Exponent> e;
    for (const auto& g : ideal.generators()) {
      if (!g.is_pure_power()) throw input_error("ideal is not generated by pure powers");
      const std::size_t v = g.support().front();
      e[v] = g.exponent(v);
    }
    return IrreducibleComponent(std::move(e));
  }

  const std::map<std::size_t, Exponent>& entries() const noexcept { return entries_; }

  MonomialIdeal to_ideal(std::size_t n) const {
    std::vector<Monomial> g;
    for (const auto& [var, exp] : entries_) g.push_back(Monomial::variable(n, var, exp));
    return MonomialIdeal(n, std::move(g));
  }

  PrimeSupport radical(std::size_t n) const {
    std::vector<std::size_t> vars;
    for (const auto& [var, exp] : entries_) vars.push_back(var);
    return PrimeSupport(n, std::move(vars));
  }

  friend bool operator==(const IrreducibleComponent&, const IrreducibleComponent&) = default;
  friend auto operator<=>(const IrreducibleComponent& a, const IrreducibleComponent& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::map<std::size_t, Exponent> entries_;
};

using Decomposition = std::vector<IrreducibleComponent>;

// Associated primes of I^k for k = 1..K.
struct AssProfile {
  std::map<unsigned, PrimeSet> by_power;

  unsigned max_power() const { return by_power.empty() ? 0 : by_power.rbegin()->first; }
  const PrimeSet& at(unsigned k) const { return by_power.at(k); }

  friend bool operator==(const AssProfile&, const AssProfile&) = default;
};

namespace detail {

inline void require_proper_nonzero(const MonomialIdeal& ideal, const char* what) {
  if (ideal.is_zero()) throw input_error(std::string(what) + ": the zero ideal is not allowed");
  if (ideal.is_unit()) throw input_error(std::string(what) + ": the unit ideal is not allowed");
}

// Minimal monomials v outside J with x_i * v in J for every i in `vars`,
// i.e. the minimal elements of (J : (x_i : i in vars)) \ J.
//
// The colon is built one variable at a time as an intersection; partial
// lcms that already lie in J are dropped since every multiple stays in J.
inline std::vector<Monomial> socle_monomials(const MonomialIdeal& ideal, std::span<const std::size_t> vars) {
  const std::size_t n = ideal.num_vars();
  std::vector<Monomial> partial{Monomial(n)};
  for (std::size_t v : vars) {
    const MonomialIdeal step = colon(ideal, Monomial::variable(n, v));
    std::vector<Monomial> next;
    for (const auto& s : partial) {
      for (const auto& h : step.generators()) {
        Monomial l = lcm(s, h);
        if (!ideal.contains(l)) next.push_back(std::move(l));
      }
    }
    partial = minimal_elements(std::move(next));
    if (partial.empty()) break;
  }
  return partial;
}

}  // namespace detail

// Irredundant irreducible decomposition of a proper non-zero monomial ideal.
//
// With a = exponent vector of lcm(G(I)), the components of I correspond to the
// socle monomials x^b of the Artinian ideal I + (x_i^{a_i+1} : i in supp I):
// each contributes (x_i^{b_i+1} : b_i < a_i). Output is canonically sorted.
inline Decomposition irreducible_decomposition(const MonomialIdeal& ideal) {
  detail::require_proper_nonzero(ideal, "irreducible_decomposition");
  const std::size_t n = ideal.num_vars();
  const Monomial top = ideal.lcm_of_generators();
  const std::vector<std::size_t> supp = ideal.support();

  std::vector<Monomial> gens = ideal.generators();
  for (std::size_t v : supp) gens.push_back(Monomial::variable(n, v, top.exponent(v) + 1));
  const MonomialIdeal artinian(n, std::move(gens));

  Decomposition out;
  for (const auto& corner : detail::socle_monomials(artinian, supp)) {
    std::map<std::size_t, Exponent> entries;
    for (std::size_t v : supp) {
      if (corner.exponent(v) < top.exponent(v)) entries[v] = corner.exponent(v) + 1;
    }
    out.emplace_back(std::move(entries));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline void split_recursive(const MonomialIdeal& ideal, std::vector<IrreducibleComponent>& out) {
  for (const auto& g : ideal.generators()) {
    if (g.is_pure_power()) continue;
    // Pivot: first non-pure-power generator in canonical order; peel off the
    // pure power of its lowest-index variable.
    const std::size_t n = ideal.num_vars();
    const std::size_t var = g.support().front();
    const Monomial head = Monomial::variable(n, var, g.exponent(var));
    const Monomial tail = g / head;
    split_recursive(sum(ideal, MonomialIdeal(n, {head})), out);
    split_recursive(sum(ideal, MonomialIdeal(n, {tail})), out);
    return;
  }
  out.push_back(IrreducibleComponent::from_ideal(ideal));
}

}  // namespace detail

// Drops components containing the intersection of the others until none do.
inline Decomposition remove_redundant_components(Decomposition components, std::size_t n) {
  std::sort(components.begin(), components.end());
  components.erase(std::unique(components.begin(), components.end()), components.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < components.size(); ++i) {
      MonomialIdeal rest = MonomialIdeal::unit(n);
      for (std::size_t j = 0; j < components.size(); ++j) {
        if (j != i) rest = intersect(rest, components[j].to_ideal(n));
      }
      if (components.size() > 1 && components[i].to_ideal(n).contains(rest)) {
        components.erase(components.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return components;
}

// The same decomposition by recursive splitting: if some generator u is not a
// pure power, write u = v * w with v the pure power of u's lowest variable and
// recurse on I + (v) and I + (w). Exponential, intended for small inputs.
inline Decomposition irreducible_decomposition_by_splitting(const MonomialIdeal& ideal) {
  detail::require_proper_nonzero(ideal, "irreducible_decomposition");
  Decomposition raw;
  detail::split_recursive(ideal, raw);
  return remove_redundant_components(std::move(raw), ideal.num_vars());
}

inline MonomialIdeal intersect_components(const Decomposition& components, std::size_t n) {
  MonomialIdeal result = MonomialIdeal::unit(n);
  for (const auto& c : components) result = intersect(result, c.to_ideal(n));
  return result;
}

inline PrimeSet associated_primes(const MonomialIdeal& ideal) {
  PrimeSet out;
  for (const auto& c : irreducible_decomposition(ideal)) out.insert(c.radical(ideal.num_vars()));
  return out;
}

// Inclusion-minimal elements of a set of primes.
inline PrimeSet minimal_under_inclusion(const PrimeSet& primes) {
  PrimeSet out;
  for (const auto& p : primes) {
    bool minimal = true;
    for (const auto& q : primes) {
      if (q != p && q.is_subset_of(p)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.insert(p);
  }
  return out;
}

inline PrimeSet minimal_primes(const MonomialIdeal& ideal) {
  return minimal_under_inclusion(associated_primes(ideal));
}

// p in Ass(R/I) iff the maximal ideal of K[x_i : i in p] is associated to the
// localization I(p), i.e. I(p) has a non-zero socle.
inline bool is_associated_prime(const MonomialIdeal& ideal, const PrimeSupport& p) {
  detail::require_proper_nonzero(ideal, "is_associated_prime");
  if (p.empty()) return false;
  const MonomialIdeal local = localization(ideal, p).restricted;
  if (local.is_unit()) return false;
  std::vector<std::size_t> all(local.num_vars());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i + 1;
  return !detail::socle_monomials(local, all).empty();
}

// A monomial v with (I : v) = p_F for the maximal prime of the ambient ring,
// if one exists.
inline std::optional<Monomial> maximal_ideal_witness(const MonomialIdeal& ideal) {
  detail::require_proper_nonzero(ideal, "maximal_ideal_witness");
  std::vector<std::size_t> all(ideal.num_vars());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i + 1;
  auto socle = detail::socle_monomials(ideal, all);
  if (socle.empty()) return std::nullopt;
  return socle.front();
}

// I^(k): intersection over p in Min(I) of the p-primary component of I^k,
// obtained as the saturation of I^k by the product of variables outside p.
inline MonomialIdeal symbolic_power(const MonomialIdeal& ideal, unsigned k) {
  detail::require_proper_nonzero(ideal, "symbolic_power");
  if (k == 0) throw input_error("symbolic_power: k must be positive");
  const std::size_t n = ideal.num_vars();
  const MonomialIdeal ordinary = power(ideal, k);
  MonomialIdeal result = MonomialIdeal::unit(n);
  for (const auto& p : minimal_primes(ideal)) {
    std::vector<std::size_t> outside;
    for (std::size_t v = 1; v <= n; ++v) {
      if (!p.contains_var(v)) outside.push_back(v);
    }
    const Monomial v = Monomial::from_support(n, outside);
    result = intersect(result, saturation(ordinary, v));
  }
  return result;
}

// I^(k) again, as the intersection of the irreducible components of I^k whose
// radical lies inside some minimal prime of I.
inline MonomialIdeal symbolic_power_by_components(const MonomialIdeal& ideal, unsigned k) {
  detail::require_proper_nonzero(ideal, "symbolic_power");
  if (k == 0) throw input_error("symbolic_power: k must be positive");
  const std::size_t n = ideal.num_vars();
  const PrimeSet mins = minimal_primes(ideal);
  MonomialIdeal result = MonomialIdeal::unit(n);
  for (const auto& c : irreducible_decomposition(power(ideal, k))) {
    const PrimeSupport r = c.radical(n);
    if (std::any_of(mins.begin(), mins.end(), [&](const PrimeSupport& p) { return r.is_subset_of(p); })) {
      result = intersect(result, c.to_ideal(n));
    }
  }
  return result;
}

// I^∨ = ∩_{u in G(I)} (x_i : x_i | u), for square-free I.
inline MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
  if (!ideal.is_square_free()) throw input_error("alexander_dual: ideal is not square-free");
  const std::size_t n = ideal.num_vars();
  MonomialIdeal result = MonomialIdeal::unit(n);
  for (const auto& u : ideal.generators()) {
    const auto s = u.support();
    result = intersect(result, MonomialIdeal::prime(n, s));
  }
  return result;
}

}  // namespace ntf
