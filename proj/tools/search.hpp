#pragma once

// Random search for nearly ntf square-free ideals that lack (strong)
// persistence up to K. Reports what it finds; proves nothing either way.

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "ntf/ntf.hpp"

namespace search {

struct PersistenceSearch {
  std::size_t cases = 0;
  std::size_t nearly_ntf = 0;             // verdict nearly_ntf up to K
  std::size_t with_embedded = 0;          // ... and some power has the exceptional prime
  std::size_t persistence_failures = 0;
  std::size_t strong_failures = 0;
  std::size_t symbolic_strong_failures = 0;
  std::size_t strong_without_persistence = 0;  // must stay 0
  std::vector<std::string> examples;           // first few ideals failing a check
};

inline ntf::MonomialIdeal random_square_free(std::mt19937& rng, std::size_t n, std::size_t max_gens) {
  std::uniform_int_distribution<std::size_t> count(1, max_gens);
  std::bernoulli_distribution bit(0.5);
  while (true) {
    std::vector<ntf::Monomial> gens;
    const std::size_t m = count(rng);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<ntf::Exponent> e(n);
      for (auto& x : e) x = bit(rng) ? 1 : 0;
      gens.emplace_back(std::move(e));
    }
    ntf::MonomialIdeal ideal(n, std::move(gens));
    if (!ideal.is_unit() && !ideal.is_zero()) return ideal;
  }
}

inline PersistenceSearch nearly_ntf_persistence(std::size_t cases, unsigned seed, std::size_t max_vars,
                                                unsigned max_power) {
  if (max_vars < 2) throw ntf::input_error("the search needs at least two variables");
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> vars(2, max_vars);
  PersistenceSearch out;
  for (; out.cases < cases; ++out.cases) {
    const auto ideal = random_square_free(rng, vars(rng), 6);
    const auto verdict = ntf::is_nearly_ntf_up_to(ideal, max_power);
    if (verdict.verdict != ntf::Verdict::nearly_ntf) continue;
    ++out.nearly_ntf;
    out.with_embedded += verdict.exceptional_prime.has_value();
    const auto p = ntf::persistence_checks(ideal, max_power);
    out.persistence_failures += !p.persistence;
    out.strong_failures += !p.strong;
    out.symbolic_strong_failures += !p.symbolic_strong;
    out.strong_without_persistence += p.strong && !p.persistence;
    if ((!p.persistence || !p.strong) && out.examples.size() < 5) out.examples.push_back(ntf::to_text(ideal));
  }
  return out;
}

}  // namespace search
