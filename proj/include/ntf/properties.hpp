#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ntf/decomposition.hpp"
#include "ntf/ideal.hpp"

namespace ntf {

inline constexpr unsigned kDefaultMaxPower = 4;

// Ass(R/I^k) for k = 1..K.
inline AssProfile ass_of_powers(const MonomialIdeal& ideal, unsigned max_power) {
  if (max_power == 0) throw input_error("max power must be positive");
  AssProfile profile;
  MonomialIdeal current = ideal;
  for (unsigned k = 1; k <= max_power; ++k) {
    if (k > 1) current = multiply(current, ideal);
    profile.by_power[k] = associated_primes(current);
  }
  return profile;
}

enum class Verdict {
  ntf,         // Ass(I^k) ⊆ Ass(I) for every k checked
  nearly_ntf,  // Ass(I^m) = Min(I) up to k0, then inside Min(I) ∪ {p}
  fails,
};

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::ntf: return "ntf";
    case Verdict::nearly_ntf: return "nearly_ntf";
    case Verdict::fails: return "fails";
  }
  return "?";
}

// Outcome of a bounded check. The verdict only speaks for powers 1..bound.
// `profile` holds the powers actually computed: a check stops as soon as its
// verdict can no longer change.
struct NtfReport {
  unsigned bound = 0;
  AssProfile profile;
  PrimeSet min_primes;
  Verdict verdict = Verdict::fails;

  // nearly_ntf: the single exceptional prime (absent when there is none)
  // and the last power k0 with Ass(I^m) = Min(I) for all m <= k0.
  std::optional<PrimeSupport> exceptional_prime;
  unsigned threshold = 0;

  // fails: primes certifying the failure and the power where it was certified.
  std::vector<PrimeSupport> witness_primes;
  std::optional<unsigned> failure_power;

  // Square-free inputs only: whether I^k = I^(k), per computed power.
  std::map<unsigned, bool> symbolic_equals_ordinary;
};

namespace detail {

inline void require_bound(unsigned max_power) {
  if (max_power == 0) throw input_error("max power must be positive");
}

}  // namespace detail

// Ass(R/I^k) ⊆ Ass(R/I) for k = 1..K. Square-free inputs are additionally
// compared against I^(k) = I^k.
inline NtfReport is_ntf_up_to(const MonomialIdeal& ideal, unsigned max_power) {
  detail::require_bound(max_power);
  NtfReport report;
  report.bound = max_power;
  report.verdict = Verdict::ntf;
  const bool square_free = ideal.is_square_free();

  MonomialIdeal current = ideal;
  for (unsigned k = 1; k <= max_power; ++k) {
    if (k > 1) current = multiply(current, ideal);
    report.profile.by_power[k] = associated_primes(current);
    if (k == 1) report.min_primes = minimal_under_inclusion(report.profile.at(1));
    if (square_free) report.symbolic_equals_ordinary[k] = (current == symbolic_power(ideal, k));

    const PrimeSet& base = report.profile.at(1);
    std::vector<PrimeSupport> extra;
    for (const auto& p : report.profile.at(k)) {
      if (!base.contains(p)) extra.push_back(p);
    }
    if (!extra.empty()) {
      report.verdict = Verdict::fails;
      report.witness_primes = std::move(extra);
      report.failure_power = k;
      break;
    }
  }
  return report;
}

// Bounded nearly normally torsion-free check. `fails` is reported when
// Ass(I) != Min(I), or when two distinct non-minimal primes have appeared;
// either certifies failure regardless of the bound.
inline NtfReport is_nearly_ntf_up_to(const MonomialIdeal& ideal, unsigned max_power) {
  detail::require_bound(max_power);
  NtfReport report;
  report.bound = max_power;

  MonomialIdeal current = ideal;
  std::vector<PrimeSupport> exceptional;
  bool clean_so_far = true;
  for (unsigned k = 1; k <= max_power; ++k) {
    if (k > 1) current = multiply(current, ideal);
    report.profile.by_power[k] = associated_primes(current);
    if (k == 1) report.min_primes = minimal_under_inclusion(report.profile.at(1));
    if (ideal.is_square_free()) report.symbolic_equals_ordinary[k] = (current == symbolic_power(ideal, k));

    std::vector<PrimeSupport> embedded;
    for (const auto& p : report.profile.at(k)) {
      if (!report.min_primes.contains(p)) embedded.push_back(p);
    }
    if (k == 1 && !embedded.empty()) {
      report.verdict = Verdict::fails;
      report.witness_primes = embedded;
      report.failure_power = 1;
      return report;
    }
    if (clean_so_far && embedded.empty()) report.threshold = k;
    clean_so_far = clean_so_far && embedded.empty();
    for (const auto& p : embedded) {
      if (std::find(exceptional.begin(), exceptional.end(), p) == exceptional.end()) exceptional.push_back(p);
    }
    if (exceptional.size() >= 2) {
      report.verdict = Verdict::fails;
      report.witness_primes = exceptional;
      report.failure_power = k;
      return report;
    }
  }
  report.verdict = Verdict::nearly_ntf;
  if (!exceptional.empty()) report.exceptional_prime = exceptional.front();
  return report;
}

struct PersistenceReport {
  unsigned bound = 0;
  bool persistence = true;       // Ass(I^k) ⊆ Ass(I^{k+1})
  bool strong = true;            // (I^{k+1} : I) = I^k
  bool symbolic_strong = true;   // (I^(k+1) : I^(1)) = I^(k)
  std::optional<unsigned> first_persistence_violation;
  std::optional<unsigned> first_strong_violation;
  std::optional<unsigned> first_symbolic_strong_violation;
  std::optional<unsigned> first_violation;
};

// Checks the three persistence properties for k = 1..K-1.
inline PersistenceReport persistence_checks(const MonomialIdeal& ideal, unsigned max_power) {
  detail::require_bound(max_power);
  PersistenceReport report;
  report.bound = max_power;

  std::vector<MonomialIdeal> powers{MonomialIdeal::unit(ideal.num_vars()), ideal};
  for (unsigned k = 2; k <= max_power; ++k) powers.push_back(multiply(powers.back(), ideal));
  std::vector<MonomialIdeal> symbolic{MonomialIdeal::unit(ideal.num_vars())};
  for (unsigned k = 1; k <= max_power; ++k) symbolic.push_back(symbolic_power(ideal, k));

  std::vector<PrimeSet> ass{PrimeSet{}};
  for (unsigned k = 1; k <= max_power; ++k) ass.push_back(associated_primes(powers[k]));

  auto note = [](std::optional<unsigned>& slot, unsigned k) {
    if (!slot) slot = k;
  };
  for (unsigned k = 1; k < max_power; ++k) {
    if (!std::includes(ass[k + 1].begin(), ass[k + 1].end(), ass[k].begin(), ass[k].end())) {
      report.persistence = false;
      note(report.first_persistence_violation, k);
      note(report.first_violation, k);
    }
    if (colon(powers[k + 1], ideal) != powers[k]) {
      report.strong = false;
      note(report.first_strong_violation, k);
      note(report.first_violation, k);
    }
    if (colon(symbolic[k + 1], symbolic[1]) != symbolic[k]) {
      report.symbolic_strong = false;
      note(report.first_symbolic_strong_violation, k);
      note(report.first_violation, k);
    }
  }
  return report;
}

struct LocalizationEntry {
  std::size_t removed_var = 0;
  MonomialIdeal local;  // I(m \ {x_i}) in its restricted ring
  bool ntf = true;
  std::vector<PrimeSupport> witness_primes;  // when ntf fails, in the restricted ring
  std::optional<unsigned> failure_power;
};

struct LocalizationCriterionReport {
  unsigned bound = 0;
  bool precondition_holds = false;  // Ass(I) = Min(I)
  std::vector<LocalizationEntry> entries;
  bool predicted_nearly_ntf = false;
  std::optional<NtfReport> conclusion;
  // false only if the prediction holds but the direct check disagrees
  bool consistent = true;
};

// If Ass(I) = Min(I) and every I(m \ {x_i}) is normally torsion-free, then I
// is nearly normally torsion-free. Verifies the hypothesis up to K and
// re-checks the conclusion directly.
inline LocalizationCriterionReport localization_criterion_check(const MonomialIdeal& ideal,
                                                                unsigned max_power = kDefaultMaxPower) {
  detail::require_bound(max_power);
  LocalizationCriterionReport report;
  report.bound = max_power;
  const PrimeSet ass = associated_primes(ideal);
  report.precondition_holds = (ass == minimal_under_inclusion(ass));
  if (!report.precondition_holds) {
    report.consistent = true;
    return report;
  }

  const std::size_t n = ideal.num_vars();
  const PrimeSupport m = PrimeSupport::maximal(n);
  report.predicted_nearly_ntf = true;
  for (std::size_t i = 1; i <= n; ++i) {
    LocalizationEntry entry;
    entry.removed_var = i;
    entry.local = localization(ideal, m.without(i)).restricted;
    // Primes and the unit or zero ideal have no embedded primes at any power.
    if (!entry.local.is_zero() && !entry.local.is_unit()) {
      const NtfReport local = is_ntf_up_to(entry.local, max_power);
      entry.ntf = local.verdict == Verdict::ntf;
      entry.witness_primes = local.witness_primes;
      entry.failure_power = local.failure_power;
    }
    report.predicted_nearly_ntf = report.predicted_nearly_ntf && entry.ntf;
    report.entries.push_back(std::move(entry));
  }
  report.conclusion = is_nearly_ntf_up_to(ideal, max_power);
  report.consistent = !report.predicted_nearly_ntf || report.conclusion->verdict == Verdict::nearly_ntf;
  return report;
}

// The intersection-type ideal  (m \ {x_1})^{d_1} ∩ ... ∩ (m \ {x_n})^{d_n};
// a zero exponent leaves that prime out.
inline MonomialIdeal intersection_type_ideal(const std::vector<unsigned>& exponents) {
  const std::size_t n = exponents.size();
  if (n < 2) throw input_error("intersection-type ideals need at least two variables");
  MonomialIdeal out = MonomialIdeal::unit(n);
  for (std::size_t i = 1; i <= n; ++i) {
    if (exponents[i - 1] == 0) continue;
    out = intersect(out, power(PrimeSupport::maximal(n).without(i).to_ideal(), exponents[i - 1]));
  }
  return out;
}

}  // namespace ntf
