#pragma once

#include <cctype>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "ntf/decomposition.hpp"
#include "ntf/graph.hpp"
#include "ntf/hypergraph.hpp"
#include "ntf/integrality.hpp"
#include "ntf/io.hpp"
#include "ntf/properties.hpp"
#include "ntf/tspread.hpp"

namespace ntf {

using Json = nlohmann::ordered_json;

// {"vars":3,"gens":[[0,4,0],[1,3,0]]}
inline MonomialIdeal ideal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("gens")) {
    throw input_error("ideal JSON needs \"vars\" and \"gens\"");
  }
  if (!j["vars"].is_number_unsigned() || j["vars"].get<std::size_t>() == 0) {
    throw input_error("\"vars\" must be a positive integer");
  }
  const std::size_t n = j["vars"].get<std::size_t>();
  if (!j["gens"].is_array()) throw input_error("\"gens\" must be an array");
  std::vector<Monomial> gens;
  std::size_t index = 0;
  for (const auto& g : j["gens"]) {
    if (!g.is_array() || g.size() != n) {
      throw input_error("generator " + std::to_string(index) + " must list exactly " + std::to_string(n) +
                        " exponents");
    }
    std::vector<Exponent> e;
    for (const auto& x : g) {
      if (!x.is_number_unsigned() || x.get<std::uint64_t>() > std::numeric_limits<Exponent>::max()) {
        throw input_error("generator " + std::to_string(index) + " has a malformed exponent");
      }
      e.push_back(x.get<Exponent>());
    }
    gens.emplace_back(std::move(e));
    ++index;
  }
  return MonomialIdeal(n, std::move(gens));
}

// Text or JSON, whichever the input looks like.
inline MonomialIdeal parse_ideal(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  if (first < text.size() && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw parse_error("malformed JSON", e.byte == 0 ? 0 : e.byte - 1);
    }
    return ideal_from_json(j);
  }
  return detail::parse_ideal_text(text);
}

inline Json to_json(const Monomial& m) { return Json(m.exponents()); }

inline Json to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(to_json(g));
  return Json{{"vars", ideal.num_vars()}, {"gens", gens}};
}

inline Json to_json(const PrimeSupport& p) { return Json(p.vars()); }

inline Json to_json(const PrimeSet& primes) {
  Json out = Json::array();
  for (const auto& p : primes) out.push_back(to_json(p));
  return out;
}

inline Json to_json(const std::vector<PrimeSupport>& primes) {
  Json out = Json::array();
  for (const auto& p : primes) out.push_back(to_json(p));
  return out;
}

inline Json to_json(const AssProfile& profile) {
  Json out = Json::object();
  for (const auto& [k, primes] : profile.by_power) out[std::to_string(k)] = to_json(primes);
  return out;
}

inline Json to_json(const IrreducibleComponent& c) {
  Json out = Json::array();
  for (const auto& [var, exp] : c.entries()) out.push_back(Json{{"var", var}, {"exp", exp}});
  return out;
}

inline Json to_json(const Decomposition& d) {
  Json out = Json::array();
  for (const auto& c : d) out.push_back(to_json(c));
  return out;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_arithmetic_v<T>) {
    return *v;
  } else {
    return to_json(*v);
  }
}

inline Json to_json(const NtfReport& r) {
  Json out{{"bound", r.bound},
           {"verdict", to_string(r.verdict)},
           {"min_primes", to_json(r.min_primes)},
           {"ass", to_json(r.profile)}};
  if (r.verdict == Verdict::nearly_ntf) {
    out["exceptional_prime"] = optional_json(r.exceptional_prime);
    out["threshold"] = r.threshold;
  }
  if (r.verdict == Verdict::fails) {
    out["witness_primes"] = to_json(r.witness_primes);
    out["failure_power"] = optional_json(r.failure_power);
  }
  if (!r.symbolic_equals_ordinary.empty()) {
    Json s = Json::object();
    for (const auto& [k, eq] : r.symbolic_equals_ordinary) s[std::to_string(k)] = eq;
    out["symbolic_equals_ordinary"] = s;
  }
  return out;
}

inline Json to_json(const PersistenceReport& r) {
  return Json{{"bound", r.bound},
              {"persistence", r.persistence},
              {"strong", r.strong},
              {"symbolic_strong", r.symbolic_strong},
              {"first_persistence_violation", optional_json(r.first_persistence_violation)},
              {"first_strong_violation", optional_json(r.first_strong_violation)},
              {"first_symbolic_strong_violation", optional_json(r.first_symbolic_strong_violation)},
              {"first_violation", optional_json(r.first_violation)}};
}

inline Json to_json(const NormalityReport& r) {
  return Json{{"bound", r.bound},
              {"normal_up_to", r.normal_up_to},
              {"first_failure", optional_json(r.first_failure)},
              {"witness", r.witness ? Json(to_text(*r.witness)) : Json(nullptr)}};
}

inline Json to_json(const LocalizationCriterionReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back(Json{{"removed_var", e.removed_var},
                           {"local", to_json(e.local)},
                           {"ntf", e.ntf},
                           {"witness_primes", to_json(e.witness_primes)},
                           {"failure_power", optional_json(e.failure_power)}});
  }
  return Json{{"bound", r.bound},
              {"precondition_holds", r.precondition_holds},
              {"predicted_nearly_ntf", r.predicted_nearly_ntf},
              {"consistent", r.consistent},
              {"localizations", entries},
              {"conclusion", r.conclusion ? to_json(*r.conclusion) : Json(nullptr)}};
}

inline Json to_json(const Hypergraph& h) { return Json{{"vertices", h.num_vertices()}, {"edges", h.edges()}}; }

inline Json to_json(const HyperCycle& c) { return Json{{"vertices", c.vertices}, {"edges", c.edges}}; }

inline Json to_json(const GraphClass& c) {
  return Json{{"kind", to_string(c.kind)},
              {"induced_odd_cycles", c.induced_odd_cycle_count},
              {"cycle", c.cycle}};
}

inline Json to_json(const AlmostBipartiteDecomposition& d) {
  Json a = Json::object(), b = Json::object();
  for (const auto& [i, s] : d.a_sets) a[std::to_string(i)] = s;
  for (const auto& [e, s] : d.b_sets) b[std::to_string(e.first) + "," + std::to_string(e.second)] = s;
  return Json{{"cycle", d.cycle},
              {"A", a},
              {"B", b},
              {"partition_holds", d.partition_holds},
              {"parts_bipartite", d.parts_bipartite}};
}

inline Json to_json(const GluingReport& r) {
  Json per = Json::object();
  for (const auto& [s, eq] : r.equal_by_power) {
    per[std::to_string(s)] = Json{{"equal", eq}, {"glued", to_json(r.ass_glued.at(s))}, {"union", to_json(r.ass_union.at(s))}};
  }
  return Json{{"kind", r.kind == GluingKind::shared_vertex ? "shared_vertex" : "shared_edge"},
              {"bound", r.bound},
              {"glued", to_json(r.glued)},
              {"powers", per},
              {"holds", r.holds}};
}

inline Json to_json(const LinearRelationGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    edges.push_back(Json{{"edge", {e.i, e.j}}, {"witness", {to_text(e.left), to_text(e.right)}}});
  }
  return Json{{"vertices", g.vertices},
              {"components", g.components},
              {"edges", edges},
              {"equigenerated", g.equigenerated}};
}

inline Json to_json(const AIntervals& a) {
  Json iv = Json::array();
  for (const auto& i : a.intervals) iv.push_back(Json::array({i.lo, i.hi}));
  return Json{{"intervals", iv}, {"unsupported", a.unsupported}};
}

}  // namespace ntf
