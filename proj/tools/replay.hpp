#pragma once

// Named regression cases: each case is an input plus expected values kept in
// a JSON fixture. A case passes when every expected key matches the value
// computed from its input.

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ntf/ntf.hpp"
#include "ntf/serialize.hpp"

namespace replay {

using ntf::Json;

// Monomial sets are compared as string-sorted lists of compact monomials, so
// fixtures can be written in any order-independent way.
inline Json monomial_set(const ntf::MonomialIdeal& ideal) {
  std::vector<std::string> out;
  for (const auto& g : ideal.generators()) out.push_back(ntf::to_compact(g));
  std::sort(out.begin(), out.end());
  return out;
}

inline Json table_json(const std::vector<std::vector<ntf::Monomial>>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json r = Json::array();
    for (const auto& m : row) r.push_back(ntf::to_compact(m));
    out.push_back(r);
  }
  return out;
}

inline std::string borel_name(const ntf::BorelSpec& s) {
  return "B_" + std::to_string(s.t()) + "(" + ntf::to_compact(s.u()) + ")";
}

inline ntf::Hypergraph graph_from(const Json& in, const char* key = "edges") {
  return ntf::Hypergraph(in.at("vertices").get<std::size_t>(), in.at(key).get<std::vector<ntf::VertexSet>>());
}

inline ntf::BorelSpec borel_from(const Json& in) {
  return ntf::BorelSpec(in.at("t").get<unsigned>(), in.at("u").get<std::vector<std::size_t>>());
}

inline Json decomposition_texts(const ntf::Decomposition& d, std::size_t n) {
  std::vector<std::string> out;
  for (const auto& c : d) {
    std::string s;
    const auto component = c.to_ideal(n);
    for (const auto& g : component.generators()) s += (s.empty() ? "" : ",") + ntf::to_compact(g);
    out.push_back("(" + s + ")");
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- handlers, one per case kind ------------------------------------------

inline Json run_ideal_report(const Json& in) {
  const auto ideal = ntf::parse_ideal(in.at("ideal").get<std::string>());
  const unsigned k = in.at("max_power").get<unsigned>();
  Json out;
  out["generators"] = monomial_set(ideal);
  out["decomposition"] = decomposition_texts(ntf::irreducible_decomposition(ideal), ideal.num_vars());
  const auto report = ntf::is_nearly_ntf_up_to(ideal, k);
  out["ass"] = ntf::to_json(ntf::ass_of_powers(ideal, k));
  out["verdict"] = ntf::to_string(report.verdict);
  out["exceptional_prime"] = ntf::optional_json(report.exceptional_prime);
  out["threshold"] = report.threshold;
  out["square_colon_equals_ideal"] = ntf::colon(ntf::power(ideal, 2), ideal) == ideal;
  if (in.contains("witnesses")) {
    Json w = Json::object();
    for (const auto& [power, v] : in.at("witnesses").items()) {
      const auto m = ntf::parse_monomial(v.get<std::string>(), ideal.num_vars());
      w[power] = monomial_set(ntf::colon(ntf::power(ideal, std::stoul(power)), m));
    }
    out["witness_colons"] = w;
  }
  return out;
}

inline Json run_duality(const Json& in) {
  const auto ideal = ntf::parse_ideal(in.at("ideal").get<std::string>());
  const auto h = graph_from(in);
  return Json{{"dual", monomial_set(ntf::alexander_dual(ideal))}, {"cover_ideal", monomial_set(ntf::cover_ideal(h))}};
}

inline Json run_cover_ass(const Json& in) {
  const auto g = graph_from(in);
  return Json{{"ass", ntf::to_json(ntf::ass_of_powers(ntf::cover_ideal(g), in.at("max_power").get<unsigned>()))}};
}

inline Json run_whisker(const Json& in) {
  const auto g = graph_from(in);
  const auto h = ntf::whisker(g, in.at("vertex").get<std::size_t>());
  const unsigned k = in.at("max_power").get<unsigned>();
  const auto base = ntf::ass_of_powers(ntf::cover_ideal(g), k);
  const auto grown = ntf::ass_of_powers(ntf::cover_ideal(h), k);
  Json added = Json::object();
  Json contains_base = Json::object();
  for (unsigned s = 1; s <= k; ++s) {
    ntf::PrimeSet extra;
    for (const auto& p : grown.at(s)) {
      // primes of the smaller ring are compared on their variable sets
      const bool old = std::any_of(base.at(s).begin(), base.at(s).end(),
                                   [&](const ntf::PrimeSupport& q) { return q.vars() == p.vars(); });
      if (!old) extra.insert(p);
    }
    added[std::to_string(s)] = ntf::to_json(extra);
    contains_base[std::to_string(s)] =
        std::all_of(base.at(s).begin(), base.at(s).end(), [&](const ntf::PrimeSupport& q) {
          return std::any_of(grown.at(s).begin(), grown.at(s).end(),
                             [&](const ntf::PrimeSupport& p) { return p.vars() == q.vars(); });
        });
  }
  return Json{{"added", added}, {"contains_base", contains_base}};
}

inline Json run_borel_table(const Json& in) {
  const auto spec = borel_from(in);
  const auto ideal = ntf::borel_generators(spec);
  Json out;
  out["table"] = table_json(ntf::borel_table(spec));
  const auto a = ntf::a_intervals(spec);
  out["intervals"] = ntf::to_json(a)["intervals"];
  out["unsupported"] = a.unsupported;
  if (in.value("localizations", false)) {
    Json loc = Json::object();
    const auto m = ntf::PrimeSupport::maximal(spec.num_vars());
    for (std::size_t i = 1; i <= spec.num_vars(); ++i) {
      loc[std::to_string(i)] = monomial_set(ntf::localization(ideal, m.without(i)).padded);
    }
    out["localizations"] = loc;
  }
  if (in.contains("delete")) {
    const auto d = ntf::deletion(ideal, in.at("delete").get<std::size_t>());
    const auto spec2 = ntf::recognize_borel(d);
    out["deletion"] = spec2 ? Json(borel_name(*spec2)) : Json(nullptr);
  }
  return out;
}

inline Json run_odd_cycle(const Json& in) {
  const auto spec = borel_from(in);
  const auto h = ntf::hypergraph_of(ntf::borel_generators(spec));
  ntf::HyperCycle target{in.at("cycle").at("vertices").get<std::vector<std::size_t>>(),
                         in.at("cycle").at("edges").get<std::vector<ntf::VertexSet>>()};
  target = ntf::canonical_cycle(target);
  const auto found = ntf::special_odd_cycles(h, target.vertices.size());
  const bool hit = std::find(found.begin(), found.end(), target) != found.end();
  return Json{{"found", hit ? ntf::to_json(target) : Json(nullptr)}};
}

inline Json run_borel_localization(const Json& in) {
  const auto spec = borel_from(in);
  const auto ideal = ntf::borel_generators(spec);
  const ntf::PrimeSupport p(spec.num_vars(), in.at("prime").get<std::vector<std::size_t>>());
  const auto loc = ntf::localization(ideal, p);
  const auto shifted = ntf::relabel_shift(loc.padded, in.at("shift").get<std::size_t>());
  Json out;
  Json table = Json::array();
  for (const auto& g : loc.padded.generators()) table.push_back(ntf::to_compact(g));
  std::sort(table.begin(), table.end());
  out["generators"] = table;
  out["generator_count"] = loc.padded.size();
  const auto target = ntf::recognize_borel(shifted);
  out["shifted"] = target ? Json(borel_name(*target)) : Json(nullptr);
  if (in.contains("maximal_prime_power")) {
    const auto pw = ntf::power(shifted, in.at("maximal_prime_power").get<unsigned>());
    out["maximal_prime_associated"] = ntf::maximal_ideal_witness(pw).has_value();
  }
  return out;
}

inline Json run_graph_decomposition(const Json& in) {
  const auto g = graph_from(in);
  const auto d = ntf::almost_bipartite_decomposition(g);
  Json out = ntf::to_json(d);
  return Json{{"cycle", out["cycle"]}, {"A", out["A"]}, {"B", out["B"]}, {"partition_holds", d.partition_holds}};
}

inline const std::map<std::string, std::function<Json(const Json&)>>& handlers() {
  static const std::map<std::string, std::function<Json(const Json&)>> table{
      {"ideal-report", run_ideal_report},
      {"duality", run_duality},
      {"cover-ass", run_cover_ass},
      {"whisker", run_whisker},
      {"borel-table", run_borel_table},
      {"odd-cycle", run_odd_cycle},
      {"borel-localization", run_borel_localization},
      {"graph-decomposition", run_graph_decomposition},
  };
  return table;
}

struct Outcome {
  std::string name;
  bool pass = true;
  std::vector<std::string> mismatches;
};

inline Outcome run_case(const Json& c) {
  Outcome o;
  o.name = c.at("name").get<std::string>();
  const auto& kind = c.at("kind").get<std::string>();
  const auto it = handlers().find(kind);
  if (it == handlers().end()) throw ntf::input_error("unknown case kind '" + kind + "'");
  const Json actual = it->second(c.at("input"));
  for (const auto& [key, expected] : c.at("expected").items()) {
    if (!actual.contains(key)) {
      o.pass = false;
      o.mismatches.push_back(key + ": not computed");
    } else if (actual[key] != expected) {
      o.pass = false;
      o.mismatches.push_back(key + ": expected " + expected.dump() + ", got " + actual[key].dump());
    }
  }
  return o;
}

inline Json load_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ntf::input_error("cannot open fixture file " + path);
  return Json::parse(in);
}

inline std::vector<std::string> case_names(const Json& fixtures) {
  std::vector<std::string> out;
  for (const auto& c : fixtures.at("cases")) out.push_back(c.at("name").get<std::string>());
  return out;
}

inline const Json* find_case(const Json& fixtures, const std::string& name) {
  for (const auto& c : fixtures.at("cases")) {
    if (c.at("name") == name) return &c;
  }
  return nullptr;
}

}  // namespace replay
