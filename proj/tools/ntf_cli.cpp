// Command-line front end. Exit codes: 0 pass, 1 violation or mismatch found,
// 2 usage or input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ntf/ntf.hpp"
#include "ntf/serialize.hpp"
#include "replay.hpp"
#include "search.hpp"

#ifndef NTF_FIXTURE_FILE
#define NTF_FIXTURE_FILE "tools/fixtures/replay.json"
#endif

namespace {

using ntf::Json;

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Options {
  unsigned max_power = ntf::kDefaultMaxPower;
  std::string format = "text";
};

// "@file" reads a file, "-" reads stdin, anything else is the ideal itself.
std::string read_input(const std::string& arg) {
  auto slurp = [](std::istream& in) { return std::string(std::istreambuf_iterator<char>(in), {}); };
  if (arg == "-") return slurp(std::cin);
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw ntf::input_error("cannot open " + arg.substr(1));
    return slurp(in);
  }
  return arg;
}

std::string primes_text(const ntf::PrimeSet& primes) {
  std::string out;
  for (const auto& p : primes) out += (out.empty() ? "" : " ") + ntf::to_text(p);
  return out.empty() ? "{}" : out;
}

std::string primes_text(const std::vector<ntf::PrimeSupport>& primes) {
  return primes_text(ntf::PrimeSet(primes.begin(), primes.end()));
}

std::string component_text(const ntf::IrreducibleComponent& c) {
  std::string s;
  for (const auto& [var, exp] : c.entries()) {
    s += (s.empty() ? "" : ",") + ("x" + std::to_string(var)) + (exp > 1 ? "^" + std::to_string(exp) : "");
  }
  return "(" + s + ")";
}

std::string list_text(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "{" + s + "}";
}

void emit(const Options& opt, const Json& json, const std::string& text) {
  if (opt.format == "json") {
    std::cout << json.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

// Edges as "1,2;2,3;3,1".
std::vector<ntf::VertexSet> parse_edges(const std::string& text) {
  std::vector<ntf::VertexSet> edges;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.find_first_not_of(" \t") == std::string::npos) continue;
    edges.push_back(ntf::parse_index_list(part));
  }
  return edges;
}

std::size_t infer_vertices(std::size_t given, const std::vector<ntf::VertexSet>& edges) {
  if (given) return given;
  std::size_t top = 0;
  for (const auto& e : edges) {
    for (std::size_t v : e) top = std::max(top, v);
  }
  return top;
}

int cmd_ideal(const Options& opt, const std::string& arg) {
  const auto ideal = ntf::parse_ideal(read_input(arg));
  Json j = ntf::to_json(ideal);
  j["text"] = ntf::to_text(ideal);
  j["radical"] = ntf::to_text(ntf::radical(ideal));
  j["support"] = ideal.support();
  j["square_free"] = ideal.is_square_free();
  std::ostringstream t;
  t << ntf::to_text(ideal) << "\n"
    << "generators: " << ideal.size() << "\n"
    << "radical: " << ntf::to_text(ntf::radical(ideal)) << "\n"
    << "support: " << list_text(ideal.support()) << "\n";
  emit(opt, j, t.str());
  return kPass;
}

int cmd_decompose(const Options& opt, const std::string& arg) {
  const auto ideal = ntf::parse_ideal(read_input(arg));
  const auto d = ntf::irreducible_decomposition(ideal);
  std::ostringstream t;
  for (std::size_t i = 0; i < d.size(); ++i) t << (i ? " ∩ " : "") << component_text(d[i]);
  t << "\n";
  emit(opt, Json{{"components", ntf::to_json(d)}}, t.str());
  return kPass;
}

int cmd_ass(const Options& opt, const std::string& arg) {
  const auto ideal = ntf::parse_ideal(read_input(arg));
  const auto profile = ntf::ass_of_powers(ideal, opt.max_power);
  std::ostringstream t;
  t << "bound: " << opt.max_power << "\n";
  for (const auto& [k, primes] : profile.by_power) t << "Ass(I^" << k << "): " << primes_text(primes) << "\n";
  emit(opt, Json{{"bound", opt.max_power}, {"ass", ntf::to_json(profile)}}, t.str());
  return kPass;
}

int cmd_check(const Options& opt, const std::string& what, const std::string& arg) {
  const auto ideal = ntf::parse_ideal(read_input(arg));
  std::ostringstream t;
  t << "bound: " << opt.max_power << "\n";
  if (what == "ntf" || what == "nearly-ntf") {
    const auto r = what == "ntf" ? ntf::is_ntf_up_to(ideal, opt.max_power) : ntf::is_nearly_ntf_up_to(ideal, opt.max_power);
    t << "verdict: " << ntf::to_string(r.verdict) << "\n";
    t << "Min(I): " << primes_text(r.min_primes) << "\n";
    for (const auto& [k, primes] : r.profile.by_power) t << "Ass(I^" << k << "): " << primes_text(primes) << "\n";
    if (r.verdict == ntf::Verdict::nearly_ntf) {
      t << "exceptional prime: " << (r.exceptional_prime ? ntf::to_text(*r.exceptional_prime) : "none") << "\n";
      t << "threshold: " << r.threshold << "\n";
    }
    if (r.verdict == ntf::Verdict::fails) {
      t << "witness primes: " << primes_text(r.witness_primes) << " at power " << *r.failure_power << "\n";
    }
    emit(opt, ntf::to_json(r), t.str());
    return r.verdict == ntf::Verdict::fails ? kViolation : kPass;
  }
  if (what == "persistence") {
    const auto r = ntf::persistence_checks(ideal, opt.max_power);
    t << "persistence: " << r.persistence << "\nstrong: " << r.strong << "\nsymbolic strong: " << r.symbolic_strong
      << "\n";
    if (r.first_violation) t << "first violation at k = " << *r.first_violation << "\n";
    emit(opt, ntf::to_json(r), t.str());
    return r.first_violation ? kViolation : kPass;
  }
  if (what == "normal") {
    const auto r = ntf::is_normal_up_to(ideal, opt.max_power);
    t << "normal up to: " << r.normal_up_to << "\n";
    if (r.first_failure) t << "first failure at k = " << *r.first_failure << ", witness " << ntf::to_text(*r.witness) << "\n";
    emit(opt, ntf::to_json(r), t.str());
    return r.first_failure ? kViolation : kPass;
  }
  if (what == "localization") {
    const auto r = ntf::localization_criterion_check(ideal, opt.max_power);
    t << "Ass(I) = Min(I): " << r.precondition_holds << "\n";
    for (const auto& e : r.entries) {
      t << "I(m \\ x" << e.removed_var << ") = " << ntf::to_text(e.local) << "  ntf: " << e.ntf << "\n";
    }
    t << "predicted nearly ntf: " << r.predicted_nearly_ntf << "\n";
    if (r.conclusion) t << "direct verdict: " << ntf::to_string(r.conclusion->verdict) << "\n";
    emit(opt, ntf::to_json(r), t.str());
    return r.consistent ? kPass : kViolation;
  }
  throw ntf::input_error("unknown check '" + what + "'");
}

int cmd_borel(const Options& opt, unsigned t_value, const std::string& u_text, const std::string& what) {
  const ntf::BorelSpec spec(t_value, ntf::parse_index_list(u_text));
  std::ostringstream t;
  Json j{{"t", spec.t()}, {"u", spec.indices()}};
  if (what == "gens") {
    for (const auto& row : ntf::borel_table(spec)) {
      for (std::size_t i = 0; i < row.size(); ++i) t << (i ? " " : "") << ntf::to_compact(row[i]);
      t << "\n";
    }
    j["ideal"] = ntf::to_json(ntf::borel_generators(spec));
    j["table"] = replay::table_json(ntf::borel_table(spec));
  } else if (what == "intervals") {
    const auto a = ntf::a_intervals(spec);
    for (std::size_t k = 0; k < a.intervals.size(); ++k) {
      t << "A_" << k + 1 << " = [" << a.intervals[k].lo << "," << a.intervals[k].hi << "]\n";
    }
    t << "unsupported: " << list_text(a.unsupported) << "\n";
    j.update(ntf::to_json(a));
  } else if (what == "gamma") {
    const auto g = ntf::linear_relation_graph(ntf::borel_generators(spec));
    for (const auto& e : g.edges) {
      t << e.i << "-" << e.j << "  x" << e.i << "*" << ntf::to_text(e.left) << " = x" << e.j << "*"
        << ntf::to_text(e.right) << "\n";
    }
    t << "components:";
    for (const auto& c : g.components) t << " " << list_text(c);
    t << "\n";
    j["gamma"] = ntf::to_json(g);
  } else if (what == "spread") {
    const auto g = ntf::linear_relation_graph(ntf::borel_generators(spec));
    const auto l = ntf::analytic_spread(spec);
    t << "r = " << g.rank() << ", s = " << g.components.size() << ", analytic spread = " << l << "\n";
    j["r"] = g.rank();
    j["s"] = g.components.size();
    j["analytic_spread"] = l;
  } else if (what == "classify") {
    const auto c = ntf::classify_ntf(spec);
    t << "criterion verdict: " << (c.ntf ? "ntf" : "not ntf") << " (" << c.reason << ")\n";
    j["criterion"] = Json{{"ntf", c.ntf}, {"reason", c.reason}};
    if (spec.degree() == 2 || spec.degree() == 3) {
      const auto d = spec.degree() == 2 ? ntf::classify_degree2(spec) : ntf::classify_degree3(spec);
      t << "degree " << spec.degree() << " verdict: " << ntf::to_string(d.verdict) << " (" << d.reason << ")\n";
      if (!d.witness_primes.empty()) t << "witness primes: " << primes_text(d.witness_primes) << "\n";
      j["degree_verdict"] = Json{{"verdict", ntf::to_string(d.verdict)},
                                 {"reason", d.reason},
                                 {"covered", d.covered},
                                 {"witness_primes", ntf::to_json(d.witness_primes)}};
    }
    const auto r = ntf::is_ntf_up_to(ntf::borel_generators(spec), opt.max_power);
    t << "bounded check up to " << opt.max_power << ": " << ntf::to_string(r.verdict) << "\n";
    j["bounded"] = ntf::to_json(r);
    emit(opt, j, t.str());
    // the criterion says ntf but the bounded check found an embedded prime
    return (c.ntf && r.verdict != ntf::Verdict::ntf) ? kViolation : kPass;
  } else {
    throw ntf::input_error("unknown borel query '" + what + "'");
  }
  emit(opt, j, t.str());
  return kPass;
}

struct GraphArgs {
  std::size_t vertices = 0;
  std::string edges;
  std::string edges2;
  std::size_t vertex = 0;
  std::size_t max_length = 5;
  bool all_edges = false;
};

int cmd_hypergraph(const Options& opt, const std::string& what, const GraphArgs& a) {
  const auto edges = parse_edges(a.edges);
  // a second graph, when given, shares the vertex labelling
  auto all_edges = edges;
  if (!a.edges2.empty()) {
    const auto more = parse_edges(a.edges2);
    all_edges.insert(all_edges.end(), more.begin(), more.end());
  }
  const ntf::Hypergraph h(infer_vertices(a.vertices, all_edges), edges);
  std::ostringstream t;
  Json j{{"hypergraph", ntf::to_json(h)}};
  if (what == "edge-ideal" || what == "cover-ideal") {
    const auto ideal = what == "edge-ideal" ? ntf::edge_ideal(h) : ntf::cover_ideal(h);
    t << ntf::to_text(ideal) << "\n";
    j["ideal"] = ntf::to_json(ideal);
  } else if (what == "covers") {
    const auto covers = ntf::minimal_vertex_covers(h);
    for (const auto& c : covers) t << list_text(c) << "\n";
    j["covers"] = covers;
  } else if (what == "special-cycles") {
    const auto cycles = ntf::special_odd_cycles(
        h, a.max_length, a.all_edges ? ntf::SpecialCondition::all_edges : ntf::SpecialCondition::cycle_edges);
    Json list = Json::array();
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.vertices.size(); ++i) t << c.vertices[i] << ", " << list_text(c.edges[i]) << ", ";
      t << c.vertices.front() << "\n";
      list.push_back(ntf::to_json(c));
    }
    j["cycles"] = list;
  } else if (what == "classify") {
    const auto c = ntf::classify_graph(h);
    t << ntf::to_string(c.kind) << "\n";
    if (!c.cycle.empty()) t << "odd cycle: " << list_text(c.cycle) << "\n";
    j["class"] = ntf::to_json(c);
  } else if (what == "decompose") {
    const auto d = ntf::almost_bipartite_decomposition(h);
    t << "cycle: " << list_text(d.cycle) << "\n";
    for (const auto& [i, s] : d.a_sets) t << "A_" << i << " = " << list_text(s) << "\n";
    for (const auto& [e, s] : d.b_sets) t << "B_{" << e.first << "," << e.second << "} = " << list_text(s) << "\n";
    t << "partition: " << d.partition_holds << ", parts bipartite: " << d.parts_bipartite << "\n";
    j["decomposition"] = ntf::to_json(d);
  } else if (what == "whisker") {
    const auto w = ntf::whisker(h, a.vertex);
    const auto base = ntf::ass_of_powers(ntf::cover_ideal(h), opt.max_power);
    const auto grown = ntf::ass_of_powers(ntf::cover_ideal(w), opt.max_power);
    t << "bound: " << opt.max_power << "\n";
    for (unsigned s = 1; s <= opt.max_power; ++s) {
      t << "s=" << s << "  Ass(J(G)^s): " << primes_text(base.at(s)) << "\n";
      t << "     Ass(J(H)^s): " << primes_text(grown.at(s)) << "\n";
    }
    j["whiskered"] = ntf::to_json(w);
    j["bound"] = opt.max_power;
    j["ass_base"] = ntf::to_json(base);
    j["ass_whiskered"] = ntf::to_json(grown);
  } else if (what == "glue-check") {
    const auto edges2 = parse_edges(a.edges2);
    const ntf::Hypergraph h2(h.num_vertices(), edges2);
    const auto r = ntf::verify_gluing(h, h2, opt.max_power);
    t << "bound: " << opt.max_power << "\n";
    for (const auto& [s, eq] : r.equal_by_power) t << "s=" << s << ": " << (eq ? "equal" : "DIFFERENT") << "\n";
    emit(opt, ntf::to_json(r), t.str());
    return r.holds ? kPass : kViolation;
  } else if (what == "partite") {
    const auto parts = ntf::is_d_uniform_d_partite(h);
    if (parts) {
      for (const auto& p : *parts) t << list_text(p) << "\n";
    } else {
      t << "not d-uniform d-partite\n";
    }
    j["parts"] = parts ? Json(*parts) : Json(nullptr);
  } else {
    throw ntf::input_error("unknown hypergraph query '" + what + "'");
  }
  emit(opt, j, t.str());
  return kPass;
}

int cmd_replay(const Options& opt, const std::string& name, const std::string& fixture_file) {
  const Json fixtures = replay::load_fixtures(fixture_file);
  std::vector<std::string> names;
  if (name == "all") {
    names = replay::case_names(fixtures);
  } else {
    if (!replay::find_case(fixtures, name)) {
      std::cerr << "unknown replay case '" << name << "'; known cases:\n";
      for (const auto& n : replay::case_names(fixtures)) std::cerr << "  " << n << "\n";
      return kUsage;
    }
    names = {name};
  }
  bool all_pass = true;
  Json results = Json::array();
  std::ostringstream t;
  for (const auto& n : names) {
    const auto o = replay::run_case(*replay::find_case(fixtures, n));
    all_pass = all_pass && o.pass;
    t << (o.pass ? "PASS " : "FAIL ") << o.name << "\n";
    for (const auto& m : o.mismatches) t << "    " << m << "\n";
    results.push_back(Json{{"name", o.name}, {"pass", o.pass}, {"mismatches", o.mismatches}});
  }
  emit(opt, Json{{"results", results}, {"pass", all_pass}}, t.str());
  return all_pass ? kPass : kViolation;
}

int cmd_search(const Options& opt, std::size_t cases, unsigned seed, std::size_t max_vars) {
  const auto r = search::nearly_ntf_persistence(cases, seed, max_vars, opt.max_power);
  std::ostringstream t;
  t << "cases: " << r.cases << "\nnearly ntf up to " << opt.max_power << ": " << r.nearly_ntf
    << "\n  with an exceptional prime: " << r.with_embedded << "\npersistence failures: " << r.persistence_failures
    << "\nstrong persistence failures: " << r.strong_failures
    << "\nsymbolic strong persistence failures: " << r.symbolic_strong_failures
    << "\nstrong without persistence: " << r.strong_without_persistence << "\n";
  for (const auto& e : r.examples) t << "  example: " << e << "\n";
  emit(opt,
       Json{{"bound", opt.max_power},
            {"cases", r.cases},
            {"nearly_ntf", r.nearly_ntf},
            {"with_exceptional_prime", r.with_embedded},
            {"persistence_failures", r.persistence_failures},
            {"strong_failures", r.strong_failures},
            {"symbolic_strong_failures", r.symbolic_strong_failures},
            {"strong_without_persistence", r.strong_without_persistence},
            {"examples", r.examples}},
       t.str());
  return r.strong_without_persistence == 0 ? kPass : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monomial ideal toolkit: associated primes of powers, torsion-freeness checks, "
               "cover ideals and t-spread Borel ideals"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--max-power,-K", opt.max_power, "Largest power examined")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string ideal_arg;
  auto* ideal_cmd = app.add_subcommand("ideal", "Canonical form of an ideal");
  ideal_cmd->add_option("ideal", ideal_arg, "Ideal as text, JSON, @file or -")->required();
  auto* decompose_cmd = app.add_subcommand("decompose", "Irreducible decomposition");
  decompose_cmd->add_option("ideal", ideal_arg)->required();
  auto* ass_cmd = app.add_subcommand("ass", "Associated primes of I^1..I^K");
  ass_cmd->add_option("ideal", ideal_arg)->required();

  std::string check_what;
  auto* check_cmd = app.add_subcommand("check", "Bounded property checks");
  check_cmd->add_option("property", check_what)
      ->required()
      ->check(CLI::IsMember({"ntf", "nearly-ntf", "persistence", "normal", "localization"}));
  check_cmd->add_option("ideal", ideal_arg)->required();

  unsigned t_value = 1;
  std::string u_text, borel_what = "gens";
  auto* borel_cmd = app.add_subcommand("borel", "t-spread principal Borel ideals");
  borel_cmd->add_option("--t", t_value, "Spread t")->required()->check(CLI::PositiveNumber);
  borel_cmd->add_option("--u", u_text, "Indices of u, e.g. 4,7 or x4,x7")->required();
  borel_cmd->add_option("query", borel_what)
      ->check(CLI::IsMember({"gens", "intervals", "gamma", "spread", "classify"}))
      ->capture_default_str();

  GraphArgs graph;
  std::string graph_what;
  auto* graph_cmd = app.add_subcommand("hypergraph", "Hypergraph and graph queries");
  graph_cmd->add_option("query", graph_what)
      ->required()
      ->check(CLI::IsMember({"edge-ideal", "cover-ideal", "covers", "special-cycles", "classify", "decompose",
                             "whisker", "glue-check", "partite"}));
  graph_cmd->add_option("--edges", graph.edges, "Edges as 1,2;2,3;...")->required();
  graph_cmd->add_option("--vertices,-n", graph.vertices, "Vertex count (default: largest vertex)");
  graph_cmd->add_option("--edges2", graph.edges2, "Second graph for glue-check");
  graph_cmd->add_option("--vertex", graph.vertex, "Vertex to whisker");
  graph_cmd->add_option("--max-length", graph.max_length, "Longest cycle searched")->capture_default_str();
  graph_cmd->add_flag("--all-edges", graph.all_edges, "Special means every edge meets the cycle at most twice");

  std::string replay_name, fixture_file = NTF_FIXTURE_FILE;
  auto* replay_cmd = app.add_subcommand("replay", "Rerun stored regression cases");
  replay_cmd->add_option("name", replay_name, "Case name or 'all'")->required();
  replay_cmd->add_option("--fixtures", fixture_file, "Fixture file")->capture_default_str();

  std::size_t search_cases = 200, search_vars = 5;
  unsigned search_seed = 1;
  auto* search_cmd = app.add_subcommand("search", "Random search: persistence of nearly ntf square-free ideals");
  search_cmd->add_option("--cases", search_cases, "Random ideals tried")->capture_default_str();
  search_cmd->add_option("--seed", search_seed, "Random seed")->capture_default_str();
  search_cmd->add_option("--max-vars", search_vars, "Largest ring size")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*ideal_cmd) return cmd_ideal(opt, ideal_arg);
    if (*decompose_cmd) return cmd_decompose(opt, ideal_arg);
    if (*ass_cmd) return cmd_ass(opt, ideal_arg);
    if (*check_cmd) return cmd_check(opt, check_what, ideal_arg);
    if (*borel_cmd) return cmd_borel(opt, t_value, u_text, borel_what);
    if (*graph_cmd) return cmd_hypergraph(opt, graph_what, graph);
    if (*replay_cmd) return cmd_replay(opt, replay_name, fixture_file);
    if (*search_cmd) return cmd_search(opt, search_cases, search_seed, search_vars);
  } catch (const ntf::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
