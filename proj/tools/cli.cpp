#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ttpack/canonical.hpp"
#include "ttpack/constructions.hpp"
#include "ttpack/cover.hpp"
#include "ttpack/dense_factor.hpp"
#include "ttpack/embed.hpp"
#include "ttpack/error.hpp"
#include "ttpack/io.hpp"
#include "ttpack/packing.hpp"
#include "ttpack/ramsey.hpp"
#include "ttpack/rational.hpp"
#include "ttpack/report.hpp"
#include "ttpack/rng.hpp"

namespace ttpack::cli {
namespace {

struct Globals {
  std::uint64_t seed = 1;
  int jobs = 1;
  std::uint64_t budget = packing::kDefaultBudget;
  std::string format = "json";
  std::string out;
  std::string manifest;
};

struct Outcome {
  Report report;
  int exit_code = kSuccess;
  // Replaces the text rendering (fixture output).
  std::optional<std::string> raw_text;
  // Bytes the input digest is taken over, besides the parameters.
  std::string input;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

Json small_json(const SmallDigraph& t) { return graph_json(OrientedGraph::from_small(t)); }

Json checks_json(const std::vector<std::pair<std::string, bool>>& checks) {
  Json out = Json::array();
  for (const auto& [name, ok] : checks) out.push_back({{"check", name}, {"holds", ok}});
  return out;
}

Json packing_witness(const Packing& p) {
  Json w = {{"kind", "packing"}};
  w.update(to_json(p));
  return w;
}

bool all_hold(const std::vector<std::pair<std::string, bool>>& checks) {
  for (const auto& c : checks) {
    if (!c.second) return false;
  }
  return true;
}

// "a=1,b=2/3" -> {a: "1", b: "2/3"}
std::map<std::string, std::string> parse_params(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidInput("parameter '" + item + "' is not key=value");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

const std::string& need(const std::map<std::string, std::string>& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) throw InvalidInput("missing parameter '" + key + "'");
  return it->second;
}

int need_int(const std::map<std::string, std::string>& params, const std::string& key) {
  const std::string& text = need(params, key);
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::logic_error&) {
    throw InvalidInput("parameter '" + key + "' must be an integer");
  }
}

// Sizes given as "1;2;2;2" inside --params.
std::vector<int> need_sizes(const std::map<std::string, std::string>& params, const std::string& key) {
  std::vector<int> sizes;
  std::stringstream in(need(params, key));
  std::string item;
  while (std::getline(in, item, ';')) sizes.push_back(std::stoi(item));
  return sizes;
}

PatternDag load_pattern(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) return PatternDag::from_graph(parse_graph(read_file(spec.substr(5))).graph);
  return PatternDag::parse(spec);
}

// ---------------------------------------------------------------- ramsey

Outcome ramsey_verify(const Globals& g, const std::string& quantity_text, int k) {
  const auto quantity = ramsey::parse_quantity(quantity_text);
  Outcome o;
  o.report.command = "ramsey verify";
  o.report.parameters = {{"quantity", ramsey::to_string(quantity)}, {"k", k}};
  ramsey::RamseyVerdict v;
  switch (quantity) {
    case ramsey::Quantity::kF:
      v = ramsey::verify_f(k, g.jobs);
      break;
    case ramsey::Quantity::kFStar:
      v = ramsey::verify_f_star(k, g.jobs);
      break;
    case ramsey::Quantity::kG:
      v = ramsey::verify_g(k, g.jobs);
      break;
  }
  Json& r = o.report.result;
  r["quantity"] = ramsey::to_string(v.quantity);
  r["k"] = v.k;
  r["value"] = v.value;
  r["certified"] = v.certified;
  r["lower_classes"] = v.lower_classes;
  if (v.upper_check) {
    Json up = {{"n", v.upper_check->n},
               {"classes_examined", v.upper_check->classes_examined},
               {"holds", v.upper_check->holds}};
    if (v.upper_check->raw_orientations) up["raw_orientations"] = *v.upper_check->raw_orientations;
    if (v.upper_check->raw_violations) up["raw_violations"] = *v.upper_check->raw_violations;
    r["upper_check"] = up;
  } else {
    r["upper_check"] = nullptr;
  }
  r["checks"] = checks_json(v.checks);
  if (v.lower_witness) {
    Json w = {{"kind", "lower_witness"}, {"graph", small_json(*v.lower_witness)}};
    if (v.witness_vertex) w["vertex"] = *v.witness_vertex;
    o.report.witnesses.push_back(w);
  }
  o.exit_code = all_hold(v.checks) && (!v.upper_check || v.upper_check->holds) ? kSuccess : kNegative;
  return o;
}

Outcome ramsey_find_free(const Globals& g, int k, int n, int restarts, std::int64_t flips) {
  Outcome o;
  o.report.command = "ramsey find-free";
  ramsey::LocalSearchParams params;
  params.restarts = restarts;
  params.flips = flips;
  params.seed = g.seed;
  o.report.parameters = {{"k", k}, {"n", n}, {"restarts", restarts}, {"flips", flips}, {"seed", g.seed}};
  const auto found = ramsey::find_tt_free(k, n, params);
  Json& r = o.report.result;
  r["found"] = found.tournament.has_value();
  r["restarts_used"] = found.restarts_used;
  r["flips_used"] = found.flips_used;
  if (found.tournament) {
    if (found.tournament->n() <= kMaxCanonicalVertices) {
      r["canonical_code"] = canonical_code(*found.tournament).to_string();
    }
    o.report.witnesses.push_back({{"kind", "tt_free_tournament"}, {"graph", small_json(*found.tournament)}});
  } else {
    o.exit_code = kBudget;
  }
  return o;
}

Outcome ramsey_table(const std::string& which) {
  Outcome o;
  o.report.command = "ramsey table";
  o.report.parameters = {{"which", which}};
  std::string text;
  if (which == "tt4-free-7") {
    const SmallDigraph t = ramsey::tt4_free_7();
    text = "# The unique TT_4-free tournament on 7 vertices (canonical labelling)\n" + format_graph(t);
    o.report.result["canonical_code"] = canonical_code(t).to_string();
  } else if (which == "tt3-factor-6") {
    const auto& table = ramsey::tt_factor_table(6, 3);
    text = ramsey::format_factor_table(table);
    o.report.result["classes"] = table.classes;
    o.report.result["factored"] = table.entries.size();
  } else {
    throw InvalidInput("unknown table '" + which + "' (expected tt4-free-7 or tt3-factor-6)");
  }
  o.report.result["text"] = text;
  o.raw_text = text;
  return o;
}

Outcome enumerate_cmd(const Globals& g, int n, bool codes) {
  Outcome o;
  o.report.command = "enumerate";
  o.report.parameters = {{"n", n}, {"codes", codes}};
  const auto& classes = ramsey::tournaments(n, g.jobs);
  o.report.result["n"] = n;
  o.report.result["classes"] = classes.size();
  if (codes) {
    Json list = Json::array();
    for (const auto& t : classes) list.push_back(canonical_code(t).to_string());
    o.report.result["codes"] = std::move(list);
  }
  return o;
}

// ---------------------------------------------------------------- cover

Outcome cover_cmd(const Globals& g, int k, int t, int r, bool tight, const std::string& input) {
  Outcome o;
  o.report.command = "cover";
  PartitionedHost host;
  if (!input.empty()) {
    o.input = read_file(input);
    host = parse_graph(o.input).partitioned();
    o.report.parameters = {{"k", k}, {"tight", tight}, {"input", input}};
  } else {
    if (r == 0) r = tight ? 20 : cover::r_k(k);
    if (t < 1) throw InvalidInput("--t must be at least 1");
    const std::vector<int> sizes(static_cast<std::size_t>(r), t);
    host = PartitionedHost(random_orientation(UndirectedGraph::complete_multipartite(sizes), g.seed),
                           contiguous_classes(sizes));
    o.report.parameters = {{"k", k}, {"t", t}, {"r", r}, {"tight", tight}, {"seed", g.seed}};
  }
  if (tight && k != 4) throw InvalidInput("--tight applies to k = 4 only");
  const auto c = tight ? cover::cover_multipartite_k4_tight(host) : cover::cover_multipartite(host, {k, 0, 0});
  const auto violation = packing_violation(host.graph(), c.packing);
  std::vector<int> uncovered_classes;
  for (int v : bits::to_vector(c.packing.uncovered)) uncovered_classes.push_back(host.class_of(v));
  std::sort(uncovered_classes.begin(), uncovered_classes.end());
  const bool distinct =
      std::adjacent_find(uncovered_classes.begin(), uncovered_classes.end()) == uncovered_classes.end();
  Json& res = o.report.result;
  res["k"] = k;
  res["t"] = host.uniform_class_size().value_or(0);
  res["r"] = c.r;
  res["f_star"] = c.f_star_k;
  res["path"] = c.path;
  res["copies"] = c.packing.embeddings.size();
  res["uncovered_count"] = c.packing.uncovered_count();
  res["uncovered"] = bits::to_vector(c.packing.uncovered);
  res["guaranteed_max_uncovered"] = c.guaranteed_max_uncovered;
  res["uncovered_in_distinct_classes"] = distinct;
  res["valid"] = !violation.has_value();
  o.report.witnesses.push_back(packing_witness(c.packing));
  const bool ok = !violation && distinct &&
                  static_cast<int>(c.packing.uncovered_count()) <= c.guaranteed_max_uncovered;
  o.exit_code = ok ? kSuccess : kNegative;
  return o;
}

// ---------------------------------------------------------------- embed

Json failure_json(const std::optional<embed::EmbedFailure>& f) {
  if (!f) return nullptr;
  return {{"p", f->p}, {"q", f->q}, {"reason", f->reason}};
}

struct EmbedOptions {
  int h = 1;
  int k = 2;
  std::string eta = "1";
  std::string mu = "1/100";
  int w = 100;
  int b = 0;
  double p = 0.5;
  std::string policy = "report";
  std::string input;
};

Outcome embed_cmd(const Globals& g, const EmbedOptions& opt) {
  Outcome o;
  o.report.command = "embed";
  embed::EmbedParams params;
  params.h = opt.h;
  params.k = opt.k;
  params.eta = parse_rational(opt.eta);
  params.mu = parse_rational(opt.mu);
  const auto policy = opt.policy == "strict" ? embed::Policy::kStrict : embed::Policy::kReport;
  if (opt.policy != "strict" && opt.policy != "report") throw InvalidInput("--policy must be strict or report");

  OrientedGraph graph;
  std::vector<std::vector<int>> classes;
  Json parameters = {{"h", opt.h},        {"k", opt.k},           {"eta", to_string(params.eta)},
                     {"mu", to_string(params.mu)}, {"policy", opt.policy}};
  if (!opt.input.empty()) {
    o.input = read_file(opt.input);
    auto file = parse_graph(o.input);
    if (!file.has_classes()) throw InvalidInput("embed input needs class annotations");
    classes = file.classes;
    graph = embed::drop_backward_arcs(file.graph, classes);
    parameters["input"] = opt.input;
  } else {
    const int size = opt.b > 0 ? opt.b : opt.w;
    const std::vector<int> sizes(static_cast<std::size_t>(opt.k), size);
    graph = random_layered(sizes, opt.p, g.seed);
    classes = contiguous_classes(sizes);
    parameters["p"] = opt.p;
    parameters["seed"] = g.seed;
  }
  Json& r = o.report.result;
  if (opt.b > 0) {
    parameters["b"] = opt.b;
    const auto res = embed::greedy_pack_tthk(graph, classes, params, opt.b, policy);
    r["mode"] = "greedy_pack";
    r["copies"] = res.packing.embeddings.size();
    r["target"] = to_string(res.target);
    r["target_reached"] = res.target_reached;
    r["stop_reason"] = res.stop_reason;
    r["final_working_size"] = res.final_working_size;
    r["last_failure"] = failure_json(res.last_failure);
    r["inequality"] = embed::packing_inequality(params, opt.b).exact;
    r["precondition_violations"] = res.precondition_violations;
    r["valid"] = !packing_violation(graph, res.packing).has_value();
    o.report.witnesses.push_back(packing_witness(res.packing));
    o.exit_code = res.target_reached ? kSuccess : kNegative;
  } else {
    params.w = opt.input.empty() ? opt.w : 0;
    parameters["w"] = opt.w;
    const auto res = embed::embed_tthk(embed::LayeredInstance(graph, classes), params, policy);
    r["mode"] = "embed";
    r["success"] = res.success;
    r["parts"] = res.parts;
    r["failure"] = failure_json(res.failure);
    r["steps"] = res.trace.size();
    r["bound_violations"] = res.bound_violations;
    r["precondition_violations"] = res.precondition_violations;
    if (res.success) {
      const auto packing = make_packing(graph, PatternDag::blowup_transitive(opt.h, opt.k), {res.embedding()});
      r["valid"] = !packing_violation(graph, packing).has_value();
      o.report.witnesses.push_back(packing_witness(packing));
    }
    o.exit_code = res.success ? kSuccess : kNegative;
  }
  o.report.parameters = std::move(parameters);
  return o;
}

// ---------------------------------------------------------------- pack

Outcome pack_cmd(const Globals& g, const std::string& pattern_spec, const std::string& input, int tournament,
                 const std::string& mode_text) {
  Outcome o;
  o.report.command = "pack";
  const PatternDag pattern = load_pattern(pattern_spec);
  if (mode_text != "exact" && mode_text != "greedy") throw InvalidInput("--mode must be exact or greedy");
  const auto mode = mode_text == "exact" ? packing::Mode::kExact : packing::Mode::kGreedy;
  OrientedGraph host;
  Json parameters = {{"pattern", pattern.name()}, {"mode", mode_text}, {"budget", g.budget}};
  if (!input.empty()) {
    o.input = read_file(input);
    host = parse_graph(o.input).graph;
    parameters["input"] = input;
  } else if (tournament > 0) {
    host = random_tournament(tournament, g.seed);
    parameters["tournament"] = tournament;
    parameters["seed"] = g.seed;
  } else {
    throw InvalidInput("pack needs --input or --tournament");
  }
  o.report.parameters = std::move(parameters);
  const auto bound = packing::max_packing(host, pattern, mode, g.budget);
  Json& r = o.report.result;
  r["n"] = host.n();
  r["lower"] = bound.lower;
  r["upper"] = bound.upper;
  r["optimal"] = bound.optimal;
  r["nodes"] = bound.nodes;
  r["uncovered_count"] = bound.witness.uncovered_count();
  r["valid"] = !packing_violation(host, bound.witness).has_value();
  o.report.witnesses.push_back(packing_witness(bound.witness));
  if (mode == packing::Mode::kExact && !bound.optimal) o.exit_code = kBudget;
  return o;
}

// ---------------------------------------------------------------- constructions

Outcome construct_cmd(const Globals& g, const std::string& which, const std::string& params_text, bool randomize) {
  Outcome o;
  o.report.command = "construct";
  const auto params = parse_params(params_text);
  const std::optional<std::uint64_t> seed = randomize ? std::optional<std::uint64_t>(g.seed) : std::nullopt;
  constructions::ConstructionOutput c;
  if (which == "prop2") {
    c = params.count("sizes") ? constructions::prop2_graph_sizes(need_sizes(params, "sizes"), seed)
                              : constructions::prop2_graph(need_int(params, "n"),
                                                           parse_rational(need(params, "gamma")), seed);
  } else if (which == "star") {
    c = constructions::star_example(need_int(params, "m"), need_int(params, "h"),
                                    parse_rational(need(params, "alpha")));
  } else if (which == "fblowup") {
    c = constructions::f_blowup(need_int(params, "k"), need_int(params, "class_size"));
  } else if (which == "tt4") {
    c = params.count("sizes") ? constructions::tt4_lower_sizes(need_sizes(params, "sizes"), seed)
                              : constructions::tt4_lower(need_int(params, "n"),
                                                         parse_rational(need(params, "gamma")), seed);
  } else {
    throw InvalidInput("unknown construction '" + which + "' (expected prop2, star, fblowup or tt4)");
  }
  Json parameters = {{"which", which}, {"params", params}, {"randomize", randomize}};
  if (randomize) parameters["seed"] = g.seed;
  o.report.parameters = std::move(parameters);
  o.report.result = to_json(c);
  o.report.result["n"] = c.host.n();
  o.report.result["claims_consistent"] = c.claims_consistent();
  o.exit_code = c.claims_consistent() ? kSuccess : kNegative;
  return o;
}

Outcome verify_construction_cmd(const std::string& input, int exact_limit) {
  Outcome o;
  o.report.command = "verify-construction";
  o.input = read_file(input);
  Json j;
  try {
    j = Json::parse(o.input);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("input is not JSON: ") + e.what());
  }
  // Accept either a full `construct` report or the bare construction.
  const Json& body = j.contains("result") && j.contains("command") ? j.at("result") : j;
  const auto c = constructions::construction_from_json(body);
  o.report.parameters = {{"input", input}, {"exact_limit", exact_limit}};
  const auto check = constructions::verify_construction(c, exact_limit);
  o.report.result = to_json(check);
  o.report.result["which"] = c.which;
  o.report.result["claimed_packing_upper"] = c.claimed_packing_upper;
  o.report.result["claimed_min_degree"] = c.claimed_min_degree;
  if (check.exact) o.report.witnesses.push_back(packing_witness(check.exact->witness));
  o.exit_code = check.ok() ? kSuccess : kNegative;
  return o;
}

// ---------------------------------------------------------------- factor

Outcome factor_cmd(const Globals& g, const std::string& pattern_spec, const std::string& input,
                   const std::string& method_text, int g_h) {
  Outcome o;
  o.report.command = "factor";
  if (input.empty()) throw InvalidInput("factor needs --input");
  o.input = read_file(input);
  const OrientedGraph host = parse_graph(o.input).graph;
  const PatternDag pattern = load_pattern(pattern_spec);
  std::string method = method_text;
  if (method == "auto") {
    if (pattern.name() == "ttk:2") {
      method = "matching";
    } else if (pattern.name() == "ttk:3" && 6 * host.host().min_degree() >= 5 * host.n()) {
      method = "sharp";
    } else {
      method = "theorem";
    }
  }
  o.report.parameters = {{"pattern", pattern.name()}, {"input", input}, {"method", method}, {"budget", g.budget},
                         {"g_h", g_h}};
  dense::FactorOutcome f;
  if (method == "matching") {
    if (pattern.name() != "ttk:2") throw InvalidInput("matching method needs pattern ttk:2");
    f = dense::tt2_factor(host);
  } else if (method == "sharp") {
    if (pattern.name() != "ttk:3") throw InvalidInput("sharp method needs pattern ttk:3");
    f = dense::tt3_factor(host, g.budget);
  } else if (method == "theorem") {
    f = dense::h_factor_dense(host, pattern, g_h, g.budget);
  } else {
    throw InvalidInput("--method must be auto, matching, sharp or theorem");
  }
  Json& r = o.report.result;
  r["found"] = f.found;
  r["failure"] = f.failure;
  r["warnings"] = f.warnings;
  r["plan"] = f.plan.to_json();
  r["copies"] = f.packing.embeddings.size();
  o.report.witnesses.push_back(packing_witness(f.packing));
  o.exit_code = f.found ? kSuccess : (f.budget_exhausted ? kBudget : kNegative);
  return o;
}

// ---------------------------------------------------------------- output

void render_text(const Outcome& o, std::ostream& out) {
  if (o.raw_text) {
    out << *o.raw_text;
    return;
  }
  out << "command: " << o.report.command << '\n';
  for (const auto& [key, value] : o.report.result.items()) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

void emit(const Globals& g, Outcome& o, std::ostream& out) {
  std::ostringstream buffer;
  if (g.format == "text") {
    render_text(o, buffer);
  } else {
    buffer << o.report.to_json().dump(2) << '\n';
  }
  if (g.out.empty()) {
    out << buffer.str();
    return;
  }
  std::ofstream file(g.out, std::ios::binary);
  if (!file) throw InvalidInput("cannot write '" + g.out + "'");
  file << buffer.str();
}

// Report digest without the timing field, which is the only part of a
// report that varies between identical runs.
std::string output_digest(const Report& report) {
  Json j = report.to_json();
  j.erase("elapsed_ms");
  return sha256_hex(j.dump());
}

// RunManifest: what is needed to reproduce a run and check its output.
void write_manifest(const Globals& g, const std::vector<std::string>& args, const Outcome& o) {
  Json m;
  m["command_line"] = args;
  m["seed"] = g.seed;
  m["jobs"] = g.jobs;
  m["budget"] = g.budget;
  m["tables"] = {
      {"tt4-free-7", canonical_code(ramsey::tt4_free_7()).to_string()},
      {"tt3-factor-6", sha256_hex(ramsey::format_factor_table(ramsey::tt_factor_table(6, 3)))},
  };
  m["input_digest"] = o.report.input_digest;
  m["output_digest"] = output_digest(o.report);
  std::ofstream file(g.manifest, std::ios::binary);
  if (!file) throw InvalidInput("cannot write '" + g.manifest + "'");
  file << m.dump(2) << '\n';
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transitive-tournament packing, covering and Ramsey verification", "ttpack"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads for enumeration")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--budget", g.budget, "Branch-and-bound node budget")->capture_default_str();
  app.add_option("--format", g.format, "Output format")->capture_default_str()->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", g.out, "Write output to this file");
  app.add_option("--manifest", g.manifest, "Also write a run manifest (JSON) to this file");

  auto* ramsey_cmd = app.add_subcommand("ramsey", "Ramsey-type verdicts and tables");
  ramsey_cmd->require_subcommand(1);
  std::string quantity = "f";
  int rk = 3;
  auto* verify = ramsey_cmd->add_subcommand("verify", "Certify f(k), f*(k) or g(k)");
  verify->add_option("--quantity", quantity, "f, fstar or g")->capture_default_str();
  verify->add_option("--k", rk, "k")->capture_default_str();
  int free_k = 5;
  int free_n = 13;
  int restarts = 64;
  std::int64_t flips = 1'000'000;
  auto* find_free = ramsey_cmd->add_subcommand("find-free", "Local search for a TT_k-free tournament");
  find_free->add_option("--k", free_k)->capture_default_str();
  find_free->add_option("--n", free_n)->capture_default_str();
  find_free->add_option("--restarts", restarts)->capture_default_str();
  find_free->add_option("--flips", flips, "Total flip budget")->capture_default_str();
  std::string table = "tt3-factor-6";
  auto* table_cmd = ramsey_cmd->add_subcommand("table", "Regenerate a fixture table");
  table_cmd->add_option("--which", table, "tt3-factor-6 or tt4-free-7")->capture_default_str();

  int enum_n = 5;
  bool enum_codes = false;
  auto* enumerate = app.add_subcommand("enumerate", "Isomorphism classes of n-vertex tournaments");
  enumerate->add_option("--n", enum_n)->capture_default_str();
  enumerate->add_flag("--codes", enum_codes, "List canonical codes");

  int ck = 3;
  int ct = 1;
  int cr = 0;
  bool tight = false;
  std::string cover_input;
  auto* cover_cmd_app = app.add_subcommand("cover", "Near-perfect TT_k cover of an oriented K(t, r)");
  cover_cmd_app->add_option("--k", ck)->capture_default_str();
  cover_cmd_app->add_option("--t", ct, "Class size")->capture_default_str();
  cover_cmd_app->add_option("--r", cr, "Class count (default r_k)");
  cover_cmd_app->add_flag("--tight", tight, "k = 4 on K(t, 20)");
  cover_cmd_app->add_option("--input", cover_input, "Graph file with classes instead of a random orientation");

  EmbedOptions eo;
  auto* embed_app = app.add_subcommand("embed", "TT(h,k) embedding in a one-way layered instance");
  embed_app->set_help_flag("--help", "Print this help message and exit");
  embed_app->add_option("--h", eo.h)->capture_default_str();
  embed_app->add_option("--k", eo.k)->capture_default_str();
  embed_app->add_option("--eta", eo.eta)->capture_default_str();
  embed_app->add_option("--mu", eo.mu)->capture_default_str();
  embed_app->add_option("--w", eo.w, "Class size of the random instance")->capture_default_str();
  embed_app->add_option("--b", eo.b, "Run the greedy packing loop with base size b");
  embed_app->add_option("--p", eo.p, "Arc probability of the random instance")->capture_default_str();
  embed_app->add_option("--policy", eo.policy, "strict or report")->capture_default_str();
  embed_app->add_option("--input", eo.input, "Graph file with classes");

  std::string pattern = "ttk:3";
  std::string pack_input;
  int tournament = 0;
  std::string mode = "exact";
  auto* pack = app.add_subcommand("pack", "Maximum vertex-disjoint packing of a pattern");
  pack->add_option("--pattern", pattern, "ttk:<k>, tthk:<h>,<k>, outstar:<m> or file:<path>")->capture_default_str();
  pack->add_option("--input", pack_input, "Host graph file");
  pack->add_option("--tournament", tournament, "Random tournament on this many vertices");
  pack->add_option("--mode", mode, "exact or greedy")->capture_default_str();

  std::string which;
  std::string params;
  bool randomize = false;
  auto* construct = app.add_subcommand("construct", "Extremal construction with its claimed bounds");
  construct->add_option("--which", which, "prop2, star, fblowup or tt4")->required();
  construct->add_option("--params", params, "key=value list, e.g. n=60,gamma=1/60 or sizes=1;2;2;2;2;2");
  construct->add_flag("--randomize", randomize, "Orient the free arcs by --seed");

  std::string construction_input;
  int exact_limit = 24;
  auto* verify_construction = app.add_subcommand("verify-construction", "Check a construction against the oracles");
  verify_construction->add_option("--input", construction_input, "JSON from `construct`")->required();
  verify_construction->add_option("--exact-limit", exact_limit, "Largest n for the exact solver")
      ->capture_default_str();

  std::string factor_pattern = "ttk:3";
  std::string factor_input;
  std::string method = "auto";
  int g_h = 0;
  auto* factor = app.add_subcommand("factor", "Pattern-factor of a dense oriented graph");
  factor->add_option("--pattern", factor_pattern)->capture_default_str();
  factor->add_option("--input", factor_input, "Host graph file")->required();
  factor->add_option("--method", method, "auto, matching, sharp or theorem")->capture_default_str();
  factor->add_option("--g-h", g_h, "Clique size for the theorem pipeline (0: verified g(h))");

  std::vector<const char*> argv{"ttpack"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o;
    if (*verify) {
      o = ramsey_verify(g, quantity, rk);
    } else if (*find_free) {
      o = ramsey_find_free(g, free_k, free_n, restarts, flips);
    } else if (*table_cmd) {
      o = ramsey_table(table);
    } else if (*enumerate) {
      o = enumerate_cmd(g, enum_n, enum_codes);
    } else if (*cover_cmd_app) {
      o = cover_cmd(g, ck, ct, cr, tight, cover_input);
    } else if (*embed_app) {
      o = embed_cmd(g, eo);
    } else if (*pack) {
      o = pack_cmd(g, pattern, pack_input, tournament, mode);
    } else if (*construct) {
      o = construct_cmd(g, which, params, randomize);
    } else if (*verify_construction) {
      o = verify_construction_cmd(construction_input, exact_limit);
    } else if (*factor) {
      o = factor_cmd(g, factor_pattern, factor_input, method, g_h);
    } else {
      err << "ttpack: no command\n";
      return kUsage;
    }
    o.report.input_digest = sha256_hex(o.report.parameters.dump() + '\n' + o.input);
    o.report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (const auto bad = report_schema_violation(o.report.to_json()); !bad.empty()) {
      err << "ttpack: internal error: report violates schema: " << bad << '\n';
      return kUsage;
    }
    emit(g, o, out);
    if (!g.manifest.empty()) write_manifest(g, args, o);
    return o.exit_code;
  } catch (const BudgetExhausted& e) {
    err << "ttpack: budget exhausted: " << e.what() << '\n';
    return kBudget;
  } catch (const ParseError& e) {
    err << "ttpack: parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidInput& e) {
    err << "ttpack: invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const TooLarge& e) {
    err << "ttpack: too large: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace ttpack::cli
