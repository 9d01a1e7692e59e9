#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "netop/algebra.hpp"
#include "netop/error.hpp"
#include "netop/green.hpp"
#include "netop/io.hpp"
#include "netop/laws.hpp"
#include "netop/petri.hpp"

namespace netop::cli {

namespace {

constexpr int exit_failure = 1;
constexpr int exit_error = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// ----- compose -----

struct Value {
  Network g;
  std::optional<std::vector<Attribute>> x;
};

struct Rule {
  enum Kind { none, max_dist, two_tier, degree } kind = none;
  double l1 = 0;
  double l2 = 0;
  std::size_t k = 0;
};

Rule parse_rule(const json& j) {
  Rule r;
  const auto name = j.at("rule").get<std::string>();
  if (name == "max-dist") {
    r.kind = Rule::max_dist;
    r.l1 = j.at("L").get<double>();
  } else if (name == "two-tier") {
    r.kind = Rule::two_tier;
    r.l1 = j.at("L1").get<double>();
    r.l2 = j.at("L2").get<double>();
  } else if (name == "degree") {
    r.kind = Rule::degree;
    r.k = j.at("k").get<std::size_t>();
  } else {
    throw parse_error("unknown rule '" + name + "'");
  }
  return r;
}

class Scenario {
 public:
  explicit Scenario(const json& j) : model_(model_from_json(j.at("model"))) {
    if (j.contains("rule")) rule_ = parse_rule(j.at("rule"));
    op_model_ = rule_.kind == Rule::degree
                    ? ModelSpec::free_varietal(MonoidSpec::boolean(), Variety::gmon)
                    : model_;
    if (j.contains("operation_model")) op_model_ = model_from_json(j.at("operation_model"));

    const json networks = j.value("networks", json::object());
    for (const auto& [name, nj] : networks.items()) {
      try {
        networks_.emplace(name, read_network(nj));
      } catch (const std::exception& e) {
        throw parse_error("networks." + name + ": " + e.what());
      }
    }
    const json operations = j.value("operations", json::object());
    for (const auto& [name, oj] : operations.items()) {
      try {
        operations_.emplace(name, operation_from_json(oj, op_model_));
      } catch (const std::exception& e) {
        throw parse_error("operations." + name + ": " + e.what());
      }
    }
    if (j.contains("compose") && !j.at("compose").is_null()) tree_ = j.at("compose");
  }

  Value evaluate() const {
    if (tree_) return eval(*tree_, "compose");
    if (networks_.size() != 1) {
      throw parse_error("no composition tree and " + std::to_string(networks_.size()) +
                        " networks to echo");
    }
    return networks_.begin()->second;
  }

 private:
  Value read_network(const json& nj) const {
    Value v{nj.contains("model")
                ? network_from_json(nj)
                : network_from_payload(model_, uncolored(nj.at("n").get<std::size_t>()),
                                       nj.at("payload")),
            std::nullopt};
    if (nj.contains("attributes")) {
      std::vector<Attribute> xs;
      for (const auto& a : nj.at("attributes")) xs.push_back(attribute_from_json(a));
      v.x = AttributedNetwork(v.g, xs).x;
    }
    return v;
  }

  Value eval(const json& node, const std::string& path) const {
    if (node.is_string()) {
      const auto name = node.get<std::string>();
      if (auto it = networks_.find(name); it != networks_.end()) return it->second;
      if (operations_.count(name)) {
        throw parse_error(path + ": '" + name + "' is an operation; leaves must be networks");
      }
      throw parse_error(path + ": unknown network '" + name + "'");
    }
    if (!node.is_object() || !node.contains("op")) {
      throw parse_error(path + ": expected a network name or {\"op\", \"args\"}");
    }
    const auto op_name = node.at("op").get<std::string>();
    const auto it = operations_.find(op_name);
    if (it == operations_.end()) throw parse_error(path + ": unknown operation '" + op_name + "'");
    const auto& f = it->second;

    std::vector<Value> args;
    const json aj = node.value("args", json::array());
    for (std::size_t i = 0; i < aj.size(); ++i) {
      args.push_back(eval(aj[i], path + ".args[" + std::to_string(i) + "]"));
    }
    try {
      return apply(f, args);
    } catch (const std::exception& e) {
      throw error(path + " (op " + op_name + "): " + e.what());
    }
  }

  Value apply(const OperadOperation& f, const std::vector<Value>& args) const {
    std::vector<Network> gs;
    std::size_t attributed = 0;
    for (const auto& a : args) {
      gs.push_back(a.g);
      attributed += a.x.has_value();
    }
    if (attributed != 0 && attributed != args.size()) {
      throw mismatch_error("some arguments carry attributes and some do not");
    }
    const bool with_x = !args.empty() && attributed == args.size();

    if (rule_.kind == Rule::degree) {
      Value out{act_degree_bounded(f, gs, rule_.k), std::nullopt};
      if (with_x) out.x = permuted_attributes(f, args);
      return out;
    }
    if (!with_x) {
      if (rule_.kind != Rule::none) throw domain_error("distance rules need attributed arguments");
      return {act_canonical(f, gs), std::nullopt};
    }
    std::vector<AttributedNetwork> as;
    for (const auto& a : args) as.emplace_back(a.g, *a.x);
    AttributedNetwork r = rule_.kind == Rule::max_dist
                              ? act_predicate(f, as, EdgePredicate::max_distance(rule_.l1))
                          : rule_.kind == Rule::two_tier
                              ? act_bound(f, as, EdgeBound::two_tier(rule_.l1, rule_.l2))
                              : act_vertex_attr(f, as);
    return {std::move(r.g), std::move(r.x)};
  }

  static std::vector<Attribute> permuted_attributes(const OperadOperation& f,
                                                    const std::vector<Value>& args) {
    std::vector<Attribute> xs;
    for (const auto& a : args) xs.insert(xs.end(), a.x->begin(), a.x->end());
    std::vector<Attribute> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out[f.sigma()(i)] = xs[i];
    return out;
  }

  ModelSpec model_;
  ModelSpec op_model_;
  Rule rule_;
  std::map<std::string, Value> networks_;
  std::map<std::string, OperadOperation> operations_;
  std::optional<json> tree_;
};

int cmd_compose(const std::string& path, const std::string& format, std::ostream& out) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
  const Value v = Scenario(j).evaluate();
  if (format == "dot") {
    out << to_dot(v.g);
    return 0;
  }
  json r = {{"result", to_json(v.g)}};
  if (v.x) {
    json xs = json::array();
    for (const auto& a : *v.x) xs.push_back(to_json(a));
    r["attributes"] = xs;
  }
  out << r.dump(2) << '\n';
  return 0;
}

// ----- normalize -----

GreenContextPtr parse_graph(const std::string& spec, const MonoidSpec& monoid) {
  auto fail = [&] { return parse_error("bad --graph '" + spec + "'"); };
  if (spec.rfind("kneser:", 0) == 0) {
    std::size_t n = 0;
    try {
      n = std::stoul(spec.substr(7));
    } catch (const std::exception&) {
      throw fail();
    }
    return kneser_context(n, monoid);
  }
  if (spec.rfind("edges:", 0) != 0) throw fail();
  const auto rest = spec.substr(6);
  const auto colon = rest.find(':');
  std::size_t v = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  try {
    v = std::stoul(rest.substr(0, colon));
    if (colon != std::string::npos) {
      std::stringstream list(rest.substr(colon + 1));
      std::string item;
      while (std::getline(list, item, ',')) {
        if (item.empty()) continue;
        const auto dash = item.find('-');
        if (dash == std::string::npos) throw fail();
        const auto a = std::stoul(item.substr(0, dash));
        const auto b = std::stoul(item.substr(dash + 1));
        if (a == 0 || b == 0) throw fail();
        edges.emplace_back(a - 1, b - 1);
      }
    }
  } catch (const parse_error&) {
    throw;
  } catch (const std::exception&) {
    throw fail();
  }
  return uniform_context(CommutationGraph(v, edges), monoid);
}

int cmd_normalize(const std::string& word, const std::string& graph, const std::string& monoid,
                  const std::string& variety, std::ostream& out) {
  const auto ctx = parse_graph(graph, parse_monoid(monoid));
  const GreenWord w = parse_word(word, ctx);
  const GreenWord nf = normalize(w, parse_variety(variety));
  out << format_word(nf) << '\n';
  return nf == w ? 0 : exit_failure;
}

// ----- petri -----

void print_markings(const PetriNet& net, const std::vector<Marking>& ms, std::ostream& out) {
  for (const auto& m : ms) out << format_marking(net, m) << '\n';
}

int cmd_catalysts(const PetriNet& net, std::ostream& out) {
  const auto cs = catalysts(net);
  for (std::size_t i = 0; i < cs.size(); ++i) out << (i ? " " : "") << net.species()[cs[i]];
  out << '\n';
  return 0;
}

int cmd_fire(const PetriNet& net, const std::string& marking,
             const std::vector<std::string>& transitions, std::ostream& out) {
  Marking m = parse_marking(net, marking);
  for (const auto& t : transitions) {
    m = fire(net, m, net.transition_index(t));
    out << format_marking(net, m) << '\n';
  }
  return 0;
}

int cmd_reach(const PetriNet& net, const std::string& marking, std::size_t depth,
              const std::string& format, std::ostream& out) {
  const Marking m = parse_marking(net, marking);
  if (format == "text") {
    print_markings(net, reachable(net, m, depth), out);
    return 0;
  }
  const auto g = reachability_graph(net, m, depth);
  if (format == "json") {
    out << reachability_to_json(net, g).dump(2) << '\n';
  } else {
    out << reachability_to_dot(net, g);
  }
  return 0;
}

// ----- check -----

std::uint64_t default_seed() {
  const char* env = std::getenv("NETOP_SEED");
  if (!env || !*env) return 0;
  try {
    std::size_t used = 0;
    const auto s = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return s;
  } catch (const std::exception&) {
    throw parse_error(std::string("NETOP_SEED is not an integer: ") + env);
  }
}

constexpr std::size_t max_witnesses = 5;

int cmd_check(const std::string& suite, std::uint64_t seed, std::size_t cases,
              const std::string& fault, std::ostream& out) {
  OperadFault f = OperadFault::none;
  if (fault == "skip-action") {
    f = OperadFault::skip_action;
  } else if (!fault.empty()) {
    throw parse_error("unknown fault '" + fault + "'");
  }
  const auto reports = run_suite(parse_suite(suite), cases, seed, f);
  std::size_t failed = 0;
  std::size_t total_cases = 0;
  for (const auto& r : reports) {
    total_cases += r.cases;
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases";
    if (!r.passed()) out << ", " << r.failures.size() << " failures";
    out << ")\n";
    if (r.passed()) continue;
    ++failed;
    for (std::size_t i = 0; i < r.failures.size() && i < max_witnesses; ++i) {
      out << "  " << r.failures[i] << '\n';
    }
  }
  if (failed == 0) {
    out << "PASS " << suite << ": " << reports.size() << " checks, " << total_cases
        << " cases, seed " << seed << '\n';
    return 0;
  }
  out << "FAIL " << suite << ": " << failed << " of " << reports.size() << " checks failed, seed "
      << seed << '\n';
  return exit_failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Network models, network operads, Green products and Petri nets with catalysts"};
  app.name("netop");
  app.require_subcommand(1);

  std::string compose_path;
  std::string compose_out = "json";
  auto* compose = app.add_subcommand("compose", "Evaluate a composition tree from a scenario file");
  compose->add_option("scenario", compose_path, "Scenario JSON file")->required();
  compose->add_option("--out", compose_out, "Output format")
      ->check(CLI::IsMember({"json", "dot"}));

  std::string word;
  std::string graph;
  std::string monoid = "bool";
  std::string variety = "mon";
  auto* norm = app.add_subcommand("normalize", "Print the normal form of a word");
  norm->add_option("word", word, "Space-separated letters such as 'e12 e34'")->required();
  norm->add_option("--graph", graph, "kneser:N or edges:V:1-2,2-3")->required();
  norm->add_option("--monoid", monoid, "bool, nat-add, nat-max, trunc-add:K");
  norm->add_option("--variety", variety, "mon, cmon or gmon")
      ->check(CLI::IsMember({"mon", "cmon", "gmon"}));

  std::string net_path;
  auto* petri = app.add_subcommand("petri", "Inspect and run a .petri file");
  petri->add_option("net", net_path, ".petri file")->required();
  petri->require_subcommand(1);

  auto* p_cat = petri->add_subcommand("catalysts", "List the catalyst species");
  auto* p_dot = petri->add_subcommand("dot", "Print the net as a DOT graph");

  std::string marking;
  std::vector<std::string> firings;
  auto* p_fire = petri->add_subcommand("fire", "Fire transitions in order, printing each marking");
  p_fire->add_option("--marking", marking, "Starting marking, e.g. 2a+b")->required();
  p_fire->add_option("transitions", firings, "Transition names")->required();

  std::size_t depth = 0;
  std::string reach_format = "text";
  auto* p_reach = petri->add_subcommand("reach", "Markings reachable within a number of firings");
  p_reach->add_option("--marking", marking, "Starting marking")->required();
  p_reach->add_option("--depth", depth, "Maximum number of firings")->required();
  p_reach->add_option("--format", reach_format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));

  std::string suite = "all";
  std::optional<std::uint64_t> seed;
  std::size_t cases = 500;
  std::string fault;
  auto* check = app.add_subcommand("check", "Run the randomized law suites");
  check->add_option("--suite", suite, "models, operad, green, petri or all")
      ->check(CLI::IsMember({"models", "operad", "green", "petri", "all"}));
  check->add_option("--seed", seed, "Seed (default NETOP_SEED, else 0)");
  check->add_option("--cases", cases, "Randomized cases per check");
  check->add_option("--inject-fault", fault)->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_error;
  }

  try {
    if (compose->parsed()) return cmd_compose(compose_path, compose_out, out);
    if (norm->parsed()) return cmd_normalize(word, graph, monoid, variety, out);
    if (check->parsed()) return cmd_check(suite, seed ? *seed : default_seed(), cases, fault, out);
    const PetriNet net = load_petri(net_path);
    if (p_cat->parsed()) return cmd_catalysts(net, out);
    if (p_dot->parsed()) {
      out << net_to_dot(net);
      return 0;
    }
    if (p_fire->parsed()) return cmd_fire(net, marking, firings, out);
    if (p_reach->parsed()) return cmd_reach(net, marking, depth, reach_format, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_error;
  }
  return exit_error;
}

}  // namespace netop::cli
