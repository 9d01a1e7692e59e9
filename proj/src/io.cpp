#include "netop/io.hpp"

#include <algorithm>
#include <sstream>

#include "netop/error.hpp"
#include "netop/green.hpp"

namespace netop {

namespace {

[[noreturn]] void bad(const std::string& what) { throw parse_error(what); }

std::size_t vertex(const json& j, std::size_t n) {
  if (!j.is_number_unsigned() && !j.is_number_integer()) bad("vertex must be an integer");
  const auto v = j.get<long long>();
  if (v < 1 || static_cast<std::size_t>(v) > n) {
    throw domain_error("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
  }
  return static_cast<std::size_t>(v - 1);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) bad(std::string(what) + " must hold strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

}  // namespace

json to_json(const Permutation& p) { return p.one_based(); }

Permutation permutation_from_json(const json& j) {
  if (!j.is_array()) bad("permutation must be an array of 1-based images");
  std::vector<std::size_t> img;
  for (const auto& x : j) {
    if (!x.is_number_integer()) bad("permutation entries must be integers");
    const auto v = x.get<long long>();
    if (v < 1) throw domain_error("permutation entries are 1-based");
    img.push_back(static_cast<std::size_t>(v));
  }
  return Permutation::from_one_based(img);
}

json to_json(const MonoidSpec& m) {
  if (m.kind == MonoidKind::trunc_add) return {{"kind", "trunc-add"}, {"k", m.k}};
  return to_string(m);
}

MonoidSpec parse_monoid(const std::string& text) {
  if (text == "bool" || text == "boolean") return MonoidSpec::boolean();
  if (text == "nat-add") return MonoidSpec::nat_add();
  if (text == "nat-max") return MonoidSpec::nat_max();
  if (text == "free-one") return MonoidSpec::free_one();
  const std::string prefix = "trunc-add:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string k = text.substr(prefix.size());
    if (k.empty() || !std::all_of(k.begin(), k.end(), ::isdigit)) bad("bad truncation '" + text + "'");
    return MonoidSpec::trunc_add(std::stoull(k));
  }
  bad("unknown monoid '" + text + "' (bool, nat-add, nat-max, free-one, trunc-add:k)");
}

MonoidSpec monoid_from_json(const json& j) {
  if (j.is_string()) return parse_monoid(j.get<std::string>());
  const auto kind = field(j, "kind");
  if (kind != "trunc-add") return parse_monoid(kind.get<std::string>());
  const auto& k = field(j, "k");
  if (!k.is_number_unsigned()) bad("trunc-add needs a nonnegative integer k");
  return MonoidSpec::trunc_add(k.get<std::uint64_t>());
}

Variety parse_variety(const std::string& text) {
  if (text == "mon") return Variety::mon;
  if (text == "cmon") return Variety::cmon;
  if (text == "gmon") return Variety::gmon;
  bad("unknown variety '" + text + "' (mon, cmon, gmon)");
}

json to_json(const ModelSpec& m) {
  switch (m.kind()) {
    case ModelKind::gamma:
      return {{"kind", "gamma"}, {"monoid", to_json(m.monoid())}};
    case ModelKind::tensor:
      return {{"kind", "tensor"}, {"parts", {to_json(m.parts()[0]), to_json(m.parts()[1])}}};
    case ModelKind::free_varietal:
      return {{"kind", "free"}, {"monoid", to_json(m.monoid())}, {"variety", to_string(m.variety())}};
    case ModelKind::colored:
      if (m.color_mode() == ColorMode::forget) {
        return {{"kind", "colored"}, {"colors", m.colors()}, {"inner", to_json(m.parts()[0])}};
      } else {
        json parts = json::array();
        for (const auto& p : m.parts()) parts.push_back(to_json(p));
        return {{"kind", "per-color"}, {"colors", m.colors()}, {"parts", parts}};
      }
    default:
      return m.name();
  }
}

ModelSpec model_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "sg") return ModelSpec::simple_graph();
    if (s == "dg") return ModelSpec::directed_graph();
    if (s == "mg") return ModelSpec::multigraph_max();
    if (s == "mgplus") return ModelSpec::multigraph_sum();
    if (s == "hg") return ModelSpec::hypergraph();
    if (s == "partition-join") return ModelSpec::partition_join();
    if (s == "partition-meet") return ModelSpec::partition_meet();
    if (s == "petri") return ModelSpec::petri();
    bad("unknown model '" + s + "'");
  }
  const auto kind = field(j, "kind").get<std::string>();
  if (kind == "gamma") return ModelSpec::gamma(monoid_from_json(field(j, "monoid")));
  if (kind == "free") {
    return ModelSpec::free_varietal(monoid_from_json(field(j, "monoid")),
                                    parse_variety(field(j, "variety").get<std::string>()));
  }
  if (kind == "tensor") {
    const auto& parts = field(j, "parts");
    if (!parts.is_array() || parts.size() != 2) bad("tensor needs two parts");
    return ModelSpec::tensor(model_from_json(parts[0]), model_from_json(parts[1]));
  }
  if (kind == "colored") {
    return ModelSpec::colored_forget(model_from_json(field(j, "inner")),
                                     string_list(field(j, "colors"), "colors"));
  }
  if (kind == "per-color") {
    std::vector<ModelSpec> parts;
    for (const auto& p : field(j, "parts")) parts.push_back(model_from_json(p));
    return ModelSpec::colored_per_color(string_list(field(j, "colors"), "colors"), parts);
  }
  return model_from_json(json(kind));
}

std::vector<std::string> color_names(const ModelSpec& m) {
  if (m.kind() == ModelKind::tensor) return color_names(m.parts()[0]);
  if (m.is_one_colored()) return {};
  return m.colors();
}

json payload_to_json(const Network& g) {
  const std::size_t n = g.arity();
  const auto& model = g.model();
  switch (model.kind()) {
    case ModelKind::simple_graph: {
      json out = json::array();
      for (const auto& e : g.edge_set().edges) out.push_back({e.lo + 1, e.hi + 1});
      return out;
    }
    case ModelKind::directed_graph: {
      json out = json::array();
      for (const auto& a : g.arc_set().arcs) out.push_back({a.from + 1, a.to + 1});
      return out;
    }
    case ModelKind::multigraph_max:
    case ModelKind::multigraph_sum:
    case ModelKind::gamma: {
      const bool boolean = *edge_monoid(model) == MonoidSpec::boolean();
      json out = json::array();
      for (const auto& [e, v] : g.label_map().labels) {
        if (boolean) {
          out.push_back({e.lo + 1, e.hi + 1, true});
        } else {
          out.push_back({e.lo + 1, e.hi + 1, v});
        }
      }
      return out;
    }
    case ModelKind::hypergraph: {
      json out = json::array();
      for (auto mask : g.hyperedges().masks) {
        json h = json::array();
        for (std::size_t v = 0; v < n; ++v) if ((mask >> v) & 1u) h.push_back(v + 1);
        out.push_back(h);
      }
      return out;
    }
    case ModelKind::partition_join:
    case ModelKind::partition_meet: {
      const auto& b = g.partition().block;
      const std::size_t blocks = b.empty() ? 0 : *std::max_element(b.begin(), b.end()) + 1u;
      json out = json::array();
      for (std::size_t k = 0; k < blocks; ++k) {
        json block = json::array();
        for (std::size_t v = 0; v < n; ++v) if (b[v] == k) block.push_back(v + 1);
        out.push_back(block);
      }
      return out;
    }
    case ModelKind::petri: {
      const auto& p = g.petri();
      auto matrix = [&](const std::vector<std::uint64_t>& cells) {
        json rows = json::array();
        for (std::size_t s = 0; s < p.species; ++s) {
          json row = json::array();
          for (std::size_t t = 0; t < p.transitions; ++t) row.push_back(cells[s * p.transitions + t]);
          rows.push_back(row);
        }
        return rows;
      };
      return {{"input", matrix(p.input)}, {"output", matrix(p.output)}};
    }
    case ModelKind::free_varietal:
      return format_word(g.word());
    case ModelKind::tensor:
    case ModelKind::colored: {
      json out = json::array();
      for (const auto& part : g.components().parts) out.push_back(to_json(part));
      return out;
    }
  }
  throw domain_error("unknown model");
}

json to_json(const Network& g) {
  json out{{"model", to_json(g.model())}, {"n", g.arity()}, {"payload", payload_to_json(g)}};
  const auto names = color_names(g.model());
  if (!names.empty()) {
    json cs = json::array();
    for (auto c : g.colors()) cs.push_back(names[c]);
    out["colors"] = cs;
  }
  return out;
}

Network network_from_payload(const ModelSpec& model, const ColorWord& colors, const json& payload) {
  const std::size_t n = colors.size();
  auto pairs = [&](const char* what) {
    if (!payload.is_array()) bad(std::string(what) + " payload must be an array");
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& e : payload) {
      if (!e.is_array() || e.size() != 2) bad(std::string(what) + " entries are [i, j]");
      out.emplace_back(vertex(e[0], n), vertex(e[1], n));
    }
    return out;
  };
  auto lists = [&](const char* what) {
    if (!payload.is_array()) bad(std::string(what) + " payload must be an array of vertex lists");
    std::vector<std::vector<std::size_t>> out;
    for (const auto& l : payload) {
      if (!l.is_array()) bad(std::string(what) + " payload must be an array of vertex lists");
      std::vector<std::size_t> vs;
      for (const auto& v : l) vs.push_back(vertex(v, n));
      out.push_back(vs);
    }
    return out;
  };
  switch (model.kind()) {
    case ModelKind::simple_graph: {
      std::vector<Edge> es;
      for (auto [i, j] : pairs("simple graph")) es.push_back(Edge::make(i, j));
      return Network(model, colors, EdgeSet{es});
    }
    case ModelKind::directed_graph: {
      std::vector<Arc> as;
      for (auto [i, j] : pairs("directed graph")) {
        if (i == j) throw domain_error("directed edges need distinct endpoints");
        as.push_back({static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)});
      }
      return Network(model, colors, ArcSet{as});
    }
    case ModelKind::multigraph_max:
    case ModelKind::multigraph_sum:
    case ModelKind::gamma: {
      if (!payload.is_array()) bad("labeled payload must be an array of [i, j, label]");
      std::vector<std::pair<Edge, MonoidElement>> ls;
      for (const auto& e : payload) {
        if (!e.is_array() || (e.size() != 3 && e.size() != 2)) bad("labeled entries are [i, j, label]");
        MonoidElement v = 1;
        if (e.size() == 3) {
          if (e[2].is_boolean()) {
            v = e[2].get<bool>() ? 1 : 0;
          } else if (e[2].is_number_unsigned()) {
            v = e[2].get<std::uint64_t>();
          } else {
            bad("labels must be nonnegative integers or booleans");
          }
        }
        ls.emplace_back(Edge::make(vertex(e[0], n), vertex(e[1], n)), v);
      }
      return Network(model, colors, LabelMap{ls});
    }
    case ModelKind::hypergraph: {
      HyperedgeSet h;
      for (const auto& l : lists("hypergraph")) {
        std::uint64_t mask = 0;
        for (auto v : l) mask |= std::uint64_t{1} << v;
        if (mask == 0) throw domain_error("hyperedges must be nonempty");
        h.masks.push_back(mask);
      }
      return Network(model, colors, h);
    }
    case ModelKind::partition_join:
    case ModelKind::partition_meet: {
      Partition p{std::vector<std::uint8_t>(n, 0)};
      std::vector<bool> seen(n, false);
      const auto blocks = lists("partition");
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (auto v : blocks[b]) {
          if (seen[v]) throw domain_error("vertex " + std::to_string(v + 1) + " in two blocks");
          seen[v] = true;
          p.block[v] = static_cast<std::uint8_t>(b);
        }
      }
      if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw domain_error("partition does not cover every vertex");
      }
      return Network(model, colors, p);
    }
    case ModelKind::petri: {
      PetriMatrices p;
      p.species = static_cast<std::size_t>(std::count(colors.begin(), colors.end(), 0));
      p.transitions = n - p.species;
      auto matrix = [&](const json& rows) {
        std::vector<std::uint64_t> cells;
        if (!rows.is_array() || rows.size() != p.species) bad("one row per species");
        for (const auto& row : rows) {
          if (!row.is_array() || row.size() != p.transitions) bad("one column per transition");
          for (const auto& x : row) {
            if (!x.is_number_unsigned()) bad("multiplicities must be nonnegative integers");
            cells.push_back(x.get<std::uint64_t>());
          }
        }
        return cells;
      };
      p.input = matrix(field(payload, "input"));
      p.output = matrix(field(payload, "output"));
      return Network(model, colors, p);
    }
    case ModelKind::free_varietal: {
      if (!payload.is_string()) bad("free-model payload is a word string");
      return Network(model, colors,
                     parse_word(payload.get<std::string>(), kneser_context(n, model.monoid())));
    }
    case ModelKind::tensor:
    case ModelKind::colored: {
      if (!payload.is_array()) bad("composite payload is an array of networks");
      Components c;
      for (const auto& part : payload) c.parts.push_back(network_from_json(part));
      return Network(model, colors, std::move(c));
    }
  }
  throw domain_error("unknown model");
}

Network network_from_json(const json& j) {
  const ModelSpec model = model_from_json(field(j, "model"));
  ColorWord colors;
  const auto names = color_names(model);
  if (j.contains("colors")) {
    for (const auto& c : j.at("colors")) {
      if (c.is_number_unsigned()) {
        colors.push_back(static_cast<std::uint8_t>(c.get<std::uint64_t>()));
      } else if (c.is_string()) {
        auto it = std::find(names.begin(), names.end(), c.get<std::string>());
        if (it == names.end()) throw domain_error("unknown color " + c.get<std::string>());
        colors.push_back(static_cast<std::uint8_t>(it - names.begin()));
      } else {
        bad("colors are names or indices");
      }
    }
    if (j.contains("n") && j.at("n").get<std::size_t>() != colors.size()) {
      throw arity_error("'n' disagrees with the length of 'colors'");
    }
  } else {
    const auto& n = field(j, "n");
    if (!n.is_number_unsigned()) bad("'n' must be a nonnegative integer");
    if (n.get<std::size_t>() > max_arity) throw arity_error("arity above 32");
    colors = uncolored(n.get<std::size_t>());
  }
  return network_from_payload(model, colors, field(j, "payload"));
}

json to_json(const TotalMorphism& f) {
  return {{"sigma", to_json(f.sigma)},
          {"g", to_json(f.g)},
          {"src", f.source.word},
          {"tgt", f.target.word}};
}

TotalMorphism total_from_json(const json& j) {
  const Network g = network_from_json(field(j, "g"));
  const Permutation sigma = permutation_from_json(field(j, "sigma"));
  const TotalObject src{field(j, "src").get<ColorWord>()};
  const TotalObject tgt{field(j, "tgt").get<ColorWord>()};
  return make_total(src, tgt, sigma, g);
}

json to_json(const OperadOperation& f) {
  return {{"profile", f.profile()}, {"sigma", to_json(f.sigma())}, {"g", to_json(f.g())}};
}

OperadOperation operation_from_json(const json& j, const ModelSpec& model) {
  const auto profile = field(j, "profile").get<std::vector<std::size_t>>();
  std::size_t n = 0;
  for (auto p : profile) n += p;
  const Permutation sigma = j.contains("sigma") ? permutation_from_json(j.at("sigma"))
                                                : Permutation::identity(n);
  Network g = empty(model, n);
  if (j.contains("g")) {
    const auto& gj = j.at("g");
    g = gj.is_object() && gj.contains("model") ? network_from_json(gj)
                                               : network_from_payload(model, uncolored(n), gj);
  }
  if (!(g.model() == model)) {
    throw mismatch_error("operation network is over " + g.model().name() + ", expected " +
                         model.name());
  }
  return OperadOperation(profile, sigma, g);
}

json to_json(const Attribute& a) {
  if (const auto* s = std::get_if<std::string>(&a)) return *s;
  return std::get<Point>(a);
}

Attribute attribute_from_json(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (!j.is_array()) bad("attributes are coordinate arrays or strings");
  Point p;
  for (const auto& x : j) {
    if (!x.is_number()) bad("coordinates must be numbers");
    p.push_back(x.get<double>());
  }
  return p;
}

json reachability_to_json(const PetriNet& net, const ReachabilityGraph& g) {
  json markings = json::array();
  for (const auto& m : g.nodes) markings.push_back(format_marking(net, m));
  json arcs = json::array();
  for (const auto& a : g.arcs) {
    arcs.push_back({{"from", a.from}, {"transition", net.transitions()[a.transition].name},
                    {"to", a.to}});
  }
  return {{"species", net.species()}, {"markings", markings}, {"arcs", arcs}};
}

std::string to_dot(const Network& g) {
  const auto& model = g.model();
  std::ostringstream out;
  const bool directed = model.kind() == ModelKind::directed_graph;
  const char* arrow = directed ? " -> " : " -- ";
  out << (directed ? "digraph" : "graph") << " network {\n";
  for (std::size_t v = 0; v < g.arity(); ++v) out << "  " << v + 1 << ";\n";
  switch (model.kind()) {
    case ModelKind::simple_graph:
      for (const auto& e : g.edge_set().edges) out << "  " << e.lo + 1 << arrow << e.hi + 1 << ";\n";
      break;
    case ModelKind::directed_graph:
      for (const auto& a : g.arc_set().arcs) out << "  " << a.from + 1 << arrow << a.to + 1 << ";\n";
      break;
    case ModelKind::multigraph_max:
    case ModelKind::multigraph_sum:
    case ModelKind::gamma: {
      const auto m = *edge_monoid(model);
      if (m.kind == MonoidKind::free_one) throw domain_error("no DOT rendering for " + model.name());
      for (const auto& [e, v] : g.label_map().labels) {
        const std::uint64_t copies = m.kind == MonoidKind::boolean_or ? 1 : v;
        for (std::uint64_t k = 0; k < copies; ++k) {
          out << "  " << e.lo + 1 << arrow << e.hi + 1 << ";\n";
        }
      }
      break;
    }
    default:
      throw domain_error("no DOT rendering for " + model.name());
  }
  out << "}\n";
  return out.str();
}

}  // namespace netop
