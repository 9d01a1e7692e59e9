#include "netop/network.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "netop/error.hpp"

namespace netop {

struct ModelSpec::Node {
  ModelKind kind = ModelKind::simple_graph;
  MonoidSpec monoid;
  Variety variety = Variety::mon;
  ColorMode mode = ColorMode::forget;
  std::vector<ModelSpec> parts;
  std::vector<std::string> colors;
};

std::shared_ptr<const ModelSpec::Node> ModelSpec::builtin(ModelKind kind) {
  static const auto nodes = [] {
    std::vector<std::shared_ptr<const ModelSpec::Node>> v;
    for (int k = 0; k <= static_cast<int>(ModelKind::free_varietal); ++k) {
      auto n = std::make_shared<ModelSpec::Node>();
      n->kind = static_cast<ModelKind>(k);
      if (n->kind == ModelKind::petri) n->colors = {"species", "transition"};
      v.push_back(n);
    }
    return v;
  }();
  return nodes[static_cast<std::size_t>(kind)];
}

ModelSpec::ModelSpec() : node_(builtin(ModelKind::simple_graph)) {}

ModelSpec ModelSpec::simple_graph() { return ModelSpec(builtin(ModelKind::simple_graph)); }
ModelSpec ModelSpec::directed_graph() { return ModelSpec(builtin(ModelKind::directed_graph)); }
ModelSpec ModelSpec::multigraph_max() { return ModelSpec(builtin(ModelKind::multigraph_max)); }
ModelSpec ModelSpec::multigraph_sum() { return ModelSpec(builtin(ModelKind::multigraph_sum)); }
ModelSpec ModelSpec::hypergraph() { return ModelSpec(builtin(ModelKind::hypergraph)); }
ModelSpec ModelSpec::partition_join() { return ModelSpec(builtin(ModelKind::partition_join)); }
ModelSpec ModelSpec::partition_meet() { return ModelSpec(builtin(ModelKind::partition_meet)); }
ModelSpec ModelSpec::petri() { return ModelSpec(builtin(ModelKind::petri)); }

ModelSpec ModelSpec::gamma(const MonoidSpec& m) {
  auto n = std::make_shared<Node>();
  n->kind = ModelKind::gamma;
  n->monoid = m;
  return ModelSpec(n);
}

ModelSpec ModelSpec::tensor(const ModelSpec& a, const ModelSpec& b) {
  if (a.color_count() != b.color_count()) {
    throw mismatch_error("tensor of models with different color sets");
  }
  auto n = std::make_shared<Node>();
  n->kind = ModelKind::tensor;
  n->parts = {a, b};
  return ModelSpec(n);
}

ModelSpec ModelSpec::colored_forget(const ModelSpec& inner, std::vector<std::string> colors) {
  if (!inner.is_one_colored()) throw mismatch_error("colored wrapper needs a one-colored model");
  if (colors.empty() || colors.size() > 255) throw domain_error("color set must be nonempty");
  auto n = std::make_shared<Node>();
  n->kind = ModelKind::colored;
  n->mode = ColorMode::forget;
  n->parts = {inner};
  n->colors = std::move(colors);
  return ModelSpec(n);
}

ModelSpec ModelSpec::colored_per_color(std::vector<std::string> colors,
                                       std::vector<ModelSpec> parts) {
  if (colors.empty() || colors.size() > 255) throw domain_error("color set must be nonempty");
  if (colors.size() != parts.size()) throw arity_error("need one model per color");
  for (const auto& p : parts) {
    if (!p.is_one_colored()) throw mismatch_error("per-color parts must be one-colored");
  }
  auto n = std::make_shared<Node>();
  n->kind = ModelKind::colored;
  n->mode = ColorMode::per_color;
  n->parts = std::move(parts);
  n->colors = std::move(colors);
  return ModelSpec(n);
}

ModelSpec ModelSpec::free_varietal(const MonoidSpec& m, Variety v) {
  if (v == Variety::gmon && !is_graphic(m).graphic) {
    throw mismatch_error("graphic variety needs a graphic monoid, got " + to_string(m));
  }
  if (v == Variety::cmon && !is_commutative(m)) {
    throw mismatch_error("commutative variety needs a commutative monoid");
  }
  auto n = std::make_shared<Node>();
  n->kind = ModelKind::free_varietal;
  n->monoid = m;
  n->variety = v;
  return ModelSpec(n);
}

ModelKind ModelSpec::kind() const { return node_->kind; }
const MonoidSpec& ModelSpec::monoid() const { return node_->monoid; }
Variety ModelSpec::variety() const { return node_->variety; }
ColorMode ModelSpec::color_mode() const { return node_->mode; }
const std::vector<ModelSpec>& ModelSpec::parts() const { return node_->parts; }
const std::vector<std::string>& ModelSpec::colors() const { return node_->colors; }

std::size_t ModelSpec::color_count() const {
  switch (node_->kind) {
    case ModelKind::petri:
    case ModelKind::colored:
      return node_->colors.size();
    case ModelKind::tensor:
      return node_->parts[0].color_count();
    default:
      return 1;
  }
}

std::string ModelSpec::name() const {
  auto join_colors = [&] {
    std::string s;
    for (const auto& c : node_->colors) s += (s.empty() ? "" : ",") + c;
    return s;
  };
  switch (node_->kind) {
    case ModelKind::simple_graph:
      return "sg";
    case ModelKind::directed_graph:
      return "dg";
    case ModelKind::multigraph_max:
      return "mg";
    case ModelKind::multigraph_sum:
      return "mgplus";
    case ModelKind::hypergraph:
      return "hg";
    case ModelKind::partition_join:
      return "partition-join";
    case ModelKind::partition_meet:
      return "partition-meet";
    case ModelKind::gamma:
      return "gamma(" + to_string(node_->monoid) + ")";
    case ModelKind::petri:
      return "petri";
    case ModelKind::tensor:
      return "tensor(" + node_->parts[0].name() + "," + node_->parts[1].name() + ")";
    case ModelKind::colored: {
      if (node_->mode == ColorMode::forget) {
        return "colored[" + join_colors() + "](" + node_->parts[0].name() + ")";
      }
      std::string s = "per-color[" + join_colors() + "](";
      for (std::size_t i = 0; i < node_->parts.size(); ++i) {
        s += (i ? "," : "") + node_->parts[i].name();
      }
      return s + ")";
    }
    case ModelKind::free_varietal:
      return "free(" + to_string(node_->monoid) + "," + to_string(node_->variety) + ")";
  }
  return "?";
}

bool operator==(const ModelSpec& a, const ModelSpec& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case ModelKind::gamma:
      return x.monoid == y.monoid;
    case ModelKind::free_varietal:
      return x.monoid == y.monoid && x.variety == y.variety;
    case ModelKind::tensor:
      return x.parts == y.parts;
    case ModelKind::colored:
      return x.mode == y.mode && x.parts == y.parts && x.colors == y.colors;
    default:
      return true;
  }
}

namespace {

std::optional<MonoidSpec> label_monoid(const ModelSpec& model) {
  switch (model.kind()) {
    case ModelKind::multigraph_max:
      return MonoidSpec::nat_max();
    case ModelKind::multigraph_sum:
      return MonoidSpec::nat_add();
    case ModelKind::gamma:
      return model.monoid();
    default:
      return std::nullopt;
  }
}

std::size_t count_color(const ColorWord& w, std::uint8_t c) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), c));
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    throw overflow_error("multiplicity overflow");
  }
  return a + b;
}

Partition canonical_partition(const std::vector<std::uint8_t>& raw) {
  std::vector<int> relabel(256, -1);
  Partition p;
  p.block.reserve(raw.size());
  int next = 0;
  for (auto b : raw) {
    if (relabel[b] < 0) relabel[b] = next++;
    p.block.push_back(static_cast<std::uint8_t>(relabel[b]));
  }
  return p;
}

std::uint64_t vertex_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void validate(const ModelSpec& model, const ColorWord& colors, Payload& payload) {
  const std::size_t n = colors.size();
  if (n > max_arity) {
    throw arity_error("arity " + std::to_string(n) + " exceeds " + std::to_string(max_arity));
  }
  for (auto c : colors) {
    if (c >= model.color_count()) throw domain_error("color outside the model's color set");
  }
  auto wrong = [&] { return domain_error("payload does not match model " + model.name()); };

  switch (model.kind()) {
    case ModelKind::simple_graph: {
      auto* p = std::get_if<EdgeSet>(&payload);
      if (!p) throw wrong();
      for (const auto& e : p->edges) {
        if (e.lo >= e.hi || e.hi >= n) throw domain_error("edge " + to_string(e) + " out of range");
      }
      std::sort(p->edges.begin(), p->edges.end());
      p->edges.erase(std::unique(p->edges.begin(), p->edges.end()), p->edges.end());
      return;
    }
    case ModelKind::directed_graph: {
      auto* p = std::get_if<ArcSet>(&payload);
      if (!p) throw wrong();
      for (const auto& a : p->arcs) {
        if (a.from == a.to || a.from >= n || a.to >= n) throw domain_error("arc out of range");
      }
      std::sort(p->arcs.begin(), p->arcs.end());
      p->arcs.erase(std::unique(p->arcs.begin(), p->arcs.end()), p->arcs.end());
      return;
    }
    case ModelKind::multigraph_max:
    case ModelKind::multigraph_sum:
    case ModelKind::gamma: {
      auto* p = std::get_if<LabelMap>(&payload);
      if (!p) throw wrong();
      const MonoidSpec m = *label_monoid(model);
      std::vector<std::pair<Edge, MonoidElement>> kept;
      for (const auto& [e, v] : p->labels) {
        if (e.lo >= e.hi || e.hi >= n) throw domain_error("edge " + to_string(e) + " out of range");
        check_element(m, v);
        if (v != unit(m)) kept.emplace_back(e, v);
      }
      std::sort(kept.begin(), kept.end());
      for (std::size_t i = 1; i < kept.size(); ++i) {
        if (kept[i].first == kept[i - 1].first) {
          throw domain_error("edge " + to_string(kept[i].first) + " labeled twice");
        }
      }
      p->labels = std::move(kept);
      return;
    }
    case ModelKind::hypergraph: {
      auto* p = std::get_if<HyperedgeSet>(&payload);
      if (!p) throw wrong();
      for (auto m : p->masks) {
        if (m == 0 || (m & ~vertex_mask(n))) throw domain_error("hyperedge out of range or empty");
      }
      std::sort(p->masks.begin(), p->masks.end());
      p->masks.erase(std::unique(p->masks.begin(), p->masks.end()), p->masks.end());
      return;
    }
    case ModelKind::partition_join:
    case ModelKind::partition_meet: {
      auto* p = std::get_if<Partition>(&payload);
      if (!p) throw wrong();
      if (p->block.size() != n) throw arity_error("partition covers the wrong number of vertices");
      *p = canonical_partition(p->block);
      return;
    }
    case ModelKind::petri: {
      auto* p = std::get_if<PetriMatrices>(&payload);
      if (!p) throw wrong();
      if (p->species != count_color(colors, 0) || p->transitions != count_color(colors, 1)) {
        throw arity_error("petri payload size does not match its colored word");
      }
      const std::size_t cells = p->species * p->transitions;
      if (p->input.size() != cells || p->output.size() != cells) {
        throw arity_error("petri matrices have the wrong size");
      }
      return;
    }
    case ModelKind::free_varietal: {
      auto* p = std::get_if<GreenWord>(&payload);
      if (!p) throw wrong();
      const auto ctx = kneser_context(n, model.monoid());
      if (!p->context_ptr() || !same_context(p->context(), *ctx)) {
        throw mismatch_error("word does not live over KG(" + std::to_string(n) + ",2) with " +
                             to_string(model.monoid()));
      }
      *p = normalize(*p, model.variety());
      return;
    }
    case ModelKind::tensor:
    case ModelKind::colored: {
      auto* p = std::get_if<Components>(&payload);
      if (!p) throw wrong();
      const auto& parts = model.parts();
      if (p->parts.size() != parts.size()) throw arity_error("wrong number of components");
      for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& sub = p->parts[i];
        if (!(sub.model() == parts[i])) throw mismatch_error("component built over another model");
        if (model.kind() == ModelKind::tensor) {
          if (sub.colors() != colors) throw arity_error("tensor components disagree on arity");
        } else if (model.color_mode() == ColorMode::forget) {
          if (sub.arity() != n) throw arity_error("colored network has the wrong arity");
        } else if (sub.arity() != count_color(colors, static_cast<std::uint8_t>(i))) {
          throw arity_error("per-color component has the wrong arity");
        }
      }
      return;
    }
  }
}

void require_same_model(const Network& g, const Network& h, const char* op) {
  if (!(g.model() == h.model())) {
    throw mismatch_error(std::string(op) + ": models " + g.model().name() + " and " +
                         h.model().name());
  }
}

void require_same_arity(const Network& g, const Network& h, const char* op) {
  require_same_model(g, h, op);
  if (g.colors() != h.colors()) {
    throw arity_error(std::string(op) + ": arities " + std::to_string(g.arity()) + " and " +
                      std::to_string(h.arity()));
  }
}

std::vector<std::uint8_t> join_blocks(const Partition& a, const Partition& b) {
  const std::size_t n = a.block.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto* p : {&a, &b}) {
    std::vector<int> first(n, -1);
    for (std::size_t v = 0; v < n; ++v) {
      auto& f = first[p->block[v]];
      if (f < 0) {
        f = static_cast<int>(v);
      } else {
        parent[find(v)] = find(static_cast<std::size_t>(f));
      }
    }
  }
  std::vector<std::uint8_t> out(n);
  for (std::size_t v = 0; v < n; ++v) out[v] = static_cast<std::uint8_t>(find(v));
  return out;
}

std::vector<std::uint8_t> meet_blocks(const Partition& a, const Partition& b) {
  const std::size_t n = a.block.size();
  std::vector<std::uint8_t> out(n);
  std::vector<std::pair<std::uint8_t, std::uint8_t>> seen;
  for (std::size_t v = 0; v < n; ++v) {
    const auto key = std::make_pair(a.block[v], b.block[v]);
    auto it = std::find(seen.begin(), seen.end(), key);
    if (it == seen.end()) {
      seen.push_back(key);
      it = seen.end() - 1;
    }
    out[v] = static_cast<std::uint8_t>(it - seen.begin());
  }
  return out;
}

Edge shift(const Edge& e, std::size_t by) { return Edge::make(e.lo + by, e.hi + by); }

Letter relabel(std::size_t n_from, std::size_t n_to, const Letter& l, std::size_t by) {
  const Edge e = shift(pair_at(n_from, l.component), by);
  return {pair_index(n_to, e), l.value};
}

}  // namespace

Network::Network(ModelSpec model, ColorWord colors, Payload payload)
    : model_(std::move(model)), colors_(std::move(colors)), payload_(std::move(payload)) {
  validate(model_, colors_, payload_);
}

bool operator==(const Network& a, const Network& b) {
  return a.model_ == b.model_ && a.colors_ == b.colors_ && a.payload_ == b.payload_;
}

ColorWord uncolored(std::size_t n) {
  if (n > max_arity) {
    throw arity_error("arity " + std::to_string(n) + " exceeds " + std::to_string(max_arity));
  }
  return ColorWord(n, 0);
}

std::optional<MonoidSpec> edge_monoid(const ModelSpec& model) {
  if (model.kind() == ModelKind::simple_graph) return MonoidSpec::boolean();
  if (model.kind() == ModelKind::free_varietal) return model.monoid();
  return label_monoid(model);
}

Network empty(const ModelSpec& model, std::size_t n) { return empty(model, uncolored(n)); }

Network empty(const ModelSpec& model, const ColorWord& colors) {
  const std::size_t n = colors.size();
  switch (model.kind()) {
    case ModelKind::simple_graph:
      return Network(model, colors, EdgeSet{});
    case ModelKind::directed_graph:
      return Network(model, colors, ArcSet{});
    case ModelKind::multigraph_max:
    case ModelKind::multigraph_sum:
    case ModelKind::gamma:
      return Network(model, colors, LabelMap{});
    case ModelKind::hypergraph:
      return Network(model, colors, HyperedgeSet{});
    case ModelKind::partition_join: {
      std::vector<std::uint8_t> b(n);
      std::iota(b.begin(), b.end(), std::uint8_t{0});
      return Network(model, colors, Partition{b});
    }
    case ModelKind::partition_meet:
      return Network(model, colors, Partition{std::vector<std::uint8_t>(n, 0)});
    case ModelKind::petri: {
      PetriMatrices p;
      p.species = count_color(colors, 0);
      p.transitions = count_color(colors, 1);
      p.input.assign(p.species * p.transitions, 0);
      p.output = p.input;
      return Network(model, colors, p);
    }
    case ModelKind::free_varietal:
      return Network(model, colors, GreenWord(kneser_context(n, model.monoid()), {}));
    case ModelKind::tensor:
      return Network(model, colors,
                     Components{{empty(model.parts()[0], colors), empty(model.parts()[1], colors)}});
    case ModelKind::colored: {
      Components c;
      if (model.color_mode() == ColorMode::forget) {
        c.parts.push_back(empty(model.parts()[0], n));
      } else {
        for (std::size_t i = 0; i < model.parts().size(); ++i) {
          c.parts.push_back(empty(model.parts()[i], count_color(colors, static_cast<std::uint8_t>(i))));
        }
      }
      return Network(model, colors, std::move(c));
    }
  }
  throw domain_error("unknown model");
}

Network make_simple_graph(std::size_t n, std::vector<Edge> edges) {
  return Network(ModelSpec::simple_graph(), uncolored(n), EdgeSet{std::move(edges)});
}

Network make_directed_graph(std::size_t n, std::vector<Arc> arcs) {
  return Network(ModelSpec::directed_graph(), uncolored(n), ArcSet{std::move(arcs)});
}

Network make_labeled(const ModelSpec& model, std::size_t n,
                     std::vector<std::pair<Edge, MonoidElement>> labels) {
  return Network(model, uncolored(n), LabelMap{std::move(labels)});
}

Network make_hypergraph(std::size_t n, const std::vector<std::vector<std::size_t>>& hyperedges) {
  HyperedgeSet h;
  for (const auto& he : hyperedges) {
    std::uint64_t m = 0;
    for (auto v : he) {
      if (v >= n) throw domain_error("hyperedge vertex out of range");
      m |= std::uint64_t{1} << v;
    }
    h.masks.push_back(m);
  }
  return Network(ModelSpec::hypergraph(), uncolored(n), std::move(h));
}

Network make_partition(const ModelSpec& model, std::size_t n,
                       const std::vector<std::vector<std::size_t>>& blocks) {
  std::vector<int> label(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw domain_error("partition block is empty");
    for (auto v : blocks[b]) {
      if (v >= n || label[v] >= 0) throw domain_error("blocks must cover each vertex once");
      label[v] = static_cast<int>(b);
    }
  }
  std::vector<std::uint8_t> raw(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (label[v] < 0) throw domain_error("blocks must cover each vertex once");
    raw[v] = static_cast<std::uint8_t>(label[v]);
  }
  return Network(model, uncolored(n), Partition{raw});
}

Network make_petri(const ColorWord& colors, std::vector<std::uint64_t> input,
                   std::vector<std::uint64_t> output) {
  PetriMatrices p;
  p.species = count_color(colors, 0);
  p.transitions = count_color(colors, 1);
  p.input = std::move(input);
  p.output = std::move(output);
  return Network(ModelSpec::petri(), colors, std::move(p));
}

Network make_free(const ModelSpec& model, std::size_t n, const std::vector<Letter>& letters) {
  if (model.kind() != ModelKind::free_varietal) throw mismatch_error("make_free needs a free model");
  return Network(model, uncolored(n), GreenWord(kneser_context(n, model.monoid()), letters));
}

Network single_edge(const ModelSpec& model, std::size_t n, const Edge& e, MonoidElement value) {
  switch (model.kind()) {
    case ModelKind::simple_graph:
      check_element(MonoidSpec::boolean(), value);
      return make_simple_graph(n, value ? std::vector<Edge>{e} : std::vector<Edge>{});
    case ModelKind::multigraph_max:
    case ModelKind::multigraph_sum:
    case ModelKind::gamma:
      return make_labeled(model, n, {{e, value}});
    case ModelKind::free_varietal:
      if (e.hi >= n) throw domain_error("edge out of range");
      return make_free(model, n, {Letter{pair_index(n, e), value}});
    default:
      throw mismatch_error("model " + model.name() + " has no single edge monoid");
  }
}

Network overlay(const Network& g, const Network& h) {
  require_same_arity(g, h, "overlay");
  const auto& model = g.model();
  switch (model.kind()) {
    case ModelKind::simple_graph: {
      EdgeSet out;
      std::set_union(g.edge_set().edges.begin(), g.edge_set().edges.end(),
                     h.edge_set().edges.begin(), h.edge_set().edges.end(),
                     std::back_inserter(out.edges));
      return Network(model, g.colors(), std::move(out));
    }
    case ModelKind::directed_graph: {
      ArcSet out;
      std::set_union(g.arc_set().arcs.begin(), g.arc_set().arcs.end(), h.arc_set().arcs.begin(),
                     h.arc_set().arcs.end(), std::back_inserter(out.arcs));
      return Network(model, g.colors(), std::move(out));
    }
    case ModelKind::multigraph_max:
    case ModelKind::multigraph_sum:
    case ModelKind::gamma: {
      const MonoidSpec m = *label_monoid(model);
      const auto& a = g.label_map().labels;
      const auto& b = h.label_map().labels;
      LabelMap out;
      std::size_t i = 0, j = 0;
      while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
          out.labels.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
          out.labels.push_back(b[j++]);
        } else {
          out.labels.emplace_back(a[i].first, mul(m, a[i].second, b[j].second));
          ++i;
          ++j;
        }
      }
      return Network(model, g.colors(), std::move(out));
    }
    case ModelKind::hypergraph: {
      HyperedgeSet out;
      std::set_union(g.hyperedges().masks.begin(), g.hyperedges().masks.end(),
                     h.hyperedges().masks.begin(), h.hyperedges().masks.end(),
                     std::back_inserter(out.masks));
      return Network(model, g.colors(), std::move(out));
    }
    case ModelKind::partition_join:
      return Network(model, g.colors(), Partition{join_blocks(g.partition(), h.partition())});
    case ModelKind::partition_meet:
      return Network(model, g.colors(), Partition{meet_blocks(g.partition(), h.partition())});
    case ModelKind::petri: {
      PetriMatrices out = g.petri();
      for (std::size_t c = 0; c < out.input.size(); ++c) {
        out.input[c] = checked_add(out.input[c], h.petri().input[c]);
        out.output[c] = checked_add(out.output[c], h.petri().output[c]);
      }
      return Network(model, g.colors(), std::move(out));
    }
    case ModelKind::free_varietal:
      return Network(model, g.colors(), multiply(g.word(), h.word(), model.variety()));
    case ModelKind::tensor:
    case ModelKind::colored: {
      Components out;
      for (std::size_t i = 0; i < g.components().parts.size(); ++i) {
        out.parts.push_back(overlay(g.components().parts[i], h.components().parts[i]));
      }
      return Network(model, g.colors(), std::move(out));
    }
  }
  throw domain_error("unknown model");
}

Network disjoint_union(const Network& g, const Network& h) {
  require_same_model(g, h, "disjoint_union");
  const auto& model = g.model();
  const std::size_t m = g.arity();
  ColorWord colors = g.colors();
  colors.insert(colors.end(), h.colors().begin(), h.colors().end());
  if (colors.size() > max_arity) throw arity_error("disjoint union exceeds the maximum arity");
  switch (model.kind()) {
    case ModelKind::simple_graph: {
      EdgeSet out = g.edge_set();
      for (const auto& e : h.edge_set().edges) out.edges.push_back(shift(e, m));
      return Network(model, colors, std::move(out));
    }
    case ModelKind::directed_graph: {
      ArcSet out = g.arc_set();
      for (const auto& a : h.arc_set().arcs) {
        out.arcs.push_back({static_cast<std::uint8_t>(a.from + m), static_cast<std::uint8_t>(a.to + m)});
      }
      return Network(model, colors, std::move(out));
    }
    case ModelKind::multigraph_max:
    case ModelKind::multigraph_sum:
    case ModelKind::gamma: {
      LabelMap out = g.label_map();
      for (const auto& [e, v] : h.label_map().labels) out.labels.emplace_back(shift(e, m), v);
      return Network(model, colors, std::move(out));
    }
    case ModelKind::hypergraph: {
      HyperedgeSet out = g.hyperedges();
      for (auto mask : h.hyperedges().masks) out.masks.push_back(mask << m);
      return Network(model, colors, std::move(out));
    }
    case ModelKind::partition_join: {
      std::vector<std::uint8_t> b = g.partition().block;
      const auto offset = static_cast<std::uint8_t>(m);
      for (auto x : h.partition().block) b.push_back(static_cast<std::uint8_t>(x + offset));
      return Network(model, colors, Partition{b});
    }
    case ModelKind::partition_meet: {
      // Side-by-side placement would send (top, top) to a two-block partition,
      // not to the top of P(m+n). The only lax structure compatible with meets
      // and the symmetric-group action merges everything once both sides are
      // nonempty.
      if (h.arity() == 0) return Network(model, colors, g.partition());
      if (m == 0) return Network(model, colors, h.partition());
      return Network(model, colors, Partition{std::vector<std::uint8_t>(colors.size(), 0)});
    }
    case ModelKind::petri: {
      const auto& a = g.petri();
      const auto& b = h.petri();
      PetriMatrices out;
      out.species = a.species + b.species;
      out.transitions = a.transitions + b.transitions;
      out.input.assign(out.species * out.transitions, 0);
      out.output = out.input;
      for (std::size_t s = 0; s < a.species; ++s) {
        for (std::size_t t = 0; t < a.transitions; ++t) {
          out.input[s * out.transitions + t] = a.input[s * a.transitions + t];
          out.output[s * out.transitions + t] = a.output[s * a.transitions + t];
        }
      }
      for (std::size_t s = 0; s < b.species; ++s) {
        for (std::size_t t = 0; t < b.transitions; ++t) {
          const std::size_t cell = (s + a.species) * out.transitions + t + a.transitions;
          out.input[cell] = b.input[s * b.transitions + t];
          out.output[cell] = b.output[s * b.transitions + t];
        }
      }
      return Network(model, colors, std::move(out));
    }
    case ModelKind::free_varietal: {
      const std::size_t total = colors.size();
      const auto ctx = kneser_context(total, model.monoid());
      std::vector<Letter> letters;
      for (const auto& l : g.word().letters()) letters.push_back(relabel(m, total, l, 0));
      for (const auto& l : h.word().letters()) letters.push_back(relabel(h.arity(), total, l, m));
      return Network(model, colors,
                     GreenWord(ctx, normalize_letters(*ctx, std::move(letters), model.variety())));
    }
    case ModelKind::tensor:
    case ModelKind::colored: {
      Components out;
      for (std::size_t i = 0; i < g.components().parts.size(); ++i) {
        out.parts.push_back(disjoint_union(g.components().parts[i], h.components().parts[i]));
      }
      return Network(model, colors, std::move(out));
    }
  }
  throw domain_error("unknown model");
}

ColorWord permute_word(const Permutation& sigma, const ColorWord& colors) {
  if (sigma.size() != colors.size()) {
    throw arity_error("permutation on " + std::to_string(sigma.size()) + " points acting on arity " +
                      std::to_string(colors.size()));
  }
  ColorWord out(colors.size());
  for (std::size_t i = 0; i < colors.size(); ++i) out[sigma(i)] = colors[i];
  return out;
}

std::vector<Permutation> color_permutations(const Permutation& sigma, const ColorWord& colors,
                                            std::size_t color_count) {
  const ColorWord target = permute_word(sigma, colors);
  std::vector<std::size_t> rank(colors.size());
  std::vector<std::size_t> seen(color_count, 0);
  for (std::size_t i = 0; i < target.size(); ++i) rank[i] = seen[target[i]]++;
  std::vector<std::vector<std::size_t>> images(color_count);
  for (std::size_t i = 0; i < colors.size(); ++i) images[colors[i]].push_back(rank[sigma(i)]);
  std::vector<Permutation> out;
  for (auto& img : images) out.push_back(Permutation::from_image(img));
  return out;
}

Network act(const Permutation& sigma, const Network& g) {
  const auto& model = g.model();
  const ColorWord colors = permute_word(sigma, g.colors());
  switch (model.kind()) {
    case ModelKind::simple_graph: {
      EdgeSet out;
      for (const auto& e : g.edge_set().edges) out.edges.push_back(act_on_edge(sigma, e));
      return Network(model, colors, std::move(out));
    }
    case ModelKind::directed_graph: {
      ArcSet out;
      for (const auto& a : g.arc_set().arcs) {
        out.arcs.push_back({static_cast<std::uint8_t>(sigma(a.from)), static_cast<std::uint8_t>(sigma(a.to))});
      }
      return Network(model, colors, std::move(out));
    }
    case ModelKind::multigraph_max:
    case ModelKind::multigraph_sum:
    case ModelKind::gamma: {
      LabelMap out;
      for (const auto& [e, v] : g.label_map().labels) out.labels.emplace_back(act_on_edge(sigma, e), v);
      return Network(model, colors, std::move(out));
    }
    case ModelKind::hypergraph: {
      HyperedgeSet out;
      for (auto mask : g.hyperedges().masks) {
        std::uint64_t img = 0;
        for (std::size_t v = 0; v < sigma.size(); ++v) {
          if ((mask >> v) & 1u) img |= std::uint64_t{1} << sigma(v);
        }
        out.masks.push_back(img);
      }
      return Network(model, colors, std::move(out));
    }
    case ModelKind::partition_join:
    case ModelKind::partition_meet: {
      std::vector<std::uint8_t> b(sigma.size());
      for (std::size_t v = 0; v < sigma.size(); ++v) b[sigma(v)] = g.partition().block[v];
      return Network(model, colors, Partition{b});
    }
    case ModelKind::petri: {
      const auto perms = color_permutations(sigma, g.colors(), 2);
      const auto& p = g.petri();
      PetriMatrices out = p;
      for (std::size_t s = 0; s < p.species; ++s) {
        for (std::size_t t = 0; t < p.transitions; ++t) {
          const std::size_t cell = perms[0](s) * p.transitions + perms[1](t);
          out.input[cell] = p.input[s * p.transitions + t];
          out.output[cell] = p.output[s * p.transitions + t];
        }
      }
      return Network(model, colors, std::move(out));
    }
    case ModelKind::free_varietal: {
      const std::size_t n = g.arity();
      const auto& ctx = g.word().context_ptr();
      std::vector<Letter> letters;
      for (const auto& l : g.word().letters()) {
        letters.push_back({pair_index(n, act_on_edge(sigma, pair_at(n, l.component))), l.value});
      }
      return Network(model, colors,
                     GreenWord(ctx, normalize_letters(*ctx, std::move(letters), model.variety())));
    }
    case ModelKind::tensor: {
      Components out;
      for (const auto& part : g.components().parts) out.parts.push_back(act(sigma, part));
      return Network(model, colors, std::move(out));
    }
    case ModelKind::colored: {
      Components out;
      if (model.color_mode() == ColorMode::forget) {
        out.parts.push_back(act(sigma, g.components().parts[0]));
      } else {
        const auto perms = color_permutations(sigma, g.colors(), model.color_count());
        for (std::size_t c = 0; c < perms.size(); ++c) {
          out.parts.push_back(act(perms[c], g.components().parts[c]));
        }
      }
      return Network(model, colors, std::move(out));
    }
  }
  throw domain_error("unknown model");
}

Network map_labels(const MonoidHom& h, const Network& g) {
  validate(h);
  if (g.model().kind() != ModelKind::gamma || !(g.model().monoid() == h.source)) {
    throw mismatch_error("map_labels: network is over " + g.model().name() + ", hom starts at " +
                         to_string(h.source));
  }
  LabelMap out;
  for (const auto& [e, v] : g.label_map().labels) out.labels.emplace_back(e, hom_apply(h, v));
  return Network(ModelSpec::gamma(h.target), g.colors(), std::move(out));
}

Network tensor_networks(const Network& g, const Network& h) {
  if (g.colors() != h.colors()) {
    throw arity_error("tensor_networks: arities " + std::to_string(g.arity()) + " and " +
                      std::to_string(h.arity()));
  }
  return Network(ModelSpec::tensor(g.model(), h.model()), g.colors(), Components{{g, h}});
}

namespace {

void require_partitions(const Network& p, const Network& q, const char* op) {
  auto is_partition = [](const Network& x) {
    return x.model().kind() == ModelKind::partition_join ||
           x.model().kind() == ModelKind::partition_meet;
  };
  if (!is_partition(p) || !is_partition(q)) throw mismatch_error(std::string(op) + " needs partitions");
  if (p.arity() != q.arity()) throw arity_error(std::string(op) + ": arities differ");
}

}  // namespace

Network partition_join(const Network& p, const Network& q) {
  require_partitions(p, q, "partition_join");
  return Network(p.model(), p.colors(), Partition{join_blocks(p.partition(), q.partition())});
}

Network partition_meet(const Network& p, const Network& q) {
  require_partitions(p, q, "partition_meet");
  return Network(p.model(), p.colors(), Partition{meet_blocks(p.partition(), q.partition())});
}

Network gamma_bool_to_simple(const Network& g) {
  if (!(g.model() == ModelSpec::gamma(MonoidSpec::boolean()))) {
    throw mismatch_error("expected a Gamma(bool) network");
  }
  std::vector<Edge> edges;
  for (const auto& [e, v] : g.label_map().labels) edges.push_back(e);
  return make_simple_graph(g.arity(), std::move(edges));
}

Network simple_to_gamma_bool(const Network& g) {
  if (g.model().kind() != ModelKind::simple_graph) throw mismatch_error("expected a simple graph");
  std::vector<std::pair<Edge, MonoidElement>> labels;
  for (const auto& e : g.edge_set().edges) labels.emplace_back(e, 1);
  return make_labeled(ModelSpec::gamma(MonoidSpec::boolean()), g.arity(), std::move(labels));
}

Network to_gamma(const Network& g) {
  switch (g.model().kind()) {
    case ModelKind::simple_graph:
      return simple_to_gamma_bool(g);
    case ModelKind::multigraph_max:
    case ModelKind::multigraph_sum:
      return Network(ModelSpec::gamma(*label_monoid(g.model())), g.colors(), g.label_map());
    case ModelKind::gamma:
      return g;
    default:
      throw mismatch_error(g.model().name() + " is not a Gamma model");
  }
}

Network from_gamma(const Network& g, const ModelSpec& target) {
  if (g.model().kind() != ModelKind::gamma) throw mismatch_error("expected a Gamma network");
  if (target.kind() == ModelKind::simple_graph) return gamma_bool_to_simple(g);
  const auto m = label_monoid(target);
  if (!m || !(*m == g.model().monoid())) {
    throw mismatch_error("cannot view " + g.model().name() + " as " + target.name());
  }
  return Network(target, g.colors(), g.label_map());
}

std::size_t max_degree(const Network& g) {
  std::vector<std::size_t> deg(g.arity(), 0);
  switch (g.model().kind()) {
    case ModelKind::simple_graph:
      for (const auto& e : g.edge_set().edges) {
        ++deg[e.lo];
        ++deg[e.hi];
      }
      break;
    case ModelKind::multigraph_max:
    case ModelKind::multigraph_sum:
    case ModelKind::gamma:
      for (const auto& [e, v] : g.label_map().labels) {
        deg[e.lo] += v;
        deg[e.hi] += v;
      }
      break;
    default:
      throw mismatch_error("max_degree needs a graph payload");
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::string to_string(const Network& g) {
  std::ostringstream out;
  out << g.model().name() << "/" << g.arity() << " ";
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, EdgeSet>) {
          out << "{";
          for (std::size_t i = 0; i < p.edges.size(); ++i) out << (i ? "," : "") << to_string(p.edges[i]);
          out << "}";
        } else if constexpr (std::is_same_v<T, ArcSet>) {
          out << "{";
          for (std::size_t i = 0; i < p.arcs.size(); ++i) {
            out << (i ? "," : "") << "(" << p.arcs[i].from + 1 << "," << p.arcs[i].to + 1 << ")";
          }
          out << "}";
        } else if constexpr (std::is_same_v<T, LabelMap>) {
          out << "{";
          for (std::size_t i = 0; i < p.labels.size(); ++i) {
            out << (i ? "," : "") << to_string(p.labels[i].first) << "->" << p.labels[i].second;
          }
          out << "}";
        } else if constexpr (std::is_same_v<T, HyperedgeSet>) {
          out << "{";
          for (std::size_t i = 0; i < p.masks.size(); ++i) {
            out << (i ? "," : "") << "{";
            bool first = true;
            for (std::size_t v = 0; v < 64; ++v) {
              if ((p.masks[i] >> v) & 1u) {
                out << (first ? "" : ",") << v + 1;
                first = false;
              }
            }
            out << "}";
          }
          out << "}";
        } else if constexpr (std::is_same_v<T, Partition>) {
          out << "[";
          for (std::size_t i = 0; i < p.block.size(); ++i) out << (i ? "," : "") << int{p.block[i]};
          out << "]";
        } else if constexpr (std::is_same_v<T, PetriMatrices>) {
          out << "petri " << p.species << "x" << p.transitions;
        } else if constexpr (std::is_same_v<T, GreenWord>) {
          out << "<" << format_word(p) << ">";
        } else {
          out << "(";
          for (std::size_t i = 0; i < p.parts.size(); ++i) out << (i ? "; " : "") << to_string(p.parts[i]);
          out << ")";
        }
      },
      g.payload());
  return out.str();
}

}  // namespace netop
