#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "netop/green.hpp"
#include "netop/monoid.hpp"
#include "netop/permutation.hpp"

namespace netop {

enum class ModelKind {
  simple_graph,
  directed_graph,
  multigraph_max,
  multigraph_sum,
  hypergraph,
  partition_join,
  partition_meet,
  gamma,
  petri,
  tensor,
  colored,
  free_varietal,
};

enum class ColorMode { forget, per_color };

// A network model: the family F(n) together with its overlay, disjoint union and
// permutation action. Cheap to copy; the description is shared.
class ModelSpec {
 public:
  ModelSpec();

  static ModelSpec simple_graph();
  static ModelSpec directed_graph();
  static ModelSpec multigraph_max();
  static ModelSpec multigraph_sum();
  static ModelSpec hypergraph();
  static ModelSpec partition_join();
  static ModelSpec partition_meet();
  static ModelSpec gamma(const MonoidSpec& m);
  // Colors: 0 = species, 1 = transition.
  static ModelSpec petri();
  static ModelSpec tensor(const ModelSpec& a, const ModelSpec& b);
  // Colors are forgotten: a network on a colored word is a network of `inner`
  // on that many vertices, and edges may join any two colors.
  static ModelSpec colored_forget(const ModelSpec& inner, std::vector<std::string> colors);
  // One network per color on that color's vertices; no edges across colors.
  static ModelSpec colored_per_color(std::vector<std::string> colors, std::vector<ModelSpec> parts);
  static ModelSpec free_varietal(const MonoidSpec& m, Variety v);

  ModelKind kind() const;
  const MonoidSpec& monoid() const;  // gamma and free_varietal
  Variety variety() const;           // free_varietal
  ColorMode color_mode() const;      // colored
  const std::vector<ModelSpec>& parts() const;
  const std::vector<std::string>& colors() const;
  std::size_t color_count() const;
  bool is_one_colored() const { return color_count() == 1; }
  std::string name() const;

  friend bool operator==(const ModelSpec& a, const ModelSpec& b);

 private:
  struct Node;
  static std::shared_ptr<const Node> builtin(ModelKind kind);
  explicit ModelSpec(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

using ColorWord = std::vector<std::uint8_t>;

// Directed edge (from, to), 0-indexed, from != to.
struct Arc {
  std::uint8_t from = 0;
  std::uint8_t to = 1;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct EdgeSet {
  std::vector<Edge> edges;  // sorted, unique
  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
};

struct ArcSet {
  std::vector<Arc> arcs;  // sorted, unique
  friend bool operator==(const ArcSet&, const ArcSet&) = default;
};

// Sparse edge labeling: sorted by edge, unit labels omitted.
struct LabelMap {
  std::vector<std::pair<Edge, MonoidElement>> labels;
  friend bool operator==(const LabelMap&, const LabelMap&) = default;
};

// Hyperedges as vertex bitmasks, sorted, unique, nonzero.
struct HyperedgeSet {
  std::vector<std::uint64_t> masks;
  friend bool operator==(const HyperedgeSet&, const HyperedgeSet&) = default;
};

// Block label per vertex, numbered in order of first appearance.
struct Partition {
  std::vector<std::uint8_t> block;
  friend bool operator==(const Partition&, const Partition&) = default;
};

// Input and output multiplicities, row-major species x transitions.
struct PetriMatrices {
  std::size_t species = 0;
  std::size_t transitions = 0;
  std::vector<std::uint64_t> input;
  std::vector<std::uint64_t> output;
  friend bool operator==(const PetriMatrices&, const PetriMatrices&) = default;
};

class Network;

struct Components {
  std::vector<Network> parts;
  friend bool operator==(const Components&, const Components&);
};

using Payload = std::variant<EdgeSet, ArcSet, LabelMap, HyperedgeSet, Partition, PetriMatrices,
                             GreenWord, Components>;

class Network {
 public:
  // Validates the payload against the model and arity, and canonicalizes it.
  Network(ModelSpec model, ColorWord colors, Payload payload);

  const ModelSpec& model() const { return model_; }
  std::size_t arity() const { return colors_.size(); }
  const ColorWord& colors() const { return colors_; }
  const Payload& payload() const { return payload_; }

  const EdgeSet& edge_set() const { return std::get<EdgeSet>(payload_); }
  const ArcSet& arc_set() const { return std::get<ArcSet>(payload_); }
  const LabelMap& label_map() const { return std::get<LabelMap>(payload_); }
  const HyperedgeSet& hyperedges() const { return std::get<HyperedgeSet>(payload_); }
  const Partition& partition() const { return std::get<Partition>(payload_); }
  const PetriMatrices& petri() const { return std::get<PetriMatrices>(payload_); }
  const GreenWord& word() const { return std::get<GreenWord>(payload_); }
  const Components& components() const { return std::get<Components>(payload_); }

  friend bool operator==(const Network& a, const Network& b);

 private:
  ModelSpec model_;
  ColorWord colors_;
  Payload payload_;
};

inline bool operator==(const Components& a, const Components& b) { return a.parts == b.parts; }

ColorWord uncolored(std::size_t n);

// Edge label monoid when F(2) is a single edge slot labeled in a monoid.
std::optional<MonoidSpec> edge_monoid(const ModelSpec& model);

Network empty(const ModelSpec& model, std::size_t n);
Network empty(const ModelSpec& model, const ColorWord& colors);

Network make_simple_graph(std::size_t n, std::vector<Edge> edges);
Network make_directed_graph(std::size_t n, std::vector<Arc> arcs);
// For multigraph_max, multigraph_sum and gamma models.
Network make_labeled(const ModelSpec& model, std::size_t n,
                     std::vector<std::pair<Edge, MonoidElement>> labels);
// Hyperedges as 0-indexed vertex lists.
Network make_hypergraph(std::size_t n, const std::vector<std::vector<std::size_t>>& hyperedges);
// Blocks as 0-indexed vertex lists; every vertex must appear exactly once.
Network make_partition(const ModelSpec& model, std::size_t n,
                       const std::vector<std::vector<std::size_t>>& blocks);
Network make_petri(const ColorWord& colors, std::vector<std::uint64_t> input,
                   std::vector<std::uint64_t> output);
Network make_free(const ModelSpec& model, std::size_t n, const std::vector<Letter>& letters);
// Places `value` on edge e of an n-vertex network, for models with an edge monoid.
Network single_edge(const ModelSpec& model, std::size_t n, const Edge& e, MonoidElement value);

Network overlay(const Network& g, const Network& h);
Network disjoint_union(const Network& g, const Network& h);
Network act(const Permutation& sigma, const Network& g);
Network map_labels(const MonoidHom& h, const Network& g);
Network tensor_networks(const Network& g, const Network& h);
Network partition_join(const Network& p, const Network& q);
Network partition_meet(const Network& p, const Network& q);

// Colored word after applying sigma: result[sigma(i)] = colors[i].
ColorWord permute_word(const Permutation& sigma, const ColorWord& colors);
// For each color, the permutation sigma induces on that color's vertices, each
// numbered in order of appearance in its word.
std::vector<Permutation> color_permutations(const Permutation& sigma, const ColorWord& colors,
                                            std::size_t color_count);

// The isomorphism between Gamma over the Boolean monoid and simple graphs.
Network gamma_bool_to_simple(const Network& g);
Network simple_to_gamma_bool(const Network& g);
// Multigraphs as Gamma networks over (N,max) and (N,+), and back.
Network to_gamma(const Network& g);
Network from_gamma(const Network& g, const ModelSpec& target);

std::size_t max_degree(const Network& g);
std::string to_string(const Network& g);

}  // namespace netop
