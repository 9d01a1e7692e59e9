#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netop/monoid.hpp"
#include "netop/permutation.hpp"

namespace netop {

inline constexpr std::size_t max_components = 64;
inline constexpr std::size_t max_word_length = 64;
inline constexpr std::size_t max_kneser_n = 8;

// Simple graph on component indices; an edge means the two components commute.
class CommutationGraph {
 public:
  CommutationGraph() = default;
  CommutationGraph(std::size_t vertices,
                   const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t size() const { return adj_.size(); }
  bool commute(std::size_t a, std::size_t b) const { return (adj_[a] >> b) & 1u; }
  std::size_t degree(std::size_t v) const;
  std::size_t edge_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const CommutationGraph&, const CommutationGraph&) = default;

 private:
  std::vector<std::uint64_t> adj_;
};

struct KneserSpec {
  std::size_t n = 0;
  std::size_t k = 0;

  std::size_t vertex_count() const;
  // k-subsets of {0..n-1} in lexicographic order.
  std::vector<std::vector<std::size_t>> vertices() const;
};

CommutationGraph kneser_graph(std::size_t n, std::size_t k);

// Index of the pair e in the lexicographic list of 2-subsets of {0..n-1}.
std::size_t pair_index(std::size_t n, const Edge& e);
Edge pair_at(std::size_t n, std::size_t index);

// Vertex map KG(m,k) -> KG(n,k) induced by an injection f: {0..m-1} -> {0..n-1}.
std::vector<std::size_t> kneser_map(const std::vector<std::size_t>& f, std::size_t n,
                                    std::size_t k);

struct GreenContext {
  CommutationGraph graph;
  std::vector<MonoidSpec> monoids;  // one per component
  // Set when the graph is KG(n,2) and components stand for vertex pairs.
  std::optional<std::size_t> kneser_n;
};

using GreenContextPtr = std::shared_ptr<const GreenContext>;

GreenContextPtr make_context(CommutationGraph graph, std::vector<MonoidSpec> monoids);
GreenContextPtr uniform_context(CommutationGraph graph, const MonoidSpec& monoid);
// KG(n,2) with every component labeled by `monoid`; repeated calls share one object.
GreenContextPtr kneser_context(std::size_t n, const MonoidSpec& monoid);

bool same_context(const GreenContext& a, const GreenContext& b);

struct Letter {
  std::size_t component = 0;
  MonoidElement value = 1;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

enum class Variety { mon, cmon, gmon };

std::string to_string(Variety v);

class GreenWord {
 public:
  GreenWord() = default;
  // Validates components and values; unit-valued letters are dropped.
  GreenWord(GreenContextPtr context, std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  const GreenContext& context() const { return *context_; }
  const GreenContextPtr& context_ptr() const { return context_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  // Literal equality of the letter sequences; use words_equal for equality in
  // the Green product.
  friend bool operator==(const GreenWord& a, const GreenWord& b);

 private:
  GreenContextPtr context_;
  std::vector<Letter> letters_;
};

GreenWord concat(const GreenWord& a, const GreenWord& b);
// Product in the Green product over variety v: concatenate, then normalize.
GreenWord multiply(const GreenWord& a, const GreenWord& b, Variety v);
// Normal form of a raw letter sequence; the input may exceed max_word_length.
std::vector<Letter> normalize_letters(const GreenContext& ctx, std::vector<Letter> letters,
                                      Variety v);

bool is_reduced(const GreenWord& w);
GreenWord reduce(const GreenWord& w);
GreenWord normal_form(const GreenWord& w);
// Throws mismatch_error when some component monoid is not graphic.
GreenWord graphic_normal_form(const GreenWord& w);
// All components commute: one letter per component, in component order.
GreenWord commutative_normal_form(const GreenWord& w);
GreenWord normalize(const GreenWord& w, Variety v);

bool words_equal(const GreenWord& a, const GreenWord& b, Variety v = Variety::mon);

// Component names: `e12` (or `e1-10` past single digits) for Kneser contexts,
// `c3` otherwise; `:value` follows non-Boolean letters.
std::string component_name(const GreenContext& ctx, std::size_t component);
std::string format_word(const GreenWord& w);
GreenWord parse_word(const std::string& text, const GreenContextPtr& context);

}  // namespace netop
