#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "netop/green.hpp"
#include "netop/network.hpp"
#include "netop/permutation.hpp"

namespace netop::test {

inline Permutation perm(std::initializer_list<std::size_t> one_based) {
  return Permutation::from_one_based(std::vector<std::size_t>(one_based));
}

inline std::vector<Edge> edges(std::initializer_list<std::pair<std::size_t, std::size_t>> es) {
  std::vector<Edge> out;
  for (auto [i, j] : es) out.push_back(Edge::one_based(i, j));
  return out;
}

inline Network sg(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> es) {
  return make_simple_graph(n, edges(es));
}

struct LabeledEdge {
  std::size_t i, j;
  MonoidElement v;
};

inline Network labeled(const ModelSpec& model, std::size_t n,
                       std::initializer_list<LabeledEdge> es) {
  std::vector<std::pair<Edge, MonoidElement>> out;
  for (const auto& e : es) out.emplace_back(Edge::one_based(e.i, e.j), e.v);
  return make_labeled(model, n, std::move(out));
}

// Letters e_ij over KG(n,2), 1-based.
inline Letter kl(std::size_t n, std::size_t i, std::size_t j, MonoidElement v = 1) {
  return {pair_index(n, Edge::one_based(i, j)), v};
}

inline GreenWord kword(std::size_t n, const MonoidSpec& m, std::vector<Letter> letters) {
  return GreenWord(kneser_context(n, m), std::move(letters));
}

}  // namespace netop::test
