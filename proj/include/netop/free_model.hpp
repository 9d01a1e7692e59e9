#pragma once

#include <cstddef>
#include <vector>

#include "netop/green.hpp"
#include "netop/monoid.hpp"
#include "netop/network.hpp"

namespace netop {

// The fibre of the free V-valued network model on M at arity n: normal-form
// words over KG(n,2), every component labeled by M.
struct FreeFibre {
  ModelSpec model;
  std::size_t n = 0;
  GreenContextPtr context;

  Network unit() const { return empty(model, n); }
  // Letters name vertex pairs through pair_index(n, edge).
  Network element(const std::vector<Letter>& letters) const { return make_free(model, n, letters); }
  Network from_edges(const std::vector<std::pair<Edge, MonoidElement>>& letters) const;
};

FreeFibre free_model(const MonoidSpec& m, Variety v, std::size_t n);

// Places each letter as a one-edge network of `target` and overlays them in word
// order. The target's edge monoid must equal the word's component monoid.
Network evaluate_word(const Network& word, const ModelSpec& target);
Network evaluate_word(const GreenWord& word, std::size_t n, const ModelSpec& target);

}  // namespace netop
