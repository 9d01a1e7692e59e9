#include "netop/free_model.hpp"

#include "netop/error.hpp"

namespace netop {

Network FreeFibre::from_edges(const std::vector<std::pair<Edge, MonoidElement>>& letters) const {
  std::vector<Letter> ls;
  ls.reserve(letters.size());
  for (const auto& [e, v] : letters) ls.push_back({pair_index(n, e), v});
  return element(ls);
}

FreeFibre free_model(const MonoidSpec& m, Variety v, std::size_t n) {
  auto model = ModelSpec::free_varietal(m, v);
  return FreeFibre{model, n, kneser_context(n, m)};
}

Network evaluate_word(const GreenWord& word, std::size_t n, const ModelSpec& target) {
  const auto& ctx = word.context();
  if (!ctx.kneser_n || *ctx.kneser_n != n) {
    throw mismatch_error("evaluate_word needs a word over KG(" + std::to_string(n) + ",2)");
  }
  const auto m = edge_monoid(target);
  if (!m) throw mismatch_error("model " + target.name() + " has no edge monoid");
  Network out = empty(target, n);
  for (const auto& l : word.letters()) {
    if (!(ctx.monoids[l.component] == *m)) {
      throw mismatch_error("component monoid " + to_string(ctx.monoids[l.component]) +
                           " differs from " + target.name() + " edge monoid " + to_string(*m));
    }
    out = overlay(out, single_edge(target, n, pair_at(n, l.component), l.value));
  }
  return out;
}

Network evaluate_word(const Network& word, const ModelSpec& target) {
  if (word.model().kind() != ModelKind::free_varietal) {
    throw mismatch_error("evaluate_word needs a free model network");
  }
  return evaluate_word(word.word(), word.arity(), target);
}

}  // namespace netop
