#include "netop/random.hpp"

#include <algorithm>
#include <numeric>

#include "netop/error.hpp"

namespace netop {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Permutation random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_image(img);
}

ColorWord random_colors(const ModelSpec& model, std::size_t n, Rng& rng) {
  ColorWord w(n, 0);
  const std::size_t c = model.color_count();
  for (auto& x : w) x = static_cast<std::uint8_t>(uniform(rng, 0, c - 1));
  return w;
}

MonoidElement random_element(const MonoidSpec& m, Rng& rng, std::uint64_t bound) {
  switch (m.kind) {
    case MonoidKind::boolean_or:
      return 1;
    case MonoidKind::trunc_add:
      return m.k == 0 ? 0 : uniform(rng, 1, m.k);
    default:
      return uniform(rng, 1, std::max<std::uint64_t>(bound, 1));
  }
}

GreenWord random_word(const GreenContextPtr& ctx, std::size_t max_length, Rng& rng) {
  std::vector<Letter> letters;
  const std::size_t c = ctx->graph.size();
  if (c > 0) {
    const std::size_t len = uniform(rng, 0, std::min(max_length, max_word_length));
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t comp = uniform(rng, 0, c - 1);
      letters.push_back({comp, random_element(ctx->monoids[comp], rng)});
    }
  }
  return GreenWord(ctx, std::move(letters));
}

std::vector<std::size_t> random_profile(std::size_t n, std::size_t k, Rng& rng) {
  if (k == 0) {
    if (n != 0) throw arity_error("cannot split a positive arity into zero parts");
    return {};
  }
  std::vector<std::size_t> out(k, 0);
  for (std::size_t i = 0; i < n; ++i) ++out[uniform(rng, 0, k - 1)];
  return out;
}

std::size_t arity_cap(const ModelSpec& model) {
  switch (model.kind()) {
    case ModelKind::free_varietal:
      return max_kneser_n;
    case ModelKind::tensor:
    case ModelKind::colored: {
      std::size_t cap = max_arity;
      for (const auto& p : model.parts()) cap = std::min(cap, arity_cap(p));
      return cap;
    }
    default:
      return max_arity;
  }
}

namespace {

double density(Rng& rng) {
  static constexpr double choices[] = {0.15, 0.35, 0.6};
  return choices[uniform(rng, 0, 2)];
}

std::vector<Edge> pairs(std::size_t n) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out.push_back(Edge::make(i, j));
  }
  return out;
}

std::size_t count(const ColorWord& w, std::uint8_t c) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), c));
}

}  // namespace

Network random_network(const ModelSpec& model, std::size_t n, Rng& rng) {
  return random_network(model, uncolored(n), rng);
}

Network random_network(const ModelSpec& model, const ColorWord& colors, Rng& rng) {
  const std::size_t n = colors.size();
  if (n > arity_cap(model)) throw arity_error("arity above what " + model.name() + " supports");
  const double p = density(rng);
  switch (model.kind()) {
    case ModelKind::simple_graph: {
      std::vector<Edge> es;
      for (const auto& e : pairs(n)) if (coin(rng, p)) es.push_back(e);
      return make_simple_graph(n, es);
    }
    case ModelKind::directed_graph: {
      std::vector<Arc> as;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j && coin(rng, p)) {
            as.push_back({static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)});
          }
        }
      }
      return make_directed_graph(n, as);
    }
    case ModelKind::multigraph_max:
    case ModelKind::multigraph_sum:
    case ModelKind::gamma: {
      const MonoidSpec m = *edge_monoid(model);
      std::vector<std::pair<Edge, MonoidElement>> ls;
      for (const auto& e : pairs(n)) {
        if (coin(rng, p)) ls.emplace_back(e, random_element(m, rng));
      }
      return make_labeled(model, n, ls);
    }
    case ModelKind::hypergraph: {
      HyperedgeSet h;
      if (n > 0) {
        const std::uint64_t full = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        const std::size_t k = uniform(rng, 0, 3);
        for (std::size_t i = 0; i < k; ++i) {
          std::uint64_t mask = 0;
          while (mask == 0) {
            for (std::size_t v = 0; v < n; ++v) if (coin(rng, 0.4)) mask |= std::uint64_t{1} << v;
            mask &= full;
          }
          h.masks.push_back(mask);
        }
      }
      return Network(model, colors, h);
    }
    case ModelKind::partition_join:
    case ModelKind::partition_meet: {
      Partition part;
      const std::size_t blocks = n == 0 ? 1 : uniform(rng, 1, n);
      for (std::size_t i = 0; i < n; ++i) {
        part.block.push_back(static_cast<std::uint8_t>(uniform(rng, 0, blocks - 1)));
      }
      return Network(model, colors, part);
    }
    case ModelKind::petri: {
      PetriMatrices pm;
      pm.species = count(colors, 0);
      pm.transitions = count(colors, 1);
      for (std::size_t i = 0; i < pm.species * pm.transitions; ++i) {
        pm.input.push_back(coin(rng, p) ? uniform(rng, 1, 2) : 0);
        pm.output.push_back(coin(rng, p) ? uniform(rng, 1, 2) : 0);
      }
      return Network(model, colors, pm);
    }
    case ModelKind::free_varietal:
      return Network(model, colors, random_word(kneser_context(n, model.monoid()), 6, rng));
    case ModelKind::tensor:
      return Network(model, colors,
                     Components{{random_network(model.parts()[0], colors, rng),
                                 random_network(model.parts()[1], colors, rng)}});
    case ModelKind::colored: {
      Components c;
      if (model.color_mode() == ColorMode::forget) {
        c.parts.push_back(random_network(model.parts()[0], n, rng));
      } else {
        for (std::size_t i = 0; i < model.parts().size(); ++i) {
          c.parts.push_back(
              random_network(model.parts()[i], count(colors, static_cast<std::uint8_t>(i)), rng));
        }
      }
      return Network(model, colors, std::move(c));
    }
  }
  throw domain_error("unknown model");
}

OperadOperation random_operation(const ModelSpec& model, const std::vector<std::size_t>& profile,
                                 Rng& rng) {
  const std::size_t n = std::accumulate(profile.begin(), profile.end(), std::size_t{0});
  return OperadOperation(profile, random_permutation(n, rng), random_network(model, n, rng));
}

Execution random_execution(const PetriNet& net, const Marking& m, std::size_t max_steps, Rng& rng) {
  std::vector<std::size_t> firings;
  Marking cur = m;
  for (std::size_t i = 0; i < max_steps; ++i) {
    const auto en = enabled(net, cur);
    if (en.empty()) break;
    const auto t = en[uniform(rng, 0, en.size() - 1)];
    cur = fire(net, cur, t);
    firings.push_back(t);
  }
  return from_firings(net, m, firings);
}

Marking random_marking(const PetriNet& net, std::uint64_t max_count, Rng& rng) {
  Marking m = net.zero();
  for (std::size_t s = 0; s < m.size(); ++s) m[s] = uniform(rng, 0, max_count);
  return m;
}

}  // namespace netop
