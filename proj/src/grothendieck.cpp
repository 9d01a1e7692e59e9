#include "netop/grothendieck.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "netop/error.hpp"
#include "netop/green.hpp"

namespace netop {

TotalObject tensor_objects(const TotalObject& x, const TotalObject& y) {
  TotalObject out = x;
  out.word.insert(out.word.end(), y.word.begin(), y.word.end());
  if (out.word.size() > max_arity) throw arity_error("object exceeds the maximum arity");
  return out;
}

TotalMorphism make_total(const TotalObject& source, const TotalObject& target,
                         const Permutation& sigma, const Network& g) {
  if (sigma.size() != source.arity()) {
    throw arity_error("permutation on " + std::to_string(sigma.size()) +
                      " points for a source of arity " + std::to_string(source.arity()));
  }
  if (permute_word(sigma, source.word) != target.word) {
    throw mismatch_error("permutation does not carry the source word onto the target word");
  }
  if (g.colors() != target.word) throw arity_error("network does not live over the target");
  return TotalMorphism{source, target, sigma, g};
}

TotalMorphism make_total(const TotalObject& source, const Permutation& sigma, const Network& g) {
  return make_total(source, TotalObject{permute_word(sigma, source.word)}, sigma, g);
}

TotalMorphism identity_total(const ModelSpec& model, const TotalObject& x) {
  return TotalMorphism{x, x, Permutation::identity(x.arity()), empty(model, x.word)};
}

TotalMorphism compose_total(const TotalMorphism& f2, const TotalMorphism& f1) {
  if (!(f1.target == f2.source)) {
    throw mismatch_error("compose_total: target of the first morphism differs from the source of the second");
  }
  return TotalMorphism{f1.source, f2.target, compose(f2.sigma, f1.sigma),
                       overlay(f2.g, act(f2.sigma, f1.g))};
}

TotalMorphism tensor_total(const TotalMorphism& f, const TotalMorphism& g) {
  return TotalMorphism{tensor_objects(f.source, g.source), tensor_objects(f.target, g.target),
                       block_sum(f.sigma, g.sigma), disjoint_union(f.g, g.g)};
}

TotalMorphism braiding_total(const ModelSpec& model, const TotalObject& x, const TotalObject& y) {
  const TotalObject src = tensor_objects(x, y);
  const TotalObject tgt = tensor_objects(y, x);
  return make_total(src, tgt, block_swap(x.arity(), y.arity()), empty(model, tgt.word));
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw overflow_error("fibre size exceeds 2^64");
  }
  return a * b;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

std::uint64_t bell(std::size_t n) {
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) {
      if (next.back() > std::numeric_limits<std::uint64_t>::max() - v) {
        throw overflow_error("fibre size exceeds 2^64");
      }
      next.push_back(next.back() + v);
    }
    row = std::move(next);
  }
  return row.front();
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f = checked_mul(f, i);
  return f;
}

std::vector<Edge> all_edges(std::size_t n) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out.push_back(Edge::make(i, j));
  }
  return out;
}

[[noreturn]] void infinite(const ModelSpec& model, std::size_t n) {
  throw domain_error(model.name() + "(" + std::to_string(n) + ") is infinite");
}

}  // namespace

std::uint64_t fibre_size(const ModelSpec& model, std::size_t n) {
  if (!model.is_one_colored()) throw domain_error("fibre_size needs a one-colored model");
  const std::uint64_t pairs = n * (n > 0 ? n - 1 : 0) / 2;
  switch (model.kind()) {
    case ModelKind::simple_graph:
      return checked_pow(2, pairs);
    case ModelKind::directed_graph:
      return checked_pow(2, 2 * pairs);
    case ModelKind::hypergraph:
      if (n >= 6) throw overflow_error("fibre size exceeds 2^64");
      return checked_pow(2, (std::uint64_t{1} << n) - 1);
    case ModelKind::partition_join:
    case ModelKind::partition_meet:
      return bell(n);
    case ModelKind::multigraph_max:
    case ModelKind::multigraph_sum:
      if (pairs == 0) return 1;
      infinite(model, n);
    case ModelKind::gamma:
      if (pairs == 0) return 1;
      if (!is_finite(model.monoid())) infinite(model, n);
      return checked_pow(carrier_size(model.monoid()), pairs);
    case ModelKind::free_varietal:
      if (pairs == 0) return 1;
      if (model.variety() == Variety::cmon && is_finite(model.monoid())) {
        return checked_pow(carrier_size(model.monoid()), pairs);
      }
      throw domain_error(model.name() + "(" + std::to_string(n) + ") is not counted");
    case ModelKind::tensor:
      return checked_mul(fibre_size(model.parts()[0], n), fibre_size(model.parts()[1], n));
    case ModelKind::colored:
      return fibre_size(model.parts()[0], n);
    case ModelKind::petri:
      break;
  }
  throw domain_error("fibre_size needs a one-colored model");
}

HomCount decompose_total(const ModelSpec& model, std::size_t n) {
  HomCount h;
  h.fibre = fibre_size(model, n);
  h.permutations = factorial(n);
  h.total = checked_mul(h.fibre, h.permutations);
  return h;
}

std::vector<Network> enumerate_fibre(const ModelSpec& model, std::size_t n, std::size_t limit) {
  const std::uint64_t size = fibre_size(model, n);
  if (size > limit) {
    throw domain_error("fibre of size " + std::to_string(size) + " exceeds the enumeration limit");
  }
  std::vector<Network> out;
  out.reserve(static_cast<std::size_t>(size));
  const auto edges = all_edges(n);

  // Mixed-radix counter over `digits` positions with `radix` values each.
  auto mixed = [&](std::size_t digits, std::uint64_t radix, auto&& emit) {
    std::vector<std::uint64_t> d(digits, 0);
    while (true) {
      emit(d);
      std::size_t i = 0;
      while (i < digits && ++d[i] == radix) d[i++] = 0;
      if (i == digits) break;
    }
  };

  switch (model.kind()) {
    case ModelKind::simple_graph:
      mixed(edges.size(), 2, [&](const auto& d) {
        std::vector<Edge> es;
        for (std::size_t i = 0; i < d.size(); ++i) if (d[i]) es.push_back(edges[i]);
        out.push_back(make_simple_graph(n, es));
      });
      return out;
    case ModelKind::directed_graph: {
      std::vector<Arc> arcs;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j) arcs.push_back({static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)});
        }
      }
      mixed(arcs.size(), 2, [&](const auto& d) {
        std::vector<Arc> as;
        for (std::size_t i = 0; i < d.size(); ++i) if (d[i]) as.push_back(arcs[i]);
        out.push_back(make_directed_graph(n, as));
      });
      return out;
    }
    case ModelKind::hypergraph: {
      const std::size_t masks = (std::size_t{1} << n) - 1;
      mixed(masks, 2, [&](const auto& d) {
        HyperedgeSet h;
        for (std::size_t i = 0; i < d.size(); ++i) if (d[i]) h.masks.push_back(i + 1);
        out.push_back(Network(model, uncolored(n), h));
      });
      return out;
    }
    case ModelKind::partition_join:
    case ModelKind::partition_meet: {
      // Restricted growth strings.
      std::vector<std::uint8_t> rgs(n, 0);
      auto rec = [&](auto&& self, std::size_t i, std::uint8_t top) -> void {
        if (i == n) {
          out.push_back(Network(model, uncolored(n), Partition{rgs}));
          return;
        }
        for (std::uint8_t b = 0; b <= top; ++b) {
          rgs[i] = b;
          self(self, i + 1, static_cast<std::uint8_t>(std::max<int>(top, b + 1)));
        }
      };
      if (n == 0) {
        out.push_back(empty(model, 0));
      } else {
        rgs[0] = 0;
        rec(rec, 1, 1);
      }
      return out;
    }
    case ModelKind::multigraph_max:
    case ModelKind::multigraph_sum:
    case ModelKind::gamma: {
      const std::uint64_t radix = edges.empty() ? 1 : carrier_size(*edge_monoid(model));
      mixed(edges.size(), radix, [&](const auto& d) {
        std::vector<std::pair<Edge, MonoidElement>> ls;
        for (std::size_t i = 0; i < d.size(); ++i) ls.emplace_back(edges[i], d[i]);
        out.push_back(make_labeled(model, n, ls));
      });
      return out;
    }
    case ModelKind::free_varietal: {
      const std::uint64_t radix = edges.empty() ? 1 : carrier_size(model.monoid());
      mixed(edges.size(), radix, [&](const auto& d) {
        std::vector<Letter> ls;
        for (std::size_t i = 0; i < d.size(); ++i) ls.push_back({pair_index(n, edges[i]), d[i]});
        out.push_back(make_free(model, n, ls));
      });
      return out;
    }
    case ModelKind::tensor: {
      const auto a = enumerate_fibre(model.parts()[0], n, limit);
      const auto b = enumerate_fibre(model.parts()[1], n, limit);
      for (const auto& x : a) {
        for (const auto& y : b) out.push_back(tensor_networks(x, y));
      }
      return out;
    }
    case ModelKind::colored:
      for (const auto& x : enumerate_fibre(model.parts()[0], n, limit)) {
        out.push_back(Network(model, uncolored(n), Components{{x}}));
      }
      return out;
    case ModelKind::petri:
      break;
  }
  throw domain_error("cannot enumerate " + model.name());
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<std::size_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_image(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<TotalMorphism> enumerate_endomorphisms(const ModelSpec& model, std::size_t n) {
  const auto x = TotalObject::of_arity(n);
  std::vector<TotalMorphism> out;
  const auto fibre = enumerate_fibre(model, n);
  for (const auto& sigma : all_permutations(n)) {
    for (const auto& g : fibre) out.push_back(make_total(x, x, sigma, g));
  }
  return out;
}

}  // namespace netop
