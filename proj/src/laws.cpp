#include "netop/laws.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "netop/algebra.hpp"
#include "netop/error.hpp"
#include "netop/grothendieck.hpp"
#include "netop/petri.hpp"

namespace netop {

namespace {

// Runs one randomized case, turning exceptions into failures.
template <typename F>
void run_case(LawReport& r, std::size_t index, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    r.fail("case " + std::to_string(index) + " threw: " + e.what());
  }
}

std::string show(const Network& g) { return to_string(g); }
std::string show(const Permutation& p) { return p.to_string(); }

ColorWord concat_words(ColorWord a, const ColorWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

LawReport check_model_laws(const ModelSpec& model, std::size_t cases, std::uint64_t seed,
                           std::size_t max_n) {
  LawReport r{model.name() + " equations", cases, {}};
  Rng rng(seed);
  const std::size_t total = arity_cap(model);
  const std::size_t cap = std::min(max_n, total);
  for (std::size_t c = 0; c < cases; ++c) {
    run_case(r, c, [&] {
      const std::size_t n = uniform(rng, 0, cap);
      const std::size_t m = uniform(rng, 0, std::min(cap, total - n));
      const std::size_t p = uniform(rng, 0, std::min(cap, total - n - m));
      const auto wn = random_colors(model, n, rng);
      const auto wm = random_colors(model, m, rng);
      const auto wp = random_colors(model, p, rng);
      const Network g1 = random_network(model, wn, rng), g2 = random_network(model, wn, rng),
                    g3 = random_network(model, wn, rng);
      const Network h1 = random_network(model, wm, rng), h2 = random_network(model, wm, rng);
      const Network k = random_network(model, wp, rng);
      const Permutation s1 = random_permutation(n, rng), s2 = random_permutation(n, rng);
      const Permutation t = random_permutation(m, rng);
      const Network en = empty(model, wn), em = empty(model, wm), e0 = empty(model, 0);
      const std::string at = "case " + std::to_string(c) + " ";

      if (!(overlay(en, g1) == g1 && overlay(g1, en) == g1)) {
        r.fail(at + "unit of overlay: g=" + show(g1));
      }
      if (!(overlay(overlay(g1, g2), g3) == overlay(g1, overlay(g2, g3)))) {
        r.fail(at + "associativity of overlay: " + show(g1) + ", " + show(g2) + ", " + show(g3));
      }
      if (!(act(s1, overlay(g1, g2)) == overlay(act(s1, g1), act(s1, g2)))) {
        r.fail(at + "action on overlay: sigma=" + show(s1) + " g1=" + show(g1) + " g2=" + show(g2));
      }
      if (!(act(s1, en) == empty(model, permute_word(s1, wn)))) {
        r.fail(at + "action on the unit: sigma=" + show(s1));
      }
      if (!(act(compose(s2, s1), g1) == act(s2, act(s1, g1)))) {
        r.fail(at + "action law: sigma1=" + show(s1) + " sigma2=" + show(s2) + " g=" + show(g1));
      }
      if (!(disjoint_union(overlay(h1, h2), overlay(g1, g2)) ==
            overlay(disjoint_union(h1, g1), disjoint_union(h2, g2)))) {
        r.fail(at + "interchange: h1=" + show(h1) + " h2=" + show(h2) + " g1=" + show(g1) +
               " g2=" + show(g2));
      }
      if (!(act(Permutation::identity(n), g1) == g1)) r.fail(at + "identity action: g=" + show(g1));
      if (!(disjoint_union(em, en) == empty(model, concat_words(wm, wn)))) {
        r.fail(at + "union of units: m=" + std::to_string(m) + " n=" + std::to_string(n));
      }
      if (!(disjoint_union(act(t, h1), act(s1, g1)) ==
            act(block_sum(t, s1), disjoint_union(h1, g1)))) {
        r.fail(at + "naturality: tau=" + show(t) + " sigma=" + show(s1) + " h=" + show(h1) +
               " g=" + show(g1));
      }
      if (!(disjoint_union(disjoint_union(h1, g1), k) ==
            disjoint_union(h1, disjoint_union(g1, k)))) {
        r.fail(at + "associativity of disjoint union: " + show(h1) + ", " + show(g1) + ", " +
               show(k));
      }
      if (!(disjoint_union(e0, g1) == g1 && disjoint_union(g1, e0) == g1)) {
        r.fail(at + "nullary unit: g=" + show(g1));
      }
      if (!(act(block_swap(m, n), disjoint_union(h1, g1)) == disjoint_union(g1, h1))) {
        r.fail(at + "symmetry: h=" + show(h1) + " g=" + show(g1));
      }
      const Network left = disjoint_union(h1, en), right = disjoint_union(em, g1);
      if (!(overlay(left, right) == overlay(right, left))) {
        r.fail(at + "disjoint commutation: a=" + show(h1) + " b=" + show(g1));
      }
    });
  }
  return r;
}

LawReport check_hom_laws(const MonoidHom& h, std::size_t cases, std::uint64_t seed,
                         std::size_t max_n) {
  validate(h);
  LawReport r{"map_labels " + to_string(h), cases, {}};
  const ModelSpec src = ModelSpec::gamma(h.source);
  const ModelSpec tgt = ModelSpec::gamma(h.target);
  Rng rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    run_case(r, c, [&] {
      const std::size_t n = uniform(rng, 0, max_n), m = uniform(rng, 0, max_n);
      const Network g1 = random_network(src, n, rng), g2 = random_network(src, n, rng);
      const Network k = random_network(src, m, rng);
      const Permutation s = random_permutation(n, rng);
      const std::string at = "case " + std::to_string(c) + " ";
      if (!(map_labels(h, overlay(g1, g2)) == overlay(map_labels(h, g1), map_labels(h, g2)))) {
        r.fail(at + "overlay: " + show(g1) + ", " + show(g2));
      }
      if (!(map_labels(h, disjoint_union(g1, k)) ==
            disjoint_union(map_labels(h, g1), map_labels(h, k)))) {
        r.fail(at + "disjoint union: " + show(g1) + ", " + show(k));
      }
      if (!(map_labels(h, act(s, g1)) == act(s, map_labels(h, g1)))) {
        r.fail(at + "action: sigma=" + show(s) + " g=" + show(g1));
      }
      if (!(map_labels(h, empty(src, n)) == empty(tgt, n))) r.fail(at + "unit");
    });
  }
  return r;
}

LawReport check_gamma_bool_iso(std::size_t exhaustive_n, std::size_t max_n, std::size_t samples,
                               std::uint64_t seed) {
  LawReport r{"gamma(bool) ~ sg", 0, {}};
  const ModelSpec gb = ModelSpec::gamma(MonoidSpec::boolean());
  auto fwd = [](const Network& g) { return gamma_bool_to_simple(g); };
  auto check_pair = [&](const Network& x, const Network& y) {
    if (!(fwd(overlay(x, y)) == overlay(fwd(x), fwd(y)))) {
      r.fail("overlay: " + show(x) + ", " + show(y));
    }
  };
  auto check_union = [&](const Network& x, const Network& y) {
    if (!(fwd(disjoint_union(x, y)) == disjoint_union(fwd(x), fwd(y)))) {
      r.fail("disjoint union: " + show(x) + ", " + show(y));
    }
  };
  auto check_act = [&](const Permutation& s, const Network& x) {
    if (!(fwd(act(s, x)) == act(s, fwd(x)))) r.fail("action: " + show(s) + " on " + show(x));
  };

  std::vector<std::vector<Network>> fibres;
  for (std::size_t n = 0; n <= exhaustive_n; ++n) {
    const auto xs = enumerate_fibre(gb, n);
    const auto ys = enumerate_fibre(ModelSpec::simple_graph(), n);
    std::set<std::string> images;
    for (const auto& x : xs) {
      ++r.cases;
      const Network y = fwd(x);
      if (!(simple_to_gamma_bool(y) == x)) r.fail("round trip: " + show(x));
      images.insert(show(y));
    }
    if (images.size() != ys.size() || xs.size() != ys.size()) {
      r.fail("fibre " + std::to_string(n) + " is not a bijection");
    }
    for (const auto& x : xs) {
      for (const auto& y : xs) check_pair(x, y);
      for (const auto& s : all_permutations(n)) check_act(s, x);
    }
    fibres.push_back(xs);
  }
  for (std::size_t m = 0; m < fibres.size(); ++m) {
    for (std::size_t n = 0; n < fibres.size(); ++n) {
      for (const auto& x : fibres[m]) {
        for (const auto& y : fibres[n]) check_union(x, y);
      }
    }
  }
  Rng rng(seed);
  for (std::size_t n = exhaustive_n + 1; n <= max_n; ++n) {
    for (std::size_t c = 0; c < samples; ++c) {
      ++r.cases;
      const Network x = random_network(gb, n, rng), y = random_network(gb, n, rng);
      const Network z = random_network(gb, uniform(rng, 0, max_n), rng);
      if (!(simple_to_gamma_bool(fwd(x)) == x)) r.fail("round trip: " + show(x));
      check_pair(x, y);
      check_union(x, z);
      check_act(random_permutation(n, rng), x);
    }
  }
  return r;
}

namespace {

TotalMorphism random_total(const ModelSpec& model, const TotalObject& x, Rng& rng) {
  const Permutation s = random_permutation(x.arity(), rng);
  const TotalObject y{permute_word(s, x.word)};
  return make_total(x, y, s, random_network(model, y.word, rng));
}

std::string show(const TotalMorphism& f) {
  return "(" + f.sigma.to_string() + ", " + to_string(f.g) + ")";
}

}  // namespace

LawReport check_total_laws(const ModelSpec& model, std::size_t cases, std::uint64_t seed,
                           std::size_t max_n) {
  LawReport r{"total category of " + model.name(), cases, {}};
  Rng rng(seed);
  const std::size_t total = arity_cap(model);
  const std::size_t cap = std::min(max_n, total);
  for (std::size_t c = 0; c < cases; ++c) {
    run_case(r, c, [&] {
      const std::size_t n = uniform(rng, 0, cap);
      const std::size_t m = uniform(rng, 0, std::min(cap, total - n));
      const TotalObject x{random_colors(model, n, rng)};
      const TotalObject xp{random_colors(model, m, rng)};
      const auto f1 = random_total(model, x, rng);
      const auto f2 = random_total(model, f1.target, rng);
      const auto f3 = random_total(model, f2.target, rng);
      const auto g1 = random_total(model, xp, rng);
      const auto g2 = random_total(model, g1.target, rng);
      const std::string at = "case " + std::to_string(c) + " ";

      if (!(compose_total(f3, compose_total(f2, f1)) == compose_total(compose_total(f3, f2), f1))) {
        r.fail(at + "associativity: " + show(f1) + ", " + show(f2) + ", " + show(f3));
      }
      if (!(compose_total(identity_total(model, f1.target), f1) == f1 &&
            compose_total(f1, identity_total(model, x)) == f1)) {
        r.fail(at + "units: " + show(f1));
      }
      if (!(compose_total(tensor_total(f2, g2), tensor_total(f1, g1)) ==
            tensor_total(compose_total(f2, f1), compose_total(g2, g1)))) {
        r.fail(at + "tensor interchange: " + show(f1) + ", " + show(f2) + " | " + show(g1) +
               ", " + show(g2));
      }
      if (!(tensor_total(identity_total(model, x), identity_total(model, xp)) ==
            identity_total(model, tensor_objects(x, xp)))) {
        r.fail(at + "tensor of identities");
      }
      const auto bxy = braiding_total(model, x, xp);
      const auto byx = braiding_total(model, xp, x);
      if (!(compose_total(byx, bxy) == identity_total(model, tensor_objects(x, xp)))) {
        r.fail(at + "braiding symmetry at " + std::to_string(n) + "," + std::to_string(m));
      }
      const auto natural_l = compose_total(tensor_total(g1, f1), bxy);
      const auto natural_r =
          compose_total(braiding_total(model, f1.target, g1.target), tensor_total(f1, g1));
      if (!(natural_l == natural_r)) {
        r.fail(at + "braiding naturality: f=" + show(f1) + " g=" + show(g1));
      }
    });
  }
  return r;
}

LawReport check_braiding(const ModelSpec& model, std::size_t max_total) {
  LawReport r{"braiding of " + model.name(), 0, {}};
  for (std::size_t m = 0; m <= max_total; ++m) {
    for (std::size_t n = 0; m + n <= max_total; ++n) {
      ++r.cases;
      if (!compose(block_swap(n, m), block_swap(m, n)).is_identity()) {
        r.fail("block_swap(" + std::to_string(n) + "," + std::to_string(m) + ") o block_swap(" +
               std::to_string(m) + "," + std::to_string(n) + ") is not the identity");
      }
      const auto x = TotalObject::of_arity(m), y = TotalObject::of_arity(n);
      if (!(compose_total(braiding_total(model, y, x), braiding_total(model, x, y)) ==
            identity_total(model, tensor_objects(x, y)))) {
        r.fail("B o B at " + std::to_string(m) + "," + std::to_string(n));
      }
    }
  }
  return r;
}

namespace {

// A two-level tree: f with arguments a_i, and b_ij plugged into a_i.
struct Tree {
  OperadOperation f;
  std::vector<OperadOperation> a;
  std::vector<std::vector<OperadOperation>> b;
};

std::size_t random_slots(std::size_t n, std::size_t max_slots, Rng& rng) {
  return n == 0 ? uniform(rng, 0, 1) : uniform(rng, 1, max_slots);
}

Tree random_tree(const ModelSpec& model, std::size_t bound, Rng& rng) {
  const std::size_t n = uniform(rng, 0, bound);
  Tree t{random_operation(model, random_profile(n, random_slots(n, 4, rng), rng), rng), {}, {}};
  for (auto ni : t.f.profile()) {
    t.a.push_back(random_operation(model, random_profile(ni, random_slots(ni, 3, rng), rng), rng));
    std::vector<OperadOperation> row;
    for (auto mij : t.a.back().profile()) {
      row.push_back(random_operation(model, random_profile(mij, random_slots(mij, 2, rng), rng), rng));
    }
    t.b.push_back(std::move(row));
  }
  return t;
}

OperadOperation compose_without_action(const OperadOperation& f,
                                       const std::vector<OperadOperation>& args) {
  if (args.size() != f.slots()) throw arity_error("slot count mismatch");
  std::vector<std::size_t> profile;
  std::vector<Permutation> taus;
  Network h = empty(f.model(), 0);
  for (const auto& a : args) {
    profile.insert(profile.end(), a.profile().begin(), a.profile().end());
    taus.push_back(a.sigma());
    h = disjoint_union(h, a.g());
  }
  return OperadOperation(std::move(profile), compose(f.sigma(), block_sum(taus)), overlay(f.g(), h));
}

std::vector<std::size_t> slot_counts(const std::vector<OperadOperation>& ops) {
  std::vector<std::size_t> out;
  for (const auto& o : ops) out.push_back(o.slots());
  return out;
}

}  // namespace

LawReport check_operad_laws(const ModelSpec& model, std::size_t bound, std::size_t cases,
                            std::uint64_t seed, OperadFault fault) {
  LawReport r{"operad laws over " + model.name(), cases, {}};
  if (!model.is_one_colored()) throw mismatch_error("operad laws need a one-colored model");
  Rng rng(seed);
  auto comp = [fault](const OperadOperation& f, const std::vector<OperadOperation>& args) {
    return fault == OperadFault::skip_action ? compose_without_action(f, args)
                                             : compose_operad(f, args);
  };
  const std::size_t cap = std::min(bound, arity_cap(model));
  for (std::size_t c = 0; c < cases; ++c) {
    run_case(r, c, [&] {
      const Tree t = random_tree(model, cap, rng);
      const std::string at = "case " + std::to_string(c) + " f=" + to_string(t.f) + " ";
      const std::size_t k = t.f.slots();

      std::vector<OperadOperation> inner, flat;
      for (std::size_t i = 0; i < k; ++i) {
        inner.push_back(comp(t.a[i], t.b[i]));
        flat.insert(flat.end(), t.b[i].begin(), t.b[i].end());
      }
      const auto fa = comp(t.f, t.a);
      if (!(comp(t.f, inner) == comp(fa, flat))) r.fail(at + "associativity");

      std::vector<OperadOperation> ids;
      for (auto ni : t.f.profile()) ids.push_back(identity_operation(model, ni));
      if (!(comp(t.f, ids) == t.f)) r.fail(at + "right unit");
      if (!(comp(identity_operation(model, t.f.target()), {t.f}) == t.f)) r.fail(at + "left unit");

      const Permutation tau = random_permutation(k, rng);
      std::vector<OperadOperation> shuffled;
      for (std::size_t i = 0; i < k; ++i) shuffled.push_back(t.a[tau(i)]);
      if (!(comp(right_act(t.f, tau), shuffled) ==
            right_act(fa, expand_blocks(tau, slot_counts(t.a))))) {
        r.fail(at + "equivariance in the outer slots: tau=" + show(tau));
      }

      std::vector<Permutation> taus;
      std::vector<OperadOperation> acted;
      for (const auto& a : t.a) {
        taus.push_back(random_permutation(a.slots(), rng));
        acted.push_back(right_act(a, taus.back()));
      }
      if (!(comp(t.f, acted) == right_act(fa, block_sum(taus)))) {
        r.fail(at + "equivariance in the inner slots");
      }

      const Permutation tau2 = random_permutation(k, rng);
      if (!(right_act(right_act(t.f, tau), tau2) == right_act(t.f, compose(tau, tau2)))) {
        r.fail(at + "right action law: tau=" + show(tau) + " tau'=" + show(tau2));
      }
      if (!(right_act(t.f, Permutation::identity(k)) == t.f)) r.fail(at + "identity right action");
    });
  }
  return r;
}

namespace {

Attribute random_point(Rng& rng) {
  return Point{static_cast<double>(uniform(rng, 0, 4)), static_cast<double>(uniform(rng, 0, 4))};
}

std::vector<Attribute> random_points(std::size_t n, Rng& rng) {
  std::vector<Attribute> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_point(rng));
  return out;
}

std::vector<Attribute> tokens(std::size_t n, std::size_t& next) {
  std::vector<Attribute> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("v" + std::to_string(next++));
  return out;
}

}  // namespace

LawReport check_algebra_laws(const ModelSpec& model, std::size_t bound, std::size_t cases,
                             std::uint64_t seed) {
  LawReport r{"algebra laws over " + model.name(), cases, {}};
  Rng rng(seed);
  const std::size_t cap = std::min(bound, arity_cap(model));
  for (std::size_t c = 0; c < cases; ++c) {
    run_case(r, c, [&] {
      const Tree t = random_tree(model, cap, rng);
      const std::string at = "case " + std::to_string(c) + " f=" + to_string(t.f) + " ";
      std::size_t next = 0;
      std::vector<std::vector<AttributedNetwork>> xs(t.a.size());
      std::vector<AttributedNetwork> flat_x, inner_x;
      std::vector<Network> flat_g, inner_g;
      for (std::size_t i = 0; i < t.a.size(); ++i) {
        std::vector<Network> gs;
        for (auto mij : t.a[i].profile()) {
          xs[i].emplace_back(random_network(model, mij, rng), tokens(mij, next));
          gs.push_back(xs[i].back().g);
          flat_x.push_back(xs[i].back());
          flat_g.push_back(xs[i].back().g);
        }
        inner_g.push_back(act_canonical(t.a[i], gs));
        inner_x.push_back(act_vertex_attr(t.a[i], xs[i]));
      }
      const auto fa = compose_operad(t.f, t.a);
      if (!(act_canonical(fa, flat_g) == act_canonical(t.f, inner_g))) {
        r.fail(at + "canonical action associativity");
      }
      const auto attr = act_vertex_attr(fa, flat_x);
      if (!(attr == act_vertex_attr(t.f, inner_x))) r.fail(at + "attributed action associativity");
      if (!(attr.g == act_canonical(fa, flat_g))) r.fail(at + "forgetting attributes");

      for (std::size_t i = 0; i < t.a.size(); ++i) {
        if (!(act_vertex_attr(identity_operation(model, inner_x[i].g.arity()), {inner_x[i]}) ==
              inner_x[i])) {
          r.fail(at + "unit action");
        }
      }
      const Permutation tau = random_permutation(t.f.slots(), rng);
      std::vector<AttributedNetwork> shuffled;
      for (std::size_t i = 0; i < inner_x.size(); ++i) shuffled.push_back(inner_x[tau(i)]);
      if (!(act_vertex_attr(right_act(t.f, tau), shuffled) == act_vertex_attr(t.f, inner_x))) {
        r.fail(at + "algebra equivariance: tau=" + show(tau));
      }
    });
  }
  return r;
}

LawReport check_filter_laws(std::size_t cases, std::uint64_t seed) {
  LawReport r{"predicate and bound filters", cases, {}};
  Rng rng(seed);
  const ModelSpec sg = ModelSpec::simple_graph();
  const ModelSpec mg = ModelSpec::multigraph_sum();
  for (std::size_t c = 0; c < cases; ++c) {
    run_case(r, c, [&] {
      const std::string at = "case " + std::to_string(c) + " ";
      const double far = static_cast<double>(uniform(rng, 1, 4));
      const auto pred = coin(rng, 0.2) ? EdgePredicate::always() : EdgePredicate::max_distance(far);
      const auto bnd = coin(rng, 0.3) ? EdgeBound::constant(uniform(rng, 0, 3))
                                      : EdgeBound::two_tier(far, far - 1 + 0.5 * uniform(rng, 0, 1));
      const std::size_t n = uniform(rng, 0, 6);
      const AttributedNetwork a(random_network(sg, n, rng), random_points(n, rng));
      const auto fa = filter_predicate(a, pred);
      if (!satisfies(fa, pred)) r.fail(at + "filtered network violates " + pred.name());
      if (!(filter_predicate(fa, pred) == fa)) r.fail(at + "predicate filter is not idempotent");
      const AttributedNetwork b(random_network(mg, n, rng), a.x);
      const auto fb = filter_bound(b, bnd);
      if (!satisfies(fb, bnd)) r.fail(at + "clipped network violates " + bnd.name());
      if (!(filter_bound(fb, bnd) == fb)) r.fail(at + "bound filter is not idempotent");

      // Two-level trees in the filtered algebras.
      for (const auto& model : {sg, mg}) {
        const Tree t = random_tree(model, 8, rng);
        std::vector<AttributedNetwork> flat, inner;
        for (std::size_t i = 0; i < t.a.size(); ++i) {
          std::vector<AttributedNetwork> xs;
          for (auto mij : t.a[i].profile()) {
            const AttributedNetwork x(random_network(model, mij, rng), random_points(mij, rng));
            xs.push_back(model == sg ? filter_predicate(x, pred) : filter_bound(x, bnd));
            flat.push_back(xs.back());
          }
          inner.push_back(model == sg ? act_predicate(t.a[i], xs, pred) : act_bound(t.a[i], xs, bnd));
        }
        const auto fa2 = compose_operad(t.f, t.a);
        const bool same = model == sg
                              ? act_predicate(fa2, flat, pred) == act_predicate(t.f, inner, pred)
                              : act_bound(fa2, flat, bnd) == act_bound(t.f, inner, bnd);
        if (!same) r.fail(at + "filtered algebra associativity over " + model.name());
      }
    });
  }
  return r;
}

GreenWord random_shuffle(const GreenWord& w, Variety v, std::size_t moves, Rng& rng) {
  const GreenContext& ctx = w.context();
  std::vector<Letter> ls = w.letters();
  for (std::size_t step = 0; step < moves; ++step) {
    if (ls.empty()) break;
    const std::size_t i = uniform(rng, 0, ls.size() - 1);
    switch (uniform(rng, 0, v == Variety::gmon ? 3 : 2)) {
      case 0:
        if (i + 1 < ls.size() &&
            (v == Variety::cmon || ls[i].component == ls[i + 1].component ||
             ctx.graph.commute(ls[i].component, ls[i + 1].component))) {
          if (ls[i].component != ls[i + 1].component ||
              is_commutative(ctx.monoids[ls[i].component])) {
            std::swap(ls[i], ls[i + 1]);
          }
        }
        break;
      case 1: {
        if (ls.size() >= max_word_length - 2) break;
        const MonoidSpec& m = ctx.monoids[ls[i].component];
        std::vector<std::pair<MonoidElement, MonoidElement>> splits;
        const auto sample = sample_elements(m, ls[i].value + 1);
        for (auto a : sample) {
          for (auto b : sample) {
            if (a != unit(m) && b != unit(m) && mul(m, a, b) == ls[i].value) splits.emplace_back(a, b);
          }
        }
        if (splits.empty()) break;
        const auto [a, b] = splits[uniform(rng, 0, splits.size() - 1)];
        ls[i].value = a;
        ls.insert(ls.begin() + static_cast<std::ptrdiff_t>(i + 1), Letter{ls[i].component, b});
        break;
      }
      case 2:
        if (i + 1 < ls.size() && ls[i].component == ls[i + 1].component) {
          const MonoidSpec& m = ctx.monoids[ls[i].component];
          const auto prod = mul(m, ls[i].value, ls[i + 1].value);
          ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(i + 1));
          if (prod == unit(m)) {
            ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(i));
          } else {
            ls[i].value = prod;
          }
        }
        break;
      case 3: {
        // x u = x u x in a graphic monoid.
        if (ls.size() >= max_word_length - 2) break;
        const std::size_t j = uniform(rng, i + 1, ls.size());
        ls.insert(ls.begin() + static_cast<std::ptrdiff_t>(j), ls[i]);
        break;
      }
    }
  }
  return GreenWord(w.context_ptr(), std::move(ls));
}

LawReport check_degree_bounded(std::size_t cases, std::uint64_t seed) {
  LawReport r{"degree-bounded algebra", cases, {}};
  Rng rng(seed);
  const ModelSpec free_g = ModelSpec::free_varietal(MonoidSpec::boolean(), Variety::gmon);
  const ModelSpec sg = ModelSpec::simple_graph();
  for (std::size_t c = 0; c < cases; ++c) {
    run_case(r, c, [&] {
      const std::size_t k = uniform(rng, 1, 3);
      const std::size_t n = uniform(rng, 0, max_kneser_n);
      const auto profile = random_profile(n, random_slots(n, 3, rng), rng);
      const auto f = random_operation(free_g, profile, rng);
      std::vector<Network> args;
      Network h = empty(sg, 0);
      for (auto ni : profile) {
        // A random k-bounded graph: attempt a random edge order.
        const Network bounded = attempt_edges(
            empty(sg, ni), random_word(kneser_context(ni, MonoidSpec::boolean()), 8, rng), k);
        args.push_back(bounded);
        h = disjoint_union(h, bounded);
      }
      const std::string at = "case " + std::to_string(c) + " f=" + to_string(f) + " k=" +
                             std::to_string(k) + " ";
      const Network out = act_degree_bounded(f, args, k);
      if (max_degree(out) > k) r.fail(at + "degree bound exceeded: " + show(out));
      const Network start = act(f.sigma(), h);
      if (!(overlay(start, out) == out)) r.fail(at + "argument edges lost");
      const GreenWord other = random_shuffle(f.g().word(), Variety::gmon, 12, rng);
      if (!(normalize(other, Variety::gmon) == f.g().word())) {
        r.fail(at + "shuffle left the class: " + format_word(other));
        return;
      }
      if (!(attempt_edges(start, other, k) == out)) {
        r.fail(at + "representative " + format_word(other) + " acts differently");
      }
    });
  }
  return r;
}

LawReport check_normal_form_laws(Variety v, const MonoidSpec& m, std::size_t n, std::size_t cases,
                                 std::uint64_t seed) {
  LawReport r{"normal form over KG(" + std::to_string(n) + ",2) " + to_string(m) + " " +
                  to_string(v),
              cases, {}};
  Rng rng(seed);
  const auto ctx = kneser_context(n, m);
  for (std::size_t c = 0; c < cases; ++c) {
    run_case(r, c, [&] {
      const GreenWord w = random_word(ctx, 8, rng);
      const GreenWord nf = normalize(w, v);
      const std::string at = "case " + std::to_string(c) + " w=" + format_word(w) + " ";
      if (!(normalize(nf, v) == nf)) r.fail(at + "not idempotent");
      const GreenWord other = random_shuffle(w, v, 10, rng);
      if (!(normalize(other, v) == nf)) {
        r.fail(at + "representative " + format_word(other) + " has another normal form");
      }
      if (!words_equal(w, other, v)) r.fail(at + "words_equal rejects " + format_word(other));
    });
  }
  return r;
}

LawReport check_commutation(std::size_t n, std::size_t cases, std::uint64_t seed) {
  LawReport r{"commutation over KG(" + std::to_string(n) + ",2)", cases, {}};
  Rng rng(seed);
  const auto ctx = kneser_context(n, MonoidSpec::boolean());
  const std::size_t comps = ctx->graph.size();
  if (comps < 2) return r;
  for (std::size_t c = 0; c < cases; ++c) {
    const std::size_t a = uniform(rng, 0, comps - 1), b = uniform(rng, 0, comps - 1);
    if (a == b) continue;
    const GreenWord ab(ctx, {{a, 1}, {b, 1}}), ba(ctx, {{b, 1}, {a, 1}});
    const bool commute = ctx->graph.commute(a, b);
    if (words_equal(ab, ba, Variety::mon) != commute) {
      r.fail(format_word(ab) + " vs " + format_word(ba) +
             (commute ? ": disjoint pairs fail to commute" : ": overlapping pairs commute"));
    }
  }
  return r;
}

LawReport check_graphic_identity(std::size_t max_n, std::size_t cases, std::uint64_t seed) {
  LawReport r{"graphic identity in free(bool,gmon)", cases, {}};
  Rng rng(seed);
  const ModelSpec model = ModelSpec::free_varietal(MonoidSpec::boolean(), Variety::gmon);
  for (std::size_t c = 0; c < cases; ++c) {
    run_case(r, c, [&] {
      const std::size_t n = uniform(rng, 2, max_n);
      const Network w = random_network(model, n, rng), v = random_network(model, n, rng);
      if (!(overlay(overlay(w, v), w) == overlay(w, v))) {
        r.fail("wvw != wv for w=" + show(w) + " v=" + show(v));
      }
      if (!(overlay(w, w) == w)) r.fail("ww != w for w=" + show(w));
    });
  }
  return r;
}

LawReport check_kneser_functoriality(std::size_t max_n, std::size_t cases, std::uint64_t seed) {
  LawReport r{"Kneser functoriality", cases, {}};
  Rng rng(seed);
  auto injection = [&](std::size_t m, std::size_t n) {
    std::vector<std::size_t> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    img.resize(m);
    return img;
  };
  for (std::size_t c = 0; c < cases; ++c) {
    const std::size_t p = uniform(rng, 2, max_n);
    const std::size_t n = uniform(rng, 2, p);
    const std::size_t m = uniform(rng, 2, n);
    const auto f = injection(m, n), g = injection(n, p);
    const auto kf = kneser_map(f, n, 2);
    const auto kg = kneser_map(g, p, 2);
    const auto src = kneser_graph(m, 2), tgt = kneser_graph(n, 2);
    const std::string at = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " ";
    if (std::set<std::size_t>(kf.begin(), kf.end()).size() != kf.size()) {
      r.fail(at + "vertex map is not injective");
    }
    for (std::size_t u = 0; u < src.size(); ++u) {
      for (std::size_t v = 0; v < src.size(); ++v) {
        if (u != v && src.commute(u, v) != tgt.commute(kf[u], kf[v])) {
          r.fail(at + "adjacency not preserved at " + std::to_string(u) + "," + std::to_string(v));
        }
      }
    }
    std::vector<std::size_t> gf(m);
    for (std::size_t i = 0; i < m; ++i) gf[i] = g[f[i]];
    const auto kgf = kneser_map(gf, p, 2);
    for (std::size_t u = 0; u < kf.size(); ++u) {
      if (kgf[u] != kg[kf[u]]) r.fail(at + "composite maps disagree");
    }
  }
  return r;
}

namespace {

struct CatalystNet {
  PetriNet net;
  std::vector<std::size_t> c;
};

CatalystNet random_catalyst_net(Rng& rng) {
  const std::size_t s = uniform(rng, 2, 5), t = uniform(rng, 1, 4);
  std::vector<std::string> species;
  for (std::size_t i = 0; i < s; ++i) species.push_back("s" + std::to_string(i));
  std::vector<std::size_t> c;
  for (std::size_t i = 0; i < s; ++i) if (coin(rng, 0.4)) c.push_back(i);
  std::vector<Transition> ts;
  for (std::size_t j = 0; j < t; ++j) {
    Transition tr{"t" + std::to_string(j), Marking(s), Marking(s)};
    for (std::size_t i = 0; i < s; ++i) {
      tr.source[i] = uniform(rng, 0, 2);
      tr.target[i] = std::binary_search(c.begin(), c.end(), i) ? tr.source[i] : uniform(rng, 0, 2);
    }
    ts.push_back(std::move(tr));
  }
  return {PetriNet(species, std::move(ts)), c};
}

}  // namespace

LawReport check_catalyst_conservation(std::size_t cases, std::uint64_t seed) {
  LawReport r{"catalyst conservation", cases, {}};
  Rng rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    run_case(r, c, [&] {
      const auto [net, cs] = random_catalyst_net(rng);
      const std::string at = "case " + std::to_string(c) + " net:\n" + format_petri(net);
      const auto actual = catalysts(net);
      if (!std::includes(actual.begin(), actual.end(), cs.begin(), cs.end())) {
        r.fail(at + "designated catalysts missing from catalysts()");
        return;
      }
      const Marking m = random_marking(net, 3, rng);
      const Execution e = random_execution(net, m, 6, rng);
      const auto g0 = grade(net, actual, m);
      for (const auto& mk : trace(net, e)) {
        if (grade(net, actual, mk) != g0) {
          r.fail(at + "grade changes along " + to_string(net, e));
          break;
        }
      }
      // Every execution of length <= 6 stays inside this set.
      for (const auto& mk : reachable(net, m, 6)) {
        if (grade(net, actual, mk) != g0) {
          r.fail(at + "grade of reachable " + format_marking(net, mk) + " differs from " +
                 format_marking(net, m));
          break;
        }
      }
      if (!actual.empty()) {
        const std::size_t x = actual[uniform(rng, 0, actual.size() - 1)];
        Transition bump{"bump", net.zero(), net.zero()};
        bump.target[x] = 1;
        const auto changed = catalysts(net.with_transition(bump));
        if (std::binary_search(changed.begin(), changed.end(), x)) {
          r.fail(at + "species " + net.species()[x] + " survives a transition that creates it");
        }
      }
    });
  }
  return r;
}

LawReport check_execution_laws(std::size_t cases, std::uint64_t seed) {
  LawReport r{"executions", cases, {}};
  Rng rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    run_case(r, c, [&] {
      const auto [net, cs] = random_catalyst_net(rng);
      const std::string at = "case " + std::to_string(c) + " ";
      const Marking m1 = random_marking(net, 3, rng);
      Marking m2 = random_marking(net, 3, rng);
      for (auto s : cs) m2[s] = m1[s];
      const Execution e1 = random_execution(net, m1, 4, rng);
      const Execution e2 = random_execution(net, e1.end, 3, rng);
      const Execution f = random_execution(net, m2, 4, rng);

      const auto ce = compose_exec(e2, e1);
      validate(net, ce);
      const auto te = tensor_exec(e1, f);
      validate(net, te);
      if (grade(net, cs, te.start) != grade(net, cs, e1.start) + grade(net, cs, f.start)) {
        r.fail(at + "grade is not additive under tensor");
      }
      const Marking extra = random_marking(net, 2, rng);
      const auto we = whisker(e1, extra, coin(rng) ? Side::left : Side::right);
      validate(net, we);
      if (parikh(net, we) != parikh(net, e1)) r.fail(at + "whiskering changed the Parikh vector");

      const auto lf = premonoidal_tensor(net, e1, f, Order::left_first, cs);
      const auto rf = premonoidal_tensor(net, e1, f, Order::right_first, cs);
      validate(net, lf);
      validate(net, rf);
      const Marking i = grade_marking(net, grade(net, cs, m1));
      if (lf.start != e1.start + f.start - i || lf.end != e1.end + f.end - i ||
          rf.start != lf.start || rf.end != lf.end) {
        r.fail(at + "premonoidal endpoints");
      }
      if (parikh(net, lf) != parikh(net, rf)) r.fail(at + "premonoidal Parikh vectors differ");

      std::vector<std::size_t> word;
      for (auto s : cs) word.insert(word.end(), m1[s], s);
      const auto g1 = int_g_morphism(net, cs, word, random_permutation(word.size(), rng), e1);
      const auto g2 =
          int_g_morphism(net, cs, g1.target_word, random_permutation(word.size(), rng), e2);
      const auto g12 = compose_int_g(g2, g1);
      if (g12.target_word != g2.target_word || !(g12.exec == ce)) r.fail(at + "int_g composite");
      const auto gt = tensor_int_g(g1, g2);
      int_g_morphism(net, cs, gt.source_word, gt.sigma, gt.exec);
    });
  }
  return r;
}

std::vector<ModelSpec> registered_models() {
  const std::vector<std::string> colors{"boat", "plane"};
  return {
      ModelSpec::simple_graph(),
      ModelSpec::directed_graph(),
      ModelSpec::multigraph_max(),
      ModelSpec::multigraph_sum(),
      ModelSpec::hypergraph(),
      ModelSpec::partition_join(),
      ModelSpec::partition_meet(),
      ModelSpec::gamma(MonoidSpec::nat_add()),
      ModelSpec::gamma(MonoidSpec::trunc_add(1)),
      ModelSpec::gamma(MonoidSpec::trunc_add(2)),
      ModelSpec::gamma(MonoidSpec::boolean()),
      ModelSpec::gamma(MonoidSpec::nat_max()),
      ModelSpec::tensor(ModelSpec::simple_graph(), ModelSpec::directed_graph()),
      ModelSpec::colored_forget(ModelSpec::simple_graph(), colors),
      ModelSpec::colored_per_color(colors, {ModelSpec::simple_graph(), ModelSpec::directed_graph()}),
      ModelSpec::petri(),
  };
}

std::vector<ModelSpec> free_models() {
  return {
      ModelSpec::free_varietal(MonoidSpec::boolean(), Variety::mon),
      ModelSpec::free_varietal(MonoidSpec::boolean(), Variety::gmon),
      ModelSpec::free_varietal(MonoidSpec::nat_add(), Variety::mon),
      ModelSpec::free_varietal(MonoidSpec::boolean(), Variety::cmon),
      ModelSpec::free_varietal(MonoidSpec::nat_add(), Variety::cmon),
  };
}

Suite parse_suite(const std::string& name) {
  if (name == "models") return Suite::models;
  if (name == "operad") return Suite::operad;
  if (name == "green") return Suite::green;
  if (name == "petri") return Suite::petri;
  if (name == "all") return Suite::all;
  throw parse_error("unknown suite '" + name + "' (models, operad, green, petri, all)");
}

std::vector<LawReport> run_suite(Suite suite, std::size_t cases, std::uint64_t seed,
                                 OperadFault fault) {
  std::vector<LawReport> out;
  const bool all = suite == Suite::all;
  // Each check gets its own stream so adding a check does not shift the others.
  std::uint64_t stream = 0;
  auto next = [&] { return seed * 1000003 + ++stream; };
  if (all || suite == Suite::models) {
    for (const auto& m : registered_models()) out.push_back(check_model_laws(m, cases, next()));
    for (const auto& h : registered_homs()) {
      if (h.source.kind != h.target.kind || h.rule != HomRule::identity) {
        out.push_back(check_hom_laws(h, cases, next()));
      }
    }
    out.push_back(check_gamma_bool_iso(3, 5, cases, next()));
    for (const auto& m : {ModelSpec::gamma(MonoidSpec::nat_add()), ModelSpec::simple_graph(),
                          ModelSpec::petri()}) {
      out.push_back(check_total_laws(m, cases, next()));
    }
    out.push_back(check_braiding(ModelSpec::simple_graph(), 8));
  }
  if (all || suite == Suite::operad) {
    for (const auto& m : {ModelSpec::simple_graph(), ModelSpec::gamma(MonoidSpec::nat_add()),
                          ModelSpec::partition_meet(),
                          ModelSpec::tensor(ModelSpec::simple_graph(), ModelSpec::directed_graph()),
                          ModelSpec::free_varietal(MonoidSpec::boolean(), Variety::gmon)}) {
      out.push_back(check_operad_laws(m, 8, cases, next(), fault));
    }
    for (const auto& m : {ModelSpec::simple_graph(), ModelSpec::multigraph_sum()}) {
      out.push_back(check_algebra_laws(m, 8, cases, next()));
    }
    out.push_back(check_filter_laws(cases, next()));
    out.push_back(check_degree_bounded(cases, next()));
  }
  if (all || suite == Suite::green) {
    for (const auto& m : free_models()) out.push_back(check_model_laws(m, cases, next(), 5));
    for (const auto& [v, m] : std::vector<std::pair<Variety, MonoidSpec>>{
             {Variety::mon, MonoidSpec::boolean()},
             {Variety::mon, MonoidSpec::nat_add()},
             {Variety::cmon, MonoidSpec::nat_add()},
             {Variety::gmon, MonoidSpec::boolean()},
             {Variety::gmon, MonoidSpec::nat_max()}}) {
      out.push_back(check_normal_form_laws(v, m, 5, cases, next()));
    }
    out.push_back(check_commutation(5, cases, next()));
    out.push_back(check_graphic_identity(5, cases, next()));
    out.push_back(check_kneser_functoriality(8, cases, next()));
  }
  if (all || suite == Suite::petri) {
    out.push_back(check_catalyst_conservation(cases, next()));
    out.push_back(check_execution_laws(cases, next()));
  }
  return out;
}

}  // namespace netop
