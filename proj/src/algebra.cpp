#include "netop/algebra.hpp"

#include <cmath>
#include <sstream>

#include "netop/error.hpp"

namespace netop {

std::string to_string(const Attribute& a) {
  if (const auto* s = std::get_if<std::string>(&a)) return *s;
  const auto& p = std::get<Point>(a);
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i];
  out << ')';
  return out.str();
}

AttributedNetwork::AttributedNetwork(Network g_, std::vector<Attribute> x_)
    : g(std::move(g_)), x(std::move(x_)) {
  if (x.size() != g.arity()) {
    throw arity_error("network of arity " + std::to_string(g.arity()) + " with " +
                      std::to_string(x.size()) + " attributes");
  }
}

namespace {

const Point& as_point(const Attribute& a) {
  const auto* p = std::get_if<Point>(&a);
  if (!p) throw domain_error("distance between non-point attributes");
  return *p;
}

bool integral(double v) { return std::isfinite(v) && std::floor(v) == v && std::fabs(v) < 1e9; }

}  // namespace

double distance(const Attribute& a, const Attribute& b) {
  const auto& p = as_point(a);
  const auto& q = as_point(b);
  if (p.size() != q.size()) throw mismatch_error("points of different dimensions");
  double s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += (p[i] - q[i]) * (p[i] - q[i]);
  return std::sqrt(s);
}

bool within_distance(const Attribute& a, const Attribute& b, double limit) {
  const auto& p = as_point(a);
  const auto& q = as_point(b);
  if (p.size() != q.size()) throw mismatch_error("points of different dimensions");
  bool exact = integral(limit);
  for (std::size_t i = 0; i < p.size() && exact; ++i) exact = integral(p[i]) && integral(q[i]);
  if (exact) {
    __int128 s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const auto d = static_cast<__int128>(p[i]) - static_cast<__int128>(q[i]);
      s += d * d;
    }
    const auto l = static_cast<__int128>(limit);
    return limit >= 0 && s <= l * l;
  }
  return distance(a, b) <= limit + 1e-9;
}

EdgePredicate EdgePredicate::always() {
  return EdgePredicate("always", [](const Attribute&, const Attribute&) { return true; });
}

EdgePredicate EdgePredicate::max_distance(double limit) {
  std::ostringstream name;
  name << "max-dist:" << limit;
  return EdgePredicate(name.str(), [limit](const Attribute& a, const Attribute& b) {
    return within_distance(a, b, limit);
  });
}

EdgeBound EdgeBound::constant(std::uint64_t k) {
  return EdgeBound("constant:" + std::to_string(k),
                   [k](const Attribute&, const Attribute&) { return k; });
}

EdgeBound EdgeBound::two_tier(double far, double near) {
  if (!(near < far)) throw domain_error("two-tier bound needs L2 < L1");
  std::ostringstream name;
  name << "two-tier:" << far << ',' << near;
  return EdgeBound(name.str(), [far, near](const Attribute& a, const Attribute& b) {
    if (!within_distance(a, b, far)) return std::uint64_t{0};
    return within_distance(a, b, near) ? std::uint64_t{2} : std::uint64_t{1};
  });
}

namespace {

void check_profile(const OperadOperation& f, const std::vector<std::size_t>& arities) {
  if (arities.size() != f.slots()) {
    throw arity_error("operation has " + std::to_string(f.slots()) + " slots, got " +
                      std::to_string(arities.size()) + " arguments");
  }
  for (std::size_t i = 0; i < arities.size(); ++i) {
    if (arities[i] != f.profile()[i]) {
      throw arity_error("slot " + std::to_string(i + 1) + " expects arity " +
                        std::to_string(f.profile()[i]) + ", argument has " +
                        std::to_string(arities[i]));
    }
  }
}

void require_simple(const Network& g, const char* what) {
  if (g.model().kind() != ModelKind::simple_graph) {
    throw mismatch_error(std::string(what) + " needs a simple graph, got " + g.model().name());
  }
}

void require_multiplicities(const Network& g, const char* what) {
  const auto& m = g.model();
  const bool ok = m.kind() == ModelKind::multigraph_sum ||
                  (m.kind() == ModelKind::gamma && m.monoid() == MonoidSpec::nat_add());
  if (!ok) throw mismatch_error(std::string(what) + " needs a multigraph, got " + m.name());
}

}  // namespace

Network act_canonical(const OperadOperation& f, const std::vector<Network>& args) {
  std::vector<std::size_t> arities;
  Network h = empty(f.model(), 0);
  for (const auto& a : args) {
    arities.push_back(a.arity());
    h = disjoint_union(h, a);
  }
  check_profile(f, arities);
  return overlay(f.g(), act(f.sigma(), h));
}

AttributedNetwork act_vertex_attr(const OperadOperation& f,
                                  const std::vector<AttributedNetwork>& args) {
  std::vector<Network> gs;
  std::vector<Attribute> xs;
  for (const auto& a : args) {
    gs.push_back(a.g);
    xs.insert(xs.end(), a.x.begin(), a.x.end());
  }
  Network g = act_canonical(f, gs);
  std::vector<Attribute> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[f.sigma()(i)] = xs[i];
  return AttributedNetwork(std::move(g), std::move(out));
}

bool satisfies(const AttributedNetwork& a, const EdgePredicate& p) {
  require_simple(a.g, "edge predicate");
  for (const auto& e : a.g.edge_set().edges) {
    if (!p(a.x[e.lo], a.x[e.hi])) return false;
  }
  return true;
}

bool satisfies(const AttributedNetwork& a, const EdgeBound& b) {
  require_multiplicities(a.g, "edge bound");
  for (const auto& [e, v] : a.g.label_map().labels) {
    if (v > b(a.x[e.lo], a.x[e.hi])) return false;
  }
  return true;
}

AttributedNetwork filter_predicate(const AttributedNetwork& a, const EdgePredicate& p) {
  require_simple(a.g, "filter_predicate");
  std::vector<Edge> kept;
  for (const auto& e : a.g.edge_set().edges) {
    if (p(a.x[e.lo], a.x[e.hi])) kept.push_back(e);
  }
  return AttributedNetwork(make_simple_graph(a.g.arity(), std::move(kept)), a.x);
}

AttributedNetwork act_predicate(const OperadOperation& f, const std::vector<AttributedNetwork>& args,
                                const EdgePredicate& p) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (!satisfies(args[i], p)) {
      throw domain_error("argument " + std::to_string(i + 1) + " violates " + p.name());
    }
  }
  return filter_predicate(act_vertex_attr(f, args), p);
}

AttributedNetwork filter_bound(const AttributedNetwork& a, const EdgeBound& b) {
  require_multiplicities(a.g, "filter_bound");
  std::vector<std::pair<Edge, MonoidElement>> kept;
  for (const auto& [e, v] : a.g.label_map().labels) {
    kept.emplace_back(e, std::min<MonoidElement>(v, b(a.x[e.lo], a.x[e.hi])));
  }
  return AttributedNetwork(make_labeled(a.g.model(), a.g.arity(), std::move(kept)), a.x);
}

AttributedNetwork act_bound(const OperadOperation& f, const std::vector<AttributedNetwork>& args,
                            const EdgeBound& b) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (!satisfies(args[i], b)) {
      throw domain_error("argument " + std::to_string(i + 1) + " violates " + b.name());
    }
  }
  return filter_bound(act_vertex_attr(f, args), b);
}

Network attempt_edges(const Network& h, const GreenWord& word, std::size_t k) {
  require_simple(h, "attempt_edges");
  const std::size_t n = h.arity();
  if (word.context().kneser_n != n) {
    throw arity_error("word is not over the vertex pairs of " + std::to_string(n) + " vertices");
  }
  std::vector<Edge> edges = h.edge_set().edges;
  std::vector<std::size_t> degree(n, 0);
  std::vector<bool> present(n * (n > 0 ? n - 1 : 0) / 2, false);
  for (const auto& e : edges) {
    ++degree[e.lo];
    ++degree[e.hi];
    present[pair_index(n, e)] = true;
  }
  for (const auto& letter : word.letters()) {
    if (present[letter.component]) continue;
    const Edge e = pair_at(n, letter.component);
    if (degree[e.lo] >= k || degree[e.hi] >= k) continue;
    ++degree[e.lo];
    ++degree[e.hi];
    present[letter.component] = true;
    edges.push_back(e);
  }
  return make_simple_graph(n, std::move(edges));
}

Network act_degree_bounded(const OperadOperation& f, const std::vector<Network>& args,
                           std::size_t k) {
  if (!(f.model() == ModelSpec::free_varietal(MonoidSpec::boolean(), Variety::gmon))) {
    throw mismatch_error("act_degree_bounded needs an operation over free(bool,gmon), got " +
                         f.model().name());
  }
  std::vector<std::size_t> arities;
  Network h = empty(ModelSpec::simple_graph(), 0);
  for (std::size_t i = 0; i < args.size(); ++i) {
    require_simple(args[i], "act_degree_bounded");
    if (max_degree(args[i]) > k) {
      throw domain_error("argument " + std::to_string(i + 1) + " has degree above " +
                         std::to_string(k));
    }
    arities.push_back(args[i].arity());
    h = disjoint_union(h, args[i]);
  }
  check_profile(f, arities);
  return attempt_edges(act(f.sigma(), h), f.g().word(), k);
}

}  // namespace netop
