#include <gtest/gtest.h>

#include "helpers.hpp"
#include "netop/error.hpp"
#include "netop/free_model.hpp"
#include "netop/network.hpp"

using namespace netop;
using test::labeled;
using test::perm;
using test::sg;

namespace {

const ModelSpec SG = ModelSpec::simple_graph();
const ModelSpec NAT = ModelSpec::gamma(MonoidSpec::nat_add());

Network part(const ModelSpec& model, std::size_t n,
             const std::vector<std::vector<std::size_t>>& one_based) {
  std::vector<std::vector<std::size_t>> blocks;
  for (const auto& b : one_based) {
    blocks.emplace_back();
    for (auto v : b) blocks.back().push_back(v - 1);
  }
  return make_partition(model, n, blocks);
}

}  // namespace

TEST(Network, Empty) {
  const auto e = empty(SG, 3);
  EXPECT_EQ(e.arity(), 3u);
  EXPECT_TRUE(e.edge_set().edges.empty());
  EXPECT_TRUE(empty(NAT, 2).label_map().labels.empty());
  EXPECT_EQ(empty(ModelSpec::partition_join(), 3),
            part(ModelSpec::partition_join(), 3, {{1}, {2}, {3}}));
  EXPECT_EQ(empty(ModelSpec::partition_meet(), 3),
            part(ModelSpec::partition_meet(), 3, {{1, 2, 3}}));
}

TEST(Network, Overlay) {
  EXPECT_EQ(overlay(sg(4, {{1, 2}, {3, 4}}), sg(4, {{1, 2}, {2, 4}})),
            sg(4, {{1, 2}, {2, 4}, {3, 4}}));
  const auto g = sg(4, {{1, 3}});
  EXPECT_EQ(overlay(g, empty(SG, 4)), g);
  EXPECT_EQ(overlay(labeled(NAT, 2, {{1, 2, 2}}), labeled(NAT, 2, {{1, 2, 3}})),
            labeled(NAT, 2, {{1, 2, 5}}));
  EXPECT_THROW(overlay(sg(3, {}), sg(4, {})), arity_error);
  EXPECT_THROW(overlay(sg(2, {}), empty(NAT, 2)), mismatch_error);
}

TEST(Network, DisjointUnion) {
  EXPECT_EQ(disjoint_union(sg(3, {{1, 2}, {2, 3}}), sg(4, {{1, 2}, {2, 4}, {3, 4}})),
            sg(7, {{1, 2}, {2, 3}, {4, 5}, {5, 7}, {6, 7}}));
  const auto g = sg(3, {{1, 3}});
  EXPECT_EQ(disjoint_union(g, empty(SG, 0)), g);
  const auto MG = ModelSpec::multigraph_sum();
  EXPECT_EQ(disjoint_union(labeled(MG, 2, {{1, 2, 2}}), labeled(MG, 2, {{1, 2, 1}})),
            labeled(MG, 4, {{1, 2, 2}, {3, 4, 1}}));
}

TEST(Network, Act) {
  EXPECT_EQ(act(perm({1, 3, 2}), sg(3, {{1, 2}, {2, 3}})), sg(3, {{1, 3}, {2, 3}}));
  const auto g = sg(4, {{1, 4}, {2, 3}});
  EXPECT_EQ(act(Permutation::identity(4), g), g);
  EXPECT_EQ(act(perm({2, 1}), labeled(NAT, 2, {{1, 2, 4}})), labeled(NAT, 2, {{1, 2, 4}}));
  const auto DG = ModelSpec::directed_graph();
  EXPECT_EQ(act(perm({2, 1}), make_directed_graph(2, {{0, 1}})), make_directed_graph(2, {{1, 0}}));
}

TEST(Network, MapLabels) {
  const auto B1 = ModelSpec::gamma(MonoidSpec::trunc_add(1));
  const auto B2 = ModelSpec::gamma(MonoidSpec::trunc_add(2));
  EXPECT_EQ(map_labels(MonoidHom::cutoff(1), labeled(NAT, 2, {{1, 2, 3}})),
            labeled(B1, 2, {{1, 2, 1}}));
  const auto g = labeled(NAT, 3, {{1, 2, 1}, {1, 3, 5}});
  EXPECT_EQ(map_labels(MonoidHom::identity(MonoidSpec::nat_add()), g), g);
  EXPECT_EQ(map_labels(MonoidHom::cutoff(2), g), labeled(B2, 3, {{1, 2, 1}, {1, 3, 2}}));
}

TEST(Network, Tensor) {
  const auto DG = ModelSpec::directed_graph();
  const auto T = ModelSpec::tensor(SG, DG);
  const auto a = sg(2, {{1, 2}});
  const auto b = make_directed_graph(2, {{1, 0}});
  const auto t = tensor_networks(a, b);
  EXPECT_EQ(t.model(), T);
  ASSERT_EQ(t.components().parts.size(), 2u);
  EXPECT_EQ(t.components().parts[0], a);
  EXPECT_EQ(t.components().parts[1], b);
  EXPECT_EQ(tensor_networks(empty(SG, 3), empty(DG, 3)), empty(T, 3));
  const auto a2 = sg(2, {});
  const auto b2 = make_directed_graph(2, {{0, 1}});
  EXPECT_EQ(overlay(t, tensor_networks(a2, b2)),
            tensor_networks(overlay(a, a2), overlay(b, b2)));
}

TEST(Network, Partitions) {
  const auto J = ModelSpec::partition_join();
  const auto M = ModelSpec::partition_meet();
  EXPECT_EQ(partition_join(part(J, 3, {{1, 2}, {3}}), part(J, 3, {{1}, {2, 3}})),
            part(J, 3, {{1, 2, 3}}));
  const auto p = part(J, 4, {{1, 3}, {2}, {4}});
  EXPECT_EQ(partition_join(p, empty(J, 4)), p);
  EXPECT_EQ(partition_meet(part(M, 3, {{1, 2, 3}}), part(M, 3, {{1, 2}, {3}})),
            part(M, 3, {{1, 2}, {3}}));
  // Overlay in the join model is the join, in the meet model the meet.
  EXPECT_EQ(overlay(part(J, 3, {{1, 2}, {3}}), part(J, 3, {{1}, {2, 3}})),
            part(J, 3, {{1, 2, 3}}));
  EXPECT_EQ(disjoint_union(part(J, 2, {{1, 2}}), part(J, 1, {{1}})),
            part(J, 3, {{1, 2}, {3}}));
  // The meet model's disjoint union keeps a side only against the empty arity.
  const auto q = part(M, 2, {{1}, {2}});
  EXPECT_EQ(disjoint_union(q, empty(M, 0)), q);
  EXPECT_EQ(disjoint_union(empty(M, 0), q), q);
  EXPECT_EQ(disjoint_union(q, part(M, 1, {{1}})), empty(M, 3));
}

TEST(Network, Hypergraph) {
  const auto h = make_hypergraph(4, {{0, 1, 2}, {3}});
  EXPECT_EQ(act(perm({4, 3, 2, 1}), h), make_hypergraph(4, {{3, 2, 1}, {0}}));
  EXPECT_EQ(disjoint_union(h, make_hypergraph(1, {{0}})), make_hypergraph(5, {{0, 1, 2}, {3}, {4}}));
  EXPECT_THROW(make_hypergraph(2, {{}}), domain_error);
}

TEST(Network, GammaBoolIsSimpleGraphs) {
  const auto g = sg(4, {{1, 2}, {3, 4}});
  const auto gb = simple_to_gamma_bool(g);
  EXPECT_EQ(gb.model(), ModelSpec::gamma(MonoidSpec::boolean()));
  EXPECT_EQ(gamma_bool_to_simple(gb), g);
}

TEST(Network, Validation) {
  EXPECT_THROW(sg(3, {{1, 4}}), domain_error);
  EXPECT_THROW(make_simple_graph(33, {}), arity_error);
  EXPECT_THROW(labeled(ModelSpec::gamma(MonoidSpec::boolean()), 2, {{1, 2, 2}}), domain_error);
  EXPECT_EQ(max_degree(sg(4, {{1, 2}, {1, 3}, {1, 4}})), 3u);
}

TEST(FreeModel, Fibres) {
  // At two vertices the free model is the monoid itself.
  const auto f2 = free_model(MonoidSpec::nat_add(), Variety::mon, 2);
  const auto x = f2.element({{0, 2}});
  const auto y = f2.element({{0, 3}});
  EXPECT_EQ(overlay(x, y), f2.element({{0, 5}}));
  // Over Mon on three vertices, e12 e13 and e13 e12 differ.
  const auto f3 = free_model(MonoidSpec::boolean(), Variety::mon, 3);
  const auto e12 = f3.element({test::kl(3, 1, 2)});
  const auto e13 = f3.element({test::kl(3, 1, 3)});
  EXPECT_NE(overlay(e12, e13), overlay(e13, e12));
  // Over CMon they agree, and evaluate to simple graphs.
  const auto c3 = free_model(MonoidSpec::boolean(), Variety::cmon, 3);
  const auto c12 = c3.element({test::kl(3, 1, 2)});
  const auto c13 = c3.element({test::kl(3, 1, 3)});
  EXPECT_EQ(overlay(c12, c13), overlay(c13, c12));
  EXPECT_EQ(evaluate_word(overlay(c12, c13), SG), sg(3, {{1, 2}, {1, 3}}));
}

TEST(FreeModel, EvaluateWord) {
  const auto f3 = free_model(MonoidSpec::boolean(), Variety::mon, 3);
  const auto w = f3.element({test::kl(3, 1, 2), test::kl(3, 2, 3)});
  EXPECT_EQ(evaluate_word(w, SG), sg(3, {{1, 2}, {2, 3}}));
  EXPECT_EQ(evaluate_word(f3.unit(), SG), empty(SG, 3));
  const auto v = f3.element({test::kl(3, 2, 3), test::kl(3, 1, 2)});
  EXPECT_EQ(evaluate_word(v, SG), evaluate_word(w, SG));
  EXPECT_THROW(evaluate_word(w, NAT), mismatch_error);
}
