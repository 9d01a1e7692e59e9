#include <gtest/gtest.h>

#include "helpers.hpp"
#include "netop/error.hpp"
#include "netop/io.hpp"
#include "netop/laws.hpp"
#include "netop/random.hpp"

using namespace netop;
using test::sg;

TEST(Io, Permutation) {
  const auto p = Permutation::from_one_based({3, 1, 2});
  EXPECT_EQ(to_json(p), json::parse("[3,1,2]"));
  EXPECT_EQ(permutation_from_json(to_json(p)), p);
  EXPECT_THROW(permutation_from_json(json::parse("[1,1]")), domain_error);
}

TEST(Io, Monoids) {
  EXPECT_EQ(parse_monoid("trunc-add:2"), MonoidSpec::trunc_add(2));
  EXPECT_EQ(monoid_from_json(to_json(MonoidSpec::trunc_add(3))), MonoidSpec::trunc_add(3));
  EXPECT_EQ(parse_variety("gmon"), Variety::gmon);
  EXPECT_THROW(parse_monoid("group"), parse_error);
}

TEST(Io, SimpleGraphPayload) {
  const auto g = network_from_json(json::parse(R"({"model":"sg","n":3,"payload":[[1,2],[2,3]]})"));
  EXPECT_EQ(g, sg(3, {{1, 2}, {2, 3}}));
  EXPECT_EQ(to_json(g)["payload"], json::parse("[[1,2],[2,3]]"));
  EXPECT_THROW(network_from_json(json::parse(R"({"model":"sg","n":2,"payload":[[1,3]]})")),
               domain_error);
}

TEST(Io, RoundTripEveryModel) {
  Rng rng(23);
  for (const auto& model : registered_models()) {
    for (int c = 0; c < 20; ++c) {
      const auto n = uniform(rng, 0, std::min<std::size_t>(6, arity_cap(model)));
      const auto g = random_network(model, n, rng);
      const auto j = to_json(g);
      EXPECT_EQ(network_from_json(j), g) << model.name() << " " << j.dump();
      EXPECT_EQ(network_from_json(json::parse(j.dump())), g) << model.name();
    }
  }
  for (const auto& model : free_models()) {
    const auto g = random_network(model, 4, rng);
    EXPECT_EQ(network_from_json(to_json(g)), g) << model.name();
  }
}

TEST(Io, TotalAndOperation) {
  Rng rng(29);
  const auto SG = ModelSpec::simple_graph();
  const auto f = random_operation(SG, {2, 1, 3}, rng);
  EXPECT_EQ(operation_from_json(to_json(f), SG), f);
  const TotalMorphism t =
      make_total(TotalObject::of_arity(3), Permutation::from_one_based({2, 3, 1}), sg(3, {{1, 2}}));
  EXPECT_EQ(total_from_json(to_json(t)), t);
}

TEST(Io, Dot) {
  const auto dot = to_dot(sg(3, {{2, 3}, {1, 2}}));
  EXPECT_EQ(dot, "graph network {\n  1;\n  2;\n  3;\n  1 -- 2;\n  2 -- 3;\n}\n");
}

TEST(Io, Reachability) {
  const auto net = parse_petri("tau1: a + b -> c\ntau2: c -> 2b\n").net;
  const auto g = reachability_graph(net, parse_marking(net, "2a+b"), 2);
  const auto j = reachability_to_json(net, g);
  EXPECT_EQ(j["markings"], json::parse(R"(["2a+b","a+c","a+2b"])"));
  EXPECT_EQ(j["arcs"].size(), 2u);
  EXPECT_EQ(j["arcs"][0]["transition"], "tau1");
}
