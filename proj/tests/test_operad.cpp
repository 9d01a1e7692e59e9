#include <gtest/gtest.h>

#include "helpers.hpp"
#include "netop/error.hpp"
#include "netop/operad.hpp"
#include "netop/random.hpp"

using namespace netop;
using test::perm;
using test::sg;

namespace {

const ModelSpec SG = ModelSpec::simple_graph();

OperadOperation leaf(const Network& g) {
  return make_operation({g.arity()}, Permutation::identity(g.arity()), g);
}

}  // namespace

TEST(Operad, MakeOperation) {
  const auto f = make_operation({3, 4, 2}, Permutation::identity(9), sg(9, {{1, 2}, {3, 6}}));
  EXPECT_EQ(f.slots(), 3u);
  EXPECT_EQ(f.target(), 9u);
  EXPECT_EQ(identity_operation(SG, 4),
            make_operation({4}, Permutation::identity(4), empty(SG, 4)));
  EXPECT_THROW(make_operation({1, 1}, Permutation::identity(3), empty(SG, 3)), arity_error);
  EXPECT_THROW(make_operation({3}, Permutation::identity(3), empty(SG, 2)), arity_error);
}

TEST(Operad, NineNodeComposite) {
  const auto f = make_operation({3, 4, 2}, Permutation::identity(9), sg(9, {{1, 2}, {3, 6}}));
  const auto r = compose_operad(f, {leaf(sg(3, {{2, 3}})), leaf(sg(4, {{1, 2}, {2, 3}, {3, 4}})),
                                    leaf(sg(2, {{1, 2}}))});
  EXPECT_EQ(r.profile(), (std::vector<std::size_t>{3, 4, 2}));
  EXPECT_EQ(r.sigma(), Permutation::identity(9));
  EXPECT_EQ(r.g(), sg(9, {{1, 2}, {2, 3}, {3, 6}, {4, 5}, {5, 6}, {6, 7}, {8, 9}}));
}

TEST(Operad, Units) {
  const auto f = make_operation({2, 1}, perm({3, 1, 2}), sg(3, {{1, 3}}));
  EXPECT_EQ(compose_operad(f, {identity_operation(SG, 2), identity_operation(SG, 1)}), f);
  EXPECT_EQ(compose_operad(identity_operation(SG, 3), {f}), f);
  EXPECT_THROW(compose_operad(f, {identity_operation(SG, 2)}), arity_error);
  EXPECT_THROW(compose_operad(f, {identity_operation(SG, 1), identity_operation(SG, 2)}),
               arity_error);
}

TEST(Operad, RightAction) {
  const auto f = make_operation({1, 2}, Permutation::identity(3), empty(SG, 3));
  EXPECT_EQ(right_act(f, Permutation::identity(2)), f);
  const auto g = right_act(f, perm({2, 1}));
  EXPECT_EQ(g.profile(), (std::vector<std::size_t>{2, 1}));
  // The new first slot is the old two-vertex block, which sat at positions 2,3.
  EXPECT_EQ(g.sigma(), perm({2, 3, 1}));
  EXPECT_EQ(invert(g.sigma()), perm({3, 1, 2}));
  EXPECT_EQ(g.sigma(), expand_blocks(perm({2, 1}), {1, 2}));

  Rng rng(3);
  for (int c = 0; c < 200; ++c) {
    const std::size_t k = uniform(rng, 0, 4);
    std::vector<std::size_t> profile(k);
    for (auto& p : profile) p = uniform(rng, 0, 3);
    const auto h = random_operation(SG, profile, rng);
    const auto t = random_permutation(k, rng);
    EXPECT_EQ(right_act(right_act(h, t), invert(t)), h);
  }
}

TEST(Operad, LawSuites) {
  for (const auto& model : {SG, ModelSpec::gamma(MonoidSpec::nat_add()),
                            ModelSpec::tensor(SG, ModelSpec::directed_graph())}) {
    const auto r = check_operad_laws(model, 8, 100, 1);
    EXPECT_TRUE(r.passed()) << r.name << ": " << (r.failures.empty() ? "" : r.failures[0]);
    EXPECT_EQ(r.cases, 100u);
  }
}

TEST(Operad, SkippedActionIsCaught) {
  const auto r = check_operad_laws(SG, 8, 300, 0, OperadFault::skip_action);
  ASSERT_FALSE(r.passed());
  EXPECT_NE(r.failures[0].find("equivariance"), std::string::npos);
}
