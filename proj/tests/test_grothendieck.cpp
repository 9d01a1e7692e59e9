#include <gtest/gtest.h>

#include "helpers.hpp"
#include "netop/error.hpp"
#include "netop/grothendieck.hpp"

using namespace netop;
using test::perm;
using test::sg;

namespace {

const ModelSpec SG = ModelSpec::simple_graph();

TotalMorphism mor(const Permutation& s, const Network& g) {
  return make_total(TotalObject::of_arity(s.size()), s, g);
}

}  // namespace

TEST(Total, Compose) {
  EXPECT_EQ(compose_total(mor(Permutation::identity(3), sg(3, {{1, 2}})),
                          mor(Permutation::identity(3), sg(3, {{2, 3}}))),
            mor(Permutation::identity(3), sg(3, {{1, 2}, {2, 3}})));
  const auto f = mor(perm({3, 1, 2}), sg(3, {{1, 3}}));
  EXPECT_EQ(compose_total(f, identity_total(SG, TotalObject::of_arity(3))), f);
  EXPECT_EQ(compose_total(identity_total(SG, TotalObject::of_arity(3)), f), f);
  EXPECT_EQ(compose_total(mor(perm({1, 3, 2}), sg(3, {})),
                          mor(Permutation::identity(3), sg(3, {{1, 2}}))),
            mor(perm({1, 3, 2}), sg(3, {{1, 3}})));
  EXPECT_THROW(compose_total(mor(Permutation::identity(2), sg(2, {})),
                             mor(Permutation::identity(3), sg(3, {}))),
               mismatch_error);
}

TEST(Total, Tensor) {
  EXPECT_EQ(tensor_total(mor(Permutation::identity(2), sg(2, {{1, 2}})),
                         mor(Permutation::identity(1), sg(1, {}))),
            mor(Permutation::identity(3), sg(3, {{1, 2}})));
  const auto f = mor(perm({2, 1}), sg(2, {{1, 2}}));
  EXPECT_EQ(tensor_total(f, identity_total(SG, TotalObject::of_arity(0))), f);
  EXPECT_EQ(tensor_total(mor(perm({2, 1}), sg(2, {})), mor(perm({2, 1}), sg(2, {}))),
            mor(perm({2, 1, 4, 3}), sg(4, {})));
}

TEST(Total, Braiding) {
  auto B = [](std::size_t m, std::size_t n) {
    return braiding_total(SG, TotalObject::of_arity(m), TotalObject::of_arity(n));
  };
  EXPECT_EQ(B(1, 1), mor(perm({2, 1}), sg(2, {})));
  EXPECT_EQ(B(4, 3).sigma, perm({4, 5, 6, 7, 1, 2, 3}));
  EXPECT_EQ(B(0, 3), identity_total(SG, TotalObject::of_arity(3)));
  for (std::size_t m = 0; m <= 8; ++m) {
    for (std::size_t n = 0; m + n <= 8; ++n) {
      EXPECT_EQ(compose_total(B(n, m), B(m, n)),
                identity_total(SG, TotalObject::of_arity(m + n)));
    }
  }
}

TEST(Total, ColoredObjects) {
  const auto C = ModelSpec::colored_forget(SG, {"boat", "plane"});
  const TotalObject x{{0, 1, 1}};
  const TotalObject y{{1, 0, 1}};
  // sigma must carry colors of the source onto the target.
  EXPECT_NO_THROW(make_total(x, y, perm({2, 1, 3}), empty(C, y.word)));
  EXPECT_THROW(make_total(x, y, Permutation::identity(3), empty(C, y.word)), mismatch_error);
}

TEST(Total, HomCounts) {
  EXPECT_EQ(decompose_total(SG, 2).total, 4u);
  EXPECT_EQ(decompose_total(SG, 0).total, 1u);
  EXPECT_EQ(decompose_total(ModelSpec::directed_graph(), 0).total, 1u);
  const auto h3 = decompose_total(SG, 3);
  EXPECT_EQ(h3.fibre, 8u);
  EXPECT_EQ(h3.permutations, 6u);
  EXPECT_EQ(h3.total, 48u);
  EXPECT_EQ(enumerate_endomorphisms(SG, 3).size(), 48u);
  EXPECT_EQ(fibre_size(ModelSpec::directed_graph(), 3), 64u);
  EXPECT_EQ(fibre_size(ModelSpec::partition_join(), 4), 15u);
  EXPECT_THROW(fibre_size(ModelSpec::gamma(MonoidSpec::nat_add()), 2), domain_error);
}
