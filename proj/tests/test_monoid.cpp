#include <gtest/gtest.h>

#include "netop/error.hpp"
#include "netop/monoid.hpp"

using namespace netop;

TEST(Monoid, Mul) {
  EXPECT_EQ(mul(MonoidSpec::boolean(), 1, 0), 1u);
  EXPECT_EQ(mul(MonoidSpec::boolean(), 0, 0), 0u);
  EXPECT_EQ(mul(MonoidSpec::trunc_add(2), 1, 2), 2u);
  EXPECT_EQ(mul(MonoidSpec::nat_max(), 3, 3), 3u);
  EXPECT_EQ(mul(MonoidSpec::nat_add(), 3, 4), 7u);
  EXPECT_EQ(mul(MonoidSpec::free_one(), 2, 5), 7u);
  EXPECT_THROW(mul(MonoidSpec::boolean(), 2, 0), domain_error);
  EXPECT_THROW(mul(MonoidSpec::trunc_add(2), 3, 0), domain_error);
  EXPECT_THROW(mul(MonoidSpec::nat_add(), UINT64_MAX, 1), overflow_error);
}

TEST(Monoid, Unit) {
  EXPECT_EQ(unit(MonoidSpec::boolean()), 0u);
  EXPECT_EQ(unit(MonoidSpec::nat_add()), 0u);
  EXPECT_EQ(unit(MonoidSpec::trunc_add(4)), 0u);
  EXPECT_EQ(unit(MonoidSpec::nat_max()), 0u);
}

TEST(Monoid, HomApply) {
  EXPECT_EQ(hom_apply(MonoidHom::cutoff(1), 5), 1u);
  EXPECT_EQ(hom_apply(MonoidHom::cutoff(1), 0), 0u);
  EXPECT_EQ(hom_apply(MonoidHom::cutoff(3), 2), 2u);
  EXPECT_EQ(hom_apply(MonoidHom::support(), 4), 1u);
  EXPECT_EQ(hom_apply(MonoidHom::support(), 0), 0u);
  EXPECT_THROW(validate(MonoidHom{MonoidSpec::boolean(), MonoidSpec::nat_add(), HomRule::cutoff}),
               domain_error);
}

TEST(Monoid, IsGraphic) {
  EXPECT_TRUE(is_graphic(MonoidSpec::boolean()).graphic);
  EXPECT_TRUE(is_graphic(MonoidSpec::trunc_add(1)).graphic);
  EXPECT_TRUE(is_graphic(MonoidSpec::nat_max()).graphic);
  const auto nat = is_graphic(MonoidSpec::nat_add());
  EXPECT_FALSE(nat.graphic);
  ASSERT_TRUE(nat.witness);
  EXPECT_EQ(*nat.witness, std::make_pair(MonoidElement{1}, MonoidElement{1}));
  EXPECT_FALSE(is_graphic(MonoidSpec::trunc_add(2)).graphic);
}

TEST(MonoidProperties, LawsOnSamples) {
  const std::vector<MonoidSpec> specs = {MonoidSpec::boolean(), MonoidSpec::nat_add(),
                                         MonoidSpec::nat_max(), MonoidSpec::trunc_add(1),
                                         MonoidSpec::trunc_add(3), MonoidSpec::free_one()};
  for (const auto& m : specs) {
    const auto xs = sample_elements(m, 6);
    for (auto a : xs) {
      EXPECT_EQ(mul(m, unit(m), a), a) << to_string(m);
      EXPECT_EQ(mul(m, a, unit(m)), a) << to_string(m);
      for (auto b : xs) {
        for (auto c : xs) {
          EXPECT_EQ(mul(m, mul(m, a, b), c), mul(m, a, mul(m, b, c))) << to_string(m);
        }
      }
    }
  }
  for (const auto& h : registered_homs()) {
    const auto xs = sample_elements(h.source, 6);
    EXPECT_EQ(hom_apply(h, unit(h.source)), unit(h.target)) << to_string(h);
    for (auto a : xs) {
      for (auto b : xs) {
        EXPECT_EQ(hom_apply(h, mul(h.source, a, b)),
                  mul(h.target, hom_apply(h, a), hom_apply(h, b)))
            << to_string(h);
      }
    }
  }
}
