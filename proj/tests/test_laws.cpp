#include <gtest/gtest.h>

#include "netop/laws.hpp"

using namespace netop;

namespace {

std::string first_failure(const LawReport& r) {
  return r.failures.empty() ? std::string() : r.name + ": " + r.failures[0];
}

}  // namespace

TEST(Laws, EveryRegisteredModel) {
  for (const auto& model : registered_models()) {
    const auto r = check_model_laws(model, 100, 7);
    EXPECT_TRUE(r.passed()) << first_failure(r);
  }
}

TEST(Laws, FreeModels) {
  for (const auto& model : free_models()) {
    const auto r = check_model_laws(model, 60, 7, 5);
    EXPECT_TRUE(r.passed()) << first_failure(r);
  }
}

TEST(Laws, Homs) {
  for (const auto& h : registered_homs()) {
    const auto r = check_hom_laws(h, 100, 3);
    EXPECT_TRUE(r.passed()) << first_failure(r);
  }
}

TEST(Laws, SuitesPassAcrossSeeds) {
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    for (const auto& r : run_suite(Suite::all, 40, seed)) {
      EXPECT_TRUE(r.passed()) << "seed " << seed << " " << first_failure(r);
    }
  }
}

TEST(Laws, SuitesAreDeterministic) {
  const auto a = run_suite(Suite::green, 50, 5);
  const auto b = run_suite(Suite::green, 50, 5);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].cases, b[i].cases);
  }
}

TEST(Laws, ShufflePreservesTheElement) {
  Rng rng(8);
  for (auto v : {Variety::mon, Variety::cmon, Variety::gmon}) {
    const auto ctx = kneser_context(5, MonoidSpec::boolean());
    for (int c = 0; c < 200; ++c) {
      const auto w = random_word(ctx, 8, rng);
      const auto s = random_shuffle(w, v, 10, rng);
      EXPECT_TRUE(words_equal(w, s, v)) << format_word(w) << " vs " << format_word(s);
    }
  }
}

TEST(Laws, InjectedFaultFails) {
  bool failed = false;
  for (const auto& r : run_suite(Suite::operad, 100, 0, OperadFault::skip_action)) {
    failed = failed || !r.passed();
  }
  EXPECT_TRUE(failed);
}
