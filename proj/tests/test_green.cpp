#include <gtest/gtest.h>

#include "helpers.hpp"
#include "netop/error.hpp"
#include "netop/green.hpp"
#include "oracles.hpp"

using namespace netop;
using test::kl;
using test::kword;

namespace {

const MonoidSpec B = MonoidSpec::boolean();
const MonoidSpec N = MonoidSpec::nat_add();

GreenWord w4(const std::string& text, const MonoidSpec& m = B) {
  return parse_word(text, kneser_context(4, m));
}

oracle::Adjacency adjacency(const CommutationGraph& g) {
  oracle::Adjacency a(g.size(), std::vector<bool>(g.size(), false));
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) a[i][j] = i != j && g.commute(i, j);
  }
  return a;
}

}  // namespace

TEST(Green, Reduce) {
  const auto single = uniform_context(CommutationGraph(1, {}), B);
  EXPECT_EQ(reduce(GreenWord(single, {{0, 1}, {0, 1}})), GreenWord(single, {{0, 1}}));
  EXPECT_TRUE(reduce(GreenWord(single, {})).empty());
  const auto pair = uniform_context(CommutationGraph(2, {{0, 1}}), N);
  EXPECT_EQ(reduce(GreenWord(pair, {{0, 1}, {1, 1}, {0, 1}})),
            GreenWord(pair, {{0, 2}, {1, 1}}));
}

TEST(Green, NormalForm) {
  EXPECT_EQ(format_word(normal_form(w4("e34 e12"))), "e12 e34");
  EXPECT_EQ(normal_form(w4("e12 e13")), w4("e12 e13"));
  const auto nf = normal_form(w4("e34 e13 e12 e24"));
  EXPECT_EQ(normal_form(nf), nf);
}

TEST(Green, WordsEqual) {
  EXPECT_TRUE(words_equal(w4("e12 e34"), w4("e34 e12")));
  EXPECT_FALSE(words_equal(w4("e12 e13"), w4("e13 e12")));
  const auto w = w4("e14 e23 e12");
  EXPECT_TRUE(words_equal(w, w));
  EXPECT_THROW(words_equal(w4("e12"), w4("e12", N)), mismatch_error);
}

TEST(Green, GraphicNormalForm) {
  EXPECT_EQ(format_word(graphic_normal_form(w4("e12 e13 e12"))), "e12 e13");
  EXPECT_EQ(format_word(graphic_normal_form(w4("e12 e34 e12"))), "e12 e34");
  const auto w = w4("e13 e24 e12 e34");
  EXPECT_EQ(graphic_normal_form(concat(w, w)), graphic_normal_form(w));
  EXPECT_THROW(graphic_normal_form(w4("e12", N)), mismatch_error);
}

TEST(Green, CommutativeNormalForm) {
  EXPECT_EQ(format_word(commutative_normal_form(w4("e13:2 e12 e13", N))), "e12:1 e13:3");
}

TEST(Green, ParseAndFormat) {
  const auto w = w4("e12:2 e34:1", N);
  EXPECT_EQ(parse_word(format_word(w), w.context_ptr()), w);
  EXPECT_THROW(w4("e15"), parse_error);
  EXPECT_THROW(w4("e12:2"), parse_error);
  const auto big = kneser_context(8, B);
  EXPECT_EQ(format_word(parse_word("e18", big)), "e18");
  const auto explicit_graph = uniform_context(CommutationGraph(3, {{0, 2}}), B);
  EXPECT_EQ(format_word(normal_form(parse_word("c3 c1", explicit_graph))), "c1 c3");
}

TEST(Kneser, Graphs) {
  const auto p = kneser_graph(5, 2);
  EXPECT_EQ(p.size(), 10u);
  EXPECT_EQ(p.edge_count(), 15u);
  for (std::size_t v = 0; v < 10; ++v) EXPECT_EQ(p.degree(v), 3u);
  EXPECT_TRUE(oracle::isomorphic(adjacency(p), oracle::petersen()));
  EXPECT_EQ(kneser_graph(3, 2).size(), 3u);
  EXPECT_EQ(kneser_graph(3, 2).edge_count(), 0u);
  const auto m = kneser_graph(4, 2);
  EXPECT_EQ(m.size(), 6u);
  EXPECT_EQ(m.edge_count(), 3u);
  for (std::size_t v = 0; v < 6; ++v) EXPECT_EQ(m.degree(v), 1u);
  EXPECT_THROW(kneser_graph(2, 3), domain_error);
}

TEST(Kneser, OracleSanity) {
  // The isomorphism oracle must also say no.
  auto cycle = oracle::petersen();
  cycle[0][1] = cycle[1][0] = false;
  cycle[0][2] = cycle[2][0] = true;
  EXPECT_FALSE(oracle::isomorphic(adjacency(kneser_graph(5, 2)), cycle));
}

TEST(GreenOracle, SpotChecks) {
  const auto ctx = kneser_context(4, N);
  auto commute = [&](std::size_t a, std::size_t b) { return ctx->graph.commute(a, b); };
  auto add = [](std::uint64_t a, std::uint64_t b) { return a + b; };
  const auto e12 = kl(4, 1, 2).component, e34 = kl(4, 3, 4).component, e13 = kl(4, 1, 3).component;
  EXPECT_EQ(oracle::shuffle_class_min({{e34, 1}, {e12, 1}, {e34, 2}}, commute, add, 0),
            (oracle::OWord{{e12, 1}, {e34, 3}}));
  EXPECT_EQ(oracle::shuffle_class_min({{e13, 1}, {e12, 1}}, commute, add, 0),
            (oracle::OWord{{e13, 1}, {e12, 1}}));
}
