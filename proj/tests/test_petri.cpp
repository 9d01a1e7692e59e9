#include <gtest/gtest.h>

#include "netop/error.hpp"
#include "netop/petri.hpp"
#include "netop/random.hpp"
#include "oracles.hpp"

using namespace netop;

namespace {

PetriNet token_game() {
  return parse_petri("species: a, b, c\ntau1: a + b -> c\ntau2: c -> 2b\n").net;
}

PetriNet transport() {
  return parse_petri(
             "species: a, b, c, d, e\n"
             "catalysts: a, b\n"
             "tau1: a + 2c -> a + 2d\n"
             "tau2: b + d -> b + e\n")
      .net;
}

std::vector<std::string> names(const PetriNet& net, const std::vector<std::size_t>& idx,
                               bool species) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(species ? net.species()[i] : net.transitions()[i].name);
  return out;
}

}  // namespace

TEST(Petri, Parse) {
  const auto net = token_game();
  EXPECT_EQ(net.species_count(), 3u);
  EXPECT_EQ(net.transition("tau2").target, Marking(std::vector<std::uint64_t>{0, 2, 0}));
  EXPECT_EQ(parse_petri(format_petri(net)).net.transitions().size(), 2u);
  EXPECT_EQ(format_petri(parse_petri(format_petri(net)).net), format_petri(net));
  EXPECT_THROW(parse_petri("t: a -> \n"), parse_error);
  EXPECT_THROW(parse_petri("t: a -> b\nt: b -> a\n"), parse_error);
  EXPECT_THROW(parse_petri("catalysts: a\nt: a -> b\n"), parse_error);
  // Species appear in order of first use without a species line.
  EXPECT_EQ(parse_petri("t: z -> y\n").net.species(), (std::vector<std::string>{"z", "y"}));
}

TEST(Petri, Markings) {
  const auto net = token_game();
  EXPECT_EQ(format_marking(net, parse_marking(net, "2a + b")), "2a+b");
  EXPECT_EQ(format_marking(net, parse_marking(net, "b+2a")), "2a+b");
  EXPECT_EQ(format_marking(net, parse_marking(net, "0")), "0");
  EXPECT_THROW(parse_marking(net, "2q"), parse_error);
}

TEST(Petri, Enabled) {
  const auto net = token_game();
  EXPECT_EQ(names(net, enabled(net, parse_marking(net, "2a+b")), false),
            (std::vector<std::string>{"tau1"}));
  EXPECT_TRUE(enabled(net, net.zero()).empty());
  EXPECT_EQ(names(net, enabled(net, parse_marking(net, "a+b+c")), false),
            (std::vector<std::string>{"tau1", "tau2"}));
}

TEST(Petri, Fire) {
  const auto net = token_game();
  const auto m1 = fire(net, parse_marking(net, "2a+b"), net.transition_index("tau1"));
  EXPECT_EQ(format_marking(net, m1), "a+c");
  const auto m2 = fire(net, m1, net.transition_index("tau2"));
  EXPECT_EQ(format_marking(net, m2), "a+2b");
  EXPECT_THROW(fire(net, m2, net.transition_index("tau2")), not_enabled_error);
}

TEST(Petri, FiringAgreesWithOracle) {
  Rng rng(17);
  for (int c = 0; c < 100; ++c) {
    const std::size_t s = uniform(rng, 1, 4);
    std::vector<std::string> species;
    for (std::size_t i = 0; i < s; ++i) species.push_back("s" + std::to_string(i));
    std::vector<Transition> ts;
    std::vector<oracle::NamedTransition> ots;
    for (std::size_t t = 0; t < uniform(rng, 1, 3); ++t) {
      Marking src(s), tgt(s);
      oracle::NamedTransition ot;
      for (std::size_t i = 0; i < s; ++i) {
        src[i] = uniform(rng, 0, 2);
        tgt[i] = uniform(rng, 0, 2);
        if (src[i]) ot.source[species[i]] = src[i];
        if (tgt[i]) ot.target[species[i]] = tgt[i];
      }
      ts.push_back({"t" + std::to_string(t), src, tgt});
      ots.push_back(ot);
    }
    const PetriNet net(species, ts);
    Marking m = random_marking(net, 3, rng);
    oracle::NamedMarking om;
    for (std::size_t i = 0; i < s; ++i) {
      if (m[i]) om[species[i]] = m[i];
    }
    for (int step = 0; step < 6; ++step) {
      const std::size_t t = uniform(rng, 0, ts.size() - 1);
      oracle::NamedMarking next = om;
      const bool ok = oracle::fire(ots[t], next);
      ASSERT_EQ(ok, is_enabled(net, m, t));
      if (!ok) continue;
      m = fire(net, m, t);
      om = next;
      oracle::NamedMarking got;
      for (std::size_t i = 0; i < s; ++i) {
        if (m[i]) got[species[i]] = m[i];
      }
      ASSERT_EQ(got, om);
    }
  }
}

TEST(Petri, Reachable) {
  const auto net = token_game();
  std::vector<std::string> got;
  for (const auto& m : reachable(net, parse_marking(net, "2a+b"), 2)) {
    got.push_back(format_marking(net, m));
  }
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<std::string>{"2a+b", "a+2b", "a+c"}));
  EXPECT_EQ(reachable(net, parse_marking(net, "2a+b"), 0).size(), 1u);
  EXPECT_EQ(reachable(net, net.zero(), 5), std::vector<Marking>{net.zero()});
  const auto grow = parse_petri("t: a -> 2a\n").net;
  EXPECT_THROW(reachable(grow, parse_marking(grow, "a"), 50, 10), overflow_error);
}

TEST(Petri, Catalysts) {
  const auto net = transport();
  EXPECT_EQ(names(net, catalysts(net), true), (std::vector<std::string>{"a", "b"}));
  EXPECT_TRUE(catalysts(token_game()).empty());
  const PetriNet idle({"x", "y"}, {});
  EXPECT_EQ(catalysts(idle).size(), 2u);
  EXPECT_THROW(check_catalysts(token_game(), {0}), domain_error);
}

TEST(Petri, Grade) {
  const auto net = transport();
  const std::vector<std::size_t> c = {0, 1};
  const auto g = grade(net, c, parse_marking(net, "a+b+2c"));
  EXPECT_EQ(g.counts, (std::vector<std::uint64_t>{1, 1}));
  EXPECT_EQ(format_marking(net, grade_marking(net, g)), "a+b");
  EXPECT_EQ(grade(net, c, parse_marking(net, "2c+e")).counts, (std::vector<std::uint64_t>{0, 0}));
  const auto e = from_firings(net, parse_marking(net, "a+b+2c"),
                              std::vector<std::string>{"tau1", "tau2", "tau2"});
  for (const auto& m : trace(net, e)) EXPECT_EQ(grade(net, c, m), g);
}

TEST(Petri, Executions) {
  const auto net = token_game();
  const auto start = parse_marking(net, "2a+b");
  const auto e1 = from_firings(net, start, std::vector<std::string>{"tau1"});
  const auto e2 = from_firings(net, e1.end, std::vector<std::string>{"tau2"});
  const auto e = compose_exec(e2, e1);
  EXPECT_EQ(format_marking(net, e.start), "2a+b");
  EXPECT_EQ(format_marking(net, e.end), "a+2b");
  EXPECT_EQ(e.steps.size(), 2u);
  EXPECT_EQ(tensor_exec(e, identity_exec(net.zero())), e);
  EXPECT_THROW(compose_exec(e1, e1), mismatch_error);
  EXPECT_EQ(parikh(net, e), (std::vector<std::uint64_t>{1, 1}));
}

TEST(Petri, GradeAdditivity) {
  const auto net = transport();
  const std::vector<std::size_t> c = {0, 1};
  const auto e = from_firings(net, parse_marking(net, "a+2c"), std::vector<std::string>{"tau1"});
  const auto f = from_firings(net, parse_marking(net, "2b+d"), std::vector<std::string>{"tau2"});
  const auto t = tensor_exec(e, f);
  validate(net, t);
  EXPECT_EQ(grade(net, c, t.start), grade(net, c, e.start) + grade(net, c, f.start));
}

TEST(Petri, Whisker) {
  const auto net = transport();
  const auto e = from_firings(net, parse_marking(net, "b+d"), std::vector<std::string>{"tau2"});
  const auto w = whisker(e, parse_marking(net, "b"), Side::right);
  validate(net, w);
  EXPECT_EQ(format_marking(net, w.start), "2b+d");
  EXPECT_EQ(format_marking(net, w.steps[0].context), "b");
  EXPECT_EQ(whisker(e, net.zero(), Side::left), e);
  EXPECT_EQ(parikh(net, w), parikh(net, e));
}

TEST(Petri, Premonoidal) {
  const auto net = transport();
  const std::vector<std::size_t> c = {0, 1};
  // One boat carries d to e while the jeep moves c to d.
  const auto jeep = from_firings(net, parse_marking(net, "a+b+2c"), std::vector<std::string>{"tau1"});
  const auto boat = from_firings(net, parse_marking(net, "a+b+d"), std::vector<std::string>{"tau2"});
  const auto lf = premonoidal_tensor(net, jeep, boat, Order::left_first, c);
  const auto rf = premonoidal_tensor(net, jeep, boat, Order::right_first, c);
  validate(net, lf);
  validate(net, rf);
  EXPECT_NE(lf.steps, rf.steps);
  EXPECT_EQ(lf.start, rf.start);
  EXPECT_EQ(lf.end, rf.end);
  EXPECT_EQ(parikh(net, lf), parikh(net, rf));
  EXPECT_EQ(format_marking(net, lf.start), "a+b+2c+d");
  EXPECT_EQ(format_marking(net, lf.end), "a+b+2d+e");
  // An idle second factor is a whisker.
  const auto idle = identity_exec(parse_marking(net, "a+b"));
  EXPECT_EQ(premonoidal_tensor(net, jeep, idle, Order::left_first, c).steps.size(), 1u);
}

TEST(Petri, IntGMorphisms) {
  const auto net = transport();
  const std::vector<std::size_t> c = {0, 1};
  const std::size_t b = 1;
  const auto idle = identity_exec(parse_marking(net, "2b"));
  const auto id = int_g_morphism(net, c, {b, b}, Permutation::identity(2), idle);
  const auto swap = int_g_morphism(net, c, {b, b}, Permutation::from_one_based({2, 1}), idle);
  EXPECT_NE(id, swap);
  EXPECT_EQ(id.exec, swap.exec);
  EXPECT_THROW(int_g_morphism(net, c, {b}, Permutation::identity(1), idle), mismatch_error);
  EXPECT_EQ(compose_int_g(swap, swap), id);
}
