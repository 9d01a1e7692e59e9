#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "netop/permutation.hpp"

namespace netop {

// A multiset over the species of a net, stored densely.
class Marking {
 public:
  Marking() = default;
  explicit Marking(std::size_t species) : counts_(species, 0) {}
  explicit Marking(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {}

  std::size_t size() const { return counts_.size(); }
  std::uint64_t operator[](std::size_t s) const { return counts_[s]; }
  std::uint64_t& operator[](std::size_t s) { return counts_[s]; }
  const std::vector<std::uint64_t>& counts() const { return counts_; }
  bool is_zero() const;

  friend auto operator<=>(const Marking&, const Marking&) = default;

 private:
  std::vector<std::uint64_t> counts_;
};

// Overflow and negative results throw.
Marking operator+(const Marking& a, const Marking& b);
Marking operator-(const Marking& a, const Marking& b);
// Componentwise order.
bool leq(const Marking& a, const Marking& b);

struct Transition {
  std::string name;
  Marking source;
  Marking target;
};

class PetriNet {
 public:
  PetriNet(std::vector<std::string> species, std::vector<Transition> transitions);

  const std::vector<std::string>& species() const { return species_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  std::size_t species_count() const { return species_.size(); }
  std::size_t transition_count() const { return transitions_.size(); }
  std::size_t species_index(const std::string& name) const;
  std::size_t transition_index(const std::string& name) const;
  const Transition& transition(const std::string& name) const {
    return transitions_[transition_index(name)];
  }

  Marking zero() const { return Marking(species_.size()); }
  PetriNet with_transition(Transition t) const;

 private:
  std::vector<std::string> species_;
  std::vector<Transition> transitions_;
};

// One transition per line, `name: a + 2c -> a + 2d`, with `0` for the empty
// multiset and `#` comments. Optional header lines `species: a, b, c` and
// `catalysts: a, b`; declared catalysts must be catalysts. Species are ordered
// by the species line, else by first appearance.
struct ParsedNet {
  PetriNet net;
  std::vector<std::size_t> declared_catalysts;
};

ParsedNet parse_petri(const std::string& text);
PetriNet load_petri(const std::string& path);
std::string format_petri(const PetriNet& net);

// Parses "2a + b" or "2a+b"; formats as "2a+b", and "0" for the empty marking.
Marking parse_marking(const PetriNet& net, const std::string& text);
std::string format_marking(const PetriNet& net, const Marking& m);

std::vector<std::size_t> enabled(const PetriNet& net, const Marking& m);
bool is_enabled(const PetriNet& net, const Marking& m, std::size_t t);
// Throws not_enabled_error.
Marking fire(const PetriNet& net, const Marking& m, std::size_t t);

inline constexpr std::size_t default_node_cap = 100000;

// Markings within `depth` firings of m, sorted. Throws overflow_error past `cap`.
std::vector<Marking> reachable(const PetriNet& net, const Marking& m, std::size_t depth,
                               std::size_t cap = default_node_cap);

struct ReachabilityGraph {
  std::vector<Marking> nodes;  // breadth-first discovery order; nodes[0] is the start
  struct Arc {
    std::size_t from;
    std::size_t transition;
    std::size_t to;
  };
  std::vector<Arc> arcs;
};

ReachabilityGraph reachability_graph(const PetriNet& net, const Marking& m, std::size_t depth,
                                     std::size_t cap = default_node_cap);

// Species with equal source and target coefficient in every transition.
std::vector<std::size_t> catalysts(const PetriNet& net);
void check_catalysts(const PetriNet& net, const std::vector<std::size_t>& c);

// The restriction of a marking to a subset C of the catalysts.
struct CatalystGrade {
  std::vector<std::size_t> species;  // sorted
  std::vector<std::uint64_t> counts;

  friend bool operator==(const CatalystGrade&, const CatalystGrade&) = default;
};

CatalystGrade grade(const PetriNet& net, const std::vector<std::size_t>& c, const Marking& m);
CatalystGrade operator+(const CatalystGrade& a, const CatalystGrade& b);
// The marking concentrated on the grade's species.
Marking grade_marking(const PetriNet& net, const CatalystGrade& g);

struct Step {
  std::size_t transition = 0;
  Marking context;  // tokens present but not consumed

  friend bool operator==(const Step&, const Step&) = default;
};

// A representative of a morphism of FP: firings in order, each with its idle
// context. Equality is equality of step sequences.
struct Execution {
  Marking start;
  std::vector<Step> steps;
  Marking end;

  friend bool operator==(const Execution&, const Execution&) = default;
};

Execution identity_exec(const Marking& m);
Execution from_firings(const PetriNet& net, const Marking& start,
                       const std::vector<std::size_t>& transitions);
Execution from_firings(const PetriNet& net, const Marking& start,
                       const std::vector<std::string>& transitions);
// Recomputes every intermediate marking; throws when a step does not match.
void validate(const PetriNet& net, const Execution& e);
std::vector<Marking> trace(const PetriNet& net, const Execution& e);

// e2 after e1.
Execution compose_exec(const Execution& e2, const Execution& e1);
// Steps of e with contexts widened by start(e'), then steps of e' widened by end(e).
Execution tensor_exec(const Execution& e, const Execution& e2);

enum class Side { left, right };
enum class Order { left_first, right_first };

// e + 1_extra; markings commute, so the side only records which factor is idle.
Execution whisker(const Execution& e, const Marking& extra, Side side);
// e: i + a -> i + b and e2: i + a2 -> i + b2 sharing the grade i over c.
// right_first is (e + 1_b2) o (1_a + e2); left_first is (1_b + e2) o (e + 1_a2).
Execution premonoidal_tensor(const PetriNet& net, const Execution& e, const Execution& e2,
                             Order order, const std::vector<std::size_t>& c);

// Number of firings of each transition.
std::vector<std::uint64_t> parikh(const PetriNet& net, const Execution& e);

// A morphism of the Grothendieck construction on the Petri network model: a
// permutation of individual catalyst tokens paired with an execution.
struct IntGMorphism {
  std::vector<std::size_t> catalyst_set;
  std::vector<std::size_t> source_word;  // species indices, each in catalyst_set
  std::vector<std::size_t> target_word;
  Permutation sigma;
  Execution exec;

  friend bool operator==(const IntGMorphism&, const IntGMorphism&) = default;
};

// Checks that the execution starts in grade p(source_word), the sum of the word.
IntGMorphism int_g_morphism(const PetriNet& net, const std::vector<std::size_t>& c,
                            const std::vector<std::size_t>& source_word, const Permutation& sigma,
                            const Execution& e);
IntGMorphism compose_int_g(const IntGMorphism& f2, const IntGMorphism& f1);
IntGMorphism tensor_int_g(const IntGMorphism& f, const IntGMorphism& g);

std::string to_string(const PetriNet& net, const Execution& e);
std::string net_to_dot(const PetriNet& net);
std::string reachability_to_dot(const PetriNet& net, const ReachabilityGraph& g);

}  // namespace netop
