#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "netop/green.hpp"
#include "netop/network.hpp"
#include "netop/operad.hpp"

namespace netop {

using Point = std::vector<double>;
// A vertex attribute: a point of Euclidean space or an opaque token.
using Attribute = std::variant<Point, std::string>;

std::string to_string(const Attribute& a);

struct AttributedNetwork {
  Network g;
  std::vector<Attribute> x;

  AttributedNetwork(Network g, std::vector<Attribute> x);
  friend bool operator==(const AttributedNetwork&, const AttributedNetwork&) = default;
};

// True when d(a, b) <= limit. Integer coordinates are compared exactly through
// squared distances; otherwise with an absolute tolerance of 1e-9.
bool within_distance(const Attribute& a, const Attribute& b, double limit);
double distance(const Attribute& a, const Attribute& b);

class EdgePredicate {
 public:
  using Rule = std::function<bool(const Attribute&, const Attribute&)>;

  EdgePredicate(std::string name, Rule rule) : name_(std::move(name)), rule_(std::move(rule)) {}

  static EdgePredicate always();
  static EdgePredicate max_distance(double limit);

  bool operator()(const Attribute& a, const Attribute& b) const { return rule_(a, b); }
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  Rule rule_;
};

class EdgeBound {
 public:
  using Rule = std::function<std::uint64_t(const Attribute&, const Attribute&)>;

  EdgeBound(std::string name, Rule rule) : name_(std::move(name)), rule_(std::move(rule)) {}

  static EdgeBound constant(std::uint64_t k);
  // 0 beyond far, 1 between near and far, 2 within near; needs near < far.
  static EdgeBound two_tier(double far, double near);

  std::uint64_t operator()(const Attribute& a, const Attribute& b) const { return rule_(a, b); }
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  Rule rule_;
};

// g u sigma(h_1 + ... + h_k).
Network act_canonical(const OperadOperation& f, const std::vector<Network>& args);
// Networks as above; the concatenated attribute list is permuted by sigma, so
// position sigma(i) receives the attribute of position i.
AttributedNetwork act_vertex_attr(const OperadOperation& f,
                                  const std::vector<AttributedNetwork>& args);

bool satisfies(const AttributedNetwork& a, const EdgePredicate& p);
bool satisfies(const AttributedNetwork& a, const EdgeBound& b);

// Keeps the simple-graph edges whose endpoints satisfy p.
AttributedNetwork filter_predicate(const AttributedNetwork& a, const EdgePredicate& p);
// Requires every argument to satisfy p; acts, then filters.
AttributedNetwork act_predicate(const OperadOperation& f, const std::vector<AttributedNetwork>& args,
                                const EdgePredicate& p);
// Clips each multiplicity of a multigraph-sum network by the bound of its endpoints.
AttributedNetwork filter_bound(const AttributedNetwork& a, const EdgeBound& b);
AttributedNetwork act_bound(const OperadOperation& f, const std::vector<AttributedNetwork>& args,
                            const EdgeBound& b);

// Adds the word's edges to h one at a time, in word order, keeping an edge only
// while every degree stays at most k.
Network attempt_edges(const Network& h, const GreenWord& word, std::size_t k);
// f's network must be an element of the free graphic model on the Boolean
// monoid; its normal-form word fixes the order in which edges are attempted.
Network act_degree_bounded(const OperadOperation& f, const std::vector<Network>& args,
                           std::size_t k);

}  // namespace netop
