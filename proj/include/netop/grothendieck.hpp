#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "netop/network.hpp"
#include "netop/permutation.hpp"

namespace netop {

// An object of the total category: a colored word (all zeros when one-colored).
struct TotalObject {
  ColorWord word;

  static TotalObject of_arity(std::size_t n) { return {uncolored(n)}; }
  std::size_t arity() const { return word.size(); }
  friend bool operator==(const TotalObject&, const TotalObject&) = default;
};

TotalObject tensor_objects(const TotalObject& x, const TotalObject& y);

// A morphism (sigma, g): source -> target with g in F(target).
struct TotalMorphism {
  TotalObject source;
  TotalObject target;
  Permutation sigma;
  Network g;

  friend bool operator==(const TotalMorphism&, const TotalMorphism&) = default;
};

// Checks that sigma carries the source word onto the target word and that g
// lives over the target.
TotalMorphism make_total(const TotalObject& source, const TotalObject& target,
                         const Permutation& sigma, const Network& g);
// Target word is read off from sigma.
TotalMorphism make_total(const TotalObject& source, const Permutation& sigma, const Network& g);

TotalMorphism identity_total(const ModelSpec& model, const TotalObject& x);
// f2 after f1: (sigma, g) o (tau, h) = (sigma tau, g u sigma(h)).
TotalMorphism compose_total(const TotalMorphism& f2, const TotalMorphism& f1);
TotalMorphism tensor_total(const TotalMorphism& f, const TotalMorphism& g);
TotalMorphism braiding_total(const ModelSpec& model, const TotalObject& x, const TotalObject& y);

struct HomCount {
  std::uint64_t fibre = 0;
  std::uint64_t permutations = 0;
  std::uint64_t total = 0;
};

// |F(n)|; throws domain_error for infinite fibres and overflow_error past 2^64.
std::uint64_t fibre_size(const ModelSpec& model, std::size_t n);
// Endomorphisms of n: F(n) x S_n.
HomCount decompose_total(const ModelSpec& model, std::size_t n);
// Every element of F(n) for finite one-colored fibres, capped at `limit`.
std::vector<Network> enumerate_fibre(const ModelSpec& model, std::size_t n,
                                     std::size_t limit = 1u << 20);
std::vector<Permutation> all_permutations(std::size_t n);
std::vector<TotalMorphism> enumerate_endomorphisms(const ModelSpec& model, std::size_t n);

}  // namespace netop
