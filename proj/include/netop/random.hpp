#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "netop/green.hpp"
#include "netop/network.hpp"
#include "netop/operad.hpp"
#include "netop/permutation.hpp"
#include "netop/petri.hpp"

namespace netop {

using Rng = std::mt19937_64;

// Uniform in [lo, hi].
std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);
bool coin(Rng& rng, double p = 0.5);

Permutation random_permutation(std::size_t n, Rng& rng);
ColorWord random_colors(const ModelSpec& model, std::size_t n, Rng& rng);
// Sparse random element of F(colors); label values stay small.
Network random_network(const ModelSpec& model, const ColorWord& colors, Rng& rng);
Network random_network(const ModelSpec& model, std::size_t n, Rng& rng);
// A random non-unit element of a monoid, at most `bound` for infinite carriers.
MonoidElement random_element(const MonoidSpec& m, Rng& rng, std::uint64_t bound = 3);
GreenWord random_word(const GreenContextPtr& ctx, std::size_t max_length, Rng& rng);
// A random split of n into k nonnegative parts.
std::vector<std::size_t> random_profile(std::size_t n, std::size_t k, Rng& rng);
OperadOperation random_operation(const ModelSpec& model, const std::vector<std::size_t>& profile,
                                 Rng& rng);
// Random enabled firings from m, stopping early when nothing is enabled.
Execution random_execution(const PetriNet& net, const Marking& m, std::size_t max_steps, Rng& rng);
Marking random_marking(const PetriNet& net, std::uint64_t max_count, Rng& rng);

// Largest arity random_network accepts for the model.
std::size_t arity_cap(const ModelSpec& model);

}  // namespace netop
