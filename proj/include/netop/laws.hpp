#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "netop/green.hpp"
#include "netop/monoid.hpp"
#include "netop/network.hpp"
#include "netop/operad.hpp"
#include "netop/random.hpp"

namespace netop {

// The twelve network-model equations plus the disjoint-edge commutation, on
// random networks with arities up to max_n.
LawReport check_model_laws(const ModelSpec& model, std::size_t cases, std::uint64_t seed,
                           std::size_t max_n = 6);
// map_labels against overlay, disjoint union and the action.
LawReport check_hom_laws(const MonoidHom& h, std::size_t cases, std::uint64_t seed,
                         std::size_t max_n = 6);
// Gamma over the Boolean monoid against simple graphs: exhaustive up to
// exhaustive_n vertices, sampled up to max_n.
LawReport check_gamma_bool_iso(std::size_t exhaustive_n, std::size_t max_n, std::size_t samples,
                               std::uint64_t seed);
LawReport check_total_laws(const ModelSpec& model, std::size_t cases, std::uint64_t seed,
                           std::size_t max_n = 6);
LawReport check_braiding(const ModelSpec& model, std::size_t max_total);

// Algebra laws for the canonical and attributed actions, and forgetting
// attributes as a homomorphism.
LawReport check_algebra_laws(const ModelSpec& model, std::size_t bound, std::size_t cases,
                             std::uint64_t seed);
LawReport check_filter_laws(std::size_t cases, std::uint64_t seed);
// Representatives of one element of free(bool,gmon) act identically; degrees stay bounded.
LawReport check_degree_bounded(std::size_t cases, std::uint64_t seed);

// A random word equal to w in the product over variety v, reached by swapping
// commuting neighbours, splitting and merging letters, and (for gmon)
// inserting repeats.
GreenWord random_shuffle(const GreenWord& w, Variety v, std::size_t moves, Rng& rng);

LawReport check_normal_form_laws(Variety v, const MonoidSpec& m, std::size_t n, std::size_t cases,
                                 std::uint64_t seed);
LawReport check_commutation(std::size_t n, std::size_t cases, std::uint64_t seed);
LawReport check_graphic_identity(std::size_t max_n, std::size_t cases, std::uint64_t seed);
LawReport check_kneser_functoriality(std::size_t max_n, std::size_t cases, std::uint64_t seed);

LawReport check_catalyst_conservation(std::size_t cases, std::uint64_t seed);
LawReport check_execution_laws(std::size_t cases, std::uint64_t seed);

// Models whose law suites the library runs.
std::vector<ModelSpec> registered_models();
std::vector<ModelSpec> free_models();

enum class Suite { models, operad, green, petri, all };

Suite parse_suite(const std::string& name);
std::vector<LawReport> run_suite(Suite suite, std::size_t cases, std::uint64_t seed,
                                 OperadFault fault = OperadFault::none);

}  // namespace netop
