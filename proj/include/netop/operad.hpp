#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "netop/network.hpp"
#include "netop/permutation.hpp"

namespace netop {

// An operation (sigma, g) in O_F(n_1, ..., n_k; n) with n = n_1 + ... + n_k.
class OperadOperation {
 public:
  OperadOperation(std::vector<std::size_t> profile, Permutation sigma, Network g);

  const std::vector<std::size_t>& profile() const { return profile_; }
  std::size_t target() const { return sigma_.size(); }
  std::size_t slots() const { return profile_.size(); }
  const Permutation& sigma() const { return sigma_; }
  const Network& g() const { return g_; }
  const ModelSpec& model() const { return g_.model(); }

  friend bool operator==(const OperadOperation&, const OperadOperation&) = default;

 private:
  std::vector<std::size_t> profile_;
  Permutation sigma_;
  Network g_;
};

OperadOperation make_operation(std::vector<std::size_t> profile, const Permutation& sigma,
                               const Network& g);
OperadOperation identity_operation(const ModelSpec& model, std::size_t n);

// f o (a_1, ..., a_k) = (sigma (tau_1 + ... + tau_k), g u sigma(h_1 + ... + h_k)).
OperadOperation compose_operad(const OperadOperation& f, const std::vector<OperadOperation>& args);
// Slot i of the result is slot tau(i) of f; sigma is composed with the induced
// block permutation so that acting on reordered arguments gives the same result.
OperadOperation right_act(const OperadOperation& f, const Permutation& tau);

// Mapping every g through a monoid hom gives the operad morphism induced by a
// morphism of Gamma models.
OperadOperation map_operation(const MonoidHom& h, const OperadOperation& f);

struct LawReport {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
  void fail(std::string witness);
};

enum class OperadFault {
  none,
  skip_action,  // compose without acting on the arguments' networks
};

LawReport check_operad_laws(const ModelSpec& model, std::size_t bound, std::size_t cases,
                            std::uint64_t seed, OperadFault fault = OperadFault::none);

std::string to_string(const OperadOperation& f);

}  // namespace netop
