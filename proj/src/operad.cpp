#include "netop/operad.hpp"

#include <numeric>

#include "netop/error.hpp"

namespace netop {

OperadOperation::OperadOperation(std::vector<std::size_t> profile, Permutation sigma, Network g)
    : profile_(std::move(profile)), sigma_(std::move(sigma)), g_(std::move(g)) {
  const std::size_t total = std::accumulate(profile_.begin(), profile_.end(), std::size_t{0});
  if (total != sigma_.size() || sigma_.size() != g_.arity()) {
    throw arity_error("operation profile sums to " + std::to_string(total) + " but sigma has " +
                      std::to_string(sigma_.size()) + " points and g has arity " +
                      std::to_string(g_.arity()));
  }
  if (!g_.model().is_one_colored()) throw mismatch_error("operations need a one-colored model");
}

OperadOperation make_operation(std::vector<std::size_t> profile, const Permutation& sigma,
                               const Network& g) {
  return OperadOperation(std::move(profile), sigma, g);
}

OperadOperation identity_operation(const ModelSpec& model, std::size_t n) {
  return OperadOperation({n}, Permutation::identity(n), empty(model, n));
}

OperadOperation compose_operad(const OperadOperation& f, const std::vector<OperadOperation>& args) {
  if (args.size() != f.slots()) {
    throw arity_error("compose_operad: " + std::to_string(f.slots()) + " slots, " +
                      std::to_string(args.size()) + " arguments");
  }
  std::vector<std::size_t> profile;
  std::vector<Permutation> taus;
  Network h = empty(f.model(), 0);
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].target() != f.profile()[i]) {
      throw arity_error("compose_operad: slot " + std::to_string(i + 1) + " expects arity " +
                        std::to_string(f.profile()[i]) + ", argument has " +
                        std::to_string(args[i].target()));
    }
    profile.insert(profile.end(), args[i].profile().begin(), args[i].profile().end());
    taus.push_back(args[i].sigma());
    h = disjoint_union(h, args[i].g());
  }
  return OperadOperation(std::move(profile), compose(f.sigma(), block_sum(taus)),
                         overlay(f.g(), act(f.sigma(), h)));
}

OperadOperation right_act(const OperadOperation& f, const Permutation& tau) {
  if (tau.size() != f.slots()) {
    throw arity_error("right_act: permutation on " + std::to_string(tau.size()) + " slots, " +
                      "operation has " + std::to_string(f.slots()));
  }
  std::vector<std::size_t> profile(f.slots());
  for (std::size_t i = 0; i < profile.size(); ++i) profile[i] = f.profile()[tau(i)];
  return OperadOperation(std::move(profile), compose(f.sigma(), expand_blocks(tau, f.profile())),
                         f.g());
}

OperadOperation map_operation(const MonoidHom& h, const OperadOperation& f) {
  return OperadOperation(f.profile(), f.sigma(), map_labels(h, f.g()));
}

void LawReport::fail(std::string witness) {
  if (failures.size() < 16) failures.push_back(std::move(witness));
}

std::string to_string(const OperadOperation& f) {
  std::string s = "(profile [";
  for (std::size_t i = 0; i < f.profile().size(); ++i) {
    s += (i ? "," : "") + std::to_string(f.profile()[i]);
  }
  return s + "], sigma " + f.sigma().to_string() + ", g " + to_string(f.g()) + ")";
}

}  // namespace netop
