#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace netop {

enum class MonoidKind { boolean_or, nat_add, nat_max, trunc_add, free_one };

// Booleans are encoded as 0 (F) and 1 (T); every other carrier is a subset of
// the nonnegative integers. The free monoid on one generator stores the power.
using MonoidElement = std::uint64_t;

struct MonoidSpec {
  MonoidKind kind = MonoidKind::boolean_or;
  std::uint64_t k = 0;  // only meaningful for trunc_add

  static MonoidSpec boolean() { return {MonoidKind::boolean_or, 0}; }
  static MonoidSpec nat_add() { return {MonoidKind::nat_add, 0}; }
  static MonoidSpec nat_max() { return {MonoidKind::nat_max, 0}; }
  static MonoidSpec trunc_add(std::uint64_t k) { return {MonoidKind::trunc_add, k}; }
  static MonoidSpec free_one() { return {MonoidKind::free_one, 0}; }

  friend bool operator==(const MonoidSpec& a, const MonoidSpec& b) {
    return a.kind == b.kind && (a.kind != MonoidKind::trunc_add || a.k == b.k);
  }
};

MonoidElement unit(const MonoidSpec& spec);
MonoidElement mul(const MonoidSpec& spec, MonoidElement a, MonoidElement b);
bool in_carrier(const MonoidSpec& spec, MonoidElement a);
void check_element(const MonoidSpec& spec, MonoidElement a);

bool is_commutative(const MonoidSpec& spec);
bool is_finite(const MonoidSpec& spec);
// Number of elements for finite carriers.
std::uint64_t carrier_size(const MonoidSpec& spec);

// The whole carrier when finite, otherwise the values 0..bound.
std::vector<MonoidElement> sample_elements(const MonoidSpec& spec, std::uint64_t bound = 8);

struct GraphicCheck {
  bool graphic = true;
  std::optional<std::pair<MonoidElement, MonoidElement>> witness;
};

// Tests aba = ab on sample_elements(spec, bound), non-unit elements first.
GraphicCheck is_graphic(const MonoidSpec& spec, std::uint64_t bound = 8);

std::string to_string(const MonoidSpec& spec);
std::string element_to_string(const MonoidSpec& spec, MonoidElement a);

enum class HomRule {
  identity,
  cutoff,         // (N,+) -> B_k, n |-> n min k
  support,        // (N,+) -> Boolean, 0 |-> F, otherwise T
  bool_to_trunc,  // Boolean -> B_1
  trunc_to_bool,  // B_1 -> Boolean
};

struct MonoidHom {
  MonoidSpec source;
  MonoidSpec target;
  HomRule rule = HomRule::identity;

  static MonoidHom identity(const MonoidSpec& spec) { return {spec, spec, HomRule::identity}; }
  static MonoidHom cutoff(std::uint64_t k) {
    return {MonoidSpec::nat_add(), MonoidSpec::trunc_add(k), HomRule::cutoff};
  }
  static MonoidHom support() {
    return {MonoidSpec::nat_add(), MonoidSpec::boolean(), HomRule::support};
  }
  static MonoidHom bool_to_trunc() {
    return {MonoidSpec::boolean(), MonoidSpec::trunc_add(1), HomRule::bool_to_trunc};
  }
  static MonoidHom trunc_to_bool() {
    return {MonoidSpec::trunc_add(1), MonoidSpec::boolean(), HomRule::trunc_to_bool};
  }

  friend bool operator==(const MonoidHom&, const MonoidHom&) = default;
};

// Throws domain_error when the rule does not fit the declared source/target.
void validate(const MonoidHom& h);
MonoidElement hom_apply(const MonoidHom& h, MonoidElement a);
std::string to_string(const MonoidHom& h);

// Every hom the library ships, used by the law suites.
std::vector<MonoidHom> registered_homs();

}  // namespace netop
