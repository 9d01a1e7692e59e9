#include "netop/monoid.hpp"

#include <algorithm>
#include <limits>

#include "netop/error.hpp"

namespace netop {

MonoidElement unit(const MonoidSpec&) { return 0; }

bool in_carrier(const MonoidSpec& spec, MonoidElement a) {
  switch (spec.kind) {
    case MonoidKind::boolean_or:
      return a <= 1;
    case MonoidKind::trunc_add:
      return a <= spec.k;
    default:
      return true;
  }
}

void check_element(const MonoidSpec& spec, MonoidElement a) {
  if (!in_carrier(spec, a)) {
    throw domain_error("value " + std::to_string(a) + " is not in " + to_string(spec));
  }
}

MonoidElement mul(const MonoidSpec& spec, MonoidElement a, MonoidElement b) {
  check_element(spec, a);
  check_element(spec, b);
  switch (spec.kind) {
    case MonoidKind::boolean_or:
      return a | b;
    case MonoidKind::nat_max:
      return std::max(a, b);
    case MonoidKind::trunc_add:
      return a > spec.k - b ? spec.k : a + b;
    case MonoidKind::nat_add:
    case MonoidKind::free_one:
      if (a > std::numeric_limits<MonoidElement>::max() - b) {
        throw overflow_error("monoid product overflows in " + to_string(spec));
      }
      return a + b;
  }
  return 0;
}

bool is_commutative(const MonoidSpec&) { return true; }

bool is_finite(const MonoidSpec& spec) {
  return spec.kind == MonoidKind::boolean_or || spec.kind == MonoidKind::trunc_add;
}

std::uint64_t carrier_size(const MonoidSpec& spec) {
  switch (spec.kind) {
    case MonoidKind::boolean_or:
      return 2;
    case MonoidKind::trunc_add:
      return spec.k + 1;
    default:
      throw domain_error(to_string(spec) + " has an infinite carrier");
  }
}

std::vector<MonoidElement> sample_elements(const MonoidSpec& spec, std::uint64_t bound) {
  std::uint64_t top = bound;
  if (spec.kind == MonoidKind::boolean_or) top = 1;
  if (spec.kind == MonoidKind::trunc_add) top = spec.k;
  std::vector<MonoidElement> out;
  for (std::uint64_t v = 0; v <= top; ++v) out.push_back(v);
  return out;
}

GraphicCheck is_graphic(const MonoidSpec& spec, std::uint64_t bound) {
  auto values = sample_elements(spec, bound);
  std::rotate(values.begin(), values.begin() + 1, values.end());
  for (auto a : values) {
    for (auto b : values) {
      const auto ab = mul(spec, a, b);
      if (mul(spec, ab, a) != ab) return {false, std::make_pair(a, b)};
    }
  }
  return {};
}

std::string to_string(const MonoidSpec& spec) {
  switch (spec.kind) {
    case MonoidKind::boolean_or:
      return "bool";
    case MonoidKind::nat_add:
      return "nat-add";
    case MonoidKind::nat_max:
      return "nat-max";
    case MonoidKind::trunc_add:
      return "trunc-add:" + std::to_string(spec.k);
    case MonoidKind::free_one:
      return "free-one";
  }
  return "?";
}

std::string element_to_string(const MonoidSpec& spec, MonoidElement a) {
  if (spec.kind == MonoidKind::boolean_or) return a ? "T" : "F";
  return std::to_string(a);
}

void validate(const MonoidHom& h) {
  auto expect = [&](const MonoidSpec& src, const MonoidSpec& tgt) {
    if (!(h.source == src) || !(h.target == tgt)) {
      throw domain_error("hom rule does not fit " + to_string(h.source) + " -> " +
                         to_string(h.target));
    }
  };
  switch (h.rule) {
    case HomRule::identity:
      expect(h.source, h.source);
      if (!(h.target == h.source)) throw domain_error("identity hom needs equal carriers");
      break;
    case HomRule::cutoff:
      expect(MonoidSpec::nat_add(), MonoidSpec::trunc_add(h.target.k));
      break;
    case HomRule::support:
      expect(MonoidSpec::nat_add(), MonoidSpec::boolean());
      break;
    case HomRule::bool_to_trunc:
      expect(MonoidSpec::boolean(), MonoidSpec::trunc_add(1));
      break;
    case HomRule::trunc_to_bool:
      expect(MonoidSpec::trunc_add(1), MonoidSpec::boolean());
      break;
  }
}

MonoidElement hom_apply(const MonoidHom& h, MonoidElement a) {
  validate(h);
  check_element(h.source, a);
  switch (h.rule) {
    case HomRule::identity:
      return a;
    case HomRule::cutoff:
      return std::min(a, h.target.k);
    case HomRule::support:
      return a == 0 ? 0 : 1;
    case HomRule::bool_to_trunc:
    case HomRule::trunc_to_bool:
      return a;
  }
  return a;
}

std::string to_string(const MonoidHom& h) {
  switch (h.rule) {
    case HomRule::identity:
      return "id(" + to_string(h.source) + ")";
    case HomRule::cutoff:
      return "cutoff:" + std::to_string(h.target.k);
    case HomRule::support:
      return "support";
    case HomRule::bool_to_trunc:
      return "bool->trunc-add:1";
    case HomRule::trunc_to_bool:
      return "trunc-add:1->bool";
  }
  return "?";
}

std::vector<MonoidHom> registered_homs() {
  std::vector<MonoidHom> out;
  for (const auto& spec : {MonoidSpec::boolean(), MonoidSpec::nat_add(), MonoidSpec::nat_max(),
                           MonoidSpec::trunc_add(2), MonoidSpec::free_one()}) {
    out.push_back(MonoidHom::identity(spec));
  }
  for (std::uint64_t k = 0; k <= 3; ++k) out.push_back(MonoidHom::cutoff(k));
  out.push_back(MonoidHom::support());
  out.push_back(MonoidHom::bool_to_trunc());
  out.push_back(MonoidHom::trunc_to_bool());
  return out;
}

}  // namespace netop
