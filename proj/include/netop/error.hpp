#pragma once

#include <stdexcept>
#include <string>

namespace netop {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sizes or arities that do not line up (permutation sizes, profiles, fibres).
class arity_error : public error {
 public:
  using error::error;
};

// Operands built over different models, monoids or commutation graphs.
class mismatch_error : public error {
 public:
  using error::error;
};

// A value outside the carrier or domain an operation accepts.
class domain_error : public error {
 public:
  using error::error;
};

class overflow_error : public error {
 public:
  using error::error;
};

class parse_error : public error {
 public:
  using error::error;
};

class not_enabled_error : public error {
 public:
  using error::error;
};

}  // namespace netop
