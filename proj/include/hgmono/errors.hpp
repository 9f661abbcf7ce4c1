#pragma once

#include <stdexcept>
#include <string>

namespace hgm {

// Input that cannot describe a valid problem (bad exponent list, resonance,
// malformed fraction). The CLI maps these to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotCyclotomicProduct : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class IntegerExponent : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class ResonantInput : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NonMonic : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class ContourInvalid : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class PoleAtNonpositiveInteger : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Violations of a proven integrality statement. Never expected for valid
// input, so these indicate a bug rather than bad data.
class NonIntegerC : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NonIntegerCoefficient : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NonIntegerFactorialRatio : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exact linear algebra over the zeta ring.
class NonInvertibleJet : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonRationalDeterminant : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class SingularMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class TraceMinusOne : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Numerical routines that failed to reach their tolerance.
class TailNotConverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotConverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hgm
