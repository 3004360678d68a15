#pragma once

#include <stdexcept>
#include <string>

namespace monomarkov {

/// Argument outside [-1, 1] (beyond the 1e-12 slack).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iteration failed to converge or a division left a large remainder.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructed object failed a certificate that holds by construction.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A theoretical value fell outside an oracle bracket.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kDomainSlack = 1e-12;

inline void require_unit_interval(double x, const char* what) {
  if (!(x >= -1.0 - kDomainSlack && x <= 1.0 + kDomainSlack)) {
    throw DomainError(std::string(what) + ": argument " + std::to_string(x) +
                      " outside [-1, 1]");
  }
}

}  // namespace monomarkov
