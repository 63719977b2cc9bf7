#pragma once

#include <stdexcept>
#include <string>

namespace bbcage {

/// Bad input parameters (non-prime p, inadmissible v, wrong congruence, ...).
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Exact integer arithmetic left the 64-bit range.
class OverflowError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

/// A graph failed a girth/degree/order check it was expected to pass.
class VerificationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A construction produced something that contradicts its own certificate.
/// Always indicates a bug upstream.
class IntegrityError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Malformed text input (graph6, edge lists, design files).
class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace bbcage
