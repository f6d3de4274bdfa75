#pragma once

#include <stdexcept>
#include <string>

namespace fusioncox {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: bad file contents, dimension mismatches, rings that do
// not match, unknown builtin specs. Distinct from a *verification* failure.
class StructuralError : public Error {
public:
  using Error::Error;
};

// A mathematical condition that the input was required to satisfy does not
// hold (geometric Cartan conditions, symmetry of the unfolded Cartan, ...).
class VerificationError : public Error {
public:
  using Error::Error;
};

// An iteration failed to converge or a floating-point answer cannot be
// trusted at the requested tolerance.
class NumericalError : public Error {
public:
  using Error::Error;
};

// 64-bit integer arithmetic left the representable range. Exact results
// are never silently wrong: they either fit or this is thrown.
class OverflowError : public Error {
public:
  using Error::Error;
};

}  // namespace fusioncox
