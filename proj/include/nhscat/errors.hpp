#pragma once

#include <stdexcept>
#include <string>

namespace nhscat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Energy or Bloch angle outside the open lattice band.
class BandError : public Error {
 public:
  using Error::Error;
};

/// Site window too small for the requested layout, or operator shapes differ.
class WindowError : public Error {
 public:
  using Error::Error;
};

/// A coupling reached |g| >= 1, where the diagonal metric stops being positive.
class PositivityError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an operation (bad gap, too few sites, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The matching system is numerically singular at this angle.
class ResonanceError : public Error {
 public:
  using Error::Error;
};

/// A closed-form denominator vanishes at this angle; use the numeric solve.
class ResonantAngleError : public Error {
 public:
  using Error::Error;
};

}  // namespace nhscat
