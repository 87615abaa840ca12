#pragma once

#include <stdexcept>
#include <string>

namespace smallgon {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Angle sequence violates positivity, range or the pi/2 sum.
class MalformedSequence : public Error {
 public:
  using Error::Error;
};

/// A vertex lies inside the convex hull of the others.
class NotConvexPosition : public Error {
 public:
  using Error::Error;
};

/// Diameter exceeds one beyond tolerance.
class NotSmall : public Error {
 public:
  using Error::Error;
};

/// No gamma closes the thin polygon for the requested alpha.
class InfeasibleAlpha : public Error {
 public:
  using Error::Error;
};

class MaximizerFailed : public Error {
 public:
  using Error::Error;
};

/// The best sample sits on an endpoint of the search interval.
class NoInteriorMax : public MaximizerFailed {
 public:
  using MaximizerFailed::MaximizerFailed;
};

class NewtonFailed : public Error {
 public:
  using Error::Error;
};

/// A polygon document could not be read or is structurally invalid.
class DocumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace smallgon
