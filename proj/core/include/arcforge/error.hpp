#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arcforge {

enum class Errc {
  NotPrime,
  NotIrreducible,
  DivisionByZero,
  FieldMismatch,
  NotADivisor,
  BadParameters,
  BadElement,
  TooLarge,
  SamePoint,
  ZeroVector,
  NotOnCurve,
  SingularPoint,
  NotIncident,
  NoPivot,
  NoPointsFound,
  DegreeMismatch,
  NotAnArc,
  WrongD,
  OddDegreeField,
  PointOnArc,
  UnsupportedFamily,
  ConcurrentLines,
  NotDivisible,
  DuplicatePoint,
  ParseError,
  InvariantViolation,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace arcforge
