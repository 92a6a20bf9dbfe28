#include "arcforge/error.hpp"

namespace arcforge {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::NotADivisor: return "NotADivisor";
    case Errc::BadParameters: return "BadParameters";
    case Errc::BadElement: return "BadElement";
    case Errc::TooLarge: return "TooLarge";
    case Errc::SamePoint: return "SamePoint";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NotOnCurve: return "NotOnCurve";
    case Errc::SingularPoint: return "SingularPoint";
    case Errc::NotIncident: return "NotIncident";
    case Errc::NoPivot: return "NoPivot";
    case Errc::NoPointsFound: return "NoPointsFound";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::NotAnArc: return "NotAnArc";
    case Errc::WrongD: return "WrongD";
    case Errc::OddDegreeField: return "OddDegreeField";
    case Errc::PointOnArc: return "PointOnArc";
    case Errc::UnsupportedFamily: return "UnsupportedFamily";
    case Errc::ConcurrentLines: return "ConcurrentLines";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::DuplicatePoint: return "DuplicatePoint";
    case Errc::ParseError: return "ParseError";
    case Errc::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace arcforge
