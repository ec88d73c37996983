#include "hopf4d/error.hpp"

namespace hopf4d {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotOnSphere: return "NotOnSphere";
    case Errc::BadSampleCount: return "BadSampleCount";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::AtProjectionCenter: return "AtProjectionCenter";
    case Errc::SingularDenominator: return "SingularDenominator";
    case Errc::PassesThroughCenter: return "PassesThroughCenter";
    case Errc::DegenerateTorus: return "DegenerateTorus";
    case Errc::BadCount: return "BadCount";
    case Errc::DisconnectedArcs: return "DisconnectedArcs";
    case Errc::UnknownKind: return "UnknownKind";
    case Errc::BadPhaseCount: return "BadPhaseCount";
    case Errc::RadiusTooLarge: return "RadiusTooLarge";
    case Errc::CollinearInput: return "CollinearInput";
    case Errc::CurvesTooClose: return "CurvesTooClose";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DegenerateInput: return "DegenerateInput";
    case Errc::LinkingUnresolved: return "LinkingUnresolved";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownVersion: return "UnknownVersion";
    case Errc::InvalidScene: return "InvalidScene";
    case Errc::EmptySelection: return "EmptySelection";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

bool is_math_domain(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument:
    case Errc::UnknownKind:
    case Errc::ParseError:
    case Errc::UnknownVersion:
    case Errc::InvalidScene:
    case Errc::EmptySelection:
    case Errc::IoError:
      return false;
    default:
      return true;
  }
}

}  // namespace hopf4d
