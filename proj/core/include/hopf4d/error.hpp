#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopf4d {

enum class Errc {
  // geometry
  NotOnSphere,
  BadSampleCount,
  InvalidArgument,
  // projection
  AtProjectionCenter,
  SingularDenominator,
  PassesThroughCenter,
  // surfaces
  DegenerateTorus,
  BadCount,
  DisconnectedArcs,
  // arrangements
  UnknownKind,
  BadPhaseCount,
  RadiusTooLarge,
  // analysis
  CollinearInput,
  CurvesTooClose,
  DimensionMismatch,
  DegenerateInput,
  LinkingUnresolved,
  // scene io
  ParseError,
  UnknownVersion,
  InvalidScene,
  EmptySelection,
  IoError,
};

std::string_view to_string(Errc code) noexcept;

/// True for errors caused by a mathematically invalid configuration (a
/// singular projection, a degenerate torus, ...) rather than malformed input.
bool is_math_domain(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }
  /// The message without the leading error name.
  [[nodiscard]] const std::string& message() const noexcept { return message_; }

 private:
  Errc code_;
  std::string message_;
};

}  // namespace hopf4d
