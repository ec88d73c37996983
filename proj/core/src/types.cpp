#include "hopf4d/types.hpp"

#include <string>

#include "hopf4d/error.hpp"

namespace hopf4d {

double reduce_angle(double radians) noexcept {
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative value can round back up to exactly 2pi
  if (r >= kTwoPi) r = 0.0;
  return r;
}

BaseAngles BaseAngles::make(double phi, double psi) {
  if (!std::isfinite(phi) || !std::isfinite(psi)) {
    throw Error(Errc::InvalidArgument, "base angles must be finite");
  }
  if (psi < 0.0 || psi > kPi) {
    throw Error(Errc::InvalidArgument, "psi must lie in [0, pi], got " + std::to_string(psi));
  }
  return {reduce_angle(phi), psi};
}

FiberParams FiberParams::make(double phi, double psi, double beta) {
  if (!std::isfinite(beta)) throw Error(Errc::InvalidArgument, "beta must be finite");
  return {BaseAngles::make(phi, psi), reduce_angle(beta)};
}

}  // namespace hopf4d
